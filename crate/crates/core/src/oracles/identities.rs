//! Exact checks of the identities relating `d_λ`, `c_λ`, `W(λ)` and the `P_i` sets.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::enumerate::sub_multisets;
use crate::combinatorics::{
    count_rearrangements, enumerate_p_i, enumerate_w, enumerate_w_j, epsilon, partitions_of,
    BasisKey, Composition, Modulus, Partition,
};
use crate::error::Result;
use crate::guard::Guard;
use crate::oracles::recursive::expand_e_recursive_table;
use crate::ring::{expand_e, RingElement};

fn signed(value: BigUint, sign: i32) -> BigInt {
    let v = BigInt::from(value);
    if sign < 0 {
        -v
    } else {
        v
    }
}

/// `d_λ = −ε_λ Σ_{A ∈ W(λ)} (−1)^{len A} c_A`.
pub fn d_via_w(lambda: &Partition, m: Modulus, guard: &Guard) -> Result<BigInt> {
    let mut sum = BigInt::zero();
    for a in enumerate_w(lambda, m, guard)? {
        let sign = if a.len() % 2 == 0 { 1 } else { -1 };
        sum += signed(a.count(), sign);
    }
    Ok(-signed(BigUint::one(), epsilon(lambda)) * sum)
}

/// Both sides of `ε_λ c_λ = Σ_{i=0}^{b} Σ_{δ ∈ 𝒫(mi), δ∪μ=λ} ε_δ d_μ c_δ`, with `d_μ` read off
/// the recursive expansion of `e_{|μ|}`.
pub fn count_identity_sides(
    lambda: &Partition,
    m: Modulus,
    guard: &Guard,
) -> Result<(BigInt, BigInt)> {
    guard.check_length("sub-partitions", lambda.length())?;
    let lhs = signed(count_rearrangements(lambda), epsilon(lambda));
    let table = expand_e_recursive_table(lambda.size(), m);
    let mut rhs = BigInt::zero();
    for delta in sub_multisets(lambda) {
        if !m.divides(delta.size()) {
            continue;
        }
        let mu = lambda.difference(&delta).expect("delta is a sub-multiset");
        let d_mu = table[mu.size() as usize].coefficient(&BasisKey::new_unchecked(
            mu,
            Partition::empty(),
            m,
        ))?;
        rhs += signed(count_rearrangements(&delta), epsilon(&delta)) * d_mu;
    }
    Ok((lhs, rhs))
}

pub fn check_count_identity(lambda: &Partition, m: Modulus, guard: &Guard) -> Result<bool> {
    let (lhs, rhs) = count_identity_sides(lambda, m, guard)?;
    Ok(lhs == rhs)
}

/// Both sides of `Σ_{i_1<⋯<i_j} |P_{i_1} ∩ ⋯ ∩ P_{i_j}| = Σ_{A ∈ W_j(λ)} c_A`.
pub fn p_intersection_sides(
    lambda: &Partition,
    m: Modulus,
    j: usize,
    guard: &Guard,
) -> Result<(BigUint, BigUint)> {
    let b = lambda.size() / m.get();
    let sets: Vec<BTreeSet<Composition>> = (1..=b)
        .map(|i| enumerate_p_i(lambda, m, i, guard).map(|p| p.into_iter().collect()))
        .collect::<Result<_>>()?;
    let mut lhs = BigUint::zero();
    for_each_subset(sets.len(), j, &mut |indices| {
        let (first, rest) = indices.split_first().expect("j ≥ 1");
        let size = sets[*first]
            .iter()
            .filter(|c| rest.iter().all(|&k| sets[k].contains(*c)))
            .count();
        lhs += size;
    });
    let rhs = enumerate_w_j(lambda, m, j, guard)?
        .iter()
        .map(|a| a.count())
        .sum();
    Ok((lhs, rhs))
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if current.len() == k {
            f(current);
            return;
        }
        for i in start..n {
            current.push(i);
            go(i + 1, n, k, current, f);
            current.pop();
        }
    }
    if k == 0 || k > n {
        return;
    }
    go(0, n, k, &mut Vec::with_capacity(k), f);
}

/// The `P_i`-intersection identity for every `1 ≤ j ≤ ⌊|λ|/m⌋`.
pub fn check_p_intersection(lambda: &Partition, m: Modulus, guard: &Guard) -> Result<bool> {
    for j in 1..=(lambda.size() / m.get()) as usize {
        let (lhs, rhs) = p_intersection_sides(lambda, m, j, guard)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Σ_{i=0}^{d} (−1)^i h_i e_{d−i}`, which must vanish in Γ^(m) whenever `m ∤ d`.
pub fn relation_residue(d: u32, m: Modulus) -> RingElement {
    let mut acc = RingElement::zero(m);
    for i in 0..=d {
        let term = &RingElement::h(i, m) * &expand_e(d - i, m);
        acc = if i % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

pub fn check_relation(d: u32, m: Modulus) -> bool {
    relation_residue(d, m).is_zero()
}

/// With `m = n + 1`, `e_n` must be the classical `Σ_{λ ⊢ n} ε_λ c_λ h_λ`.
pub fn check_classical_limit(n: u32, guard: &Guard) -> Result<bool> {
    let m = Modulus::new(n + 1)?;
    let mut expected = RingElement::zero(m);
    for lambda in partitions_of(n, guard)? {
        let c = signed(count_rearrangements(&lambda), epsilon(&lambda));
        expected.add_term(BasisKey::new_unchecked(lambda, Partition::empty(), m), c);
    }
    Ok(expand_e(n, m) == expected)
}
