//! Sequences of sub-partitions: the sets `W(λ)` and `V(β; (ξ, mμ))`, and the straightening
//! structure constants built from them.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::counting::{
    count_good_compositions, count_rearrangements, epsilon, SignedCountCache,
};
use crate::combinatorics::enumerate::sub_multisets;
use crate::combinatorics::partition::{Composition, Modulus, Partition, PartitionSequence};
use crate::error::{GammaError, Result};
use crate::guard::Guard;

impl PartitionSequence {
    /// `c_A = ∏ c_{δ⁽ⁱ⁾}`.
    pub fn count(&self) -> BigUint {
        self.entries().iter().map(count_rearrangements).product()
    }

    /// `c_A^(m) = ∏ c^(m)_{δ⁽ⁱ⁾}`.
    pub fn good_count(&self, m: Modulus) -> BigUint {
        self.entries()
            .iter()
            .map(|d| count_good_compositions(d, m))
            .product()
    }

    /// `ε_A = ∏ ε_{δ⁽ⁱ⁾}`.
    pub fn epsilon(&self) -> i32 {
        self.entries().iter().map(epsilon).product()
    }
}

/// `W(λ)`: sequences `(δ⁽¹⁾, …, δ⁽ʳ⁾, ξ)` with `ξ ∪ δ⁽¹⁾ ∪ ⋯ ∪ δ⁽ʳ⁾ = λ`, each `δ⁽ⁱ⁾`
/// non-empty of size divisible by `m`. The order of the `δ⁽ⁱ⁾` matters; `r = 0` gives `(λ)`.
pub fn enumerate_w(
    lambda: &Partition,
    m: Modulus,
    guard: &Guard,
) -> Result<Vec<PartitionSequence>> {
    guard.check_length("W(λ)", lambda.length())?;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    w_fill(lambda, m, &mut prefix, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

fn w_fill(
    rest: &Partition,
    m: Modulus,
    prefix: &mut Vec<Partition>,
    out: &mut Vec<PartitionSequence>,
) {
    let mut entries = prefix.clone();
    entries.push(rest.clone());
    out.push(PartitionSequence::new(entries));
    for block in sub_multisets(rest) {
        if block.is_empty() || !m.divides(block.size()) {
            continue;
        }
        let remaining = rest.difference(&block).expect("block is a sub-multiset");
        prefix.push(block);
        w_fill(&remaining, m, prefix, out);
        prefix.pop();
    }
}

/// `W_j(λ)`: the members of `W(λ)` with exactly `j + 1` entries.
pub fn enumerate_w_j(
    lambda: &Partition,
    m: Modulus,
    j: usize,
    guard: &Guard,
) -> Result<Vec<PartitionSequence>> {
    Ok(enumerate_w(lambda, m, guard)?
        .into_iter()
        .filter(|a| a.len() == j + 1)
        .collect())
}

/// `V(β; (ξ, mμ))`: tuples `(ξ⁽¹⁾, …, ξ⁽ˢ⁾)` with `s = ℓ(β)`, `ξ⁽ⁱ⁾ ∈ 𝒫(β_i; m)`,
/// `ξ = ⋃ ξ⁽ⁱ⁾` and `mμ = ⋃ (β_i − |ξ⁽ⁱ⁾|)` with zero differences dropped.
pub fn enumerate_v(
    beta: &Composition,
    xi: &Partition,
    m_mu: &Partition,
    m: Modulus,
) -> Result<Vec<Vec<Partition>>> {
    check_scaled(m_mu, m)?;
    let mut out = Vec::new();
    if xi.size() + m_mu.size() != beta.size() {
        return Ok(out);
    }
    let mut current = Vec::with_capacity(beta.length());
    v_fill(beta.parts(), m, xi, m_mu, &mut current, &mut |tuple| {
        out.push(tuple.to_vec())
    });
    Ok(out)
}

fn check_scaled(m_mu: &Partition, m: Modulus) -> Result<()> {
    match m_mu.parts().iter().find(|&&p| !m.divides(p)) {
        Some(&part) => Err(GammaError::NotDivisible {
            part,
            modulus: m.get(),
        }),
        None => Ok(()),
    }
}

fn v_fill(
    beta: &[u32],
    m: Modulus,
    xi_rest: &Partition,
    m_mu_rest: &Partition,
    current: &mut Vec<Partition>,
    emit: &mut dyn FnMut(&[Partition]),
) {
    let Some((&b, tail)) = beta.split_first() else {
        if xi_rest.is_empty() && m_mu_rest.is_empty() {
            emit(current);
        }
        return;
    };
    for piece in sub_multisets(xi_rest) {
        let size = piece.size();
        if size > b || !m.divides(b - size) {
            continue;
        }
        let gap = Partition::row(b - size);
        let Some(m_mu_next) = m_mu_rest.difference(&gap) else {
            continue;
        };
        let xi_next = xi_rest.difference(&piece).expect("piece is a sub-multiset");
        current.push(piece);
        v_fill(tail, m, &xi_next, &m_mu_next, current, emit);
        current.pop();
    }
}

/// `c^(m)_{β;(ξ,mμ)} = Σ_{A ∈ V(β;(ξ,mμ))} ε_A c_A^(m)`; zero when `V` is empty.
pub fn structure_constant(
    beta: &Composition,
    xi: &Partition,
    m_mu: &Partition,
    m: Modulus,
) -> Result<BigInt> {
    check_scaled(m_mu, m)?;
    let mut cache = SignedCountCache::new(m);
    Ok(structure_constant_cached(beta, xi, m_mu, m, &mut cache))
}

pub(crate) fn structure_constant_cached(
    beta: &Composition,
    xi: &Partition,
    m_mu: &Partition,
    m: Modulus,
    cache: &mut SignedCountCache,
) -> BigInt {
    let mut total = BigInt::zero();
    if xi.size() + m_mu.size() != beta.size() {
        return total;
    }
    let mut current = Vec::with_capacity(beta.length());
    v_fill(beta.parts(), m, xi, m_mu, &mut current, &mut |tuple| {
        let term = tuple
            .iter()
            .fold(BigInt::one(), |acc, p| acc * cache.get(p));
        total += term;
    });
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn m(k: u32) -> Modulus {
        Modulus::new(k).unwrap()
    }

    fn shown(ws: &[PartitionSequence]) -> Vec<String> {
        ws.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn w_of_3211() {
        let w = enumerate_w(&part("3,2,1,1"), m(3), &Guard::default()).unwrap();
        let mut got = shown(&w);
        got.sort();
        let mut want = vec![
            "((3,2,1,1))",
            "((3),(2,1,1))",
            "((2,1),(3,1))",
            "((3,2,1),(1))",
            "((3),(2,1),(1))",
            "((2,1),(3),(1))",
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn w_edge_cases() {
        let g = Guard::default();
        assert_eq!(
            shown(&enumerate_w(&part("3"), m(3), &g).unwrap()),
            ["((3),∅)", "((3))"]
        );
        assert_eq!(
            shown(&enumerate_w(&Partition::empty(), m(3), &g).unwrap()),
            ["(∅)"]
        );
        assert!(enumerate_w(&Partition::column(13), m(2), &g)
            .unwrap_err()
            .is_refusal());
    }

    #[test]
    fn sequence_statistics() {
        let a = PartitionSequence::new(vec![part("2,1"), part("3"), part("1")]);
        assert_eq!(a.count(), 2u32.into());
        assert_eq!(a.epsilon(), -1);
        assert_eq!(a.good_count(m(3)), 0u32.into());
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn v_sets() {
        let v = enumerate_v(&comp("4"), &part("1"), &part("3"), m(3)).unwrap();
        assert_eq!(v, vec![vec![part("1")]]);
        let v = enumerate_v(&comp("4,3,2"), &part("1,1,1"), &part("3,3"), m(3)).unwrap();
        assert_eq!(v, vec![vec![part("1"), Partition::empty(), part("1,1")]]);
        assert!(enumerate_v(&comp("4"), &part("2"), &part("3"), m(3))
            .unwrap()
            .is_empty());
        assert!(matches!(
            enumerate_v(&comp("4"), &part("1"), &part("4"), m(3)),
            Err(GammaError::NotDivisible { .. })
        ));
    }

    #[test]
    fn structure_constants() {
        assert_eq!(
            structure_constant(&comp("4,3,2"), &part("2,2,1,1"), &part("3"), m(3)).unwrap(),
            2.into()
        );
        assert_eq!(
            structure_constant(&comp("4,3,2"), &part("2,2,1,1"), &Partition::empty(), m(3))
                .unwrap(),
            0.into()
        );
        assert_eq!(
            structure_constant(&comp("2"), &part("2"), &Partition::empty(), m(3)).unwrap(),
            (-1).into()
        );
        assert_eq!(
            structure_constant(&comp("6,3"), &Partition::empty(), &part("6,3"), m(3)).unwrap(),
            1.into()
        );
        assert_eq!(
            structure_constant(&comp("2"), &part("1"), &Partition::empty(), m(3)).unwrap(),
            0.into()
        );
    }
}
