//! Rearrangement counts: `c_λ`, `c_λ^(m)`, `ε_λ` and the sets they count.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::combinatorics::partition::{Composition, Modulus, Partition};
use crate::error::{GammaError, Result};
use crate::guard::Guard;

/// `ε_λ = (−1)^{|λ|−ℓ(λ)}`.
pub fn epsilon(lambda: &Partition) -> i32 {
    if (lambda.size() as usize - lambda.length()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `c_λ = ℓ(λ)! / ∏ n_i!`, the number of distinct rearrangements of `λ`.
pub fn count_rearrangements(lambda: &Partition) -> BigUint {
    lambda
        .multiplicities()
        .iter()
        .fold(factorial(lambda.length()), |acc, &(_, k)| {
            acc / factorial(k)
        })
}

/// All distinct rearrangements of `λ`, lexicographically descending.
pub fn enumerate_rearrangements(lambda: &Partition, guard: &Guard) -> Result<Vec<Composition>> {
    guard.check_length("rearrangements", lambda.length())?;
    let mut mults = lambda.multiplicities();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(lambda.length());
    permute(&mut mults, &mut current, lambda.length(), &mut out);
    Ok(out)
}

fn permute(
    mults: &mut [(u32, usize)],
    current: &mut Vec<u32>,
    len: usize,
    out: &mut Vec<Composition>,
) {
    if current.len() == len {
        out.push(Composition::from_parts_unchecked(current.clone()));
        return;
    }
    for i in 0..mults.len() {
        if mults[i].1 == 0 {
            continue;
        }
        mults[i].1 -= 1;
        current.push(mults[i].0);
        permute(mults, current, len, out);
        current.pop();
        mults[i].1 += 1;
    }
}

/// `c_λ^(m)`: rearrangements of `λ` none of whose prefix sums is divisible by `m`.
///
/// Memoized over (remaining multiplicities, prefix sum mod m).
pub fn count_good_compositions(lambda: &Partition, m: Modulus) -> BigUint {
    let mults = lambda.multiplicities();
    let values: Vec<u32> = mults.iter().map(|&(v, _)| v % m.get()).collect();
    let counts: Vec<usize> = mults.iter().map(|&(_, c)| c).collect();
    let mut memo = HashMap::new();
    good_from(&values, counts, 0, m.get(), &mut memo)
}

fn good_from(
    values: &[u32],
    counts: Vec<usize>,
    residue: u32,
    m: u32,
    memo: &mut HashMap<(Vec<usize>, u32), BigUint>,
) -> BigUint {
    if counts.iter().all(|&c| c == 0) {
        return BigUint::one();
    }
    let key = (counts, residue);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut total = BigUint::default();
    for i in 0..values.len() {
        if key.0[i] == 0 {
            continue;
        }
        let next = (residue + values[i]) % m;
        if next == 0 {
            continue;
        }
        let mut rest = key.0.clone();
        rest[i] -= 1;
        total += good_from(values, rest, next, m, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// The rearrangements counted by [`count_good_compositions`], lexicographically descending.
pub fn good_compositions(
    lambda: &Partition,
    m: Modulus,
    guard: &Guard,
) -> Result<Vec<Composition>> {
    Ok(enumerate_rearrangements(lambda, guard)?
        .into_iter()
        .filter(|delta| delta.prefix_sums().all(|s| !m.divides(s)))
        .collect())
}

/// `d_λ = ε_λ c_λ^(m)`.
pub fn signed_good_count(lambda: &Partition, m: Modulus) -> BigInt {
    let c = BigInt::from(count_good_compositions(lambda, m));
    if epsilon(lambda) < 0 {
        -c
    } else {
        c
    }
}

/// `P_i`: rearrangements of `λ` with some prefix sum equal to `m·i`, for `1 ≤ i ≤ ⌊|λ|/m⌋`.
pub fn enumerate_p_i(
    lambda: &Partition,
    m: Modulus,
    i: u32,
    guard: &Guard,
) -> Result<Vec<Composition>> {
    let max = lambda.size() / m.get();
    if i == 0 || i > max {
        return Err(GammaError::IndexOutOfRange { index: i, max });
    }
    let target = m.get() * i;
    Ok(enumerate_rearrangements(lambda, guard)?
        .into_iter()
        .filter(|delta| delta.prefix_sums().any(|s| s == target))
        .collect())
}

/// Memo of `ε_λ c_λ^(m)` for a fixed modulus.
#[derive(Debug)]
pub(crate) struct SignedCountCache {
    m: Modulus,
    memo: HashMap<Partition, BigInt>,
}

impl SignedCountCache {
    pub(crate) fn new(m: Modulus) -> Self {
        SignedCountCache {
            m,
            memo: HashMap::new(),
        }
    }

    pub(crate) fn get(&mut self, lambda: &Partition) -> BigInt {
        if let Some(v) = self.memo.get(lambda) {
            return v.clone();
        }
        let v = signed_good_count(lambda, self.m);
        self.memo.insert(lambda.clone(), v.clone());
        v
    }
}
