//! Listings of partitions and pairs of partitions, in lexicographically descending order.

use crate::combinatorics::partition::{Modulus, PairPartition, Partition};
use crate::error::Result;
use crate::guard::Guard;

/// All partitions of `n`, lexicographically descending.
pub fn partitions_of(n: u32, guard: &Guard) -> Result<Vec<Partition>> {
    guard.check_size("partitions", n)?;
    Ok(partitions_unguarded(n))
}

pub(crate) fn partitions_unguarded(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// `𝒫(n; m)`: partitions `μ` with `|μ| ≤ n` and `m | n − |μ|`.
pub fn partitions_with_remainder(n: u32, m: Modulus) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0..=n / m.get())
        .flat_map(|s| partitions_unguarded(n - s * m.get()))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `𝒫²_m(n)`: all pairs `(λ | mμ)` with `|λ| + m|μ| = n`.
///
/// Ordered by the size of the second partition, then each side lexicographically descending.
pub fn pairs_of_total(n: u32, m: Modulus) -> Vec<PairPartition> {
    let mut out = Vec::new();
    for s in 0..=n / m.get() {
        let seconds: Vec<Partition> = partitions_unguarded(s)
            .into_iter()
            .map(|mu| Partition::from_sorted(mu.parts().iter().map(|p| p * m.get()).collect()))
            .collect();
        for first in partitions_unguarded(n - s * m.get()) {
            for second in &seconds {
                out.push(PairPartition::new_unchecked(
                    first.clone(),
                    second.clone(),
                    m,
                ));
            }
        }
    }
    out
}

/// Every sub-multiset of the parts of `lambda`, including `∅` and `lambda` itself.
pub(crate) fn sub_multisets(lambda: &Partition) -> Vec<Partition> {
    let mults = lambda.multiplicities();
    let mut out = Vec::new();
    let mut current = Vec::new();
    sub_fill(&mults, 0, &mut current, &mut out);
    out
}

fn sub_fill(mults: &[(u32, usize)], idx: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    let Some(&(value, count)) = mults.get(idx) else {
        out.push(Partition::from_sorted(current.clone()));
        return;
    };
    for take in (0..=count).rev() {
        let before = current.len();
        current.extend(std::iter::repeat_n(value, take));
        sub_fill(mults, idx + 1, current, out);
        current.truncate(before);
    }
}
