use std::fmt;

use crate::combinatorics::partition::{Modulus, PairPartition};
use crate::error::{GammaError, Result};

/// Outcome of comparing two pairs under the dominance order `⊵`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dominance {
    Equal,
    /// `a ⊳ b`.
    GreaterOrEqual,
    /// `b ⊳ a`.
    LessOrEqual,
    Incomparable,
}

impl Dominance {
    pub fn as_str(self) -> &'static str {
        match self {
            Dominance::Equal => "equal",
            Dominance::GreaterOrEqual => "greater-or-equal",
            Dominance::LessOrEqual => "less-or-equal",
            Dominance::Incomparable => "incomparable",
        }
    }
}

impl fmt::Display for Dominance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `a ⊵ b`: for every `ℓ ≥ 1`, `Σ_{i≤ℓ} λ_i ≥ Σ_{i≤ℓ} δ_i` and
/// `|λ| + Σ_{i≤ℓ} (pμ)_i ≥ |δ| + Σ_{i≤ℓ} (pξ)_i`.
fn dominates(a: &PairPartition, b: &PairPartition) -> bool {
    let rows = a
        .first()
        .length()
        .max(b.first().length())
        .max(a.second().length())
        .max(b.second().length());
    let (a_total, b_total) = (a.first().size(), b.first().size());
    (1..=rows.max(1)).all(|l| {
        a.first().prefix_sum(l) >= b.first().prefix_sum(l)
            && a_total + a.second().prefix_sum(l) >= b_total + b.second().prefix_sum(l)
    })
}

/// Compares two pairs of equal total size and modulus `p` under `⊵`.
pub fn dominance_compare(a: &PairPartition, b: &PairPartition, p: Modulus) -> Result<Dominance> {
    for side in [a, b] {
        if side.modulus() != p {
            return Err(GammaError::ModulusMismatch {
                left: side.modulus().get(),
                right: p.get(),
            });
        }
    }
    if a.size() != b.size() {
        return Err(GammaError::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    if a == b {
        return Ok(Dominance::Equal);
    }
    Ok(match (dominates(a, b), dominates(b, a)) {
        (true, false) => Dominance::GreaterOrEqual,
        (false, true) => Dominance::LessOrEqual,
        (false, false) => Dominance::Incomparable,
        (true, true) => unreachable!("dominance is antisymmetric"),
    })
}

/// `a ⊳ b`.
pub fn strictly_dominates(a: &PairPartition, b: &PairPartition) -> bool {
    a != b && a.size() == b.size() && dominates(a, b)
}
