use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::combinatorics::{Composition, Modulus, PairPartition, Partition};
use crate::error::{GammaError, Result};
use crate::ring::{straighten_direct, RingElement};

/// Trial division; `2` is rejected along with every non-prime.
pub fn is_odd_prime(p: u32) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Validates `p` as an odd prime and returns it as a modulus.
pub fn odd_prime(p: u32) -> Result<Modulus> {
    if is_odd_prime(p) {
        Modulus::new(p)
    } else {
        Err(GammaError::NotOddPrime(p))
    }
}

/// Which Green ring an expansion is read in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Signed Young permutation modules `[M(λ|pμ)]`.
    SignedYoung,
    /// Mixed powers `[K^{λ|pμ}E] = [S^λE ⊗ ⋀^{pμ}E]`.
    MixedPower,
}

/// `[M(α|β)]` or `[K^{α|β}E]` written in the basis labelled by `𝒫²_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleExpansion {
    flavor: Flavor,
    terms: RingElement,
}

impl ModuleExpansion {
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn prime(&self) -> Modulus {
        self.terms.modulus()
    }

    /// The underlying element of Γ^(p).
    pub fn element(&self) -> &RingElement {
        &self.terms
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PairPartition, &BigInt)> {
        self.terms.terms()
    }

    pub fn coefficient(&self, pair: &PairPartition) -> Result<BigInt> {
        self.terms.coefficient(pair)
    }
}

/// The coefficients are those of `h_α e_β` straightened in Γ^(p).
pub fn expand_module(
    alpha: &Composition,
    beta: &Composition,
    p: u32,
    flavor: Flavor,
) -> Result<ModuleExpansion> {
    let p = odd_prime(p)?;
    Ok(ModuleExpansion {
        flavor,
        terms: straighten_direct(alpha, beta, p),
    })
}

fn paren(p: &Partition) -> String {
    if p.is_empty() {
        "∅".to_string()
    } else {
        format!("({p})")
    }
}

fn power(symbol: &str, p: &Partition) -> Option<String> {
    match p.parts() {
        [] => None,
        [1] => Some("E".to_string()),
        [n] => Some(format!("{symbol}^{n}E")),
        _ => Some(format!("{symbol}^{{({p})}}E")),
    }
}

fn label(flavor: Flavor, pair: &PairPartition) -> String {
    match flavor {
        Flavor::SignedYoung => format!("[M({}|{})]", paren(pair.first()), paren(pair.second())),
        Flavor::MixedPower => {
            let factors: Vec<String> = [power("S", pair.first()), power("⋀", pair.second())]
                .into_iter()
                .flatten()
                .collect();
            if factors.is_empty() {
                "[k]".to_string()
            } else {
                format!("[{}]", factors.join("⊗"))
            }
        }
    }
}

/// `-[M((2)|∅)]+[M((1,1)|∅)]`, or `-[S^2E]+[S^{(1,1)}E]` for mixed powers.
impl fmt::Display for ModuleExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return f.write_str("0");
        }
        for (i, (pair, coeff)) in self.terms.terms().enumerate() {
            if coeff.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let magnitude = coeff.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            f.write_str(&label(self.flavor, pair))?;
        }
        Ok(())
    }
}

/// The distinguished pair `(type(α # (1^r)) | p·type(η))` where `β_i = pη_i + r_i`,
/// `0 ≤ r_i < p` and `r = Σ r_i`; zero `η_i` are dropped.
pub fn canonical_summand(alpha: &Composition, beta: &Composition, p: u32) -> Result<PairPartition> {
    let p = odd_prime(p)?;
    let r: u32 = beta.parts().iter().map(|b| b % p.get()).sum();
    let first = alpha.type_of().union(&Partition::column(r as usize));
    let second = Partition::from_nonneg(beta.parts().iter().map(|b| b / p.get() * p.get()));
    PairPartition::new(first, second, p)
}

/// Label `(δ|pθ)` with `M((a)|(b)) ≅ Y(δ|pθ)`: `((1^r)|p(s))` for `a = 0`, and
/// `((a,1^r)|p(s))` when `p | a + b`, where `b = sp + r`. `None` where nothing is asserted.
pub fn indecomposable_label(a: u32, b: u32, p: u32) -> Result<Option<PairPartition>> {
    let pm = odd_prime(p)?;
    if a != 0 && !(a + b).is_multiple_of(p) {
        return Ok(None);
    }
    let (s, r) = (b / p, b % p);
    let first = Partition::row(a).union(&Partition::column(r as usize));
    PairPartition::new(first, Partition::row(s * p), pm).map(Some)
}
