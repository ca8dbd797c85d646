//! Specialization `y_i = x_i` at small integer points, where the defining ideal vanishes and
//! Γ^(m) becomes the ordinary ring of symmetric polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::combinatorics::{Composition, Modulus};
use crate::error::{GammaError, Result};
use crate::ring::{straighten_direct, RingElement};

/// A point `(x_1, …, x_N)` with `N ≥ 1` exact integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationPoint(Vec<i64>);

impl EvaluationPoint {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() {
            return Err(GammaError::Parse {
                what: "evaluation point",
                input: String::new(),
                reason: "at least one variable is required".into(),
            });
        }
        Ok(EvaluationPoint(values))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn variables(&self) -> usize {
        self.0.len()
    }
}

/// `[e_0, …, e_r]` at `pt`, as the coefficients of `∏ (1 + x_i t)`.
fn elementary_values(r: u32, pt: &EvaluationPoint) -> Vec<BigInt> {
    let r = r as usize;
    let mut e = vec![BigInt::zero(); r + 1];
    e[0] = BigInt::one();
    for &x in pt.values() {
        for k in (1..=r).rev() {
            let prev = e[k - 1].clone();
            e[k] += prev * x;
        }
    }
    e
}

/// `[h_0, …, h_r]` at `pt`, adding one variable at a time: `h_k ← h_k + x · h_{k−1}`.
fn complete_values(r: u32, pt: &EvaluationPoint) -> Vec<BigInt> {
    let r = r as usize;
    let mut h = vec![BigInt::zero(); r + 1];
    h[0] = BigInt::one();
    for &x in pt.values() {
        for k in 1..=r {
            let prev = h[k - 1].clone();
            h[k] += prev * x;
        }
    }
    h
}

/// `h_r(x_1, …, x_N)`.
pub fn evaluate_h(r: u32, pt: &EvaluationPoint) -> BigInt {
    complete_values(r, pt).pop().expect("non-empty")
}

/// `e_r(x_1, …, x_N)`; zero when `r > N`.
pub fn evaluate_e(r: u32, pt: &EvaluationPoint) -> BigInt {
    elementary_values(r, pt).pop().expect("non-empty")
}

/// Value of `Σ c · h_λ e_{mμ}` under `y = x`.
pub fn evaluate_element(a: &RingElement, pt: &EvaluationPoint) -> BigInt {
    let top = a.terms().map(|(k, _)| k.degree()).max().unwrap_or(0);
    let (h, e) = (complete_values(top, pt), elementary_values(top, pt));
    a.terms()
        .map(|(key, coeff)| {
            let hs = key
                .h_index()
                .parts()
                .iter()
                .fold(BigInt::one(), |acc, &p| acc * &h[p as usize]);
            let es = key
                .e_index()
                .parts()
                .iter()
                .fold(BigInt::one(), |acc, &p| acc * &e[p as usize]);
            coeff * hs * es
        })
        .sum()
}

/// Compares `h_α(pt) e_β(pt)` with the value of the straightened expansion.
pub fn check_specialization(
    alpha: &Composition,
    beta: &Composition,
    m: Modulus,
    pt: &EvaluationPoint,
) -> bool {
    let degree = alpha.size().max(beta.size());
    let (h, e) = (complete_values(degree, pt), elementary_values(degree, pt));
    let direct: BigInt = alpha
        .parts()
        .iter()
        .map(|&p| &h[p as usize])
        .product::<BigInt>()
        * beta
            .parts()
            .iter()
            .map(|&p| &e[p as usize])
            .product::<BigInt>();
    direct == evaluate_element(&straighten_direct(alpha, beta, m), pt)
}

/// One randomized specialization instance.
#[derive(Clone, Debug)]
pub struct SpecializationCase {
    pub alpha: Composition,
    pub beta: Composition,
    pub modulus: Modulus,
    pub point: EvaluationPoint,
}

impl SpecializationCase {
    pub fn check(&self) -> bool {
        check_specialization(&self.alpha, &self.beta, self.modulus, &self.point)
    }
}

fn random_composition<R: Rng + ?Sized>(rng: &mut R, mut size: u32) -> Composition {
    let mut parts = Vec::new();
    while size > 0 {
        let p = rng.gen_range(1..=size);
        parts.push(p);
        size -= p;
    }
    Composition::new(parts).expect("parts are positive")
}

/// Draws `(α, β, m, pt)` with `|α| + |β| ≤ max_degree`, `m` from `moduli`, `N ∈ 4..=8` and
/// coordinates in `[−3, 3]`.
pub fn random_case<R: Rng + ?Sized>(
    rng: &mut R,
    max_degree: u32,
    moduli: &[Modulus],
) -> SpecializationCase {
    let total = rng.gen_range(0..=max_degree);
    let alpha_size = rng.gen_range(0..=total);
    let n_vars = rng.gen_range(4..=8);
    SpecializationCase {
        alpha: random_composition(rng, alpha_size),
        beta: random_composition(rng, total - alpha_size),
        modulus: moduli[rng.gen_range(0..moduli.len())],
        point: EvaluationPoint((0..n_vars).map(|_| rng.gen_range(-3..=3)).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones(n: usize) -> EvaluationPoint {
        EvaluationPoint::new(vec![1; n]).unwrap()
    }

    #[test]
    fn all_ones_values() {
        assert_eq!(evaluate_e(2, &ones(3)), 3.into());
        assert_eq!(evaluate_h(2, &ones(3)), 6.into());
        assert_eq!(evaluate_e(4, &ones(3)), 0.into());
        assert_eq!(evaluate_e(0, &ones(3)), 1.into());
    }

    #[test]
    fn against_monomial_sums() {
        // brute force over index tuples for N = 3, x = (2, -1, 3)
        let xs = [2i64, -1, 3];
        let pt = EvaluationPoint::new(xs.to_vec()).unwrap();
        let mut h3 = 0i64;
        let mut e2 = 0i64;
        for i in 0..3 {
            for j in i..3 {
                if j > i {
                    e2 += xs[i] * xs[j];
                }
                for k in j..3 {
                    h3 += xs[i] * xs[j] * xs[k];
                }
            }
        }
        assert_eq!(evaluate_h(3, &pt), h3.into());
        assert_eq!(evaluate_e(2, &pt), e2.into());
    }

    #[test]
    fn specialization_examples() {
        let m3 = Modulus::new(3).unwrap();
        let c = |s: &str| s.parse::<Composition>().unwrap();
        assert!(check_specialization(&c(""), &c("2"), m3, &ones(3)));
        assert!(check_specialization(&c(""), &c(""), m3, &ones(4)));
        let pt = EvaluationPoint::new(vec![1, -2, 0, 3, 2, -1]).unwrap();
        assert!(check_specialization(&c("5"), &c("4,3,2"), m3, &pt));
        assert!(EvaluationPoint::new(vec![]).is_err());
    }
}
