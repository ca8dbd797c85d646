//! `e_d` as the determinant of a `d × d` upper Hessenberg matrix over Γ^(m).

use num_bigint::BigInt;

use crate::combinatorics::{BasisKey, Modulus, Partition};
use crate::error::Result;
use crate::guard::Guard;
use crate::ring::RingElement;

/// The matrix `(a_ij)` whose determinant is `e_d`:
///
/// * `a_ij = h_{1−i+j}` when `m ∤ j` (`h_0 = 1`, zero for negative index),
/// * `a_1j = (−1)^{j+1} e_j` and `a_{j+1,j} = 1` when `m | j`,
/// * `0` otherwise.
#[derive(Clone, Copy, Debug)]
pub struct HessenbergMatrix {
    dimension: u32,
    modulus: Modulus,
}

impl HessenbergMatrix {
    pub fn new(dimension: u32, modulus: Modulus) -> Self {
        HessenbergMatrix { dimension, modulus }
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// Entry `a_ij`, 1-based.
    pub fn entry(&self, i: u32, j: u32) -> RingElement {
        let m = self.modulus;
        if !m.divides(j) {
            return if i <= j + 1 {
                RingElement::h(1 + j - i, m)
            } else {
                RingElement::zero(m)
            };
        }
        if i == 1 {
            let sign = if (j + 1).is_multiple_of(2) { 1 } else { -1 };
            let e_j = RingElement::from_key(BasisKey::new_unchecked(
                Partition::empty(),
                Partition::row(j),
                m,
            ));
            return e_j.scalar_mul(&BigInt::from(sign));
        }
        if i == j + 1 {
            RingElement::one(m)
        } else {
            RingElement::zero(m)
        }
    }

    /// Leading principal minors `[D_0, D_1, …, D_d]`, each expanded along its last column:
    /// `D_k = Σ_{i=1}^{k} (−1)^{k−i} a_ik (∏_{t=i}^{k−1} a_{t+1,t}) D_{i−1}`.
    pub fn leading_minors(&self) -> Vec<RingElement> {
        let m = self.modulus;
        let d = self.dimension;
        for j in 1..=d {
            for i in (j + 2)..=d {
                debug_assert!(
                    self.entry(i, j).is_zero(),
                    "entry ({i},{j}) below the subdiagonal"
                );
            }
        }
        let mut minors = vec![RingElement::one(m)];
        for k in 1..=d {
            let mut det = RingElement::zero(m);
            // running product of subdiagonal entries a_{t+1,t} for t = i..k-1
            let mut sub = RingElement::one(m);
            for i in (1..=k).rev() {
                if i < k {
                    sub = &sub * &self.entry(i + 1, i);
                }
                let a = self.entry(i, k);
                if a.is_zero() || sub.is_zero() {
                    continue;
                }
                let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                let term = &(&a * &sub) * &minors[(i - 1) as usize];
                det = &det + &term.scalar_mul(&BigInt::from(sign));
            }
            minors.push(det);
        }
        minors
    }

    pub fn determinant(&self) -> RingElement {
        self.leading_minors().pop().expect("D_0 is always present")
    }
}

/// `e_d = det(a_ij)_{1≤i,j≤d}`, refusing dimensions above the determinant guard.
pub fn expand_e_determinant(d: u32, m: Modulus, guard: &Guard) -> Result<RingElement> {
    guard.check_determinant(d)?;
    Ok(HessenbergMatrix::new(d, m).determinant())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(k: u32) -> Modulus {
        Modulus::new(k).unwrap()
    }

    #[test]
    fn small_determinants() {
        let g = Guard::default();
        assert_eq!(
            expand_e_determinant(1, m(3), &g).unwrap().to_string(),
            "h[1]"
        );
        assert_eq!(
            expand_e_determinant(4, m(3), &g).unwrap().to_string(),
            "-h[4] + h[3,1] + h[2,2] - h[2,1,1] + h[1] e[3]"
        );
        assert_eq!(
            expand_e_determinant(3, m(3), &g).unwrap().to_string(),
            "e[3]"
        );
        assert_eq!(
            expand_e_determinant(1, m(1), &g).unwrap().to_string(),
            "e[1]"
        );
        assert!(expand_e_determinant(15, m(3), &g).unwrap_err().is_refusal());
    }

    #[test]
    fn matrix_entries() {
        let a = HessenbergMatrix::new(4, m(3));
        assert_eq!(a.entry(1, 1).to_string(), "h[1]");
        assert_eq!(a.entry(2, 1).to_string(), "1");
        assert_eq!(a.entry(1, 3).to_string(), "e[3]");
        assert_eq!(a.entry(4, 3).to_string(), "1");
        assert!(a.entry(2, 3).is_zero());
        assert!(a.entry(4, 1).is_zero());
        assert_eq!(a.entry(1, 4).to_string(), "h[4]");
    }
}
