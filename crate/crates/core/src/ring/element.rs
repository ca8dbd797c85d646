use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{BasisKey, Modulus, Partition};
use crate::error::{GammaError, Result};

/// An element of Γ^(m) written in the basis `{h_λ e_{mμ}}`.
///
/// Terms are kept in canonical order (see [`BasisKey`]'s `Ord`) and zero coefficients are never
/// stored, so structural equality is equality in the ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    modulus: Modulus,
    terms: BTreeMap<BasisKey, BigInt>,
}

impl RingElement {
    pub fn zero(modulus: Modulus) -> Self {
        RingElement {
            modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(modulus: Modulus) -> Self {
        Self::from_key(BasisKey::unit(modulus))
    }

    pub fn from_key(key: BasisKey) -> Self {
        Self::from_term(key, BigInt::one())
    }

    pub fn from_term(key: BasisKey, coeff: BigInt) -> Self {
        let mut out = Self::zero(key.modulus());
        out.add_term(key, coeff);
        out
    }

    /// The single generator `h_n` (or `1` when `n = 0`).
    pub fn h(n: u32, modulus: Modulus) -> Self {
        Self::from_key(BasisKey::new_unchecked(
            Partition::row(n),
            Partition::empty(),
            modulus,
        ))
    }

    /// Builds an element from `(key, coefficient)` pairs, summing duplicates.
    pub fn from_terms(
        modulus: Modulus,
        terms: impl IntoIterator<Item = (BasisKey, BigInt)>,
    ) -> Result<Self> {
        let mut out = Self::zero(modulus);
        for (key, coeff) in terms {
            if key.modulus() != modulus {
                return Err(GammaError::ModulusMismatch {
                    left: modulus.get(),
                    right: key.modulus().get(),
                });
            }
            out.add_term(key, coeff);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, key: BasisKey, coeff: BigInt) {
        debug_assert_eq!(key.modulus(), self.modulus);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &BigInt)> {
        self.terms.iter()
    }

    /// `(a, h_λ e_{mμ})`: the stored coefficient, or zero.
    pub fn coefficient(&self, key: &BasisKey) -> Result<BigInt> {
        self.check_modulus(key.modulus())?;
        Ok(self.terms.get(key).cloned().unwrap_or_default())
    }

    /// `Some(n)` when every term has degree `n`; the zero element has no degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(BasisKey::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn check_modulus(&self, other: Modulus) -> Result<()> {
        if self.modulus == other {
            Ok(())
        } else {
            Err(GammaError::ModulusMismatch {
                left: self.modulus.get(),
                right: other.get(),
            })
        }
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_modulus(other.modulus)?;
        let mut out = self.clone();
        for (key, coeff) in &other.terms {
            out.add_term(key.clone(), coeff.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &RingElement) -> Result<RingElement> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_modulus(other.modulus)?;
        let mut out = RingElement::zero(self.modulus);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term(ka.merge(kb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &BigInt) -> RingElement {
        if c.is_zero() {
            return RingElement::zero(self.modulus);
        }
        RingElement {
            modulus: self.modulus,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    fn neg_ref(&self) -> RingElement {
        RingElement {
            modulus: self.modulus,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    /// Product of all `factors`, starting from `1`.
    pub fn product<'a>(
        modulus: Modulus,
        factors: impl IntoIterator<Item = &'a RingElement>,
    ) -> Result<RingElement> {
        factors
            .into_iter()
            .try_fold(RingElement::one(modulus), |acc, f| acc.checked_mul(f))
    }
}

// The operator impls panic on a modulus mismatch; use the `checked_*` methods to get an error.

impl Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        self.checked_add(rhs)
            .expect("adding elements of different rings")
    }
}

impl Sub for &RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &RingElement) -> RingElement {
        self.checked_sub(rhs)
            .expect("subtracting elements of different rings")
    }
}

impl Mul for &RingElement {
    type Output = RingElement;

    fn mul(self, rhs: &RingElement) -> RingElement {
        self.checked_mul(rhs)
            .expect("multiplying elements of different rings")
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        self.neg_ref()
    }
}

impl Neg for RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        self.neg_ref()
    }
}

fn write_index(f: &mut fmt::Formatter<'_>, name: char, p: &Partition) -> fmt::Result {
    write!(f, "{name}[{p}]")
}

/// Text form: `-h[5,4,1,1] e[3] + 2 h[5,2,2,1,1] e[3]`; the unit is `1`, zero is `0`.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (key, coeff)) in self.terms.iter().enumerate() {
            match (i, coeff.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = coeff.abs();
            let (h, e) = (key.h_index(), key.e_index());
            if h.is_empty() && e.is_empty() {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude} ")?;
            }
            if !h.is_empty() {
                write_index(f, 'h', h)?;
            }
            if !e.is_empty() {
                if !h.is_empty() {
                    f.write_str(" ")?;
                }
                write_index(f, 'e', e)?;
            }
        }
        Ok(())
    }
}
