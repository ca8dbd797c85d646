use crate::combinatorics::{BasisKey, Partition};
use crate::ring::{expand_e, RingElement};

/// The involution `ψ(h_i) = e_i`, `ψ(e_{jm}) = h_{jm}`, extended multiplicatively and linearly.
pub fn psi(a: &RingElement) -> RingElement {
    let m = a.modulus();
    let mut out = RingElement::zero(m);
    for (key, coeff) in a.terms() {
        let from_h = key
            .h_index()
            .parts()
            .iter()
            .fold(RingElement::one(m), |acc, &part| &acc * &expand_e(part, m));
        let from_e = RingElement::from_key(BasisKey::new_unchecked(
            key.e_index().clone(),
            Partition::empty(),
            m,
        ));
        out = &out + &(&from_h * &from_e).scalar_mul(coeff);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Modulus;

    #[test]
    fn small_values() {
        let m = Modulus::new(3).unwrap();
        assert_eq!(psi(&RingElement::one(m)), RingElement::one(m));
        assert_eq!(psi(&RingElement::h(1, m)), RingElement::h(1, m));
        let a = RingElement::from_key(BasisKey::parse("2,1|3", m).unwrap());
        assert_eq!(psi(&psi(&a)), a);
        assert_eq!(psi(&RingElement::h(2, m)).to_string(), "-h[2] + h[1,1]");
    }
}
