use num_bigint::BigInt;

use crate::combinatorics::{BasisKey, Modulus, Partition};
use crate::ring::RingElement;

/// `e_n` obtained by solving the defining relations: `e_0 = 1`, `e_n` is a generator when
/// `m | n`, and otherwise `e_n = Σ_{i=1}^{n} (−1)^{i−1} h_i e_{n−i}`.
pub fn expand_e_recursive(n: u32, m: Modulus) -> RingElement {
    expand_e_recursive_table(n, m)
        .pop()
        .expect("table holds e_0..=e_n")
}

/// `[e_0, e_1, …, e_n]` from the recursion.
pub fn expand_e_recursive_table(n: u32, m: Modulus) -> Vec<RingElement> {
    let mut table: Vec<RingElement> = Vec::with_capacity(n as usize + 1);
    table.push(RingElement::one(m));
    for d in 1..=n {
        let e_d = if m.divides(d) {
            RingElement::from_key(BasisKey::new_unchecked(
                Partition::empty(),
                Partition::row(d),
                m,
            ))
        } else {
            let mut acc = RingElement::zero(m);
            for i in 1..=d {
                let sign = if i % 2 == 1 { 1 } else { -1 };
                let term = &RingElement::h(i, m) * &table[(d - i) as usize];
                acc = &acc + &term.scalar_mul(&BigInt::from(sign));
            }
            acc
        };
        table.push(e_d);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let m = Modulus::new(3).unwrap();
        assert_eq!(expand_e_recursive(1, m).to_string(), "h[1]");
        assert_eq!(expand_e_recursive(2, m).to_string(), "-h[2] + h[1,1]");
        assert_eq!(expand_e_recursive(6, m).to_string(), "e[6]");
        assert_eq!(expand_e_recursive(0, m), RingElement::one(m));
    }
}
