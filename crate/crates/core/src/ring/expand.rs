use num_bigint::BigInt;

use crate::combinatorics::{
    partitions_with_remainder, signed_good_count, BasisKey, Modulus, Partition,
};
use crate::error::Result;
use crate::ring::RingElement;

/// `h_λ e_{mμ}` with coefficient 1; every part of `m_mu` must be divisible by `m`.
pub fn basis_monomial(lambda: &Partition, m_mu: &Partition, m: Modulus) -> Result<RingElement> {
    Ok(RingElement::from_key(BasisKey::new(
        lambda.clone(),
        m_mu.clone(),
        m,
    )?))
}

/// `d_μ = ε_μ c_μ^(m)`, the coefficient of `h_μ e_{(rm)}` in `e_{|μ|+rm}` for every `r ≥ 0`.
pub fn d_coefficient(mu: &Partition, m: Modulus) -> BigInt {
    signed_good_count(mu, m)
}

/// `e_n = Σ_{μ ∈ 𝒫(n;m)} d_μ h_μ e_{(n−|μ|)}`.
///
/// When `m | n` every non-empty `μ` of size divisible by `m` has `d_μ = 0`, so the sum collapses
/// to the generator `e_{(n)}` (and to `1` at `n = 0`).
pub fn expand_e(n: u32, m: Modulus) -> RingElement {
    let mut out = RingElement::zero(m);
    for mu in partitions_with_remainder(n, m) {
        let rest = n - mu.size();
        let key = BasisKey::new_unchecked(mu.clone(), Partition::row(rest), m);
        out.add_term(key, d_coefficient(&mu, m));
    }
    out
}
