//! Rewriting `h_α e_β` in the basis `{h_λ e_{mμ}}`.

use crate::combinatorics::counting::SignedCountCache;
use crate::combinatorics::sequences::structure_constant_cached;
use crate::combinatorics::{pairs_of_total, BasisKey, Composition, Modulus, Partition};
use crate::ring::{expand_e, RingElement};

/// Closed form: `h_α e_β = Σ c^(m)_{β;(ξ,mμ)} h_{α∪ξ} e_{mμ}` over `(ξ | mμ) ∈ 𝒫²_m(|β|)`.
pub fn straighten_direct(alpha: &Composition, beta: &Composition, m: Modulus) -> RingElement {
    let alpha_type = alpha.type_of();
    let mut cache = SignedCountCache::new(m);
    let mut out = RingElement::zero(m);
    let max_e_parts = beta.length();
    for pair in pairs_of_total(beta.size(), m) {
        // each part of mμ comes from a distinct β_i
        if pair.second().length() > max_e_parts {
            continue;
        }
        let c = structure_constant_cached(beta, pair.first(), pair.second(), m, &mut cache);
        let key = BasisKey::new_unchecked(alpha_type.union(pair.first()), pair.second().clone(), m);
        out.add_term(key, c);
    }
    out
}

/// Termwise: `∏ h_{α_i} · ∏ e_{β_j}` with each `e_{β_j}` expanded and multiplied out.
pub fn straighten_product(alpha: &Composition, beta: &Composition, m: Modulus) -> RingElement {
    let h_part = BasisKey::new_unchecked(alpha.type_of(), Partition::empty(), m);
    beta.parts()
        .iter()
        .fold(RingElement::from_key(h_part), |acc, &b| {
            &acc * &expand_e(b, m)
        })
}
