//! The ring Γ^(m) in the basis `{h_λ e_{mμ}}`.

mod element;
mod expand;
mod json;
mod psi;
mod straighten;

pub use element::RingElement;
pub use expand::{basis_monomial, d_coefficient, expand_e};
pub use psi::psi;
pub use straighten::{straighten_direct, straighten_product};
