//! The ideal I₂, the universal quadratic derivation, reduced presentations,
//! and the formal ρ-identity checkers.

mod derivation;
mod ideal;
mod presented;
mod rho;

pub use derivation::{derivation_check, derivation_check_spec, factor_derivation, DerivationSpec};
pub use ideal::{binomial2, i2_ideal, i2_labels, universal_derivation, IdealI2};
pub use presented::{d_expansion, i2_presented, DExpansion, PresentedI2};
pub use rho::{rho1, rho2, rho_samples, FreeComb, RhoIdentity, ALL_RHO_IDENTITIES};
