//! The quadratic functors Sym², Λ², Γ², P², their structure maps, the
//! pushout modules K'(M) and K(M), the connecting homomorphism τ, the
//! cocycle model of P², and the exact-sequence verifiers.

mod objects;
mod structure;
mod tau;
mod cocycle;
mod verify;

pub use verify::{
    car2sym_injectivity, chi_kernel_remarks, verify_sequence, verify_with_suite,
    PositionReport, SequenceName, SequenceReport, ALL_SEQUENCES,
};
pub use cocycle::{CocycleModel, ModelElement};
pub use tau::{tau_explicit, tau_snake_oracle, twisted_tor1, twisted_tor1_induced, TwistedTor};
pub use structure::{
    k_modules, pair_map, structure_map, KModules, QuadSuite, StructureMapName,
    ALL_STRUCTURE_MAPS,
};
pub use objects::{
    functor_map, functor_map_with, functor_object, functor_object_with_i2, FunctorObject,
    FunctorTag,
};
