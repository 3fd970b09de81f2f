//! Exact integer lattice algebra: matrices, normal forms, sublattices.

mod lattice;
mod matrix;
mod normal_form;

pub use lattice::{
    big, bigs, divide_exact, scaled_identity, solve, solve_mod, unit_vector, Lattice,
};
pub use matrix::IntMatrix;
pub use normal_form::{
    cokernel_invariants, hermite_normal_form, kernel_basis, smith_normal_form, SmithDecomposition,
};
