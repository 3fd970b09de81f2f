//! Exact computer algebra for quadratic maps between modules.
//!
//! The crate implements, over commutative rings of finite additive rank over
//! the integers, the quadratic functors Sym², Λ², Γ² and P², the ideal I₂
//! with its universal quadratic derivation, the structure maps and pushout
//! modules relating all of these, and machine verification of the exact
//! sequences they fit into. Everything is computed exactly: modules are
//! finitely presented, element equality is integer lattice membership, and
//! invariant factors are Smith normal form data.
//!
//! The `quadmod` binary runs batch session files; see the book under `book/`
//! for a guided tour.

pub mod arith;
pub mod error;
pub mod functors;
pub mod i2;
pub mod module;
pub mod poly;
pub mod quadmaps;
pub mod ring;

// Placeholder binary modules are added as the build proceeds.

pub use error::{Error, Result};

#[cfg(doctest)]
mod booktests {
    macro_rules! book_chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            #[allow(dead_code)]
            struct $name;
        };
    }
    book_chapter!(Introduction, "../../../book/src/introduction.md");
    book_chapter!(RingsAndLattices, "../../../book/src/rings-and-lattices.md");
    book_chapter!(Modules, "../../../book/src/modules.md");
    book_chapter!(QuadraticMaps, "../../../book/src/quadratic-maps.md");
    book_chapter!(FunctorZoo, "../../../book/src/functor-zoo.md");
    book_chapter!(DerivationsAndI2, "../../../book/src/derivations-and-i2.md");
    book_chapter!(ExactSequences, "../../../book/src/exact-sequences.md");
    book_chapter!(CliReference, "../../../book/src/cli-reference.md");
}
