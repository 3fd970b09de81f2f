//! Finitely presented modules over finite-rank Z-algebras, their maps, and
//! the homological toolkit everything else reduces to.

mod fpmodule;
mod hom;
mod map;

pub use fpmodule::{flatten_coords, small_elements, FPModule, ModuleElement, ZRealization};
pub use hom::{
    cokernel, connecting_tor, direct_sum, direct_sum_map, is_exact_at, kernel, pushout,
    submodule, tensor, tensor_elem, tensor_labels, tensor_map, tor1, tor1_induced, two_torsion,
    twisted_tensor, twisted_tensor_elem, twisted_tensor_map_left, twisted_tensor_map_right,
    DirectSum, ExactnessVerdict, Pushout, Tor1,
};
pub use map::ModuleMap;
