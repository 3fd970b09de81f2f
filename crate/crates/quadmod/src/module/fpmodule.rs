//! Finitely presented modules and their integer-lattice realizations.
//!
//! A module over a finite-rank Z-algebra R is given by a generator count and
//! a matrix of relation columns with ring-element entries. Because R itself
//! is Z^n modulo a lattice, the module has an underlying abelian group
//! Z^{g·n} / L for a computable lattice L — the `ZRealization`. Element
//! equality, kernels, exactness: everything is decided in that realization.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::{scaled_identity, smith_normal_form, solve, IntMatrix, Lattice};
use crate::ring::{Ring, RingElement};

#[derive(Debug)]
struct ModInner {
    ring: Ring,
    gens: usize,
    labels: Vec<String>,
    /// Relation columns; each column has one ring element per generator.
    rels: Vec<Vec<RingElement>>,
    realization: OnceLock<ZRealization>,
}

/// The underlying abelian group of a module, as a lattice quotient.
#[derive(Clone, Debug)]
pub struct ZRealization {
    /// `gens * ring.rank()`.
    pub dim: usize,
    /// Relation lattice inside Z^dim.
    pub lattice: Lattice,
}

#[derive(Clone)]
pub struct FPModule(Arc<ModInner>);

/// Element of an `FPModule`: one ring element per generator.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleElement {
    pub coords: Vec<RingElement>,
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl PartialEq for FPModule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ring == other.0.ring
                && self.0.gens == other.0.gens
                && self.0.rels == other.0.rels)
    }
}
impl Eq for FPModule {}

impl fmt::Debug for FPModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FPModule(over {}, gens {}, rels {})",
            self.0.ring.name(),
            self.0.gens,
            self.0.rels.len()
        )
    }
}

impl FPModule {
    pub fn new(ring: Ring, gens: usize, rels: Vec<Vec<RingElement>>) -> FPModule {
        let labels = (0..gens).map(|i| format!("g{}", i)).collect();
        FPModule::with_labels(ring, gens, rels, labels)
    }

    pub fn with_labels(
        ring: Ring,
        gens: usize,
        rels: Vec<Vec<RingElement>>,
        labels: Vec<String>,
    ) -> FPModule {
        assert_eq!(labels.len(), gens);
        for col in &rels {
            assert_eq!(col.len(), gens, "relation column length mismatch");
            for e in col {
                assert_eq!(e.coords.len(), ring.rank());
            }
        }
        FPModule(Arc::new(ModInner {
            ring,
            gens,
            labels,
            rels,
            realization: OnceLock::new(),
        }))
    }

    pub fn free(ring: Ring, gens: usize) -> FPModule {
        FPModule::new(ring, gens, vec![])
    }

    pub fn zero(ring: Ring) -> FPModule {
        FPModule::new(ring, 0, vec![])
    }

    /// R as a module over itself.
    pub fn ring_module(ring: Ring) -> FPModule {
        FPModule::free(ring, 1)
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn gens(&self) -> usize {
        self.0.gens
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn rels(&self) -> &[Vec<RingElement>] {
        &self.0.rels
    }

    /// Same presentation, new display labels.
    pub fn relabel(&self, labels: Vec<String>) -> FPModule {
        FPModule::with_labels(
            self.0.ring.clone(),
            self.0.gens,
            self.0.rels.clone(),
            labels,
        )
    }

    pub fn realization(&self) -> &ZRealization {
        self.0.realization.get_or_init(|| {
            let ring = &self.0.ring;
            let n = ring.rank();
            let dim = self.0.gens * n;
            let mut gens: Vec<Vec<BigInt>> = Vec::new();
            // Additive ring relations placed in each generator slot.
            for j in 0..self.0.gens {
                for col in ring.lattice().basis().columns() {
                    let mut v = vec![BigInt::zero(); dim];
                    v[j * n..(j + 1) * n].clone_from_slice(&col);
                    gens.push(v);
                }
            }
            // b_i · q for each relation column q and ring basis element b_i.
            for col in &self.0.rels {
                for i in 0..n {
                    let b = ring.basis_el(i);
                    let scaled: Vec<RingElement> =
                        col.iter().map(|q| ring.mul(&b, q)).collect();
                    gens.push(flatten_coords(ring, &scaled));
                }
            }
            ZRealization {
                dim,
                lattice: Lattice::from_generator_vecs(dim, &gens),
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.realization().dim
    }

    pub fn lattice(&self) -> &Lattice {
        &self.realization().lattice
    }

    pub fn el(&self, coords: Vec<RingElement>) -> ModuleElement {
        assert_eq!(coords.len(), self.0.gens, "element length mismatch");
        ModuleElement { coords }
    }

    pub fn el_i64(&self, coords: &[&[i64]]) -> ModuleElement {
        self.el(coords.iter().map(|c| self.0.ring.el_i64(c)).collect())
    }

    pub fn zero_el(&self) -> ModuleElement {
        ModuleElement {
            coords: vec![self.0.ring.zero(); self.0.gens],
        }
    }

    pub fn gen_el(&self, j: usize) -> ModuleElement {
        let mut e = self.zero_el();
        e.coords[j] = self.0.ring.one();
        e
    }

    /// Generator scaled by a ring element.
    pub fn gen_scaled(&self, j: usize, r: &RingElement) -> ModuleElement {
        let mut e = self.zero_el();
        e.coords[j] = r.clone();
        e
    }

    pub fn flatten(&self, x: &ModuleElement) -> Vec<BigInt> {
        flatten_coords(&self.0.ring, &x.coords)
    }

    pub fn unflatten(&self, v: &[BigInt]) -> ModuleElement {
        let n = self.0.ring.rank();
        assert_eq!(v.len(), self.0.gens * n);
        ModuleElement {
            coords: (0..self.0.gens)
                .map(|j| RingElement::new(v[j * n..(j + 1) * n].to_vec()))
                .collect(),
        }
    }

    pub fn add_el(&self, x: &ModuleElement, y: &ModuleElement) -> ModuleElement {
        ModuleElement {
            coords: x
                .coords
                .iter()
                .zip(&y.coords)
                .map(|(a, b)| self.0.ring.add(a, b))
                .collect(),
        }
    }

    pub fn sub_el(&self, x: &ModuleElement, y: &ModuleElement) -> ModuleElement {
        ModuleElement {
            coords: x
                .coords
                .iter()
                .zip(&y.coords)
                .map(|(a, b)| self.0.ring.sub(a, b))
                .collect(),
        }
    }

    pub fn neg_el(&self, x: &ModuleElement) -> ModuleElement {
        ModuleElement {
            coords: x.coords.iter().map(|a| self.0.ring.neg(a)).collect(),
        }
    }

    pub fn smul(&self, r: &RingElement, x: &ModuleElement) -> ModuleElement {
        ModuleElement {
            coords: x.coords.iter().map(|a| self.0.ring.mul(r, a)).collect(),
        }
    }

    pub fn int_smul(&self, k: i64, x: &ModuleElement) -> ModuleElement {
        self.smul(&self.0.ring.int(k), x)
    }

    pub fn eq(&self, x: &ModuleElement, y: &ModuleElement) -> bool {
        let diff = self.sub_el(x, y);
        self.lattice().contains(&self.flatten(&diff))
    }

    pub fn is_zero_el(&self, x: &ModuleElement) -> bool {
        self.lattice().contains(&self.flatten(x))
    }

    /// Canonical coset representative.
    pub fn canon_el(&self, x: &ModuleElement) -> ModuleElement {
        self.unflatten(&self.lattice().reduce(&self.flatten(x)))
    }

    /// Invariant factors of the underlying abelian group.
    pub fn invariants(&self) -> Vec<BigInt> {
        self.lattice().quotient_invariants()
    }

    pub fn is_zero_module(&self) -> bool {
        self.invariants().is_empty()
    }

    /// Whether the underlying abelian group is annihilated by 2.
    pub fn is_two_torsion(&self) -> bool {
        (0..self.0.gens).all(|j| {
            let doubled = self.int_smul(2, &self.gen_el(j));
            self.is_zero_el(&doubled)
        })
    }

    /// All elements, when the underlying group is finite and not larger than
    /// `limit`; canonical representatives, deterministic order.
    pub fn enumerate_elements(&self, limit: usize) -> Option<Vec<ModuleElement>> {
        let real = self.realization();
        let dim = real.dim;
        if dim == 0 {
            return Some(vec![self.zero_el()]);
        }
        let snf = smith_normal_form(real.lattice.basis());
        let mut d = snf.d.clone();
        d.resize(dim, BigInt::zero());
        if d.iter().any(Zero::is_zero) {
            return None; // free part: infinite
        }
        let mut size = BigInt::one();
        for di in &d {
            size *= di;
            if size > BigInt::from(limit as u64) {
                return None;
            }
        }
        // Z^dim/L ≅ ⊕ Z/d_i via x ↦ U·x; enumerate tuples and pull back
        // through U^{-1}, column by column.
        let u_inv = invert_unimodular(&snf.u);
        let mut out = Vec::new();
        let total: usize = {
            let mut t = 1usize;
            for di in &d {
                let v: usize = di.to_string().parse().unwrap_or(usize::MAX);
                t = t.saturating_mul(v);
            }
            t
        };
        for idx in 0..total {
            let mut rem = idx;
            let mut c = vec![BigInt::zero(); dim];
            for (i, di) in d.iter().enumerate() {
                let m: usize = di.to_string().parse().unwrap();
                c[i] = BigInt::from(rem % m);
                rem /= m;
            }
            let x = u_inv.mul_vec(&c);
            out.push(self.canon_el(&self.unflatten(&x)));
        }
        Some(out)
    }

    /// Pseudo-random element with small coordinates, for sampling-based
    /// property checks.
    pub fn random_element(&self, rng: &mut impl rand::Rng, bound: i64) -> ModuleElement {
        let n = self.0.ring.rank();
        let coords = (0..self.0.gens)
            .map(|_| {
                RingElement::new(
                    (0..n)
                        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                        .collect(),
                )
            })
            .collect();
        ModuleElement { coords }
    }

    /// Lattice of the 2-torsion submodule inside the realization.
    pub fn two_torsion_lattice(&self) -> Lattice {
        let real = self.realization();
        real.lattice
            .preimage(&scaled_identity(real.dim, &BigInt::from(2)))
    }
}

pub fn flatten_coords(ring: &Ring, coords: &[RingElement]) -> Vec<BigInt> {
    let n = ring.rank();
    let mut v = Vec::with_capacity(coords.len() * n);
    for c in coords {
        assert_eq!(c.coords.len(), n);
        v.extend(c.coords.iter().cloned());
    }
    v
}

/// Inverse of a unimodular matrix, by solving column systems exactly.
fn invert_unimodular(u: &IntMatrix) -> IntMatrix {
    let n = u.rows();
    assert_eq!(n, u.cols());
    let cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let e = crate::arith::unit_vector(n, j);
            solve(u, &e).expect("unimodular matrix is invertible")
        })
        .collect();
    IntMatrix::from_columns(n, &cols)
}

/// Some small module elements for exhaustive-ish sampling in tests: all
/// coordinate vectors with entries in [-bound, bound] would explode, so this
/// yields the generators, their negatives, doubles, and pairwise sums.
pub fn small_elements(m: &FPModule) -> Vec<ModuleElement> {
    let mut out = vec![m.zero_el()];
    for j in 0..m.gens() {
        let g = m.gen_el(j);
        out.push(g.clone());
        out.push(m.neg_el(&g));
        out.push(m.int_smul(2, &g));
    }
    for j in 0..m.gens() {
        for k in (j + 1)..m.gens() {
            out.push(m.add_el(&m.gen_el(j), &m.gen_el(k)));
        }
    }
    for i in 0..m.ring().rank() {
        for j in 0..m.gens() {
            out.push(m.gen_scaled(j, &m.ring().basis_el(i)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::bigs;
    use crate::ring::presets::*;

    #[test]
    fn z_realization_examples() {
        // R over Z: Z-gens {1}, L = 0.
        let m = FPModule::ring_module(z());
        assert_eq!(m.dim(), 1);
        assert!(m.lattice().is_zero());

        // Z/2 over Z: L = 2Z.
        let z2 = FPModule::new(z(), 1, vec![vec![z().int(2)]]);
        assert_eq!(z2.invariants(), vec![BigInt::from(2)]);

        // R/√2R over Z[√2]: L = span{(0,1),(2,0)}.
        let r = z_sqrt2();
        let m = FPModule::new(r.clone(), 1, vec![vec![r.basis_el(1)]]);
        assert_eq!(
            *m.lattice(),
            Lattice::from_generator_vecs(2, &[bigs(&[2, 0]), bigs(&[0, 1])])
        );
        assert_eq!(m.invariants(), vec![BigInt::from(2)]);
    }

    #[test]
    fn element_equality_examples() {
        let z2 = FPModule::new(z(), 1, vec![vec![z().int(2)]]);
        let g = z2.gen_el(0);
        assert!(z2.eq(&z2.int_smul(3, &g), &g));

        let free = FPModule::ring_module(z());
        assert!(!free.eq(&free.gen_el(0), &free.zero_el()));

        let r = z_sqrt2();
        let m = FPModule::new(r.clone(), 1, vec![vec![r.basis_el(1)]]);
        let sqrt2_g = m.smul(&r.basis_el(1), &m.gen_el(0));
        assert!(m.is_zero_el(&sqrt2_g));
    }

    #[test]
    fn enumerate_finite_modules() {
        let z4 = FPModule::new(z(), 1, vec![vec![z().int(4)]]);
        let els = z4.enumerate_elements(100).expect("finite");
        assert_eq!(els.len(), 4);
        let free = FPModule::ring_module(z());
        assert!(free.enumerate_elements(100).is_none());

        let f4 = FPModule::free(f2x_f2(), 1);
        assert_eq!(f4.enumerate_elements(100).expect("finite").len(), 4);
    }
}
