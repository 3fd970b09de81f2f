//! Module maps: matrices of ring elements, validated to respect relations.

use num_bigint::BigInt;
use std::fmt;
use std::sync::OnceLock;

use crate::arith::{solve_mod, IntMatrix, Lattice};
use crate::error::{Error, Result};
use crate::ring::RingElement;

use super::fpmodule::{FPModule, ModuleElement};

#[derive(Clone)]
pub struct ModuleMap {
    domain: FPModule,
    codomain: FPModule,
    /// `columns[j]` is the image of the j-th domain generator.
    columns: Vec<ModuleElement>,
    zlift: std::sync::Arc<OnceLock<IntMatrix>>,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModuleMap({:?} -> {:?}, cols {:?})",
            self.domain, self.codomain, self.columns
        )
    }
}

impl ModuleMap {
    /// Constructs and validates a map: the image of every domain relation
    /// column must lie in the codomain's relation lattice.
    pub fn new(
        domain: FPModule,
        codomain: FPModule,
        columns: Vec<ModuleElement>,
    ) -> Result<ModuleMap> {
        if domain.ring() != codomain.ring() {
            return Err(Error::RingMismatch(format!(
                "map between modules over {} and {}",
                domain.ring().name(),
                codomain.ring().name()
            )));
        }
        if columns.len() != domain.gens() {
            return Err(Error::Shape(format!(
                "expected {} columns, got {}",
                domain.gens(),
                columns.len()
            )));
        }
        for col in &columns {
            if col.coords.len() != codomain.gens() {
                return Err(Error::Shape(
                    "column length does not match codomain generators".to_string(),
                ));
            }
        }
        let map = ModuleMap {
            domain,
            codomain,
            columns,
            zlift: std::sync::Arc::new(OnceLock::new()),
        };
        for (index, rel) in map.domain.rels().iter().enumerate() {
            let image = map.apply_coords(rel);
            if !map.codomain.is_zero_el(&image) {
                return Err(Error::IllDefinedMap {
                    index,
                    detail: format!(
                        "relation column {:?} maps to {} which is nonzero in the codomain",
                        rel, image
                    ),
                });
            }
        }
        Ok(map)
    }

    /// Like `new` but panics on failure; for maps that are well defined by
    /// construction.
    pub fn expect_new(
        domain: FPModule,
        codomain: FPModule,
        columns: Vec<ModuleElement>,
        what: &str,
    ) -> ModuleMap {
        match ModuleMap::new(domain, codomain, columns) {
            Ok(m) => m,
            Err(e) => panic!("{} should be well defined: {}", what, e),
        }
    }

    pub fn identity(m: &FPModule) -> ModuleMap {
        let columns = (0..m.gens()).map(|j| m.gen_el(j)).collect();
        ModuleMap {
            domain: m.clone(),
            codomain: m.clone(),
            columns,
            zlift: std::sync::Arc::new(OnceLock::new()),
        }
    }

    pub fn zero_map(domain: &FPModule, codomain: &FPModule) -> ModuleMap {
        let columns = (0..domain.gens()).map(|_| codomain.zero_el()).collect();
        ModuleMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            columns,
            zlift: std::sync::Arc::new(OnceLock::new()),
        }
    }

    /// Multiplication by an integer as a self-map.
    pub fn scalar(m: &FPModule, k: i64) -> ModuleMap {
        let columns = (0..m.gens()).map(|j| m.int_smul(k, &m.gen_el(j))).collect();
        ModuleMap {
            domain: m.clone(),
            codomain: m.clone(),
            columns,
            zlift: std::sync::Arc::new(OnceLock::new()),
        }
    }

    pub fn domain(&self) -> &FPModule {
        &self.domain
    }

    pub fn codomain(&self) -> &FPModule {
        &self.codomain
    }

    pub fn columns(&self) -> &[ModuleElement] {
        &self.columns
    }

    fn apply_coords(&self, coords: &[RingElement]) -> ModuleElement {
        let ring = self.codomain.ring();
        let mut acc = self.codomain.zero_el();
        for (j, c) in coords.iter().enumerate() {
            for i in 0..self.codomain.gens() {
                let term = ring.mul(&self.columns[j].coords[i], c);
                acc.coords[i] = ring.add(&acc.coords[i], &term);
            }
        }
        acc
    }

    pub fn apply(&self, x: &ModuleElement) -> ModuleElement {
        assert_eq!(x.coords.len(), self.domain.gens());
        self.apply_coords(&x.coords)
    }

    /// The induced integer matrix on Z-realizations.
    pub fn zlift(&self) -> &IntMatrix {
        self.zlift.get_or_init(|| {
            let ring = self.domain.ring();
            let n = ring.rank();
            let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(self.domain.dim());
            for j in 0..self.domain.gens() {
                for i in 0..n {
                    // Image of the generator j scaled by basis element b_i.
                    let x = self.domain.gen_scaled(j, &ring.basis_el(i));
                    cols.push(self.codomain.flatten(&self.apply(&x)));
                }
            }
            IntMatrix::from_columns(self.codomain.dim(), &cols)
        })
    }

    /// Image lattice inside the codomain realization (includes the codomain
    /// relation lattice).
    pub fn image_lattice(&self) -> Lattice {
        let mut gens: Vec<Vec<BigInt>> = self.zlift().columns().collect();
        for c in self.codomain.lattice().basis().columns() {
            gens.push(c);
        }
        Lattice::from_generator_vecs(self.codomain.dim(), &gens)
    }

    /// Kernel lattice inside the domain realization: `{x : Z_f x ∈ L_cod}`.
    pub fn kernel_lattice(&self) -> Lattice {
        self.codomain.lattice().preimage(self.zlift())
    }

    pub fn is_zero_map(&self) -> bool {
        self.columns.iter().all(|c| self.codomain.is_zero_el(c))
    }

    pub fn is_injective(&self) -> bool {
        self.domain
            .lattice()
            .contains_lattice(&self.kernel_lattice())
    }

    pub fn is_surjective(&self) -> bool {
        self.image_lattice().quotient_invariants().is_empty()
    }

    /// Kernel = 0 and cokernel = 0.
    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        assert_eq!(
            other.codomain, self.domain,
            "composition domain/codomain mismatch"
        );
        let columns = other.columns.iter().map(|c| self.apply(c)).collect();
        ModuleMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            columns,
            zlift: std::sync::Arc::new(OnceLock::new()),
        }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        assert_eq!(self.domain, other.domain);
        assert_eq!(self.codomain, other.codomain);
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| self.codomain.add_el(a, b))
            .collect();
        ModuleMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            columns,
            zlift: std::sync::Arc::new(OnceLock::new()),
        }
    }

    pub fn neg(&self) -> ModuleMap {
        let columns = self.columns.iter().map(|c| self.codomain.neg_el(c)).collect();
        ModuleMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            columns,
            zlift: std::sync::Arc::new(OnceLock::new()),
        }
    }

    pub fn sub(&self, other: &ModuleMap) -> ModuleMap {
        self.add(&other.neg())
    }

    /// Equality as maps (columnwise equality in the codomain).
    pub fn equals(&self, other: &ModuleMap) -> bool {
        self.domain == other.domain
            && self.codomain == other.codomain
            && self
                .columns
                .iter()
                .zip(&other.columns)
                .all(|(a, b)| self.codomain.eq(a, b))
    }

    /// One preimage of `y` under the map, if it exists.
    pub fn preimage(&self, y: &ModuleElement) -> Option<ModuleElement> {
        let target = self.codomain.flatten(y);
        let x = solve_mod(self.zlift(), &target, self.codomain.lattice())?;
        Some(self.domain.unflatten(&x))
    }

    /// Replace the codomain by a structurally equal module (used to retarget
    /// maps at labeled functor objects).
    pub fn with_codomain(&self, codomain: FPModule) -> ModuleMap {
        assert_eq!(self.codomain, codomain, "retarget requires equal modules");
        ModuleMap {
            domain: self.domain.clone(),
            codomain,
            columns: self.columns.clone(),
            zlift: self.zlift.clone(),
        }
    }

    pub fn with_domain(&self, domain: FPModule) -> ModuleMap {
        assert_eq!(self.domain, domain, "retarget requires equal modules");
        ModuleMap {
            domain,
            codomain: self.codomain.clone(),
            columns: self.columns.clone(),
            zlift: self.zlift.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::presets::*;

    #[test]
    fn make_map_examples() {
        let zz = z();
        let z2 = FPModule::new(zz.clone(), 1, vec![vec![zz.int(2)]]);
        let free = FPModule::ring_module(zz.clone());

        // ×2 : Z/2 -> Z/2 is the zero map but well defined.
        let tw = ModuleMap::new(z2.clone(), z2.clone(), vec![z2.int_smul(2, &z2.gen_el(0))])
            .expect("x2 well defined");
        assert!(tw.is_zero_map());

        // 1 ↦ gen : Z -> Z/2 accepted.
        ModuleMap::new(free.clone(), z2.clone(), vec![z2.gen_el(0)]).expect("projection");

        // gen ↦ 1 : Z/2 -> Z rejected (2·1 ≠ 0).
        assert!(ModuleMap::new(z2, free.clone(), vec![free.gen_el(0)]).is_err());
    }

    #[test]
    fn iso_checks() {
        let zz = z();
        let free = FPModule::ring_module(zz.clone());
        assert!(ModuleMap::identity(&free).is_isomorphism());
        assert!(!ModuleMap::scalar(&free, 2).is_isomorphism());

        // ×3 on Z/2 is an isomorphism.
        let z2 = FPModule::new(zz, 1, vec![vec![z().int(2)]]);
        assert!(ModuleMap::scalar(&z2, 3).is_isomorphism());
    }
}
