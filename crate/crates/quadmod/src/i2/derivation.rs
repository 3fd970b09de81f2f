//! Quadratic derivations and their factorization through I₂.
//!
//! A quadratic derivation d: R → M satisfies
//!   d(r+s) = d(r) + d(s) + rs·d(2)
//!   d(rs)  = r·d(s) + s²·d(r)
//! and D(r) = r²−r is the universal one: every d factors uniquely as λ∘D for
//! an R-linear λ: I₂ → M.

use crate::error::Result;
use crate::i2::ideal::{universal_derivation, IdealI2};
use crate::module::{FPModule, ModuleElement, ModuleMap};
use crate::ring::RingElement;

/// A derivation given by its values on the I₂ generator labels.
#[derive(Clone, Debug)]
pub struct DerivationSpec {
    pub target: FPModule,
    /// One value per I₂ generator label (`t_*`, `t_0`, ...).
    pub values: Vec<ModuleElement>,
}

impl DerivationSpec {
    /// The induced evaluator `d(r) = Σ_s coord_s(D(r)) · value_s`.
    pub fn eval(&self, i2: &IdealI2, r: &RingElement) -> ModuleElement {
        let coords = universal_derivation(i2, r);
        let mut acc = self.target.zero_el();
        for (s, c) in coords.coords.iter().enumerate() {
            acc = self
                .target
                .add_el(&acc, &self.target.smul(c, &self.values[s]));
        }
        acc
    }

    /// The derivation `r ↦ D(r)·m₀` for a fixed module element; always valid.
    pub fn from_element(i2: &IdealI2, target: &FPModule, m0: &ModuleElement) -> DerivationSpec {
        let values = i2
            .generator_elements
            .iter()
            .map(|g| target.smul(g, m0))
            .collect();
        DerivationSpec {
            target: target.clone(),
            values,
        }
    }
}

/// Checks the two defining relations of a quadratic derivation on all sample
/// pairs, for an arbitrary black-box evaluator.
pub fn derivation_check<F>(
    target: &FPModule,
    d: F,
    samples: &[RingElement],
) -> bool
where
    F: Fn(&RingElement) -> ModuleElement,
{
    let ring = target.ring().clone();
    let d2 = d(&ring.int(2));
    for r in samples {
        for s in samples {
            let lhs = d(&ring.add(r, s));
            let rhs = target.add_el(
                &target.add_el(&d(r), &d(s)),
                &target.smul(&ring.mul(r, s), &d2),
            );
            if !target.eq(&lhs, &rhs) {
                return false;
            }
            let lhs = d(&ring.mul(r, s));
            let rhs = target.add_el(
                &target.smul(r, &d(s)),
                &target.smul(&ring.mul(s, s), &d(r)),
            );
            if !target.eq(&lhs, &rhs) {
                return false;
            }
        }
    }
    true
}

/// Checks a spec-backed derivation on samples.
pub fn derivation_check_spec(i2: &IdealI2, spec: &DerivationSpec, samples: &[RingElement]) -> bool {
    derivation_check(&spec.target, |r| spec.eval(i2, r), samples)
}

/// Factors a derivation spec through the universal one: λ: I₂ → M with
/// λ∘D = d. Ill-defined specs (values violating an I₂ relation) are rejected
/// with the offending relation.
pub fn factor_derivation(i2: &IdealI2, spec: &DerivationSpec) -> Result<ModuleMap> {
    ModuleMap::new(
        i2.module.clone(),
        spec.target.clone(),
        spec.values.clone(),
    )
}
