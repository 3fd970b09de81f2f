//! The cocycle model of P²(M): the set K(M) × M with twisted operations
//!   (k,x) + (k',y) = (k + k' − θ₁(x·y), x + y)
//!   r·(k,x) = (r·k − θ₂((r²−r)⊗γ₂(x)), r·x)
//! together with the correspondence (k,x) ↔ φ(k) + p(x) with P²(M).

use crate::i2::universal_derivation;
use crate::module::ModuleElement;
use crate::ring::RingElement;

use super::structure::{KModules, QuadSuite};

pub struct CocycleModel<'a> {
    pub suite: &'a QuadSuite,
    pub k: KModules,
}

/// An element (k, x) of the model.
#[derive(Clone, Debug)]
pub struct ModelElement {
    pub k: ModuleElement,
    pub x: ModuleElement,
}

impl<'a> CocycleModel<'a> {
    pub fn new(suite: &'a QuadSuite) -> CocycleModel<'a> {
        CocycleModel {
            suite,
            k: suite.k_modules().clone(),
        }
    }

    pub fn zero(&self) -> ModelElement {
        ModelElement {
            k: self.k.k.zero_el(),
            x: self.suite.m.zero_el(),
        }
    }

    /// (0, x): the image of the canonical quadratic map.
    pub fn of_m(&self, x: &ModuleElement) -> ModelElement {
        ModelElement {
            k: self.k.k.zero_el(),
            x: x.clone(),
        }
    }

    pub fn add(&self, a: &ModelElement, b: &ModelElement) -> ModelElement {
        let m = &self.suite.m;
        let xy = self.suite.sym2.sym_product(&a.x, &b.x);
        let theta1_xy = self.k.theta1.apply(&xy);
        let k = self.k.k.sub_el(&self.k.k.add_el(&a.k, &b.k), &theta1_xy);
        ModelElement {
            k,
            x: m.add_el(&a.x, &b.x),
        }
    }

    pub fn smul(&self, r: &RingElement, a: &ModelElement) -> ModelElement {
        let suite = self.suite;
        let d_r = universal_derivation(&suite.i2, r);
        let gamma_x = suite.gamma2.gamma(&a.x);
        let twist = self.k.theta2.apply(&suite.i2_gamma2_elem(&d_r, &gamma_x));
        let k = self.k.k.sub_el(&self.k.k.smul(r, &a.k), &twist);
        ModelElement {
            k,
            x: suite.m.smul(r, &a.x),
        }
    }

    /// Equality in the model: componentwise (the underlying set is K(M)×M).
    pub fn eq(&self, a: &ModelElement, b: &ModelElement) -> bool {
        self.k.k.eq(&a.k, &b.k) && self.suite.m.eq(&a.x, &b.x)
    }

    /// The correspondence into P²(M): (k,x) ↦ φ(k) + p(x).
    pub fn to_p2(&self, a: &ModelElement) -> ModuleElement {
        let p_x = self.suite.p2.p_of(&self.suite.i2, &a.x);
        self.suite.p2.module.add_el(&self.k.phi.apply(&a.k), &p_x)
    }

    /// Checks that the correspondence is additive and R-linear on the given
    /// samples, i.e. that model operations mirror P² operations.
    pub fn agrees_on(&self, xs: &[ModuleElement], rs: &[RingElement]) -> bool {
        let p2 = &self.suite.p2.module;
        for x in xs {
            for y in xs {
                let lhs = self.to_p2(&self.add(&self.of_m(x), &self.of_m(y)));
                let rhs = p2.add_el(
                    &self.to_p2(&self.of_m(x)),
                    &self.to_p2(&self.of_m(y)),
                );
                if !p2.eq(&lhs, &rhs) {
                    return false;
                }
            }
            for r in rs {
                let lhs = self.to_p2(&self.smul(r, &self.of_m(x)));
                let rhs = p2.smul(r, &self.to_p2(&self.of_m(x)));
                if !p2.eq(&lhs, &rhs) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks the R-module axioms of the twisted operations on samples.
    pub fn module_axioms_on(&self, samples: &[ModelElement], rs: &[RingElement]) -> bool {
        let ring = &self.suite.ring;
        for a in samples {
            // 1·a = a and 0·a = 0-ish (0·a = (−θ₂(D(0)⊗γx), 0) = (0,0)).
            if !self.eq(&self.smul(&ring.one(), a), a) {
                return false;
            }
            for b in samples {
                if !self.eq(&self.add(a, b), &self.add(b, a)) {
                    return false;
                }
                for c in samples {
                    let l = self.add(&self.add(a, b), c);
                    let r = self.add(a, &self.add(b, c));
                    if !self.eq(&l, &r) {
                        return false;
                    }
                }
                for r in rs {
                    let l = self.smul(r, &self.add(a, b));
                    let rr = self.add(&self.smul(r, a), &self.smul(r, b));
                    if !self.eq(&l, &rr) {
                        return false;
                    }
                }
            }
            for r in rs {
                for s in rs {
                    // (r+s)·a = r·a + s·a and (rs)·a = r·(s·a).
                    let l = self.smul(&ring.add(r, s), a);
                    let rr = self.add(&self.smul(r, a), &self.smul(s, a));
                    if !self.eq(&l, &rr) {
                        return false;
                    }
                    let l = self.smul(&ring.mul(r, s), a);
                    let rr = self.smul(r, &self.smul(s, a));
                    if !self.eq(&l, &rr) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The generators of P²(M) are hit by model elements:
    /// u_i ↔ (0, e_i), ι_i(t_s) ↔ (θ₂(t_s⊗γ(e_i)), 0), c_{ij} ↔ (θ₁(e_ie_j), 0).
    pub fn generators_correspond(&self) -> bool {
        let suite = self.suite;
        let p2 = &suite.p2.module;
        let g = suite.m.gens();
        for i in 0..g {
            let lhs = self.to_p2(&self.of_m(&suite.m.gen_el(i)));
            let p_ei = suite.p2.p_of(&suite.i2, &suite.m.gen_el(i));
            if !p2.eq(&lhs, &p_ei) {
                return false;
            }
            for s in 0..suite.i2.gens() {
                let t_s = suite.i2.module.gen_el(s);
                let gamma_ei = suite.gamma2.gamma(&suite.m.gen_el(i));
                let model = ModelElement {
                    k: self.k.theta2.apply(&suite.i2_gamma2_elem(&t_s, &gamma_ei)),
                    x: suite.m.zero_el(),
                };
                let mut iota = p2.zero_el();
                iota.coords[suite.p2.iota_idx(i, s)] = suite.ring.one();
                if !p2.eq(&self.to_p2(&model), &iota) {
                    return false;
                }
            }
            for j in (i + 1)..g {
                let eiej = suite.sym2.sym_product(&suite.m.gen_el(i), &suite.m.gen_el(j));
                let model = ModelElement {
                    k: self.k.theta1.apply(&eiej),
                    x: suite.m.zero_el(),
                };
                let mut c = p2.zero_el();
                c.coords[suite.p2.c_idx(i, j)] = suite.ring.one();
                if !p2.eq(&self.to_p2(&model), &c) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{small_elements, FPModule};
    use crate::ring::presets::*;

    #[test]
    fn unit_scalar_fixes_elements() {
        let zz = z();
        let m = FPModule::new(zz.clone(), 1, vec![vec![zz.int(4)]]);
        let suite = QuadSuite::new(&m);
        let model = CocycleModel::new(&suite);
        let a = ModelElement {
            k: model.k.k.gen_el(0),
            x: m.gen_el(0),
        };
        assert!(model.eq(&model.smul(&zz.one(), &a), &a));
    }

    #[test]
    fn model_matches_p2_operations() {
        for ring in [z(), f3(), z_sqrt2()] {
            let m = FPModule::new(ring.clone(), 2, vec![vec![ring.int(2), ring.one()]]);
            let suite = QuadSuite::new(&m);
            let model = CocycleModel::new(&suite);
            let xs = small_elements(&m);
            let rs = vec![ring.one(), ring.int(2), ring.int(-1), ring.basis_el(ring.rank() - 1)];
            assert!(model.agrees_on(&xs, &rs), "agreement over {}", ring.name());
            assert!(model.generators_correspond(), "generators over {}", ring.name());
        }
    }

    #[test]
    fn model_is_a_module() {
        let zz = zmod(4);
        let m = FPModule::new(zz.clone(), 1, vec![vec![zz.int(2)]]);
        let suite = QuadSuite::new(&m);
        let model = CocycleModel::new(&suite);
        let samples: Vec<ModelElement> = small_elements(&m)
            .into_iter()
            .take(4)
            .flat_map(|x| {
                let a = model.of_m(&x);
                let b = ModelElement {
                    k: model.k.k.gen_el(0),
                    x: x.clone(),
                };
                [a, b]
            })
            .collect();
        let rs = vec![zz.one(), zz.int(2), zz.int(3)];
        assert!(model.module_axioms_on(&samples, &rs));
    }

    #[test]
    fn binomial_ring_model_reduces_to_sym2() {
        // Over Z (2-binomial): p(x)+p(−x) corresponds to (x², 0)-type data:
        // to_p2 of (0,x)+(0,−x) equals p(x)+p(−x).
        let zz = z();
        let m = FPModule::ring_module(zz.clone());
        let suite = QuadSuite::new(&m);
        let model = CocycleModel::new(&suite);
        let x = m.gen_el(0);
        let minus_x = m.neg_el(&x);
        let lhs = model.to_p2(&model.add(&model.of_m(&x), &model.of_m(&minus_x)));
        let p2 = &suite.p2.module;
        let rhs = p2.add_el(
            &suite.p2.p_of(&suite.i2, &x),
            &suite.p2.p_of(&suite.i2, &minus_x),
        );
        assert!(p2.eq(&lhs, &rhs));
        // and the k-component of the sum is θ₁(x·x) up to sign.
        let sum = model.add(&model.of_m(&x), &model.of_m(&minus_x));
        let xx = suite.sym2.sym_product(&x, &x);
        let expect = model.k.k.smul(&zz.int(1), &model.k.theta1.apply(&xx));
        assert!(model.k.k.eq(&sum.k, &expect));
    }
}
