//! The quadratic functor objects Sym², Λ², Γ² and P² on finitely presented
//! modules, with labeled generators and the canonical (nonlinear) evaluators.
//!
//! On a free module the objects are the labeled free (or I₂-presented)
//! modules:
//!   Sym²(R^g): e_i e_j (i ≤ j)          Λ²(R^g): e_i ∧ e_j (i < j)
//!   Γ²(R^g):  γ(e_i), cr_{ij} (i < j)
//!   P²(R^g):  u_i, ι_i(t_s), c_{ij}     — one I₂ block per generator.
//! On a presented module M = coker(u₁: M₁ → M₀) the object is the cokernel
//! of the induced map on the free layer together with its bilinear cross
//! part, the right-exactness formula for quadratic functors.

use crate::i2::{i2_ideal, universal_derivation, IdealI2};
use crate::module::{FPModule, ModuleElement, ModuleMap};
use crate::ring::RingElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctorTag {
    Sym2,
    Lambda2,
    Gamma2,
    P2,
}

impl FunctorTag {
    pub fn token(&self) -> &'static str {
        match self {
            FunctorTag::Sym2 => "sym2",
            FunctorTag::Lambda2 => "lambda2",
            FunctorTag::Gamma2 => "gamma2",
            FunctorTag::P2 => "p2",
        }
    }

    pub fn from_token(t: &str) -> Option<FunctorTag> {
        match t {
            "sym2" => Some(FunctorTag::Sym2),
            "lambda2" => Some(FunctorTag::Lambda2),
            "gamma2" => Some(FunctorTag::Gamma2),
            "p2" => Some(FunctorTag::P2),
            _ => None,
        }
    }
}

/// A functor value F(M) with its generator layout. Generators are indexed by
/// the labels of F(M₀) for the source presentation M₀ ↠ M.
#[derive(Clone, Debug)]
pub struct FunctorObject {
    pub tag: FunctorTag,
    pub module: FPModule,
    /// The module the object was built from.
    pub source: FPModule,
    /// Generator count of the source presentation.
    pub g: usize,
    /// Number of I₂ generators (P² layout only; 0 otherwise).
    pub t: usize,
}

impl FunctorObject {
    // ----- generator indexing -----

    /// Sym² index of `e_i e_j`, i ≤ j.
    pub fn sym_idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(matches!(self.tag, FunctorTag::Sym2));
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        sym_pair_index(self.g, i, j)
    }

    /// Λ² index of `e_i ∧ e_j`, i < j.
    pub fn wedge_idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(matches!(self.tag, FunctorTag::Lambda2));
        wedge_pair_index(self.g, i, j)
    }

    /// Γ² index of `γ(e_i)`.
    pub fn gamma_idx(&self, i: usize) -> usize {
        debug_assert!(matches!(self.tag, FunctorTag::Gamma2));
        i
    }

    /// Γ² index of `cr_{ij}`, i < j.
    pub fn cross_idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(matches!(self.tag, FunctorTag::Gamma2));
        self.g + wedge_pair_index(self.g, i, j)
    }

    /// P² index of `u_i`.
    pub fn u_idx(&self, i: usize) -> usize {
        debug_assert!(matches!(self.tag, FunctorTag::P2));
        i
    }

    /// P² index of `ι_i(t_s)`.
    pub fn iota_idx(&self, i: usize, s: usize) -> usize {
        debug_assert!(matches!(self.tag, FunctorTag::P2));
        self.g + i * self.t + s
    }

    /// P² index of `c_{ij}`, i < j.
    pub fn c_idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(matches!(self.tag, FunctorTag::P2));
        self.g + self.g * self.t + wedge_pair_index(self.g, i, j)
    }

    // ----- canonical evaluators -----

    /// `x·y` in Sym²(M).
    pub fn sym_product(&self, x: &ModuleElement, y: &ModuleElement) -> ModuleElement {
        let ring = self.module.ring();
        let mut out = self.module.zero_el();
        for i in 0..self.g {
            for j in i..self.g {
                let coeff = if i == j {
                    ring.mul(&x.coords[i], &y.coords[i])
                } else {
                    ring.add(
                        &ring.mul(&x.coords[i], &y.coords[j]),
                        &ring.mul(&x.coords[j], &y.coords[i]),
                    )
                };
                let idx = sym_pair_index(self.g, i, j);
                out.coords[idx] = ring.add(&out.coords[idx], &coeff);
            }
        }
        out
    }

    /// `x∧y` in Λ²(M).
    pub fn wedge(&self, x: &ModuleElement, y: &ModuleElement) -> ModuleElement {
        let ring = self.module.ring();
        let mut out = self.module.zero_el();
        for i in 0..self.g {
            for j in (i + 1)..self.g {
                let coeff = ring.sub(
                    &ring.mul(&x.coords[i], &y.coords[j]),
                    &ring.mul(&x.coords[j], &y.coords[i]),
                );
                let idx = wedge_pair_index(self.g, i, j);
                out.coords[idx] = ring.add(&out.coords[idx], &coeff);
            }
        }
        out
    }

    /// `γ₂(x)` in Γ²(M): Σ x_i² γ(e_i) + Σ_{i<j} x_i x_j cr_{ij}.
    pub fn gamma(&self, x: &ModuleElement) -> ModuleElement {
        let ring = self.module.ring();
        let mut out = self.module.zero_el();
        for i in 0..self.g {
            out.coords[i] = ring.mul(&x.coords[i], &x.coords[i]);
        }
        for i in 0..self.g {
            for j in (i + 1)..self.g {
                out.coords[self.g + wedge_pair_index(self.g, i, j)] =
                    ring.mul(&x.coords[i], &x.coords[j]);
            }
        }
        out
    }

    /// `γ₁(x)γ₁(y)` in Γ²(M): the bilinear cross term of γ₂.
    pub fn gamma_cross(&self, x: &ModuleElement, y: &ModuleElement) -> ModuleElement {
        let ring = self.module.ring();
        let mut out = self.module.zero_el();
        for i in 0..self.g {
            let two_xy = ring.scale(&2.into(), &ring.mul(&x.coords[i], &y.coords[i]));
            out.coords[i] = two_xy;
        }
        for i in 0..self.g {
            for j in (i + 1)..self.g {
                out.coords[self.g + wedge_pair_index(self.g, i, j)] = ring.add(
                    &ring.mul(&x.coords[i], &y.coords[j]),
                    &ring.mul(&x.coords[j], &y.coords[i]),
                );
            }
        }
        out
    }

    /// `p(x)` in P²(M): Σ [x_i u_i + ι_i(D(x_i))] + Σ_{i<j} x_i x_j c_{ij}.
    pub fn p_of(&self, i2: &IdealI2, x: &ModuleElement) -> ModuleElement {
        let ring = self.module.ring();
        let mut out = self.module.zero_el();
        for i in 0..self.g {
            out.coords[self.u_idx(i)] = x.coords[i].clone();
            let d = universal_derivation(i2, &x.coords[i]);
            for s in 0..self.t {
                out.coords[self.iota_idx(i, s)] = d.coords[s].clone();
            }
        }
        for i in 0..self.g {
            for j in (i + 1)..self.g {
                out.coords[self.c_idx(i, j)] = ring.mul(&x.coords[i], &x.coords[j]);
            }
        }
        out
    }

    /// `d_p(x,y)` in P²(M): bilinear with d_p(e_i,e_i) = ι_i(2) and
    /// d_p(e_i,e_j) = c_{ij}.
    pub fn dp(&self, x: &ModuleElement, y: &ModuleElement) -> ModuleElement {
        let ring = self.module.ring();
        let mut out = self.module.zero_el();
        for i in 0..self.g {
            // ι_i(t_*) coefficient x_i·y_i (t_* is the generator "2").
            out.coords[self.iota_idx(i, 0)] = ring.mul(&x.coords[i], &y.coords[i]);
        }
        for i in 0..self.g {
            for j in (i + 1)..self.g {
                out.coords[self.c_idx(i, j)] = ring.add(
                    &ring.mul(&x.coords[i], &y.coords[j]),
                    &ring.mul(&x.coords[j], &y.coords[i]),
                );
            }
        }
        out
    }

    /// `p(rx) − r·p(x)` in P²(M): Σ_i ι_i(x_i²·D(r)) + (r²−r)·Σ x_i x_j c_{ij}.
    pub fn p_cross_action(
        &self,
        i2: &IdealI2,
        r: &RingElement,
        x: &ModuleElement,
    ) -> ModuleElement {
        let ring = self.module.ring();
        let d_r = universal_derivation(i2, r);
        let r2_minus_r = ring.sub(&ring.mul(r, r), r);
        let mut out = self.module.zero_el();
        for i in 0..self.g {
            let xi_sq = ring.mul(&x.coords[i], &x.coords[i]);
            for s in 0..self.t {
                out.coords[self.iota_idx(i, s)] = ring.mul(&xi_sq, &d_r.coords[s]);
            }
        }
        for i in 0..self.g {
            for j in (i + 1)..self.g {
                let xixj = ring.mul(&x.coords[i], &x.coords[j]);
                out.coords[self.c_idx(i, j)] = ring.mul(&r2_minus_r, &xixj);
            }
        }
        out
    }

    /// `ι_i(t)` for an I₂ class given by coordinates.
    pub fn iota(&self, i: usize, t_coords: &ModuleElement) -> ModuleElement {
        let mut out = self.module.zero_el();
        for s in 0..self.t {
            out.coords[self.iota_idx(i, s)] = t_coords.coords[s].clone();
        }
        out
    }
}

fn sym_pair_index(g: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < g);
    i * g - i * (i + 1) / 2 + j
}

fn wedge_pair_index(g: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < g);
    i * g - i * (i + 3) / 2 + j - 1
}

fn sym_labels(g: usize, src: &[String]) -> Vec<String> {
    let mut labels = Vec::new();
    for i in 0..g {
        for j in i..g {
            labels.push(format!("{}·{}", src[i], src[j]));
        }
    }
    labels
}

fn wedge_labels(g: usize, src: &[String]) -> Vec<String> {
    let mut labels = Vec::new();
    for i in 0..g {
        for j in (i + 1)..g {
            labels.push(format!("{}∧{}", src[i], src[j]));
        }
    }
    labels
}

fn gamma_labels(g: usize, src: &[String]) -> Vec<String> {
    let mut labels: Vec<String> = (0..g).map(|i| format!("γ({})", src[i])).collect();
    for i in 0..g {
        for j in (i + 1)..g {
            labels.push(format!("cr({},{})", src[i], src[j]));
        }
    }
    labels
}

fn p2_labels(g: usize, src: &[String], i2_labels: &[String]) -> Vec<String> {
    let mut labels: Vec<String> = (0..g).map(|i| format!("u({})", src[i])).collect();
    for i in 0..g {
        for ts in i2_labels {
            labels.push(format!("ι{}({})", i, ts));
        }
    }
    for i in 0..g {
        for j in (i + 1)..g {
            labels.push(format!("c({},{})", src[i], src[j]));
        }
    }
    labels
}

/// F(M) for the presentation carried by `M`, with the supplied I₂ data.
pub fn functor_object_with_i2(tag: FunctorTag, m: &FPModule, i2: &IdealI2) -> FunctorObject {
    let ring = m.ring().clone();
    let g = m.gens();
    let t = if matches!(tag, FunctorTag::P2) {
        i2.gens()
    } else {
        0
    };
    let gens = match tag {
        FunctorTag::Sym2 => g * (g + 1) / 2,
        FunctorTag::Lambda2 => g * g.saturating_sub(1) / 2,
        FunctorTag::Gamma2 => g + g * g.saturating_sub(1) / 2,
        FunctorTag::P2 => g + g * t + g * g.saturating_sub(1) / 2,
    };
    let labels = match tag {
        FunctorTag::Sym2 => sym_labels(g, m.labels()),
        FunctorTag::Lambda2 => wedge_labels(g, m.labels()),
        FunctorTag::Gamma2 => gamma_labels(g, m.labels()),
        FunctorTag::P2 => p2_labels(g, m.labels(), i2.module.labels()),
    };

    // Base relations: the I₂ presentation in every ι-block of P².
    let mut rels: Vec<Vec<RingElement>> = Vec::new();
    if matches!(tag, FunctorTag::P2) {
        for rel in i2.module.rels() {
            for i in 0..g {
                let mut col = vec![ring.zero(); gens];
                for s in 0..t {
                    // iota_idx(i, s) = g + i*t + s
                    col[g + i * t + s] = rel[s].clone();
                }
                rels.push(col);
            }
        }
    }

    // Free layer object used for evaluating the relation images.
    let skeleton = FunctorObject {
        tag,
        module: FPModule::with_labels(ring.clone(), gens, rels.clone(), labels.clone()),
        source: m.clone(),
        g,
        t,
    };

    // Relations induced by the presentation of M: the functor applied to the
    // relation map plus the bilinear cross part.
    let rel_cols = m.rels();
    if !rel_cols.is_empty() {
        let mut extra: Vec<Vec<RingElement>> = Vec::new();
        match tag {
            FunctorTag::Sym2 => {
                for s in 0..rel_cols.len() {
                    for tt in s..rel_cols.len() {
                        let qs = m.el(rel_cols[s].clone());
                        let qt = m.el(rel_cols[tt].clone());
                        extra.push(skeleton.sym_product(&qs, &qt).coords);
                    }
                }
                for i in 0..g {
                    for q in rel_cols {
                        let ei = m.gen_el(i);
                        extra.push(skeleton.sym_product(&ei, &m.el(q.clone())).coords);
                    }
                }
            }
            FunctorTag::Lambda2 => {
                for s in 0..rel_cols.len() {
                    for tt in (s + 1)..rel_cols.len() {
                        let qs = m.el(rel_cols[s].clone());
                        let qt = m.el(rel_cols[tt].clone());
                        extra.push(skeleton.wedge(&qs, &qt).coords);
                    }
                }
                for i in 0..g {
                    for q in rel_cols {
                        extra.push(skeleton.wedge(&m.gen_el(i), &m.el(q.clone())).coords);
                    }
                }
            }
            FunctorTag::Gamma2 => {
                for q in rel_cols {
                    extra.push(skeleton.gamma(&m.el(q.clone())).coords);
                }
                for s in 0..rel_cols.len() {
                    for tt in (s + 1)..rel_cols.len() {
                        let qs = m.el(rel_cols[s].clone());
                        let qt = m.el(rel_cols[tt].clone());
                        extra.push(skeleton.gamma_cross(&qs, &qt).coords);
                    }
                }
                for i in 0..g {
                    for q in rel_cols {
                        extra.push(skeleton.gamma_cross(&m.gen_el(i), &m.el(q.clone())).coords);
                    }
                }
            }
            FunctorTag::P2 => {
                // P²(u₁) on the generators of P²(M₁) ...
                for q in rel_cols {
                    extra.push(skeleton.p_of(i2, &m.el(q.clone())).coords);
                }
                for q in rel_cols {
                    for s in 0..t {
                        extra.push(
                            skeleton
                                .p_cross_action(i2, &i2.witnesses[s], &m.el(q.clone()))
                                .coords,
                        );
                    }
                }
                for s in 0..rel_cols.len() {
                    for tt in (s + 1)..rel_cols.len() {
                        let qs = m.el(rel_cols[s].clone());
                        let qt = m.el(rel_cols[tt].clone());
                        extra.push(skeleton.dp(&qs, &qt).coords);
                    }
                }
                // ... plus the cross part w(m₁⊗m) = d_p(u₁(m₁), m).
                for q in rel_cols {
                    for i in 0..g {
                        extra.push(skeleton.dp(&m.el(q.clone()), &m.gen_el(i)).coords);
                    }
                }
            }
        }
        rels.extend(extra);
    }

    FunctorObject {
        tag,
        module: FPModule::with_labels(ring, gens, rels, labels),
        source: m.clone(),
        g,
        t,
    }
}

pub fn functor_object(tag: FunctorTag, m: &FPModule) -> FunctorObject {
    let i2 = i2_ideal(m.ring());
    functor_object_with_i2(tag, m, &i2)
}

/// F(f) for a module map, on the canonical generators.
pub fn functor_map_with(
    tag: FunctorTag,
    f: &ModuleMap,
    i2: &IdealI2,
    dom: &FunctorObject,
    cod: &FunctorObject,
) -> crate::error::Result<ModuleMap> {
    assert_eq!(dom.tag, tag);
    assert_eq!(cod.tag, tag);
    let g = dom.g;
    let mut cols: Vec<ModuleElement> = Vec::new();
    let fc = |i: usize| -> ModuleElement { f.columns()[i].clone() };
    match tag {
        FunctorTag::Sym2 => {
            for i in 0..g {
                for j in i..g {
                    cols.push(cod.sym_product(&fc(i), &fc(j)));
                }
            }
        }
        FunctorTag::Lambda2 => {
            for i in 0..g {
                for j in (i + 1)..g {
                    cols.push(cod.wedge(&fc(i), &fc(j)));
                }
            }
        }
        FunctorTag::Gamma2 => {
            for i in 0..g {
                cols.push(cod.gamma(&fc(i)));
            }
            for i in 0..g {
                for j in (i + 1)..g {
                    cols.push(cod.gamma_cross(&fc(i), &fc(j)));
                }
            }
        }
        FunctorTag::P2 => {
            for i in 0..g {
                cols.push(cod.p_of(i2, &fc(i)));
            }
            for i in 0..g {
                for s in 0..dom.t {
                    cols.push(cod.p_cross_action(i2, &i2.witnesses[s], &fc(i)));
                }
            }
            for i in 0..g {
                for j in (i + 1)..g {
                    cols.push(cod.dp(&fc(i), &fc(j)));
                }
            }
        }
    }
    ModuleMap::new(dom.module.clone(), cod.module.clone(), cols)
}

pub fn functor_map(tag: FunctorTag, f: &ModuleMap) -> crate::error::Result<ModuleMap> {
    let i2 = i2_ideal(f.domain().ring());
    let dom = functor_object_with_i2(tag, f.domain(), &i2);
    let cod = functor_object_with_i2(tag, f.codomain(), &i2);
    functor_map_with(tag, f, &i2, &dom, &cod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::ModuleMap;
    use crate::ring::presets::*;
    use num_bigint::BigInt;

    #[test]
    fn p2_of_z_is_free_rank_2() {
        let m = FPModule::ring_module(z());
        let p2 = functor_object(FunctorTag::P2, &m);
        assert_eq!(p2.module.invariants(), vec![BigInt::from(0); 2]);
        // p(n) = n·u + C(n,2)·t for n in a small range.
        let i2 = i2_ideal(&z());
        for n in -5..=5i64 {
            let x = m.el(vec![z().int(n)]);
            let p = p2.p_of(&i2, &x);
            let mut expect = p2.module.zero_el();
            expect.coords[p2.u_idx(0)] = z().int(n);
            expect.coords[p2.iota_idx(0, 0)] =
                z().int_big(crate::i2::binomial2(&BigInt::from(n)));
            assert!(p2.module.eq(&p, &expect), "p({}) mismatch", n);
        }
    }

    #[test]
    fn gamma2_of_z2_is_z4() {
        let zz = z();
        let m = FPModule::new(zz.clone(), 1, vec![vec![zz.int(2)]]);
        let g2 = functor_object(FunctorTag::Gamma2, &m);
        assert_eq!(g2.module.invariants(), vec![BigInt::from(4)]);
    }

    #[test]
    fn p2_of_z2_is_z4() {
        let zz = z();
        let m = FPModule::new(zz.clone(), 1, vec![vec![zz.int(2)]]);
        let p2 = functor_object(FunctorTag::P2, &m);
        assert_eq!(p2.module.invariants(), vec![BigInt::from(4)]);
    }

    #[test]
    fn p2_equals_gamma2_in_char_2() {
        // Over F2 with M = F2²: P²(M) ≅ Γ²(M), both of order 8.
        let f = f2();
        let m = FPModule::free(f.clone(), 2);
        let p2 = functor_object(FunctorTag::P2, &m);
        let g2 = functor_object(FunctorTag::Gamma2, &m);
        assert_eq!(p2.module.invariants(), vec![BigInt::from(2); 3]);
        assert_eq!(g2.module.invariants(), vec![BigInt::from(2); 3]);
    }

    #[test]
    fn quadraticity_relations_of_p() {
        // defadd1P, defadd2P, defscal1P hold for sampled elements.
        for ring in [z(), zmod(4), z_sqrt2()] {
            let i2 = i2_ideal(&ring);
            let m = FPModule::new(ring.clone(), 2, vec![vec![ring.int(4), ring.int(0)]]);
            let p2 = functor_object_with_i2(FunctorTag::P2, &m, &i2);
            let p = |x: &ModuleElement| p2.p_of(&i2, x);
            let els = crate::module::small_elements(&m);
            let rs: Vec<RingElement> = vec![ring.int(2), ring.int(-1), ring.basis_el(ring.rank() - 1)];
            for x in els.iter().take(4) {
                for y in els.iter().take(4) {
                    for zel in els.iter().take(3) {
                        // p(x+y+z)−p(x+y)−p(y+z)−p(x+z)+p(x)+p(y)+p(z) = 0
                        let xy = m.add_el(x, y);
                        let yz = m.add_el(y, zel);
                        let xz = m.add_el(x, zel);
                        let xyz = m.add_el(&xy, zel);
                        let mut acc = p(&xyz);
                        for t in [&xy, &yz, &xz] {
                            acc = p2.module.sub_el(&acc, &p(t));
                        }
                        for t in [x, y, zel] {
                            acc = p2.module.add_el(&acc, &p(t));
                        }
                        assert!(p2.module.is_zero_el(&acc), "defadd1P fails");
                    }
                    for r in &rs {
                        for s in &rs {
                            // p(rx+sy)−p(rx)−p(sy)−rs[p(x+y)−p(x)−p(y)] = 0
                            let rx = m.smul(r, x);
                            let sy = m.smul(s, y);
                            let mut acc = p(&m.add_el(&rx, &sy));
                            acc = p2.module.sub_el(&acc, &p(&rx));
                            acc = p2.module.sub_el(&acc, &p(&sy));
                            let rs_el = ring.mul(r, s);
                            let mut inner = p(&m.add_el(x, y));
                            inner = p2.module.sub_el(&inner, &p(x));
                            inner = p2.module.sub_el(&inner, &p(y));
                            acc = p2.module.sub_el(&acc, &p2.module.smul(&rs_el, &inner));
                            assert!(p2.module.is_zero_el(&acc), "defadd2P fails");

                            // p(rsx)−r²p(sx)−s·p(rx)+r²s·p(x) = 0
                            let mut acc = p(&m.smul(&rs_el, x));
                            let r2 = ring.mul(r, r);
                            acc = p2
                                .module
                                .sub_el(&acc, &p2.module.smul(&r2, &p(&m.smul(s, x))));
                            acc = p2.module.sub_el(&acc, &p2.module.smul(s, &p(&rx)));
                            acc = p2
                                .module
                                .add_el(&acc, &p2.module.smul(&ring.mul(&r2, s), &p(x)));
                            assert!(p2.module.is_zero_el(&acc), "defscal1P fails");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn functor_maps_are_functorial() {
        let zz = z();
        let m = FPModule::free(zz.clone(), 2);
        for tag in [
            FunctorTag::Sym2,
            FunctorTag::Lambda2,
            FunctorTag::Gamma2,
            FunctorTag::P2,
        ] {
            let id = functor_map(tag, &ModuleMap::identity(&m)).unwrap();
            let obj = functor_object(tag, &m);
            assert!(id.equals(&ModuleMap::identity(&obj.module)), "{:?}", tag);
        }
        // sym2(×2: Z→Z) = ×4.
        let free = FPModule::ring_module(zz.clone());
        let s = functor_map(FunctorTag::Sym2, &ModuleMap::scalar(&free, 2)).unwrap();
        let obj = functor_object(FunctorTag::Sym2, &free);
        assert!(s.equals(&ModuleMap::scalar(&obj.module, 4)));

        // p2(×2: Z→Z): u ↦ 2u + t, with D(2) = 2 = t_*.
        let p = functor_map(FunctorTag::P2, &ModuleMap::scalar(&free, 2)).unwrap();
        let pobj = functor_object(FunctorTag::P2, &free);
        let u_image = &p.columns()[pobj.u_idx(0)];
        let mut expect = pobj.module.zero_el();
        expect.coords[pobj.u_idx(0)] = zz.int(2);
        expect.coords[pobj.iota_idx(0, 0)] = zz.int(1);
        assert!(pobj.module.eq(u_image, &expect));

        // functoriality on a composite over a presented module.
        let z4 = FPModule::new(zz.clone(), 1, vec![vec![zz.int(4)]]);
        let f = ModuleMap::new(free.clone(), z4.clone(), vec![z4.gen_el(0)]).unwrap();
        let g = ModuleMap::scalar(&z4, 3);
        for tag in [FunctorTag::Sym2, FunctorTag::Gamma2, FunctorTag::P2] {
            let ff = functor_map(tag, &f).unwrap();
            let gg = functor_map(tag, &g).unwrap();
            let gf = functor_map(tag, &g.compose(&f)).unwrap();
            assert!(gg.compose(&ff).equals(&gf), "functoriality {:?}", tag);
        }
    }

    #[test]
    fn direct_sum_formula_for_p2() {
        // invariants(P²(M⊕N)) = invariants(P²(M) ⊕ P²(N) ⊕ (M⊗N)).
        let zz = z();
        let m = FPModule::new(zz.clone(), 1, vec![vec![zz.int(2)]]);
        let n = FPModule::ring_module(zz.clone());
        let sum = crate::module::direct_sum(&m, &n).module;
        let lhs = functor_object(FunctorTag::P2, &sum).module.invariants();
        let pm = functor_object(FunctorTag::P2, &m).module;
        let pn = functor_object(FunctorTag::P2, &n).module;
        let tensor_mn = crate::module::tensor(&m, &n);
        let s1 = crate::module::direct_sum(&pm, &pn).module;
        let rhs = crate::module::direct_sum(&s1, &tensor_mn).module.invariants();
        assert_eq!(lhs, rhs);
    }
}
