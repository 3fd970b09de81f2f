//! Analysis of explicit maps between free modules: cross-effects,
//! cross-actions, the quadraticity test, linear/homogeneous decomposition and
//! factorization through P².
//!
//! Maps are given componentwise as `P/d` where P is a polynomial with
//! ring-element coefficients and zero constant term, and d is a positive
//! integer denominator (d > 1 only over rings without d-torsion, which makes
//! the symbolic identities for P/d equivalent to exact-division statements
//! about P). This covers honest polynomial maps (d = 1) and the
//! integer-valued maps such as n ↦ C(n,2) = (n²−n)/2 that motivate the whole
//! theory. All identities are checked symbolically: polynomials are
//! normalized to canonical monomial order and coefficients compared as ring
//! elements, which is sound over infinite rings where sampling would not be.

use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

use crate::arith::divide_exact;
use crate::error::{Error, Result};
use crate::functors::{functor_object_with_i2, FunctorObject, FunctorTag};
use crate::i2::{i2_ideal, IdealI2};
use crate::module::{FPModule, ModuleMap};
use crate::ring::{Ring, RingElement};

/// Multivariate polynomial with ring-element coefficients.
#[derive(Clone, Debug)]
pub struct RPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, RingElement>,
}

impl RPoly {
    pub fn zero(nvars: usize) -> RPoly {
        RPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coeff: RingElement) -> RPoly {
        let mut p = RPoly::zero(nvars);
        p.terms.insert(exps, coeff);
        p
    }

    pub fn var(nvars: usize, i: usize, ring: &Ring) -> RPoly {
        let mut exps = vec![0u32; nvars];
        exps[i] = 1;
        RPoly::monomial(nvars, exps, ring.one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &RingElement)> {
        self.terms.iter()
    }

    fn insert(&mut self, ring: &Ring, exps: Vec<u32>, coeff: RingElement) {
        let entry = self.terms.entry(exps).or_insert_with(|| ring.zero());
        *entry = ring.add(entry, &coeff);
    }

    pub fn add(&self, ring: &Ring, other: &RPoly) -> RPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(ring, e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, ring: &Ring) -> RPoly {
        let mut out = RPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), ring.neg(c));
        }
        out
    }

    pub fn sub(&self, ring: &Ring, other: &RPoly) -> RPoly {
        self.add(ring, &other.neg(ring))
    }

    pub fn scale(&self, ring: &Ring, r: &RingElement) -> RPoly {
        let mut out = RPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), ring.mul(r, c));
        }
        out
    }

    pub fn mul(&self, ring: &Ring, other: &RPoly) -> RPoly {
        let mut out = RPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(ring, exps, ring.mul(c1, c2));
            }
        }
        out
    }

    /// Canonical form: coefficients reduced, zero terms dropped.
    pub fn normalize(&self, ring: &Ring) -> RPoly {
        let mut out = RPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if !ring.is_zero_el(c) {
                out.terms.insert(e.clone(), ring.canon(c));
            }
        }
        out
    }

    pub fn is_zero(&self, ring: &Ring) -> bool {
        self.terms.values().all(|c| ring.is_zero_el(c))
    }

    pub fn eq(&self, ring: &Ring, other: &RPoly) -> bool {
        self.sub(ring, other).is_zero(ring)
    }

    /// Substitute each variable by a polynomial over a new variable set.
    pub fn substitute(&self, ring: &Ring, subs: &[RPoly], out_vars: usize) -> RPoly {
        assert_eq!(subs.len(), self.nvars);
        let mut out = RPoly::zero(out_vars);
        for (exps, coeff) in &self.terms {
            let mut term = RPoly::monomial(out_vars, vec![0; out_vars], coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(ring, &subs[i]);
                }
            }
            out = out.add(ring, &term);
        }
        out
    }

    pub fn eval(&self, ring: &Ring, point: &[RingElement]) -> RingElement {
        assert_eq!(point.len(), self.nvars);
        let mut acc = ring.zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = ring.mul(&term, &point[i]);
                }
            }
            acc = ring.add(&acc, &term);
        }
        acc
    }

    pub fn degree(&self, ring: &Ring) -> u32 {
        self.terms
            .iter()
            .filter(|(_, c)| !ring.is_zero_el(c))
            .map(|(e, _)| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn constant_term(&self, ring: &Ring) -> RingElement {
        self.terms
            .get(&vec![0u32; self.nvars])
            .cloned()
            .unwrap_or_else(|| ring.zero())
    }

    /// Divide every coefficient exactly by an integer; `None` if any
    /// coordinate fails.
    pub fn divide(&self, by: &BigInt) -> Option<RPoly> {
        let mut out = RPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let coords = divide_exact(&c.coords, by)?;
            out.terms.insert(e.clone(), RingElement::new(coords));
        }
        Some(out)
    }

    pub fn render(&self, ring: &Ring, var_names: &[String]) -> String {
        let pn = self.normalize(ring);
        if pn.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (exps, coeff) in pn.terms.iter().rev() {
            let mut part = String::new();
            let is_const = exps.iter().all(|&e| e == 0);
            let coeff_str = format!("{}", coeff);
            part.push_str(&coeff_str);
            if !is_const {
                for (i, &e) in exps.iter().enumerate() {
                    part.push('*');
                    part.push_str(&var_names[i]);
                    if e > 1 {
                        part.push_str(&format!("^{}", e));
                    }
                }
            }
            parts.push(part);
        }
        parts.join(" + ")
    }
}

/// A pointed map R^m → R^n with components `P_c / d_c`.
#[derive(Clone, Debug)]
pub struct PolyMap {
    pub ring: Ring,
    pub arity_in: usize,
    pub arity_out: usize,
    pub components: Vec<RPoly>,
    pub denominators: Vec<BigInt>,
}

impl PolyMap {
    pub fn new(ring: Ring, arity_in: usize, components: Vec<RPoly>) -> Result<PolyMap> {
        let denominators = vec![BigInt::one(); components.len()];
        PolyMap::with_denominators(ring, arity_in, components, denominators)
    }

    pub fn with_denominators(
        ring: Ring,
        arity_in: usize,
        components: Vec<RPoly>,
        denominators: Vec<BigInt>,
    ) -> Result<PolyMap> {
        if denominators.len() != components.len() {
            return Err(Error::Shape("one denominator per component".to_string()));
        }
        for p in &components {
            if p.nvars() != arity_in {
                return Err(Error::Shape("component arity mismatch".to_string()));
            }
            if !ring.is_zero_el(&p.constant_term(&ring)) {
                return Err(Error::Precondition(
                    "polynomial maps must have zero constant term".to_string(),
                ));
            }
        }
        for d in &denominators {
            if d <= &BigInt::from(0) {
                return Err(Error::Precondition("denominators must be ≥ 1".to_string()));
            }
            if !d.is_one() && !ring_torsion_free_for(&ring, d) {
                return Err(Error::Precondition(format!(
                    "denominator {} needs a {}-torsion-free ring",
                    d, d
                )));
            }
        }
        Ok(PolyMap {
            ring,
            arity_in,
            arity_out: components.len(),
            components,
            denominators,
        })
    }

    /// The map n ↦ C(n,2) = (n²−n)/2 in one variable.
    pub fn binomial_choose_2(ring: &Ring) -> Result<PolyMap> {
        let x = RPoly::var(1, 0, ring);
        let p = x.mul(ring, &x).sub(ring, &x);
        PolyMap::with_denominators(ring.clone(), 1, vec![p], vec![BigInt::from(2)])
    }

    pub fn degree(&self) -> u32 {
        self.components
            .iter()
            .map(|p| p.degree(&self.ring))
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, point: &[RingElement]) -> Result<Vec<RingElement>> {
        self.components
            .iter()
            .zip(&self.denominators)
            .map(|(p, d)| {
                let v = p.eval(&self.ring, point);
                if d.is_one() {
                    return Ok(v);
                }
                divide_exact(&self.ring.canon(&v).coords, d)
                    .map(RingElement::new)
                    .ok_or_else(|| {
                        Error::Precondition(format!(
                            "value {} is not divisible by {}",
                            v, d
                        ))
                    })
            })
            .collect()
    }

    /// Components of `f(X+Y)` in 2m variables (X's then Y's); numerators only.
    fn shifted_sum(&self) -> Vec<RPoly> {
        let m = self.arity_in;
        let subs: Vec<RPoly> = (0..m)
            .map(|i| {
                let x = RPoly::var(2 * m, i, &self.ring);
                let y = RPoly::var(2 * m, m + i, &self.ring);
                x.add(&self.ring, &y)
            })
            .collect();
        self.components
            .iter()
            .map(|p| p.substitute(&self.ring, &subs, 2 * m))
            .collect()
    }

    fn embed(&self, offset: usize) -> Vec<RPoly> {
        let m = self.arity_in;
        let subs: Vec<RPoly> = (0..m)
            .map(|i| RPoly::var(2 * m, offset + i, &self.ring))
            .collect();
        self.components
            .iter()
            .map(|p| p.substitute(&self.ring, &subs, 2 * m))
            .collect()
    }

    /// Numerators of `f(rX)`.
    fn scaled_arg(&self, r: &RingElement) -> Vec<RPoly> {
        let m = self.arity_in;
        let subs: Vec<RPoly> = (0..m)
            .map(|i| RPoly::var(m, i, &self.ring).scale(&self.ring, r))
            .collect();
        self.components
            .iter()
            .map(|p| p.substitute(&self.ring, &subs, m))
            .collect()
    }
}

fn ring_torsion_free_for(ring: &Ring, d: &BigInt) -> bool {
    let pre = ring
        .lattice()
        .preimage(&crate::arith::scaled_identity(ring.rank(), d));
    ring.lattice().contains_lattice(&pre)
}

/// Result of the symbolic cross-effect computation.
pub enum CrossEffect {
    /// `d_f(x,y) = Σ B_{ij} x_i y_j`, one coefficient matrix per component.
    Bilinear(Vec<Vec<Vec<RingElement>>>),
    /// An offending monomial (component index and rendered monomial).
    NotBilinear { component: usize, monomial: String },
}

/// Expands `f(X+Y)−f(X)−f(Y)` and checks bilinearity monomial by monomial.
/// For a component P/d the numerator expansion must divide exactly by d.
pub fn cross_effect(f: &PolyMap) -> CrossEffect {
    let ring = &f.ring;
    let m = f.arity_in;
    let sum = f.shifted_sum();
    let fx = f.embed(0);
    let fy = f.embed(m);
    let mut mats = Vec::with_capacity(f.arity_out);
    for ci in 0..f.arity_out {
        let d_num = sum[ci]
            .sub(ring, &fx[ci])
            .sub(ring, &fy[ci])
            .normalize(ring);
        let d = match d_num.divide(&f.denominators[ci]) {
            Some(p) => p.normalize(ring),
            None => {
                return CrossEffect::NotBilinear {
                    component: ci,
                    monomial: format!(
                        "cross-effect not divisible by {}",
                        f.denominators[ci]
                    ),
                }
            }
        };
        for (exps, coeff) in d.terms() {
            if ring.is_zero_el(coeff) {
                continue;
            }
            let x_deg: u32 = exps[..m].iter().sum();
            let y_deg: u32 = exps[m..].iter().sum();
            if x_deg != 1 || y_deg != 1 {
                return CrossEffect::NotBilinear {
                    component: ci,
                    monomial: render_monomial(exps, m),
                };
            }
        }
        let mut mat = vec![vec![ring.zero(); m]; m];
        for (exps, coeff) in d.terms() {
            if ring.is_zero_el(coeff) {
                continue;
            }
            let i = exps[..m].iter().position(|&e| e == 1).unwrap();
            let j = exps[m..].iter().position(|&e| e == 1).unwrap();
            mat[i][j] = coeff.clone();
        }
        mats.push(mat);
    }
    CrossEffect::Bilinear(mats)
}

fn render_monomial(exps: &[u32], m: usize) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = if i < m {
            format!("X{}", i + 1)
        } else {
            format!("Y{}", i - m + 1)
        };
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{}^{}", name, e));
        }
    }
    parts.join("*")
}

/// The cross-action `f_r(x) = f(rx) − r·f(x)` and second cross-action
/// `f_{[r]}(x) = f(rx) − r²·f(x)`, as maps with the same denominators.
pub fn cross_actions(f: &PolyMap, r: &RingElement) -> (PolyMap, PolyMap) {
    let ring = f.ring.clone();
    let scaled = f.scaled_arg(r);
    let r2 = ring.mul(r, r);
    let first: Vec<RPoly> = scaled
        .iter()
        .zip(&f.components)
        .map(|(s, p)| s.sub(&ring, &p.scale(&ring, r)))
        .collect();
    let second: Vec<RPoly> = scaled
        .iter()
        .zip(&f.components)
        .map(|(s, p)| s.sub(&ring, &p.scale(&ring, &r2)))
        .collect();
    let fr = PolyMap::with_denominators(
        ring.clone(),
        f.arity_in,
        first,
        f.denominators.clone(),
    )
    .expect("cross action is pointed");
    let frr = PolyMap::with_denominators(ring, f.arity_in, second, f.denominators.clone())
        .expect("cross action is pointed");
    (fr, frr)
}

/// Verdict of the symbolic quadraticity test.
pub enum QuadVerdict {
    Quadratic,
    NotQuadratic { identity: &'static str, witness: String },
}

impl QuadVerdict {
    pub fn is_quadratic(&self) -> bool {
        matches!(self, QuadVerdict::Quadratic)
    }
}

/// Symbolic verification of the defining identities as polynomial laws. The
/// additivity identities amount to bilinearity of the symbolic cross-effect;
/// the scalar identity then amounts to total degree ≤ 2.
pub fn is_quadratic(f: &PolyMap) -> QuadVerdict {
    let ring = &f.ring;
    match cross_effect(f) {
        CrossEffect::NotBilinear { component, monomial } => {
            return QuadVerdict::NotQuadratic {
                identity: "defadd1",
                witness: format!("component {}: monomial {}", component + 1, monomial),
            }
        }
        CrossEffect::Bilinear(_) => {}
    }
    for (ci, p) in f.components.iter().enumerate() {
        let pn = p.normalize(ring);
        for (exps, coeff) in pn.terms() {
            if ring.is_zero_el(coeff) {
                continue;
            }
            let deg: u32 = exps.iter().sum();
            if deg > 2 {
                return QuadVerdict::NotQuadratic {
                    identity: "defscal1",
                    witness: format!(
                        "component {}: monomial {} of degree {}",
                        ci + 1,
                        render_monomial(exps, exps.len()),
                        deg
                    ),
                };
            }
        }
    }
    QuadVerdict::Quadratic
}

/// Result of the linear + homogeneous decomposition.
pub enum Decomposition {
    Split {
        linear: PolyMap,
        homogeneous: PolyMap,
        unit: RingElement,
    },
    /// No element r with r and r−1 invertible within the search bound.
    NoUnitPair { bound: i64 },
}

/// Decomposes a quadratic f as f₁ + f₂ with f₁ linear and f₂ homogeneous,
/// using a unit pair r, r−1: f₂ = (r²−r)⁻¹·f_r and f₁ = f − f₂.
pub fn decompose_lin_hom(
    f: &PolyMap,
    r: Option<RingElement>,
    bound: i64,
) -> Result<Decomposition> {
    if !is_quadratic(f).is_quadratic() {
        return Err(Error::Precondition(
            "decompose_lin_hom needs a quadratic map".to_string(),
        ));
    }
    let ring = f.ring.clone();
    let unit = match r {
        Some(r) => {
            let rm1 = ring.sub(&r, &ring.one());
            if !ring.is_invertible(&r) || !ring.is_invertible(&rm1) {
                return Err(Error::Precondition(format!(
                    "{} and {}−1 must both be invertible",
                    r, r
                )));
            }
            Some(r)
        }
        None => find_unit_pair(&ring, bound),
    };
    let Some(r) = unit else {
        return Ok(Decomposition::NoUnitPair { bound });
    };
    let r2_minus_r = ring.sub(&ring.mul(&r, &r), &r);
    let inv = ring
        .inverse(&r2_minus_r)
        .expect("r²−r invertible when r and r−1 are");
    let (fr, _) = cross_actions(f, &r);
    let homogeneous_comps: Vec<RPoly> = fr
        .components
        .iter()
        .map(|p| p.scale(&ring, &inv))
        .collect();
    let homogeneous = PolyMap::with_denominators(
        ring.clone(),
        f.arity_in,
        homogeneous_comps,
        f.denominators.clone(),
    )?;
    let linear_comps: Vec<RPoly> = f
        .components
        .iter()
        .zip(&homogeneous.components)
        .map(|(p, h)| p.sub(&ring, h))
        .collect();
    let linear = PolyMap::with_denominators(
        ring.clone(),
        f.arity_in,
        linear_comps,
        f.denominators.clone(),
    )?;
    // Certify the shape of both parts (as P/d laws: d·part has pure degree).
    for (p, d) in linear.components.iter().zip(&linear.denominators) {
        let pn = p.normalize(&ring);
        for (exps, c) in pn.terms() {
            let deg: u32 = exps.iter().sum();
            if !ring.is_zero_el(c) && deg != 1 {
                return Err(Error::Internal(format!(
                    "decomposition produced a non-linear term of degree {} (den {})",
                    deg, d
                )));
            }
        }
    }
    for p in &homogeneous.components {
        let pn = p.normalize(&ring);
        for (exps, c) in pn.terms() {
            let deg: u32 = exps.iter().sum();
            if !ring.is_zero_el(c) && deg != 2 {
                return Err(Error::Internal(
                    "decomposition produced a non-homogeneous quadratic part".to_string(),
                ));
            }
        }
    }
    Ok(Decomposition::Split {
        linear,
        homogeneous,
        unit: r,
    })
}

/// Bounded search for r with r and r−1 invertible, over coordinate vectors
/// with entries in [−bound, bound], in deterministic order.
pub fn find_unit_pair(ring: &Ring, bound: i64) -> Option<RingElement> {
    let n = ring.rank();
    let width = (2 * bound + 1) as usize;
    let total = width.pow(n as u32);
    for idx in 0..total {
        let mut rem = idx;
        let mut coords = Vec::with_capacity(n);
        for _ in 0..n {
            coords.push(BigInt::from((rem % width) as i64 - bound));
            rem /= width;
        }
        let r = RingElement::new(coords);
        let rm1 = ring.sub(&r, &ring.one());
        if ring.is_invertible(&r) && ring.is_invertible(&rm1) {
            return Some(r);
        }
    }
    None
}

/// The factorization f̂: P²(R^m) → R^n with f̂∘p = f.
pub struct P2Factorization {
    pub p2: FunctorObject,
    pub i2: IdealI2,
    pub map: ModuleMap,
}

/// Factors a quadratic map through the universal one. On the labels:
/// u_i ↦ f(e_i), c_{ij} ↦ d_f(e_i,e_j), and ι_i(t_s) ↦ f(r_s·e_i) − r_s·f(e_i)
/// for the canonical witness r_s of the generator t_s.
pub fn factor_through_p2(f: &PolyMap) -> Result<P2Factorization> {
    if !is_quadratic(f).is_quadratic() {
        return Err(Error::Precondition(
            "factor_through_p2 needs a quadratic map".to_string(),
        ));
    }
    let ring = f.ring.clone();
    let i2 = i2_ideal(&ring);
    let domain_m = FPModule::free(ring.clone(), f.arity_in);
    let p2 = functor_object_with_i2(FunctorTag::P2, &domain_m, &i2);
    let codomain = FPModule::free(ring.clone(), f.arity_out);
    let unit_point = |i: usize| -> Vec<RingElement> {
        (0..f.arity_in)
            .map(|k| if k == i { ring.one() } else { ring.zero() })
            .collect()
    };
    let mut cols = vec![codomain.zero_el(); p2.module.gens()];
    for i in 0..f.arity_in {
        cols[p2.u_idx(i)] = codomain.el(f.eval(&unit_point(i))?);
        for s in 0..i2.gens() {
            let r_s = &i2.witnesses[s];
            let scaled_point: Vec<RingElement> = unit_point(i)
                .iter()
                .map(|x| ring.mul(r_s, x))
                .collect();
            let f_scaled = f.eval(&scaled_point)?;
            let f_base = f.eval(&unit_point(i))?;
            let col: Vec<RingElement> = f_scaled
                .iter()
                .zip(&f_base)
                .map(|(a, b)| ring.sub(a, &ring.mul(r_s, b)))
                .collect();
            cols[p2.iota_idx(i, s)] = codomain.el(col);
        }
        for j in (i + 1)..f.arity_in {
            let mut point = unit_point(i);
            point[j] = ring.one();
            let f_sum = f.eval(&point)?;
            let f_i = f.eval(&unit_point(i))?;
            let f_j = f.eval(&unit_point(j))?;
            let col: Vec<RingElement> = f_sum
                .iter()
                .zip(f_i.iter().zip(&f_j))
                .map(|(s, (a, b))| ring.sub(&ring.sub(s, a), b))
                .collect();
            cols[p2.c_idx(i, j)] = codomain.el(col);
        }
    }
    let map = ModuleMap::new(p2.module.clone(), codomain, cols)?;
    Ok(P2Factorization { p2, i2, map })
}

impl P2Factorization {
    /// f̂(p(x)) for a coordinate point x.
    pub fn apply_p(&self, x: &[RingElement]) -> Vec<RingElement> {
        let m = self.p2.source.clone();
        let p = self.p2.p_of(&self.i2, &m.el(x.to_vec()));
        self.map.apply(&p).coords.to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::presets::*;

    fn square_map(ring: &Ring) -> PolyMap {
        let x = RPoly::var(1, 0, ring);
        PolyMap::new(ring.clone(), 1, vec![x.mul(ring, &x)]).unwrap()
    }

    #[test]
    fn cross_effect_examples() {
        let z = z();
        let f = square_map(&z);
        match cross_effect(&f) {
            CrossEffect::Bilinear(mats) => {
                assert!(z.eq(&mats[0][0][0], &z.int(2)));
            }
            _ => panic!("x² has bilinear cross effect"),
        }
        // binomial: d_f(x,y) = xy.
        let f = PolyMap::binomial_choose_2(&z).unwrap();
        match cross_effect(&f) {
            CrossEffect::Bilinear(mats) => assert!(z.eq(&mats[0][0][0], &z.one())),
            _ => panic!("C(n,2) has cross effect xy"),
        }
        // x³ is not bilinear.
        let x = RPoly::var(1, 0, &z);
        let cube = PolyMap::new(z.clone(), 1, vec![x.mul(&z, &x).mul(&z, &x)]).unwrap();
        assert!(matches!(cross_effect(&cube), CrossEffect::NotBilinear { .. }));
        // linear maps have zero cross effect.
        let lin = PolyMap::new(z.clone(), 1, vec![RPoly::var(1, 0, &z)]).unwrap();
        match cross_effect(&lin) {
            CrossEffect::Bilinear(mats) => assert!(z.is_zero_el(&mats[0][0][0])),
            _ => panic!("linear is bilinear-cross"),
        }
    }

    #[test]
    fn cross_action_examples() {
        let z = z();
        // f(n) = C(n,2), r = 2: f₂(n) = C(2n,2) − 2C(n,2) = n².
        let f = PolyMap::binomial_choose_2(&z).unwrap();
        let (f2, _) = cross_actions(&f, &z.int(2));
        for n in -4..=4i64 {
            let v = f2.eval(&[z.int(n)]).unwrap();
            assert!(z.eq(&v[0], &z.int(n * n)));
        }
        // r = 1 kills both cross actions.
        let (a, b) = cross_actions(&f, &z.one());
        assert!(a.components[0].is_zero(&z));
        assert!(b.components[0].is_zero(&z));
        // homogeneous maps have zero second cross action.
        let sq = square_map(&z);
        let (_, second) = cross_actions(&sq, &z.int(3));
        assert!(second.components[0].is_zero(&z));
    }

    #[test]
    fn quadraticity_examples() {
        let z = z();
        assert!(is_quadratic(&PolyMap::binomial_choose_2(&z).unwrap()).is_quadratic());
        let x = RPoly::var(1, 0, &z);
        let cube = PolyMap::new(z.clone(), 1, vec![x.mul(&z, &x).mul(&z, &x)]).unwrap();
        match is_quadratic(&cube) {
            QuadVerdict::NotQuadratic { identity, .. } => assert_eq!(identity, "defadd1"),
            _ => panic!("x³ must be rejected"),
        }
        let lin = PolyMap::new(z.clone(), 1, vec![RPoly::var(1, 0, &z)]).unwrap();
        assert!(is_quadratic(&lin).is_quadratic());
    }

    #[test]
    fn half_denominator_needs_torsion_free_ring() {
        let f2r = f2();
        let x = RPoly::var(1, 0, &f2r);
        let p = x.mul(&f2r, &x).sub(&f2r, &x);
        assert!(PolyMap::with_denominators(
            f2r.clone(),
            1,
            vec![p],
            vec![BigInt::from(2)]
        )
        .is_err());
    }

    #[test]
    fn decomposition_over_f3() {
        // f(x) = x² + x over F3 with r = 2: f₁ = x, f₂ = x².
        let f3 = f3();
        let x = RPoly::var(1, 0, &f3);
        let f = PolyMap::new(f3.clone(), 1, vec![x.mul(&f3, &x).add(&f3, &x)]).unwrap();
        match decompose_lin_hom(&f, Some(f3.int(2)), 3).unwrap() {
            Decomposition::Split { linear, homogeneous, .. } => {
                assert!(linear.components[0].eq(&f3, &x));
                assert!(homogeneous.components[0].eq(&f3, &x.mul(&f3, &x)));
            }
            _ => panic!("must split over F3"),
        }
        // Uniqueness: different admissible units give the same split.
        let z5 = zmod(5);
        let x5 = RPoly::var(1, 0, &z5);
        let f = PolyMap::new(
            z5.clone(),
            1,
            vec![x5.mul(&z5, &x5).scale(&z5, &z5.int(3)).add(&z5, &x5)],
        )
        .unwrap();
        let d2 = decompose_lin_hom(&f, Some(z5.int(2)), 3).unwrap();
        let d3 = decompose_lin_hom(&f, Some(z5.int(3)), 3).unwrap();
        match (d2, d3) {
            (
                Decomposition::Split { linear: l2, homogeneous: h2, .. },
                Decomposition::Split { linear: l3, homogeneous: h3, .. },
            ) => {
                assert!(l2.components[0].eq(&z5, &l3.components[0]));
                assert!(h2.components[0].eq(&z5, &h3.components[0]));
            }
            _ => panic!("must split over Z/5"),
        }
    }

    #[test]
    fn decomposition_unavailable_over_z() {
        let z = z();
        let f = PolyMap::binomial_choose_2(&z).unwrap();
        match decompose_lin_hom(&f, None, 3).unwrap() {
            Decomposition::NoUnitPair { .. } => {}
            _ => panic!("no unit pair exists in Z"),
        }
        // Homogeneous input splits trivially where units exist.
        let f3 = f3();
        let sq = square_map(&f3);
        match decompose_lin_hom(&sq, None, 3).unwrap() {
            Decomposition::Split { linear, homogeneous, .. } => {
                assert!(linear.components[0].is_zero(&f3));
                assert!(homogeneous.components[0].eq(&f3, &sq.components[0]));
            }
            _ => panic!("homogeneous splits"),
        }
    }

    #[test]
    fn factorization_of_binomial_map() {
        // f(n) = C(n,2): f̂(u) = 0, f̂(ι(t_*)) = 1, round trip on [−5,5].
        let z = z();
        let f = PolyMap::binomial_choose_2(&z).unwrap();
        let fac = factor_through_p2(&f).unwrap();
        assert!(z.is_zero_el(&fac.map.columns()[fac.p2.u_idx(0)].coords[0]));
        assert!(z.eq(&fac.map.columns()[fac.p2.iota_idx(0, 0)].coords[0], &z.one()));
        for n in -5..=5i64 {
            let out = fac.apply_p(&[z.int(n)]);
            let expect = f.eval(&[z.int(n)]).unwrap();
            assert!(z.eq(&out[0], &expect[0]), "round trip at {}", n);
        }

        // f(x,y) = xy over Z²: f̂ is 1 on c₁₂ and 0 on the u's.
        let xy = RPoly::var(2, 0, &z).mul(&z, &RPoly::var(2, 1, &z));
        let f = PolyMap::new(z.clone(), 2, vec![xy]).unwrap();
        let fac = factor_through_p2(&f).unwrap();
        let c12 = &fac.map.columns()[fac.p2.c_idx(0, 1)];
        assert!(z.eq(&c12.coords[0], &z.one()));
        for i in 0..2 {
            assert!(z.is_zero_el(&fac.map.columns()[fac.p2.u_idx(i)].coords[0]));
        }
        for a in -2..=2i64 {
            for b in -2..=2i64 {
                let out = fac.apply_p(&[z.int(a), z.int(b)]);
                assert!(z.eq(&out[0], &z.int(a * b)));
            }
        }

        // linear f: f̂ vanishes on the ι and c labels.
        let lin = PolyMap::new(z.clone(), 1, vec![RPoly::var(1, 0, &z)]).unwrap();
        let fac = factor_through_p2(&lin).unwrap();
        assert!(z.is_zero_el(&fac.map.columns()[fac.p2.iota_idx(0, 0)].coords[0]));
    }

    #[test]
    fn factorization_round_trips_over_presets() {
        for ring in all() {
            // f(x,y) = x² + 2xy − y over each preset ring.
            let x = RPoly::var(2, 0, &ring);
            let y = RPoly::var(2, 1, &ring);
            let comp = x
                .mul(&ring, &x)
                .add(&ring, &x.mul(&ring, &y).scale(&ring, &ring.int(2)))
                .sub(&ring, &y);
            let f = PolyMap::new(ring.clone(), 2, vec![comp]).unwrap();
            let fac = factor_through_p2(&f).expect("factorizable");
            for a in -2..=2i64 {
                for b in -2..=2i64 {
                    let pt = [ring.int(a), ring.int(b)];
                    let lhs = fac.apply_p(&pt);
                    let rhs = f.eval(&pt).unwrap();
                    assert!(
                        ring.eq(&lhs[0], &rhs[0]),
                        "round trip over {} at ({},{})",
                        ring.name(),
                        a,
                        b
                    );
                }
            }
        }
    }

    #[test]
    fn factorization_rejects_cube() {
        let z = z();
        let x = RPoly::var(1, 0, &z);
        let cube = PolyMap::new(z.clone(), 1, vec![x.mul(&z, &x).mul(&z, &x)]).unwrap();
        assert!(factor_through_p2(&cube).is_err());
    }

    #[test]
    fn direct_sum_reconstruction() {
        // For quadratic f on M⊕M': f(x,x') = f₁(x) + f₂(x') + h(x⊗x').
        let z = z();
        let x = RPoly::var(2, 0, &z);
        let y = RPoly::var(2, 1, &z);
        let comp = x
            .mul(&z, &x)
            .add(&z, &x.mul(&z, &y).scale(&z, &z.int(3)))
            .add(&z, &y.mul(&z, &y))
            .add(&z, &x.scale(&z, &z.int(2)));
        let f = PolyMap::new(z.clone(), 2, vec![comp]).unwrap();
        assert!(is_quadratic(&f).is_quadratic());
        let eval2 = |a: i64, b: i64| f.eval(&[z.int(a), z.int(b)]).unwrap()[0].clone();
        for a in -3..=3 {
            for b in -3..=3 {
                let h = z.sub(&eval2(a, b), &z.add(&eval2(a, 0), &eval2(0, b)));
                assert!(z.eq(&h, &z.int(3 * a * b)));
            }
        }
    }

    #[test]
    fn second_cross_action_is_homogeneous() {
        // f_s(rx) = r²·f_s(x) symbolically on the binomial map.
        let z = z();
        let f = PolyMap::binomial_choose_2(&z).unwrap();
        let (fs, _) = cross_actions(&f, &z.int(3));
        let r = z.int(5);
        let scaled = fs.scaled_arg(&r);
        let r2 = z.mul(&r, &r);
        for (s, p) in scaled.iter().zip(&fs.components) {
            assert!(s.eq(&z, &p.scale(&z, &r2)));
        }
    }
}
