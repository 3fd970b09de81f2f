//! Commutative rings of finite additive rank over the integers.
//!
//! A ring here is Z^n modulo an additive relation lattice, with multiplication
//! given by structure constants on the Z-basis. This class covers every ring
//! the library needs (Z, Z/n, F_2, F_2^n, Z[√2], Z[X]/(X²−X), products) and
//! keeps all downstream module computations inside exact lattice algebra.
//!
//! Elements are stored unreduced; equality and display reduce modulo the
//! additive lattice.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

use crate::arith::{big, solve_mod, unit_vector, IntMatrix, Lattice};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// How the ring was constructed; drives the canonical presentation used by
/// the reduced presentation of I₂.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    Integers,
    IntegersMod(BigInt),
    /// Coefficients of the monic polynomial below the leading term:
    /// `f = X^d + c_{d-1} X^{d-1} + ... + c_0`.
    Monogenic(Vec<BigInt>),
    Product(Ring, Ring),
    Custom,
}

#[derive(Debug)]
struct RingInner {
    rank: usize,
    lattice: Lattice,
    /// `mul[i * rank + j]` = coordinates of b_i · b_j.
    mul: Vec<Vec<BigInt>>,
    unit: Vec<BigInt>,
    name: String,
    preset: Preset,
}

/// A finite-rank Z-algebra. Cheap to clone; all data shared.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

/// An element given by integer coordinates over the ring's Z-basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub coords: Vec<BigInt>,
}

impl RingElement {
    pub fn new(coords: Vec<BigInt>) -> Self {
        RingElement { coords }
    }
}

impl fmt::Display for RingElement {
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

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.rank == other.0.rank
                && self.0.lattice == other.0.lattice
                && self.0.mul == other.0.mul
                && self.0.unit == other.0.unit)
    }
}
impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.0.name)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.name)
    }
}

impl Ring {
    pub fn from_parts(
        name: impl Into<String>,
        rank: usize,
        lattice: Lattice,
        mul: Vec<Vec<BigInt>>,
        unit: Vec<BigInt>,
        preset: Preset,
    ) -> Result<Ring> {
        assert_eq!(lattice.ambient(), rank);
        assert_eq!(mul.len(), rank * rank);
        assert!(mul.iter().all(|v| v.len() == rank));
        assert_eq!(unit.len(), rank);
        let ring = Ring(Arc::new(RingInner {
            rank,
            lattice,
            mul,
            unit,
            name: name.into(),
            preset,
        }));
        let report = ring.validate();
        if !report.ok() {
            return Err(Error::InvalidRing(report.to_string()));
        }
        Ok(ring)
    }

    pub fn integers() -> Ring {
        Ring::from_parts(
            "Z",
            1,
            Lattice::zero(1),
            vec![vec![BigInt::one()]],
            vec![BigInt::one()],
            Preset::Integers,
        )
        .expect("Z is a ring")
    }

    pub fn integers_mod(n: &BigInt) -> Result<Ring> {
        if n < &BigInt::one() {
            return Err(Error::InvalidRing(format!("Zmod needs n >= 1, got {}", n)));
        }
        Ring::from_parts(
            format!("Zmod({})", n),
            1,
            Lattice::from_generator_vecs(1, &[vec![n.clone()]]),
            vec![vec![BigInt::one()]],
            vec![BigInt::one()],
            Preset::IntegersMod(n.clone()),
        )
    }

    /// `Z[X]/(f)` for monic `f` of degree ≥ 1, basis `1, X, ..., X^{d-1}`.
    /// The argument lists the coefficients below the monic leading term.
    pub fn monogenic(below_leading: &[BigInt]) -> Result<Ring> {
        let d = below_leading.len();
        if d == 0 {
            return Err(Error::InvalidRing(
                "monogenic needs degree >= 1".to_string(),
            ));
        }
        // X^d = -(c_{d-1} X^{d-1} + ... + c_0); reduce all X^k for k < 2d-1.
        let mut powers: Vec<Vec<BigInt>> = Vec::new(); // X^k in basis coords
        for k in 0..d {
            powers.push(unit_vector(d, k));
        }
        for k in d..(2 * d).max(d + 1) {
            // X^k = X * X^{k-1}, then reduce the X^d component repeatedly.
            let prev = powers[k - 1].clone();
            let mut shifted = vec![BigInt::zero(); d + 1];
            for (i, c) in prev.iter().enumerate() {
                shifted[i + 1] = c.clone();
            }
            let top = shifted[d].clone();
            let mut reduced: Vec<BigInt> = shifted[..d].to_vec();
            if !top.is_zero() {
                for i in 0..d {
                    let sub = &below_leading[i] * &top;
                    reduced[i] -= sub;
                }
            }
            powers.push(reduced);
        }
        let mut mul = vec![vec![BigInt::zero(); d]; d * d];
        for i in 0..d {
            for j in 0..d {
                mul[i * d + j] = powers[i + j].clone();
            }
        }
        let fname = {
            let poly_desc: Vec<String> = below_leading.iter().map(|c| c.to_string()).collect();
            format!("monogenic[{}]", poly_desc.join(","))
        };
        Ring::from_parts(
            fname,
            d,
            Lattice::zero(d),
            mul,
            unit_vector(d, 0),
            Preset::Monogenic(below_leading.to_vec()),
        )
    }

    pub fn product(a: &Ring, b: &Ring) -> Result<Ring> {
        let ra = a.rank();
        let rb = b.rank();
        let rank = ra + rb;
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        for col in a.lattice().basis().columns() {
            let mut v = vec![BigInt::zero(); rank];
            v[..ra].clone_from_slice(&col);
            gens.push(v);
        }
        for col in b.lattice().basis().columns() {
            let mut v = vec![BigInt::zero(); rank];
            v[ra..].clone_from_slice(&col);
            gens.push(v);
        }
        let lattice = Lattice::from_generator_vecs(rank, &gens);
        let mut mul = vec![vec![BigInt::zero(); rank]; rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                let target = &mut mul[i * rank + j];
                if i < ra && j < ra {
                    let prod = &a.0.mul[i * ra + j];
                    target[..ra].clone_from_slice(prod);
                } else if i >= ra && j >= ra {
                    let prod = &b.0.mul[(i - ra) * rb + (j - ra)];
                    target[ra..].clone_from_slice(prod);
                } // cross products vanish
            }
        }
        let mut unit = vec![BigInt::zero(); rank];
        unit[..ra].clone_from_slice(&a.0.unit);
        unit[ra..].clone_from_slice(&b.0.unit);
        Ring::from_parts(
            format!("product({},{})", a.name(), b.name()),
            rank,
            lattice,
            mul,
            unit,
            Preset::Product(a.clone(), b.clone()),
        )
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn preset(&self) -> &Preset {
        &self.0.preset
    }

    pub fn lattice(&self) -> &Lattice {
        &self.0.lattice
    }

    pub fn el(&self, coords: Vec<BigInt>) -> RingElement {
        assert_eq!(coords.len(), self.0.rank, "coordinate length mismatch");
        RingElement::new(coords)
    }

    pub fn el_i64(&self, coords: &[i64]) -> RingElement {
        self.el(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(&self) -> RingElement {
        RingElement::new(vec![BigInt::zero(); self.0.rank])
    }

    pub fn one(&self) -> RingElement {
        RingElement::new(self.0.unit.clone())
    }

    pub fn int(&self, n: i64) -> RingElement {
        self.int_big(BigInt::from(n))
    }

    pub fn int_big(&self, n: BigInt) -> RingElement {
        RingElement::new(self.0.unit.iter().map(|u| u * &n).collect())
    }

    pub fn basis_el(&self, i: usize) -> RingElement {
        RingElement::new(unit_vector(self.0.rank, i))
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement::new(
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x + y)
                .collect(),
        )
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement::new(
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x - y)
                .collect(),
        )
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        RingElement::new(a.coords.iter().map(|x| -x).collect())
    }

    /// Bilinear extension of the structure constants.
    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let n = self.0.rank;
        let mut out = vec![BigInt::zero(); n];
        for i in 0..n {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b.coords[j].is_zero() {
                    continue;
                }
                let scale = &a.coords[i] * &b.coords[j];
                for (l, c) in self.0.mul[i * n + j].iter().enumerate() {
                    out[l] += c * &scale;
                }
            }
        }
        RingElement::new(out)
    }

    pub fn scale(&self, k: &BigInt, a: &RingElement) -> RingElement {
        RingElement::new(a.coords.iter().map(|x| x * k).collect())
    }

    pub fn eq(&self, a: &RingElement, b: &RingElement) -> bool {
        let diff: Vec<BigInt> = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x - y)
            .collect();
        self.0.lattice.contains(&diff)
    }

    pub fn is_zero_el(&self, a: &RingElement) -> bool {
        self.0.lattice.contains(&a.coords)
    }

    /// Canonical coset representative.
    pub fn canon(&self, a: &RingElement) -> RingElement {
        RingElement::new(self.0.lattice.reduce(&a.coords))
    }

    pub fn pow(&self, a: &RingElement, n: u32) -> RingElement {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// `a²`; additive modulo 2, which is what the Frobenius-twisted modules
    /// rely on.
    pub fn frobenius_square(&self, a: &RingElement) -> RingElement {
        self.mul(a, a)
    }

    /// Multiplication-by-`a` as an integer matrix on coordinates.
    pub fn mul_matrix(&self, a: &RingElement) -> IntMatrix {
        let n = self.0.rank;
        let cols: Vec<Vec<BigInt>> = (0..n)
            .map(|j| self.mul(a, &self.basis_el(j)).coords)
            .collect();
        IntMatrix::from_columns(n, &cols)
    }

    /// Inverse of `a`, when it exists.
    pub fn inverse(&self, a: &RingElement) -> Option<RingElement> {
        let m = self.mul_matrix(a);
        let x = solve_mod(&m, &self.0.unit, &self.0.lattice)?;
        let candidate = RingElement::new(x);
        // solve_mod works modulo the additive lattice, so verify.
        if self.eq(&self.mul(a, &candidate), &self.one()) {
            Some(candidate)
        } else {
            None
        }
    }

    pub fn is_invertible(&self, a: &RingElement) -> bool {
        self.inverse(a).is_some()
    }

    /// Z-lattice of the 2-torsion `{x : 2x = 0}` inside Z^rank (contains the
    /// additive relation lattice).
    pub fn two_torsion_lattice(&self) -> Lattice {
        self.0
            .lattice
            .preimage(&crate::arith::scaled_identity(self.0.rank, &big(2)))
    }

    /// Generators of the ideal I₂ as ring elements: `2` followed by
    /// `b_i² − b_i` for each basis element. The labels of all ι-generators in
    /// P² derive from this ordering.
    pub fn i2_generator_elements(&self) -> Vec<RingElement> {
        let mut gens = vec![self.int(2)];
        for i in 0..self.0.rank {
            let b = self.basis_el(i);
            gens.push(self.sub(&self.mul(&b, &b), &b));
        }
        gens
    }

    /// Z-lattice of the ideal I₂ inside Z^rank.
    pub fn i2_lattice(&self) -> Lattice {
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        for g in self.i2_generator_elements() {
            for i in 0..self.0.rank {
                gens.push(self.mul(&self.basis_el(i), &g).coords);
            }
        }
        for col in self.0.lattice.basis().columns() {
            gens.push(col);
        }
        Lattice::from_generator_vecs(self.0.rank, &gens)
    }

    /// Z-lattice of the ideal 2R inside Z^rank.
    pub fn two_r_lattice(&self) -> Lattice {
        let mut gens: Vec<Vec<BigInt>> = (0..self.0.rank)
            .map(|i| self.scale(&big(2), &self.basis_el(i)).coords)
            .collect();
        for col in self.0.lattice.basis().columns() {
            gens.push(col);
        }
        Lattice::from_generator_vecs(self.0.rank, &gens)
    }

    /// 2-binomial test: `r(r-1)` uniquely 2-divisible for all r. In this ring
    /// class that is equivalent to: the additive 2-torsion vanishes and
    /// I₂ ⊆ 2R.
    pub fn is_2_binomial(&self) -> bool {
        let two_torsion = self.two_torsion_lattice();
        let torsion_free = self.0.lattice.contains_lattice(&two_torsion);
        torsion_free && self.two_r_lattice().contains_lattice(&self.i2_lattice())
    }

    /// Checks commutativity, associativity, unit laws and stability of the
    /// additive lattice under multiplication on all basis pairs/triples.
    pub fn validate(&self) -> RingReport {
        let n = self.0.rank;
        let mut failures = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let bij = self.mul(&self.basis_el(i), &self.basis_el(j));
                let bji = self.mul(&self.basis_el(j), &self.basis_el(i));
                if !self.eq(&bij, &bji) {
                    failures.push(format!("commutativity fails on b{}·b{}", i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let l = self.mul(
                        &self.mul(&self.basis_el(i), &self.basis_el(j)),
                        &self.basis_el(k),
                    );
                    let r = self.mul(
                        &self.basis_el(i),
                        &self.mul(&self.basis_el(j), &self.basis_el(k)),
                    );
                    if !self.eq(&l, &r) {
                        failures.push(format!("associativity fails on b{}·b{}·b{}", i, j, k));
                    }
                }
            }
        }
        for i in 0..n {
            let ui = self.mul(&self.one(), &self.basis_el(i));
            if !self.eq(&ui, &self.basis_el(i)) {
                failures.push(format!("unit fails on b{}", i));
            }
        }
        for col in self.0.lattice.basis().columns() {
            let z = RingElement::new(col);
            for i in 0..n {
                let prod = self.mul(&z, &self.basis_el(i));
                if !self.0.lattice.contains(&prod.coords) {
                    failures.push(format!(
                        "multiplication not defined modulo lattice: {}·b{}",
                        z, i
                    ));
                }
            }
        }
        RingReport { failures }
    }
}

/// Diagnostic result of `Ring::validate`.
#[derive(Clone, Debug)]
pub struct RingReport {
    pub failures: Vec<String>,
}

impl RingReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for RingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "ring valid")
        } else {
            write!(f, "ring invalid: {}", self.failures.join("; "))
        }
    }
}

/// A presentation of a ring as a quotient of an integer polynomial ring,
/// together with the variable images in the target.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    pub vars: Vec<String>,
    pub relations: Vec<IntPoly>,
    pub target: Ring,
    pub images: Vec<RingElement>,
}

impl RingPresentation {
    pub fn new(
        vars: Vec<String>,
        relations: Vec<IntPoly>,
        target: Ring,
        images: Vec<RingElement>,
    ) -> Result<RingPresentation> {
        if images.len() != vars.len() {
            return Err(Error::InvalidPresentation(
                "one image per variable required".to_string(),
            ));
        }
        for p in &relations {
            if p.nvars() != vars.len() {
                return Err(Error::InvalidPresentation(
                    "relation arity mismatch".to_string(),
                ));
            }
            let v = p.eval_in(&target, &images);
            if !target.is_zero_el(&v) {
                return Err(Error::InvalidPresentation(format!(
                    "relation {} does not vanish in {}",
                    p,
                    target.name()
                )));
            }
        }
        let pres = RingPresentation {
            vars,
            relations,
            target,
            images,
        };
        if !pres.images_generate() {
            return Err(Error::InvalidPresentation(
                "images do not generate the target ring".to_string(),
            ));
        }
        Ok(pres)
    }

    /// Iterated products of the images together with 1 must span the additive
    /// group of the target.
    fn images_generate(&self) -> bool {
        let ring = &self.target;
        let n = ring.rank();
        let mut span_gens: Vec<Vec<BigInt>> = vec![ring.one().coords];
        for col in ring.lattice().basis().columns() {
            span_gens.push(col);
        }
        let mut frontier: Vec<RingElement> = vec![ring.one()];
        let mut lattice = Lattice::from_generator_vecs(n, &span_gens);
        loop {
            let mut next_frontier = Vec::new();
            for f in &frontier {
                for img in &self.images {
                    let prod = ring.mul(f, img);
                    if !lattice.contains(&prod.coords) {
                        span_gens.push(prod.coords.clone());
                        next_frontier.push(prod);
                    }
                }
            }
            if next_frontier.is_empty() {
                break;
            }
            lattice = Lattice::from_generator_vecs(n, &span_gens);
            frontier = next_frontier;
        }
        lattice == Lattice::full(n)
    }

    /// The preset rings carry a canonical presentation used when none is
    /// supplied explicitly.
    pub fn canonical(ring: &Ring) -> Result<RingPresentation> {
        match ring.preset().clone() {
            Preset::Integers => {
                RingPresentation::new(vec![], vec![], ring.clone(), vec![])
            }
            Preset::IntegersMod(n) => RingPresentation::new(
                vec!["X1".to_string()],
                vec![IntPoly::var(1, 0), IntPoly::constant(1, n)],
                ring.clone(),
                vec![ring.zero()],
            ),
            Preset::Monogenic(below) => {
                let d = below.len();
                let mut f = IntPoly::var(1, 0).pow(d as u32);
                for (k, c) in below.iter().enumerate() {
                    f = f.add(&IntPoly::var(1, 0).pow(k as u32).scale(c));
                }
                let image = if d == 1 {
                    // Z[X]/(X + c0) has rank 1; X maps to -c0.
                    ring.int_big(-below[0].clone())
                } else {
                    ring.basis_el(1)
                };
                RingPresentation::new(
                    vec!["X1".to_string()],
                    vec![f],
                    ring.clone(),
                    vec![image],
                )
            }
            Preset::Product(a, b) => canonical_product_presentation(ring, &a, &b),
            Preset::Custom => Err(Error::InvalidPresentation(
                "custom ring has no canonical presentation".to_string(),
            )),
        }
    }
}

/// Presentation of R×S from presentations of the factors: an idempotent
/// variable E for (1,0), shifted copies of the factor variables, annihilation
/// relations, and the factor relations corrected by their constant terms.
fn canonical_product_presentation(
    ring: &Ring,
    a: &Ring,
    b: &Ring,
) -> Result<RingPresentation> {
    let pa = RingPresentation::canonical(a)?;
    let pb = RingPresentation::canonical(b)?;
    let na = pa.vars.len();
    let nb = pb.vars.len();
    let nvars = 1 + na + nb;
    let evar = IntPoly::var(nvars, 0);
    let one = IntPoly::constant(nvars, BigInt::one());
    let one_minus_e = one.sub(&evar);

    let lift = |p: &IntPoly, offset: usize| -> IntPoly {
        let mut out = IntPoly::zero(nvars);
        for (exps, coeff) in p.terms() {
            let mut new_exps = vec![0u32; nvars];
            for (i, &e) in exps.iter().enumerate() {
                new_exps[offset + i] = e;
            }
            out = out.add(&IntPoly::monomial(nvars, new_exps, coeff.clone()));
        }
        out
    };

    let mut vars = vec!["E".to_string()];
    for v in &pa.vars {
        vars.push(format!("L{}", v));
    }
    for v in &pb.vars {
        vars.push(format!("R{}", v));
    }

    let mut relations = vec![evar.mul(&evar).sub(&evar)];
    for i in 0..na {
        relations.push(IntPoly::var(nvars, 1 + i).mul(&one_minus_e));
    }
    for j in 0..nb {
        relations.push(IntPoly::var(nvars, 1 + na + j).mul(&evar));
    }
    for p in &pa.relations {
        let lifted = lift(p, 1);
        let c = IntPoly::constant(nvars, p.constant_term());
        relations.push(lifted.sub(&c.mul(&one_minus_e)));
    }
    for q in &pb.relations {
        let lifted = lift(q, 1 + na);
        let c = IntPoly::constant(nvars, q.constant_term());
        relations.push(lifted.sub(&c.mul(&evar)));
    }

    let ra = a.rank();
    let embed_left = |x: &RingElement| -> RingElement {
        let mut coords = vec![BigInt::zero(); ring.rank()];
        coords[..ra].clone_from_slice(&x.coords);
        RingElement::new(coords)
    };
    let embed_right = |x: &RingElement| -> RingElement {
        let mut coords = vec![BigInt::zero(); ring.rank()];
        coords[ra..].clone_from_slice(&x.coords);
        RingElement::new(coords)
    };
    let mut images = vec![embed_left(&a.one())];
    for img in &pa.images {
        images.push(embed_left(img));
    }
    for img in &pb.images {
        images.push(embed_right(img));
    }
    RingPresentation::new(vars, relations, ring.clone(), images)
}

/// Shorthands for the rings the paper's examples revolve around.
pub mod presets {
    use super::*;

    pub fn z() -> Ring {
        Ring::integers()
    }

    pub fn zmod(n: i64) -> Ring {
        Ring::integers_mod(&BigInt::from(n)).expect("valid modulus")
    }

    pub fn f2() -> Ring {
        zmod(2)
    }

    pub fn f3() -> Ring {
        zmod(3)
    }

    /// Z[√2] = Z[X]/(X²−2).
    pub fn z_sqrt2() -> Ring {
        Ring::monogenic(&[BigInt::from(-2), BigInt::zero()]).expect("X^2-2 monic")
    }

    /// Z[X]/(X²−X), isomorphic to Z×Z.
    pub fn z_idem() -> Ring {
        Ring::monogenic(&[BigInt::zero(), BigInt::from(-1)]).expect("X^2-X monic")
    }

    pub fn f2x_f2() -> Ring {
        Ring::product(&f2(), &f2()).expect("F2 x F2")
    }

    pub fn zxz() -> Ring {
        Ring::product(&z(), &z()).expect("Z x Z")
    }

    /// The whole test fleet: every ring family the examples use.
    pub fn all() -> Vec<Ring> {
        vec![
            z(),
            zmod(4),
            f2(),
            f3(),
            z_sqrt2(),
            z_idem(),
            f2x_f2(),
        ]
    }
}
