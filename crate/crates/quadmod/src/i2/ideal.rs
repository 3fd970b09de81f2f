//! The ideal I₂ generated by the elements r²−r, and the universal quadratic
//! derivation D(r) = r²−r.
//!
//! I₂ is finitely generated by `2` together with `b²−b` for the ring basis
//! elements b: the derivation rules reduce D of any integer combination of
//! basis elements to ring multiples of these. The labels `t_*`, `t_0`, ... of
//! this generating set are fixed here and reused by the ι-generators of P².

use num_bigint::BigInt;
use num_integer::Integer;

use crate::module::{submodule, FPModule, ModuleElement, ModuleMap};
use crate::ring::{Ring, RingElement};

/// I₂ as a finitely presented module with its inclusion into R.
#[derive(Clone, Debug)]
pub struct IdealI2 {
    pub module: FPModule,
    /// Into `FPModule::ring_module(R)`.
    pub inclusion: ModuleMap,
    /// `{2} ∪ {b_i²−b_i}` in the label order `t_*, t_0, ..., t_{n-1}`.
    pub generator_elements: Vec<RingElement>,
    /// Witnesses r_s with D(r_s) = generator s: `2, b_0, ..., b_{n-1}`.
    pub witnesses: Vec<RingElement>,
}

impl IdealI2 {
    pub fn ring(&self) -> &Ring {
        self.module.ring()
    }

    pub fn gens(&self) -> usize {
        self.module.gens()
    }

    /// Ring element of an I₂ class.
    pub fn include(&self, x: &ModuleElement) -> RingElement {
        self.inclusion.apply(x).coords[0].clone()
    }

    /// The element `2 ∈ I₂` (the first generator).
    pub fn two(&self) -> ModuleElement {
        self.module.gen_el(0)
    }
}

pub fn i2_labels(ring: &Ring) -> Vec<String> {
    let mut labels = vec!["t*".to_string()];
    for i in 0..ring.rank() {
        labels.push(format!("t{}", i));
    }
    labels
}

/// Computes I₂ as a submodule of R with the canonical finite generating set.
pub fn i2_ideal(ring: &Ring) -> IdealI2 {
    let r_mod = FPModule::ring_module(ring.clone());
    let gen_elements = ring.i2_generator_elements();
    let gens: Vec<ModuleElement> = gen_elements
        .iter()
        .map(|g| r_mod.el(vec![g.clone()]))
        .collect();
    let (module, inclusion) = submodule(&r_mod, &gens);
    let module = module.relabel(i2_labels(ring));
    let inclusion = inclusion.with_domain(module.clone());
    let mut witnesses = vec![ring.int(2)];
    for i in 0..ring.rank() {
        witnesses.push(ring.basis_el(i));
    }
    IdealI2 {
        module,
        inclusion,
        generator_elements: gen_elements,
        witnesses,
    }
}

/// `C(a, 2) = a(a-1)/2` for arbitrary integers.
pub fn binomial2(a: &BigInt) -> BigInt {
    let prod = a * (a - BigInt::from(1));
    let (q, r) = prod.div_rem(&BigInt::from(2));
    debug_assert!(num_traits::Zero::is_zero(&r));
    q
}

/// `D(r) = r²−r` expressed in I₂ generator coordinates, by the derivation
/// rules `D(u+v) = D(u)+D(v)+uv·D(2)`, `D(c·b) = c·D(b)+b²·D(c)` and
/// `D(c) = C(c,2)·D(2)` for integers c.
pub fn universal_derivation(i2: &IdealI2, r: &RingElement) -> ModuleElement {
    let ring = i2.ring();
    let n = ring.rank();
    let mut coeffs = vec![ring.zero(); i2.gens()];
    let mut acc = ring.zero(); // prefix sum of the terms handled so far
    for i in 0..n {
        let c = &r.coords[i];
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let b = ring.basis_el(i);
        let term = ring.scale(c, &b);
        // D(c·b) = c·D(b) + b²·C(c,2)·D(2)
        coeffs[1 + i] = ring.add(&coeffs[1 + i], &ring.int_big(c.clone()));
        let b2 = ring.mul(&b, &b);
        coeffs[0] = ring.add(&coeffs[0], &ring.scale(&binomial2(c), &b2));
        // cross term with what came before: acc·term·D(2)
        coeffs[0] = ring.add(&coeffs[0], &ring.mul(&acc, &term));
        acc = ring.add(&acc, &term);
    }
    let out = i2.module.el(coeffs);
    debug_assert!({
        let included = i2.include(&out);
        let expect = ring.sub(&ring.mul(r, r), r);
        ring.eq(&included, &expect)
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{bigs, Lattice};
    use crate::ring::presets::*;

    #[test]
    fn i2_of_z_is_2z() {
        let i2 = i2_ideal(&z());
        // Image lattice equals 2Z.
        assert_eq!(
            i2.inclusion.image_lattice(),
            Lattice::from_generator_vecs(1, &[bigs(&[2])])
        );
        assert_eq!(i2.module.invariants(), vec![BigInt::from(0)]);
    }

    #[test]
    fn i2_of_f2_is_zero() {
        let i2 = i2_ideal(&f2());
        assert!(i2.module.is_zero_module());
        let i2 = i2_ideal(&f2x_f2());
        assert!(i2.module.is_zero_module());
    }

    #[test]
    fn i2_of_zsqrt2_is_sqrt2_ideal() {
        let i2 = i2_ideal(&z_sqrt2());
        assert_eq!(
            i2.inclusion.image_lattice(),
            Lattice::from_generator_vecs(2, &[bigs(&[2, 0]), bigs(&[0, 1])])
        );
    }

    #[test]
    fn universal_derivation_examples() {
        let i2 = i2_ideal(&z());
        let d3 = universal_derivation(&i2, &z().int(3));
        assert!(z().eq(&i2.include(&d3), &z().int(6)));
        let d1 = universal_derivation(&i2, &z().int(1));
        assert!(i2.module.is_zero_el(&d1));

        let r = z_sqrt2();
        let i2 = i2_ideal(&r);
        let ds = universal_derivation(&i2, &r.basis_el(1));
        let expect = r.sub(&r.int(2), &r.basis_el(1)); // 2−√2
        assert!(r.eq(&i2.include(&ds), &expect));
    }

    #[test]
    fn derivation_rules_hold_in_i2() {
        // ϖ_{r+s}=ϖ_r+ϖ_s+rs·ϖ₂ and ϖ_{rs}=r·ϖ_s+s²·ϖ_r, and the symmetric
        // relation (r²−r)ϖ_s=(s²−s)ϖ_r.
        for ring in all() {
            let i2 = i2_ideal(&ring);
            let samples: Vec<RingElement> = sample_elements(&ring);
            for r in &samples {
                for s in &samples {
                    let dr = universal_derivation(&i2, r);
                    let ds = universal_derivation(&i2, s);
                    let drs = universal_derivation(&i2, &ring.add(r, s));
                    let rhs = i2.module.add_el(
                        &i2.module.add_el(&dr, &ds),
                        &i2.module.smul(&ring.mul(r, s), &i2.two()),
                    );
                    assert!(i2.module.eq(&drs, &rhs), "additivity in {}", ring.name());

                    let dprod = universal_derivation(&i2, &ring.mul(r, s));
                    let rhs = i2.module.add_el(
                        &i2.module.smul(r, &ds),
                        &i2.module.smul(&ring.mul(s, s), &dr),
                    );
                    assert!(i2.module.eq(&dprod, &rhs), "product rule in {}", ring.name());

                    let lhs = i2
                        .module
                        .smul(&ring.sub(&ring.mul(r, r), r), &ds);
                    let rhs = i2
                        .module
                        .smul(&ring.sub(&ring.mul(s, s), s), &dr);
                    assert!(i2.module.eq(&lhs, &rhs), "symmetric relation in {}", ring.name());
                }
            }
        }
    }

    fn sample_elements(ring: &Ring) -> Vec<RingElement> {
        let mut out = vec![ring.zero(), ring.one(), ring.int(2), ring.int(-1)];
        for i in 0..ring.rank() {
            out.push(ring.basis_el(i));
            out.push(ring.add(&ring.basis_el(i), &ring.one()));
        }
        out
    }
}
