//! The reduced presentation of I₂ over a presented ring, and the D-expansion
//! of polynomials over the presentation generators.
//!
//! For R = Z[X_i]/(P_α), the ideal I₂ is generated by π_i = ϖ(x_i) and
//! π_* = ϖ(2) subject to the symmetric relations (x_i²−x_i)π_j = (x_j²−x_j)π_i
//! and one relation per P_α obtained by expanding D(P_α) over the π's.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::i2::ideal::{binomial2, i2_ideal, universal_derivation, IdealI2};
use crate::module::{FPModule, ModuleMap};
use crate::poly::IntPoly;
use crate::ring::{RingElement, RingPresentation};

/// Coefficients λ with `D(P) = Σ λ_i·ϖ(x_i) + λ_*·ϖ(2)`, evaluated in the
/// target ring.
#[derive(Clone, Debug)]
pub struct DExpansion {
    pub var_coeffs: Vec<RingElement>,
    pub star_coeff: RingElement,
}

/// Expands `D(P) = P²−P` over `{ϖ(x_i)} ∪ {ϖ(2)}` for an integer polynomial
/// in the presentation variables. Certified by evaluating both sides in the
/// target ring.
pub fn d_expansion(p: &IntPoly, pres: &RingPresentation) -> Result<DExpansion> {
    let ring = &pres.target;
    let nv = pres.vars.len();
    if p.nvars() != nv {
        return Err(Error::Shape(format!(
            "polynomial has {} variables, presentation has {}",
            p.nvars(),
            nv
        )));
    }
    let mut var_coeffs = vec![ring.zero(); nv];
    let mut star_coeff = ring.zero();

    let monomials: Vec<(Vec<u32>, BigInt)> = p
        .terms()
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect();

    // D(a·M) parts: a·D(M) + C(a,2)·M²·ϖ(2).
    for (exps, a) in &monomials {
        // D(M) for the unitary monomial M = ∏ x_v^{m_v}:
        //   Σ_v  x_1^{2m_1}…x_{v-1}^{2m_{v-1}} (Σ_{j=m_v-1}^{2m_v-2} x_v^j)
        //        x_{v+1}^{m_{v+1}}…x_n^{m_n}  · ϖ(x_v)
        for v in 0..nv {
            let m_v = exps[v];
            if m_v == 0 {
                continue;
            }
            let mut coeff = IntPoly::constant(nv, BigInt::from(1));
            for w in 0..v {
                coeff = coeff.mul(&IntPoly::var(nv, w).pow(2 * exps[w]));
            }
            let mut power_sum = IntPoly::zero(nv);
            for j in (m_v - 1)..=(2 * m_v - 2) {
                power_sum = power_sum.add(&IntPoly::var(nv, v).pow(j));
            }
            coeff = coeff.mul(&power_sum);
            for w in (v + 1)..nv {
                coeff = coeff.mul(&IntPoly::var(nv, w).pow(exps[w]));
            }
            let value = coeff.eval_in(ring, &pres.images);
            var_coeffs[v] = ring.add(&var_coeffs[v], &ring.scale(a, &value));
        }
        // C(a,2)·M² on the star coordinate.
        let m_poly = IntPoly::monomial(nv, exps.clone(), BigInt::from(1));
        let m_sq = m_poly.mul(&m_poly).eval_in(ring, &pres.images);
        star_coeff = ring.add(&star_coeff, &ring.scale(&binomial2(a), &m_sq));
    }
    // Cross terms a_{k'} a_{k''} M_{k'} M_{k''} on the star coordinate.
    for k1 in 0..monomials.len() {
        for k2 in (k1 + 1)..monomials.len() {
            let (e1, a1) = &monomials[k1];
            let (e2, a2) = &monomials[k2];
            let prod = IntPoly::monomial(nv, e1.clone(), a1.clone())
                .mul(&IntPoly::monomial(nv, e2.clone(), a2.clone()));
            star_coeff = ring.add(&star_coeff, &prod.eval_in(ring, &pres.images));
        }
    }

    // Certification: Σ λ_v (x_v²−x_v) + λ_*·2  =  P(imgs)² − P(imgs).
    let mut lhs = ring.scale(&BigInt::from(2), &star_coeff);
    for v in 0..nv {
        let xv = &pres.images[v];
        let d_xv = ring.sub(&ring.mul(xv, xv), xv);
        lhs = ring.add(&lhs, &ring.mul(&var_coeffs[v], &d_xv));
    }
    let val = p.eval_in(ring, &pres.images);
    let rhs = ring.sub(&ring.mul(&val, &val), &val);
    if !ring.eq(&lhs, &rhs) {
        return Err(Error::Internal(format!(
            "D-expansion certification failed for {}",
            p
        )));
    }
    Ok(DExpansion {
        var_coeffs,
        star_coeff,
    })
}

/// The reduced presentation of I₂ with its certifying comparison map onto
/// `i2_ideal(R).module`. Generators are `π_1, ..., π_n, π_*`.
pub struct PresentedI2 {
    pub module: FPModule,
    pub comparison: ModuleMap,
    pub i2: IdealI2,
}

pub fn i2_presented(pres: &RingPresentation) -> Result<PresentedI2> {
    let ring = pres.target.clone();
    let nv = pres.vars.len();
    let gens = nv + 1; // π_v for each variable, then π_*
    let star = nv;

    // Images x_i of the generators of I_* = vars ∪ {*}, with x_* = 2.
    let image_of = |idx: usize| -> RingElement {
        if idx == star {
            ring.int(2)
        } else {
            pres.images[idx].clone()
        }
    };

    let mut rels: Vec<Vec<RingElement>> = Vec::new();
    // (x_i²−x_i)π_j = (x_j²−x_j)π_i for i < j over I_*.
    for i in 0..gens {
        for j in (i + 1)..gens {
            let xi = image_of(i);
            let xj = image_of(j);
            let di = ring.sub(&ring.mul(&xi, &xi), &xi);
            let dj = ring.sub(&ring.mul(&xj, &xj), &xj);
            let mut col = vec![ring.zero(); gens];
            col[j] = di;
            col[i] = ring.neg(&dj);
            rels.push(col);
        }
    }
    // D_S(P_α) = 0 for each relation polynomial.
    for p in &pres.relations {
        let exp = d_expansion(p, pres)?;
        let mut col = exp.var_coeffs.clone();
        col.push(exp.star_coeff.clone());
        rels.push(col);
    }
    let mut labels: Vec<String> = pres.vars.iter().map(|v| format!("pi_{}", v)).collect();
    labels.push("pi_*".to_string());
    let module = FPModule::with_labels(ring.clone(), gens, rels, labels);

    // Comparison onto the canonical I₂: π_i ↦ D(x_i), π_* ↦ D(2). The map
    // construction itself certifies that the presented relations hold in I₂.
    let i2 = i2_ideal(&ring);
    let mut cols = Vec::with_capacity(gens);
    for idx in 0..gens {
        cols.push(universal_derivation(&i2, &image_of(idx)));
    }
    let comparison = ModuleMap::new(module.clone(), i2.module.clone(), cols)?;
    Ok(PresentedI2 {
        module,
        comparison,
        i2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::presets::*;
    use crate::ring::Ring;
    use num_bigint::BigInt;

    #[test]
    fn d_expansion_examples() {
        // Over Z[X]/(X²−2): D(X²) = (X + X²)·ϖ(X).
        let pres = RingPresentation::canonical(&z_sqrt2()).unwrap();
        let ring = &pres.target;
        let x2 = IntPoly::var(1, 0).pow(2);
        let exp = d_expansion(&x2, &pres).unwrap();
        let sqrt2 = ring.basis_el(1);
        let expect = ring.add(&sqrt2, &ring.int(2)); // X + X² at X = √2
        assert!(ring.eq(&exp.var_coeffs[0], &expect));
        assert!(ring.is_zero_el(&exp.star_coeff));

        // D(2) = π_*.
        let two = IntPoly::constant(1, BigInt::from(2));
        let exp = d_expansion(&two, &pres).unwrap();
        assert!(ring.eq(&exp.star_coeff, &ring.one()));
        assert!(ring.is_zero_el(&exp.var_coeffs[0]));

        // D(3X) = 3·D(X) + 3X²·π_*.
        let p = IntPoly::var(1, 0).scale(&BigInt::from(3));
        let exp = d_expansion(&p, &pres).unwrap();
        assert!(ring.eq(&exp.var_coeffs[0], &ring.int(3)));
        let x_sq_3 = ring.scale(&BigInt::from(3), &ring.int(2)); // 3X² at √2
        assert!(ring.eq(&exp.star_coeff, &x_sq_3));
    }

    #[test]
    fn d_expansion_random_certification() {
        // Certification is baked into d_expansion; exercise degree ≤ 4.
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for ring in [z(), z_sqrt2(), z_idem(), zmod(4)] {
            let pres = RingPresentation::canonical(&ring).unwrap();
            let nv = pres.vars.len();
            for _ in 0..20 {
                let mut p = IntPoly::zero(nv);
                for _ in 0..4 {
                    let exps: Vec<u32> = (0..nv).map(|_| rng.gen_range(0..4)).collect();
                    let c = BigInt::from(rng.gen_range(-4i64..=4));
                    p = p.add(&IntPoly::monomial(nv, exps, c));
                }
                d_expansion(&p, &pres).expect("certified expansion");
            }
        }
    }

    #[test]
    fn presented_i2_integers() {
        // Z: one generator π_*, no relation polys; comparison is iso onto 2Z.
        let pres = RingPresentation::canonical(&z()).unwrap();
        let p = i2_presented(&pres).unwrap();
        assert_eq!(p.module.gens(), 1);
        assert_eq!(p.module.invariants(), vec![BigInt::from(0)]);
        assert!(p.comparison.is_isomorphism());
    }

    #[test]
    fn presented_i2_idempotent_ring() {
        // Z[X]/(X²−X): generators π_X, π_*; comparison is an isomorphism onto
        // I₂ ≅ 2Z×2Z (invariants (0,0)).
        let pres = RingPresentation::canonical(&z_idem()).unwrap();
        let p = i2_presented(&pres).unwrap();
        assert_eq!(p.module.invariants(), vec![BigInt::from(0), BigInt::from(0)]);
        assert!(p.comparison.is_isomorphism());
    }

    #[test]
    fn presented_i2_sqrt2() {
        let pres = RingPresentation::canonical(&z_sqrt2()).unwrap();
        let p = i2_presented(&pres).unwrap();
        assert!(p.comparison.is_isomorphism());
    }

    #[test]
    fn presented_i2_zmod4_via_explicit_presentation() {
        // Z[X]/(X, 4) ≅ Z/4.
        let ring = zmod(4);
        let pres = RingPresentation::new(
            vec!["X1".to_string()],
            vec![IntPoly::var(1, 0), IntPoly::constant(1, BigInt::from(4))],
            ring.clone(),
            vec![ring.zero()],
        )
        .unwrap();
        let p = i2_presented(&pres).unwrap();
        assert!(p.comparison.is_isomorphism());
    }

    #[test]
    fn presented_i2_two_variable_sample() {
        // Z[X,Y]/(X²−X, Y²−Y, XY): rank-3 ring with basis 1, x, y.
        let ring = two_idempotent_ring();
        let x = IntPoly::var(2, 0);
        let y = IntPoly::var(2, 1);
        let pres = RingPresentation::new(
            vec!["X1".to_string(), "X2".to_string()],
            vec![
                x.mul(&x).sub(&x),
                y.mul(&y).sub(&y),
                x.mul(&y),
            ],
            ring.clone(),
            vec![ring.basis_el(1), ring.basis_el(2)],
        )
        .unwrap();
        let p = i2_presented(&pres).unwrap();
        assert!(p.comparison.is_isomorphism());
    }

    pub(crate) fn two_idempotent_ring() -> Ring {
        use crate::arith::bigs;
        use crate::arith::Lattice;
        use crate::ring::Preset;
        // basis 1, x, y with x²=x, y²=y, xy=0.
        let mul = vec![
            bigs(&[1, 0, 0]),
            bigs(&[0, 1, 0]),
            bigs(&[0, 0, 1]),
            bigs(&[0, 1, 0]),
            bigs(&[0, 1, 0]),
            bigs(&[0, 0, 0]),
            bigs(&[0, 0, 1]),
            bigs(&[0, 0, 0]),
            bigs(&[0, 0, 1]),
        ];
        Ring::from_parts(
            "Z[x,y]/(x²−x,y²−y,xy)",
            3,
            Lattice::zero(3),
            mul,
            bigs(&[1, 0, 0]),
            Preset::Custom,
        )
        .expect("valid ring")
    }
}
