//! The twisted torsion product Tor₁(A^{[1]}, M) for 2-torsion A, and the
//! explicit connecting homomorphism τ: Tor₁((R/2R)^{[1]}, M) → Sym²(M)/im d.
//!
//! τ is computed by the closed formula: for a Tor class Σ_j r̄_j ⊗ f_j over a
//! presentation matrix (a_{ij}),
//!   τ[x] = Σ_i s_i·e_i² + Σ_j Σ_{i₁<i₂} r_j·a_{i₁j}·a_{i₂j}·e_{i₁}e_{i₂}
//! where 2s_i = Σ_j r_j a_{ij}². The snake-lemma chase through Γ²(M₀) gives
//! an independent oracle for the same map.

use crate::arith::{scaled_identity, solve_mod};
use crate::error::{Error, Result};
use crate::module::{
    kernel, twisted_tensor, twisted_tensor_map_left, twisted_tensor_map_right, FPModule,
    ModuleElement, ModuleMap,
};
use crate::ring::RingElement;

use super::objects::{functor_object_with_i2, FunctorTag};
use super::structure::QuadSuite;

/// Tor₁(A^{[1]}, M) computed from the presentation of M as
/// H₁( A⊗M₂ → A⊗M₁ → A⊗M₀ ) with Frobenius-squared transition matrices.
pub struct TwistedTor {
    pub a: FPModule,
    pub module: FPModule,
    /// K₁ = ker(A⊗M₁ → A⊗M₀); Tor generators live here.
    pub k1_incl: ModuleMap,
    pub tw_m1: FPModule,
    pub tw_m0: FPModule,
    pub m1: FPModule,
}

pub fn twisted_tor1(a: &FPModule, m: &FPModule) -> TwistedTor {
    let ring = m.ring().clone();
    let m0 = FPModule::free(ring.clone(), m.gens());
    let m1 = FPModule::free(ring.clone(), m.rels().len());
    let u1_cols: Vec<ModuleElement> = m.rels().iter().map(|q| m0.el(q.clone())).collect();
    let u1 = ModuleMap::expect_new(m1.clone(), m0.clone(), u1_cols, "presentation map");
    let tw_m1 = twisted_tensor(a, &m1).expect("A is 2-torsion");
    let tw_m0 = twisted_tensor(a, &m0).expect("A is 2-torsion");
    let t1 = twisted_tensor_map_right(a, &u1, &tw_m1, &tw_m0);
    let (k1, k1_incl) = kernel(&t1);

    // Quotient by the image of A ⊗ M₂ where M₂ covers ker(u₁).
    let (ku1, ku1_incl) = kernel(&u1);
    let m2 = FPModule::free(ring.clone(), ku1.gens());
    let u2 = ModuleMap::expect_new(m2.clone(), m1.clone(), ku1_incl.columns().to_vec(), "syzygies");
    let tw_m2 = twisted_tensor(a, &m2).expect("A is 2-torsion");
    let t2 = twisted_tensor_map_right(a, &u2, &tw_m2, &tw_m1);
    let mut rels = k1.rels().to_vec();
    for col in t2.columns() {
        let x = k1_incl
            .preimage(col)
            .expect("image of t2 lies in ker(t1)");
        rels.push(x.coords);
    }
    let module = FPModule::new(ring, k1.gens(), rels);
    TwistedTor {
        a: a.clone(),
        module,
        k1_incl: k1_incl.with_domain(k1),
        tw_m1,
        tw_m0,
        m1,
    }
}

/// Tor₁(α^{[1]}, Id_M) for α: A → A', both Tor objects built over the same M.
pub fn twisted_tor1_induced(
    alpha: &ModuleMap,
    ta: &TwistedTor,
    ta2: &TwistedTor,
) -> Result<ModuleMap> {
    let lmap = twisted_tensor_map_left(alpha, &ta.m1, &ta.tw_m1, &ta2.tw_m1);
    let mut cols = Vec::with_capacity(ta.module.gens());
    for t in 0..ta.module.gens() {
        let y = lmap.apply(&ta.k1_incl.columns()[t]);
        let x = ta2.k1_incl.preimage(&y).ok_or_else(|| {
            Error::Internal("induced Tor class leaves the kernel".to_string())
        })?;
        cols.push(ta2.module.el(x.coords));
    }
    ModuleMap::new(ta.module.clone(), ta2.module.clone(), cols)
}

/// τ by the explicit formula, as a map Tor₁((R/2R)^{[1]}, M) → W = Sym²/im d.
pub fn tau_explicit(suite: &QuadSuite, tor: &TwistedTor) -> Result<ModuleMap> {
    let ring = &suite.ring;
    let m = &suite.m;
    let (w_mod, _) = suite.w_bar_source();
    let rels = m.rels();
    let g = m.gens();
    let mut cols = Vec::with_capacity(tor.module.gens());
    for gen in 0..tor.module.gens() {
        // Coordinates r_j over the generators 1̄⊗f_j of (R/2R)⊗M₁.
        let r: Vec<RingElement> = tor.k1_incl.columns()[gen].coords.clone();
        let mut out = suite.sym2.module.zero_el();
        for i in 0..g {
            // Σ_j r_j a_{ij}² = 2 s_i, solved exactly modulo the ring lattice.
            let mut lhs = ring.zero();
            for (j, q) in rels.iter().enumerate() {
                let aij = &q[i];
                lhs = ring.add(&lhs, &ring.mul(&r[j], &ring.mul(aij, aij)));
            }
            let s_i = solve_mod(
                &scaled_identity(ring.rank(), &2.into()),
                &lhs.coords,
                ring.lattice(),
            )
            .ok_or_else(|| {
                Error::Internal(format!(
                    "tau: Σ r_j a_ij² = {:?} is not divisible by 2; not a Tor class",
                    lhs
                ))
            })?;
            let s_i = RingElement::new(s_i);
            let idx = suite.sym2.sym_idx(i, i);
            out.coords[idx] = ring.add(&out.coords[idx], &s_i);
        }
        for (j, q) in rels.iter().enumerate() {
            for i1 in 0..g {
                for i2 in (i1 + 1)..g {
                    let coeff = ring.mul(&r[j], &ring.mul(&q[i1], &q[i2]));
                    let idx = suite.sym2.sym_idx(i1, i2);
                    out.coords[idx] = ring.add(&out.coords[idx], &coeff);
                }
            }
        }
        cols.push(w_mod.el(out.coords));
    }
    ModuleMap::new(tor.module.clone(), w_mod.clone(), cols)
}

/// Independent snake-lemma oracle for τ: lift the Tor class to Γ²(M₁),
/// push along Γ²(u₁), pull back through w on the free layer, and project to
/// W. Shares only the canonical evaluators with the formula.
pub fn tau_snake_oracle(suite: &QuadSuite, tor: &TwistedTor) -> Result<ModuleMap> {
    let ring = &suite.ring;
    let m = &suite.m;
    let (w_mod, _) = suite.w_bar_source();
    let m0_free = FPModule::free(ring.clone(), m.gens());
    let m1_free = FPModule::free(ring.clone(), m.rels().len());
    let gm0 = functor_object_with_i2(FunctorTag::Gamma2, &m0_free, &suite.i2);
    let gm1 = functor_object_with_i2(FunctorTag::Gamma2, &m1_free, &suite.i2);
    let sm0 = functor_object_with_i2(FunctorTag::Sym2, &m0_free, &suite.i2);
    // w on the free layer Sym²(M₀) → Γ²(M₀).
    let mut w_cols = Vec::new();
    for i in 0..m.gens() {
        for j in i..m.gens() {
            let mut col = gm0.module.zero_el();
            if i == j {
                col.coords[gm0.gamma_idx(i)] = ring.int(2);
            } else {
                col.coords[gm0.cross_idx(i, j)] = ring.one();
            }
            w_cols.push(col);
        }
    }
    let w0 = ModuleMap::expect_new(sm0.module.clone(), gm0.module.clone(), w_cols, "w on M0");

    let mut cols = Vec::with_capacity(tor.module.gens());
    for gen in 0..tor.module.gens() {
        let r: Vec<RingElement> = tor.k1_incl.columns()[gen].coords.clone();
        // Lift through ρ on M₁: ξ = Σ_j r_j γ(f_j), then push to Γ²(M₀).
        let mut eta = gm0.module.zero_el();
        for (j, rj) in r.iter().enumerate() {
            let u1_fj = m0_free.el(m.rels()[j].clone());
            let gamma_img = gm0.gamma(&u1_fj);
            eta = gm0.module.add_el(&eta, &gm0.module.smul(rj, &gamma_img));
            let _ = &gm1;
        }
        // Pull back through w: any preimage differs by im d and so projects
        // to the same class of W.
        let sigma = w0.preimage(&eta).ok_or_else(|| {
            Error::Internal("snake chase: η is not in the image of w".to_string())
        })?;
        cols.push(w_mod.el(sigma.coords));
    }
    ModuleMap::new(tor.module.clone(), w_mod.clone(), cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::presets::*;
    use num_bigint::BigInt;

    fn tor_r2r(suite: &QuadSuite) -> TwistedTor {
        twisted_tor1(&suite.r_mod_2r(), &suite.m)
    }

    #[test]
    fn tau_is_zero_over_z() {
        let zz = z();
        for m in [
            FPModule::new(zz.clone(), 1, vec![vec![zz.int(2)]]),
            FPModule::new(zz.clone(), 1, vec![vec![zz.int(4)]]),
            FPModule::new(zz.clone(), 2, vec![vec![zz.int(2), zz.int(3)]]),
        ] {
            let suite = QuadSuite::new(&m);
            let tor = tor_r2r(&suite);
            let tau = tau_explicit(&suite, &tor).expect("tau well defined");
            assert!(tau.is_zero_map(), "tau must vanish over Z");
        }
    }

    #[test]
    fn tau_nonzero_surjective_over_zsqrt2() {
        // R = Z[√2], M = R/√2R: τ is nonzero and surjective.
        let r = z_sqrt2();
        let m = FPModule::new(r.clone(), 1, vec![vec![r.basis_el(1)]]);
        let suite = QuadSuite::new(&m);
        let tor = tor_r2r(&suite);
        let tau = tau_explicit(&suite, &tor).expect("tau well defined");
        assert!(!tau.is_zero_map());
        assert!(tau.is_surjective());
        // W = Sym²(M)/im d ≅ Z/2 here.
        let (w_mod, _) = suite.w_bar_source();
        assert_eq!(w_mod.invariants(), vec![BigInt::from(2)]);
    }

    #[test]
    fn tau_matches_snake_oracle() {
        for ring in [z(), zmod(4), z_sqrt2(), z_idem(), f2()] {
            let modules = vec![
                FPModule::new(ring.clone(), 1, vec![vec![ring.int(2)]]),
                FPModule::new(
                    ring.clone(),
                    2,
                    vec![vec![ring.int(2), ring.one()], vec![ring.zero(), ring.int(4)]],
                ),
            ];
            for m in modules {
                let suite = QuadSuite::new(&m);
                let tor = tor_r2r(&suite);
                let tau = tau_explicit(&suite, &tor).expect("tau");
                let oracle = tau_snake_oracle(&suite, &tor).expect("oracle");
                assert!(
                    tau.equals(&oracle),
                    "tau disagrees with snake oracle over {}",
                    ring.name()
                );
            }
        }
    }

    #[test]
    fn tor_vanishes_for_free_modules() {
        let r = z_sqrt2();
        let m = FPModule::free(r.clone(), 2);
        let suite = QuadSuite::new(&m);
        let tor = tor_r2r(&suite);
        assert!(tor.module.is_zero_module());
    }
}
