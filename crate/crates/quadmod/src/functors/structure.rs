//! The structure maps of P²(M) and the pushout modules K'(M), K(M).
//!
//! All maps are built on the labeled generators of the functor objects; the
//! generator-level formulas are the element-wise definitions applied to basis
//! elements. Construction re-checks well-definedness against the presented
//! relations, so an incorrect formula cannot silently produce a map.

use std::cell::OnceCell;

use crate::error::Result;
use crate::i2::{i2_ideal, IdealI2};
use crate::module::{
    cokernel, direct_sum, pushout, tensor, two_torsion, twisted_tensor, DirectSum, FPModule,
    ModuleElement, ModuleMap,
};
use crate::ring::Ring;

/// Names of the structure maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureMapName {
    Epsilon,
    Phi1,
    Phi2,
    W,
    V,
    D,
    J11,
    J12,
    J21,
    J22,
    Eta1,
    Eta2,
    Theta1,
    Theta2,
    J1,
    J2,
    Chi,
    G2,
    Psi1,
    Psi2,
}

pub const ALL_STRUCTURE_MAPS: [StructureMapName; 20] = [
    StructureMapName::Epsilon,
    StructureMapName::Phi1,
    StructureMapName::Phi2,
    StructureMapName::W,
    StructureMapName::V,
    StructureMapName::D,
    StructureMapName::J11,
    StructureMapName::J12,
    StructureMapName::J21,
    StructureMapName::J22,
    StructureMapName::Eta1,
    StructureMapName::Eta2,
    StructureMapName::Theta1,
    StructureMapName::Theta2,
    StructureMapName::J1,
    StructureMapName::J2,
    StructureMapName::Chi,
    StructureMapName::G2,
    StructureMapName::Psi1,
    StructureMapName::Psi2,
];

impl StructureMapName {
    pub fn token(&self) -> &'static str {
        match self {
            StructureMapName::Epsilon => "epsilon",
            StructureMapName::Phi1 => "phi1",
            StructureMapName::Phi2 => "phi2",
            StructureMapName::W => "w",
            StructureMapName::V => "v",
            StructureMapName::D => "d",
            StructureMapName::J11 => "j11",
            StructureMapName::J12 => "j12",
            StructureMapName::J21 => "j21",
            StructureMapName::J22 => "j22",
            StructureMapName::Eta1 => "eta1",
            StructureMapName::Eta2 => "eta2",
            StructureMapName::Theta1 => "theta1",
            StructureMapName::Theta2 => "theta2",
            StructureMapName::J1 => "j1",
            StructureMapName::J2 => "j2",
            StructureMapName::Chi => "chi",
            StructureMapName::G2 => "g2",
            StructureMapName::Psi1 => "psi1",
            StructureMapName::Psi2 => "psi2",
        }
    }

    pub fn from_token(t: &str) -> Option<Self> {
        ALL_STRUCTURE_MAPS.iter().copied().find(|n| n.token() == t)
    }
}

/// K'(M) and K(M) with their structure maps.
#[derive(Clone, Debug)]
pub struct KModules {
    pub kprime: FPModule,
    pub eta1: ModuleMap,
    pub eta2: ModuleMap,
    pub k: FPModule,
    pub theta1: ModuleMap,
    pub theta2: ModuleMap,
    /// φ: K(M) → P²(M) with φ∘θ₁ = φ₁ and φ∘θ₂ = φ₂.
    pub phi: ModuleMap,
    /// j₁: K'(M) → Sym²(M) and j₂: K'(M) → I₂⊗Γ²(M).
    pub j1: ModuleMap,
    pub j2: ModuleMap,
}

/// Shared context for one module M: the functor objects, tensor targets, and
/// lazily built derived modules. Everything is deterministic in M, so two
/// suites over equal presentations produce structurally equal objects.
pub struct QuadSuite {
    pub ring: Ring,
    pub m: FPModule,
    pub i2: IdealI2,
    pub sym2: super::objects::FunctorObject,
    pub lambda2: super::objects::FunctorObject,
    pub gamma2: super::objects::FunctorObject,
    pub p2: super::objects::FunctorObject,
    /// I₂ ⊗ Sym²(M) and I₂ ⊗ Γ²(M).
    pub i2_sym2: FPModule,
    pub i2_gamma2: FPModule,
    kmods: OnceCell<KModules>,
    coker_phi1: OnceCell<(FPModule, ModuleMap)>,
    coker_phi2: OnceCell<(FPModule, ModuleMap)>,
    w_bar_target: OnceCell<(FPModule, ModuleMap)>,
}

impl QuadSuite {
    pub fn new(m: &FPModule) -> QuadSuite {
        let ring = m.ring().clone();
        let i2 = i2_ideal(&ring);
        let sym2 = super::objects::functor_object_with_i2(super::FunctorTag::Sym2, m, &i2);
        let lambda2 = super::objects::functor_object_with_i2(super::FunctorTag::Lambda2, m, &i2);
        let gamma2 = super::objects::functor_object_with_i2(super::FunctorTag::Gamma2, m, &i2);
        let p2 = super::objects::functor_object_with_i2(super::FunctorTag::P2, m, &i2);
        let i2_sym2 = tensor(&i2.module, &sym2.module);
        let i2_gamma2 = tensor(&i2.module, &gamma2.module);
        QuadSuite {
            ring,
            m: m.clone(),
            i2,
            sym2,
            lambda2,
            gamma2,
            p2,
            i2_sym2,
            i2_gamma2,
            kmods: OnceCell::new(),
            coker_phi1: OnceCell::new(),
            coker_phi2: OnceCell::new(),
            w_bar_target: OnceCell::new(),
        }
    }

    fn g(&self) -> usize {
        self.m.gens()
    }

    fn t(&self) -> usize {
        self.i2.gens()
    }

    /// Index of `t_s ⊗ (sym2 gen p)` in I₂⊗Sym²(M).
    fn i2sym_idx(&self, s: usize, p: usize) -> usize {
        s * self.sym2.module.gens() + p
    }

    fn i2gamma_idx(&self, s: usize, p: usize) -> usize {
        s * self.gamma2.module.gens() + p
    }

    // ----- the individual structure maps -----

    /// ε: P²(M) → M, u_i ↦ e_i, ι_i(t) ↦ 0, c_{ij} ↦ 0.
    pub fn epsilon(&self) -> ModuleMap {
        let mut cols = vec![self.m.zero_el(); self.p2.module.gens()];
        for i in 0..self.g() {
            cols[self.p2.u_idx(i)] = self.m.gen_el(i);
        }
        ModuleMap::expect_new(self.p2.module.clone(), self.m.clone(), cols, "epsilon")
    }

    /// φ₁: Sym²(M) → P²(M), xy ↦ p(x+y)−p(x)−p(y) = d_p(x,y).
    pub fn phi1(&self) -> ModuleMap {
        let g = self.g();
        let mut cols = Vec::new();
        for i in 0..g {
            for j in i..g {
                cols.push(self.p2.dp(&self.m.gen_el(i), &self.m.gen_el(j)));
            }
        }
        ModuleMap::expect_new(self.sym2.module.clone(), self.p2.module.clone(), cols, "phi1")
    }

    /// φ₂: I₂⊗Γ²(M) → P²(M), t⊗γ₂(e_i) ↦ ι_i(t), t⊗cr_{ij} ↦ t·c_{ij}.
    pub fn phi2(&self) -> ModuleMap {
        let g = self.g();
        let mut cols = vec![self.p2.module.zero_el(); self.i2_gamma2.gens()];
        for s in 0..self.t() {
            let t_el = self.i2.generator_elements[s].clone();
            for i in 0..g {
                let mut col = self.p2.module.zero_el();
                col.coords[self.p2.iota_idx(i, s)] = self.ring.one();
                cols[self.i2gamma_idx(s, self.gamma2.gamma_idx(i))] = col;
            }
            for i in 0..g {
                for j in (i + 1)..g {
                    let mut col = self.p2.module.zero_el();
                    col.coords[self.p2.c_idx(i, j)] = t_el.clone();
                    cols[self.i2gamma_idx(s, self.gamma2.cross_idx(i, j))] = col;
                }
            }
        }
        ModuleMap::expect_new(
            self.i2_gamma2.clone(),
            self.p2.module.clone(),
            cols,
            "phi2",
        )
    }

    /// w: Sym²(M) → Γ²(M), e_i² ↦ 2γ(e_i), e_ie_j ↦ cr_{ij}.
    pub fn w(&self) -> ModuleMap {
        let g = self.g();
        let mut cols = Vec::new();
        for i in 0..g {
            for j in i..g {
                let mut col = self.gamma2.module.zero_el();
                if i == j {
                    col.coords[self.gamma2.gamma_idx(i)] = self.ring.int(2);
                } else {
                    col.coords[self.gamma2.cross_idx(i, j)] = self.ring.one();
                }
                cols.push(col);
            }
        }
        ModuleMap::expect_new(self.sym2.module.clone(), self.gamma2.module.clone(), cols, "w")
    }

    /// v: Sym²(M) → I₂⊗Sym²(M), z ↦ 2⊗z = t_*⊗z.
    pub fn v(&self) -> ModuleMap {
        let mut cols = Vec::new();
        for p in 0..self.sym2.module.gens() {
            let mut col = self.i2_sym2.zero_el();
            col.coords[self.i2sym_idx(0, p)] = self.ring.one();
            cols.push(col);
        }
        ModuleMap::expect_new(self.sym2.module.clone(), self.i2_sym2.clone(), cols, "v")
    }

    /// The 2-torsion of R as a module, with inclusion into R.
    pub fn two_torsion_r(&self) -> (FPModule, ModuleMap) {
        two_torsion(&FPModule::ring_module(self.ring.clone()))
    }

    /// `(₂R)^{[1]} ⊗ M`, the domain of d.
    pub fn tw_2r_m(&self) -> FPModule {
        let (tr, _) = self.two_torsion_r();
        twisted_tensor(&tr, &self.m).expect("₂R is 2-torsion")
    }

    /// d: (₂R)^{[1]}⊗M → Sym²(M), r⊗x ↦ r·x².
    pub fn d(&self) -> ModuleMap {
        let (tr, tr_incl) = self.two_torsion_r();
        let dom = self.tw_2r_m();
        let mut cols = Vec::with_capacity(dom.gens());
        for a in 0..tr.gens() {
            let r_el = tr_incl.columns()[a].coords[0].clone();
            for j in 0..self.g() {
                let sq = self.sym2.sym_product(&self.m.gen_el(j), &self.m.gen_el(j));
                cols.push(self.sym2.module.smul(&r_el, &sq));
            }
        }
        ModuleMap::expect_new(dom, self.sym2.module.clone(), cols, "d")
    }

    /// j₁₁: I₂⊗Sym²(M) → Sym²(M), t⊗z ↦ t·z.
    pub fn j11(&self) -> ModuleMap {
        let mut cols = Vec::with_capacity(self.i2_sym2.gens());
        for s in 0..self.t() {
            let t_el = &self.i2.generator_elements[s];
            for p in 0..self.sym2.module.gens() {
                cols.push(self.sym2.module.gen_scaled(p, t_el));
            }
        }
        ModuleMap::expect_new(self.i2_sym2.clone(), self.sym2.module.clone(), cols, "j11")
    }

    /// j₁₂: Γ²(M) → Sym²(M), γ(e_i) ↦ e_i², cr_{ij} ↦ 2·e_ie_j.
    pub fn j12(&self) -> ModuleMap {
        let g = self.g();
        let mut cols = vec![self.sym2.module.zero_el(); self.gamma2.module.gens()];
        for i in 0..g {
            cols[self.gamma2.gamma_idx(i)] =
                self.sym2.sym_product(&self.m.gen_el(i), &self.m.gen_el(i));
        }
        for i in 0..g {
            for j in (i + 1)..g {
                let prod = self.sym2.sym_product(&self.m.gen_el(i), &self.m.gen_el(j));
                cols[self.gamma2.cross_idx(i, j)] = self.sym2.module.int_smul(2, &prod);
            }
        }
        ModuleMap::expect_new(self.gamma2.module.clone(), self.sym2.module.clone(), cols, "j12")
    }

    /// j₂₁ = Id⊗w: I₂⊗Sym²(M) → I₂⊗Γ²(M).
    pub fn j21(&self) -> ModuleMap {
        let g = self.g();
        let w = self.w();
        let mut cols = Vec::with_capacity(self.i2_sym2.gens());
        for s in 0..self.t() {
            for p in 0..self.sym2.module.gens() {
                let w_img = &w.columns()[p];
                let mut col = self.i2_gamma2.zero_el();
                for q in 0..self.gamma2.module.gens() {
                    col.coords[self.i2gamma_idx(s, q)] = w_img.coords[q].clone();
                }
                cols.push(col);
            }
        }
        let _ = g;
        ModuleMap::expect_new(self.i2_sym2.clone(), self.i2_gamma2.clone(), cols, "j21")
    }

    /// j₂₂: Γ²(M) → I₂⊗Γ²(M), z ↦ 2⊗z.
    pub fn j22(&self) -> ModuleMap {
        let mut cols = Vec::with_capacity(self.gamma2.module.gens());
        for q in 0..self.gamma2.module.gens() {
            let mut col = self.i2_gamma2.zero_el();
            col.coords[self.i2gamma_idx(0, q)] = self.ring.one();
            cols.push(col);
        }
        ModuleMap::expect_new(self.gamma2.module.clone(), self.i2_gamma2.clone(), cols, "j22")
    }

    /// K'(M) and K(M) with all structure maps.
    pub fn k_modules(&self) -> &KModules {
        self.kmods.get_or_init(|| {
            // K' = pushout of I₂⊗Sym² ←v− Sym² −w→ Γ².
            let po1 = pushout(&self.v(), &self.w());
            let kprime = po1.module.clone();
            let eta1 = po1.in_left;
            let eta2 = po1.in_right;
            // j₁, j₂ out of the pushout via j₁₁/j₁₂ and j₂₁/j₂₂.
            let mut j1_cols = self.j11().columns().to_vec();
            j1_cols.extend(self.j12().columns().to_vec());
            let j1 = ModuleMap::expect_new(
                kprime.clone(),
                self.sym2.module.clone(),
                j1_cols,
                "j1 (needs j11∘v = j12∘w)",
            );
            let mut j2_cols = self.j21().columns().to_vec();
            j2_cols.extend(self.j22().columns().to_vec());
            let j2 = ModuleMap::expect_new(
                kprime.clone(),
                self.i2_gamma2.clone(),
                j2_cols,
                "j2 (needs j21∘v = j22∘w)",
            );
            // K = pushout of Sym² ←(j11,j12)− (I₂⊗Sym²)⊕Γ² −(j21,j22)→ I₂⊗Γ².
            let dsum = direct_sum(&self.i2_sym2, &self.gamma2.module);
            let left = pair_map(&dsum, &self.j11(), &self.j12());
            let right = pair_map(&dsum, &self.j21(), &self.j22());
            let po2 = pushout(&left, &right);
            let k = po2.module.clone();
            let theta1 = po2.in_left;
            let theta2 = po2.in_right;
            // φ: K → P² with φθ₁ = φ₁, φθ₂ = φ₂ (well defined by the lemma
            // relations φ₁j₁₁ = φ₂j₂₁ and φ₁j₁₂ = φ₂j₂₂).
            let mut phi_cols = self.phi1().columns().to_vec();
            phi_cols.extend(self.phi2().columns().to_vec());
            let phi = ModuleMap::expect_new(
                k.clone(),
                self.p2.module.clone(),
                phi_cols,
                "phi (needs the lemma identities)",
            );
            KModules {
                kprime,
                eta1,
                eta2,
                k,
                theta1,
                theta2,
                phi,
                j1,
                j2,
            }
        })
    }

    /// χ: I₂⊗M → P²(M), t⊗e_i ↦ ι_i(t) − t·u_i.
    pub fn chi(&self) -> ModuleMap {
        let dom = tensor(&self.i2.module, &self.m);
        let g = self.g();
        let mut cols = Vec::with_capacity(dom.gens());
        for s in 0..self.t() {
            let t_el = &self.i2.generator_elements[s];
            for i in 0..g {
                let mut col = self.p2.module.zero_el();
                col.coords[self.p2.iota_idx(i, s)] = self.ring.one();
                col.coords[self.p2.u_idx(i)] = self.ring.neg(t_el);
                cols.push(col);
            }
        }
        ModuleMap::expect_new(dom, self.p2.module.clone(), cols, "chi")
    }

    /// g₂: P²(M) → Γ²(M), u_i ↦ γ(e_i), ι_i(t) ↦ t·γ(e_i), c_{ij} ↦ cr_{ij}.
    pub fn g2(&self) -> ModuleMap {
        let g = self.g();
        let mut cols = vec![self.gamma2.module.zero_el(); self.p2.module.gens()];
        for i in 0..g {
            let mut col = self.gamma2.module.zero_el();
            col.coords[self.gamma2.gamma_idx(i)] = self.ring.one();
            cols[self.p2.u_idx(i)] = col;
            for s in 0..self.t() {
                let mut col = self.gamma2.module.zero_el();
                col.coords[self.gamma2.gamma_idx(i)] = self.i2.generator_elements[s].clone();
                cols[self.p2.iota_idx(i, s)] = col;
            }
        }
        for i in 0..g {
            for j in (i + 1)..g {
                let mut col = self.gamma2.module.zero_el();
                col.coords[self.gamma2.cross_idx(i, j)] = self.ring.one();
                cols[self.p2.c_idx(i, j)] = col;
            }
        }
        ModuleMap::expect_new(self.p2.module.clone(), self.gamma2.module.clone(), cols, "g2")
    }

    /// coker φ₁ with projection q₁.
    pub fn coker_phi1(&self) -> &(FPModule, ModuleMap) {
        self.coker_phi1.get_or_init(|| cokernel(&self.phi1()))
    }

    /// coker φ₂ with projection q₂.
    pub fn coker_phi2(&self) -> &(FPModule, ModuleMap) {
        self.coker_phi2.get_or_init(|| cokernel(&self.phi2()))
    }

    /// W = Sym²(M)/im(d) with projection.
    pub fn w_bar_source(&self) -> &(FPModule, ModuleMap) {
        self.w_bar_target.get_or_init(|| cokernel(&self.d()))
    }

    /// I₂/2R as a module (cokernel of R → I₂, 1 ↦ 2).
    pub fn i2_mod_2r(&self) -> (FPModule, ModuleMap) {
        let rmod = FPModule::ring_module(self.ring.clone());
        let two = self.i2.module.gen_el(0); // t_* is the element 2
        let mul2 = ModuleMap::expect_new(
            rmod,
            self.i2.module.clone(),
            vec![two],
            "R → I₂ by 2",
        );
        cokernel(&mul2)
    }

    /// R/2R as a module.
    pub fn r_mod_2r(&self) -> FPModule {
        let rmod = FPModule::ring_module(self.ring.clone());
        cokernel(&ModuleMap::scalar(&rmod, 2)).0
    }

    /// R/I₂ as a module (cokernel of the inclusion).
    pub fn r_mod_i2(&self) -> FPModule {
        cokernel(&self.i2.inclusion).0
    }

    /// I₂/2I₂.
    pub fn i2_mod_2i2(&self) -> FPModule {
        cokernel(&ModuleMap::scalar(&self.i2.module, 2)).0
    }

    /// ψ₁: (I₂/2R)^{[1]}⊗M → coker φ₁, t̄⊗e_i ↦ q₁(φ₂(t⊗γ₂(e_i))) = q₁(ι_i(t)).
    pub fn psi1(&self) -> ModuleMap {
        let (i2m2r, _) = self.i2_mod_2r();
        let dom = twisted_tensor(&i2m2r, &self.m).expect("I₂/2R is 2-torsion");
        let (coker1, q1) = self.coker_phi1();
        let g = self.g();
        let mut cols = Vec::with_capacity(dom.gens());
        for s in 0..self.t() {
            for i in 0..g {
                let mut iota = self.p2.module.zero_el();
                iota.coords[self.p2.iota_idx(i, s)] = self.ring.one();
                cols.push(q1.apply(&iota));
            }
        }
        ModuleMap::expect_new(dom, coker1.clone(), cols, "psi1")
    }

    /// ψ₂: (R/I₂)⊗Λ²(M) → coker φ₂, r̄⊗(x∧y) ↦ q₂(φ₁(r·xy)).
    pub fn psi2(&self) -> ModuleMap {
        let r_mod_i2 = self.r_mod_i2();
        let dom = tensor(&r_mod_i2, &self.lambda2.module);
        let (coker2, q2) = self.coker_phi2();
        let g = self.g();
        let mut cols = Vec::with_capacity(dom.gens());
        for i in 0..g {
            for j in (i + 1)..g {
                let mut c = self.p2.module.zero_el();
                c.coords[self.p2.c_idx(i, j)] = self.ring.one();
                cols.push(q2.apply(&c));
            }
        }
        ModuleMap::expect_new(dom, coker2.clone(), cols, "psi2")
    }

    /// ε₁: coker φ₁ → M induced by ε.
    pub fn epsilon1(&self) -> ModuleMap {
        let (coker1, _) = self.coker_phi1();
        ModuleMap::expect_new(
            coker1.clone(),
            self.m.clone(),
            self.epsilon().columns().to_vec(),
            "epsilon1",
        )
    }

    /// ε₂: coker φ₂ → M induced by ε.
    pub fn epsilon2(&self) -> ModuleMap {
        let (coker2, _) = self.coker_phi2();
        ModuleMap::expect_new(
            coker2.clone(),
            self.m.clone(),
            self.epsilon().columns().to_vec(),
            "epsilon2",
        )
    }

    /// φ̄₁: W = Sym²/im d → P²(M) induced by φ₁.
    pub fn phi1_bar(&self) -> ModuleMap {
        let (w_mod, _) = self.w_bar_source();
        ModuleMap::expect_new(
            w_mod.clone(),
            self.p2.module.clone(),
            self.phi1().columns().to_vec(),
            "phi1_bar (needs im d ⊆ ker φ₁)",
        )
    }

    /// w̄: W → Γ²(M) induced by w.
    pub fn w_bar(&self) -> ModuleMap {
        let (w_mod, _) = self.w_bar_source();
        ModuleMap::expect_new(
            w_mod.clone(),
            self.gamma2.module.clone(),
            self.w().columns().to_vec(),
            "w_bar (needs im d ⊆ ker w)",
        )
    }

    /// `(R/2R)^{[1]} ⊗ M`.
    pub fn tw_r2r_m(&self) -> FPModule {
        twisted_tensor(&self.r_mod_2r(), &self.m).expect("R/2R is 2-torsion")
    }

    /// ρ: Γ²(M) → (R/2R)^{[1]}⊗M, γ(e_i) ↦ 1̄⊗e_i, cr ↦ 0.
    pub fn rho(&self) -> ModuleMap {
        let cod = self.tw_r2r_m();
        let g = self.g();
        let mut cols = vec![cod.zero_el(); self.gamma2.module.gens()];
        for i in 0..g {
            // generator (0, i) of the twisted tensor (R/2R has one generator)
            let mut col = cod.zero_el();
            col.coords[i] = self.ring.one();
            cols[self.gamma2.gamma_idx(i)] = col;
        }
        ModuleMap::expect_new(self.gamma2.module.clone(), cod, cols, "rho")
    }

    /// Dispatch by name.
    pub fn structure_map(&self, name: StructureMapName) -> ModuleMap {
        match name {
            StructureMapName::Epsilon => self.epsilon(),
            StructureMapName::Phi1 => self.phi1(),
            StructureMapName::Phi2 => self.phi2(),
            StructureMapName::W => self.w(),
            StructureMapName::V => self.v(),
            StructureMapName::D => self.d(),
            StructureMapName::J11 => self.j11(),
            StructureMapName::J12 => self.j12(),
            StructureMapName::J21 => self.j21(),
            StructureMapName::J22 => self.j22(),
            StructureMapName::Eta1 => self.k_modules().eta1.clone(),
            StructureMapName::Eta2 => self.k_modules().eta2.clone(),
            StructureMapName::Theta1 => self.k_modules().theta1.clone(),
            StructureMapName::Theta2 => self.k_modules().theta2.clone(),
            StructureMapName::J1 => self.k_modules().j1.clone(),
            StructureMapName::J2 => self.k_modules().j2.clone(),
            StructureMapName::Chi => self.chi(),
            StructureMapName::G2 => self.g2(),
            StructureMapName::Psi1 => self.psi1(),
            StructureMapName::Psi2 => self.psi2(),
        }
    }

    /// `t⊗z` in I₂⊗Γ²(M) from I₂ coordinates and a Γ² element.
    pub fn i2_gamma2_elem(&self, t: &ModuleElement, z: &ModuleElement) -> ModuleElement {
        crate::module::tensor_elem(&self.i2_gamma2, &self.i2.module, &self.gamma2.module, t, z)
    }
}

/// `(f,g): A⊕B → C` from maps with a common codomain.
pub fn pair_map(dsum: &DirectSum, f: &ModuleMap, g: &ModuleMap) -> ModuleMap {
    assert_eq!(f.codomain(), g.codomain());
    let mut cols = f.columns().to_vec();
    cols.extend(g.columns().to_vec());
    ModuleMap::expect_new(
        dsum.module.clone(),
        f.codomain().clone(),
        cols,
        "pair map on a direct sum",
    )
}

pub fn structure_map(name: StructureMapName, m: &FPModule) -> ModuleMap {
    QuadSuite::new(m).structure_map(name)
}

pub fn k_modules(m: &FPModule) -> KModules {
    QuadSuite::new(m).k_modules().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::is_exact_at;
    use crate::ring::presets::*;
    use num_bigint::BigInt;

    #[test]
    fn epsilon_splits_p() {
        // ε(p(x)) = x on samples in Z² and Z/4.
        let zz = z();
        for m in [
            FPModule::free(zz.clone(), 2),
            FPModule::new(zz.clone(), 1, vec![vec![zz.int(4)]]),
        ] {
            let suite = QuadSuite::new(&m);
            let eps = suite.epsilon();
            for x in crate::module::small_elements(&m) {
                let p = suite.p2.p_of(&suite.i2, &x);
                assert!(m.eq(&eps.apply(&p), &x));
            }
        }
    }

    #[test]
    fn all_structure_maps_build_everywhere() {
        for ring in all() {
            let m = FPModule::new(ring.clone(), 2, vec![vec![ring.int(2), ring.int(0)]]);
            let suite = QuadSuite::new(&m);
            for name in ALL_STRUCTURE_MAPS {
                let _ = suite.structure_map(name);
            }
        }
    }

    #[test]
    fn lemma_identities() {
        // j₁₁v = j₁₂w, j₂₁v = j₂₂w, φ₁j₁₁ = φ₂j₂₁, φ₁j₁₂ = φ₂j₂₂.
        for ring in [z(), zmod(4), z_sqrt2(), f2()] {
            let m = FPModule::new(ring.clone(), 2, vec![vec![ring.int(2), ring.one()]]);
            let s = QuadSuite::new(&m);
            assert!(s.j11().compose(&s.v()).equals(&s.j12().compose(&s.w())));
            assert!(s.j21().compose(&s.v()).equals(&s.j22().compose(&s.w())));
            assert!(s.phi1().compose(&s.j11()).equals(&s.phi2().compose(&s.j21())));
            assert!(s.phi1().compose(&s.j12()).equals(&s.phi2().compose(&s.j22())));
        }
    }

    #[test]
    fn k_of_r_is_i2() {
        // K(R) ≅ I₂: over Z that is 2Z ≅ Z, invariants (0).
        let m = FPModule::ring_module(z());
        let suite = QuadSuite::new(&m);
        let k = suite.k_modules();
        assert_eq!(k.k.invariants(), vec![BigInt::from(0)]);

        // K(R²) over Z: (⊕_i I₂) ⊕ (⊕_{i<j} R), invariants (0,0,0).
        let m2 = FPModule::free(z(), 2);
        let suite2 = QuadSuite::new(&m2);
        assert_eq!(
            suite2.k_modules().k.invariants(),
            vec![BigInt::from(0); 3]
        );
    }

    #[test]
    fn k_of_f2_squared_is_lambda2() {
        // Over F2, K(M) ≅ Λ²(M); for M = F2² that is F2.
        let m = FPModule::free(f2(), 2);
        let suite = QuadSuite::new(&m);
        assert_eq!(suite.k_modules().k.invariants(), vec![BigInt::from(2)]);
        assert_eq!(suite.lambda2.module.invariants(), vec![BigInt::from(2)]);
    }

    #[test]
    fn main_sequence_on_samples() {
        for ring in [z(), f2(), z_sqrt2()] {
            let m = FPModule::new(ring.clone(), 1, vec![vec![ring.int(2)]]);
            let suite = QuadSuite::new(&m);
            let k = suite.k_modules();
            let eps = suite.epsilon();
            assert!(k.phi.is_injective(), "phi injective over {}", ring.name());
            assert!(is_exact_at(&k.phi, &eps).ok(), "exact over {}", ring.name());
            assert!(eps.is_surjective());
        }
    }

    #[test]
    fn w_map_on_free_rank_one() {
        // w on Sym²(Z): e² ↦ 2γ(e), i.e. multiplication by 2.
        let m = FPModule::ring_module(z());
        let suite = QuadSuite::new(&m);
        let w = suite.w();
        let img = &w.columns()[0];
        let mut expect = suite.gamma2.module.zero_el();
        expect.coords[0] = z().int(2);
        assert!(suite.gamma2.module.eq(img, &expect));
    }

    #[test]
    fn chi_on_z_mod_2_is_zero() {
        // χ: I₂⊗M → P²(M) vanishes for R=Z, M=Z/2.
        let zz = z();
        let m = FPModule::new(zz.clone(), 1, vec![vec![zz.int(2)]]);
        let suite = QuadSuite::new(&m);
        let chi = suite.chi();
        assert!(chi.is_zero_map());
        assert_eq!(chi.domain().invariants(), vec![BigInt::from(2)]);
    }
}
