//! Formal ρ-identities among the relations of the functorial presentation
//! of I₂.
//!
//! Both sides of each identity are evaluated as finitely supported R-linear
//! combinations of symbols [x], x ∈ R, with [0] = [1] = 0, and compared
//! support-wise. The symbols
//!   ρ₁(x,y) = [x+y] − [x] − [y] − xy[2]
//!   ρ₂(x,y) = [xy] − x[y] − y²[x]
//! are the generic additivity and multiplicativity relations.

use num_bigint::BigInt;
use std::collections::BTreeMap;

use crate::ring::{Ring, RingElement};

/// Finitely supported R-linear combination of symbols [x]; keys are canonical
/// coset representatives.
#[derive(Clone, Debug)]
pub struct FreeComb {
    terms: BTreeMap<Vec<BigInt>, RingElement>,
}

impl FreeComb {
    pub fn zero() -> FreeComb {
        FreeComb {
            terms: BTreeMap::new(),
        }
    }

    /// The basis symbol [x], with [0] = [1] = 0.
    pub fn bracket(ring: &Ring, x: &RingElement) -> FreeComb {
        let mut out = FreeComb::zero();
        if ring.is_zero_el(x) || ring.eq(x, &ring.one()) {
            return out;
        }
        out.terms.insert(ring.canon(x).coords, ring.one());
        out
    }

    pub fn add(&self, ring: &Ring, other: &FreeComb) -> FreeComb {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            let entry = out
                .terms
                .entry(k.clone())
                .or_insert_with(|| ring.zero());
            *entry = ring.add(entry, v);
        }
        out
    }

    pub fn scale(&self, ring: &Ring, r: &RingElement) -> FreeComb {
        let mut out = FreeComb::zero();
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), ring.mul(r, v));
        }
        out
    }

    pub fn neg(&self, ring: &Ring) -> FreeComb {
        let mut out = FreeComb::zero();
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), ring.neg(v));
        }
        out
    }

    pub fn sub(&self, ring: &Ring, other: &FreeComb) -> FreeComb {
        self.add(ring, &other.neg(ring))
    }

    pub fn eq(&self, ring: &Ring, other: &FreeComb) -> bool {
        let mut keys: Vec<&Vec<BigInt>> = self.terms.keys().collect();
        keys.extend(other.terms.keys());
        keys.sort();
        keys.dedup();
        let zero = ring.zero();
        keys.into_iter().all(|k| {
            let a = self.terms.get(k).unwrap_or(&zero);
            let b = other.terms.get(k).unwrap_or(&zero);
            ring.eq(a, b)
        })
    }
}

pub fn rho1(ring: &Ring, x: &RingElement, y: &RingElement) -> FreeComb {
    let sum = FreeComb::bracket(ring, &ring.add(x, y));
    let bx = FreeComb::bracket(ring, x);
    let by = FreeComb::bracket(ring, y);
    let b2 = FreeComb::bracket(ring, &ring.int(2)).scale(ring, &ring.mul(x, y));
    sum.sub(ring, &bx).sub(ring, &by).sub(ring, &b2)
}

pub fn rho2(ring: &Ring, x: &RingElement, y: &RingElement) -> FreeComb {
    let bxy = FreeComb::bracket(ring, &ring.mul(x, y));
    let xby = FreeComb::bracket(ring, y).scale(ring, x);
    let y2bx = FreeComb::bracket(ring, x).scale(ring, &ring.mul(y, y));
    bxy.sub(ring, &xby).sub(ring, &y2bx)
}

/// The ten identities of the ρ-lemma. The `s`-variants take vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoIdentity {
    Rho1,
    Rho1a,
    Rho1s,
    Rho2g,
    Rho2gs,
    Rho2d,
    Rho2ds,
    Rho3,
    Rho3a,
    Rho3s,
}

pub const ALL_RHO_IDENTITIES: [RhoIdentity; 10] = [
    RhoIdentity::Rho1,
    RhoIdentity::Rho1a,
    RhoIdentity::Rho1s,
    RhoIdentity::Rho2g,
    RhoIdentity::Rho2gs,
    RhoIdentity::Rho2d,
    RhoIdentity::Rho2ds,
    RhoIdentity::Rho3,
    RhoIdentity::Rho3a,
    RhoIdentity::Rho3s,
];

impl RhoIdentity {
    pub fn token(&self) -> &'static str {
        match self {
            RhoIdentity::Rho1 => "relrho1",
            RhoIdentity::Rho1a => "relrho1a",
            RhoIdentity::Rho1s => "relrho1s",
            RhoIdentity::Rho2g => "relrho2g",
            RhoIdentity::Rho2gs => "relrho2gs",
            RhoIdentity::Rho2d => "relrho2d",
            RhoIdentity::Rho2ds => "relrho2ds",
            RhoIdentity::Rho3 => "relrho3",
            RhoIdentity::Rho3a => "relrho3a",
            RhoIdentity::Rho3s => "relrho3s",
        }
    }

    pub fn from_token(token: &str) -> Option<RhoIdentity> {
        ALL_RHO_IDENTITIES.iter().copied().find(|i| i.token() == token)
    }

    /// How many ring elements one sample consumes.
    pub fn arity(&self) -> usize {
        match self {
            RhoIdentity::Rho1 | RhoIdentity::Rho1a | RhoIdentity::Rho2g | RhoIdentity::Rho2d => 3,
            RhoIdentity::Rho3 | RhoIdentity::Rho3a => 3,
            // vector identities: use 3 vector entries + 1 scalar
            RhoIdentity::Rho1s
            | RhoIdentity::Rho2gs
            | RhoIdentity::Rho2ds
            | RhoIdentity::Rho3s => 4,
        }
    }

    /// Both sides on one sample; `corrupt` flips the sign of the final term
    /// of the right-hand side (negative control).
    pub fn sides(&self, ring: &Ring, args: &[RingElement], corrupt: bool) -> (FreeComb, FreeComb) {
        let sign = |c: FreeComb| -> FreeComb {
            if corrupt {
                c.neg(ring)
            } else {
                c
            }
        };
        match self {
            RhoIdentity::Rho1 => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let lhs = rho1(ring, &ring.add(x, y), z);
                let rhs = rho1(ring, x, &ring.add(y, z))
                    .sub(ring, &rho1(ring, x, y))
                    .add(ring, &sign(rho1(ring, y, z)));
                (lhs, rhs)
            }
            RhoIdentity::Rho1a => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let lhs = rho1(ring, x, &ring.add(y, z));
                let rhs = rho1(ring, y, &ring.add(x, z))
                    .add(ring, &rho1(ring, x, z))
                    .sub(ring, &sign(rho1(ring, y, z)));
                (lhs, rhs)
            }
            RhoIdentity::Rho1s => {
                let (xs, y) = (&args[..args.len() - 1], &args[args.len() - 1]);
                let total = xs.iter().fold(ring.zero(), |a, b| ring.add(&a, b));
                let lhs = rho1(ring, &total, y);
                let mut rhs = FreeComb::zero();
                let mut prefix = ring.zero();
                for (i, xi) in xs.iter().enumerate() {
                    rhs = rhs.add(ring, &rho1(ring, xi, &ring.add(y, &prefix)));
                    if i >= 1 {
                        let term = rho1(ring, xi, &prefix);
                        let term = if i == xs.len() - 1 { sign(term) } else { term };
                        rhs = rhs.sub(ring, &term);
                    }
                    prefix = ring.add(&prefix, xi);
                }
                (lhs, rhs)
            }
            RhoIdentity::Rho2g => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let lhs = rho2(ring, &ring.add(x, y), z);
                let rhs = rho2(ring, x, z)
                    .add(ring, &rho2(ring, y, z))
                    .add(ring, &rho1(ring, &ring.mul(x, z), &ring.mul(y, z)))
                    .sub(ring, &sign(rho1(ring, x, y).scale(ring, &ring.mul(z, z))));
                (lhs, rhs)
            }
            RhoIdentity::Rho2gs => {
                let (xs, y) = (&args[..args.len() - 1], &args[args.len() - 1]);
                let total = xs.iter().fold(ring.zero(), |a, b| ring.add(&a, b));
                let lhs = rho2(ring, &total, y);
                let mut rhs = FreeComb::zero();
                for xi in xs {
                    rhs = rhs.add(ring, &rho2(ring, xi, y));
                }
                let y2 = ring.mul(y, y);
                let mut prefix = xs[0].clone();
                for i in 0..xs.len() - 1 {
                    let next = &xs[i + 1];
                    rhs = rhs.add(
                        ring,
                        &rho1(ring, &ring.mul(&prefix, y), &ring.mul(next, y)),
                    );
                    let term = rho1(ring, &prefix, next).scale(ring, &y2);
                    let term = if i == xs.len() - 2 { sign(term) } else { term };
                    rhs = rhs.sub(ring, &term);
                    prefix = ring.add(&prefix, next);
                }
                (lhs, rhs)
            }
            RhoIdentity::Rho2d => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let lhs = rho2(ring, x, &ring.add(y, z));
                let swap = rho2(ring, x, &ring.int(2)).sub(ring, &rho2(ring, &ring.int(2), x));
                let rhs = rho2(ring, x, y)
                    .add(ring, &rho2(ring, x, z))
                    .add(ring, &swap.scale(ring, &ring.mul(y, z)))
                    .add(ring, &rho1(ring, &ring.mul(x, y), &ring.mul(x, z)))
                    .sub(ring, &sign(rho1(ring, y, z).scale(ring, x)));
                (lhs, rhs)
            }
            RhoIdentity::Rho2ds => {
                let (x, ys) = (&args[0], &args[1..]);
                let total = ys.iter().fold(ring.zero(), |a, b| ring.add(&a, b));
                let lhs = rho2(ring, x, &total);
                let mut rhs = FreeComb::zero();
                for yi in ys {
                    rhs = rhs.add(ring, &rho2(ring, x, yi));
                }
                let mut pair_sum = ring.zero();
                for i in 0..ys.len() {
                    for j in (i + 1)..ys.len() {
                        pair_sum = ring.add(&pair_sum, &ring.mul(&ys[i], &ys[j]));
                    }
                }
                let swap = rho2(ring, x, &ring.int(2)).sub(ring, &rho2(ring, &ring.int(2), x));
                rhs = rhs.add(ring, &swap.scale(ring, &pair_sum));
                let mut prefix = ys[0].clone();
                for i in 0..ys.len() - 1 {
                    let next = &ys[i + 1];
                    rhs = rhs.add(
                        ring,
                        &rho1(ring, &ring.mul(x, &prefix), &ring.mul(x, next)),
                    );
                    let term = rho1(ring, &prefix, next).scale(ring, x);
                    let term = if i == ys.len() - 2 { sign(term) } else { term };
                    rhs = rhs.sub(ring, &term);
                    prefix = ring.add(&prefix, next);
                }
                (lhs, rhs)
            }
            RhoIdentity::Rho3 => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let lhs = rho2(ring, &ring.mul(x, y), z);
                let rhs = rho2(ring, x, &ring.mul(y, z))
                    .add(ring, &rho2(ring, y, z).scale(ring, x))
                    .sub(ring, &sign(rho2(ring, x, y).scale(ring, &ring.mul(z, z))));
                (lhs, rhs)
            }
            RhoIdentity::Rho3a => {
                let (x, y, z) = (&args[0], &args[1], &args[2]);
                let lhs = rho2(ring, x, &ring.mul(y, z));
                let z2 = ring.mul(z, z);
                let rhs = rho2(ring, y, &ring.mul(x, z))
                    .add(
                        ring,
                        &rho2(ring, x, y)
                            .sub(ring, &rho2(ring, y, x))
                            .scale(ring, &z2),
                    )
                    .add(ring, &rho2(ring, x, z).scale(ring, y))
                    .sub(ring, &sign(rho2(ring, y, z).scale(ring, x)));
                (lhs, rhs)
            }
            RhoIdentity::Rho3s => {
                let (xs, y) = (&args[..args.len() - 1], &args[args.len() - 1]);
                let total = xs.iter().fold(ring.one(), |a, b| ring.mul(&a, b));
                let lhs = rho2(ring, &total, y);
                let mut rhs = FreeComb::zero();
                let mut prefix = ring.one();
                for (i, xi) in xs.iter().enumerate() {
                    let mut suffix = ring.one();
                    for xj in &xs[i + 1..] {
                        suffix = ring.mul(&suffix, xj);
                    }
                    rhs = rhs.add(
                        ring,
                        &rho2(ring, xi, &ring.mul(&suffix, y)).scale(ring, &prefix),
                    );
                    if i < xs.len() - 1 {
                        let term = rho2(ring, xi, &suffix).scale(ring, &ring.mul(&prefix, &ring.mul(y, y)));
                        let term = if i == xs.len() - 2 { sign(term) } else { term };
                        rhs = rhs.sub(ring, &term);
                    }
                    prefix = ring.mul(&prefix, xi);
                }
                (lhs, rhs)
            }
        }
    }

    /// Checks the identity on the given samples.
    pub fn check(&self, ring: &Ring, samples: &[Vec<RingElement>]) -> bool {
        samples.iter().all(|args| {
            let (lhs, rhs) = self.sides(ring, args, false);
            lhs.eq(ring, &rhs)
        })
    }

    /// Negative control: the corrupted identity must fail on at least one of
    /// the samples.
    pub fn check_corrupted_fails(&self, ring: &Ring, samples: &[Vec<RingElement>]) -> bool {
        samples.iter().any(|args| {
            let (lhs, rhs) = self.sides(ring, args, true);
            !lhs.eq(ring, &rhs)
        })
    }
}

/// Deterministic sample tuples with coordinates in [-bound, bound].
pub fn rho_samples(
    ring: &Ring,
    identity: RhoIdentity,
    count: usize,
    bound: i64,
    rng: &mut impl rand::Rng,
) -> Vec<Vec<RingElement>> {
    let arity = identity.arity();
    (0..count)
        .map(|_| {
            (0..arity)
                .map(|_| {
                    RingElement::new(
                        (0..ring.rank())
                            .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                            .collect(),
                    )
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::presets::*;
    use rand::SeedableRng;

    #[test]
    fn all_identities_hold_on_sample_rings() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for ring in [zmod(4), f3(), z_sqrt2()] {
            for id in ALL_RHO_IDENTITIES {
                let samples = rho_samples(&ring, id, 25, 2, &mut rng);
                assert!(id.check(&ring, &samples), "{} on {}", id.token(), ring.name());
            }
        }
    }

    #[test]
    fn rho1_with_zero_second_argument() {
        let ring = zmod(4);
        // relrho1 with y = 0 degenerates to 0 = 0.
        let x = ring.int(3);
        let z = ring.int(2);
        let (lhs, rhs) = RhoIdentity::Rho1.sides(&ring, &[x, ring.zero(), z], false);
        assert!(lhs.eq(&ring, &rhs));
    }

    #[test]
    fn corrupted_identities_fail() {
        // Finite small rings collapse the flipped term (over F3 the whole ρ₁
        // vanishes identically; over Z/4 the doubled ρ₂ does), so the
        // negative controls run in characteristic zero.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for id in ALL_RHO_IDENTITIES {
            let ring = z_sqrt2();
            let samples = rho_samples(&ring, id, 60, 2, &mut rng);
            assert!(
                id.check_corrupted_fails(&ring, &samples),
                "corrupted {} should fail",
                id.token()
            );
        }
    }
}
