//! Sublattices of Z^n in canonical column Hermite form.
//!
//! A `Lattice` is the Z-span of the columns of its basis matrix. The basis is
//! always the column HNF with zero columns dropped, so two equal lattices have
//! bit-identical representations and equality tests are structural. Lattice
//! membership is the single primitive every element-equality test in the crate
//! reduces to.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::normal_form::{cokernel_invariants, hermite_normal_form, kernel_basis};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient: usize,
    /// Column HNF basis; `cols() = rank`, pivot rows strictly increasing.
    basis: IntMatrix,
    /// Pivot row of each basis column.
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn zero(ambient: usize) -> Self {
        Lattice {
            ambient,
            basis: IntMatrix::zero(ambient, 0),
            pivots: vec![],
        }
    }

    pub fn full(ambient: usize) -> Self {
        Lattice::from_generators(ambient, &IntMatrix::identity(ambient))
    }

    /// Canonicalizes an arbitrary generating set (given as matrix columns).
    pub fn from_generators(ambient: usize, generators: &IntMatrix) -> Self {
        assert_eq!(generators.rows(), ambient, "generator length mismatch");
        let (h, _) = hermite_normal_form(generators);
        let cols: Vec<Vec<BigInt>> = h
            .columns()
            .filter(|c| c.iter().any(|x| !x.is_zero()))
            .collect();
        let basis = IntMatrix::from_columns(ambient, &cols);
        let pivots = (0..basis.cols())
            .map(|j| (0..ambient).find(|&i| !basis[(i, j)].is_zero()).unwrap())
            .collect();
        Lattice {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn from_generator_vecs(ambient: usize, gens: &[Vec<BigInt>]) -> Self {
        Lattice::from_generators(ambient, &IntMatrix::from_columns(ambient, gens))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    /// Coefficients `c` with `basis·c = v`, when `v` lies in the lattice.
    pub fn membership(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut residue = v.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.rank()];
        for (k, &prow) in self.pivots.iter().enumerate() {
            let pivot = &self.basis[(prow, k)];
            let (q, r) = residue[prow].div_rem(pivot);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for i in 0..self.ambient {
                    let sub = &self.basis[(i, k)] * &q;
                    residue[i] -= sub;
                }
            }
            coeffs[k] = q;
        }
        if residue.iter().all(Zero::is_zero) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.membership(v).is_some()
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.columns().all(|c| self.contains(&c))
    }

    /// Canonical coset representative of `v` modulo the lattice: entries at
    /// pivot rows are reduced into `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut out = v.to_vec();
        for (k, &prow) in self.pivots.iter().enumerate() {
            let pivot = &self.basis[(prow, k)];
            let q = out[prow].div_floor(pivot);
            if !q.is_zero() {
                for i in 0..self.ambient {
                    let sub = &self.basis[(i, k)] * &q;
                    out[i] -= sub;
                }
            }
        }
        out
    }

    /// Invariant factors of `Z^ambient / L`, divisibility-sorted, `0` per
    /// free factor, trivial factors dropped.
    pub fn quotient_invariants(&self) -> Vec<BigInt> {
        cokernel_invariants(&self.basis)
    }

    /// Lattice sum (join) of two lattices in the same ambient space.
    pub fn join(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient, other.ambient);
        Lattice::from_generators(self.ambient, &self.basis.hcat(&other.basis))
    }

    /// The preimage lattice `{x : A·x ∈ L}` for an integer matrix `A` mapping
    /// Z^cols -> Z^ambient.
    pub fn preimage(&self, a: &IntMatrix) -> Lattice {
        assert_eq!(a.rows(), self.ambient, "codomain mismatch");
        let stacked = a.hcat(&self.basis);
        let ker = kernel_basis(&stacked);
        let cols: Vec<Vec<BigInt>> = ker
            .columns()
            .map(|c| c[..a.cols()].to_vec())
            .collect();
        Lattice::from_generator_vecs(a.cols(), &cols)
    }
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Lattice(ambient={}, basis={:?})", self.ambient, self.basis)
    }
}

/// One solution `x` of `A·x = b` over the integers, if any.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "rhs length mismatch");
    let (h, t) = hermite_normal_form(a);
    // Forward-substitute along the pivot structure of H.
    let mut pivots: Vec<(usize, usize)> = vec![]; // (row, col)
    for j in 0..h.cols() {
        if let Some(i) = (0..h.rows()).find(|&i| !h[(i, j)].is_zero()) {
            pivots.push((i, j));
        }
    }
    let mut residue = b.to_vec();
    let mut c = vec![BigInt::zero(); h.cols()];
    for (prow, j) in pivots {
        let pivot = &h[(prow, j)];
        let (q, r) = residue[prow].div_rem(pivot);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for i in 0..h.rows() {
                let sub = &h[(i, j)] * &q;
                residue[i] -= sub;
            }
        }
        c[j] = q;
    }
    if residue.iter().all(Zero::is_zero) {
        Some(t.mul_vec(&c))
    } else {
        None
    }
}

/// Solution of `A·x ≡ b (mod L)`, i.e. `A·x - b ∈ L`.
pub fn solve_mod(a: &IntMatrix, b: &[BigInt], l: &Lattice) -> Option<Vec<BigInt>> {
    let stacked = a.hcat(l.basis());
    let x = solve(&stacked, b)?;
    Some(x[..a.cols()].to_vec())
}

/// Divide a vector by a positive integer scalar exactly; `None` on failure.
pub fn divide_exact(v: &[BigInt], by: &BigInt) -> Option<Vec<BigInt>> {
    let mut out = Vec::with_capacity(v.len());
    for x in v {
        let (q, r) = x.div_rem(by);
        if !r.is_zero() {
            return None;
        }
        out.push(q);
    }
    Some(out)
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn bigs(ns: &[i64]) -> Vec<BigInt> {
    ns.iter().map(|&n| BigInt::from(n)).collect()
}

/// Scalar-multiplied identity padded beside a lattice basis — convenience for
/// torsion computations `{x : k·x ∈ L}`.
pub fn scaled_identity(n: usize, k: &BigInt) -> IntMatrix {
    let mut m = IntMatrix::zero(n, n);
    for i in 0..n {
        m[(i, i)] = k.clone();
    }
    m
}

pub fn unit_vector(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}
