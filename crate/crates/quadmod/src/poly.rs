//! Multivariate polynomials with integer coefficients.
//!
//! Used for ring presentations (relation polynomials live in Z[X_i]) and for
//! the expansion of the derivation D over a presentation. Monomials are
//! exponent vectors; terms are kept in a BTreeMap so iteration order, and
//! therefore all downstream output, is deterministic.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::ring::{Ring, RingElement};

#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPoly {
    pub fn zero(nvars: usize) -> Self {
        IntPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = IntPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0u32; nvars];
        exps[i] = 1;
        let mut p = IntPoly::zero(nvars);
        p.terms.insert(exps, BigInt::one());
        p
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coeff: BigInt) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = IntPoly::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&vec![0u32; self.nvars])
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    fn insert(&mut self, exps: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> IntPoly {
        let mut out = IntPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = IntPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(exps, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        let mut out = IntPoly::zero(self.nvars);
        if k.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::constant(self.nvars, BigInt::one());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Evaluates the polynomial in a ring at the given variable images.
    pub fn eval_in(&self, ring: &Ring, images: &[RingElement]) -> RingElement {
        assert_eq!(images.len(), self.nvars, "image count mismatch");
        let mut acc = ring.zero();
        for (exps, coeff) in &self.terms {
            let mut term = ring.int_big(coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = ring.mul(&term, &images[i]);
                }
            }
            acc = ring.add(&acc, &term);
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_const = exps.iter().all(|&e| e == 0);
            if is_const || !coeff.is_one() {
                write!(f, "{}", coeff)?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut firstvar = true;
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !firstvar {
                    write!(f, "*")?;
                }
                firstvar = false;
                write!(f, "X{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::big;

    #[test]
    fn arithmetic() {
        let x = IntPoly::var(2, 0);
        let y = IntPoly::var(2, 1);
        let p = x.add(&y).pow(2);
        // (x+y)^2 = x^2 + 2xy + y^2
        let expect = x
            .pow(2)
            .add(&x.mul(&y).scale(&big(2)))
            .add(&y.pow(2));
        assert_eq!(p, expect);
        assert_eq!(p.degree(), 2);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn eval_in_integers() {
        let ring = Ring::integers();
        let x = IntPoly::var(1, 0);
        let p = x.pow(2).sub(&IntPoly::constant(1, big(2)));
        let v = p.eval_in(&ring, &[ring.int(3)]);
        assert!(ring.eq(&v, &ring.int(7)));
    }
}
