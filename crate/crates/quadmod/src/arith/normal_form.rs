//! Column Hermite and Smith normal forms with unimodular transforms.
//!
//! Conventions, fixed once so equal lattices have identical representations:
//! column-style HNF `A·T = H` with pivots positive, pivot rows strictly
//! increasing, entries in a pivot row to the *left* of the pivot reduced into
//! `[0, pivot)`, zero columns pushed to the right. Smith form `U·A·V = diag(d)`
//! with `d_k ≥ 0` and `d_k | d_{k+1}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Column Hermite normal form: returns `(H, T)` with `A·T = H`, `T`
/// unimodular, and `H` canonical for the column span of `A`.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut t = IntMatrix::identity(a.cols());
    let mut pivot_col = 0usize;

    for row in 0..a.rows() {
        if pivot_col >= h.cols() {
            break;
        }
        // Clear row `row` to a single nonzero entry at pivot_col using gcd
        // column operations on columns >= pivot_col.
        loop {
            // Pick the column with the smallest nonzero |entry| in this row.
            let mut best: Option<(usize, BigInt)> = None;
            for j in pivot_col..h.cols() {
                let v = &h[(row, j)];
                if v.is_zero() {
                    continue;
                }
                let av = v.abs();
                match &best {
                    Some((_, b)) if *b <= av => {}
                    _ => best = Some((j, av)),
                }
            }
            let Some((jmin, _)) = best else {
                break; // row is zero on the working block
            };
            h.swap_cols(pivot_col, jmin);
            t.swap_cols(pivot_col, jmin);
            let pivot = h[(row, pivot_col)].clone();
            let mut done = true;
            for j in pivot_col + 1..h.cols() {
                let v = h[(row, j)].clone();
                if v.is_zero() {
                    continue;
                }
                let q = truncated_quotient(&v, &pivot);
                h.add_col_multiple(j, pivot_col, &-&q);
                t.add_col_multiple(j, pivot_col, &-&q);
                if !h[(row, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(row, pivot_col)].is_zero() {
            continue; // no pivot in this row; try the next row
        }
        if h[(row, pivot_col)].is_negative() {
            h.negate_col(pivot_col);
            t.negate_col(pivot_col);
        }
        // Reduce entries left of the pivot into [0, pivot).
        let pivot = h[(row, pivot_col)].clone();
        for j in 0..pivot_col {
            let v = h[(row, j)].clone();
            let q = v.div_floor(&pivot);
            h.add_col_multiple(j, pivot_col, &-&q);
            t.add_col_multiple(j, pivot_col, &-&q);
        }
        pivot_col += 1;
    }
    (h, t)
}

fn truncated_quotient(v: &BigInt, pivot: &BigInt) -> BigInt {
    // Quotient that leaves |remainder| < |pivot|; exactness is not needed,
    // the gcd loop converges regardless.
    let (q, _r) = v.div_rem(pivot);
    q
}

/// Basis of the integer kernel `{x : A·x = 0}`, returned as matrix columns.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let (h, t) = hermite_normal_form(a);
    let zero_cols: Vec<usize> = (0..h.cols())
        .filter(|&j| (0..h.rows()).all(|i| h[(i, j)].is_zero()))
        .collect();
    let cols: Vec<Vec<BigInt>> = zero_cols.iter().map(|&j| t.column(j)).collect();
    IntMatrix::from_columns(a.cols(), &cols)
}

/// Smith decomposition `U·A·V = diag(d)`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// diag(d) padded back to the shape of the original matrix.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(rows, cols);
        for (k, dk) in self.d.iter().enumerate() {
            m[(k, k)] = dk.clone();
        }
        m
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut m = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let n = a.rows().min(a.cols());

    let mut k = 0usize;
    while k < n {
        // Find a pivot: smallest nonzero |entry| in the trailing block.
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in k..a.rows() {
            for j in k..a.cols() {
                let val = &m[(i, j)];
                if val.is_zero() {
                    continue;
                }
                let av = val.abs();
                match &best {
                    Some((_, _, b)) if *b <= av => {}
                    _ => best = Some((i, j, av)),
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        m.swap_rows(k, pi);
        u.swap_rows(k, pi);
        m.swap_cols(k, pj);
        v.swap_cols(k, pj);

        // Eliminate row k and column k; restart if remainders appear.
        loop {
            let mut clean = true;
            let pivot = m[(k, k)].clone();
            for i in k + 1..a.rows() {
                let val = m[(i, k)].clone();
                if val.is_zero() {
                    continue;
                }
                let q = val.div_floor(&pivot);
                m.add_row_multiple(i, k, &-&q);
                u.add_row_multiple(i, k, &-&q);
                if !m[(i, k)].is_zero() {
                    // Remainder is smaller than the pivot: swap it up.
                    m.swap_rows(k, i);
                    u.swap_rows(k, i);
                    clean = false;
                }
            }
            let pivot = m[(k, k)].clone();
            for j in k + 1..a.cols() {
                let val = m[(k, j)].clone();
                if val.is_zero() {
                    continue;
                }
                let q = val.div_floor(&pivot);
                m.add_col_multiple(j, k, &-&q);
                v.add_col_multiple(j, k, &-&q);
                if !m[(k, j)].is_zero() {
                    m.swap_cols(k, j);
                    v.swap_cols(k, j);
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        // The pivot must divide every entry of the trailing block; if not,
        // fold the offending row in and redo this step.
        let pivot = m[(k, k)].clone();
        let mut disturbed = false;
        'scan: for i in k + 1..a.rows() {
            for j in k + 1..a.cols() {
                if !m[(i, j)].mod_floor(&pivot).is_zero() {
                    m.add_row_multiple(k, i, &BigInt::one());
                    u.add_row_multiple(k, i, &BigInt::one());
                    disturbed = true;
                    break 'scan;
                }
            }
        }
        if disturbed {
            continue;
        }
        if m[(k, k)].is_negative() {
            m.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }

    let d: Vec<BigInt> = (0..n).map(|i| m[(i, i)].clone()).collect();
    debug_assert!(divisibility_chain(&d), "SNF divisibility chain broken");
    let dec = SmithDecomposition { d, u, v };
    debug_assert_eq!(
        dec.u.mul(a).mul(&dec.v),
        dec.diagonal_matrix(a.rows(), a.cols()),
        "SNF recomposition failed"
    );
    dec
}

fn divisibility_chain(d: &[BigInt]) -> bool {
    d.windows(2).all(|w| {
        if w[0].is_zero() {
            w[1].is_zero()
        } else {
            w[1].mod_floor(&w[0]).is_zero()
        }
    })
}

/// Invariant factors of `Z^rows / columnspan(A)`: the nontrivial torsion
/// factors in divisibility order, followed by one `0` per free factor.
pub fn cokernel_invariants(a: &IntMatrix) -> Vec<BigInt> {
    let snf = smith_normal_form(a);
    let mut out: Vec<BigInt> = snf
        .d
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    let rank = snf.d.iter().filter(|d| !d.is_zero()).count();
    for _ in rank..a.rows() {
        out.push(BigInt::zero());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    #[test]
    fn hnf_reduces_column_span() {
        // [[2,4],[0,0]] spans 2Z x 0.
        let a = m(&[&[2, 4], &[0, 0]]);
        let (h, t) = hermite_normal_form(&a);
        assert_eq!(a.mul(&t), h);
        assert_eq!(h, m(&[&[2, 0], &[0, 0]]));
    }

    #[test]
    fn hnf_zero_and_identity() {
        let z = IntMatrix::zero(2, 2);
        let (h, t) = hermite_normal_form(&z);
        assert_eq!(h, z);
        assert_eq!(t, IntMatrix::identity(2));

        let id = IntMatrix::identity(3);
        let (h, t) = hermite_normal_form(&id);
        assert_eq!(h, IntMatrix::identity(3));
        assert_eq!(t, IntMatrix::identity(3));
    }

    #[test]
    fn hnf_canonical_across_bases() {
        // Two generating sets of the same lattice in Z^2.
        let a = m(&[&[2, 0], &[1, 2]]);
        let b = m(&[&[2, 2, 4], &[3, 1, 2]]);
        let (ha, _) = hermite_normal_form(&a);
        let (hb, _) = hermite_normal_form(&b);
        let nonzero = |h: &IntMatrix| -> Vec<Vec<BigInt>> {
            h.columns().filter(|c| c.iter().any(|x| !x.is_zero())).collect()
        };
        assert_eq!(nonzero(&ha), nonzero(&hb));
    }

    #[test]
    fn snf_examples() {
        // diag(2,3) -> (1,6)
        let a = m(&[&[2, 0], &[0, 3]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.d, vec![BigInt::from(1), BigInt::from(6)]);

        let z = IntMatrix::zero(2, 2);
        let s = smith_normal_form(&z);
        assert_eq!(s.d, vec![BigInt::zero(), BigInt::zero()]);

        let one = m(&[&[2]]);
        let s = smith_normal_form(&one);
        assert_eq!(s.d, vec![BigInt::from(2)]);
    }

    #[test]
    fn kernel_examples() {
        // [[2]] has trivial kernel.
        assert_eq!(kernel_basis(&m(&[&[2]])).cols(), 0);
        // [[1,1]] has kernel spanned by (1,-1).
        let k = kernel_basis(&m(&[&[1, 1]]));
        assert_eq!(k.cols(), 1);
        let col = k.column(0);
        assert_eq!(&col[0] + &col[1], BigInt::zero());
        assert_eq!(col[0].abs(), BigInt::one());
        // zero 1x2 matrix has full rank-2 kernel.
        assert_eq!(kernel_basis(&IntMatrix::zero(1, 2)).cols(), 2);
    }

    #[test]
    fn cokernel_invariants_examples() {
        // span{(2,1),(0,2)} in Z^2 -> (4)
        let a = m(&[&[2, 0], &[1, 2]]);
        assert_eq!(cokernel_invariants(&a), vec![BigInt::from(4)]);
        // zero lattice in Z^2 -> (0,0)
        assert_eq!(
            cokernel_invariants(&IntMatrix::zero(2, 0)),
            vec![BigInt::zero(), BigInt::zero()]
        );
        // full lattice -> ()
        assert_eq!(cokernel_invariants(&IntMatrix::identity(2)), Vec::<BigInt>::new());
    }
}
