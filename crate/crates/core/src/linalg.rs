//! Exact linear algebra over Q and over the scalar fields.
//!
//! The elimination phase runs fraction-free (Bareiss) on denominator-cleared
//! integer rows, so intermediate entries are minors of the input and never
//! accumulate fractions; kernels and solutions are then back-substituted over
//! Q. Everything is deterministic: pivots are chosen as the first nonzero
//! candidate in row order.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::Rational;
use crate::scalar::{Scalar, ScalarKind};

/// A dense rational matrix (row-major).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    /// Rows with all denominators cleared, ready for integer elimination.
    /// Zero rows are dropped (they never affect rank or kernel).
    fn cleared_rows(&self) -> Vec<Vec<BigInt>> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            if row.iter().all(|v| v.is_zero()) {
                continue;
            }
            let mut lcm = BigInt::one();
            for v in row {
                lcm = lcm.lcm(v.denom());
            }
            out.push(
                row.iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect(),
            );
        }
        out
    }

    pub fn rank(&self) -> usize {
        bareiss(self.cleared_rows(), self.cols).pivots.len()
    }

    /// A basis of the right kernel, one vector per free column in ascending
    /// column order, each scaled so its first nonzero coordinate is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let ech = bareiss(self.cleared_rows(), self.cols);
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &ech.pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            // back-substitute pivot coordinates from the bottom row up
            for i in (0..ech.pivots.len()).rev() {
                let pc = ech.pivots[i];
                let mut acc = Rational::zero();
                for j in pc + 1..self.cols {
                    if !ech.rows[i][j].is_zero() && !v[j].is_zero() {
                        acc += Rational::from_integer(ech.rows[i][j].clone()) * &v[j];
                    }
                }
                v[pc] = -acc / Rational::from_integer(ech.rows[i][pc].clone());
            }
            // normalize: first nonzero coordinate = 1
            if let Some(first) = v.iter().position(|c| !c.is_zero()) {
                let inv = Rational::one() / v[first].clone();
                for c in v.iter_mut() {
                    *c = &*c * &inv;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Exact determinant of a square matrix.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        if self.rows == 0 {
            return Rational::one();
        }
        // clear denominators, remembering the factor each row was scaled by
        let mut scale = Rational::one();
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let mut lcm = BigInt::one();
            for v in row {
                lcm = lcm.lcm(v.denom());
            }
            scale *= Rational::from_integer(lcm.clone());
            rows.push(
                row.iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect(),
            );
        }
        let ech = bareiss(rows, self.cols);
        if ech.pivots.len() < self.rows {
            return Rational::zero();
        }
        let last = ech.rows[self.rows - 1][ech.pivots[self.rows - 1]].clone();
        let mut det = Rational::from_integer(last) / scale;
        if ech.sign < 0 {
            det = -det;
        }
        det
    }

    /// Solves `self * x = rhs` exactly. Returns `None` when inconsistent;
    /// free variables (if any) are set to zero.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows);
        // rational Gauss-Jordan on the augmented matrix; systems here are
        // small (a handful of unknowns), so fractions are fine
        let mut m: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| {
                let mut row: Vec<Rational> =
                    self.data[i * self.cols..(i + 1) * self.cols].to_vec();
                row.push(rhs[i].clone());
                row
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            let inv = Rational::one() / m[r][c].clone();
            for j in c..=self.cols {
                m[r][j] = &m[r][j] * &inv;
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..=self.cols {
                        let delta = &f * &m[r][j];
                        m[i][j] = &m[i][j] - &delta;
                    }
                }
            }
            pivots.push((r, c));
            r += 1;
            if r == m.len() {
                break;
            }
        }
        // inconsistent iff a zero row has nonzero rhs
        for row in m.iter().skip(r) {
            if !row[self.cols].is_zero() {
                return None;
            }
        }
        let mut x = vec![Rational::zero(); self.cols];
        for &(row, col) in &pivots {
            x[col] = m[row][self.cols].clone();
        }
        Some(x)
    }
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    sign: i32,
}

/// Fraction-free (Bareiss) row echelon on integer rows. Every intermediate
/// entry is a minor of the input bordered by the chosen pivots, so the
/// divisions below are exact.
fn bareiss(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut sign = 1;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
            sign = -sign;
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                // still rescale so entries stay the bordered minors
                for j in (c + 1..cols).rev() {
                    let num = &pivot_row[c] * &row[j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "fraction-free division must be exact");
                    row[j] = q;
                }
            } else {
                for j in (c + 1..cols).rev() {
                    let num = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "fraction-free division must be exact");
                    row[j] = q;
                }
                row[c] = BigInt::zero();
            }
        }
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Echelon {
        rows,
        pivots,
        sign,
    }
}

/// Reduced row echelon form over an exact scalar field (used for cyclotomic
/// coefficient spaces). Returns the nonzero rows; pivots are normalized to 1
/// and eliminated above and below, so the result is a canonical basis of the
/// row space.
pub fn scalar_rref(rows: Vec<Vec<Scalar>>, kind: ScalarKind) -> Result<Vec<Vec<Scalar>>, Error> {
    let mut m: Vec<Vec<Scalar>> = Vec::with_capacity(rows.len());
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    for row in rows {
        debug_assert_eq!(row.len(), cols);
        let mut prom = Vec::with_capacity(cols);
        for c in row {
            prom.push(c.promote(kind)?);
        }
        m.push(prom);
    }
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].inv()?;
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv)?;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let delta = f.mul(&m[r][j])?;
                    m[i][j] = m[i][j].sub(&delta)?;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_det() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.det(), rat_int(0));
        let b = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(b.det(), rat_int(5));
        assert_eq!(b.rank(), 2);
        // fractions clear correctly
        let c = RatMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 4), rat(1, 5)],
        ]);
        assert_eq!(c.det(), rat(1, 10) - rat(1, 12));
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        // x + 2y + 3z = 0, 4x + 5y + 6z = 0 -> kernel spanned by (1, -2, 1)
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        let basis = a.kernel_basis();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], vec![rat_int(1), rat_int(-2), rat_int(1)]);
        // check A v = 0 exactly
        for i in 0..a.rows {
            let mut acc = Rational::zero();
            for j in 0..a.cols {
                acc += a.get(i, j) * &basis[0][j];
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn kernel_normalization_convention() {
        // free column first: kernel vector has leading 1
        let a = m(&[&[0, 1]]);
        let basis = a.kernel_basis();
        assert_eq!(basis, vec![vec![rat_int(1), rat_int(0)]]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1], &[2, 0]]);
        let x = a.solve(&[rat_int(3), rat_int(1), rat_int(4)]).unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(1)]);
        assert!(a.solve(&[rat_int(3), rat_int(1), rat_int(5)]).is_none());
    }

    #[test]
    fn rref_over_cyclotomic_scalars() {
        use crate::cyclotomic::CycNumber;
        let theta = Scalar::Cyc(CycNumber::zeta(4));
        let kind = ScalarKind::Cyclotomic(4);
        // rows (theta, 1) and (1, -theta) are proportional since theta*(-theta) = 1
        let rows = vec![
            vec![theta.clone(), Scalar::from_int(1)],
            vec![Scalar::from_int(1), theta.neg()],
        ];
        let rref = scalar_rref(rows, kind).unwrap();
        assert_eq!(rref.len(), 1);
        assert!(rref[0][0].is_one());
    }
}
