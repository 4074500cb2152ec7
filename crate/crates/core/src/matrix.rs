//! Square matrices over scalars and over polynomials, with exact
//! determinants.

use alloc::vec::Vec;

use crate::error::Error;
use crate::poly::MultiPoly;
use crate::scalar::{Scalar, ScalarKind};

/// A square matrix of exact scalars (one uniform kind).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    n: usize,
    kind: ScalarKind,
    entries: Vec<Scalar>, // row-major
}

impl ScalarMatrix {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let n = rows.len();
        let mut kind = ScalarKind::Rational;
        for row in &rows {
            if row.len() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for c in row {
                kind = kind.unify(c.kind())?;
            }
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            for c in row {
                entries.push(c.promote(kind)?);
            }
        }
        Ok(ScalarMatrix { n, kind, entries })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = alloc::vec![Scalar::from_int(0); n * n];
        for i in 0..n {
            entries[i * n + i] = Scalar::from_int(1);
        }
        ScalarMatrix {
            n,
            kind: ScalarKind::Rational,
            entries,
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    /// Matrix product (standard row-by-column).
    pub fn matmul(&self, other: &ScalarMatrix) -> Result<ScalarMatrix, Error> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let kind = self.kind.unify(other.kind)?;
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Scalar::zero(kind);
                for k in 0..n {
                    let prod = self
                        .get(i, k)
                        .promote(kind)?
                        .mul(&other.get(k, j).promote(kind)?)?;
                    acc = acc.add(&prod)?;
                }
                entries.push(acc);
            }
        }
        Ok(ScalarMatrix { n, kind, entries })
    }

    /// Exact determinant by Gaussian elimination over the scalar field.
    pub fn det(&self) -> Scalar {
        let n = self.n;
        if n == 0 {
            return Scalar::one(self.kind);
        }
        let mut m: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut det = Scalar::one(self.kind);
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Scalar::zero(self.kind);
            };
            if pivot_row != col {
                m.swap(pivot_row, col);
                det = det.neg();
            }
            let pivot = m[col][col].clone();
            det = det.mul(&pivot).expect("uniform kind");
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].mul(&inv).expect("uniform kind");
                for c in col..n {
                    let delta = factor.mul(&m[col][c]).expect("uniform kind");
                    m[r][c] = m[r][c].sub(&delta).expect("uniform kind");
                }
            }
        }
        det
    }
}

/// A square matrix of polynomials with uniform arity and scalar kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<MultiPoly>, // row-major
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<Self, Error> {
        let size = rows.len();
        let mut nvars = None;
        for row in &rows {
            if row.len() != size {
                return Err(Error::ArityMismatch {
                    expected: size,
                    found: row.len(),
                });
            }
            for p in row {
                match nvars {
                    None => nvars = Some(p.nvars()),
                    Some(n) if n == p.nvars() => {}
                    Some(n) => {
                        return Err(Error::ArityMismatch {
                            expected: n,
                            found: p.nvars(),
                        })
                    }
                }
            }
        }
        Ok(PolyMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.size + j]
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.size {
            for j in i + 1..self.size {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Replaces row `i` with the given entries.
    pub fn with_row(&self, i: usize, row: Vec<MultiPoly>) -> Result<Self, Error> {
        if row.len() != self.size {
            return Err(Error::ArityMismatch {
                expected: self.size,
                found: row.len(),
            });
        }
        let mut out = self.clone();
        for (j, p) in row.into_iter().enumerate() {
            out.entries[i * self.size + j] = p;
        }
        Ok(out)
    }

    /// Exact determinant by Laplace expansion over column subsets with
    /// memoization (2^m subproblems). Polynomial entries stay sparse, and
    /// unlike fraction-free elimination this never needs exact polynomial
    /// division, so intermediate results cannot blow up past the minors
    /// themselves. Intended for the desk scale m <= 10 or so.
    pub fn det(&self) -> MultiPoly {
        let m = self.size;
        assert!(m <= 20, "subset expansion is exponential in the size");
        if m == 0 {
            return MultiPoly::one(0);
        }
        let nvars = self.entries[0].nvars();
        let kind = self
            .entries
            .iter()
            .fold(ScalarKind::Rational, |k, p| k.unify(p.kind()).expect("uniform kind"));
        // minor[s] = det of rows 0..popcount(s), columns of the bit set s
        let mut minors: alloc::collections::BTreeMap<u32, MultiPoly> =
            alloc::collections::BTreeMap::new();
        minors.insert(0, MultiPoly::one(nvars).promote(kind).expect("constant"));
        let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
        // iterate subsets in increasing popcount via increasing numeric order:
        // a subset's sub-subsets are numerically smaller, so plain ascending
        // order is a valid evaluation order.
        for s in 1..=full {
            let k = s.count_ones() as usize; // row count of this minor
            let row = k - 1;
            let mut acc = MultiPoly::zero_with(nvars, kind);
            let mut pos = 0; // index of the column within the sorted subset
            for col in 0..m {
                if s & (1 << col) == 0 {
                    continue;
                }
                let entry = self.get(row, col);
                if !entry.is_zero() {
                    let sub = minors.get(&(s & !(1 << col))).expect("smaller subset");
                    let mut contrib = entry.mul(sub).expect("uniform ring");
                    if (row + pos) % 2 == 1 {
                        contrib = contrib.neg();
                    }
                    acc = acc.add(&contrib).expect("uniform ring");
                }
                pos += 1;
            }
            minors.insert(s, acc);
        }
        minors.remove(&full).expect("full subset computed")
    }
}
