// Copyright 2026 The stabtool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::fmt;

use super::{BitVector, F2Error};

/// A dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    cols: usize,
}

/// Bookkeeping from [`rref`]: the pivot of each nonzero row and the
/// accumulated row operations `T` with `T·A = rref(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReductionRecord {
    pub pivot_columns: Vec<usize>,
    pub transform: BitMatrix,
}

impl RowReductionRecord {
    pub fn rank(&self) -> usize {
        self.pivot_columns.len()
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![BitVector::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitVector::unit(n, i)).collect(),
            cols: n,
        }
    }

    /// Builds a matrix from rows; `cols` disambiguates the zero-row case.
    pub fn from_rows(rows: Vec<BitVector>, cols: usize) -> Result<Self, F2Error> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(F2Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { rows, cols })
    }

    pub fn from_bools(rows: &[Vec<bool>]) -> Result<Self, F2Error> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(rows.iter().map(|r| BitVector::from_bools(r)).collect(), cols)
    }

    /// Parses rows written as `0`/`1` strings.
    pub fn parse_rows(rows: &[&str]) -> Result<Self, F2Error> {
        let parsed = rows
            .iter()
            .map(|r| r.parse::<BitVector>())
            .collect::<Result<Vec<_>, _>>()?;
        let cols = parsed.first().map_or(0, BitVector::len);
        Self::from_rows(parsed, cols)
    }

    #[inline]
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn col_count(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row].get(col)
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.rows[row].set(col, value);
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn column(&self, j: usize) -> BitVector {
        let mut out = BitVector::zeros(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            if row.get(j) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones() {
                out.rows[j].set(i, true);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    /// `row[target] += row[source]`
    pub fn add_row(&mut self, target: usize, source: usize) {
        assert_ne!(target, source);
        let src = self.rows[source].clone();
        self.rows[target].add_assign(&src);
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.rows.swap(a, b);
    }

    /// Matrix product over GF(2): each output row is the XOR of the rows of
    /// `rhs` selected by the corresponding row of `self`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, F2Error> {
        if self.cols != rhs.rows.len() {
            return Err(F2Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows.len(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(rhs.cols);
                for k in row.ones() {
                    acc.add_assign(&rhs.rows[k]);
                }
                acc
            })
            .collect();
        Ok(Self { rows, cols: rhs.cols })
    }

    pub fn mul_vec(&self, x: &BitVector) -> Result<BitVector, F2Error> {
        if x.len() != self.cols {
            return Err(F2Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(x) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        rref(self).1.rank()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix({}x{})[", self.rows.len(), self.cols)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

/// Reduced row-echelon form, eliminating above and below every pivot.
pub fn rref(a: &BitMatrix) -> (BitMatrix, RowReductionRecord) {
    let mut m = a.clone();
    let mut t = BitMatrix::identity(a.row_count());
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..a.col_count() {
        if next == m.row_count() {
            break;
        }
        let Some(found) = (next..m.row_count()).find(|&r| m.rows[r].get(col)) else {
            continue;
        };
        m.swap_rows(next, found);
        t.swap_rows(next, found);
        for r in 0..m.row_count() {
            if r != next && m.rows[r].get(col) {
                m.add_row(r, next);
                t.add_row(r, next);
            }
        }
        pivots.push(col);
        next += 1;
    }
    (
        m,
        RowReductionRecord {
            pivot_columns: pivots,
            transform: t,
        },
    )
}

/// Some `x` with `a·x = b`; free variables are set to zero.
pub fn solve(a: &BitMatrix, b: &BitVector) -> Result<BitVector, F2Error> {
    if b.len() != a.row_count() {
        return Err(F2Error::DimensionMismatch {
            expected: a.row_count(),
            found: b.len(),
        });
    }
    let (_, record) = rref(a);
    let tb = record.transform.mul_vec(b)?;
    let rank = record.rank();
    if (rank..a.row_count()).any(|r| tb.get(r)) {
        return Err(F2Error::Inconsistent);
    }
    let mut x = BitVector::zeros(a.col_count());
    for (r, &col) in record.pivot_columns.iter().enumerate() {
        if tb.get(r) {
            x.set(col, true);
        }
    }
    Ok(x)
}

/// A basis of `{x : a·x = 0}`, one vector per free column in increasing order.
pub fn null_space_basis(a: &BitMatrix) -> Vec<BitVector> {
    let (reduced, record) = rref(a);
    let mut is_pivot = vec![false; a.col_count()];
    for &c in &record.pivot_columns {
        is_pivot[c] = true;
    }
    (0..a.col_count())
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = BitVector::unit(a.col_count(), free);
            for (r, &pc) in record.pivot_columns.iter().enumerate() {
                if reduced.get(r, free) {
                    x.set(pc, true);
                }
            }
            x
        })
        .collect()
}

pub fn invert(a: &BitMatrix) -> Result<BitMatrix, F2Error> {
    if a.row_count() != a.col_count() {
        return Err(F2Error::NotSquare {
            rows: a.row_count(),
            cols: a.col_count(),
        });
    }
    let (_, record) = rref(a);
    if record.rank() < a.row_count() {
        return Err(F2Error::Singular);
    }
    Ok(record.transform)
}

/// Right inverse `A⁺ = Aᵀ(AAᵀ)⁻¹` with `A·A⁺ = I`.
///
/// Over GF(2) the Gram matrix `AAᵀ` can be singular even when the rows of `A`
/// are independent (a single row of even weight is enough). In that case the
/// right inverse is obtained by elimination instead, via [`right_inverse`].
pub fn right_pseudoinverse(a: &BitMatrix) -> Result<BitMatrix, F2Error> {
    if a.row_count() > a.col_count() {
        return Err(F2Error::RowsDependent);
    }
    let at = a.transpose();
    let gram = a.mul(&at)?;
    match invert(&gram) {
        Ok(gram_inv) => at.mul(&gram_inv),
        Err(F2Error::Singular) => right_inverse(a),
        Err(e) => Err(e),
    }
}

/// Some `X` with `A·X = I`, column `i` solving `A·x = e_i` with free variables zeroed.
pub fn right_inverse(a: &BitMatrix) -> Result<BitMatrix, F2Error> {
    let r = a.row_count();
    if r > a.col_count() {
        return Err(F2Error::RowsDependent);
    }
    let (_, record) = rref(a);
    if record.rank() < r {
        return Err(F2Error::RowsDependent);
    }
    let mut out = BitMatrix::zeros(a.col_count(), r);
    for i in 0..r {
        // T·A = R with full row rank, so R·x = T·e_i = column i of T
        let rhs = record.transform.column(i);
        for (row, &col) in record.pivot_columns.iter().enumerate() {
            if rhs.get(row) {
                out.set(col, i, true);
            }
        }
    }
    Ok(out)
}
