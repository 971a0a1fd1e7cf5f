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

//! Clifford gates as dense matrices and as stabiliser tableaus.

mod extract;
mod synth;

use std::fmt;

use num_complex::Complex64;

pub use extract::{matrix_to_tableau, verify_clifford_matrix};
pub use synth::tableau_to_matrix;

use crate::dense::DenseMatrix;
use crate::f2::F2Error;
use crate::pauli::{PauliError, PauliOperator};
use crate::stabiliser::StabiliserError;

/// The images `(C Z_i C*, C X_i C*)` of one qubit's basic Paulis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableauRow {
    pub u: PauliOperator,
    pub v: PauliOperator,
}

/// A Clifford gate up to global phase, given by the conjugates of all `Z_i`, `X_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    n: usize,
    rows: Vec<TableauRow>,
}

impl Tableau {
    /// Checks only shapes; see [`is_valid_tableau`] for the algebraic relations.
    pub fn new(rows: Vec<TableauRow>) -> Result<Self, CliffordError> {
        let n = rows.len();
        if n == 0 {
            return Err(CliffordError::InvalidTableau("tableau has no rows".into()));
        }
        if rows.iter().any(|r| r.u.n() != n || r.v.n() != n) {
            return Err(CliffordError::InvalidTableau(format!(
                "every Pauli must act on {n} qubits"
            )));
        }
        Ok(Self { n, rows })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            rows: (0..n)
                .map(|i| TableauRow {
                    u: PauliOperator::z(n, i),
                    v: PauliOperator::x(n, i),
                })
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[TableauRow] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut [TableauRow] {
        &mut self.rows
    }

    pub fn us(&self) -> Vec<PauliOperator> {
        self.rows.iter().map(|r| r.u.clone()).collect()
    }

    pub fn vs(&self) -> Vec<PauliOperator> {
        self.rows.iter().map(|r| r.v.clone()).collect()
    }
}

/// `true` iff every `U_i`, `V_i` squares to the identity, `U_i` anticommutes
/// with `V_j` exactly when `i = j`, and the `U`s and the `V`s commute among
/// themselves.
pub fn is_valid_tableau(t: &Tableau) -> bool {
    let rows = t.rows();
    let n = t.n();
    if rows.len() != n || rows.iter().any(|r| r.u.n() != n || r.v.n() != n) {
        return false;
    }
    if !rows
        .iter()
        .all(|r| r.u.is_hermitian_order_two() && r.v.is_hermitian_order_two())
    {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            if rows[i].u.symplectic_form(&rows[j].v) != (i == j) {
                return false;
            }
            if j > i && (rows[i].u.symplectic_form(&rows[j].u) || rows[i].v.symplectic_form(&rows[j].v)) {
                return false;
            }
        }
    }
    true
}

/// A `2^n × 2^n` matrix presented as a candidate Clifford gate, stored by columns.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordMatrix {
    n: usize,
    columns: Vec<Complex64>,
}

impl CliffordMatrix {
    pub fn from_dense(m: &DenseMatrix) -> Result<Self, CliffordError> {
        let dim = m.dim();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(CliffordError::BadDimension(dim));
        }
        let mut columns = Vec::with_capacity(dim * dim);
        for j in 0..dim {
            columns.extend((0..dim).map(|i| m[(i, j)]));
        }
        Ok(Self {
            n: dim.trailing_zeros() as usize,
            columns,
        })
    }

    /// Builds a matrix column by column; `columns[j]` is `C|j⟩`.
    pub fn from_columns(columns: Vec<Vec<Complex64>>) -> Result<Self, CliffordError> {
        let dim = columns.len();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(CliffordError::BadDimension(dim));
        }
        if let Some(bad) = columns.iter().find(|c| c.len() != dim) {
            return Err(CliffordError::BadDimension(bad.len()));
        }
        Ok(Self {
            n: dim.trailing_zeros() as usize,
            columns: columns.into_iter().flatten().collect(),
        })
    }

    pub(crate) fn from_column_major(n: usize, columns: Vec<Complex64>) -> Self {
        debug_assert_eq!(columns.len(), 1 << (2 * n));
        Self { n, columns }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn column(&self, j: usize) -> &[Complex64] {
        let dim = self.dim();
        &self.columns[j * dim..(j + 1) * dim]
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.columns[col * self.dim() + row]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        let dim = self.dim();
        self.columns[col * dim + row] = value;
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let dim = self.dim();
        let mut m = DenseMatrix::zeros(dim);
        for j in 0..dim {
            for (i, &v) in self.column(j).iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            n: self.n,
            columns: self.columns.iter().map(|&x| x * s).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Entries in column-major order.
    pub fn entries(&self) -> &[Complex64] {
        &self.columns
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CliffordRejection {
    FirstColumnNotStabiliser,
    /// Some column is not a ±1 eigenvector of a generator with the sign the
    /// weight-one columns predict.
    ColumnNotStabilised,
    /// The sign pattern of the weight-one columns is not invertible.
    SignMatrixSingular,
    CandidateNotHermitian,
    CandidatesDoNotCommute,
    RelativePhaseInconsistent,
    NonUnitary,
}

impl fmt::Display for CliffordRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::FirstColumnNotStabiliser => "first column not a stabiliser state",
            Self::ColumnNotStabilised => "column not (anti)stabilised by U_i",
            Self::SignMatrixSingular => "weight-one column signs are linearly dependent",
            Self::CandidateNotHermitian => "candidate V_i is not Hermitian",
            Self::CandidatesDoNotCommute => "candidate V_i do not commute",
            Self::RelativePhaseInconsistent => "relative column phase inconsistent",
            Self::NonUnitary => "non-unitary support pattern",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CliffordDiagnosis {
    pub verdict: crate::stabiliser::Verdict,
    pub failure_reason: Option<CliffordRejection>,
    /// Index of the lowest offending column, where one exists.
    pub witness: Option<usize>,
    pub tableau: Option<Tableau>,
}

impl CliffordDiagnosis {
    pub fn is_accepted(&self) -> bool {
        self.verdict == crate::stabiliser::Verdict::Accepted
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliffordError {
    #[error("tableau extraction failed: {reason}")]
    ExtractionFailed {
        reason: CliffordRejection,
        witness: Option<usize>,
    },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("matrix dimension {0} is not a power of two")]
    BadDimension(usize),
    #[error(transparent)]
    Stabiliser(#[from] StabiliserError),
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error(transparent)]
    F2(#[from] F2Error),
}
