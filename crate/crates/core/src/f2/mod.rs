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

//! Bit-packed linear algebra over GF(2).

mod gray;
mod matrix;
mod vector;

pub use gray::{gray_sequence, GrayCode};
pub use matrix::{
    invert, null_space_basis, right_inverse, right_pseudoinverse, rref, solve, BitMatrix, RowReductionRecord,
};
pub use vector::BitVector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum F2Error {
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix rows are linearly dependent")]
    RowsDependent,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0}")]
    Parse(String),
}
