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

//! Stabiliser states as amplitudes, affine subspace triples and check matrices.

mod amplitudes;
mod check;
mod triple;

pub(crate) use amplitudes::support;
pub use amplitudes::{amplitudes_to_triple, verify_stabiliser_vector, StabiliserDiagnosis, StateRejection, Verdict};
pub use check::{check_to_triple, triple_to_check, CheckMatrix, CheckRow};
pub use triple::AffineSubspaceTriple;

use crate::f2::F2Error;
use crate::pauli::{AmplitudeVector, PauliError};

/// An amplitude is zero when its modulus is at most this fraction of the largest modulus.
pub const ZERO_TOLERANCE: f64 = 1e-8;

/// Distance within which an amplitude ratio is taken to be a fourth root of unity.
pub const PHASE_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StabiliserError {
    #[error("not a stabiliser state: {reason}")]
    NotAStabiliserState {
        reason: StateRejection,
        witness: Option<usize>,
    },
    #[error("invalid check matrix: {0}")]
    InvalidCheckMatrix(String),
    #[error("invalid affine subspace triple: {0}")]
    InvalidTriple(String),
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error(transparent)]
    F2(#[from] F2Error),
}

/// Amplitudes to a check matrix, through the affine subspace triple.
pub fn amplitudes_to_check(v: &AmplitudeVector) -> Result<CheckMatrix, StabiliserError> {
    let (t, _) = amplitudes_to_triple(v)?;
    triple_to_check(&t)
}

/// The normalised state fixed by `m`, amplitude at the triple's shift positive real.
pub fn check_to_amplitudes(m: &CheckMatrix) -> Result<AmplitudeVector, StabiliserError> {
    check_to_triple(m)?.to_amplitudes()
}

/// Free-function form of [`AffineSubspaceTriple::to_amplitudes`].
pub fn triple_to_amplitudes(t: &AffineSubspaceTriple) -> Result<AmplitudeVector, StabiliserError> {
    t.to_amplitudes()
}
