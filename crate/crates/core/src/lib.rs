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

//! Fast verification and interconversion of stabiliser states and Clifford gates.
//!
//! Stabiliser states have three descriptions handled here: a vector of
//! amplitudes, an affine subspace triple `(V + z0, Q, ℓ)`, and a check matrix.
//! Clifford gates have two: a dense unitary and a stabiliser tableau. Every
//! conversion between them runs in time close to the size of its input, and
//! the [`oracle`] module carries slow exhaustive references for small sizes.
//!
//! ```
//! use stabtool::pauli::AmplitudeVector;
//! use stabtool::stabiliser::{amplitudes_to_check, verify_stabiliser_vector};
//!
//! let h = std::f64::consts::FRAC_1_SQRT_2;
//! let bell = AmplitudeVector::from_real(&[h, 0.0, 0.0, h]).unwrap();
//! assert!(verify_stabiliser_vector(&bell).is_accepted());
//! let rows: Vec<String> = amplitudes_to_check(&bell)
//!     .unwrap()
//!     .paulis()
//!     .iter()
//!     .map(ToString::to_string)
//!     .collect();
//! assert_eq!(rows, ["+XX", "+ZZ"]);
//! ```

pub mod bench;
pub mod circuit;
pub mod cli;
pub mod clifford;
pub mod dense;
pub mod document;
pub mod f2;
pub mod oracle;
pub mod pauli;
pub mod stabiliser;
