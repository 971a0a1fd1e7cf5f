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

use num_complex::Complex64;

use super::{AffineSubspaceTriple, StabiliserError, PHASE_TOLERANCE, ZERO_TOLERANCE};
use crate::f2::{BitMatrix, BitVector};
use crate::pauli::{bits_of, AmplitudeVector, Phase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accepted,
    Rejected,
}

/// Why a vector is not (proportional to) a stabiliser state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StateRejection {
    ZeroVector,
    NonFinite,
    SupportSizeNotPowerOfTwo,
    SupportNotAffine,
    /// A nonzero amplitude is not a fourth root of unity times the reference amplitude.
    AmplitudeOffGrid,
    /// A fourth-root amplitude disagrees with the extracted `Q`, `ℓ`.
    AmplitudeInconsistent,
}

impl fmt::Display for StateRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ZeroVector => "zero vector",
            Self::NonFinite => "non-finite amplitude",
            Self::SupportSizeNotPowerOfTwo => "support size not a power of two",
            Self::SupportNotAffine => "support not affine",
            Self::AmplitudeOffGrid => "amplitude off the {±1, ±i} grid",
            Self::AmplitudeInconsistent => "amplitude inconsistent with Q, ℓ",
        })
    }
}

/// Outcome of [`verify_stabiliser_vector`].
#[derive(Clone, Debug, PartialEq)]
pub struct StabiliserDiagnosis {
    pub verdict: Verdict,
    pub failure_reason: Option<StateRejection>,
    /// Basis index of the offending amplitude, where one exists.
    pub witness: Option<usize>,
    /// The extracted triple and reference amplitude on acceptance.
    pub triple: Option<AffineSubspaceTriple>,
    pub global_factor: Option<Complex64>,
}

impl StabiliserDiagnosis {
    pub fn is_accepted(&self) -> bool {
        self.verdict == Verdict::Accepted
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Rejection {
    pub reason: StateRejection,
    pub witness: Option<usize>,
}

impl Rejection {
    fn new(reason: StateRejection, witness: Option<usize>) -> Self {
        Self { reason, witness }
    }
}

impl From<Rejection> for StabiliserError {
    fn from(r: Rejection) -> Self {
        StabiliserError::NotAStabiliserState {
            reason: r.reason,
            witness: r.witness,
        }
    }
}

/// Support of `v` under the relative zero threshold, in increasing order.
pub(crate) fn support(v: &[Complex64]) -> Result<Vec<usize>, Rejection> {
    let mut max = 0.0f64;
    for (i, a) in v.iter().enumerate() {
        if !a.re.is_finite() || !a.im.is_finite() {
            return Err(Rejection::new(StateRejection::NonFinite, Some(i)));
        }
        max = max.max(a.norm());
    }
    if max == 0.0 {
        return Err(Rejection::new(StateRejection::ZeroVector, None));
    }
    let threshold = ZERO_TOLERANCE * max;
    Ok((0..v.len()).filter(|&i| v[i].norm() > threshold).collect())
}

pub(crate) struct Extraction {
    pub triple: AffineSubspaceTriple,
    pub factor: Complex64,
}

/// Support sort, basis read-off, and `ℓ`, `Q̃` from the weight-one and
/// weight-two amplitudes. With `full`, also checks that the support is the
/// affine span of the basis and that every amplitude matches `Q`, `ℓ`.
pub(crate) fn extract(v: &AmplitudeVector, full: bool) -> Result<Extraction, Rejection> {
    let amps = v.entries();
    let n = v.n();
    let supp = support(amps)?;
    if !supp.len().is_power_of_two() {
        return Err(Rejection::new(StateRejection::SupportSizeNotPowerOfTwo, None));
    }
    let z0 = supp[0];
    let mut shifted: Vec<usize> = supp.iter().map(|&z| z ^ z0).collect();
    shifted.sort_unstable();
    let k = shifted.len().trailing_zeros() as usize;
    let basis: Vec<usize> = (0..k).map(|j| shifted[1 << j]).collect();

    if full {
        for m in 1..shifted.len() {
            let expected = shifted[m & (m - 1)] ^ basis[m.trailing_zeros() as usize];
            if shifted[m] != expected {
                return Err(Rejection::new(StateRejection::SupportNotAffine, Some(shifted[m] ^ z0)));
            }
        }
    }

    let factor = amps[z0];
    let ratio_phase = |m: usize| -> Result<Phase, Rejection> {
        let label = shifted[m] ^ z0;
        Phase::nearest(amps[label] / factor, PHASE_TOLERANCE)
            .ok_or(Rejection::new(StateRejection::AmplitudeOffGrid, Some(label)))
    };

    let mut ell = vec![false; k];
    let mut qform = BitMatrix::zeros(k, k);
    for (j, l) in ell.iter_mut().enumerate() {
        let e = ratio_phase(1 << j)?.exponent();
        *l = e & 1 == 1;
        qform.set(j, j, e >> 1 == 1);
    }
    for i in 0..k {
        for j in i + 1..k {
            let m = (1 << i) | (1 << j);
            let e = ratio_phase(m)?.exponent();
            if (e & 1 == 1) != (ell[i] ^ ell[j]) {
                return Err(Rejection::new(
                    StateRejection::AmplitudeInconsistent,
                    Some(shifted[m] ^ z0),
                ));
            }
            qform.set(i, j, (e >> 1 == 1) ^ qform.get(i, i) ^ qform.get(j, j));
        }
    }

    let to_label = |x: usize| bits_of(x, n).expect("index below 2^n");
    let triple = AffineSubspaceTriple::new(
        n,
        basis.iter().map(|&b| to_label(b)).collect(),
        to_label(z0),
        qform,
        BitVector::from_bools(&ell),
    )
    .map_err(|_| Rejection::new(StateRejection::SupportNotAffine, None))?;

    if full {
        let coeffs = triple.coefficients();
        for (m, &label) in shifted.iter().enumerate() {
            let got = ratio_phase(m)?;
            if got != coeffs.phase(m as u64) {
                return Err(Rejection::new(StateRejection::AmplitudeInconsistent, Some(label ^ z0)));
            }
        }
    }
    Ok(Extraction { triple, factor })
}

/// Converts the amplitudes of a stabiliser state to its affine subspace
/// triple, returning the amplitude at the shift as the global factor, so that
/// `factor · Σ (-1)^{Q} i^{ℓ} |z + z0⟩` reproduces `v`.
///
/// Only the checks needed to run the conversion are made; use
/// [`verify_stabiliser_vector`] for untrusted input.
pub fn amplitudes_to_triple(v: &AmplitudeVector) -> Result<(AffineSubspaceTriple, Complex64), StabiliserError> {
    let e = extract(v, false)?;
    Ok((e.triple, e.factor))
}

/// Accepts iff `v` is a nonzero multiple of a stabiliser state.
pub fn verify_stabiliser_vector(v: &AmplitudeVector) -> StabiliserDiagnosis {
    match extract(v, true) {
        Ok(e) => StabiliserDiagnosis {
            verdict: Verdict::Accepted,
            failure_reason: None,
            witness: None,
            triple: Some(e.triple),
            global_factor: Some(e.factor),
        },
        Err(r) => StabiliserDiagnosis {
            verdict: Verdict::Rejected,
            failure_reason: Some(r.reason),
            witness: r.witness,
            triple: None,
            global_factor: None,
        },
    }
}
