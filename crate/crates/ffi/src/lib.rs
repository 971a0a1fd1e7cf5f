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

//! C interface to stabtool.
//!
//! Every function returns a [`StabStatus`]; on failure a message is available
//! from [`stab_last_error`]. Complex arrays are interleaved `re, im` doubles;
//! matrices are row-major. Handles are opaque and must be released with the
//! matching `_free` function.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_complex::Complex64;
use stabtool::circuit::{default_depth, random_tableau, rng_from_seed};
use stabtool::clifford::{
    is_valid_tableau, tableau_to_matrix, verify_clifford_matrix, CliffordMatrix, CliffordRejection, Tableau, TableauRow,
};
use stabtool::document::{Document, Kind};
use stabtool::pauli::{AmplitudeVector, PauliOperator};
use stabtool::stabiliser::{
    check_to_amplitudes, triple_to_check, verify_stabiliser_vector, CheckMatrix, StateRejection,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Rejected = 3,
    BufferTooSmall = 4,
    Internal = 5,
}

/// Rejection reason reported in a [`StabDiagnosis`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabReason {
    None = 0,
    ZeroVector = 1,
    NonFinite = 2,
    SupportSizeNotPowerOfTwo = 3,
    SupportNotAffine = 4,
    AmplitudeOffGrid = 5,
    AmplitudeInconsistent = 6,
    FirstColumnNotStabiliser = 10,
    ColumnNotStabilised = 11,
    SignMatrixSingular = 12,
    CandidateNotHermitian = 13,
    CandidatesDoNotCommute = 14,
    RelativePhaseInconsistent = 15,
    NonUnitary = 16,
}

impl From<StateRejection> for StabReason {
    fn from(r: StateRejection) -> Self {
        match r {
            StateRejection::ZeroVector => Self::ZeroVector,
            StateRejection::NonFinite => Self::NonFinite,
            StateRejection::SupportSizeNotPowerOfTwo => Self::SupportSizeNotPowerOfTwo,
            StateRejection::SupportNotAffine => Self::SupportNotAffine,
            StateRejection::AmplitudeOffGrid => Self::AmplitudeOffGrid,
            StateRejection::AmplitudeInconsistent => Self::AmplitudeInconsistent,
        }
    }
}

impl From<CliffordRejection> for StabReason {
    fn from(r: CliffordRejection) -> Self {
        match r {
            CliffordRejection::FirstColumnNotStabiliser => Self::FirstColumnNotStabiliser,
            CliffordRejection::ColumnNotStabilised => Self::ColumnNotStabilised,
            CliffordRejection::SignMatrixSingular => Self::SignMatrixSingular,
            CliffordRejection::CandidateNotHermitian => Self::CandidateNotHermitian,
            CliffordRejection::CandidatesDoNotCommute => Self::CandidatesDoNotCommute,
            CliffordRejection::RelativePhaseInconsistent => Self::RelativePhaseInconsistent,
            CliffordRejection::NonUnitary => Self::NonUnitary,
        }
    }
}

/// Verdict of a verification call. `witness` is a basis index (states) or
/// column index (gates), or -1.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabDiagnosis {
    pub accepted: bool,
    pub reason: StabReason,
    pub witness: i64,
}

/// Which half of a tableau row to read.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabTableauPart {
    /// The image of `Z_i`.
    U = 0,
    /// The image of `X_i`.
    V = 1,
}

/// Opaque check matrix of a stabiliser state.
pub struct StabCheckMatrix(CheckMatrix);

/// Opaque stabiliser tableau of a Clifford gate.
pub struct StabTableau(Tableau);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Failure(StabStatus, String);

fn fail<T>(status: StabStatus, msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure(status, msg.into()))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> StabStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => StabStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            StabStatus::Internal
        }
    }
}

unsafe fn complex_slice(data: *const f64, count: usize) -> Result<Vec<Complex64>, Failure> {
    if data.is_null() {
        return fail(StabStatus::NullPointer, "null array");
    }
    let Some(doubles) = count.checked_mul(2) else {
        return fail(StabStatus::InvalidInput, "length overflow");
    };
    let raw: &[f64] = std::slice::from_raw_parts(data, doubles);
    Ok(raw.chunks_exact(2).map(|c| Complex64::new(c[0], c[1])).collect())
}

unsafe fn write_complex(out: *mut f64, capacity: usize, values: &[Complex64]) -> Result<(), Failure> {
    if out.is_null() {
        return fail(StabStatus::NullPointer, "null output array");
    }
    if capacity < values.len() {
        return fail(
            StabStatus::BufferTooSmall,
            format!("need room for {} complex values", values.len()),
        );
    }
    let dst = std::slice::from_raw_parts_mut(out, 2 * values.len());
    for (pair, v) in dst.chunks_exact_mut(2).zip(values) {
        pair[0] = v.re;
        pair[1] = v.im;
    }
    Ok(())
}

unsafe fn write_str(buf: *mut c_char, capacity: usize, s: &str) -> Result<(), Failure> {
    if buf.is_null() {
        return fail(StabStatus::NullPointer, "null output buffer");
    }
    let bytes = s.as_bytes();
    if capacity < bytes.len() + 1 {
        return fail(StabStatus::BufferTooSmall, format!("need {} bytes", bytes.len() + 1));
    }
    ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, bytes.len());
    *buf.add(bytes.len()) = 0;
    Ok(())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return fail(StabStatus::NullPointer, "null string");
    }
    CStr::from_ptr(s)
        .to_str()
        .or_else(|_| fail(StabStatus::InvalidInput, "string is not UTF-8"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return fail(StabStatus::NullPointer, "null output handle");
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn get<'a, T>(handle: *const T) -> Result<&'a T, Failure> {
    handle
        .as_ref()
        .ok_or_else(|| Failure(StabStatus::NullPointer, "null handle".into()))
}

fn amplitude_vector(entries: Vec<Complex64>) -> Result<AmplitudeVector, Failure> {
    AmplitudeVector::new(entries).or_else(|e| fail(StabStatus::InvalidInput, e.to_string()))
}

fn clifford_matrix(row_major: &[Complex64], dim: usize) -> Result<CliffordMatrix, Failure> {
    if dim < 2 || !dim.is_power_of_two() {
        return fail(
            StabStatus::InvalidInput,
            format!("dimension {dim} is not a power of two"),
        );
    }
    let columns = (0..dim)
        .map(|j| (0..dim).map(|i| row_major[i * dim + j]).collect())
        .collect();
    CliffordMatrix::from_columns(columns).or_else(|e| fail(StabStatus::InvalidInput, e.to_string()))
}

/// Message for the most recent failed call on this thread; empty after a
/// success. Valid until the next stabtool call on the same thread.
#[no_mangle]
pub extern "C" fn stab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Decides whether `len` amplitudes are proportional to a stabiliser state.
#[no_mangle]
pub unsafe extern "C" fn stab_verify_state(amplitudes: *const f64, len: usize, out: *mut StabDiagnosis) -> StabStatus {
    guard(|| {
        let v = amplitude_vector(complex_slice(amplitudes, len)?)?;
        if out.is_null() {
            return fail(StabStatus::NullPointer, "null diagnosis");
        }
        let d = verify_stabiliser_vector(&v);
        *out = StabDiagnosis {
            accepted: d.is_accepted(),
            reason: d.failure_reason.map_or(StabReason::None, StabReason::from),
            witness: d.witness.map_or(-1, |w| w as i64),
        };
        Ok(())
    })
}

/// Check matrix of a verified stabiliser state; `STAB_STATUS_REJECTED` otherwise.
#[no_mangle]
pub unsafe extern "C" fn stab_state_to_check(
    amplitudes: *const f64,
    len: usize,
    out: *mut *mut StabCheckMatrix,
) -> StabStatus {
    guard(|| {
        let v = amplitude_vector(complex_slice(amplitudes, len)?)?;
        let d = verify_stabiliser_vector(&v);
        let Some(t) = d.triple else {
            let reason = d.failure_reason.map_or_else(String::new, |r| r.to_string());
            return fail(StabStatus::Rejected, reason);
        };
        let m = triple_to_check(&t).or_else(|e| fail(StabStatus::Internal, e.to_string()))?;
        put(out, StabCheckMatrix(m))
    })
}

/// Builds a check matrix from `n` rows of `2n + 1` characters `0`/`1`
/// laid out as `q | p | sign`.
#[no_mangle]
pub unsafe extern "C" fn stab_check_matrix_parse(
    rows: *const *const c_char,
    n: usize,
    out: *mut *mut StabCheckMatrix,
) -> StabStatus {
    guard(|| {
        if rows.is_null() {
            return fail(StabStatus::NullPointer, "null row array");
        }
        let rows = std::slice::from_raw_parts(rows, n)
            .iter()
            .map(|&r| read_str(r))
            .collect::<Result<Vec<_>, _>>()?;
        let m = CheckMatrix::parse_rows(&rows).or_else(|e| fail(StabStatus::InvalidInput, e.to_string()))?;
        put(out, StabCheckMatrix(m))
    })
}

/// Qubit count, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn stab_check_matrix_qubits(m: *const StabCheckMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.n())
}

/// Writes row `i` as a nul-terminated bitstring; needs `2n + 2` bytes.
#[no_mangle]
pub unsafe extern "C" fn stab_check_matrix_row(
    m: *const StabCheckMatrix,
    i: usize,
    buf: *mut c_char,
    capacity: usize,
) -> StabStatus {
    guard(|| {
        let m = get(m)?;
        let Some(row) = m.0.rows().get(i) else {
            return fail(StabStatus::InvalidInput, format!("row {i} out of range"));
        };
        write_str(buf, capacity, &row.to_bits().to_string())
    })
}

/// Writes the `2^n` normalised amplitudes of the state; `capacity` counts
/// complex values.
#[no_mangle]
pub unsafe extern "C" fn stab_check_to_state(m: *const StabCheckMatrix, out: *mut f64, capacity: usize) -> StabStatus {
    guard(|| {
        let m = get(m)?;
        if m.0.n() > 30 {
            return fail(StabStatus::InvalidInput, "too many qubits for an amplitude vector");
        }
        let v = check_to_amplitudes(&m.0).or_else(|e| fail(StabStatus::Internal, e.to_string()))?;
        write_complex(out, capacity, v.entries())
    })
}

#[no_mangle]
pub unsafe extern "C" fn stab_check_matrix_free(m: *mut StabCheckMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Decides whether the `dim × dim` row-major matrix is a Clifford gate.
#[no_mangle]
pub unsafe extern "C" fn stab_verify_gate(entries: *const f64, dim: usize, out: *mut StabDiagnosis) -> StabStatus {
    guard(|| {
        let Some(count) = dim.checked_mul(dim) else {
            return fail(StabStatus::InvalidInput, "dimension overflow");
        };
        let m = clifford_matrix(&complex_slice(entries, count)?, dim)?;
        if out.is_null() {
            return fail(StabStatus::NullPointer, "null diagnosis");
        }
        let d = verify_clifford_matrix(&m);
        *out = StabDiagnosis {
            accepted: d.is_accepted(),
            reason: d.failure_reason.map_or(StabReason::None, StabReason::from),
            witness: d.witness.map_or(-1, |w| w as i64),
        };
        Ok(())
    })
}

/// Tableau of a verified Clifford matrix; `STAB_STATUS_REJECTED` otherwise.
#[no_mangle]
pub unsafe extern "C" fn stab_gate_to_tableau(
    entries: *const f64,
    dim: usize,
    out: *mut *mut StabTableau,
) -> StabStatus {
    guard(|| {
        let Some(count) = dim.checked_mul(dim) else {
            return fail(StabStatus::InvalidInput, "dimension overflow");
        };
        let m = clifford_matrix(&complex_slice(entries, count)?, dim)?;
        let d = verify_clifford_matrix(&m);
        let Some(t) = d.tableau else {
            let reason = d.failure_reason.map_or_else(String::new, |r| r.to_string());
            return fail(StabStatus::Rejected, reason);
        };
        put(out, StabTableau(t))
    })
}

/// Builds a tableau from `n` pairs of Pauli literals such as `+XZ`, `-iYI`.
/// Fails unless the conjugate-tuple relations hold.
#[no_mangle]
pub unsafe extern "C" fn stab_tableau_parse(
    u: *const *const c_char,
    v: *const *const c_char,
    n: usize,
    out: *mut *mut StabTableau,
) -> StabStatus {
    guard(|| {
        if u.is_null() || v.is_null() {
            return fail(StabStatus::NullPointer, "null literal array");
        }
        let parse = |s: *const c_char| -> Result<PauliOperator, Failure> {
            read_str(s)?
                .parse()
                .or_else(|e: stabtool::pauli::PauliError| fail(StabStatus::InvalidInput, e.to_string()))
        };
        let us = std::slice::from_raw_parts(u, n);
        let vs = std::slice::from_raw_parts(v, n);
        let rows = us
            .iter()
            .zip(vs)
            .map(|(&a, &b)| {
                Ok(TableauRow {
                    u: parse(a)?,
                    v: parse(b)?,
                })
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        let t = Tableau::new(rows).or_else(|e| fail(StabStatus::InvalidInput, e.to_string()))?;
        if !is_valid_tableau(&t) {
            return fail(
                StabStatus::InvalidInput,
                "tableau violates the conjugate-tuple relations",
            );
        }
        put(out, StabTableau(t))
    })
}

/// Tableau of a seeded random H/S/CNOT circuit of depth `10n`.
#[no_mangle]
pub unsafe extern "C" fn stab_tableau_random(n: usize, seed: u64, out: *mut *mut StabTableau) -> StabStatus {
    guard(|| {
        if n == 0 {
            return fail(StabStatus::InvalidInput, "n must be positive");
        }
        put(
            out,
            StabTableau(random_tableau(n, default_depth(n), &mut rng_from_seed(seed))),
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn stab_tableau_qubits(t: *const StabTableau) -> usize {
    t.as_ref().map_or(0, |t| t.0.n())
}

/// Writes `U_i` or `V_i` as a nul-terminated Pauli literal; `n + 3` bytes
/// suffice. `part` is a [`StabTableauPart`] value.
#[no_mangle]
pub unsafe extern "C" fn stab_tableau_row(
    t: *const StabTableau,
    i: usize,
    part: u32,
    buf: *mut c_char,
    capacity: usize,
) -> StabStatus {
    guard(|| {
        let t = get(t)?;
        let Some(row) = t.0.rows().get(i) else {
            return fail(StabStatus::InvalidInput, format!("row {i} out of range"));
        };
        let p = match part {
            x if x == StabTableauPart::U as u32 => &row.u,
            x if x == StabTableauPart::V as u32 => &row.v,
            _ => return fail(StabStatus::InvalidInput, format!("unknown tableau part {part}")),
        };
        write_str(buf, capacity, &p.to_string())
    })
}

/// Writes the `2^n × 2^n` row-major matrix; `capacity` counts complex values.
#[no_mangle]
pub unsafe extern "C" fn stab_tableau_to_matrix(t: *const StabTableau, out: *mut f64, capacity: usize) -> StabStatus {
    guard(|| {
        let t = get(t)?;
        if t.0.n() > 14 {
            return fail(StabStatus::InvalidInput, "too many qubits for a dense matrix");
        }
        let m = tableau_to_matrix(&t.0).or_else(|e| fail(StabStatus::InvalidInput, e.to_string()))?;
        let dim = m.dim();
        let row_major: Vec<Complex64> = (0..dim * dim).map(|k| m.get(k / dim, k % dim)).collect();
        write_complex(out, capacity, &row_major)
    })
}

#[no_mangle]
pub unsafe extern "C" fn stab_tableau_free(t: *mut StabTableau) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Converts a JSON document to the kind named by `target` (`amplitudes`,
/// `triple`, `check_matrix`, `tableau`, `matrix`). The result must be
/// released with [`stab_string_free`].
#[no_mangle]
pub unsafe extern "C" fn stab_convert_document(
    json: *const c_char,
    target: *const c_char,
    out: *mut *mut c_char,
) -> StabStatus {
    guard(|| {
        let doc = Document::parse(read_str(json)?).or_else(|e| fail(StabStatus::InvalidInput, e.to_string()))?;
        let target: Kind = read_str(target)?
            .parse()
            .or_else(|e: stabtool::document::DocumentError| fail(StabStatus::InvalidInput, e.to_string()))?;
        let converted = stabtool::cli::convert(&doc, target).or_else(|e| match e {
            stabtool::cli::CliError::Rejected(m) => fail(StabStatus::Rejected, m),
            stabtool::cli::CliError::Malformed(m) => fail(StabStatus::InvalidInput, m),
        })?;
        if out.is_null() {
            return fail(StabStatus::NullPointer, "null output string");
        }
        *out = CString::new(converted.to_json()).expect("JSON has no nul").into_raw();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn stab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
