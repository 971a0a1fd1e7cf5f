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

use num_complex::Complex64;

use super::{
    is_valid_tableau, CliffordDiagnosis, CliffordError, CliffordMatrix, CliffordRejection, Tableau, TableauRow,
};
use crate::f2::{invert, right_pseudoinverse, BitMatrix, BitVector, GrayCode};
use crate::pauli::{index_of, parity, power_product, IndexMasks, PauliOperator, Phase};
use crate::stabiliser::{
    amplitudes_to_triple, support, triple_to_check, verify_stabiliser_vector, Verdict, PHASE_TOLERANCE, ZERO_TOLERANCE,
};

#[derive(Debug, Clone, Copy)]
struct Failure {
    reason: CliffordRejection,
    witness: Option<usize>,
}

fn fail<T>(reason: CliffordRejection, witness: Option<usize>) -> Result<T, Failure> {
    Err(Failure { reason, witness })
}

impl From<Failure> for CliffordError {
    fn from(f: Failure) -> Self {
        CliffordError::ExtractionFailed {
            reason: f.reason,
            witness: f.witness,
        }
    }
}

/// Extracts the tableau of a Clifford gate from its matrix.
///
/// Reads only column 0 in full, one nonzero entry of each weight-one column,
/// and two entries for each pair of weight-one/weight-two columns. The input
/// is trusted: a non-Clifford matrix may produce an error or a meaningless
/// tableau. Use [`verify_clifford_matrix`] for untrusted input.
pub fn matrix_to_tableau(c: &CliffordMatrix) -> Result<Tableau, CliffordError> {
    Ok(extract(c, false)?)
}

/// Accepts iff `m` is a Clifford gate up to global phase.
pub fn verify_clifford_matrix(m: &CliffordMatrix) -> CliffordDiagnosis {
    match extract(m, true) {
        Ok(t) => CliffordDiagnosis {
            verdict: Verdict::Accepted,
            failure_reason: None,
            witness: None,
            tableau: Some(t),
        },
        Err(f) => CliffordDiagnosis {
            verdict: Verdict::Rejected,
            failure_reason: Some(f.reason),
            witness: f.witness,
            tableau: None,
        },
    }
}

/// Index of the column for the weight-one label on `qubit`.
#[inline]
fn unit_column(n: usize, qubit: usize) -> usize {
    1 << (n - 1 - qubit)
}

fn first_nonzero(col: &[Complex64]) -> Option<usize> {
    support(col).ok().and_then(|s| s.first().copied())
}

fn max_modulus(col: &[Complex64]) -> f64 {
    col.iter().map(|a| a.norm()).fold(0.0, f64::max)
}

/// `a / b` as a fourth root of unity, or `None` when `b` is negligible or the
/// ratio is off the grid.
fn ratio_phase(a: Complex64, b: Complex64, scale: f64) -> Option<Phase> {
    if b.norm() <= ZERO_TOLERANCE * scale {
        return None;
    }
    Phase::nearest(a / b, PHASE_TOLERANCE)
}

fn sign_of(ph: Phase) -> Option<bool> {
    match ph {
        Phase::ONE => Some(false),
        Phase::MINUS_ONE => Some(true),
        _ => None,
    }
}

fn extract(c: &CliffordMatrix, verify: bool) -> Result<Tableau, Failure> {
    use CliffordRejection::*;
    let n = c.n();
    let dim = c.dim();
    let col0 = crate::pauli::AmplitudeVector::new(c.column(0).to_vec()).map_err(|_| Failure {
        reason: NonUnitary,
        witness: Some(0),
    })?;

    // Step 1: generators of the stabiliser group of C|0⟩.
    let (triple, _) = if verify {
        let d = verify_stabiliser_vector(&col0);
        match (d.triple, d.global_factor) {
            (Some(t), Some(f)) => (t, f),
            _ => return fail(FirstColumnNotStabiliser, Some(0)),
        }
    } else {
        amplitudes_to_triple(&col0).map_err(|_| Failure {
            reason: FirstColumnNotStabiliser,
            witness: Some(0),
        })?
    };
    if verify && (col0.norm() - 1.0).abs() > PHASE_TOLERANCE {
        return fail(NonUnitary, Some(0));
    }
    let generators = triple_to_check(&triple)
        .map_err(|_| Failure {
            reason: FirstColumnNotStabiliser,
            witness: Some(0),
        })?
        .paulis();
    let gen_masks: Vec<IndexMasks> = generators.iter().map(PauliOperator::masks).collect();
    let r0 = index_of(triple.shift());

    // Step 2: P_i C|e_j⟩ = (-1)^{ρ_i[j]} C|e_j⟩, read at the first nonzero entry.
    let mut rho = BitMatrix::zeros(n, n);
    for j in 0..n {
        let z = unit_column(n, j);
        let col = c.column(z);
        let Some(r) = first_nonzero(col) else {
            return fail(NonUnitary, Some(z));
        };
        let scale = max_modulus(col);
        for (i, m) in gen_masks.iter().enumerate() {
            match ratio_phase(m.entry(col, r), col[r], scale).and_then(sign_of) {
                Some(s) => rho.set(i, j, s),
                None => return fail(ColumnNotStabilised, Some(z)),
            }
        }
    }

    if verify {
        check_all_columns(c, &gen_masks, &rho)?;
    }

    // Step 3: μ = ρ⁻¹ and U_i = P^{μ_i}.
    let mu = invert(&rho).map_err(|_| Failure {
        reason: SignMatrixSingular,
        witness: None,
    })?;
    let us = (0..n)
        .map(|i| power_product(&generators, mu.row(i)))
        .collect::<Result<Vec<_>, _>>()
        .expect("generators share a qubit count");

    // Step 4: W_i from a right inverse of the n × 2n matrix with rows (q_i | p_i).
    let umat =
        BitMatrix::from_rows(us.iter().map(|u| u.q().concat(u.p())).collect(), 2 * n).expect("rows have 2n bits");
    let pinv = right_pseudoinverse(&umat).map_err(|_| Failure {
        reason: SignMatrixSingular,
        witness: None,
    })?;
    let ws: Vec<PauliOperator> = (0..n)
        .map(|i| {
            let col = pinv.column(i);
            PauliOperator::hermitian(col.slice(n, 2 * n), col.slice(0, n), false).expect("halves have equal length")
        })
        .collect();
    let w_masks: Vec<IndexMasks> = ws.iter().map(PauliOperator::masks).collect();

    // Step 5: V_i = φ_i W_i U^{v_i}, from C|z + e_i⟩ = φ_i (-1)^{v_i·z} W_i C|z⟩
    // at z = 0 and z = e_j.
    let mut vs = Vec::with_capacity(n);
    for i in 0..n {
        let ei = unit_column(n, i);
        let wi = &w_masks[i];
        let target = c.column(ei);
        let row = r0 ^ wi.x_mask;
        let Some(phi) = ratio_phase(target[row], wi.entry(c.column(0), row), max_modulus(target)) else {
            return fail(RelativePhaseInconsistent, Some(ei));
        };
        let mut v_exp = BitVector::zeros(n);
        for (j, wj) in w_masks.iter().enumerate() {
            let ej = unit_column(n, j);
            let src = c.column(ej);
            let rj = r0 ^ wj.x_mask;
            let row = rj ^ wi.x_mask;
            let dst = c.column(ej ^ ei);
            let predicted = phi.to_complex() * wi.entry(src, row);
            match ratio_phase(dst[row], predicted, max_modulus(dst).max(max_modulus(src))).and_then(sign_of) {
                Some(s) => v_exp.set(j, s),
                None => return fail(RelativePhaseInconsistent, Some(ej ^ ei)),
            }
        }
        let uv = power_product(&us, &v_exp).expect("same qubit count");
        vs.push(ws[i].multiply(&uv).expect("same qubit count").times(phi));
    }

    let tableau =
        Tableau::new(us.into_iter().zip(vs).map(|(u, v)| TableauRow { u, v }).collect()).expect("n rows on n qubits");

    if verify {
        let rows = tableau.rows();
        if let Some(i) = rows.iter().position(|r| !r.v.is_hermitian_order_two()) {
            return fail(CandidateNotHermitian, Some(unit_column(n, i)));
        }
        for i in 0..n {
            for j in i + 1..n {
                if !rows[i].v.commutes(&rows[j].v) {
                    return fail(CandidatesDoNotCommute, Some(unit_column(n, j)));
                }
            }
        }
        if !is_valid_tableau(&tableau) {
            return fail(CandidatesDoNotCommute, None);
        }
        check_relative_phases(c, &tableau, r0)?;
    }
    debug_assert!(dim == 1 << n);
    Ok(tableau)
}

/// Every column must satisfy `P_i C|z⟩ = (-1)^{ρ_i·z} C|z⟩` entrywise.
fn check_all_columns(c: &CliffordMatrix, gen_masks: &[IndexMasks], rho: &BitMatrix) -> Result<(), Failure> {
    let n = c.n();
    // Column index bit b is qubit n-1-b; row i of ρ packed into index order.
    let rho_masks: Vec<usize> = (0..rho.row_count()).map(|i| index_of(rho.row(i))).collect();
    let mut buf = vec![Complex64::new(0.0, 0.0); c.dim()];
    for z in 0..c.dim() {
        let col = c.column(z);
        let tol = PHASE_TOLERANCE * max_modulus(col);
        if tol == 0.0 {
            return fail(CliffordRejection::NonUnitary, Some(z));
        }
        for (m, &rm) in gen_masks.iter().zip(&rho_masks) {
            m.apply_into(col, &mut buf);
            let neg = parity(rm & z);
            let ok = buf.iter().zip(col).all(|(&got, &a)| {
                let want = if neg { -a } else { a };
                (got - want).norm() <= tol
            });
            if !ok {
                return fail(CliffordRejection::ColumnNotStabilised, Some(z));
            }
        }
    }
    debug_assert_eq!(rho_masks.len(), n);
    Ok(())
}

/// Walks all columns in Gray-code order checking `C|z + e_j⟩ = V_j C|z⟩` at
/// one tracked nonzero entry per column.
fn check_relative_phases(c: &CliffordMatrix, t: &Tableau, r0: usize) -> Result<(), Failure> {
    let n = c.n();
    let v_masks: Vec<IndexMasks> = t.rows().iter().map(|r| r.v.masks()).collect();
    let mut z = 0usize;
    let mut r = r0;
    for (_, flipped) in GrayCode::new(n) {
        let Some(b) = flipped else { continue };
        let qubit = n - 1 - b;
        let vm = &v_masks[qubit];
        let next = z ^ (1 << b);
        let src = c.column(z);
        let dst = c.column(next);
        let r_next = r ^ vm.x_mask;
        let predicted = vm.entry(src, r_next);
        let scale = max_modulus(src).max(max_modulus(dst));
        if ratio_phase(dst[r_next], predicted, scale) != Some(Phase::ONE) {
            return fail(CliffordRejection::RelativePhaseInconsistent, Some(next));
        }
        z = next;
        r = r_next;
    }
    Ok(())
}
