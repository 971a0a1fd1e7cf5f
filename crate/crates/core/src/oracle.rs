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

//! Brute-force reference implementations.
//!
//! Everything here works on dense matrices with exhaustive loops and shares
//! nothing with the fast paths except the Pauli-to-dense converter. Costs are
//! cubic in the dimension or worse, so qubit counts are capped.

use num_complex::Complex64;

use crate::circuit::{Circuit, Gate};
use crate::clifford::{Tableau, TableauRow};
use crate::dense::{phase_normalised_distance, DenseMatrix};
use crate::f2::BitVector;
use crate::pauli::{AmplitudeVector, PauliOperator, Phase};

pub const STATE_LIMIT: usize = 6;
pub const GATE_LIMIT: usize = 4;
pub const ENUMERATION_LIMIT: usize = 2;
pub const CIRCUIT_LIMIT: usize = 8;

/// Entrywise tolerance for dense comparisons.
pub const ORACLE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("oracle limited to {limit} qubits, got {n}")]
    TooManyQubits { n: usize, limit: usize },
    #[error("matrix is not unitary (defect {defect:e})")]
    NotUnitary { defect: f64 },
    #[error("matrix dimension {0} is not a power of two")]
    BadDimension(usize),
}

fn check_limit(n: usize, limit: usize) -> Result<(), OracleError> {
    if n > limit {
        Err(OracleError::TooManyQubits { n, limit })
    } else {
        Ok(())
    }
}

fn bits(value: usize, n: usize) -> BitVector {
    BitVector::from_bools(&(0..n).map(|j| value >> (n - 1 - j) & 1 == 1).collect::<Vec<_>>())
}

/// Every Pauli of the form `(-1)^c (-i)^{p·q} X^q Z^p` on `n` qubits.
fn hermitian_paulis(n: usize) -> impl Iterator<Item = PauliOperator> {
    let count = 1usize << n;
    (0..count).flat_map(move |q| {
        (0..count).flat_map(move |p| {
            [false, true]
                .into_iter()
                .map(move |c| PauliOperator::hermitian(bits(q, n), bits(p, n), c).expect("equal lengths"))
        })
    })
}

fn dense(p: &PauliOperator) -> DenseMatrix {
    p.to_dense_with_limit(usize::MAX).expect("no limit")
}

fn max_modulus(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm()).fold(0.0, f64::max)
}

/// All Hermitian Paulis `P` with `P v = v`, by dense multiplication.
pub fn brute_stabiliser_group(v: &AmplitudeVector) -> Result<Vec<PauliOperator>, OracleError> {
    check_limit(v.n(), STATE_LIMIT)?;
    let tol = ORACLE_TOLERANCE * max_modulus(v.entries()).max(f64::MIN_POSITIVE);
    Ok(hermitian_paulis(v.n())
        .filter(|p| {
            let pv = dense(p).mul_vec(v.entries());
            pv.iter().zip(v.entries()).all(|(a, b)| (a - b).norm() <= tol)
        })
        .collect())
}

/// `true` iff the stabiliser group of `v` has `2^n` elements.
pub fn brute_is_stabiliser(v: &AmplitudeVector) -> Result<bool, OracleError> {
    Ok(brute_stabiliser_group(v)?.len() == 1 << v.n())
}

/// The Pauli equal to `m` up to a fourth-root phase, if there is one.
fn find_pauli(m: &DenseMatrix, n: usize) -> Option<PauliOperator> {
    let count = 1usize << n;
    for q in 0..count {
        for p in 0..count {
            for k in 0..4 {
                let (c, d) = Phase::from_exponent(k).bits();
                let cand = PauliOperator::new(bits(q, n), bits(p, n), c, d).expect("equal lengths");
                if dense(&cand).max_abs_diff(m) <= ORACLE_TOLERANCE {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// Conjugates every `Z_i` and `X_i` densely and searches all Paulis for the
/// image. `Ok(None)` when some image is not a Pauli.
pub fn brute_tableau(m: &DenseMatrix) -> Result<Option<Tableau>, OracleError> {
    let dim = m.dim();
    if dim < 2 || !dim.is_power_of_two() {
        return Err(OracleError::BadDimension(dim));
    }
    let n = dim.trailing_zeros() as usize;
    check_limit(n, GATE_LIMIT)?;
    let defect = m.unitarity_defect();
    if defect > ORACLE_TOLERANCE {
        return Err(OracleError::NotUnitary { defect });
    }
    let adj = m.adjoint();
    let image = |p: PauliOperator| find_pauli(&m.mul(&dense(&p)).mul(&adj), n);
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let (Some(u), Some(v)) = (image(PauliOperator::z(n, i)), image(PauliOperator::x(n, i))) else {
            return Ok(None);
        };
        rows.push(TableauRow { u, v });
    }
    Ok(Some(Tableau::new(rows).expect("n rows on n qubits")))
}

pub fn brute_is_clifford(m: &DenseMatrix) -> Result<bool, OracleError> {
    Ok(brute_tableau(m)?.is_some())
}

/// `∏ (I + P_i)/2`; rank one exactly when the generators are independent,
/// commute and do not generate `-I`.
pub fn brute_projector(generators: &[PauliOperator]) -> DenseMatrix {
    let n = generators.first().map_or(0, PauliOperator::n);
    let id = DenseMatrix::identity(1 << n);
    let half = Complex64::new(0.5, 0.0);
    generators.iter().fold(id.clone(), |acc, g| {
        let mut term = dense(g);
        for i in 0..id.dim() {
            term[(i, i)] += Complex64::new(1.0, 0.0);
        }
        acc.mul(&term.scale(half))
    })
}

/// The state fixed by `generators`, from the largest column of the projector,
/// normalised with its first nonzero entry positive real.
pub fn brute_state_from_generators(generators: &[PauliOperator]) -> Result<Option<AmplitudeVector>, OracleError> {
    let n = generators.first().map_or(0, PauliOperator::n);
    check_limit(n, STATE_LIMIT)?;
    let proj = brute_projector(generators);
    let trace: Complex64 = (0..proj.dim()).map(|i| proj[(i, i)]).sum();
    if (trace - Complex64::new(1.0, 0.0)).norm() > ORACLE_TOLERANCE {
        return Ok(None);
    }
    let best = (0..proj.dim())
        .max_by(|&a, &b| {
            let na: f64 = proj.column(a).iter().map(|x| x.norm_sqr()).sum();
            let nb: f64 = proj.column(b).iter().map(|x| x.norm_sqr()).sum();
            na.total_cmp(&nb)
        })
        .expect("nonempty");
    let v = canonical_unit(&proj.column(best));
    Ok(Some(AmplitudeVector::new(v).expect("power-of-two length")))
}

/// Scales `v` to unit norm with its first nonzero entry positive real.
fn canonical_unit(v: &[Complex64]) -> Vec<Complex64> {
    let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    let lead = v
        .iter()
        .copied()
        .find(|x| x.norm() > 1e-12 * norm)
        .unwrap_or(Complex64::new(1.0, 0.0));
    let s = lead.conj() / (lead.norm() * norm);
    v.iter().map(|x| x * s).collect()
}

/// All stabiliser states on `n ≤ 2` qubits up to global phase.
pub fn enumerate_stabiliser_states(n: usize) -> Result<Vec<AmplitudeVector>, OracleError> {
    check_limit(n, ENUMERATION_LIMIT)?;
    if n == 0 {
        return Err(OracleError::BadDimension(1));
    }
    let candidates: Vec<PauliOperator> = hermitian_paulis(n)
        .filter(|p| !(p.q().is_zero() && p.p().is_zero()))
        .collect();
    let mats: Vec<DenseMatrix> = candidates.iter().map(dense).collect();
    let commute = |a: usize, b: usize| mats[a].mul(&mats[b]).max_abs_diff(&mats[b].mul(&mats[a])) <= ORACLE_TOLERANCE;
    let mut found: Vec<AmplitudeVector> = Vec::new();
    let mut chosen = Vec::with_capacity(n);
    enumerate_sets(&candidates, &commute, 0, n, &mut chosen, &mut |set| {
        let gens: Vec<PauliOperator> = set.iter().map(|&i| candidates[i].clone()).collect();
        if let Some(v) = brute_state_from_generators(&gens).expect("within limit") {
            if !found
                .iter()
                .any(|w| phase_normalised_distance(w.entries(), v.entries()) <= ORACLE_TOLERANCE)
            {
                found.push(v);
            }
        }
    });
    Ok(found)
}

fn enumerate_sets(
    candidates: &[PauliOperator],
    commute: &dyn Fn(usize, usize) -> bool,
    start: usize,
    size: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    for i in start..candidates.len() {
        if chosen.iter().all(|&j| commute(i, j)) {
            chosen.push(i);
            enumerate_sets(candidates, commute, i + 1, size, chosen, visit);
            chosen.pop();
        }
    }
}

/// Applies one gate to a dense state vector in place.
fn apply_gate(n: usize, gate: Gate, v: &mut [Complex64]) {
    let bit = |k: usize| 1usize << (n - 1 - k);
    match gate {
        Gate::H(k) => {
            let h = std::f64::consts::FRAC_1_SQRT_2;
            let b = bit(k);
            for z in (0..v.len()).filter(|z| z & b == 0) {
                let (a0, a1) = (v[z], v[z | b]);
                v[z] = (a0 + a1) * h;
                v[z | b] = (a0 - a1) * h;
            }
        }
        Gate::S(k) => {
            let b = bit(k);
            for (z, a) in v.iter_mut().enumerate() {
                if z & b != 0 {
                    *a *= Complex64::new(0.0, 1.0);
                }
            }
        }
        Gate::Cnot { control, target } => {
            let (cb, tb) = (bit(control), bit(target));
            for z in 0..v.len() {
                if z & cb != 0 && z & tb == 0 {
                    v.swap(z, z | tb);
                }
            }
        }
    }
}

/// Dense matrix of a circuit, column `j` being the circuit applied to `|j⟩`.
pub fn circuit_matrix(c: &Circuit) -> Result<DenseMatrix, OracleError> {
    check_limit(c.n(), CIRCUIT_LIMIT)?;
    let dim = 1usize << c.n();
    let mut m = DenseMatrix::zeros(dim);
    for j in 0..dim {
        let mut col = vec![Complex64::new(0.0, 0.0); dim];
        col[j] = Complex64::new(1.0, 0.0);
        for &g in c.gates() {
            apply_gate(c.n(), g, &mut col);
        }
        m.set_column(j, &col);
    }
    Ok(m)
}
