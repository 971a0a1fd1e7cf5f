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

//! Acceptance criteria, one test per criterion. Each prints a PASS/FAIL line;
//! run with `--nocapture` to see them alongside the measured numbers.
//!
//! The criteria share one lock so the timing criterion is not measured while
//! another criterion is loading the machine.

mod common;

use std::process::Command;
use std::sync::Mutex;
use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;
use stabtool::bench::{self, Task};
use stabtool::circuit::{default_depth, random_tableau, rng_from_seed, Circuit};
use stabtool::clifford::{
    is_valid_tableau, matrix_to_tableau, tableau_to_matrix, verify_clifford_matrix, CliffordMatrix, Tableau, TableauRow,
};
use stabtool::dense::{phase_normalised_distance, DenseMatrix};
use stabtool::document::Document;
use stabtool::oracle::{self, OracleError};
use stabtool::pauli::{AmplitudeVector, PauliOperator};
use stabtool::stabiliser::{
    amplitudes_to_check, amplitudes_to_triple, check_to_amplitudes, check_to_triple, triple_to_check,
    verify_stabiliser_vector,
};

use common::*;

static SERIAL: Mutex<()> = Mutex::new(());

fn report(criterion: u32, title: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS criterion {criterion}: {title}");
    } else {
        println!("FAIL criterion {criterion}: {title}");
        for f in failures.iter().take(10) {
            println!("    {f}");
        }
        panic!("criterion {criterion} failed with {} problem(s)", failures.len());
    }
}

fn lock() -> std::sync::MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

/// Every vector with entries in {0, ±1, ±i}, normalised; contains every
/// stabiliser state on one or two qubits up to phase.
fn discrete_family(n: usize) -> Vec<AmplitudeVector> {
    let grid = [
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(0.0, -1.0),
    ];
    let dim = 1usize << n;
    let mut out = Vec::new();
    for code in 1..5usize.pow(dim as u32) {
        let mut c = code;
        let entries: Vec<Complex64> = (0..dim)
            .map(|_| {
                let e = grid[c % 5];
                c /= 5;
                e
            })
            .collect();
        let v = AmplitudeVector::new(entries).unwrap();
        let norm = v.norm();
        out.push(v.scale(Complex64::new(1.0 / norm, 0.0)));
    }
    out
}

fn contains_up_to_phase(set: &[AmplitudeVector], v: &AmplitudeVector) -> bool {
    set.iter()
        .any(|w| phase_normalised_distance(w.entries(), v.entries()) < 1e-9)
}

#[test]
fn criterion_1_exhaustive_small_state_agreement() {
    let _g = lock();
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = rng_from_seed(1);
    for (n, expected) in [(1usize, 6usize), (2, 60)] {
        let states = oracle::enumerate_stabiliser_states(n).unwrap();
        if states.len() != expected {
            failures.push(format!(
                "n={n}: oracle enumerated {} states, expected {expected}",
                states.len()
            ));
        }
        for v in &states {
            let fast = verify_stabiliser_vector(v).is_accepted();
            let brute = oracle::brute_is_stabiliser(v).unwrap();
            if !fast || !brute {
                failures.push(format!("n={n}: enumerated state {v:?} fast={fast} brute={brute}"));
            }
        }
        // the accepted members of the discrete family are exactly the enumerated states
        let mut accepted: Vec<AmplitudeVector> = Vec::new();
        for v in discrete_family(n) {
            let fast = verify_stabiliser_vector(&v).is_accepted();
            let brute = oracle::brute_is_stabiliser(&v).unwrap();
            if fast != brute {
                failures.push(format!("n={n}: disagreement on {v:?}: fast={fast} brute={brute}"));
            }
            if fast && !contains_up_to_phase(&accepted, &v) {
                accepted.push(v);
            }
        }
        if accepted.len() != expected || !accepted.iter().all(|v| contains_up_to_phase(&states, v)) {
            failures.push(format!("n={n}: fast path accepts {} distinct states", accepted.len()));
        }
    }
    let mut random_checked = 0;
    for n in 1..=3 {
        for _ in 0..1000 {
            let v = random_vector(n, &mut rng);
            let fast = verify_stabiliser_vector(&v).is_accepted();
            let brute = oracle::brute_is_stabiliser(&v).unwrap();
            random_checked += 1;
            if fast != brute {
                failures.push(format!("n={n}: random vector disagreement fast={fast} brute={brute}"));
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!("    {random_checked} random vectors, {elapsed:.2} s");
    if elapsed >= 60.0 {
        failures.push(format!("took {elapsed:.1} s, limit 60 s"));
    }
    report(1, "exhaustive small-n state agreement", &failures);
}

#[test]
fn criterion_2_round_trips() {
    let _g = lock();
    let mut failures = Vec::new();
    let mut worst_state = 0.0f64;
    for n in 2..=8 {
        let mut rng = rng_from_seed(200 + n as u64);
        for _ in 0..1000 {
            let v = random_stabiliser_state(n, &mut rng);
            let (triple, _) = amplitudes_to_triple(&v).unwrap();
            let check = triple_to_check(&triple).unwrap();
            let back = check_to_triple(&check).unwrap().to_amplitudes().unwrap();
            let d = distance_up_to_factor(v.entries(), back.entries());
            worst_state = worst_state.max(d);
            if d > 1e-10 {
                failures.push(format!("state n={n}: residual {d:e}"));
            }
        }
    }
    let mut worst_gate = 0.0f64;
    for n in 2..=6 {
        let mut rng = rng_from_seed(300 + n as u64);
        for _ in 0..200 {
            let circuit = Circuit::random(n, default_depth(n), &mut rng);
            let dense = oracle::circuit_matrix(&circuit).unwrap().scale(random_phase(&mut rng));
            let m = CliffordMatrix::from_dense(&dense).unwrap();
            let t = match matrix_to_tableau(&m) {
                Ok(t) => t,
                Err(e) => {
                    failures.push(format!("gate n={n}: extraction failed: {e}"));
                    continue;
                }
            };
            if t != circuit.tableau() {
                failures.push(format!("gate n={n}: extracted tableau differs from the circuit's"));
            }
            let back = tableau_to_matrix(&t).unwrap();
            let d = phase_normalised_distance(back.entries(), m.entries());
            worst_gate = worst_gate.max(d);
            if d > 1e-9 {
                failures.push(format!("gate n={n}: residual {d:e}"));
            }
        }
    }
    println!("    worst state residual {worst_state:e}, worst gate residual {worst_gate:e}");
    report(2, "S1→S2→S3→S2→S1 and C1→C2→C1 round trips", &failures);
}

#[test]
fn criterion_3_stabilisation_witness() {
    let _g = lock();
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for n in 2..=8 {
        let mut rng = rng_from_seed(200 + n as u64);
        for _ in 0..1000 {
            let v = random_stabiliser_state(n, &mut rng);
            let check = amplitudes_to_check(&v).unwrap();
            let scale = v.entries().iter().map(|a| a.norm()).fold(0.0, f64::max);
            for p in check.paulis() {
                let pv = p.apply(&v).unwrap();
                let r = pv.max_abs_diff(&v) / scale;
                worst = worst.max(r);
                if r >= 1e-10 {
                    failures.push(format!("n={n}: row {p} residual {r:e}"));
                }
            }
            // and the reconstructed state from the check matrix
            let u = check_to_amplitudes(&check).unwrap();
            for p in check.paulis() {
                let r = p.apply(&u).unwrap().max_abs_diff(&u);
                worst = worst.max(r);
                if r >= 1e-10 {
                    failures.push(format!("n={n}: row {p} residual {r:e} on the reconstruction"));
                }
            }
        }
    }
    println!("    worst relative residual {worst:e}");
    report(3, "check rows stabilise converted states", &failures);
}

fn conjugation_residual(t: &Tableau, m: &DenseMatrix) -> f64 {
    let n = t.n();
    let mut worst = 0.0f64;
    for (i, row) in t.rows().iter().enumerate() {
        let u = row.u.to_dense().unwrap();
        let v = row.v.to_dense().unwrap();
        let z = PauliOperator::z(n, i).to_dense().unwrap();
        let x = PauliOperator::x(n, i).to_dense().unwrap();
        worst = worst.max(u.mul(m).max_abs_diff(&m.mul(&z)));
        worst = worst.max(v.mul(m).max_abs_diff(&m.mul(&x)));
    }
    worst
}

#[test]
fn criterion_4_clifford_conjugation_witness() {
    let _g = lock();
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    let mut count = 0;
    let mut check = |dense: DenseMatrix, label: String, failures: &mut Vec<String>| {
        let m = CliffordMatrix::from_dense(&dense).unwrap();
        let d = verify_clifford_matrix(&m);
        let Some(t) = d.tableau else {
            failures.push(format!("{label}: rejected ({:?})", d.failure_reason));
            return;
        };
        let r = conjugation_residual(&t, &dense);
        worst = worst.max(r);
        count += 1;
        if r > 1e-9 {
            failures.push(format!("{label}: conjugation residual {r:e}"));
        }
    };
    for (i, c) in single_qubit_cliffords().into_iter().enumerate() {
        check(c, format!("single-qubit Clifford {i}"), &mut failures);
    }
    for n in 1..=4 {
        let mut rng = rng_from_seed(400 + n as u64);
        for k in 0..100 {
            let circuit = Circuit::random(n, default_depth(n), &mut rng);
            let dense = oracle::circuit_matrix(&circuit).unwrap().scale(random_phase(&mut rng));
            check(dense, format!("n={n} circuit {k}"), &mut failures);
        }
    }
    println!("    {count} tableaus, worst residual {worst:e}");
    report(4, "dense U_i C = C Z_i and V_i C = C X_i", &failures);
}

#[test]
fn criterion_5_rejection_suite() {
    let _g = lock();
    let mut failures = Vec::new();
    let oracle_gate = |m: &DenseMatrix| match oracle::brute_is_clifford(m) {
        Ok(b) => Some(b),
        Err(OracleError::NotUnitary { .. }) => Some(false),
        Err(_) => None,
    };
    let gate_case = |dense: DenseMatrix, label: &str, failures: &mut Vec<String>| {
        let m = CliffordMatrix::from_dense(&dense).unwrap();
        if verify_clifford_matrix(&m).is_accepted() {
            failures.push(format!("{label}: accepted"));
        }
        if oracle_gate(&dense) == Some(true) {
            failures.push(format!("{label}: oracle accepts"));
        }
    };

    let t = std::f64::consts::FRAC_PI_4;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    gate_case(
        DenseMatrix::from_row_major(2, vec![one, zero, zero, Complex64::from_polar(1.0, t)]),
        "T gate",
        &mut failures,
    );

    let mut rng = rng_from_seed(5);
    let mut cases = 1;
    for n in [2, 3] {
        for k in 0..20 {
            gate_case(haar_unitary(n, &mut rng), &format!("Haar n={n} #{k}"), &mut failures);
            cases += 1;
        }
    }
    for n in [1, 2, 3, 4] {
        for k in 0..20 {
            let circuit = Circuit::random(n, default_depth(n), &mut rng);
            let mut dense = oracle::circuit_matrix(&circuit).unwrap();
            let dim = dense.dim();
            let (i, j) = (rng.random_range(0..dim), rng.random_range(0..dim));
            dense[(i, j)] += random_phase(&mut rng) * 1e-3;
            gate_case(
                dense,
                &format!("perturbed Clifford n={n} #{k} at ({i},{j})"),
                &mut failures,
            );
            cases += 1;
        }
    }
    for n in 1..=6 {
        for k in 0..20 {
            let v = loop {
                let v = random_stabiliser_state(n, &mut rng);
                let support = v.entries().iter().filter(|a| a.norm() > 1e-12).count();
                if support >= 2 {
                    break v;
                }
            };
            let nonzero: Vec<usize> = (0..v.entries().len())
                .filter(|&z| v.entries()[z].norm() > 1e-12)
                .collect();
            let z = nonzero[rng.random_range(0..nonzero.len())];
            let mut entries = v.entries().to_vec();
            entries[z] = Complex64::from_polar(entries[z].norm(), t);
            let w = AmplitudeVector::new(entries).unwrap();
            if verify_stabiliser_vector(&w).is_accepted() {
                failures.push(format!("e^(iπ/4) phase n={n} #{k}: accepted"));
            }
            if oracle::brute_is_stabiliser(&w).unwrap() {
                failures.push(format!("e^(iπ/4) phase n={n} #{k}: oracle accepts"));
            }
            cases += 1;
        }
    }
    println!("    {cases} rejection cases");
    report(5, "rejection suite", &failures);
}

#[test]
fn criterion_6_speedups() {
    let _g = lock();
    let mut failures = Vec::new();
    let state = bench::run(Task::VerifyState, 4..=4, 5, 6).unwrap();
    let gate = bench::run(Task::MatrixToTableau, 4..=4, 5, 6).unwrap();
    let state_ratio = state.row(4).and_then(|r| r.ratio).unwrap();
    let gate_ratio = gate.row(4).and_then(|r| r.ratio).unwrap();
    println!("    n=4 verify_state speedup {state_ratio:.0}x, matrix_to_tableau speedup {gate_ratio:.0}x");
    if state_ratio < 20.0 {
        failures.push(format!(
            "verify_stabiliser_vector only {state_ratio:.1}x faster than brute_stabiliser_group"
        ));
    }
    if gate_ratio < 20.0 {
        failures.push(format!(
            "matrix_to_tableau only {gate_ratio:.1}x faster than the conjugation baseline"
        ));
    }
    let growth = bench::run(Task::VerifyState, 8..=14, 5, 6).unwrap();
    let mean = growth.mean_doubling(8..=14).unwrap();
    println!("{}", growth.table().trim_end());
    println!("    mean doubling ratio over n=8..14: {mean:.2}");
    if mean >= 3.0 {
        failures.push(format!("mean doubling ratio {mean:.2} ≥ 3.0"));
    }
    report(6, "speedup and growth measurements", &failures);
}

#[test]
fn criterion_7_tableau_validity() {
    let _g = lock();
    let mut failures = Vec::new();
    let mut rng = rng_from_seed(7);
    for k in 0..1000 {
        let n = 1 + k % 16;
        let t = random_tableau(n, default_depth(n), &mut rng);
        if !is_valid_tableau(&t) {
            failures.push(format!("random tableau #{k} on {n} qubits rejected"));
        }
    }
    let z = |n, i| PauliOperator::z(n, i);
    let x = |n, i| PauliOperator::x(n, i);
    let row = |u, v| TableauRow { u, v };
    let fixtures = [
        ("U_1 = V_1", Tableau::new(vec![row(z(1, 0), z(1, 0))]).unwrap()),
        (
            "commuting U_1, V_1",
            Tableau::new(vec![row(z(2, 0), z(2, 1)), row(x(2, 1), x(2, 0))]).unwrap(),
        ),
        (
            "anticommuting U_1, U_2",
            Tableau::new(vec![
                row(z(2, 0), x(2, 0)),
                row(x(2, 0).multiply(&z(2, 1)).unwrap(), x(2, 1)),
            ])
            .unwrap(),
        ),
    ];
    for (label, t) in &fixtures {
        if is_valid_tableau(t) {
            failures.push(format!("canonical violation accepted: {label}"));
        }
    }
    report(7, "tableau validity", &failures);
}

fn stabtool(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_stabtool"))
        .args(args)
        .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures"))
        .output()
        .expect("run stabtool");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn complex_payload_distance(a: &Document, b: &Document) -> Option<f64> {
    let (x, y): (Vec<Complex64>, Vec<Complex64>) = match (a.kind(), b.kind()) {
        (stabtool::document::Kind::Amplitudes, stabtool::document::Kind::Amplitudes) => {
            (a.amplitudes().ok()?.into_entries(), b.amplitudes().ok()?.into_entries())
        }
        (stabtool::document::Kind::Matrix, stabtool::document::Kind::Matrix) => {
            (a.matrix().ok()?.entries().to_vec(), b.matrix().ok()?.entries().to_vec())
        }
        _ => return None,
    };
    Some(x.iter().zip(&y).map(|(p, q)| (p - q).norm()).fold(0.0, f64::max))
}

#[test]
fn criterion_8_cli_contract() {
    let _g = lock();
    let mut failures = Vec::new();

    // serialisation round trips of emitted documents
    let mut emitted = Vec::new();
    for seed in 0..5u64 {
        let s = seed.to_string();
        for (kind, emit) in [
            ("state", "check_matrix"),
            ("state", "triple"),
            ("state", "amplitudes"),
            ("gate", "tableau"),
            ("gate", "matrix"),
        ] {
            let (code, out) = stabtool(&["random", "--kind", kind, "-n", "3", "--seed", &s, "--emit", emit]);
            if code != 0 {
                failures.push(format!("random {kind} {emit} exited {code}"));
                continue;
            }
            emitted.push(out);
        }
    }
    for file in ["bell_check.json", "plus.json", "h_tableau.json", "cnot.json"] {
        for to in ["amplitudes", "triple", "check_matrix", "tableau", "matrix"] {
            let (code, out) = stabtool(&["convert", "--to", to, file]);
            if code == 0 {
                emitted.push(out);
            }
        }
    }
    for text in &emitted {
        let doc = match Document::parse(text) {
            Ok(d) => d,
            Err(e) => {
                failures.push(format!("emitted document does not parse: {e}"));
                continue;
            }
        };
        let again = Document::parse(&doc.to_json()).unwrap();
        let exact = again == doc;
        let close = complex_payload_distance(&doc, &again).is_some_and(|d| d <= 1e-12);
        if !(exact || close) {
            failures.push(format!("{} document changed on re-parse", doc.kind().name()));
        }
    }

    // exit codes
    let cases: [(&[&str], i32); 9] = [
        (&["verify", "plus.json"], 0),
        (&["verify", "--oracle", "cnot.json"], 0),
        (&["convert", "--to", "matrix", "h_tableau.json"], 0),
        (&["verify", "mismatched_n.json"], 2),
        (&["verify", "notjson.json"], 2),
        (&["convert", "--to", "matrix", "bad_tableau.json"], 2),
        (&["verify", "--oracle", "magic.json"], 3),
        (&["verify", "--oracle", "t_gate.json"], 3),
        (&["verify", "--oracle", "tolerance_boundary.json"], 4),
    ];
    for (args, want) in cases {
        let (code, _) = stabtool(args);
        if code != want {
            failures.push(format!("stabtool {} exited {code}, expected {want}", args.join(" ")));
        }
    }
    let (_, out) = stabtool(&["verify", "t_gate.json"]);
    if !out.contains("relative column phase inconsistent") {
        failures.push("T gate rejection reason not reported".into());
    }
    let (_, out) = stabtool(&["verify", "magic.json"]);
    if !out.contains("off the {±1, ±i} grid") {
        failures.push("magic state rejection reason not reported".into());
    }
    println!("    {} emitted documents re-parsed", emitted.len());
    report(8, "CLI serialisation and exit codes", &failures);
}
