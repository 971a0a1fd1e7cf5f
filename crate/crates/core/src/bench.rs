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

//! Wall-clock comparison of the fast conversions against the brute-force oracles.

use std::fmt::Write as _;
use std::hint::black_box;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use crate::circuit::{default_depth, random_full_support_triple, random_tableau, rng_from_seed};
use crate::clifford::{matrix_to_tableau, tableau_to_matrix, verify_clifford_matrix};
use crate::oracle;
use crate::stabiliser::{amplitudes_to_check, check_to_amplitudes, triple_to_check, verify_stabiliser_vector};

/// Largest `n` for the state tasks and the gate tasks.
pub const STATE_BENCH_LIMIT: usize = 20;
pub const GATE_BENCH_LIMIT: usize = 10;

/// Repeats shorter than this are batched and averaged.
const MIN_BATCH: Duration = Duration::from_millis(2);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Task {
    VerifyState,
    StateToCheck,
    CheckToState,
    MatrixToTableau,
    VerifyGate,
    TableauToMatrix,
}

impl Task {
    pub const ALL: [Task; 6] = [
        Task::VerifyState,
        Task::StateToCheck,
        Task::CheckToState,
        Task::MatrixToTableau,
        Task::VerifyGate,
        Task::TableauToMatrix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Task::VerifyState => "verify_state",
            Task::StateToCheck => "state_to_check",
            Task::CheckToState => "check_to_state",
            Task::MatrixToTableau => "matrix_to_tableau",
            Task::VerifyGate => "verify_gate",
            Task::TableauToMatrix => "tableau_to_matrix",
        }
    }

    fn is_state(self) -> bool {
        matches!(self, Task::VerifyState | Task::StateToCheck | Task::CheckToState)
    }

    fn brute_limit(self) -> Option<usize> {
        match self {
            Task::VerifyState | Task::StateToCheck | Task::CheckToState => Some(oracle::STATE_LIMIT),
            Task::MatrixToTableau | Task::VerifyGate => Some(oracle::GATE_LIMIT),
            Task::TableauToMatrix => None,
        }
    }
}

impl std::str::FromStr for Task {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Task::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| BenchError::UnknownTask(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BenchError {
    #[error("unknown bench task {0:?}")]
    UnknownTask(String),
    #[error("{task} supports 1 ≤ n ≤ {limit}")]
    OutOfRange { task: &'static str, limit: usize },
    #[error("repeats must be positive")]
    NoRepeats,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Row {
    pub n: usize,
    /// Median seconds per call.
    pub fast: f64,
    pub brute: Option<f64>,
    /// `brute / fast`.
    pub ratio: Option<f64>,
    /// `fast(n) / fast(n - 1)`.
    pub doubling: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub task: Task,
    pub rows: Vec<Row>,
}

impl Report {
    pub fn row(&self, n: usize) -> Option<&Row> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// Mean of the doubling ratios over rows with `n` in `range` that have one.
    pub fn mean_doubling(&self, range: RangeInclusive<usize>) -> Option<f64> {
        let d: Vec<f64> = self
            .rows
            .iter()
            .filter(|r| range.contains(&r.n))
            .filter_map(|r| r.doubling)
            .collect();
        (!d.is_empty()).then(|| d.iter().sum::<f64>() / d.len() as f64)
    }

    pub fn table(&self) -> String {
        let fmt_opt = |x: Option<f64>, prec: usize| x.map_or_else(|| "-".to_string(), |v| format!("{v:.prec$}"));
        let mut out = String::new();
        writeln!(out, "task: {}", self.task.name()).unwrap();
        writeln!(
            out,
            "{:>3}  {:>12}  {:>12}  {:>10}  {:>8}",
            "n", "fast_s", "brute_s", "ratio", "doubling"
        )
        .unwrap();
        for r in &self.rows {
            writeln!(
                out,
                "{:>3}  {:>12.3e}  {:>12}  {:>10}  {:>8}",
                r.n,
                r.fast,
                r.brute.map_or_else(|| "-".to_string(), |b| format!("{b:.3e}")),
                fmt_opt(r.ratio, 1),
                fmt_opt(r.doubling, 2),
            )
            .unwrap();
        }
        out
    }

    /// One header line then one line per row.
    pub fn csv(&self) -> String {
        let opt = |x: Option<f64>| x.map_or_else(String::new, |v| format!("{v:e}"));
        let mut out = String::from("task,n,fast_seconds,brute_seconds,ratio,doubling\n");
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{:e},{},{},{}",
                self.task.name(),
                r.n,
                r.fast,
                opt(r.brute),
                opt(r.ratio),
                opt(r.doubling)
            )
            .unwrap();
        }
        out
    }
}

/// Median seconds per call over `repeats` timed runs after one discarded warm-up.
pub fn median_seconds(repeats: usize, mut f: impl FnMut()) -> f64 {
    let start = Instant::now();
    f();
    let warm = start.elapsed();
    let batch = if warm >= MIN_BATCH {
        1
    } else {
        (MIN_BATCH.as_nanos() / warm.as_nanos().max(1)).clamp(1, 100_000) as u32
    };
    let mut samples: Vec<f64> = (0..repeats)
        .map(|_| {
            let start = Instant::now();
            for _ in 0..batch {
                f();
            }
            start.elapsed().as_secs_f64() / f64::from(batch)
        })
        .collect();
    samples.sort_by(f64::total_cmp);
    samples[samples.len() / 2]
}

fn measure(task: Task, n: usize, repeats: usize, seed: u64) -> (f64, Option<f64>) {
    let mut rng = rng_from_seed(seed ^ (n as u64) << 32);
    let with_brute = task.brute_limit().is_some_and(|l| n <= l);
    if task.is_state() {
        let triple = random_full_support_triple(n, &mut rng);
        let v = triple.to_amplitudes().expect("valid triple");
        let check = triple_to_check(&triple).expect("valid triple");
        let gens = check.paulis();
        let (fast, brute) = match task {
            Task::VerifyState => (
                median_seconds(repeats, || drop(black_box(verify_stabiliser_vector(black_box(&v))))),
                with_brute.then(|| median_seconds(repeats, || drop(black_box(oracle::brute_is_stabiliser(&v))))),
            ),
            Task::StateToCheck => (
                median_seconds(repeats, || drop(black_box(amplitudes_to_check(black_box(&v))))),
                with_brute.then(|| median_seconds(repeats, || drop(black_box(oracle::brute_stabiliser_group(&v))))),
            ),
            _ => (
                median_seconds(repeats, || drop(black_box(check_to_amplitudes(black_box(&check))))),
                with_brute
                    .then(|| median_seconds(repeats, || drop(black_box(oracle::brute_state_from_generators(&gens))))),
            ),
        };
        return (fast, brute);
    }
    let t = random_tableau(n, default_depth(n), &mut rng);
    let m = tableau_to_matrix(&t).expect("circuit tableaus are valid");
    let dense = m.to_dense();
    match task {
        Task::MatrixToTableau => (
            median_seconds(repeats, || drop(black_box(matrix_to_tableau(black_box(&m))))),
            with_brute.then(|| median_seconds(repeats, || drop(black_box(oracle::brute_tableau(&dense))))),
        ),
        Task::VerifyGate => (
            median_seconds(repeats, || drop(black_box(verify_clifford_matrix(black_box(&m))))),
            with_brute.then(|| median_seconds(repeats, || drop(black_box(oracle::brute_is_clifford(&dense))))),
        ),
        _ => (
            median_seconds(repeats, || drop(black_box(tableau_to_matrix(black_box(&t))))),
            None,
        ),
    }
}

/// Times `task` for every `n` in `ns` on seeded random instances. Runs on the
/// calling thread.
pub fn run(task: Task, ns: RangeInclusive<usize>, repeats: usize, seed: u64) -> Result<Report, BenchError> {
    if repeats == 0 {
        return Err(BenchError::NoRepeats);
    }
    let limit = if task.is_state() {
        STATE_BENCH_LIMIT
    } else {
        GATE_BENCH_LIMIT
    };
    if *ns.start() == 0 || *ns.end() > limit {
        return Err(BenchError::OutOfRange {
            task: task.name(),
            limit,
        });
    }
    let mut rows: Vec<Row> = Vec::new();
    for n in ns {
        let (fast, brute) = measure(task, n, repeats, seed);
        let doubling = rows.last().filter(|r| r.n + 1 == n).map(|r| fast / r.fast);
        rows.push(Row {
            n,
            fast,
            brute,
            ratio: brute.map(|b| b / fast),
            doubling,
        });
    }
    Ok(Report { task, rows })
}
