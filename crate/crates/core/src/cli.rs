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

//! The `stabtool` command line.
//!
//! Exit codes: 0 success or acceptance, 2 malformed input or usage, 3
//! rejection, 4 disagreement between the fast path and the oracle.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::bench::{self, Task};
use crate::circuit::{default_depth, random_check_matrix, random_tableau, rng_from_seed};
use crate::clifford::{tableau_to_matrix, verify_clifford_matrix, CliffordMatrix};
use crate::document::{Document, DocumentError, Kind};
use crate::oracle::{self, OracleError};
use crate::pauli::AmplitudeVector;
use crate::stabiliser::{check_to_triple, triple_to_check, verify_stabiliser_vector, AffineSubspaceTriple};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_REJECTED: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

/// Dense amplitude and matrix documents are refused above these sizes.
pub const MAX_AMPLITUDE_QUBITS: usize = 24;
pub const MAX_MATRIX_QUBITS: usize = 10;

#[derive(Parser, Debug)]
#[command(
    name = "stabtool",
    version,
    about = "Convert and verify stabiliser states and Clifford gates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert a document to another representation of the same object.
    Convert {
        #[arg(long, value_enum)]
        to: KindArg,
        /// Input document, `-` for stdin.
        file: PathBuf,
    },
    /// Decide whether amplitudes are a stabiliser state or a matrix is Clifford.
    Verify {
        /// Also run the brute-force check and compare.
        #[arg(long)]
        oracle: bool,
        file: PathBuf,
    },
    /// Emit a seeded random stabiliser state or Clifford gate.
    Random {
        #[arg(long, value_enum)]
        kind: RandomKind,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Circuit depth; defaults to 10n.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum)]
        emit: Option<KindArg>,
    },
    /// Time a fast path against its brute-force baseline.
    Bench {
        #[arg(long)]
        task: String,
        /// Inclusive range `lo..hi`.
        #[arg(long = "n", value_parser = parse_range)]
        n: (usize, usize),
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum KindArg {
    Amplitudes,
    Triple,
    CheckMatrix,
    Tableau,
    Matrix,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Amplitudes => Kind::Amplitudes,
            KindArg::Triple => Kind::Triple,
            KindArg::CheckMatrix => Kind::CheckMatrix,
            KindArg::Tableau => Kind::Tableau,
            KindArg::Matrix => Kind::Matrix,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RandomKind {
    State,
    Gate,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected lo..hi")?;
    let lo: usize = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// Failure of a command, carrying its exit code.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Malformed(String),
    #[error("rejected: {0}")]
    Rejected(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => EXIT_MALFORMED,
            CliError::Rejected(_) => EXIT_REJECTED,
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        CliError::Malformed(e.to_string())
    }
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// `a / b` at the largest entry of `b`.
fn ratio_at_peak(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    let i = (0..b.len())
        .max_by(|&i, &j| b[i].norm().total_cmp(&b[j].norm()))
        .expect("nonempty");
    a[i] / b[i]
}

fn state_triple(doc: &Document) -> Result<(AffineSubspaceTriple, Option<Complex64>), CliError> {
    Ok(match doc.kind() {
        Kind::Amplitudes => {
            let v = doc.amplitudes()?;
            let d = verify_stabiliser_vector(&v);
            let Some(t) = d.triple else {
                let reason = d.failure_reason.map_or_else(String::new, |r| r.to_string());
                return Err(CliError::Rejected(reason));
            };
            let canonical = t.to_amplitudes().expect("accepted triple");
            let factor = ratio_at_peak(v.entries(), canonical.entries());
            (t, Some(factor))
        }
        Kind::Triple => (doc.triple()?, None),
        Kind::CheckMatrix => (
            check_to_triple(&doc.check_matrix()?).map_err(|e| CliError::Malformed(e.to_string()))?,
            None,
        ),
        _ => unreachable!("state kinds only"),
    })
}

/// Routes `doc` through the conversion graph to `target`.
pub fn convert(doc: &Document, target: Kind) -> Result<Document, CliError> {
    let source = doc.kind();
    if source.is_state() != target.is_state() {
        return Err(CliError::Malformed(format!(
            "no conversion from {} to {}",
            source.name(),
            target.name()
        )));
    }
    let mut metadata = doc.metadata.clone();
    let mut out = if source.is_state() {
        let (triple, factor) = state_triple(doc)?;
        if let Some(f) = factor {
            metadata.global_factor = Some(pair(f));
        }
        match target {
            Kind::Amplitudes => {
                if triple.n() > MAX_AMPLITUDE_QUBITS {
                    return Err(CliError::Malformed(format!(
                        "amplitude output limited to {MAX_AMPLITUDE_QUBITS} qubits"
                    )));
                }
                let scale = metadata
                    .global_factor
                    .take()
                    .map_or(Complex64::new(1.0, 0.0), |[re, im]| Complex64::new(re, im));
                let v = triple.to_amplitudes().expect("valid triple").scale(scale);
                Document::from_amplitudes(&v)
            }
            Kind::Triple => Document::from_triple(&triple),
            _ => Document::from_check_matrix(&triple_to_check(&triple).expect("valid triple")),
        }
    } else {
        match (source, target) {
            (Kind::Matrix, Kind::Matrix) => doc.clone(),
            (Kind::Matrix, _) => {
                let m = doc.matrix()?;
                let d = verify_clifford_matrix(&m);
                let Some(t) = d.tableau else {
                    let reason = d.failure_reason.map_or_else(String::new, |r| r.to_string());
                    return Err(CliError::Rejected(reason));
                };
                let canonical = tableau_to_matrix(&t).expect("extracted tableau is valid");
                metadata.global_phase = Some(pair(ratio_at_peak(m.entries(), canonical.entries())));
                Document::from_tableau(&t)
            }
            (_, Kind::Tableau) => {
                let t = doc.tableau()?;
                if !crate::clifford::is_valid_tableau(&t) {
                    return Err(CliError::Malformed(
                        "tableau violates the conjugate-tuple relations".into(),
                    ));
                }
                doc.clone()
            }
            _ => {
                let t = doc.tableau()?;
                if t.n() > MAX_MATRIX_QUBITS {
                    return Err(CliError::Malformed(format!(
                        "matrix output limited to {MAX_MATRIX_QUBITS} qubits"
                    )));
                }
                let m = tableau_to_matrix(&t).map_err(|e| CliError::Malformed(e.to_string()))?;
                let m = match metadata.global_phase.take() {
                    Some([re, im]) => m.scale(Complex64::new(re, im)),
                    None => m,
                };
                Document::from_matrix(&m)
            }
        }
    };
    out.metadata = metadata;
    Ok(out)
}

/// Result of `verify`: the verdict line and the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub accepted: bool,
    pub lines: Vec<String>,
    pub oracle: Option<bool>,
}

impl VerifyReport {
    pub fn exit_code(&self) -> i32 {
        match self.oracle {
            Some(o) if o != self.accepted => EXIT_DISAGREE,
            _ if self.accepted => EXIT_OK,
            _ => EXIT_REJECTED,
        }
    }
}

fn verdict_lines(accepted: bool, reason: Option<String>, witness: Option<usize>) -> Vec<String> {
    let mut lines = vec![if accepted {
        "accepted".to_string()
    } else {
        "rejected".to_string()
    }];
    if let Some(r) = reason {
        lines.push(format!("reason: {r}"));
    }
    if let Some(w) = witness {
        lines.push(format!("witness: {w}"));
    }
    lines
}

pub fn verify(doc: &Document, use_oracle: bool) -> Result<VerifyReport, CliError> {
    let (accepted, mut lines, oracle_result) = match doc.kind() {
        Kind::Amplitudes => {
            let v: AmplitudeVector = doc.amplitudes()?;
            let d = verify_stabiliser_vector(&v);
            let o = use_oracle.then(|| oracle::brute_is_stabiliser(&v));
            (
                d.is_accepted(),
                verdict_lines(d.is_accepted(), d.failure_reason.map(|r| r.to_string()), d.witness),
                o,
            )
        }
        Kind::Matrix => {
            let m: CliffordMatrix = doc.matrix()?;
            let d = verify_clifford_matrix(&m);
            let o = use_oracle.then(|| match oracle::brute_is_clifford(&m.to_dense()) {
                Err(OracleError::NotUnitary { .. }) => Ok(false),
                other => other,
            });
            (
                d.is_accepted(),
                verdict_lines(d.is_accepted(), d.failure_reason.map(|r| r.to_string()), d.witness),
                o,
            )
        }
        k => {
            return Err(CliError::Malformed(format!(
                "verify takes amplitudes or a matrix, not {}",
                k.name()
            )))
        }
    };
    let oracle = match oracle_result {
        None => None,
        Some(Ok(b)) => {
            let agree = if b == accepted { "agrees" } else { "DISAGREES" };
            lines.push(format!("oracle: {} ({agree})", if b { "accepted" } else { "rejected" }));
            Some(b)
        }
        Some(Err(e)) => {
            lines.push(format!("oracle: skipped ({e})"));
            None
        }
    };
    Ok(VerifyReport {
        accepted,
        lines,
        oracle,
    })
}

pub fn random_document(
    state: bool,
    n: usize,
    seed: u64,
    depth: Option<usize>,
    emit: Option<Kind>,
) -> Result<Document, CliError> {
    if n == 0 {
        return Err(CliError::Malformed("n must be positive".into()));
    }
    let depth = depth.unwrap_or_else(|| default_depth(n));
    let mut rng = rng_from_seed(seed);
    let (mut doc, generator) = if state {
        let m = random_check_matrix(n, depth, &mut rng);
        let base = Document::from_check_matrix(&m);
        let doc = match emit.unwrap_or(Kind::CheckMatrix) {
            Kind::CheckMatrix => base,
            k @ (Kind::Amplitudes | Kind::Triple) => convert(&base, k)?,
            k => {
                return Err(CliError::Malformed(format!(
                    "a state cannot be emitted as {}",
                    k.name()
                )))
            }
        };
        (
            doc,
            format!("check matrix from H/S/CNOT circuit of depth {depth}, random signs"),
        )
    } else {
        let t = random_tableau(n, depth, &mut rng);
        let base = Document::from_tableau(&t);
        let doc = match emit.unwrap_or(Kind::Tableau) {
            Kind::Tableau => base,
            Kind::Matrix => convert(&base, Kind::Matrix)?,
            k => return Err(CliError::Malformed(format!("a gate cannot be emitted as {}", k.name()))),
        };
        (doc, format!("tableau of H/S/CNOT circuit of depth {depth}"))
    };
    doc.metadata.seed = Some(seed);
    doc.metadata.generator = Some(generator);
    Ok(doc)
}

fn read_input(path: &PathBuf, stdin: &mut dyn Read) -> Result<Document, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| CliError::Malformed(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
    }
    Ok(Document::parse(&text)?)
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Convert { to, file } => read_input(&file, stdin)
            .and_then(|doc| convert(&doc, to.into()))
            .map(|doc| {
                let _ = writeln!(stdout, "{}", doc.to_json());
                EXIT_OK
            }),
        Command::Verify { oracle, file } => {
            read_input(&file, stdin)
                .and_then(|doc| verify(&doc, oracle))
                .map(|report| {
                    for line in &report.lines {
                        let _ = writeln!(stdout, "{line}");
                    }
                    report.exit_code()
                })
        }
        Command::Random {
            kind,
            n,
            seed,
            depth,
            emit,
        } => random_document(matches!(kind, RandomKind::State), n, seed, depth, emit.map(Kind::from)).map(|doc| {
            let _ = writeln!(stdout, "{}", doc.to_json());
            EXIT_OK
        }),
        Command::Bench {
            task,
            n: (lo, hi),
            repeats,
            seed,
        } => task
            .parse::<Task>()
            .and_then(|t| bench::run(t, lo..=hi, repeats, seed))
            .map_err(|e| CliError::Malformed(e.to_string()))
            .map(|report| {
                let _ = write!(stdout, "{}\n{}", report.table(), report.csv());
                EXIT_OK
            }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "stabtool: {e}");
            e.exit_code()
        }
    }
}
