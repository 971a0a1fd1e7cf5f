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

//! The JSON document format shared by the CLI and the FFI layer.
//!
//! Bitstrings are written qubit 0 first; complex numbers are `[re, im]`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::{CliffordMatrix, Tableau, TableauRow};
use crate::f2::{BitMatrix, BitVector};
use crate::pauli::{AmplitudeVector, PauliOperator};
use crate::stabiliser::{AffineSubspaceTriple, CheckMatrix, CheckRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Amplitudes,
    Triple,
    CheckMatrix,
    Tableau,
    Matrix,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Amplitudes => "amplitudes",
            Kind::Triple => "triple",
            Kind::CheckMatrix => "check_matrix",
            Kind::Tableau => "tableau",
            Kind::Matrix => "matrix",
        }
    }

    /// State kinds convert among themselves, gate kinds among themselves.
    pub fn is_state(self) -> bool {
        matches!(self, Kind::Amplitudes | Kind::Triple | Kind::CheckMatrix)
    }
}

impl std::str::FromStr for Kind {
    type Err = DocumentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "amplitudes" => Kind::Amplitudes,
            "triple" => Kind::Triple,
            "check_matrix" => Kind::CheckMatrix,
            "tableau" => Kind::Tableau,
            "matrix" => Kind::Matrix,
            _ => return Err(DocumentError::Malformed(format!("unknown kind {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    /// Scalar stripped from an amplitude vector: input = factor · canonical state.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub global_factor: Option<[f64; 2]>,
    /// Phase stripped from a matrix: input = phase · canonical matrix.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub global_phase: Option<[f64; 2]>,
}

impl Metadata {
    pub fn is_empty(&self) -> bool {
        *self == Self::default()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableauRowDoc {
    pub u: String,
    pub v: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Amplitudes {
        amplitudes: Vec<[f64; 2]>,
    },
    Triple {
        basis: Vec<String>,
        shift: String,
        /// Row `i` holds entries `i..k` of the upper-triangular form.
        qform: Vec<String>,
        lmap: String,
    },
    CheckMatrix {
        rows: Vec<String>,
    },
    Tableau {
        rows: Vec<TableauRowDoc>,
    },
    Matrix {
        /// Row-major.
        matrix: Vec<Vec<[f64; 2]>>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub n: usize,
    #[serde(flatten)]
    pub payload: Payload,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("document holds {found}, expected {expected}")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
}

fn malformed<T>(msg: impl Into<String>) -> Result<T, DocumentError> {
    Err(DocumentError::Malformed(msg.into()))
}

fn to_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn from_pair([re, im]: [f64; 2]) -> Complex64 {
    Complex64::new(re, im)
}

fn parse_bits(s: &str, len: usize, what: &str) -> Result<BitVector, DocumentError> {
    let v: BitVector = s
        .parse()
        .map_err(|e| DocumentError::Malformed(format!("{what}: {e}")))?;
    if v.len() != len {
        return malformed(format!("{what}: expected {len} bits, found {}", v.len()));
    }
    Ok(v)
}

impl Document {
    pub fn new(n: usize, payload: Payload) -> Self {
        Self {
            n,
            payload,
            metadata: Metadata::default(),
        }
    }

    pub fn kind(&self) -> Kind {
        match self.payload {
            Payload::Amplitudes { .. } => Kind::Amplitudes,
            Payload::Triple { .. } => Kind::Triple,
            Payload::CheckMatrix { .. } => Kind::CheckMatrix,
            Payload::Tableau { .. } => Kind::Tableau,
            Payload::Matrix { .. } => Kind::Matrix,
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(text).map_err(|e| DocumentError::Malformed(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialise")
    }

    /// Checks that `n` agrees with the payload and the payload decodes.
    pub fn validate(&self) -> Result<(), DocumentError> {
        if self.n == 0 {
            return malformed("n must be positive");
        }
        match self.kind() {
            Kind::Amplitudes => self.amplitudes().map(drop),
            Kind::Triple => self.triple().map(drop),
            Kind::CheckMatrix => self.check_matrix().map(drop),
            Kind::Tableau => self.tableau().map(drop),
            Kind::Matrix => self.matrix().map(drop),
        }
    }

    fn wrong(&self, expected: Kind) -> DocumentError {
        DocumentError::WrongKind {
            expected: expected.name(),
            found: self.kind().name(),
        }
    }

    fn dim(&self) -> Result<usize, DocumentError> {
        if self.n >= 31 {
            return malformed(format!("n = {} too large for a dense payload", self.n));
        }
        Ok(1 << self.n)
    }

    pub fn from_amplitudes(v: &AmplitudeVector) -> Self {
        Self::new(
            v.n(),
            Payload::Amplitudes {
                amplitudes: v.entries().iter().copied().map(to_pair).collect(),
            },
        )
    }

    pub fn amplitudes(&self) -> Result<AmplitudeVector, DocumentError> {
        let Payload::Amplitudes { amplitudes } = &self.payload else {
            return Err(self.wrong(Kind::Amplitudes));
        };
        if amplitudes.len() != self.dim()? {
            return malformed(format!("{} amplitudes for n = {}", amplitudes.len(), self.n));
        }
        AmplitudeVector::new(amplitudes.iter().copied().map(from_pair).collect())
            .map_err(|e| DocumentError::Malformed(e.to_string()))
    }

    pub fn from_triple(t: &AffineSubspaceTriple) -> Self {
        let k = t.k();
        Self::new(
            t.n(),
            Payload::Triple {
                basis: t.basis().iter().map(ToString::to_string).collect(),
                shift: t.shift().to_string(),
                qform: (0..k)
                    .map(|i| (i..k).map(|j| if t.qform().get(i, j) { '1' } else { '0' }).collect())
                    .collect(),
                lmap: t.lmap().to_string(),
            },
        )
    }

    pub fn triple(&self) -> Result<AffineSubspaceTriple, DocumentError> {
        let Payload::Triple {
            basis,
            shift,
            qform,
            lmap,
        } = &self.payload
        else {
            return Err(self.wrong(Kind::Triple));
        };
        let n = self.n;
        let k = basis.len();
        let basis = basis
            .iter()
            .map(|b| parse_bits(b, n, "basis vector"))
            .collect::<Result<Vec<_>, _>>()?;
        let shift = parse_bits(shift, n, "shift")?;
        let lmap = if k == 0 && lmap.is_empty() {
            BitVector::zeros(0)
        } else {
            parse_bits(lmap, k, "lmap")?
        };
        if qform.len() != k {
            return malformed(format!("qform has {} rows, expected {k}", qform.len()));
        }
        let mut q = BitMatrix::zeros(k, k);
        for (i, row) in qform.iter().enumerate() {
            let bits = parse_bits(row, k - i, "qform row")?;
            for j in bits.ones() {
                q.set(i, i + j, true);
            }
        }
        AffineSubspaceTriple::new(n, basis, shift, q, lmap).map_err(|e| DocumentError::Malformed(e.to_string()))
    }

    pub fn from_check_matrix(m: &CheckMatrix) -> Self {
        Self::new(
            m.n(),
            Payload::CheckMatrix {
                rows: m.rows().iter().map(|r| r.to_bits().to_string()).collect(),
            },
        )
    }

    pub fn check_matrix(&self) -> Result<CheckMatrix, DocumentError> {
        let Payload::CheckMatrix { rows } = &self.payload else {
            return Err(self.wrong(Kind::CheckMatrix));
        };
        let rows = rows
            .iter()
            .map(|r| {
                let bits = parse_bits(r, 2 * self.n + 1, "check row")?;
                CheckRow::from_bits(&bits).map_err(|e| DocumentError::Malformed(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if rows.len() != self.n {
            return malformed(format!("{} check rows for n = {}", rows.len(), self.n));
        }
        CheckMatrix::new(rows).map_err(|e| DocumentError::Malformed(e.to_string()))
    }

    pub fn from_tableau(t: &Tableau) -> Self {
        Self::new(
            t.n(),
            Payload::Tableau {
                rows: t
                    .rows()
                    .iter()
                    .map(|r| TableauRowDoc {
                        u: r.u.to_string(),
                        v: r.v.to_string(),
                    })
                    .collect(),
            },
        )
    }

    /// Shapes only; the algebraic relations are checked where a tableau is used.
    pub fn tableau(&self) -> Result<Tableau, DocumentError> {
        let Payload::Tableau { rows } = &self.payload else {
            return Err(self.wrong(Kind::Tableau));
        };
        if rows.len() != self.n {
            return malformed(format!("{} tableau rows for n = {}", rows.len(), self.n));
        }
        let parse = |s: &str| -> Result<PauliOperator, DocumentError> {
            let p: PauliOperator = s
                .parse()
                .map_err(|e| DocumentError::Malformed(format!("Pauli literal {s:?}: {e}")))?;
            if p.n() != self.n {
                return malformed(format!("Pauli literal {s:?} is not on {} qubits", self.n));
            }
            Ok(p)
        };
        let rows = rows
            .iter()
            .map(|r| {
                Ok(TableauRow {
                    u: parse(&r.u)?,
                    v: parse(&r.v)?,
                })
            })
            .collect::<Result<Vec<_>, DocumentError>>()?;
        Tableau::new(rows).map_err(|e| DocumentError::Malformed(e.to_string()))
    }

    pub fn from_matrix(m: &CliffordMatrix) -> Self {
        let dim = m.dim();
        Self::new(
            m.n(),
            Payload::Matrix {
                matrix: (0..dim)
                    .map(|i| (0..dim).map(|j| to_pair(m.get(i, j))).collect())
                    .collect(),
            },
        )
    }

    pub fn matrix(&self) -> Result<CliffordMatrix, DocumentError> {
        let Payload::Matrix { matrix } = &self.payload else {
            return Err(self.wrong(Kind::Matrix));
        };
        let dim = self.dim()?;
        if matrix.len() != dim || matrix.iter().any(|r| r.len() != dim) {
            return malformed(format!("matrix must be {dim} × {dim} for n = {}", self.n));
        }
        let columns = (0..dim)
            .map(|j| matrix.iter().map(|row| from_pair(row[j])).collect())
            .collect();
        CliffordMatrix::from_columns(columns).map_err(|e| DocumentError::Malformed(e.to_string()))
    }
}
