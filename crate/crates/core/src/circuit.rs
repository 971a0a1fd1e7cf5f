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

//! Circuits of H, S and CNOT, composed directly on tableaus.
//!
//! Used to generate random Clifford gates and stabiliser states.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::Tableau;
use crate::f2::BitVector;
use crate::pauli::{PauliOperator, Phase};
use crate::stabiliser::{AffineSubspaceTriple, CheckMatrix, CheckRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    H(usize),
    S(usize),
    Cnot { control: usize, target: usize },
}

impl Gate {
    fn max_qubit(self) -> usize {
        match self {
            Gate::H(q) | Gate::S(q) => q,
            Gate::Cnot { control, target } => control.max(target),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(q) => write!(f, "h {q}"),
            Gate::S(q) => write!(f, "s {q}"),
            Gate::Cnot { control, target } => write!(f, "cx {control} {target}"),
        }
    }
}

/// `G P G*` for one gate.
pub fn conjugate(pauli: &PauliOperator, gate: Gate) -> PauliOperator {
    let mut q = pauli.q().clone();
    let mut p = pauli.p().clone();
    let mut phase = pauli.phase();
    match gate {
        Gate::H(k) => {
            // Z^a X^b = (-1)^{ab} X^b Z^a
            let (a, b) = (q.get(k), p.get(k));
            q.set(k, b);
            p.set(k, a);
            if a && b {
                phase = phase * Phase::MINUS_ONE;
            }
        }
        Gate::S(k) => {
            // X ↦ iXZ
            if q.get(k) {
                p.flip(k);
                phase = phase * Phase::I;
            }
        }
        Gate::Cnot { control, target } => {
            if q.get(control) {
                q.flip(target);
            }
            if p.get(target) {
                p.flip(control);
            }
        }
    }
    let (c, d) = phase.bits();
    PauliOperator::new(q, p, c, d).expect("halves keep their length")
}

/// A gate sequence on `n` qubits, applied first to last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize) -> Self {
        Self { n, gates: Vec::new() }
    }

    /// Panics if the gate touches a qubit outside the circuit or a CNOT has
    /// equal control and target.
    pub fn push(&mut self, gate: Gate) -> &mut Self {
        assert!(gate.max_qubit() < self.n, "gate {gate} outside {} qubits", self.n);
        if let Gate::Cnot { control, target } = gate {
            assert_ne!(control, target, "CNOT needs distinct qubits");
        }
        self.gates.push(gate);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Uniform choice among H, S and CNOT at each step, qubits uniform.
    pub fn random<R: Rng + ?Sized>(n: usize, depth: usize, rng: &mut R) -> Self {
        let mut c = Self::new(n);
        for _ in 0..depth {
            let kind = if n == 1 {
                rng.random_range(0..2)
            } else {
                rng.random_range(0..3)
            };
            let gate = match kind {
                0 => Gate::H(rng.random_range(0..n)),
                1 => Gate::S(rng.random_range(0..n)),
                _ => {
                    let control = rng.random_range(0..n);
                    let target = (control + rng.random_range(1..n)) % n;
                    Gate::Cnot { control, target }
                }
            };
            c.push(gate);
        }
        c
    }

    pub fn tableau(&self) -> Tableau {
        let mut t = Tableau::identity(self.n);
        for &g in &self.gates {
            for row in t.rows_mut() {
                row.u = conjugate(&row.u, g);
                row.v = conjugate(&row.v, g);
            }
        }
        t
    }
}

pub fn default_depth(n: usize) -> usize {
    10 * n
}

/// The generator behind `stabtool random`.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random Clifford tableau from a circuit of the given depth.
pub fn random_tableau<R: Rng + ?Sized>(n: usize, depth: usize, rng: &mut R) -> Tableau {
    Circuit::random(n, depth, rng).tableau()
}

/// Stabiliser state check matrix: the `Z_i` pushed through a random circuit,
/// then each generator given a random sign.
pub fn random_check_matrix<R: Rng + ?Sized>(n: usize, depth: usize, rng: &mut R) -> CheckMatrix {
    let t = random_tableau(n, depth, rng);
    let paulis: Vec<PauliOperator> = t
        .rows()
        .iter()
        .map(|r| {
            if rng.random_bool(0.5) {
                r.u.times(Phase::MINUS_ONE)
            } else {
                r.u.clone()
            }
        })
        .collect();
    let rows = paulis
        .iter()
        .map(|p| CheckRow::from_pauli(p).expect("circuit images are Hermitian"))
        .collect();
    CheckMatrix::new(rows).expect("circuit images are independent and commute")
}

/// A triple with full support (`k = n`), uniformly random shift, form and
/// linear part.
pub fn random_full_support_triple<R: Rng + ?Sized>(n: usize, rng: &mut R) -> AffineSubspaceTriple {
    let mut bits = |len: usize| BitVector::from_bools(&(0..len).map(|_| rng.random_bool(0.5)).collect::<Vec<_>>());
    let shift = bits(n);
    let lmap = bits(n);
    let qform_rows: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            let row = bits(n);
            (0..n).map(|j| j >= i && row.get(j)).collect()
        })
        .collect();
    let basis = (0..n).map(|i| BitVector::unit(n, i)).collect();
    let qform = crate::f2::BitMatrix::from_bools(&qform_rows).expect("square rows");
    AffineSubspaceTriple::new(n, basis, shift, qform, lmap).expect("well-formed triple")
}
