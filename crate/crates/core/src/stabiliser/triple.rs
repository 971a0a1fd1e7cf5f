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

use super::StabiliserError;
use crate::f2::{BitMatrix, BitVector, GrayCode};
use crate::pauli::{index_of, parity, AmplitudeVector, Phase, MAX_INDEX_QUBITS};

/// A stabiliser state written as `Σ_{α} (-1)^{Q(α)} i^{ℓ(α)} |Σ α_j z_j + z0⟩`.
///
/// `qform` is the `k × k` upper-triangular matrix `Q̃` with `Q(α) = αᵀQ̃α`
/// and `lmap` holds `ℓ` on the basis vectors; both are in coordinates
/// relative to `basis`. The exponent `ℓ(α)` is the GF(2) value, so
/// `i^{ℓ(α)}` is `1` or `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSubspaceTriple {
    n: usize,
    basis: Vec<BitVector>,
    shift: BitVector,
    qform: BitMatrix,
    lmap: BitVector,
}

impl AffineSubspaceTriple {
    pub fn new(
        n: usize,
        basis: Vec<BitVector>,
        shift: BitVector,
        qform: BitMatrix,
        lmap: BitVector,
    ) -> Result<Self, StabiliserError> {
        let invalid = |msg: String| Err(StabiliserError::InvalidTriple(msg));
        let k = basis.len();
        if n == 0 {
            return invalid("qubit count must be positive".into());
        }
        if k > n {
            return invalid(format!("{k} basis vectors for {n} qubits"));
        }
        if shift.len() != n || basis.iter().any(|b| b.len() != n) {
            return invalid("basis and shift must have one entry per qubit".into());
        }
        if qform.row_count() != k || qform.col_count() != k || lmap.len() != k {
            return invalid(format!("quadratic form and linear map must be {k}-dimensional"));
        }
        if (0..k).any(|i| (0..i).any(|j| qform.get(i, j))) {
            return invalid("quadratic form has entries below the diagonal".into());
        }
        let bm = BitMatrix::from_rows(basis.clone(), n).map_err(StabiliserError::F2)?;
        if bm.rank() != k {
            return invalid("basis vectors are linearly dependent".into());
        }
        Ok(Self {
            n,
            basis,
            shift,
            qform,
            lmap,
        })
    }

    /// The single basis state `|shift⟩`.
    pub fn basis_state(shift: BitVector) -> Self {
        Self {
            n: shift.len(),
            basis: Vec::new(),
            shift,
            qform: BitMatrix::zeros(0, 0),
            lmap: BitVector::zeros(0),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the affine subspace.
    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    pub fn shift(&self) -> &BitVector {
        &self.shift
    }

    pub fn qform(&self) -> &BitMatrix {
        &self.qform
    }

    pub fn lmap(&self) -> &BitVector {
        &self.lmap
    }

    /// `Q(α)` for coordinates packed into a word (`α_j` at bit `j`).
    pub fn quadratic_at(&self, alpha: u64) -> bool {
        self.coefficients().quadratic(alpha)
    }

    /// `ℓ(α)` for packed coordinates.
    pub fn linear_at(&self, alpha: u64) -> bool {
        self.coefficients().linear(alpha)
    }

    pub(crate) fn coefficients(&self) -> Coefficients {
        Coefficients::from_triple(self)
    }

    /// Normalised amplitudes with the amplitude at `shift` equal to `+1/√(2^k)`.
    pub fn to_amplitudes(&self) -> Result<AmplitudeVector, StabiliserError> {
        let scale = (0.5f64).powf(self.k() as f64 / 2.0);
        self.to_amplitudes_scaled(Complex64::new(scale, 0.0))
    }

    /// Amplitudes `factor · (-1)^{Q(α)} i^{ℓ(α)}` on the affine subspace, unnormalised.
    pub fn to_amplitudes_scaled(&self, factor: Complex64) -> Result<AmplitudeVector, StabiliserError> {
        if self.n > MAX_INDEX_QUBITS {
            return Err(StabiliserError::InvalidTriple(format!(
                "{} qubits is too many for an amplitude vector",
                self.n
            )));
        }
        let mut out = AmplitudeVector::zeros(self.n);
        let coeffs = self.coefficients();
        let basis: Vec<usize> = self.basis.iter().map(index_of).collect();
        let mut label = index_of(&self.shift);
        let entries = out.entries_mut();
        for (alpha, flipped) in GrayCode::new(self.k()) {
            if let Some(b) = flipped {
                label ^= basis[b];
            }
            entries[label] = factor * coeffs.phase(alpha).to_complex();
        }
        Ok(out)
    }
}

/// Word-packed `Q̃` rows and `ℓ` for fast evaluation.
pub(crate) struct Coefficients {
    /// `rows[i]` has bit `j` set iff `Q̃_ij = 1` (so only `j ≥ i`).
    rows: Vec<u64>,
    lmap: u64,
}

impl Coefficients {
    fn from_triple(t: &AffineSubspaceTriple) -> Self {
        let k = t.k();
        Self {
            rows: (0..k).map(|i| t.qform.row(i).to_word()).collect(),
            lmap: t.lmap.to_word(),
        }
    }

    #[inline]
    pub(crate) fn quadratic(&self, alpha: u64) -> bool {
        let mut acc = false;
        let mut a = alpha;
        while a != 0 {
            let i = a.trailing_zeros() as usize;
            a &= a - 1;
            acc ^= (self.rows[i] & alpha).count_ones() & 1 == 1;
        }
        acc
    }

    #[inline]
    pub(crate) fn linear(&self, alpha: u64) -> bool {
        parity((self.lmap & alpha) as usize)
    }

    /// `(-1)^{Q(α)} i^{ℓ(α)}`
    #[inline]
    pub(crate) fn phase(&self, alpha: u64) -> Phase {
        Phase::from_exponent(2 * u32::from(self.quadratic(alpha)) + u32::from(self.linear(alpha)))
    }
}
