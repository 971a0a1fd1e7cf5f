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

//! Pauli operators in symplectic form.
//!
//! A [`PauliOperator`] on `n` qubits stores two bit vectors `q` (the X part)
//! and `p` (the Z part) together with two phase bits `c`, `d`, and denotes
//! the unitary `(-1)^c (-i)^d X^q Z^p`. The X part is always written to the
//! left. Qubit 0 occupies the most significant bit of a basis index, so
//! `|z_0 z_1 … z_{n-1}⟩` has index `Σ z_j 2^{n-1-j}` and `Z_0 = Z ⊗ I ⊗ … ⊗ I`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::dense::DenseMatrix;
use crate::f2::BitVector;

/// Largest qubit count [`PauliOperator::to_dense`] accepts by default.
pub const DEFAULT_DENSE_LIMIT: usize = 10;

/// Largest qubit count for which basis labels are packed into a machine word.
pub const MAX_INDEX_QUBITS: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PauliError {
    #[error("qubit count mismatch: {0} vs {1}")]
    QubitMismatch(usize, usize),
    #[error("basis index {index} out of range for {n} qubits")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{n} qubits exceeds the limit of {limit}")]
    TooManyQubits { n: usize, limit: usize },
    #[error("amplitude vector length {0} is not a power of two")]
    BadLength(usize),
    #[error("invalid Pauli literal: {0}")]
    Parse(String),
}

/// A fourth root of unity `i^k`, `k` taken mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(k: u32) -> Self {
        Phase((k % 4) as u8)
    }

    /// `(-1)^c (-i)^d`
    pub fn from_bits(c: bool, d: bool) -> Self {
        Phase::from_exponent(2 * u32::from(c) + 3 * u32::from(d))
    }

    /// Inverse of [`Phase::from_bits`].
    pub fn bits(self) -> (bool, bool) {
        match self.0 {
            0 => (false, false),
            1 => (true, true),
            2 => (true, false),
            _ => (false, true),
        }
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn conj(self) -> Self {
        Phase((4 - self.0) % 4)
    }

    pub fn to_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }

    /// The fourth root of unity within `tol` of `z`, if any.
    pub fn nearest(z: Complex64, tol: f64) -> Option<Self> {
        (0..4u8).map(Phase).find(|ph| (z - ph.to_complex()).norm() <= tol)
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

/// Basis index of label `z`, qubit 0 in the most significant position.
pub fn index_of(z: &BitVector) -> usize {
    let n = z.len();
    assert!(n <= MAX_INDEX_QUBITS, "label of {n} qubits does not fit an index");
    z.ones().fold(0usize, |acc, j| acc | (1usize << (n - 1 - j)))
}

/// Label of basis index `index` on `n` qubits; inverse of [`index_of`].
pub fn bits_of(index: usize, n: usize) -> Result<BitVector, PauliError> {
    if n > MAX_INDEX_QUBITS {
        return Err(PauliError::TooManyQubits {
            n,
            limit: MAX_INDEX_QUBITS,
        });
    }
    if index >> n != 0 {
        return Err(PauliError::IndexOutOfRange { index, n });
    }
    let mut z = BitVector::zeros(n);
    for j in 0..n {
        if (index >> (n - 1 - j)) & 1 == 1 {
            z.set(j, true);
        }
    }
    Ok(z)
}

#[inline]
pub(crate) fn parity(x: usize) -> bool {
    x.count_ones() & 1 == 1
}

/// A state vector of `2^n` complex amplitudes indexed by basis label.
#[derive(Clone, Debug, PartialEq)]
pub struct AmplitudeVector {
    n: usize,
    entries: Vec<Complex64>,
}

impl AmplitudeVector {
    pub fn new(entries: Vec<Complex64>) -> Result<Self, PauliError> {
        let len = entries.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(PauliError::BadLength(len));
        }
        Ok(Self {
            n: len.trailing_zeros() as usize,
            entries,
        })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![Complex64::new(0.0, 0.0); 1 << n],
        }
    }

    /// The computational basis state with index `index`.
    pub fn basis(n: usize, index: usize) -> Self {
        let mut v = Self::zeros(n);
        v.entries[index] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn from_real(values: &[f64]) -> Result<Self, PauliError> {
        Self::new(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [Complex64] {
        &mut self.entries
    }

    pub fn into_entries(self) -> Vec<Complex64> {
        self.entries
    }

    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|&a| a * s).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Index-level view of a Pauli: `P e_z = phase · (-1)^{popcount(z & z_mask)} e_{z ^ x_mask}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndexMasks {
    pub x_mask: usize,
    pub z_mask: usize,
    pub phase: Phase,
}

impl IndexMasks {
    /// Entry `r` of `P·v`, touching one entry of `v`.
    #[inline]
    pub fn entry(&self, v: &[Complex64], r: usize) -> Complex64 {
        let src = r ^ self.x_mask;
        let a = self.phase.to_complex() * v[src];
        if parity(src & self.z_mask) {
            -a
        } else {
            a
        }
    }

    /// `out = P·v` in one pass.
    pub fn apply_into(&self, v: &[Complex64], out: &mut [Complex64]) {
        assert_eq!(v.len(), out.len());
        let ph = self.phase.to_complex();
        for (z, &a) in v.iter().enumerate() {
            let val = ph * a;
            out[z ^ self.x_mask] = if parity(z & self.z_mask) { -val } else { val };
        }
    }
}

/// The Pauli `(-1)^c (-i)^d X^q Z^p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    q: BitVector,
    p: BitVector,
    c: bool,
    d: bool,
}

impl PauliOperator {
    pub fn new(q: BitVector, p: BitVector, c: bool, d: bool) -> Result<Self, PauliError> {
        if q.len() != p.len() {
            return Err(PauliError::QubitMismatch(q.len(), p.len()));
        }
        Ok(Self { q, p, c, d })
    }

    /// The order-two Pauli `(-1)^c (-i)^{p·q} X^q Z^p`.
    pub fn hermitian(q: BitVector, p: BitVector, c: bool) -> Result<Self, PauliError> {
        let d = q.dot(&p);
        Self::new(q, p, c, d)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            q: BitVector::zeros(n),
            p: BitVector::zeros(n),
            c: false,
            d: false,
        }
    }

    pub fn x(n: usize, qubit: usize) -> Self {
        Self {
            q: BitVector::unit(n, qubit),
            ..Self::identity(n)
        }
    }

    pub fn z(n: usize, qubit: usize) -> Self {
        Self {
            p: BitVector::unit(n, qubit),
            ..Self::identity(n)
        }
    }

    /// `Y = iXZ`
    pub fn y(n: usize, qubit: usize) -> Self {
        let (c, d) = Phase::I.bits();
        Self {
            q: BitVector::unit(n, qubit),
            p: BitVector::unit(n, qubit),
            c,
            d,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.q.len()
    }

    #[inline]
    pub fn q(&self) -> &BitVector {
        &self.q
    }

    #[inline]
    pub fn p(&self) -> &BitVector {
        &self.p
    }

    #[inline]
    pub fn c(&self) -> bool {
        self.c
    }

    #[inline]
    pub fn d(&self) -> bool {
        self.d
    }

    pub fn phase(&self) -> Phase {
        Phase::from_bits(self.c, self.d)
    }

    pub fn with_phase(&self, phase: Phase) -> Self {
        let (c, d) = phase.bits();
        Self { c, d, ..self.clone() }
    }

    /// Multiplies the operator by a scalar fourth root of unity.
    pub fn times(&self, phase: Phase) -> Self {
        self.with_phase(self.phase() * phase)
    }

    /// `true` iff the operator squares to the identity (`d ≡ p·q`).
    pub fn is_hermitian_order_two(&self) -> bool {
        self.d == self.p.dot(&self.q)
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.q.is_zero() && self.p.is_zero()
    }

    /// Symplectic form `p1·q2 + p2·q1`; `false` iff the two operators commute.
    pub fn symplectic_form(&self, other: &Self) -> bool {
        assert_eq!(
            self.n(),
            other.n(),
            "symplectic form of Paulis on different qubit counts"
        );
        self.p.dot(&other.q) ^ other.p.dot(&self.q)
    }

    pub fn commutes(&self, other: &Self) -> bool {
        !self.symplectic_form(other)
    }

    /// The product `self · other`, using `Z^p X^q = (-1)^{p·q} X^q Z^p`.
    pub fn multiply(&self, other: &Self) -> Result<Self, PauliError> {
        if self.n() != other.n() {
            return Err(PauliError::QubitMismatch(self.n(), other.n()));
        }
        let swap = if self.p.dot(&other.q) {
            Phase::MINUS_ONE
        } else {
            Phase::ONE
        };
        let phase = self.phase() * other.phase() * swap;
        let (c, d) = phase.bits();
        Ok(Self {
            q: &self.q ^ &other.q,
            p: &self.p ^ &other.p,
            c,
            d,
        })
    }

    /// Index masks for fast application; needs `n ≤ 63`.
    pub fn masks(&self) -> IndexMasks {
        IndexMasks {
            x_mask: index_of(&self.q),
            z_mask: index_of(&self.p),
            phase: self.phase(),
        }
    }

    /// `P·v` by reindexing with `z ↦ z + q` and sign flips `(-1)^{p·z}`.
    pub fn apply(&self, v: &AmplitudeVector) -> Result<AmplitudeVector, PauliError> {
        if self.n() != v.n() {
            return Err(PauliError::QubitMismatch(self.n(), v.n()));
        }
        let mut out = AmplitudeVector::zeros(v.n());
        self.masks().apply_into(v.entries(), out.entries_mut());
        Ok(out)
    }

    /// Dense `2^n × 2^n` matrix, refusing `n > DEFAULT_DENSE_LIMIT`.
    pub fn to_dense(&self) -> Result<DenseMatrix, PauliError> {
        self.to_dense_with_limit(DEFAULT_DENSE_LIMIT)
    }

    pub fn to_dense_with_limit(&self, limit: usize) -> Result<DenseMatrix, PauliError> {
        let n = self.n();
        if n > limit {
            return Err(PauliError::TooManyQubits { n, limit });
        }
        let dim = 1usize << n;
        let m = self.masks();
        let mut out = DenseMatrix::zeros(dim);
        for col in 0..dim {
            let mut v = m.phase.to_complex();
            if parity(col & m.z_mask) {
                v = -v;
            }
            out[(col ^ m.x_mask, col)] = v;
        }
        Ok(out)
    }

    /// `X^{q}Z^{p}` with an explicit phase, convenience for tests and fixtures.
    pub fn from_parts(q: &str, p: &str, phase: Phase) -> Result<Self, PauliError> {
        let q: BitVector = q.parse().map_err(|e| PauliError::Parse(format!("{e}")))?;
        let p: BitVector = p.parse().map_err(|e| PauliError::Parse(format!("{e}")))?;
        let (c, d) = phase.bits();
        Self::new(q, p, c, d)
    }
}

/// Left-to-right product `g_0^{e_0} g_1^{e_1} ⋯`.
pub fn power_product(generators: &[PauliOperator], exponents: &BitVector) -> Result<PauliOperator, PauliError> {
    if generators.len() != exponents.len() {
        return Err(PauliError::QubitMismatch(generators.len(), exponents.len()));
    }
    let n = match generators.first() {
        Some(g) => g.n(),
        None => return Ok(PauliOperator::identity(0)),
    };
    let mut acc = PauliOperator::identity(n);
    for i in exponents.ones() {
        acc = acc.multiply(&generators[i])?;
    }
    Ok(acc)
}

impl fmt::Display for PauliOperator {
    /// Literal such as `-iXYZ`: a phase prefix from `+`, `-`, `+i`, `-i`
    /// and one letter per qubit, qubit 0 first, where `Y` means `iXZ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ys = self.q.iter().zip(self.p.iter()).filter(|&(a, b)| a && b).count();
        // ω X^q Z^p = ω (-i)^{#Y} ⊗ letters
        let prefix = self.phase() * Phase::from_exponent(3 * ys as u32);
        f.write_str(match prefix {
            Phase::ONE => "+",
            Phase::I => "+i",
            Phase::MINUS_ONE => "-",
            _ => "-i",
        })?;
        for (x, z) in self.q.iter().zip(self.p.iter()) {
            f.write_str(match (x, z) {
                (false, false) => "I",
                (true, false) => "X",
                (false, true) => "Z",
                (true, true) => "Y",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl FromStr for PauliOperator {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (prefix, body) = if let Some(rest) = s.strip_prefix("+i") {
            (Phase::I, rest)
        } else if let Some(rest) = s.strip_prefix("-i") {
            (Phase::MINUS_I, rest)
        } else if let Some(rest) = s.strip_prefix('+') {
            (Phase::ONE, rest)
        } else if let Some(rest) = s.strip_prefix('-').or_else(|| s.strip_prefix('\u{2212}')) {
            (Phase::MINUS_ONE, rest)
        } else if let Some(rest) = s.strip_prefix('i') {
            (Phase::I, rest)
        } else {
            (Phase::ONE, s)
        };
        if body.is_empty() {
            return Err(PauliError::Parse(format!("{s:?} has no qubits")));
        }
        let n = body.chars().count();
        let mut q = BitVector::zeros(n);
        let mut p = BitVector::zeros(n);
        let mut ys = 0u32;
        for (j, ch) in body.chars().enumerate() {
            match ch {
                'I' => {}
                'X' => q.set(j, true),
                'Z' => p.set(j, true),
                'Y' => {
                    q.set(j, true);
                    p.set(j, true);
                    ys += 1;
                }
                other => return Err(PauliError::Parse(format!("unexpected {other:?} in {s:?}"))),
            }
        }
        let (c, d) = (prefix * Phase::from_exponent(ys)).bits();
        Ok(Self { q, p, c, d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn dense_x() -> DenseMatrix {
        DenseMatrix::from_rows(&[vec![c(0., 0.), c(1., 0.)], vec![c(1., 0.), c(0., 0.)]]).unwrap()
    }

    fn dense_z() -> DenseMatrix {
        DenseMatrix::from_rows(&[vec![c(1., 0.), c(0., 0.)], vec![c(0., 0.), c(-1., 0.)]]).unwrap()
    }

    #[test]
    fn phase_bits_round_trip() {
        for k in 0..4 {
            let ph = Phase::from_exponent(k);
            let (cb, db) = ph.bits();
            assert_eq!(Phase::from_bits(cb, db), ph);
            let expected = Complex64::new(0.0, 1.0).powi(k as i32);
            let sign = if cb { -1.0 } else { 1.0 };
            let imag = if db { c(0., -1.) } else { c(1., 0.) };
            assert!((expected - imag * sign).norm() < 1e-15);
        }
    }

    #[test]
    fn index_examples() {
        assert_eq!(index_of(&BitVector::zeros(4)), 0);
        assert_eq!(index_of(&"101".parse().unwrap()), 5);
        assert_eq!(index_of(&"100".parse().unwrap()), 4);
        assert!(bits_of(8, 3).is_err());
    }

    #[test]
    fn index_round_trip_ten_qubits() {
        for i in 0..1024 {
            assert_eq!(index_of(&bits_of(i, 10).unwrap()), i);
        }
    }

    #[test]
    fn multiply_examples() {
        let x = PauliOperator::x(1, 0);
        let z = PauliOperator::z(1, 0);
        assert_eq!(x.multiply(&x).unwrap(), PauliOperator::identity(1));
        let xz = x.multiply(&z).unwrap();
        assert_eq!(
            (xz.q().to_string(), xz.p().to_string(), xz.c(), xz.d()),
            ("1".into(), "1".into(), false, false)
        );
        // ZX = -XZ
        let zx = z.multiply(&x).unwrap();
        assert!(zx.c() && !zx.d());
        assert!(x.multiply(&PauliOperator::x(2, 0)).is_err());
    }

    #[test]
    fn commutation_examples() {
        let x = PauliOperator::x(1, 0);
        assert!(x.commutes(&x));
        assert!(!x.commutes(&PauliOperator::z(1, 0)));
        let xx: PauliOperator = "XX".parse().unwrap();
        let zz: PauliOperator = "ZZ".parse().unwrap();
        assert!(xx.commutes(&zz));
    }

    #[test]
    fn apply_examples() {
        let one = AmplitudeVector::basis(1, 1);
        let out = PauliOperator::z(1, 0).apply(&one).unwrap();
        assert_eq!(out.entries(), &[c(0., 0.), c(-1., 0.)]);
        let zero = AmplitudeVector::basis(1, 0);
        let out = PauliOperator::x(1, 0).apply(&zero).unwrap();
        assert_eq!(out.entries(), &[c(0., 0.), c(1., 0.)]);
    }

    #[test]
    fn power_product_examples() {
        let gens = vec![PauliOperator::z(2, 0), PauliOperator::z(2, 1)];
        assert_eq!(
            power_product(&gens, &BitVector::zeros(2)).unwrap(),
            PauliOperator::identity(2)
        );
        let zz = power_product(&gens, &"11".parse().unwrap()).unwrap();
        assert_eq!(zz, "ZZ".parse().unwrap());
        assert!(!zz.c() && !zz.d());
    }

    #[test]
    fn dense_identity_and_minus_i_xz() {
        let id = PauliOperator::identity(1).to_dense().unwrap();
        assert_eq!(id, DenseMatrix::identity(2));
        // (q=1, p=1, c=0, d=1) is (-i)·X·Z
        let p = PauliOperator::new("1".parse().unwrap(), "1".parse().unwrap(), false, true).unwrap();
        let expected = dense_x().mul(&dense_z()).scale(c(0., -1.));
        assert_eq!(p.to_dense().unwrap(), expected);
        // and Y = iXZ = [[0,-i],[i,0]]
        let y = PauliOperator::y(1, 0).to_dense().unwrap();
        assert_eq!(y[(0, 1)], c(0., -1.));
        assert_eq!(y[(1, 0)], c(0., 1.));
    }

    #[test]
    fn dense_x_tensor_z() {
        let xz: PauliOperator = "XZ".parse().unwrap();
        assert_eq!(xz.to_dense().unwrap(), dense_x().kron(&dense_z()));
    }

    #[test]
    fn dense_limit_enforced() {
        assert!(matches!(
            PauliOperator::identity(11).to_dense(),
            Err(PauliError::TooManyQubits { .. })
        ));
    }

    #[test]
    fn literal_round_trip_and_phases() {
        for lit in ["+XYZ", "-iYY", "+iIXI", "-ZZ", "+Y"] {
            let p: PauliOperator = lit.parse().unwrap();
            assert_eq!(p.to_string(), lit);
        }
        let y: PauliOperator = "Y".parse().unwrap();
        assert_eq!(y, PauliOperator::y(1, 0));
        assert!(y.is_hermitian_order_two());
        assert!("XQ".parse::<PauliOperator>().is_err());
        assert!("-".parse::<PauliOperator>().is_err());
    }
}
