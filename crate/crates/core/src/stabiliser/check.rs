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

use std::fmt;

use super::{AffineSubspaceTriple, StabiliserError};
use crate::f2::{null_space_basis, rref, solve, BitMatrix, BitVector, F2Error};
use crate::pauli::PauliOperator;

/// One check-matrix row `(q | p | c)`, denoting `(-1)^c (-i)^{p·q} Z^p X^q`.
///
/// This is the conventional check-matrix sign: `c = 0` is the tensor product
/// of the letters `I, X, Y, Z` with a `+` sign. In the library's
/// `X^q Z^p` normal form the sign bit becomes `c ⊕ p·q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CheckRow {
    pub q: BitVector,
    pub p: BitVector,
    pub c: bool,
}

impl CheckRow {
    pub fn to_pauli(&self) -> PauliOperator {
        let pq = self.p.dot(&self.q);
        PauliOperator::hermitian(self.q.clone(), self.p.clone(), self.c ^ pq)
            .expect("check row halves have equal length")
    }

    /// Fails unless `pauli` squares to the identity.
    pub fn from_pauli(pauli: &PauliOperator) -> Result<Self, StabiliserError> {
        if !pauli.is_hermitian_order_two() {
            return Err(StabiliserError::InvalidCheckMatrix(format!(
                "{pauli} does not square to the identity"
            )));
        }
        let pq = pauli.p().dot(pauli.q());
        Ok(Self {
            q: pauli.q().clone(),
            p: pauli.p().clone(),
            c: pauli.c() ^ pq,
        })
    }

    /// `2n + 1` bits: `q`, then `p`, then `c`, qubit 0 first in each block.
    pub fn to_bits(&self) -> BitVector {
        let mut out = self.q.concat(&self.p).concat(&BitVector::zeros(1));
        let last = out.len() - 1;
        out.set(last, self.c);
        out
    }

    pub fn from_bits(bits: &BitVector) -> Result<Self, StabiliserError> {
        let len = bits.len();
        if len < 3 || len % 2 == 0 {
            return Err(StabiliserError::InvalidCheckMatrix(format!(
                "row of {len} bits is not of the form 2n+1"
            )));
        }
        let n = (len - 1) / 2;
        Ok(Self {
            q: bits.slice(0, n),
            p: bits.slice(n, 2 * n),
            c: bits.get(2 * n),
        })
    }
}

impl fmt::Display for CheckRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bits())
    }
}

/// `n` independent commuting order-two Paulis generating a stabiliser group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckMatrix {
    n: usize,
    rows: Vec<CheckRow>,
}

impl CheckMatrix {
    pub fn new(rows: Vec<CheckRow>) -> Result<Self, StabiliserError> {
        let invalid = |msg: String| Err(StabiliserError::InvalidCheckMatrix(msg));
        let n = rows.len();
        if n == 0 {
            return invalid("check matrix has no rows".into());
        }
        if rows.iter().any(|r| r.q.len() != n || r.p.len() != n) {
            return invalid(format!("each row must have {n} X bits and {n} Z bits"));
        }
        let paulis: Vec<PauliOperator> = rows.iter().map(CheckRow::to_pauli).collect();
        for i in 0..n {
            for j in i + 1..n {
                if !paulis[i].commutes(&paulis[j]) {
                    return invalid(format!("rows {i} and {j} anticommute"));
                }
            }
        }
        let sym = BitMatrix::from_rows(rows.iter().map(|r| r.q.concat(&r.p)).collect(), 2 * n)
            .map_err(StabiliserError::F2)?;
        if sym.rank() != n {
            return invalid("rows are linearly dependent".into());
        }
        Ok(Self { n, rows })
    }

    pub fn from_paulis(paulis: &[PauliOperator]) -> Result<Self, StabiliserError> {
        Self::new(paulis.iter().map(CheckRow::from_pauli).collect::<Result<_, _>>()?)
    }

    /// Rows given as `2n+1`-character bitstrings.
    pub fn parse_rows(rows: &[&str]) -> Result<Self, StabiliserError> {
        let rows = rows
            .iter()
            .map(|s| {
                let bits: BitVector = s.parse().map_err(StabiliserError::F2)?;
                CheckRow::from_bits(&bits)
            })
            .collect::<Result<_, _>>()?;
        Self::new(rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[CheckRow] {
        &self.rows
    }

    /// Rows as normal-form Paulis.
    pub fn paulis(&self) -> Vec<PauliOperator> {
        self.rows.iter().map(CheckRow::to_pauli).collect()
    }
}

/// Reads the affine subspace triple off a row-reduced check matrix.
pub fn check_to_triple(m: &CheckMatrix) -> Result<AffineSubspaceTriple, StabiliserError> {
    let n = m.n();
    let rows = reduce_generators(m.paulis())?;
    let k = rows.iter().take_while(|r| !r.q().is_zero()).count();
    let (xs, zs) = rows.split_at(k);

    let rho = BitMatrix::from_rows(zs.iter().map(|r| r.p().clone()).collect(), n).map_err(StabiliserError::F2)?;
    let gamma = BitVector::from_bools(&zs.iter().map(PauliOperator::c).collect::<Vec<_>>());
    let shift = match solve(&rho, &gamma) {
        Ok(z) => z,
        Err(F2Error::Inconsistent) => {
            return Err(StabiliserError::InvalidCheckMatrix(
                "Z-type rows admit no common shift".into(),
            ))
        }
        Err(e) => return Err(StabiliserError::F2(e)),
    };

    let ell: Vec<bool> = xs.iter().map(|r| r.p().dot(r.q())).collect();
    let mut qform = BitMatrix::zeros(k, k);
    for (i, ri) in xs.iter().enumerate() {
        let qz = ri.q() ^ &shift;
        qform.set(i, i, ri.c() ^ ri.p().dot(&qz));
        for (j, rj) in xs.iter().enumerate().skip(i + 1) {
            qform.set(i, j, ri.p().dot(rj.q()) ^ (ell[i] & ell[j]));
        }
    }
    AffineSubspaceTriple::new(
        n,
        xs.iter().map(|r| r.q().clone()).collect(),
        shift,
        qform,
        BitVector::from_bools(&ell),
    )
}

/// Gauss-Jordan elimination on the `(q | p)` bits of commuting generators,
/// replacing rows by exact Pauli products so the signs stay consistent.
fn reduce_generators(mut rows: Vec<PauliOperator>) -> Result<Vec<PauliOperator>, StabiliserError> {
    let n = rows.len();
    let bit = |r: &PauliOperator, col: usize| if col < n { r.q().get(col) } else { r.p().get(col - n) };
    let mut next = 0;
    for col in 0..2 * n {
        if next == n {
            break;
        }
        let Some(found) = (next..n).find(|&r| bit(&rows[r], col)) else {
            continue;
        };
        rows.swap(next, found);
        for r in 0..n {
            if r != next && bit(&rows[r], col) {
                let prod = rows[r].multiply(&rows[next]).map_err(StabiliserError::Pauli)?;
                debug_assert!(prod.is_hermitian_order_two());
                rows[r] = prod;
            }
        }
        next += 1;
    }
    if next < n {
        return Err(StabiliserError::InvalidCheckMatrix(
            "rows are linearly dependent".into(),
        ));
    }
    Ok(rows)
}

/// Builds generators for the state described by `t`.
pub fn triple_to_check(t: &AffineSubspaceTriple) -> Result<CheckMatrix, StabiliserError> {
    let n = t.n();
    let k = t.k();
    let basis = BitMatrix::from_rows(t.basis().to_vec(), n).map_err(StabiliserError::F2)?;
    let (reduced, record) = rref(&basis);
    if record.rank() != k {
        return Err(StabiliserError::InvalidTriple(
            "basis vectors are linearly dependent".into(),
        ));
    }
    let transform = record.transform;

    // New coordinates β with α = Tᵀβ: Q' = T Q̃ Tᵀ, ℓ' = T ℓ.
    let tq = transform.mul(t.qform()).map_err(StabiliserError::F2)?;
    let full = tq.mul(&transform.transpose()).map_err(StabiliserError::F2)?;
    let mut qform = BitMatrix::zeros(k, k);
    for i in 0..k {
        qform.set(i, i, full.get(i, i));
        for j in i + 1..k {
            qform.set(i, j, full.get(i, j) ^ full.get(j, i));
        }
    }
    let ell = transform.mul_vec(t.lmap()).map_err(StabiliserError::F2)?;

    let shift = t.shift();
    let mut paulis = Vec::with_capacity(n);
    for i in 0..k {
        let qi = reduced.row(i);
        let mut rhs = BitVector::zeros(k);
        for j in 0..k {
            let bit = if i == j {
                ell.get(i)
            } else {
                qform.get(i.min(j), i.max(j)) ^ (ell.get(i) & ell.get(j))
            };
            rhs.set(j, bit);
        }
        let pi = solve(&reduced, &rhs).map_err(StabiliserError::F2)?;
        let c = pi.dot(&(qi ^ shift)) ^ qform.get(i, i);
        paulis.push(PauliOperator::hermitian(qi.clone(), pi, c).map_err(StabiliserError::Pauli)?);
    }
    for rho in null_space_basis(&reduced) {
        let gamma = rho.dot(shift);
        paulis.push(PauliOperator::hermitian(BitVector::zeros(n), rho, gamma).map_err(StabiliserError::Pauli)?);
    }
    CheckMatrix::from_paulis(&paulis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn z_rows_give_all_zero_state() {
        let m = CheckMatrix::parse_rows(&["00100", "00010"]).unwrap();
        let t = check_to_triple(&m).unwrap();
        assert_eq!(t.k(), 0);
        assert_eq!(t.shift().to_string(), "00");
    }

    #[test]
    fn bell_rows() {
        let m = CheckMatrix::parse_rows(&["11000", "00110"]).unwrap();
        let t = check_to_triple(&m).unwrap();
        assert_eq!(t.basis(), &[bv("11")]);
        assert_eq!(t.shift().to_string(), "00");
        assert_eq!(t.lmap().to_string(), "0");
        assert!(t.qform().is_zero());
    }

    #[test]
    fn negative_z_flips_shift() {
        let m = CheckMatrix::parse_rows(&["00101", "00010"]).unwrap();
        let t = check_to_triple(&m).unwrap();
        assert_eq!(t.k(), 0);
        assert_eq!(t.shift().to_string(), "10");
    }

    #[test]
    fn invalid_check_matrices() {
        // X and Z on the same qubit anticommute
        assert!(CheckMatrix::parse_rows(&["10000", "00100"]).is_err());
        // dependent rows
        assert!(CheckMatrix::parse_rows(&["00100", "00100"]).is_err());
        // wrong row length
        assert!(CheckMatrix::parse_rows(&["0010", "0001"]).is_err());
    }

    #[test]
    fn row_sign_convention() {
        // (q=1, p=1, c=0) is +Y
        let row = CheckRow::from_bits(&bv("110")).unwrap();
        assert_eq!(row.to_pauli(), PauliOperator::y(1, 0));
        assert_eq!(CheckRow::from_pauli(&row.to_pauli()).unwrap(), row);
    }

    #[test]
    fn basis_state_triple_to_check() {
        let t = AffineSubspaceTriple::basis_state(bv("00"));
        let m = triple_to_check(&t).unwrap();
        let lits: Vec<String> = m.paulis().iter().map(ToString::to_string).collect();
        assert_eq!(lits, vec!["+ZI", "+IZ"]);
    }

    #[test]
    fn bell_triple_to_check() {
        let t = AffineSubspaceTriple::new(2, vec![bv("11")], bv("00"), BitMatrix::zeros(1, 1), bv("0")).unwrap();
        let m = triple_to_check(&t).unwrap();
        let lits: Vec<String> = m.paulis().iter().map(ToString::to_string).collect();
        assert_eq!(lits, vec!["+XX", "+ZZ"]);
        assert_eq!(check_to_triple(&m).unwrap(), t);
    }
}
