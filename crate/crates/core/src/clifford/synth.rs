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

use super::{is_valid_tableau, CliffordError, CliffordMatrix, Tableau};
use crate::f2::GrayCode;
use crate::pauli::IndexMasks;
use crate::stabiliser::{check_to_amplitudes, CheckMatrix, ZERO_TOLERANCE};

/// Builds the dense matrix of the Clifford gate with tableau `t`.
///
/// Column 0 is the common +1 eigenvector of the `U_i`; every other column is
/// one `V_j` application away from its Gray-code predecessor. The global phase
/// makes the first nonzero entry of column 0 positive real.
pub fn tableau_to_matrix(t: &Tableau) -> Result<CliffordMatrix, CliffordError> {
    if !is_valid_tableau(t) {
        return Err(CliffordError::InvalidTableau("conjugate-tuple relations fail".into()));
    }
    let n = t.n();
    let check = CheckMatrix::from_paulis(&t.us()).map_err(|e| CliffordError::InvalidTableau(e.to_string()))?;
    let mut u0 = check_to_amplitudes(&check)?.into_entries();
    let max = u0.iter().map(|a| a.norm()).fold(0.0, f64::max);
    let lead = u0
        .iter()
        .copied()
        .find(|a| a.norm() > ZERO_TOLERANCE * max)
        .expect("eigenvector is nonzero");
    let fix = lead.conj() / lead.norm();
    for a in &mut u0 {
        *a *= fix;
    }

    let dim = u0.len();
    let masks: Vec<IndexMasks> = t.rows().iter().map(|r| r.v.masks()).collect();
    let mut columns = vec![Complex64::new(0.0, 0.0); dim * dim];
    columns[..dim].copy_from_slice(&u0);
    let mut z = 0usize;
    for (_, flipped) in GrayCode::new(n) {
        let Some(b) = flipped else { continue };
        let next = z ^ (1 << b);
        let (src, dst) = if next > z {
            let (lo, hi) = columns.split_at_mut(next * dim);
            (&lo[z * dim..(z + 1) * dim], &mut hi[..dim])
        } else {
            let (lo, hi) = columns.split_at_mut(z * dim);
            (&hi[..dim], &mut lo[next * dim..(next + 1) * dim])
        };
        masks[n - 1 - b].apply_into(src, dst);
        z = next;
    }
    Ok(CliffordMatrix::from_column_major(n, columns))
}
