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

use proptest::prelude::*;
use stabtool::f2::{gray_sequence, invert, null_space_basis, right_pseudoinverse, rref, solve, BitMatrix, BitVector};

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(any::<bool>(), c), r))
}

fn to_matrix(rows: &[Vec<bool>]) -> BitMatrix {
    BitMatrix::from_bools(rows).unwrap()
}

/// Schoolbook product, independent of the packed implementation.
fn schoolbook(a: &BitMatrix, b: &BitMatrix) -> Vec<Vec<bool>> {
    (0..a.row_count())
        .map(|i| {
            (0..b.col_count())
                .map(|j| (0..a.col_count()).fold(false, |acc, k| acc ^ (a.get(i, k) & b.get(k, j))))
                .collect()
        })
        .collect()
}

fn dense(m: &BitMatrix) -> Vec<Vec<bool>> {
    (0..m.row_count())
        .map(|i| (0..m.col_count()).map(|j| m.get(i, j)).collect())
        .collect()
}

proptest! {
    #[test]
    fn rref_transform_reproduces_result(rows in matrix(10, 20)) {
        let a = to_matrix(&rows);
        let (r, record) = rref(&a);
        prop_assert_eq!(schoolbook(&record.transform, &a), dense(&r));
        prop_assert_eq!(invert(&record.transform).is_ok(), true);
        prop_assert!(record.pivot_columns.windows(2).all(|w| w[0] < w[1]));
        let (again, _) = rref(&r);
        prop_assert_eq!(again, r);
    }

    #[test]
    fn rref_is_reduced(rows in matrix(10, 20)) {
        let (r, record) = rref(&to_matrix(&rows));
        for (i, &p) in record.pivot_columns.iter().enumerate() {
            prop_assert!(r.get(i, p));
            prop_assert!((0..i).chain(i + 1..r.row_count()).all(|k| !r.get(k, p)));
            prop_assert!((0..p).all(|j| !r.get(i, j)));
        }
        prop_assert!((record.rank()..r.row_count()).all(|i| r.row(i).is_zero()));
    }

    #[test]
    fn kernel_is_spanned_exactly(rows in matrix(8, 12)) {
        let a = to_matrix(&rows);
        let basis = null_space_basis(&a);
        for x in &basis {
            prop_assert!(a.mul_vec(x).unwrap().is_zero());
        }
        prop_assert_eq!(basis.len(), a.col_count() - a.rank());
        let cols = a.col_count();
        let kernel_size = (0..1u64 << cols)
            .filter(|&w| a.mul_vec(&BitVector::from_word(w, cols)).unwrap().is_zero())
            .count();
        prop_assert_eq!(kernel_size, 1usize << basis.len());
    }

    #[test]
    fn solve_finds_a_solution_when_one_exists(rows in matrix(8, 12), x in prop::collection::vec(any::<bool>(), 12)) {
        let a = to_matrix(&rows);
        let x = BitVector::from_bools(&x[..a.col_count()]);
        let b = a.mul_vec(&x).unwrap();
        let y = solve(&a, &b).unwrap();
        prop_assert_eq!(a.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn inverse_is_two_sided(rows in (1..=10usize).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(any::<bool>(), n), n))) {
        let a = to_matrix(&rows);
        match invert(&a) {
            Ok(inv) => {
                let n = a.row_count();
                prop_assert_eq!(a.mul(&inv).unwrap(), BitMatrix::identity(n));
                prop_assert_eq!(inv.mul(&a).unwrap(), BitMatrix::identity(n));
                prop_assert_eq!(invert(&inv).unwrap(), a);
            }
            Err(_) => prop_assert!(a.rank() < a.row_count()),
        }
    }

    #[test]
    fn right_inverse_when_rows_independent(rows in matrix(8, 16)) {
        let a = to_matrix(&rows);
        match right_pseudoinverse(&a) {
            Ok(p) => prop_assert_eq!(a.mul(&p).unwrap(), BitMatrix::identity(a.row_count())),
            Err(_) => prop_assert!(a.rank() < a.row_count()),
        }
    }

    #[test]
    fn addition_is_self_inverse(bits in prop::collection::vec(any::<bool>(), 1..200)) {
        let v = BitVector::from_bools(&bits);
        prop_assert!((&v ^ &v).is_zero());
        prop_assert_eq!(v.to_string().parse::<BitVector>().unwrap(), v);
    }
}

#[test]
fn gray_sequence_visits_everything_once() {
    for k in 0..=10 {
        let seq = gray_sequence(k);
        assert_eq!(seq.len(), 1 << k);
        let mut seen: Vec<String> = seq.iter().map(|(v, _)| v.to_string()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 1 << k);
        for w in seq.windows(2) {
            assert_eq!((&w[0].0 ^ &w[1].0).weight(), 1);
        }
    }
}
