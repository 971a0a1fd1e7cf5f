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

mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stabtool::f2::BitVector;
use stabtool::oracle;
use stabtool::pauli::{AmplitudeVector, PauliOperator, Phase};
use stabtool::stabiliser::{
    amplitudes_to_check, amplitudes_to_triple, check_to_amplitudes, check_to_triple, triple_to_check,
    verify_stabiliser_vector, StateRejection,
};

use common::*;

fn pauli(n: usize) -> impl Strategy<Value = PauliOperator> {
    (
        prop::collection::vec(any::<bool>(), n),
        prop::collection::vec(any::<bool>(), n),
        0..4u32,
    )
        .prop_map(|(q, p, k)| {
            let (c, d) = Phase::from_exponent(k).bits();
            PauliOperator::new(BitVector::from_bools(&q), BitVector::from_bools(&p), c, d).unwrap()
        })
}

fn pauli_pair() -> impl Strategy<Value = (PauliOperator, PauliOperator)> {
    (1..=3usize).prop_flat_map(|n| (pauli(n), pauli(n)))
}

fn vector(n: usize) -> impl Strategy<Value = AmplitudeVector> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1 << n)
        .prop_map(|v| AmplitudeVector::new(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap())
}

proptest! {
    #[test]
    fn product_matches_dense_product((a, b) in pauli_pair()) {
        let ab = a.multiply(&b).unwrap().to_dense().unwrap();
        let dense = a.to_dense().unwrap().mul(&b.to_dense().unwrap());
        prop_assert!(ab.max_abs_diff(&dense) == 0.0);
    }

    #[test]
    fn reversed_product_differs_by_symplectic_sign((a, b) in pauli_pair()) {
        let ab = a.multiply(&b).unwrap();
        let ba = b.multiply(&a).unwrap();
        let sign = if a.symplectic_form(&b) { Phase::MINUS_ONE } else { Phase::ONE };
        prop_assert_eq!(ab, ba.times(sign));
    }

    #[test]
    fn order_two_paulis_are_involutions(p in pauli(3), v in vector(3)) {
        let p = PauliOperator::hermitian(p.q().clone(), p.p().clone(), p.c()).unwrap();
        let back = p.apply(&p.apply(&v).unwrap()).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn apply_is_linear(p in pauli(3), v in vector(3), w in vector(3), a in (-2.0..2.0f64, -2.0..2.0f64)) {
        let alpha = Complex64::new(a.0, a.1);
        let sum = AmplitudeVector::new(v.entries().iter().zip(w.entries()).map(|(x, y)| alpha * x + y).collect()).unwrap();
        let lhs = p.apply(&sum).unwrap();
        let pv = p.apply(&v).unwrap();
        let pw = p.apply(&w).unwrap();
        let rhs = AmplitudeVector::new(pv.entries().iter().zip(pw.entries()).map(|(x, y)| alpha * x + y).collect()).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn apply_matches_dense(p in pauli(4), v in vector(4)) {
        let dense = p.to_dense().unwrap().mul_vec(v.entries());
        let fast = p.apply(&v).unwrap();
        prop_assert!(fast.entries().iter().zip(&dense).all(|(a, b)| a == b));
    }

    #[test]
    fn literals_round_trip(p in (1..=6usize).prop_flat_map(pauli)) {
        prop_assert_eq!(p.to_string().parse::<PauliOperator>().unwrap(), p);
    }

    #[test]
    fn state_round_trips(seed in any::<u64>(), n in 1..=8usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_stabiliser_state(n, &mut rng);
        let (t, factor) = amplitudes_to_triple(&v).unwrap();
        // S1 → S2 → S1 with the returned factor is exact
        let direct = t.to_amplitudes_scaled(factor).unwrap();
        prop_assert!(direct.max_abs_diff(&v) <= 1e-10);
        let t2 = check_to_triple(&triple_to_check(&t).unwrap()).unwrap();
        let a = t.to_amplitudes().unwrap();
        let b = t2.to_amplitudes().unwrap();
        prop_assert!(distance_up_to_factor(a.entries(), b.entries()) <= 1e-10);
    }

    #[test]
    fn support_is_the_affine_subspace(seed in any::<u64>(), n in 1..=6usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_stabiliser_state(n, &mut rng);
        let (t, _) = amplitudes_to_triple(&v).unwrap();
        let a = t.to_amplitudes().unwrap();
        let basis: Vec<usize> = t.basis().iter().map(stabtool::pauli::index_of).collect();
        let shift = stabtool::pauli::index_of(t.shift());
        let mut span = vec![shift];
        for b in basis {
            let more: Vec<usize> = span.iter().map(|z| z ^ b).collect();
            span.extend(more);
        }
        span.sort();
        let support: Vec<usize> = (0..a.entries().len()).filter(|&z| a.entries()[z].norm() > 0.0).collect();
        prop_assert_eq!(support, span);
    }

    #[test]
    fn acceptance_is_scale_invariant(seed in any::<u64>(), n in 1..=5usize, re in -3.0..3.0f64, im in -3.0..3.0f64) {
        prop_assume!(re.abs() + im.abs() > 1e-3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = Complex64::new(re, im);
        let v = random_stabiliser_state(n, &mut rng);
        prop_assert!(verify_stabiliser_vector(&v.scale(s)).is_accepted());
        let w = random_vector(n, &mut rng);
        prop_assert_eq!(
            verify_stabiliser_vector(&w).is_accepted(),
            verify_stabiliser_vector(&w.scale(s)).is_accepted()
        );
    }

    #[test]
    fn check_rows_fix_the_state(seed in any::<u64>(), n in 1..=8usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_stabiliser_state(n, &mut rng);
        for p in amplitudes_to_check(&v).unwrap().paulis() {
            prop_assert!(p.apply(&v).unwrap().max_abs_diff(&v) < 1e-12);
        }
    }

    #[test]
    fn fast_and_brute_agree_on_random_vectors(seed in any::<u64>(), n in 1..=5usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vector(n, &mut rng);
        prop_assert_eq!(verify_stabiliser_vector(&v).is_accepted(), oracle::brute_is_stabiliser(&v).unwrap());
    }

    #[test]
    fn check_matrix_state_matches_projector(seed in any::<u64>(), n in 1..=5usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = stabtool::circuit::random_check_matrix(n, 10 * n, &mut rng);
        let fast = check_to_amplitudes(&m).unwrap();
        let brute = oracle::brute_state_from_generators(&m.paulis()).unwrap().unwrap();
        prop_assert!(stabtool::dense::phase_normalised_distance(fast.entries(), brute.entries()) < 1e-10);
    }
}

#[test]
fn bell_brute_group_matches_check_rows() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let v = AmplitudeVector::from_real(&[h, 0.0, 0.0, h]).unwrap();
    let group = oracle::brute_stabiliser_group(&v).unwrap();
    for g in amplitudes_to_check(&v).unwrap().paulis() {
        assert!(group.contains(&g));
    }
}

#[test]
fn rejection_reasons_on_fixtures() {
    let s = 8f64.sqrt().recip();
    let mut e = [s; 8];
    e[7] = -s;
    let d = verify_stabiliser_vector(&AmplitudeVector::from_real(&e).unwrap());
    assert_eq!(d.failure_reason, Some(StateRejection::AmplitudeInconsistent));
    let d = verify_stabiliser_vector(&AmplitudeVector::from_real(&[1.0, 1.0, 1.0, 0.0]).unwrap());
    assert_eq!(d.failure_reason, Some(StateRejection::SupportSizeNotPowerOfTwo));
    let d = verify_stabiliser_vector(&AmplitudeVector::zeros(2));
    assert_eq!(d.failure_reason, Some(StateRejection::ZeroVector));
}
