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

#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use stabtool::circuit::{default_depth, random_check_matrix, Circuit, Gate};
use stabtool::dense::DenseMatrix;
use stabtool::pauli::AmplitudeVector;
use stabtool::stabiliser::check_to_amplitudes;

pub fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn random_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> AmplitudeVector {
    AmplitudeVector::new((0..1 << n).map(|_| gaussian(rng)).collect()).unwrap()
}

/// Haar-random unitary: Gram–Schmidt on a complex Gaussian matrix.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DenseMatrix {
    let dim = 1usize << n;
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v: Vec<Complex64> = (0..dim).map(|_| gaussian(rng)).collect();
        for u in &cols {
            let overlap: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, a) in v.iter_mut().zip(u) {
                *x -= overlap * a;
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            cols.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    let mut m = DenseMatrix::zeros(dim);
    for (j, c) in cols.iter().enumerate() {
        m.set_column(j, c);
    }
    m
}

pub fn random_phase<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
}

/// A random stabiliser state times a random nonzero scalar.
pub fn random_stabiliser_state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> AmplitudeVector {
    let m = random_check_matrix(n, default_depth(n), rng);
    let scale = random_phase(rng) * rng.random_range(0.5..2.0);
    check_to_amplitudes(&m).unwrap().scale(scale)
}

/// `a ≈ λ b` for the λ fixed at the largest entry of `b`; returns the max-norm residual.
pub fn distance_up_to_factor(a: &[Complex64], b: &[Complex64]) -> f64 {
    let i = (0..b.len())
        .max_by(|&i, &j| b[i].norm().total_cmp(&b[j].norm()))
        .unwrap();
    let lambda = a[i] / b[i];
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - lambda * y).norm())
        .fold(0.0, f64::max)
}

/// The 24 single-qubit Cliffords up to phase, as dense matrices, from short H/S words.
pub fn single_qubit_cliffords() -> Vec<DenseMatrix> {
    let mut found: Vec<DenseMatrix> = Vec::new();
    for len in 0..=7usize {
        for word in 0..1usize << len {
            let mut c = Circuit::new(1);
            for k in 0..len {
                c.push(if word >> k & 1 == 0 { Gate::H(0) } else { Gate::S(0) });
            }
            let m = stabtool::oracle::circuit_matrix(&c).unwrap();
            if !found
                .iter()
                .any(|f| stabtool::dense::phase_normalised_distance(f.data(), m.data()) < 1e-9)
            {
                found.push(m);
            }
        }
    }
    found
}
