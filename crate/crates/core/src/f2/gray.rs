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

use super::BitVector;

/// Binary-reflected Gray code over `k` bits, starting at zero.
///
/// Yields `(codeword, flipped)` where `flipped` is the bit that changed from
/// the previous codeword (`None` for the first). Codeword bit `i` is bit `i`
/// of the integer, so `k = 2` runs `00, 01, 11, 10`.
#[derive(Clone, Debug)]
pub struct GrayCode {
    step: u64,
    len: u64,
}

impl GrayCode {
    pub fn new(k: usize) -> Self {
        assert!(k < 64, "Gray code over {k} bits does not fit a word");
        Self {
            step: 0,
            len: 1u64 << k,
        }
    }
}

impl Iterator for GrayCode {
    type Item = (u64, Option<usize>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.step >= self.len {
            return None;
        }
        let i = self.step;
        self.step += 1;
        let flipped = (i > 0).then(|| i.trailing_zeros() as usize);
        Some((i ^ (i >> 1), flipped))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.len - self.step) as usize;
        (rem, Some(rem))
    }
}

impl ExactSizeIterator for GrayCode {}

/// All `2^k` Gray codewords as bit vectors of length `k`.
pub fn gray_sequence(k: usize) -> Vec<(BitVector, Option<usize>)> {
    GrayCode::new(k).map(|(w, f)| (BitVector::from_word(w, k), f)).collect()
}
