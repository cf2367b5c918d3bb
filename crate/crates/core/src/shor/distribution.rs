// Copyright 2026 The qshor Authors
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

//! Closed-form distribution of the first-register reading.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::shor::arith::{discrete_log, gcd, order_classical};

/// Largest first register accepted by the closed form.
pub const MAX_ANALYTIC_REGISTER: usize = 30;

/// First register of `|ψ₃>` as an arithmetic progression
/// `b₀, b₀ + r, ..., b₀ + (M-1)r` below `2^t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CollapsedRegister {
    pub order: u64,
    pub offset: u64,
    pub terms: u64,
    pub t: usize,
}

impl CollapsedRegister {
    pub fn new(x: u64, n_value: u64, t: usize, outcome: u64) -> Result<Self> {
        if n_value < 3 {
            return Err(Error::InvalidModulus { value: n_value, min: 3 });
        }
        if x <= 1 || x >= n_value {
            return Err(Error::BaseOutOfRange { base: x, modulus: n_value });
        }
        let g = gcd(x, n_value)?;
        if g != 1 {
            return Err(Error::NotCoprime { base: x, modulus: n_value, gcd: g });
        }
        if t == 0 || t > MAX_ANALYTIC_REGISTER {
            return Err(Error::WidthGuard { num_qubits: t, max: MAX_ANALYTIC_REGISTER });
        }
        let order = order_classical(x, n_value)?;
        let offset = discrete_log(x, outcome, n_value)?
            .filter(|&b| b < 1 << t)
            .ok_or(Error::NotAPower { outcome, base: x, modulus: n_value })?;
        let terms = ((1u64 << t) - offset).div_ceil(order);
        Ok(Self { order, offset, terms, t })
    }

    /// `1/(2^t·M)·|Σ_{a<M} exp(-2πi·r·j·a/2^t)|²`.
    pub fn prob<T: Scalar>(&self, j: u64) -> T {
        let q = 1u64 << self.t;
        let step = (self.order as u128 * j as u128 % q as u128) as u64;
        let (mut re, mut im) = (0.0f64, 0.0f64);
        let mut phase = 0u64;
        for _ in 0..self.terms {
            let angle = -std::f64::consts::TAU * phase as f64 / q as f64;
            re += angle.cos();
            im += angle.sin();
            phase = (phase + step) % q;
        }
        T::from_f64_lossy((re * re + im * im) / (q as f64 * self.terms as f64))
    }

    pub fn distribution<T: Scalar>(&self) -> Vec<T> {
        (0..1u64 << self.t).map(|j| self.prob(j)).collect()
    }
}

/// Probability of reading `j` after the inverse QFT, given the second
/// register read `outcome`.
pub fn prob_j<T: Scalar>(x: u64, n_value: u64, t: usize, outcome: u64, j: u64) -> Result<T> {
    let reg = CollapsedRegister::new(x, n_value, t, outcome)?;
    if j >= 1 << t {
        return Err(Error::InvalidFraction { numerator: j, denominator: 1 << t });
    }
    Ok(reg.prob(j))
}

/// [`prob_j`] for every `j` in `0..2^t`.
pub fn prob_distribution<T: Scalar>(x: u64, n_value: u64, t: usize, outcome: u64) -> Result<Vec<T>> {
    Ok(CollapsedRegister::new(x, n_value, t, outcome)?.distribution())
}

/// Indices that are strict local maxima of `probs`, treating the ends as
/// neighbours of nothing.
pub fn local_maxima<T: Scalar>(probs: &[T], min_prob: T) -> Vec<usize> {
    (0..probs.len())
        .filter(|&j| {
            let p = probs[j];
            p >= min_prob
                && (j == 0 || probs[j - 1] < p)
                && (j + 1 == probs.len() || probs[j + 1] <= p)
        })
        .collect()
}

/// Mass within `±radius` of `center`, wrapping around the register.
pub fn window_mass<T: Scalar>(probs: &[T], center: usize, radius: usize) -> T {
    let len = probs.len();
    (0..=2 * radius)
        .map(|d| probs[(center + len + d - radius % len) % len])
        .fold(T::zero(), |a, b| a + b)
}
