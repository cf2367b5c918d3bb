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

use num_complex::Complex;
use rand::Rng;

use crate::error::{Error, Result};
use crate::qcore::DenseMatrix;
use crate::scalar::Scalar;

/// Largest register this simulator will allocate.
pub const MAX_QUBITS: usize = 28;

/// Bit mask of `qubit` (1-based) inside an index over `num_qubits` qubits.
///
/// Qubit 1 is the most significant bit.
#[inline]
pub fn qubit_mask(num_qubits: usize, qubit: usize) -> usize {
    1 << (num_qubits - qubit)
}

/// Dense vector of `2^q` amplitudes with unit norm.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    num_qubits: usize,
    amps: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    /// The all-zeros basis state `|0...0>`.
    pub fn zero(num_qubits: usize) -> Result<Self> {
        Self::basis(num_qubits, 0)
    }

    /// The computational basis state `|index>`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        check_width(num_qubits)?;
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(Error::DimensionMismatch { expected: dim, found: index });
        }
        let mut amps = vec![Complex::new(T::zero(), T::zero()); dim];
        amps[index] = Complex::new(T::one(), T::zero());
        Ok(Self { num_qubits, amps })
    }

    /// Builds a state from raw amplitudes.
    ///
    /// A norm within [`Scalar::amplitude_tolerance`] of 1 is accepted as is,
    /// a norm within [`Scalar::renormalize_limit`] is renormalized, and
    /// anything further off is rejected.
    pub fn from_amplitudes(amps: Vec<Complex<T>>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidLength(len));
        }
        let num_qubits = len.trailing_zeros() as usize;
        check_width(num_qubits)?;
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut state = Self { num_qubits, amps };
        let norm = state.norm_sqr().sqrt();
        let deviation = (norm - T::one()).abs();
        if deviation > T::renormalize_limit() {
            return Err(Error::NotNormalized { norm: norm.to_f64_lossy() });
        }
        if deviation > T::amplitude_tolerance() {
            state.scale(norm.recip());
        }
        Ok(state)
    }

    /// Product state of single-qubit states `(a_i, b_i)`, qubit 1 first.
    pub fn from_qubits(qubits: &[(Complex<T>, Complex<T>)]) -> Result<Self> {
        let mut amps = vec![Complex::new(T::one(), T::zero())];
        for &(a, b) in qubits {
            amps = amps.iter().flat_map(|&c| [c * a, c * b]).collect();
        }
        Self::from_amplitudes(amps)
    }

    pub(crate) fn from_raw(num_qubits: usize, amps: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(amps.len(), 1 << num_qubits);
        Self { num_qubits, amps }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex<T>] {
        &mut self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex<T> {
        self.amps[index]
    }

    pub fn into_amplitudes(self) -> Vec<Complex<T>> {
        self.amps
    }

    /// Sum of squared magnitudes.
    pub fn norm_sqr(&self) -> T {
        self.amps.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    /// Measurement probabilities in the computational basis.
    pub fn probabilities(&self) -> Vec<T> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// `<self|ket>`.
    pub fn inner(&self, ket: &Self) -> Result<Complex<T>> {
        if self.num_qubits != ket.num_qubits {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: ket.dim() });
        }
        Ok(self
            .amps
            .iter()
            .zip(&ket.amps)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (b, k)| acc + b.conj() * k))
    }

    /// `|self> ⊗ |other>`, with `self` occupying the leading qubits.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let num_qubits = self.num_qubits + other.num_qubits;
        check_width(num_qubits)?;
        let amps = self
            .amps
            .iter()
            .flat_map(|&a| other.amps.iter().map(move |&b| a * b))
            .collect();
        Ok(Self { num_qubits, amps })
    }

    /// The state as a `2^q × 1` column matrix.
    pub fn to_column(&self) -> DenseMatrix<T> {
        DenseMatrix::from_entries(self.dim(), 1, self.amps.clone())
            .expect("column shape matches amplitude count")
    }

    /// Largest entrywise distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<T> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .fold(T::zero(), |m, (a, b)| m.max((a - b).norm())))
    }

    /// Value held by the contiguous register `first..=last` in basis index
    /// `index`, read big-endian.
    pub fn register_value(&self, index: usize, first: usize, last: usize) -> usize {
        let width = last - first + 1;
        (index >> (self.num_qubits - last)) & ((1 << width) - 1)
    }

    fn check_range(&self, first: usize, last: usize) -> Result<()> {
        if first == 0 || first > last {
            return Err(Error::InvalidRange { first, last });
        }
        if last > self.num_qubits {
            return Err(Error::QubitOutOfRange { qubit: last, num_qubits: self.num_qubits });
        }
        Ok(())
    }

    /// Outcome distribution of the register `first..=last`, summing over all
    /// other qubits.
    pub fn marginal(&self, first: usize, last: usize) -> Result<Vec<T>> {
        self.check_range(first, last)?;
        let mut probs = vec![T::zero(); 1 << (last - first + 1)];
        for (index, amp) in self.amps.iter().enumerate() {
            let value = self.register_value(index, first, last);
            probs[value] = probs[value] + amp.norm_sqr();
        }
        Ok(probs)
    }

    /// Projects onto `register = value` and renormalizes.
    ///
    /// Returns the probability of that outcome; the state is left untouched
    /// when the probability is zero.
    pub fn collapse(&mut self, first: usize, last: usize, value: usize) -> Result<T> {
        self.check_range(first, last)?;
        let shift = self.num_qubits - last;
        let mask = (1 << (last - first + 1)) - 1;
        let prob = self
            .amps
            .iter()
            .enumerate()
            .filter(|(index, _)| (index >> shift) & mask == value)
            .fold(T::zero(), |acc, (_, amp)| acc + amp.norm_sqr());
        if prob > T::zero() {
            let scale = prob.sqrt().recip();
            for (index, amp) in self.amps.iter_mut().enumerate() {
                if (index >> shift) & mask == value {
                    *amp = *amp * scale;
                } else {
                    *amp = Complex::new(T::zero(), T::zero());
                }
            }
        }
        Ok(prob)
    }

    /// Measures the register `first..=last` in the computational basis.
    ///
    /// The outcome is drawn from [`marginal`](Self::marginal) and the state
    /// collapses onto it.
    pub fn measure_register<R: Rng + ?Sized>(
        &mut self,
        first: usize,
        last: usize,
        rng: &mut R,
    ) -> Result<usize> {
        let probs = self.marginal(first, last)?;
        let outcome = sample_index(&probs, rng.random::<f64>());
        self.collapse(first, last, outcome)?;
        Ok(outcome)
    }

    /// State of the remaining qubits once `first..=last` is known to hold
    /// `value`, renormalized. The measured register is removed from the
    /// result, which keeps the relative order of the other qubits.
    pub fn discard_register(&self, first: usize, last: usize, value: usize) -> Result<Self> {
        self.check_range(first, last)?;
        let width = last - first + 1;
        let rest = self.num_qubits - width;
        if rest == 0 {
            return Err(Error::InvalidRange { first, last });
        }
        let low_bits = self.num_qubits - last;
        let low_mask = (1 << low_bits) - 1;
        let amps: Vec<_> = (0..1usize << rest)
            .map(|reduced| {
                let high = reduced >> low_bits;
                let low = reduced & low_mask;
                let index = (((high << width) | value) << low_bits) | low;
                self.amps[index]
            })
            .collect();
        let norm = amps.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr()).sqrt();
        if norm == T::zero() {
            return Err(Error::NotNormalized { norm: 0.0 });
        }
        let scale = norm.recip();
        Ok(Self { num_qubits: rest, amps: amps.into_iter().map(|a| a * scale).collect() })
    }

    pub(crate) fn scale(&mut self, factor: T) {
        for amp in &mut self.amps {
            *amp = *amp * factor;
        }
    }
}

/// Index `i` such that the cumulative sum of `probs` first exceeds `u`.
///
/// Rounding can leave `u` past the final cumulative value; the last index
/// with nonzero weight is returned in that case.
pub(crate) fn sample_index<T: Scalar>(probs: &[T], u: f64) -> usize {
    let mut acc = 0.0;
    let mut last_nonzero = 0;
    for (i, p) in probs.iter().enumerate() {
        let p = p.to_f64_lossy();
        if p > 0.0 {
            last_nonzero = i;
            acc += p;
            if u < acc {
                return i;
            }
        }
    }
    last_nonzero
}

fn check_width(num_qubits: usize) -> Result<()> {
    if num_qubits == 0 {
        return Err(Error::InvalidLength(1));
    }
    if num_qubits > MAX_QUBITS {
        return Err(Error::WidthGuard { num_qubits, max: MAX_QUBITS });
    }
    Ok(())
}
