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

//! Quantum Fourier transform as a circuit over CNOT and one-qubit gates,
//! with the dense DFT matrix kept as an oracle.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::qcore::DenseMatrix;
use crate::qgates::{Circuit, GateOp};
use crate::scalar::Scalar;

/// Width limit for [`dft_matrix`].
pub const MAX_DFT_MATRIX_QUBITS: usize = 10;

/// A constructed QFT (or inverse QFT) circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QftPlan {
    pub num_qubits: usize,
    pub inverse: bool,
    pub include_swaps: bool,
    /// High-level circuit using `H`, controlled phases and swaps.
    pub circuit: Circuit,
    /// Length of [`lowered_circuit`](Self::lowered_circuit).
    pub elementary_gate_count: usize,
}

impl QftPlan {
    /// Builds the transform on `n` qubits.
    ///
    /// For each qubit `l` in turn: `H(l)`, then `R_k` for `k = 2..=n+1-l`
    /// controlled by qubit `l+k-1`. The result leaves the output in reverse
    /// qubit order; `include_swaps` appends the `⌊n/2⌋` swaps that restore
    /// it. The inverse reverses the op order and conjugates every phase.
    pub fn new(n: usize, inverse: bool, include_swaps: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidLength(0));
        }
        let mut circuit = Circuit::new(n);
        for l in 1..=n {
            circuit.push(GateOp::h(l))?;
            for k in 2..=(n + 1 - l) {
                circuit.push(GateOp::controlled_phase(k as u32, l + k - 1, l))?;
            }
        }
        if include_swaps {
            for i in 1..=n / 2 {
                circuit.push(GateOp::swap(i, n + 1 - i))?;
            }
        }
        if inverse {
            circuit = circuit.inverse();
        }
        let elementary_gate_count = circuit.lowered().len();
        Ok(Self { num_qubits: n, inverse, include_swaps, circuit, elementary_gate_count })
    }

    /// The same transform over CNOT and one-qubit gates.
    pub fn lowered_circuit(&self) -> Circuit {
        self.circuit.lowered()
    }
}

/// QFT (or its inverse) on `n` qubits with the output order restored.
pub fn qft_circuit(n: usize, inverse: bool) -> Result<QftPlan> {
    QftPlan::new(n, inverse, true)
}

/// Number of CNOT and one-qubit gates in the lowered `n`-qubit QFT;
/// zero for `n = 0`.
pub fn gate_count(n: usize) -> usize {
    QftPlan::new(n, false, true).map_or(0, |plan| plan.elementary_gate_count)
}

/// `exp(2πi·num/den)` with the numerator reduced modulo `den` first.
fn root_of_unity<T: Scalar>(num: u64, den: u64) -> Complex<T> {
    let frac = T::from_f64_lossy((num % den) as f64 / den as f64);
    Complex::from_polar(T::one(), (T::PI() + T::PI()) * frac)
}

/// Dense DFT on `n` qubits: entry `(j, k) = exp(2πi·jk/2^n) / √2^n`.
pub fn dft_matrix<T: Scalar>(n: usize) -> Result<DenseMatrix<T>> {
    if n == 0 || n > MAX_DFT_MATRIX_QUBITS {
        return Err(Error::WidthGuard { num_qubits: n, max: MAX_DFT_MATRIX_QUBITS });
    }
    let dim = 1usize << n;
    let norm = T::from_usize_lossy(dim).sqrt().recip();
    Ok(DenseMatrix::from_fn(dim, dim, |j, k| root_of_unity::<T>((j * k) as u64, dim as u64) * norm))
}

/// `(1/N)·Σ_{j<N} exp(2πi·jk/N)`: one when `N` divides `k`, zero otherwise.
pub fn dft_identity_sum<T: Scalar>(modulus: u64, k: i64) -> Complex<T> {
    if modulus == 0 {
        return Complex::new(T::nan(), T::nan());
    }
    let k = k.rem_euclid(modulus as i64) as u64;
    let sum = (0..modulus).fold(Complex::new(T::zero(), T::zero()), |acc, j| {
        acc + root_of_unity::<T>(((j as u128 * k as u128) % modulus as u128) as u64, modulus)
    });
    sum / T::from_f64_lossy(modulus as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qgates::{circuit_to_matrix, gate_matrix, GateKind};

    #[test]
    fn one_qubit_transform_is_hadamard() {
        let h = gate_matrix::<f64>(GateKind::Hadamard);
        assert!(dft_matrix::<f64>(1).unwrap().max_abs_diff(&h).unwrap() < 1e-15);
        let plan = qft_circuit(1, false).unwrap();
        assert_eq!(plan.circuit.ops(), &[GateOp::h(1)]);
        assert_eq!(circuit_to_matrix::<f64>(&plan.circuit).unwrap().max_abs_diff(&h).unwrap(), 0.0);
    }

    #[test]
    fn two_qubit_columns() {
        let m = dft_matrix::<f64>(2).unwrap();
        for amp in m.column(0) {
            assert!((amp - Complex::new(0.5, 0.0)).norm() < 1e-15);
        }
        let want = [(0.5, 0.0), (0.0, 0.5), (-0.5, 0.0), (0.0, -0.5)];
        for (amp, (re, im)) in m.column(1).into_iter().zip(want) {
            assert!((amp - Complex::new(re, im)).norm() < 1e-15);
        }
    }

    #[test]
    fn guards() {
        assert!(dft_matrix::<f64>(0).is_err());
        assert!(dft_matrix::<f64>(11).is_err());
        assert!(qft_circuit(0, false).is_err());
        assert_eq!(gate_count(0), 0);
    }

    #[test]
    fn small_gate_counts() {
        assert_eq!(gate_count(1), 1);
        // H, H, one lowered controlled phase (5), one lowered swap (3)
        assert_eq!(gate_count(2), 10);
        assert_eq!(gate_count(3), 21);
    }

    #[test]
    fn identity_sum_cases() {
        assert!(dft_identity_sum::<f64>(7, 1).norm() < 1e-12);
        assert!((dft_identity_sum::<f64>(7, 14) - Complex::new(1.0, 0.0)).norm() < 1e-15);
        assert!(dft_identity_sum::<f64>(4, 2).norm() < 1e-12);
        assert!((dft_identity_sum::<f64>(5, -10) - Complex::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn inverse_plan_is_structural() {
        let fwd = qft_circuit(3, false).unwrap();
        let inv = qft_circuit(3, true).unwrap();
        assert_eq!(inv.circuit, fwd.circuit.inverse());
        assert_eq!(inv.elementary_gate_count, fwd.elementary_gate_count);
        assert!(inv.lowered_circuit().is_elementary());
    }
}
