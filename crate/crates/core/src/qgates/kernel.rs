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

//! Stride kernels: each gate touches every amplitude at most once and never
//! forms the full `2^q × 2^q` operator.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::qcore::{qubit_mask, DenseMatrix, StateVector};
use crate::qgates::{phase_factor, Circuit, GateKind, GateOp};
use crate::scalar::Scalar;

/// Width limit for [`circuit_to_matrix`].
pub const MAX_MATRIX_QUBITS: usize = 10;

/// Applies one gate to `state` in place.
pub fn apply_gate<T: Scalar>(state: &mut StateVector<T>, op: &GateOp) -> Result<()> {
    let n = state.num_qubits();
    op.validate(n)?;
    let t = qubit_mask(n, op.target);
    let amps = state.amplitudes_mut();
    match (op.kind, op.control) {
        (GateKind::PauliX, _) => for_pairs(amps, t, std::mem::swap),
        (GateKind::Hadamard, _) => {
            let h = T::FRAC_1_SQRT_2();
            for_pairs(amps, t, |a, b| {
                let (x, y) = (*a, *b);
                *a = (x + y) * h;
                *b = (x - y) * h;
            });
        }
        (GateKind::Phase(k), _) => scale_where(amps, t, phase_factor(k, false)),
        (GateKind::PhaseDagger(k), _) => scale_where(amps, t, phase_factor(k, true)),
        (GateKind::Cnot, Some(c)) => {
            let c = qubit_mask(n, c);
            for i in 0..amps.len() {
                if i & c != 0 && i & t == 0 {
                    amps.swap(i, i | t);
                }
            }
        }
        (GateKind::ControlledPhase(k), Some(c)) => scale_where(amps, t | qubit_mask(n, c), phase_factor(k, false)),
        (GateKind::ControlledPhaseDagger(k), Some(c)) => {
            scale_where(amps, t | qubit_mask(n, c), phase_factor(k, true))
        }
        (GateKind::Swap, Some(a)) => {
            let a = qubit_mask(n, a);
            for i in 0..amps.len() {
                if i & a != 0 && i & t == 0 {
                    amps.swap(i, i ^ a ^ t);
                }
            }
        }
        // validate() guarantees two-qubit kinds carry a control
        _ => unreachable!("validated op {op:?}"),
    }
    Ok(())
}

/// Visits every amplitude pair differing only in the bit `mask`.
#[inline]
fn for_pairs<T>(amps: &mut [Complex<T>], mask: usize, mut f: impl FnMut(&mut Complex<T>, &mut Complex<T>)) {
    for block in amps.chunks_exact_mut(mask << 1) {
        let (lo, hi) = block.split_at_mut(mask);
        for (a, b) in lo.iter_mut().zip(hi) {
            f(a, b);
        }
    }
}

/// Multiplies every amplitude whose index has all bits of `mask` set.
#[inline]
fn scale_where<T: Scalar>(amps: &mut [Complex<T>], mask: usize, factor: Complex<T>) {
    for (i, amp) in amps.iter_mut().enumerate() {
        if i & mask == mask {
            *amp = *amp * factor;
        }
    }
}

/// Applies the ops of `circuit` left to right.
pub fn apply_circuit<T: Scalar>(state: &mut StateVector<T>, circuit: &Circuit) -> Result<()> {
    if circuit.num_qubits() != state.num_qubits() {
        return Err(Error::WidthMismatch { circuit: circuit.num_qubits(), state: state.num_qubits() });
    }
    for op in circuit.ops() {
        apply_gate(state, op)?;
    }
    Ok(())
}

/// Full unitary of a circuit, column `j` being the image of `|j>`.
pub fn circuit_to_matrix<T: Scalar>(circuit: &Circuit) -> Result<DenseMatrix<T>> {
    let n = circuit.num_qubits();
    if n > MAX_MATRIX_QUBITS {
        return Err(Error::WidthGuard { num_qubits: n, max: MAX_MATRIX_QUBITS });
    }
    let dim = 1usize << n;
    let mut m = DenseMatrix::zeros(dim, dim);
    for col in 0..dim {
        let mut state = StateVector::basis(n, col)?;
        apply_circuit(&mut state, circuit)?;
        for (row, amp) in state.amplitudes().iter().enumerate() {
            m.set(row, col, *amp);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qgates::{controlled_phase_decomposition, gate_matrix, swap_circuit};

    fn run(n: usize, input: usize, ops: &[GateOp]) -> StateVector<f64> {
        let mut s = StateVector::basis(n, input).unwrap();
        apply_circuit(&mut s, &Circuit::from_ops(n, ops.iter().copied()).unwrap()).unwrap();
        s
    }

    #[test]
    fn x_on_second_qubit() {
        assert_eq!(run(2, 0b00, &[GateOp::x(2)]), StateVector::basis(2, 0b01).unwrap());
    }

    #[test]
    fn hadamard_on_zero() {
        let s = run(1, 0, &[GateOp::h(1)]);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((s.amplitude(0).re - h).abs() < 1e-15 && (s.amplitude(1).re - h).abs() < 1e-15);
    }

    #[test]
    fn cnot_truth_table() {
        for (input, output) in [(0b00, 0b00), (0b01, 0b01), (0b10, 0b11), (0b11, 0b10)] {
            assert_eq!(run(2, input, &[GateOp::cnot(1, 2)]), StateVector::basis(2, output).unwrap());
        }
    }

    #[test]
    fn cnot_entangles_superposed_control() {
        // a|00> + b|10>  ->  a|00> + b|11>
        let (a, b) = (Complex::new(0.6, 0.0), Complex::new(0.0, 0.8));
        let zero = Complex::new(0.0, 0.0);
        let mut s = StateVector::from_amplitudes(vec![a, zero, b, zero]).unwrap();
        apply_gate(&mut s, &GateOp::cnot(1, 2)).unwrap();
        assert_eq!(s.amplitudes(), &[a, zero, zero, b]);
    }

    #[test]
    fn circuit_semantics() {
        let s = run(1, 0, &[]);
        assert_eq!(s, StateVector::zero(1).unwrap());
        let s = run(1, 0, &[GateOp::h(1), GateOp::h(1)]);
        assert!(s.max_abs_diff(&StateVector::zero(1).unwrap()).unwrap() < 1e-15);
        let s = run(3, 0, &[GateOp::h(1), GateOp::h(2), GateOp::h(3)]);
        for amp in s.amplitudes() {
            assert!((amp.re - 8f64.sqrt().recip()).abs() < 1e-15 && amp.im == 0.0);
        }
        let mut wrong = StateVector::<f64>::zero(2).unwrap();
        assert!(apply_circuit(&mut wrong, &Circuit::new(3)).is_err());
        assert!(apply_gate(&mut wrong, &GateOp::h(3)).is_err());
    }

    #[test]
    fn matrix_of_single_cnot_and_empty() {
        let cnot = Circuit::from_ops(2, [GateOp::cnot(1, 2)]).unwrap();
        assert_eq!(circuit_to_matrix::<f64>(&cnot).unwrap(), gate_matrix(GateKind::Cnot));
        assert_eq!(circuit_to_matrix::<f64>(&Circuit::new(2)).unwrap(), DenseMatrix::identity(4));
        assert!(matches!(
            circuit_to_matrix::<f64>(&Circuit::new(11)),
            Err(Error::WidthGuard { num_qubits: 11, max: 10 })
        ));
    }

    #[test]
    fn swap_circuit_walkthrough() {
        let swap = swap_circuit(1, 2).unwrap();
        let mut s = StateVector::<f64>::basis(2, 0b01).unwrap();
        let expected_steps = [0b01, 0b11, 0b10];
        for (op, want) in swap.ops().iter().zip(expected_steps) {
            apply_gate(&mut s, op).unwrap();
            assert_eq!(s, StateVector::basis(2, want).unwrap());
        }
        assert_eq!(run(2, 0b00, swap.ops()), StateVector::basis(2, 0b00).unwrap());
    }

    #[test]
    fn swap_matrix_is_a_basis_permutation() {
        // Brute force over the four basis states: |ab> -> |ba>.
        let m = circuit_to_matrix::<f64>(&swap_circuit(1, 2).unwrap()).unwrap();
        for col in 0..4usize {
            let swapped = ((col & 1) << 1) | (col >> 1);
            for row in 0..4 {
                let want = if row == swapped { 1.0 } else { 0.0 };
                assert_eq!(m.get(row, col), Complex::new(want, 0.0));
            }
        }
        let single = Circuit::from_ops(2, [GateOp::swap(1, 2)]).unwrap();
        assert!(m.max_abs_diff(&circuit_to_matrix(&single).unwrap()).unwrap() < 1e-12);
    }

    #[test]
    fn controlled_phase_small_k() {
        // k = 2 oracle: R_3(c) R_3(t) CNOT R_3†(t) CNOT multiplied out by hand on
        // each basis state gives phases 1, 1, 1, e^{iπ/4}·e^{iπ/4} = i.
        let want2 = DenseMatrix::diagonal(&[
            Complex::new(1.0, 0.0),
            Complex::new(1.0, 0.0),
            Complex::new(1.0, 0.0),
            Complex::new(0.0, 1.0),
        ]);
        let m2 = circuit_to_matrix::<f64>(&controlled_phase_decomposition(2, 1, 2).unwrap()).unwrap();
        assert!(m2.max_abs_diff(&want2).unwrap() < 1e-12);
        let want1 = DenseMatrix::<f64>::from_real_rows(&[
            &[1., 0., 0., 0.],
            &[0., 1., 0., 0.],
            &[0., 0., 1., 0.],
            &[0., 0., 0., -1.],
        ])
        .unwrap();
        let m1 = circuit_to_matrix::<f64>(&controlled_phase_decomposition(1, 1, 2).unwrap()).unwrap();
        assert!(m1.max_abs_diff(&want1).unwrap() < 1e-12);
    }
}
