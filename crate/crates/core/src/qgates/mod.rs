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

//! Gate catalog, circuit IR and in-place gate application.
//!
//! Qubit indices are 1-based. Two-qubit gate matrices are written in
//! (control, target) tensor order, so `CNOT(1 → 2)` on a two-qubit register
//! has exactly the textbook 4×4 matrix.

mod circuit;
mod kernel;

pub use circuit::Circuit;
pub use kernel::{apply_circuit, apply_gate, circuit_to_matrix, MAX_MATRIX_QUBITS};

use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::qcore::DenseMatrix;
use crate::scalar::Scalar;

/// Largest `k` accepted for `R_k`; the controlled form lowers to `R_{k+1}`.
pub const MAX_PHASE_INDEX: u32 = 62;

/// Gate kinds understood by the simulator.
///
/// `Phase(k)` is `R_k = diag(1, exp(2πi/2^k))`; the `Dagger` variants carry
/// the conjugate phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    PauliX,
    Hadamard,
    Phase(u32),
    PhaseDagger(u32),
    Cnot,
    ControlledPhase(u32),
    ControlledPhaseDagger(u32),
    Swap,
}

impl GateKind {
    /// Number of qubits the gate acts on.
    pub fn arity(self) -> usize {
        match self {
            GateKind::PauliX | GateKind::Hadamard | GateKind::Phase(_) | GateKind::PhaseDagger(_) => 1,
            _ => 2,
        }
    }

    pub fn mnemonic(self) -> &'static str {
        match self {
            GateKind::PauliX => "X",
            GateKind::Hadamard => "H",
            GateKind::Phase(_) => "P",
            GateKind::PhaseDagger(_) => "PD",
            GateKind::Cnot => "CX",
            GateKind::ControlledPhase(_) => "CP",
            GateKind::ControlledPhaseDagger(_) => "CPD",
            GateKind::Swap => "SW",
        }
    }

    pub fn phase_index(self) -> Option<u32> {
        match self {
            GateKind::Phase(k)
            | GateKind::PhaseDagger(k)
            | GateKind::ControlledPhase(k)
            | GateKind::ControlledPhaseDagger(k) => Some(k),
            _ => None,
        }
    }

    /// The inverse gate.
    pub fn dagger(self) -> Self {
        match self {
            GateKind::Phase(k) => GateKind::PhaseDagger(k),
            GateKind::PhaseDagger(k) => GateKind::Phase(k),
            GateKind::ControlledPhase(k) => GateKind::ControlledPhaseDagger(k),
            GateKind::ControlledPhaseDagger(k) => GateKind::ControlledPhase(k),
            other => other,
        }
    }

    /// Member of the universal set {CNOT, one-qubit gates}.
    pub fn is_elementary(self) -> bool {
        self.arity() == 1 || self == GateKind::Cnot
    }
}

/// `exp(±2πi/2^k)`, negative for the dagger variants.
pub(crate) fn phase_factor<T: Scalar>(k: u32, dagger: bool) -> Complex<T> {
    let two = T::one() + T::one();
    let angle = (two * T::PI()) / two.powi(k as i32);
    Complex::from_polar(T::one(), if dagger { -angle } else { angle })
}

/// One gate applied to specific qubits.
///
/// Single-qubit gates have no control. For `Swap` the two exchanged qubits
/// are stored in `control` and `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GateOp {
    pub kind: GateKind,
    pub target: usize,
    pub control: Option<usize>,
}

impl GateOp {
    pub fn new(kind: GateKind, control: Option<usize>, target: usize) -> Self {
        Self { kind, target, control }
    }

    pub fn x(target: usize) -> Self {
        Self::new(GateKind::PauliX, None, target)
    }

    pub fn h(target: usize) -> Self {
        Self::new(GateKind::Hadamard, None, target)
    }

    pub fn phase(k: u32, target: usize) -> Self {
        Self::new(GateKind::Phase(k), None, target)
    }

    pub fn phase_dagger(k: u32, target: usize) -> Self {
        Self::new(GateKind::PhaseDagger(k), None, target)
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Self::new(GateKind::Cnot, Some(control), target)
    }

    pub fn controlled_phase(k: u32, control: usize, target: usize) -> Self {
        Self::new(GateKind::ControlledPhase(k), Some(control), target)
    }

    pub fn controlled_phase_dagger(k: u32, control: usize, target: usize) -> Self {
        Self::new(GateKind::ControlledPhaseDagger(k), Some(control), target)
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Self::new(GateKind::Swap, Some(a), b)
    }

    pub fn dagger(self) -> Self {
        Self { kind: self.kind.dagger(), ..self }
    }

    /// Highest qubit index referenced by the op.
    pub fn max_qubit(&self) -> usize {
        self.control.map_or(self.target, |c| c.max(self.target))
    }

    /// Checks operand shape and that all indices fit in `num_qubits`.
    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        if let Some(k) = self.kind.phase_index() {
            if k == 0 || k > MAX_PHASE_INDEX {
                return Err(Error::InvalidPhaseIndex { k, max: MAX_PHASE_INDEX });
            }
        }
        let arity = self.kind.arity();
        if (arity == 2) != self.control.is_some() {
            return Err(Error::GateArity { gate: self.kind.mnemonic(), expected: arity });
        }
        for q in std::iter::once(self.target).chain(self.control) {
            if q == 0 || q > num_qubits {
                return Err(Error::QubitOutOfRange { qubit: q, num_qubits });
            }
        }
        if self.control == Some(self.target) {
            return Err(Error::SameQubit(self.target));
        }
        Ok(())
    }

    /// Rewrites the op over CNOT and one-qubit gates.
    ///
    /// Controlled phases use two CNOTs and three phase gates; swaps use three
    /// CNOTs. Elementary ops are returned unchanged.
    pub fn lower(&self) -> Vec<GateOp> {
        match (self.kind, self.control) {
            (GateKind::ControlledPhase(k), Some(c)) => cphase_lowering(k, c, self.target, false),
            (GateKind::ControlledPhaseDagger(k), Some(c)) => cphase_lowering(k, c, self.target, true),
            (GateKind::Swap, Some(a)) => {
                let b = self.target;
                vec![GateOp::cnot(a, b), GateOp::cnot(b, a), GateOp::cnot(a, b)]
            }
            _ => vec![*self],
        }
    }
}

fn cphase_lowering(k: u32, control: usize, target: usize, dagger: bool) -> Vec<GateOp> {
    let (half, half_inv) = if dagger {
        (GateKind::PhaseDagger(k + 1), GateKind::Phase(k + 1))
    } else {
        (GateKind::Phase(k + 1), GateKind::PhaseDagger(k + 1))
    };
    vec![
        GateOp::new(half, None, control),
        GateOp::new(half, None, target),
        GateOp::cnot(control, target),
        GateOp::new(half_inv, None, target),
        GateOp::cnot(control, target),
    ]
}

impl fmt::Display for GateOp {
    /// `GATE k control target`, with `-` for absent fields.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.kind.phase_index().map_or_else(|| "-".to_string(), |k| k.to_string());
        let control = self.control.map_or_else(|| "-".to_string(), |c| c.to_string());
        write!(f, "{} {} {} {}", self.kind.mnemonic(), k, control, self.target)
    }
}

/// Unitary matrix of a gate kind: 2×2 for one-qubit gates, 4×4 in
/// (control, target) order for two-qubit gates.
pub fn gate_matrix<T: Scalar>(kind: GateKind) -> DenseMatrix<T> {
    let one = Complex::new(T::one(), T::zero());
    let entries = |rows: &[f64]| -> Vec<Complex<T>> {
        rows.iter().map(|&v| Complex::new(T::from_f64_lossy(v), T::zero())).collect()
    };
    match kind {
        GateKind::PauliX => DenseMatrix::from_entries(2, 2, entries(&[0., 1., 1., 0.])),
        GateKind::Hadamard => {
            let h = Complex::new(T::FRAC_1_SQRT_2(), T::zero());
            DenseMatrix::from_entries(2, 2, vec![h, h, h, -h])
        }
        GateKind::Phase(k) => Ok(DenseMatrix::diagonal(&[one, phase_factor(k, false)])),
        GateKind::PhaseDagger(k) => Ok(DenseMatrix::diagonal(&[one, phase_factor(k, true)])),
        GateKind::Cnot => DenseMatrix::from_entries(
            4,
            4,
            entries(&[1., 0., 0., 0., 0., 1., 0., 0., 0., 0., 0., 1., 0., 0., 1., 0.]),
        ),
        GateKind::ControlledPhase(k) => Ok(DenseMatrix::diagonal(&[one, one, one, phase_factor(k, false)])),
        GateKind::ControlledPhaseDagger(k) => {
            Ok(DenseMatrix::diagonal(&[one, one, one, phase_factor(k, true)]))
        }
        GateKind::Swap => DenseMatrix::from_entries(
            4,
            4,
            entries(&[1., 0., 0., 0., 0., 0., 1., 0., 0., 1., 0., 0., 0., 0., 0., 1.]),
        ),
    }
    .expect("literal gate matrices are well formed")
}

/// The three-CNOT swap of qubits `a` and `b`.
pub fn swap_circuit(a: usize, b: usize) -> Result<Circuit> {
    if a == b {
        return Err(Error::SameQubit(a));
    }
    Circuit::from_ops(a.max(b), GateOp::swap(a, b).lower())
}

/// Controlled-`R_k` over CNOT and one-qubit gates:
/// `R_{k+1}(c)`, `R_{k+1}(t)`, `CNOT(c→t)`, `R_{k+1}†(t)`, `CNOT(c→t)`.
pub fn controlled_phase_decomposition(k: u32, control: usize, target: usize) -> Result<Circuit> {
    if control == target {
        return Err(Error::SameQubit(control));
    }
    let op = GateOp::controlled_phase(k, control, target);
    op.validate(control.max(target))?;
    Circuit::from_ops(control.max(target), op.lower())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::is_unitary;

    #[test]
    fn catalog_matrices() {
        let x = gate_matrix::<f64>(GateKind::PauliX);
        assert_eq!(x, DenseMatrix::from_real_rows(&[&[0., 1.], &[1., 0.]]).unwrap());
        let cnot = gate_matrix::<f64>(GateKind::Cnot);
        assert_eq!(
            cnot,
            DenseMatrix::from_real_rows(&[
                &[1., 0., 0., 0.],
                &[0., 1., 0., 0.],
                &[0., 0., 0., 1.],
                &[0., 0., 1., 0.]
            ])
            .unwrap()
        );
        let r1 = gate_matrix::<f64>(GateKind::Phase(1));
        assert!(r1.max_abs_diff(&DenseMatrix::from_real_rows(&[&[1., 0.], &[0., -1.]]).unwrap()).unwrap() < 1e-15);
        let r2 = gate_matrix::<f64>(GateKind::Phase(2));
        assert!((r2.get(1, 1) - Complex::new(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn every_kind_is_unitary() {
        let kinds = [
            GateKind::PauliX,
            GateKind::Hadamard,
            GateKind::Phase(3),
            GateKind::PhaseDagger(5),
            GateKind::Cnot,
            GateKind::ControlledPhase(4),
            GateKind::ControlledPhaseDagger(2),
            GateKind::Swap,
        ];
        for kind in kinds {
            assert!(is_unitary(&gate_matrix::<f64>(kind), 1e-12).unwrap(), "{kind:?}");
            let dag = gate_matrix::<f64>(kind.dagger());
            assert!(dag.max_abs_diff(&gate_matrix::<f64>(kind).adjoint()).unwrap() < 1e-15);
        }
    }

    #[test]
    fn op_validation() {
        assert!(GateOp::h(3).validate(3).is_ok());
        assert_eq!(GateOp::h(4).validate(3), Err(Error::QubitOutOfRange { qubit: 4, num_qubits: 3 }));
        assert_eq!(GateOp::h(0).validate(3), Err(Error::QubitOutOfRange { qubit: 0, num_qubits: 3 }));
        assert_eq!(GateOp::cnot(2, 2).validate(3), Err(Error::SameQubit(2)));
        assert_eq!(
            GateOp::new(GateKind::Cnot, None, 1).validate(3),
            Err(Error::GateArity { gate: "CX", expected: 2 })
        );
        assert_eq!(
            GateOp::phase(0, 1).validate(1),
            Err(Error::InvalidPhaseIndex { k: 0, max: MAX_PHASE_INDEX })
        );
    }

    #[test]
    fn decomposition_shapes() {
        let c = controlled_phase_decomposition(3, 1, 2).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.ops().iter().filter(|op| op.kind == GateKind::Cnot).count(), 2);
        assert_eq!(c.ops().iter().filter(|op| op.kind.arity() == 1).count(), 3);
        assert_eq!(controlled_phase_decomposition(3, 2, 2), Err(Error::SameQubit(2)));
        let s = swap_circuit(1, 2).unwrap();
        assert_eq!(s.ops(), &[GateOp::cnot(1, 2), GateOp::cnot(2, 1), GateOp::cnot(1, 2)]);
        assert_eq!(swap_circuit(4, 4), Err(Error::SameQubit(4)));
    }

    #[test]
    fn display_format() {
        assert_eq!(GateOp::controlled_phase(3, 1, 4).to_string(), "CP 3 1 4");
        assert_eq!(GateOp::h(2).to_string(), "H - - 2");
        assert_eq!(GateOp::swap(1, 4).to_string(), "SW - 1 4");
    }
}
