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

//! Dense state-vector quantum circuit simulation and Shor's factoring
//! algorithm.
//!
//! The crate is organized bottom-up:
//!
//! - [`qcore`]: complex amplitudes, state vectors, small dense matrices,
//!   tensor/inner/outer products and unitarity checks.
//! - [`qgates`]: the gate catalog, a circuit IR with a line-oriented text
//!   format, and stride kernels that apply 1- and 2-qubit gates in place.
//! - [`qft`]: the quantum Fourier transform as a circuit over CNOT and
//!   one-qubit gates, plus the dense DFT matrix used as an oracle.
//! - [`shor`]: number theory, the modular exponentiation permutation,
//!   register measurement, the order-finding pipeline, continued fractions
//!   and the factoring driver.
//!
//! All numeric code is generic over [`Scalar`] (`f32` or `f64`). The
//! `*64`/`*32` aliases below fix the precision.
//!
//! Qubits are numbered from 1 and the basis ordering is big-endian: qubit 1
//! is the most significant bit of a basis index.
//!
//! ```
//! let record = qshor::factor(21, 7, 32).unwrap();
//! assert_eq!(record.factors, Some((3, 7)));
//!
//! let p0: f64 = qshor::prob_j(2, 21, 9, 2, 0).unwrap();
//! assert!((p0 - 86.0 / 512.0).abs() < 1e-12);
//! ```

pub mod error;
pub mod qcore;
pub mod qft;
pub mod qgates;
pub mod scalar;
pub mod shor;

pub use error::{Error, Result};
pub use num_complex::Complex;
pub use scalar::Scalar;

pub use qcore::{
    inner_product, is_product_state_2q, is_unitary, outer_product, tensor_product, DenseMatrix,
    StateVector,
};
pub use qft::{dft_identity_sum, dft_matrix, gate_count, qft_circuit, QftPlan};
pub use qgates::{
    apply_circuit, apply_gate, circuit_to_matrix, controlled_phase_decomposition, gate_matrix,
    swap_circuit, Circuit, GateKind, GateOp,
};
pub use shor::{
    continued_fraction_convergents, factor, gcd, is_perfect_power, measure_register, mod_exp,
    order_classical, order_find_quantum, prob_j, FactorRunRecord, Fraction, OrderFinder,
    OrderFindingConfig, OrderResult, OrderStatus,
};

pub type ComplexScalar64 = Complex<f64>;
pub type StateVector64 = StateVector<f64>;
pub type DenseMatrix64 = DenseMatrix<f64>;
pub type OrderFinder64 = OrderFinder<f64>;

pub type ComplexScalar32 = Complex<f32>;
pub type StateVector32 = StateVector<f32>;
pub type DenseMatrix32 = DenseMatrix<f32>;
pub type OrderFinder32 = OrderFinder<f32>;
