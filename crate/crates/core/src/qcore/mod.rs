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

//! Complex linear algebra substrate: state vectors, small dense matrices
//! and the products between them.

mod matrix;
mod state;

pub use matrix::DenseMatrix;
pub use state::{qubit_mask, StateVector, MAX_QUBITS};

pub(crate) use state::sample_index;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Kronecker product `a ⊗ b`; block `(i, j)` of the result is `a[i][j]·b`.
pub fn tensor_product<T: Scalar>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> DenseMatrix<T> {
    let (br, bc) = (b.rows(), b.cols());
    DenseMatrix::from_fn(a.rows() * br, a.cols() * bc, |i, j| {
        a.get(i / br, j / bc) * b.get(i % br, j % bc)
    })
}

/// `<bra|ket>`.
pub fn inner_product<T: Scalar>(bra: &StateVector<T>, ket: &StateVector<T>) -> Result<Complex<T>> {
    bra.inner(ket)
}

/// `|ket><bra|`, entry `(i, j) = ket[i]·conj(bra[j])`.
pub fn outer_product<T: Scalar>(ket: &StateVector<T>, bra: &StateVector<T>) -> DenseMatrix<T> {
    let (k, b) = (ket.amplitudes(), bra.amplitudes());
    DenseMatrix::from_fn(k.len(), b.len(), |i, j| k[i] * b[j].conj())
}

/// Whether `m†m` is within `tol` of the identity in max-norm.
pub fn is_unitary<T: Scalar>(m: &DenseMatrix<T>, tol: T) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let gram = m.adjoint().matmul(m)?;
    Ok(gram.max_abs_diff(&DenseMatrix::identity(m.rows()))? <= tol)
}

/// Two-qubit separability test: `αδ = βγ` for amplitudes ordered
/// `|00>, |01>, |10>, |11>`.
pub fn is_product_state_2q<T: Scalar>(s: &StateVector<T>) -> Result<bool> {
    if s.num_qubits() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: s.num_qubits() });
    }
    let a = s.amplitudes();
    Ok((a[0] * a[3] - a[1] * a[2]).norm() <= T::amplitude_tolerance())
}
