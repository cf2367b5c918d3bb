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

use thiserror::Error;

/// Errors produced by the simulator and the factoring pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("amplitude array of length {0} is not a power of two >= 2")]
    InvalidLength(usize),

    #[error("non-finite amplitude")]
    NonFinite,

    #[error("state norm {norm} is too far from 1 to renormalize")]
    NotNormalized { norm: f64 },

    #[error("qubit {qubit} out of range 1..={num_qubits}")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },

    #[error("control and target are both qubit {0}")]
    SameQubit(usize),

    #[error("gate {gate} expects {expected} qubit operand(s)")]
    GateArity { gate: &'static str, expected: usize },

    #[error("phase index k must be in 1..={max}, got {k}")]
    InvalidPhaseIndex { k: u32, max: u32 },

    #[error("invalid register range {first}..={last}")]
    InvalidRange { first: usize, last: usize },

    #[error("{num_qubits} qubits exceeds the limit of {max}")]
    WidthGuard { num_qubits: usize, max: usize },

    #[error("circuit width {circuit} does not match state width {state}")]
    WidthMismatch { circuit: usize, state: usize },

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("modulus must be at least {min}, got {value}")]
    InvalidModulus { value: u64, min: u64 },

    #[error("base {base} must satisfy 1 < x < {modulus}")]
    BaseOutOfRange { base: u64, modulus: u64 },

    #[error("{base} is not coprime to {modulus} (gcd = {gcd})")]
    NotCoprime { base: u64, modulus: u64, gcd: u64 },

    #[error("{0} is not composite")]
    NotComposite(u64),

    #[error("{outcome} is not a power of {base} modulo {modulus}")]
    NotAPower { outcome: u64, base: u64, modulus: u64 },

    #[error("first register needs at least {min} qubits, got {got}")]
    RegisterTooSmall { got: usize, min: usize },

    #[error("fraction {numerator}/{denominator} is invalid")]
    InvalidFraction { numerator: u64, denominator: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
