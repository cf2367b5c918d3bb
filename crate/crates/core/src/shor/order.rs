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

//! Quantum order finding: register preparation, `V_x`, measurement, the
//! inverse QFT and the classical read-out of the measured value.

use std::collections::HashMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::{sample_index, StateVector};
use crate::qft::qft_circuit;
use crate::qgates::{apply_circuit, Circuit, GateOp};
use crate::scalar::Scalar;
use crate::shor::arith::{ceil_log2, gcd, minimal_order, mod_exp};
use crate::shor::fraction::{continued_fraction_convergents, Fraction};

/// Memory guard on `t + n` for the full pipeline.
pub const MAX_PIPELINE_QUBITS: usize = 24;

/// Parameters of one order-finding problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderFindingConfig {
    /// Modulus `N`.
    pub n_value: u64,
    /// Base `x`.
    pub x: u64,
    /// First-register width.
    pub t: usize,
    /// Second-register width, `⌈log₂ N⌉`.
    pub n: usize,
    pub seed: u64,
}

impl OrderFindingConfig {
    /// Config with the default first register: the smallest `t` with
    /// `2^t ≥ N²`.
    pub fn new(n_value: u64, x: u64) -> Result<Self> {
        if n_value < 3 {
            return Err(Error::InvalidModulus { value: n_value, min: 3 });
        }
        Self::with_registers(n_value, x, default_first_register(n_value), 0)
    }

    pub fn with_registers(n_value: u64, x: u64, t: usize, seed: u64) -> Result<Self> {
        let cfg = Self { n_value, x, t, n: ceil_log2(n_value) as usize, seed };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_first_register(self, t: usize) -> Result<Self> {
        Self::with_registers(self.n_value, self.x, t, self.seed)
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    pub fn with_base(self, x: u64) -> Result<Self> {
        Self::with_registers(self.n_value, x, self.t, self.seed)
    }

    pub fn total_qubits(&self) -> usize {
        self.t + self.n
    }

    /// `2^t`.
    pub fn first_register_size(&self) -> u64 {
        1 << self.t
    }

    pub fn validate(&self) -> Result<()> {
        let n_value = self.n_value;
        if n_value < 3 {
            return Err(Error::InvalidModulus { value: n_value, min: 3 });
        }
        if self.x <= 1 || self.x >= n_value {
            return Err(Error::BaseOutOfRange { base: self.x, modulus: n_value });
        }
        let g = gcd(self.x, n_value)?;
        if g != 1 {
            return Err(Error::NotCoprime { base: self.x, modulus: n_value, gcd: g });
        }
        if self.n != ceil_log2(n_value) as usize {
            return Err(Error::DimensionMismatch { expected: ceil_log2(n_value) as usize, found: self.n });
        }
        if self.t == 0 {
            return Err(Error::RegisterTooSmall { got: 0, min: 1 });
        }
        if self.total_qubits() > MAX_PIPELINE_QUBITS {
            return Err(Error::WidthGuard { num_qubits: self.total_qubits(), max: MAX_PIPELINE_QUBITS });
        }
        Ok(())
    }
}

/// Smallest `t` with `2^t ≥ N²`.
pub fn default_first_register(n_value: u64) -> usize {
    ceil_log2(n_value.saturating_mul(n_value)) as usize
}

/// How one measured value was interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderStatus {
    /// `j = 0` or no convergent denominator in `2..N`.
    Failed,
    /// `candidate_r` is the order of the base.
    ExactOrder,
    /// A proper divisor of the order, `x^{r₁} ≠ 1`.
    PartialFactor(u64),
}

/// Outcome of one order-finding round.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderResult {
    /// Base whose order was sought in this round.
    pub x: u64,
    pub measured_j: u64,
    /// `x^{b₀} mod N`, the value read from the second register.
    pub second_register_outcome: u64,
    pub convergents: Vec<Fraction>,
    pub candidate_r: Option<u64>,
    pub status: OrderStatus,
}

impl OrderResult {
    /// Classical post-processing of a measured `j`.
    ///
    /// Convergents of `j/2^t` with denominators `d`, `1 < d < N`, are the
    /// candidates. If some candidate satisfies `x^d ≡ 1`, the smallest such
    /// one, reduced to the least exponent dividing it, is the order.
    /// Otherwise the largest candidate is a partial factor.
    pub fn from_measurement(cfg: &OrderFindingConfig, measured_j: u64, second_register_outcome: u64) -> Result<Self> {
        let (x, n_value) = (cfg.x, cfg.n_value);
        let convergents = continued_fraction_convergents(measured_j, cfg.first_register_size())?;
        let mut candidates: Vec<u64> = if measured_j == 0 {
            Vec::new()
        } else {
            convergents.iter().map(Fraction::denominator).filter(|&d| d > 1 && d < n_value).collect()
        };
        candidates.sort_unstable();
        candidates.dedup();

        let mut exact = None;
        for &d in &candidates {
            if mod_exp(x, d, n_value)? == 1 {
                exact = Some(minimal_order(x, d, n_value)?);
                break;
            }
        }
        let (candidate_r, status) = match (exact, candidates.last()) {
            (Some(r), _) => (Some(r), OrderStatus::ExactOrder),
            (None, Some(&d)) => (Some(d), OrderStatus::PartialFactor(d)),
            (None, None) => (None, OrderStatus::Failed),
        };
        Ok(Self { x, measured_j, second_register_outcome, convergents, candidate_r, status })
    }
}

/// Destination index of every basis index under `V_x`:
/// `|j>|k> -> |j>|(k + x^j) mod N>` for `k < N`, unchanged for `k ≥ N`.
pub fn vx_permutation(x: u64, n_value: u64, t: usize, n: usize) -> Result<Vec<usize>> {
    if n_value < 2 {
        return Err(Error::InvalidModulus { value: n_value, min: 2 });
    }
    let g = gcd(x, n_value)?;
    if g != 1 {
        return Err(Error::NotCoprime { base: x, modulus: n_value, gcd: g });
    }
    if n >= 64 || (1u64 << n) < n_value {
        return Err(Error::RegisterTooSmall { got: n, min: ceil_log2(n_value) as usize });
    }
    if t + n > MAX_PIPELINE_QUBITS {
        return Err(Error::WidthGuard { num_qubits: t + n, max: MAX_PIPELINE_QUBITS });
    }
    let second = 1usize << n;
    let mut perm = Vec::with_capacity(second << t);
    let mut power = 1 % n_value;
    for j in 0..(1usize << t) {
        let base = j << n;
        for k in 0..second as u64 {
            let dest = if k < n_value { (k + power) % n_value } else { k };
            perm.push(base | dest as usize);
        }
        power = ((power as u128 * x as u128) % n_value as u128) as u64;
    }
    Ok(perm)
}

/// Applies `V_x` to a `t + n` qubit state as an amplitude permutation.
pub fn apply_vx<T: Scalar>(state: &StateVector<T>, x: u64, n_value: u64, t: usize, n: usize) -> Result<StateVector<T>> {
    if state.num_qubits() != t + n {
        return Err(Error::DimensionMismatch { expected: t + n, found: state.num_qubits() });
    }
    let perm = vx_permutation(x, n_value, t, n)?;
    let src = state.amplitudes();
    let mut out = vec![src[0] * T::zero(); src.len()];
    for (amp, &dest) in src.iter().zip(&perm) {
        out[dest] = *amp;
    }
    Ok(StateVector::from_raw(t + n, out))
}

/// Measures qubits `first..=last` and returns the outcome with the
/// collapsed, renormalized state.
pub fn measure_register<T: Scalar, R: Rng + ?Sized>(
    state: &StateVector<T>,
    first: usize,
    last: usize,
    rng: &mut R,
) -> Result<(usize, StateVector<T>)> {
    let mut collapsed = state.clone();
    let outcome = collapsed.measure_register(first, last, rng)?;
    Ok((outcome, collapsed))
}

/// `|ψ₂>`: Hadamards on the first register of `|0...0>`, then `V_x`.
pub fn prepare_state<T: Scalar>(cfg: &OrderFindingConfig) -> Result<StateVector<T>> {
    cfg.validate()?;
    let total = cfg.total_qubits();
    let mut state = StateVector::zero(total)?;
    apply_circuit(&mut state, &Circuit::from_ops(total, (1..=cfg.t).map(GateOp::h))?)?;
    apply_vx(&state, cfg.x, cfg.n_value, cfg.t, cfg.n)
}

/// Order-finding pipeline with `|ψ₂>` and the lowered inverse QFT prepared
/// once, so repeated runs only pay for measurement and the transform.
#[derive(Debug, Clone)]
pub struct OrderFinder<T> {
    config: OrderFindingConfig,
    prepared: StateVector<T>,
    outcome_probs: Vec<T>,
    inverse_qft: Circuit,
}

impl<T: Scalar> OrderFinder<T> {
    pub fn new(config: OrderFindingConfig) -> Result<Self> {
        let prepared = prepare_state(&config)?;
        let outcome_probs = prepared.marginal(config.t + 1, config.total_qubits())?;
        let inverse_qft = qft_circuit(config.t, true)?.lowered_circuit();
        Ok(Self { config, prepared, outcome_probs, inverse_qft })
    }

    pub fn config(&self) -> &OrderFindingConfig {
        &self.config
    }

    /// `|ψ₂>`.
    pub fn prepared_state(&self) -> &StateVector<T> {
        &self.prepared
    }

    /// Distribution of the second-register outcome.
    pub fn outcome_probabilities(&self) -> &[T] {
        &self.outcome_probs
    }

    /// The lowered inverse QFT on the first register.
    pub fn inverse_qft(&self) -> &Circuit {
        &self.inverse_qft
    }

    /// `|ψ₃>` for a given second-register outcome.
    pub fn collapsed_state(&self, outcome: u64) -> Result<StateVector<T>> {
        let mut state = self.prepared.clone();
        state.collapse(self.config.t + 1, self.config.total_qubits(), outcome as usize)?;
        Ok(state)
    }

    /// First register of `|ψ₄>` given the second-register outcome.
    pub fn transformed_first_register(&self, outcome: u64) -> Result<StateVector<T>> {
        let cfg = &self.config;
        let mut first = self.prepared.discard_register(cfg.t + 1, cfg.total_qubits(), outcome as usize)?;
        apply_circuit(&mut first, &self.inverse_qft)?;
        Ok(first)
    }

    /// One round: measure the second register, transform, measure `j`.
    pub fn run<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<OrderResult> {
        let outcome = sample_index(&self.outcome_probs, rng.random::<f64>()) as u64;
        let first = self.transformed_first_register(outcome)?;
        let (j, _) = measure_register(&first, 1, self.config.t, rng)?;
        OrderResult::from_measurement(&self.config, j as u64, outcome)
    }

    /// Exact distribution of `j` over the measured pipeline.
    pub fn first_register_distribution(&self) -> Result<Vec<T>> {
        let mut dist = vec![T::zero(); 1 << self.config.t];
        for (outcome, &p) in self.outcome_probs.iter().enumerate() {
            if p > T::zero() {
                let probs = self.transformed_first_register(outcome as u64)?.probabilities();
                for (d, q) in dist.iter_mut().zip(probs) {
                    *d = *d + p * q;
                }
            }
        }
        Ok(dist)
    }

    /// Distribution of `j` when the inverse QFT runs on `|ψ₂>` directly and
    /// both registers are measured only at the end.
    pub fn deferred_first_register_distribution(&self) -> Result<Vec<T>> {
        let cfg = &self.config;
        let mut state = self.prepared.clone();
        apply_circuit(&mut state, &self.inverse_qft.embedded(cfg.total_qubits(), 0)?)?;
        state.marginal(1, cfg.t)
    }
}

/// Runs the full pipeline once.
pub fn order_find_quantum<T: Scalar, R: Rng + ?Sized>(cfg: &OrderFindingConfig, rng: &mut R) -> Result<OrderResult> {
    OrderFinder::<T>::new(*cfg)?.run(rng)
}

/// Prepared pipelines keyed by base, for one modulus and register width.
#[derive(Debug, Clone)]
pub struct FinderCache<T> {
    n_value: u64,
    t: usize,
    finders: HashMap<u64, OrderFinder<T>>,
}

impl<T: Scalar> FinderCache<T> {
    pub fn new(n_value: u64, t: usize) -> Self {
        Self { n_value, t, finders: HashMap::new() }
    }

    pub fn get(&mut self, x: u64) -> Result<&OrderFinder<T>> {
        if !self.finders.contains_key(&x) {
            let cfg = OrderFindingConfig::with_registers(self.n_value, x, self.t, 0)?;
            self.finders.insert(x, OrderFinder::new(cfg)?);
        }
        Ok(&self.finders[&x])
    }
}

/// How a multi-round order search stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchEnd {
    Resolved,
    RoundFailed,
    Interrupted,
    RoundsExhausted,
}

/// Rounds of one order search for a fixed base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSearch {
    pub rounds: Vec<OrderResult>,
    /// Order of the original base when resolved.
    pub order: Option<u64>,
    /// Product of the partial factors collected so far.
    pub accumulated: u64,
    pub end: SearchEnd,
}

/// Finds the order of `x`, recursing on partial factors: after `r₁` the
/// next round seeks the order of `x^{r₁}`, and so on.
///
/// `on_partial` sees each new accumulated product and may stop the search
/// by returning `true`.
pub fn search_order<T: Scalar, R: Rng + ?Sized>(
    cache: &mut FinderCache<T>,
    x: u64,
    max_rounds: usize,
    rng: &mut R,
    mut on_partial: impl FnMut(u64) -> Result<bool>,
) -> Result<OrderSearch> {
    let n_value = cache.n_value;
    let mut rounds = Vec::new();
    let mut base = x;
    let mut acc = 1u64;
    for _ in 0..max_rounds {
        let result = cache.get(base)?.run(rng)?;
        let status = result.status;
        let candidate = result.candidate_r;
        rounds.push(result);
        match (status, candidate) {
            (OrderStatus::ExactOrder, Some(d)) => {
                let order = minimal_order(x, acc.saturating_mul(d), n_value)?;
                return Ok(OrderSearch { rounds, order: Some(order), accumulated: acc, end: SearchEnd::Resolved });
            }
            (OrderStatus::PartialFactor(d), _) => {
                acc = acc.saturating_mul(d);
                if on_partial(acc)? {
                    return Ok(OrderSearch { rounds, order: None, accumulated: acc, end: SearchEnd::Interrupted });
                }
                base = mod_exp(base, d, n_value)?;
            }
            _ => return Ok(OrderSearch { rounds, order: None, accumulated: acc, end: SearchEnd::RoundFailed }),
        }
    }
    Ok(OrderSearch { rounds, order: None, accumulated: acc, end: SearchEnd::RoundsExhausted })
}
