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

//! The factoring driver and its audit record.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::shor::arith::{floor_log2, gcd, is_perfect_power, is_prime, mod_exp};
use crate::shor::order::{default_first_register, search_order, FinderCache, OrderResult, SearchEnd};
use crate::shor::rng::substream;

/// Knobs for [`factor_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorOptions {
    pub max_attempts: usize,
    /// Use this base on every attempt instead of drawing one.
    pub forced_x: Option<u64>,
    /// First-register width; defaults to the smallest `t` with `2^t ≥ N²`.
    pub t: Option<usize>,
}

impl Default for FactorOptions {
    fn default() -> Self {
        Self { max_attempts: 32, forced_x: None, t: None }
    }
}

/// Shortcut taken before any quantum step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicalRoute {
    Even,
    PerfectPower { base: u64, exponent: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AttemptOutcome {
    /// `gcd(x, N) > 1`.
    SharedFactor,
    /// Split from `x^{r/2} ± 1` with `r` the order.
    Factored,
    /// Split from `x^{R/2} ± 1` with `R` an accumulated partial order.
    FactoredFromPartial,
    OddOrder,
    /// `x^{r/2} ≡ -1 (mod N)`.
    TrivialRoot,
    RoundFailed,
    RoundsExhausted,
}

/// One choice of `x` and the rounds spent on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttemptRecord {
    pub x: u64,
    pub gcd: u64,
    pub rounds: Vec<OrderResult>,
    pub order: Option<u64>,
    /// `x^{r/2} mod N` for the exponent used in the split.
    pub y: Option<u64>,
    pub outcome: AttemptOutcome,
}

/// Full trace of a factoring run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRunRecord {
    pub n_value: u64,
    pub seed: u64,
    pub max_attempts: usize,
    pub t: usize,
    pub classical_route: Option<ClassicalRoute>,
    pub attempts: Vec<AttemptRecord>,
    pub rounds_used: usize,
    pub factors: Option<(u64, u64)>,
    pub success: bool,
}

impl FactorRunRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record is always serializable")
    }

    /// Bases tried, in order.
    pub fn bases(&self) -> Vec<u64> {
        self.attempts.iter().map(|a| a.x).collect()
    }

    fn finish(mut self, factors: Option<(u64, u64)>) -> Self {
        self.rounds_used = self.attempts.iter().map(|a| a.rounds.len()).sum();
        self.factors = factors.map(|(a, b)| (a.min(b), a.max(b)));
        self.success = factors.is_some();
        self
    }
}

/// Nontrivial split of `n_value` from `gcd(y ∓ 1, N)`.
fn split(y: u64, n_value: u64) -> Result<Option<(u64, u64)>> {
    for candidate in [(y + n_value - 1) % n_value, (y + 1) % n_value] {
        let g = gcd(candidate, n_value)?;
        if g > 1 && g < n_value {
            return Ok(Some((g, n_value / g)));
        }
    }
    Ok(None)
}

/// Factors `n_value` with default options and double precision.
pub fn factor(n_value: u64, seed: u64, max_attempts: usize) -> Result<FactorRunRecord> {
    factor_with::<f64>(n_value, seed, &FactorOptions { max_attempts, ..FactorOptions::default() })
}

/// Factors a composite `n_value`.
///
/// Even and perfect-power inputs are split classically. Otherwise each
/// attempt draws `x` from its own random stream, checks `gcd(x, N)`, then
/// searches for the order of `x`, recursing on partial factors for at most
/// `⌊log₂ N⌋` extra rounds. An even accumulated exponent `R` is tried at
/// once through `gcd(x^{R/2} ± 1, N)`. A failed round ends the attempt.
/// Running out of attempts yields a record with `success = false`.
pub fn factor_with<T: Scalar>(n_value: u64, seed: u64, opts: &FactorOptions) -> Result<FactorRunRecord> {
    if n_value < 4 {
        return Err(Error::InvalidModulus { value: n_value, min: 4 });
    }
    if is_prime(n_value) {
        return Err(Error::NotComposite(n_value));
    }
    if let Some(x) = opts.forced_x {
        if x <= 1 || x >= n_value {
            return Err(Error::BaseOutOfRange { base: x, modulus: n_value });
        }
    }
    let t = opts.t.unwrap_or_else(|| default_first_register(n_value));
    let mut record = FactorRunRecord {
        n_value,
        seed,
        max_attempts: opts.max_attempts,
        t,
        classical_route: None,
        attempts: Vec::new(),
        rounds_used: 0,
        factors: None,
        success: false,
    };

    if n_value.is_multiple_of(2) {
        record.classical_route = Some(ClassicalRoute::Even);
        return Ok(record.finish(Some((2, n_value / 2))));
    }
    if let Some((base, exponent)) = is_perfect_power(n_value) {
        record.classical_route = Some(ClassicalRoute::PerfectPower { base, exponent });
        return Ok(record.finish(Some((base, n_value / base))));
    }

    let mut cache = FinderCache::<T>::new(n_value, t);
    let max_rounds = floor_log2(n_value) as usize + 1;
    for index in 0..opts.max_attempts {
        let mut rng = substream(seed, index as u64);
        let x = match opts.forced_x {
            Some(x) => x,
            None => rng.random_range(2..n_value),
        };
        let g = gcd(x, n_value)?;
        if g > 1 {
            let attempt = AttemptRecord {
                x,
                gcd: g,
                rounds: Vec::new(),
                order: None,
                y: None,
                outcome: AttemptOutcome::SharedFactor,
            };
            record.attempts.push(attempt);
            return Ok(record.finish(Some((g, n_value / g))));
        }

        let mut shortcut = None;
        let search = search_order(&mut cache, x, max_rounds, &mut rng, |acc| {
            if acc % 2 == 0 {
                let y = mod_exp(x, acc / 2, n_value)?;
                if let Some(pair) = split(y, n_value)? {
                    shortcut = Some((y, pair));
                    return Ok(true);
                }
            }
            Ok(false)
        })?;

        let mut attempt = AttemptRecord {
            x,
            gcd: g,
            rounds: search.rounds,
            order: search.order,
            y: None,
            outcome: AttemptOutcome::RoundFailed,
        };
        let mut found = None;
        match (search.end, search.order) {
            (SearchEnd::Resolved, Some(r)) if r % 2 == 1 => attempt.outcome = AttemptOutcome::OddOrder,
            (SearchEnd::Resolved, Some(r)) => {
                let y = mod_exp(x, r / 2, n_value)?;
                attempt.y = Some(y);
                if y == n_value - 1 {
                    attempt.outcome = AttemptOutcome::TrivialRoot;
                } else {
                    // y ≢ ±1, so one of the two gcds is nontrivial
                    found = split(y, n_value)?;
                    attempt.outcome = AttemptOutcome::Factored;
                }
            }
            (SearchEnd::Interrupted, _) => {
                let (y, pair) = shortcut.expect("interrupted searches record a split");
                attempt.y = Some(y);
                found = Some(pair);
                attempt.outcome = AttemptOutcome::FactoredFromPartial;
            }
            (SearchEnd::RoundsExhausted, _) => attempt.outcome = AttemptOutcome::RoundsExhausted,
            _ => {}
        }
        record.attempts.push(attempt);
        if found.is_some() {
            return Ok(record.finish(found));
        }
    }
    Ok(record.finish(None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_routes() {
        let even = factor(12, 0, 4).unwrap();
        assert_eq!(even.factors, Some((2, 6)));
        assert_eq!(even.classical_route, Some(ClassicalRoute::Even));
        assert!(even.attempts.is_empty());
        let power = factor(27, 0, 4).unwrap();
        assert_eq!(power.factors, Some((3, 9)));
        assert!(matches!(factor(13, 0, 4), Err(Error::NotComposite(13))));
        assert!(matches!(factor(3, 0, 4), Err(Error::InvalidModulus { .. })));
    }

    #[test]
    fn forced_base_for_21() {
        let opts = FactorOptions { forced_x: Some(2), ..FactorOptions::default() };
        for seed in 0..20 {
            let rec = factor_with::<f64>(21, seed, &opts).unwrap();
            assert_eq!(rec.factors, Some((3, 7)), "seed {seed}");
            assert!(rec.bases().iter().all(|&x| x == 2));
        }
    }

    #[test]
    fn shared_factor_base() {
        let opts = FactorOptions { forced_x: Some(9), ..FactorOptions::default() };
        let rec = factor_with::<f64>(21, 0, &opts).unwrap();
        assert_eq!(rec.factors, Some((3, 7)));
        assert_eq!(rec.attempts[0].outcome, AttemptOutcome::SharedFactor);
        assert_eq!(rec.rounds_used, 0);
    }

    #[test]
    fn exhausted_attempts_are_a_record() {
        let rec = factor(21, 5, 0).unwrap();
        assert!(!rec.success);
        assert_eq!(rec.factors, None);
    }

    #[test]
    fn json_field_names() {
        let rec = factor(15, 1, 8).unwrap();
        let v: serde_json::Value = serde_json::from_str(&rec.to_json()).unwrap();
        for key in ["n_value", "seed", "attempts", "factors", "rounds_used", "success"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["factors"], serde_json::json!([3, 5]));
        let back: FactorRunRecord = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
    }
}
