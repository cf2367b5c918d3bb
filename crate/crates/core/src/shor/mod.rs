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

//! Shor's algorithm: number theory, quantum order finding, the analytic
//! read-out distribution, continued fractions and the factoring driver.

mod arith;
mod distribution;
mod factor;
mod fraction;
mod order;
pub mod rng;

pub use arith::{
    ceil_log2, discrete_log, floor_log2, gcd, integer_root, is_perfect_power, is_prime, minimal_order,
    mod_exp, order_classical,
};
pub use distribution::{
    local_maxima, prob_distribution, prob_j, window_mass, CollapsedRegister, MAX_ANALYTIC_REGISTER,
};
pub use factor::{
    factor, factor_with, AttemptOutcome, AttemptRecord, ClassicalRoute, FactorOptions, FactorRunRecord,
};
pub use fraction::{continued_fraction_convergents, continued_fraction_terms, Fraction};
pub use order::{
    apply_vx, default_first_register, measure_register, order_find_quantum, prepare_state, search_order,
    vx_permutation, FinderCache, OrderFinder, OrderFindingConfig, OrderResult, OrderSearch, OrderStatus,
    SearchEnd, MAX_PIPELINE_QUBITS,
};
