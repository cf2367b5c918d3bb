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

//! Sampled pipeline runs against the closed-form distribution.

use qshor::shor::rng::substream;
use qshor::shor::{prob_distribution, window_mass};
use qshor::{OrderFinder64, OrderFindingConfig};

const RUNS: u64 = 100_000;
const PEAKS: [usize; 6] = [0, 85, 171, 256, 341, 427];

fn within_three_se(label: &str, p: f64, count: u64, runs: u64) {
    let freq = count as f64 / runs as f64;
    let se = (p * (1.0 - p) / runs as f64).sqrt();
    assert!((freq - p).abs() <= 3.0 * se, "{label}: empirical {freq:.5} vs analytic {p:.5} (se {se:.5})");
}

#[test]
fn empirical_frequencies_match_analytic_distribution() {
    let cfg = OrderFindingConfig::new(21, 2).unwrap();
    let finder = OrderFinder64::new(cfg).unwrap();

    let mut counts = vec![0u64; 512];
    let mut given_two = vec![0u64; 512];
    let mut outcome_counts = vec![0u64; 32];
    for i in 0..RUNS {
        let res = finder.run(&mut substream(2021, i)).unwrap();
        counts[res.measured_j as usize] += 1;
        outcome_counts[res.second_register_outcome as usize] += 1;
        if res.second_register_outcome == 2 {
            given_two[res.measured_j as usize] += 1;
        }
    }

    for (k, &p) in finder.outcome_probabilities().iter().enumerate() {
        within_three_se(&format!("outcome {k}"), p, outcome_counts[k], RUNS);
    }

    // mixture over second-register outcomes
    let mut mixture = vec![0.0; 512];
    for (k, &q) in finder.outcome_probabilities().iter().enumerate() {
        if q > 0.0 {
            for (m, p) in mixture.iter_mut().zip(prob_distribution::<f64>(2, 21, 9, k as u64).unwrap()) {
                *m += q * p;
            }
        }
    }
    let as_f64: Vec<f64> = counts.iter().map(|&c| c as f64).collect();
    let mut covered = 0.0;
    for &c in &PEAKS {
        let p = window_mass(&mixture, c, 6);
        covered += p;
        within_three_se(&format!("window {c}"), p, window_mass(&as_f64, c, 6) as u64, RUNS);
    }
    let tail: u64 = RUNS - PEAKS.iter().map(|&c| window_mass(&as_f64, c, 6) as u64).sum::<u64>();
    within_three_se("tail", 1.0 - covered, tail, RUNS);
    for &c in &PEAKS {
        within_three_se(&format!("j={c}"), mixture[c], counts[c], RUNS);
    }

    let runs_two: u64 = given_two.iter().sum();
    let analytic_two = prob_distribution::<f64>(2, 21, 9, 2).unwrap();
    let two_f64: Vec<f64> = given_two.iter().map(|&c| c as f64).collect();
    for &c in &PEAKS {
        let p = window_mass(&analytic_two, c, 6);
        within_three_se(&format!("outcome 2, window {c}"), p, window_mass(&two_f64, c, 6) as u64, runs_two);
    }
    within_three_se("outcome 2, j=0", 86.0 / 512.0, given_two[0], runs_two);
}
