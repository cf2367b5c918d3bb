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

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::shor::arith::gcd;

/// Non-negative rational in lowest terms, kept as exact integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    numerator: u64,
    denominator: u64,
}

impl Fraction {
    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidFraction { numerator, denominator });
        }
        let g = gcd(numerator, denominator)?;
        Ok(Self { numerator: numerator / g, denominator: denominator / g })
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { line: 1, message: format!("bad fraction '{s}'") };
        let (n, d) = s.split_once('/').ok_or_else(bad)?;
        Fraction::new(n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Partial quotients `[a0; a1, ..., ap]` of `num/den`.
pub fn continued_fraction_terms(num: u64, den: u64) -> Vec<u64> {
    let mut terms = Vec::new();
    let (mut p, mut q) = (num, den);
    while q != 0 {
        terms.push(p / q);
        (p, q) = (q, p % q);
    }
    terms
}

/// Convergents `[a0], [a0; a1], ...` of `j/q`; the last one is `j/q` in
/// lowest terms.
pub fn continued_fraction_convergents(j: u64, q: u64) -> Result<Vec<Fraction>> {
    if q == 0 || j >= q {
        return Err(Error::InvalidFraction { numerator: j, denominator: q });
    }
    // h_i = a_i h_{i-1} + h_{i-2}, k_i likewise; consecutive h/k are coprime.
    let (mut h_prev, mut h) = (0u128, 1u128);
    let (mut k_prev, mut k) = (1u128, 0u128);
    continued_fraction_terms(j, q)
        .into_iter()
        .map(|a| {
            let a = a as u128;
            (h_prev, h) = (h, a * h + h_prev);
            (k_prev, k) = (k, a * k + k_prev);
            Fraction::new(h as u64, k as u64)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: u64, d: u64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn lowest_terms_and_text() {
        let f = frac(42, 12);
        assert_eq!((f.numerator(), f.denominator()), (7, 2));
        assert_eq!(f.to_string(), "7/2");
        assert_eq!("85/512".parse::<Fraction>().unwrap(), frac(85, 512));
        assert!("1/0".parse::<Fraction>().is_err());
        assert!("x".parse::<Fraction>().is_err());
        assert_eq!(serde_json::to_string(&frac(1, 6)).unwrap(), "\"1/6\"");
        assert_eq!(serde_json::from_str::<Fraction>("\"2/4\"").unwrap(), frac(1, 2));
    }

    #[test]
    fn expansion_of_85_over_512() {
        assert_eq!(continued_fraction_terms(85, 512), [0, 6, 42, 2]);
        assert_eq!(
            continued_fraction_convergents(85, 512).unwrap(),
            [frac(0, 1), frac(1, 6), frac(42, 253), frac(85, 512)]
        );
    }

    #[test]
    fn zero_numerator() {
        assert_eq!(continued_fraction_convergents(0, 512).unwrap(), [frac(0, 1)]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(continued_fraction_convergents(512, 512).is_err());
        assert!(continued_fraction_convergents(0, 0).is_err());
    }
}
