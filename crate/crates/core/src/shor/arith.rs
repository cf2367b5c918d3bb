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

//! Integer number theory used around the quantum part.

use crate::error::{Error, Result};

/// Greatest common divisor by Euclid's algorithm.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    Ok(a)
}

/// `base^exp mod modulus` by repeated squaring.
pub fn mod_exp(base: u64, exp: u64, modulus: u64) -> Result<u64> {
    if modulus < 2 {
        return Err(Error::InvalidModulus { value: modulus, min: 2 });
    }
    let m = modulus as u128;
    let mut result = 1u128;
    let mut square = base as u128 % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * square % m;
        }
        square = square * square % m;
        e >>= 1;
    }
    Ok(result as u64)
}

/// Multiplicative order of `x` modulo `modulus` by direct iteration.
pub fn order_classical(x: u64, modulus: u64) -> Result<u64> {
    if modulus < 2 {
        return Err(Error::InvalidModulus { value: modulus, min: 2 });
    }
    let g = gcd(x, modulus)?;
    if g != 1 {
        return Err(Error::NotCoprime { base: x, modulus, gcd: g });
    }
    let x = x % modulus;
    let mut power = x;
    let mut r = 1;
    while power != 1 {
        power = ((power as u128 * x as u128) % modulus as u128) as u64;
        r += 1;
    }
    Ok(r)
}

/// Smallest `r` dividing `multiple` with `x^r ≡ 1`, given `x^multiple ≡ 1`.
pub fn minimal_order(x: u64, multiple: u64, modulus: u64) -> Result<u64> {
    let mut r = multiple;
    let mut p = 2;
    let mut rest = multiple;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            while r.is_multiple_of(p) && mod_exp(x, r / p, modulus)? == 1 {
                r /= p;
            }
        }
        p += 1;
    }
    if rest > 1 && r.is_multiple_of(rest) && mod_exp(x, r / rest, modulus)? == 1 {
        r /= rest;
    }
    Ok(r)
}

/// Smallest `b ≥ 0` with `x^b ≡ value (mod modulus)`.
pub fn discrete_log(x: u64, value: u64, modulus: u64) -> Result<Option<u64>> {
    let order = order_classical(x, modulus)?;
    let mut power = 1 % modulus;
    for b in 0..order {
        if power == value {
            return Ok(Some(b));
        }
        power = ((power as u128 * x as u128) % modulus as u128) as u64;
    }
    Ok(None)
}

/// `⌊n^(1/k)⌋` by binary search.
pub fn integer_root(n: u64, k: u32) -> u64 {
    if k == 0 {
        return u64::MAX;
    }
    if k == 1 || n < 2 {
        return n;
    }
    let (mut lo, mut hi) = (1u64, 1u64 << (64 / k + 1).min(63));
    // invariant: lo^k <= n < hi^k
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match mid.checked_pow(k) {
            Some(v) if v <= n => lo = mid,
            _ => hi = mid,
        }
    }
    lo
}

/// `(b, k)` with `b^k = n`, `k ≥ 2` and `b` as small as possible.
pub fn is_perfect_power(n: u64) -> Option<(u64, u32)> {
    if n < 4 {
        return None;
    }
    (2..=floor_log2(n)).rev().find_map(|k| {
        let b = integer_root(n, k);
        (b >= 2 && b.checked_pow(k) == Some(n)).then_some((b, k))
    })
}

/// Primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn floor_log2(n: u64) -> u32 {
    63 - n.max(1).leading_zeros()
}

/// `⌈log₂ n⌉`, the width needed to hold every value below `n`.
pub fn ceil_log2(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_cases() {
        assert_eq!(gcd(7, 21), Ok(7));
        assert_eq!(gcd(9, 21), Ok(3));
        assert_eq!(gcd(1, 21), Ok(1));
        assert_eq!(gcd(0, 5), Ok(5));
        assert_eq!(gcd(0, 0), Err(Error::GcdOfZeros));
    }

    #[test]
    fn mod_exp_cases() {
        assert_eq!(mod_exp(2, 4, 21), Ok(16));
        assert_eq!(mod_exp(2, 5, 21), Ok(11));
        assert_eq!(mod_exp(2, 6, 21), Ok(1));
        assert_eq!(mod_exp(17, 0, 21), Ok(1));
        assert_eq!(mod_exp(3, 1, 1), Err(Error::InvalidModulus { value: 1, min: 2 }));
        // no overflow near the top of the range
        assert_eq!(mod_exp(u64::MAX - 1, 3, u64::MAX), Ok(u64::MAX - 1));
    }

    #[test]
    fn orders_modulo_15_and_21() {
        assert_eq!(order_classical(2, 21), Ok(6));
        for x in [4, 11, 14] {
            assert_eq!(order_classical(x, 15), Ok(2));
        }
        for x in [2, 7, 8, 13] {
            assert_eq!(order_classical(x, 15), Ok(4));
        }
        assert_eq!(order_classical(3, 21), Err(Error::NotCoprime { base: 3, modulus: 21, gcd: 3 }));
    }

    #[test]
    fn minimal_order_reduces_multiples() {
        assert_eq!(minimal_order(2, 30, 21), Ok(6));
        assert_eq!(minimal_order(4, 6, 21), Ok(3));
        assert_eq!(minimal_order(2, 6, 21), Ok(6));
        assert_eq!(minimal_order(8, 98, 21), Ok(2));
    }

    #[test]
    fn discrete_logs() {
        assert_eq!(discrete_log(2, 2, 21), Ok(Some(1)));
        assert_eq!(discrete_log(2, 11, 21), Ok(Some(5)));
        assert_eq!(discrete_log(2, 1, 21), Ok(Some(0)));
        assert_eq!(discrete_log(2, 3, 21), Ok(None));
    }

    #[test]
    fn perfect_powers() {
        assert_eq!(is_perfect_power(27), Some((3, 3)));
        assert_eq!(is_perfect_power(21), None);
        assert_eq!(is_perfect_power(16), Some((2, 4)));
        assert_eq!(is_perfect_power(2), None);
        assert_eq!(is_perfect_power(1 << 62), Some((2, 62)));
        assert_eq!(is_perfect_power(3u64.pow(40)), Some((3, 40)));
    }

    #[test]
    fn perfect_power_matches_exhaustive_search() {
        for n in 2..5000u64 {
            let brute = (2..=n)
                .find_map(|b| {
                    let mut v = b * b;
                    let mut k = 2;
                    while v < n {
                        v *= b;
                        k += 1;
                    }
                    (v == n).then_some((b, k))
                });
            assert_eq!(is_perfect_power(n), brute, "n = {n}");
        }
    }

    #[test]
    fn integer_roots() {
        assert_eq!(integer_root(26, 3), 2);
        assert_eq!(integer_root(27, 3), 3);
        assert_eq!(integer_root(u64::MAX, 2), u32::MAX as u64);
        assert_eq!(integer_root(u64::MAX, 63), 2);
    }

    #[test]
    fn primes_and_logs() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(ceil_log2(21), 5);
        assert_eq!(ceil_log2(16), 4);
        assert_eq!(ceil_log2(15), 4);
        assert_eq!(floor_log2(21), 4);
    }
}
