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

//! Real scalar abstraction for amplitudes.
//!
//! Every numeric kernel is written against [`Scalar`] so the same code runs
//! in `f32` or `f64`; the tolerance hooks carry the precision-dependent
//! thresholds.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type usable as the real part of an amplitude.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Absolute tolerance for amplitude and norm comparisons.
    fn amplitude_tolerance() -> Self;

    /// Norm deviation beyond which raw amplitudes are rejected instead of
    /// renormalized.
    fn renormalize_limit() -> Self;

    fn from_usize_lossy(value: usize) -> Self {
        Self::from_usize(value).unwrap_or_else(Self::infinity)
    }

    fn from_f64_lossy(value: f64) -> Self {
        Self::from_f64(value).unwrap_or_else(Self::nan)
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn amplitude_tolerance() -> Self {
        1e-10
    }

    fn renormalize_limit() -> Self {
        1e-6
    }
}

impl Scalar for f32 {
    fn amplitude_tolerance() -> Self {
        1e-5
    }

    fn renormalize_limit() -> Self {
        1e-3
    }
}
