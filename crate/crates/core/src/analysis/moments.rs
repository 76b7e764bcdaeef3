//! Moments `∫ xᵏ f(x) dx` with a truncation-aware notion of "vanishing".

use std::f64::consts::PI;

use rustfft::num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::numerics::{integrate, SampledSignal};

/// Floor of the truncation-aware tolerance.
pub const MOMENT_TOLERANCE_FLOOR: f64 = 1e-6;
/// Multiple of the truncation bound accepted as "zero".
pub const TRUNCATION_FACTOR: f64 = 10.0;

/// Identity linking moments and the Fourier transform at the origin.
pub const SPECTRAL_IDENTITY: &str = "psi_hat^(k)(0) = (-j)^k * integral x^k psi(x) dx";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentReport {
    /// `moments[k] ≈ ∫ xᵏ f(x) dx` over the grid span.
    pub moments: Vec<f64>,
    /// Estimate of the part of `∫ xᵏ f` lost outside the grid.
    pub truncation_bound: Vec<f64>,
    /// Threshold each moment was compared against.
    pub tolerance: Vec<f64>,
    /// Largest `n` with `|moments[k]| < tolerance[k]` for every `k < n`.
    pub vanishing_count: usize,
    pub spectral_identity: String,
}

/// How [`moments`] decides that a moment vanishes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MomentTolerance {
    /// The same absolute threshold for every order.
    Absolute(f64),
    /// `max(1e-6, 10 × truncation_bound[k])`.
    TruncationAware,
}

/// `(edge |x|ᵏ) · (edge |f|) · span`, the larger of the two grid ends.
///
/// For a tail `|f| ~ C/|x|^p` this is the order of magnitude of
/// `∫_{|x| > edge} xᵏ f`, the part of the moment the grid cannot see.
fn truncation_bound(f: &SampledSignal, k: u32) -> f64 {
    let v = f.values();
    let g = f.grid();
    let left = g.x_min().abs().powi(k as i32) * v[0].abs();
    let right = g.x_max().abs().powi(k as i32) * v[v.len() - 1].abs();
    left.max(right) * g.span()
}

pub fn moments(f: &SampledSignal, k_max: u32, tolerance: MomentTolerance) -> MomentReport {
    let mut moments = Vec::with_capacity(k_max as usize + 1);
    let mut bounds = Vec::with_capacity(k_max as usize + 1);
    let mut tols = Vec::with_capacity(k_max as usize + 1);
    for k in 0..=k_max {
        let weighted = f
            .times_power(k)
            .unwrap_or_else(|_| SampledSignal::zeros(*f.grid()));
        moments.push(integrate(&weighted));
        let b = truncation_bound(f, k);
        bounds.push(b);
        tols.push(match tolerance {
            MomentTolerance::Absolute(t) => t,
            MomentTolerance::TruncationAware => MOMENT_TOLERANCE_FLOOR.max(TRUNCATION_FACTOR * b),
        });
    }
    let vanishing_count = moments
        .iter()
        .zip(&tols)
        .take_while(|(m, t)| m.abs() < **t)
        .count();
    MomentReport {
        moments,
        truncation_bound: bounds,
        tolerance: tols,
        vanishing_count,
        spectral_identity: SPECTRAL_IDENTITY.into(),
    }
}

/// `f̂(ω) = Σ f(xₙ) e^{-jωxₙ} h` evaluated directly at one frequency.
fn fourier_at(f: &SampledSignal, omega: f64) -> Complex64 {
    let h = f.grid().step();
    f.iter()
        .map(|(x, v)| Complex64::from_polar(v * h, -omega * x))
        .sum()
}

/// Central finite-difference estimates of `f̂⁽ᵏ⁾(0)`, `k = 0..=k_max`.
///
/// The k-th estimate is `δ⁻ᵏ Σᵢ (-1)ⁱ C(k, i) f̂((k/2 - i) δ)`, accurate to
/// `O(δ²)`. Compare against `(-j)ᵏ moments[k]`.
pub fn fourier_derivatives_at_zero(f: &SampledSignal, k_max: u32, delta: f64) -> Vec<Complex64> {
    (0..=k_max)
        .map(|k| {
            let mut binom = 1.0;
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..=k {
                let w = (k as f64 / 2.0 - i as f64) * delta;
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                acc += fourier_at(f, w) * (sign * binom);
                binom = binom * (k - i) as f64 / (i + 1) as f64;
            }
            acc / delta.powi(k as i32)
        })
        .collect()
}

/// `(-j)ᵏ m`, the value the identity predicts for `f̂⁽ᵏ⁾(0)`.
pub fn predicted_fourier_derivative(k: u32, moment: f64) -> Complex64 {
    Complex64::from_polar(moment, -PI / 2.0 * k as f64)
}
