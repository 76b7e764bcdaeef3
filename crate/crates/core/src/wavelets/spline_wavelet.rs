//! Compactly supported semi-orthogonal (Chui–Wang) spline wavelets.
//!
//! For order `m = degree + 1` the wavelet is a combination of half-scale
//! cardinal B-splines,
//!
//! ```text
//! ψ(x) = Σ_{n=0}^{3m-2} q_n N_m(2x - n),
//! q_n  = (-1)^n / 2^(m-1) · Σ_{l=0}^{m} C(m, l) N_{2m}(n - l + 1),
//! ```
//!
//! supported on `[0, 2m - 1]` with `m` vanishing moments. The generator
//! shifts it to `[-(2m-1)/2, (2m-1)/2]` and rescales it to unit L² norm.

use super::bspline::cardinal;

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct SplineWavelet {
    order: usize,
    /// `q_n` already multiplied by the normalization constant.
    coefficients: Vec<f64>,
    half_support: f64,
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Unnormalized two-scale coefficients `q_0 .. q_{3m-2}`.
pub(crate) fn chui_wang_coefficients(order: usize) -> Vec<f64> {
    let m = order;
    let scale = 0.5f64.powi(m as i32 - 1);
    (0..=(3 * m - 2))
        .map(|n| {
            let sum: f64 = (0..=m)
                .map(|l| binomial(m, l) * cardinal(2 * m, (n + 1) as f64 - l as f64))
                .sum();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            sign * scale * sum
        })
        .collect()
}

/// `∫ (Σ q_n N_m(2x - n))² dx` from the B-spline autocorrelation
/// `∫ N_m(t) N_m(t - j) dt = N_{2m}(m + j)`.
fn squared_norm(order: usize, q: &[f64]) -> f64 {
    let mut s = 0.0;
    for (k, qk) in q.iter().enumerate() {
        for (l, ql) in q.iter().enumerate() {
            let j = l as f64 - k as f64;
            s += qk * ql * 0.5 * cardinal(2 * order, order as f64 + j);
        }
    }
    s
}

impl SplineWavelet {
    pub(crate) fn new(degree: u32) -> Self {
        let order = degree as usize + 1;
        let q = chui_wang_coefficients(order);
        let amplitude = 1.0 / squared_norm(order, &q).sqrt();
        Self {
            order,
            coefficients: q.into_iter().map(|c| c * amplitude).collect(),
            half_support: (2 * order - 1) as f64 / 2.0,
        }
    }

    pub(crate) fn half_support(&self) -> f64 {
        self.half_support
    }

    /// Normalized coefficients of `N_m(2(x + c) - n)`.
    pub(crate) fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub(crate) fn order(&self) -> usize {
        self.order
    }

    pub(crate) fn eval(&self, x: f64) -> f64 {
        let u = 2.0 * (x + self.half_support);
        if !(u >= 0.0 && u < (4 * self.order - 2) as f64) {
            return 0.0;
        }
        // only shifts n with 0 <= u - n < m contribute
        let hi = (u.floor() as usize).min(self.coefficients.len() - 1);
        let lo = (u - self.order as f64).floor().max(-1.0) as isize + 1;
        (lo as usize..=hi)
            .map(|n| self.coefficients[n] * cardinal(self.order, u - n as f64))
            .sum()
    }
}
