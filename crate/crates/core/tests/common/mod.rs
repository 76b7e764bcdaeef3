//! Reference values computed without the library's transform engines.
//!
//! * `cardinal_hilbert`: the closed form of the transform of a cardinal
//!   B-spline, `(1/(π(m-1)!)) Σ_k (-1)^k C(m,k) (x-k)^(m-1) ln|x-k|`.
//!   Exact, but the sum cancels badly once `|x|` is much larger than `m`.
//! * `far_field`: outside the support, `1/(x-t) = Σ tᵏ/xᵏ⁺¹` turns the
//!   transform into a convergent moment series. Moments come from
//!   Gauss–Legendre quadrature on each polynomial piece, which is exact.

#![allow(dead_code)]

use std::f64::consts::PI;

use hwl::wavelets::{spline_wavelet_expansion, WaveletSpec};

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `H N_m(x)` for the cardinal B-spline of order `m` on `[0, m]`.
pub fn cardinal_hilbert(m: usize, x: f64) -> f64 {
    let fact: f64 = (1..m).map(|i| i as f64).product();
    let mut s = 0.0;
    for k in 0..=m {
        let u = x - k as f64;
        if u == 0.0 {
            assert!(m > 1, "order-1 transform is singular at the knots");
            continue;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * binomial(m, k) * u.powi(m as i32 - 1) * u.abs().ln();
    }
    s / (PI * fact)
}

/// Transform of the centered B-spline of the given degree.
pub fn bspline_hilbert(degree: u32, x: f64) -> f64 {
    let m = degree as usize + 1;
    cardinal_hilbert(m, x + m as f64 / 2.0)
}

/// Transform of a spline wavelet, term by term through its B-spline expansion.
pub fn spline_wavelet_hilbert(spec: &WaveletSpec, x: f64) -> f64 {
    let (m, shift, c) = spline_wavelet_expansion(spec).expect("spline wavelet");
    let u = 2.0 * (x + shift);
    c.iter()
        .enumerate()
        .map(|(n, cn)| cn * cardinal_hilbert(m, u - n as f64))
        .sum()
}

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// `∫ tᵏ f(t) dt` for `k = 0..terms`, `f` polynomial between consecutive `knots`.
pub fn piecewise_moments(f: impl Fn(f64) -> f64, knots: &[f64], terms: usize) -> Vec<f64> {
    let (nodes, weights) = gauss_legendre(terms / 2 + 8);
    let mut out = vec![0.0; terms];
    for w in knots.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
        for (t, wt) in nodes.iter().zip(&weights) {
            let x = mid + half * t;
            let fx = f(x) * wt * half;
            let mut p = 1.0;
            for o in out.iter_mut() {
                *o += fx * p;
                p *= x;
            }
        }
    }
    out
}

/// `(1/π) Σ μ_k / x^(k+1)`, valid for `|x|` beyond the support.
pub fn far_field(moments: &[f64], x: f64) -> f64 {
    let mut s = 0.0;
    let mut xp = x;
    for m in moments {
        s += m / xp;
        xp *= x;
    }
    s / PI
}

/// Knots of a spline wavelet: multiples of 1/2 across its support.
pub fn half_integer_knots(spec: &WaveletSpec) -> Vec<f64> {
    let (a, b) = spec.support();
    let n = ((b - a) * 2.0).round() as usize;
    (0..=n).map(|i| a + i as f64 / 2.0).collect()
}

/// Closed form of the transform of the Haar wavelet on `[-1, 1)`.
pub fn haar_wavelet_hilbert(x: f64) -> f64 {
    ((x * x - 1.0).abs() / (x * x)).ln() / PI
}
