//! Principal-value quadrature of `(1/π) PV ∫ f(x - t) / t dt`.
//!
//! The integral is folded onto `t > 0`,
//!
//! ```text
//! Hf(x) = (1/π) ∫₀^∞ [f(x - t) - f(x + t)] / t dt,
//! ```
//!
//! whose integrand tends to `-2 f'(x)` at the origin. It is sampled at the
//! staggered abscissas `t_j = (j + ½) h`, which are the midpoints between grid
//! points, and summed with trapezoid weights (`h/2` for `j = 0`, `h` after).
//! The strip `[0, h/2]` left out by the trapezoid is filled with
//! `(h/2) · (-2 f'(x))`, i.e. the correction `-h f'(x) / π`.
//!
//! The weights reduce to the dimensionless kernel `1 / (j + ½)`, so
//!
//! ```text
//! π Hf(xᵢ) = (M_i - M_{i+1}) + Σ_{j≥1} (M_{i-j} - M_{i+j+1}) / (j + ½) - h f'(xᵢ)
//! ```
//!
//! with `M_k = f(x_min + (k - ½) h)`. Values outside the grid count as zero.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::numerics::{derivative, Grid, SampledSignal};
use crate::wavelets::Evaluate;

/// Settings for [`hilbert_pv`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PvConfig {
    /// Add the `-h f'(x) / π` strip next to the kernel singularity.
    pub singularity_correction: bool,
    /// Advisory worker count; results do not depend on it.
    pub eval_parallelism: usize,
}

impl Default for PvConfig {
    fn default() -> Self {
        Self {
            singularity_correction: true,
            eval_parallelism: std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1),
        }
    }
}

impl PvConfig {
    pub fn with_parallelism(mut self, workers: usize) -> Self {
        self.eval_parallelism = workers.max(1);
        self
    }
}

/// PV transform of a sampled signal; half-grid values come from 4-point
/// midpoint interpolation (linear in the first and last cell).
pub fn hilbert_pv(f: &SampledSignal, cfg: &PvConfig) -> SampledSignal {
    let mid = interpolated_midpoints(f.values());
    transform(f, &mid, cfg)
}

/// PV transform with the half-grid values taken from the generator itself.
///
/// Use this for discontinuous inputs: interpolating across a jump misplaces
/// it by up to half a step, an `O(h / distance)` error next to the jump.
pub fn hilbert_pv_exact<S: Evaluate + Sync + ?Sized>(
    source: &S,
    grid: &Grid,
    cfg: &PvConfig,
) -> SampledSignal {
    let f = SampledSignal::from_fn(*grid, |x| source.eval(x)).expect("generators are finite");
    let n = grid.count();
    let mut mid = vec![0.0; n + 1];
    for (k, m) in mid.iter_mut().enumerate().take(n).skip(1) {
        *m = source.eval(grid.x_min() + (k as f64 - 0.5) * grid.step());
    }
    transform(&f, &mid, cfg)
}

/// `M_0 .. M_n`; the two out-of-grid ends are zero.
fn interpolated_midpoints(v: &[f64]) -> Vec<f64> {
    let n = v.len();
    let mut mid = vec![0.0; n + 1];
    for k in 1..n {
        mid[k] = if k >= 2 && k + 1 < n {
            (9.0 * (v[k - 1] + v[k]) - (v[k - 2] + v[k + 1])) / 16.0
        } else {
            0.5 * (v[k - 1] + v[k])
        };
    }
    mid
}

/// Dot product with eight interleaved accumulators combined in a fixed order.
#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = [0.0f64; 8];
    let ca = a.chunks_exact(8);
    let cb = b.chunks_exact(8);
    let (ra, rb) = (ca.remainder(), cb.remainder());
    for (x, y) in ca.zip(cb) {
        for l in 0..8 {
            acc[l] += x[l] * y[l];
        }
    }
    let mut tail = 0.0;
    for (x, y) in ra.iter().zip(rb) {
        tail += x * y;
    }
    ((acc[0] + acc[1]) + (acc[2] + acc[3])) + ((acc[4] + acc[5]) + (acc[6] + acc[7])) + tail
}

fn transform(f: &SampledSignal, mid: &[f64], cfg: &PvConfig) -> SampledSignal {
    let grid = *f.grid();
    let n = grid.count();
    let h = grid.step();
    let kernel: Vec<f64> = (0..n).map(|j| 1.0 / (j as f64 + 0.5)).collect();
    let reversed: Vec<f64> = mid.iter().rev().copied().collect();
    let slope = if cfg.singularity_correction {
        Some(derivative(f))
    } else {
        None
    };

    let point = |i: usize| -> f64 {
        // M_{i-j} = reversed[n - i + j]
        let left = if i >= 2 {
            dot(&kernel[1..i], &reversed[n - i + 1..n])
        } else {
            0.0
        };
        let right = if i + 3 <= n {
            dot(&kernel[1..n - 1 - i], &mid[i + 2..n])
        } else {
            0.0
        };
        let mut s = (mid[i] - mid[i + 1]) + (left - right);
        if let Some(d) = &slope {
            s -= h * d.values()[i];
        }
        s / PI
    };

    let workers = cfg.eval_parallelism.max(1);
    let values: Vec<f64> = if workers == 1 {
        (0..n).map(point).collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            Ok(pool) => pool.install(|| (0..n).into_par_iter().map(point).collect()),
            Err(_) => (0..n).map(point).collect(),
        }
    };
    SampledSignal::new(grid, values).expect("finite input gives finite output")
}
