//! Uniform grids, sampled signals, and the elementary calculus on them.
//!
//! Everything in the crate is expressed on a [`Grid`]: abscissa `i` sits at
//! `x_min + i * step`. Quadrature is the composite trapezoid rule and
//! differentiation uses central differences in the interior with one-sided
//! differences at the two ends.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A uniform sampling grid `x_min + i * step`, `0 <= i < count`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    x_min: f64,
    step: f64,
    count: usize,
}

impl Grid {
    pub fn new(x_min: f64, step: f64, count: usize) -> Result<Self> {
        if !x_min.is_finite() {
            return Err(Error::InvalidGrid(format!("x_min {x_min} is not finite")));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidGrid(format!("step {step} must be positive")));
        }
        if count < 2 {
            return Err(Error::InvalidGrid(format!(
                "count {count} must be at least 2"
            )));
        }
        Ok(Self { x_min, step, count })
    }

    /// Grid covering `[min, max]` with `count = floor((max - min) / step) + 1`.
    ///
    /// A relative slack of `1e-9` absorbs the rounding in `(max - min) / step`
    /// so that `-64:64:2^-8` yields exactly 32769 points.
    pub fn from_range(min: f64, max: f64, step: f64) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) || min >= max {
            return Err(Error::InvalidGrid(format!(
                "need finite min < max, got {min}:{max}"
            )));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidGrid(format!("step {step} must be positive")));
        }
        let intervals = (max - min) / step;
        let count = (intervals * (1.0 + 1e-9)).floor() as usize + 1;
        Self::new(min, step, count)
    }

    /// Symmetric grid `[-half_span, half_span]`.
    pub fn symmetric(half_span: f64, step: f64) -> Result<Self> {
        Self::from_range(-half_span, half_span, step)
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn x_max(&self) -> f64 {
        self.x(self.count - 1)
    }

    pub fn span(&self) -> f64 {
        self.step * (self.count - 1) as f64
    }

    #[inline]
    pub fn x(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.step
    }

    pub fn abscissas(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.count).map(move |i| self.x(i))
    }

    /// True when `x` lies in `[x_min, x_max]` (with a rounding slack).
    pub fn contains(&self, x: f64) -> bool {
        let slack = 1e-12 * self.span().max(1.0);
        x >= self.x_min - slack && x <= self.x_max() + slack
    }

    /// Index of the grid point nearest to `x`, clamped to the grid.
    pub fn nearest_index(&self, x: f64) -> usize {
        let i = ((x - self.x_min) / self.step).round();
        i.clamp(0.0, (self.count - 1) as f64) as usize
    }

    /// Every `factor`-th point, starting at the first.
    pub fn decimated(&self, factor: usize) -> Result<Self> {
        if factor == 0 {
            return Err(Error::InvalidParameter("decimation factor 0".into()));
        }
        Self::new(
            self.x_min,
            self.step * factor as f64,
            (self.count - 1) / factor + 1,
        )
    }
}

/// Real samples of a function on a [`Grid`]. Values are always finite.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    grid: Grid,
    values: Vec<f64>,
}

impl SampledSignal {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.count() {
            return Err(Error::InvalidParameter(format!(
                "{} values for a grid of {} points",
                values.len(),
                grid.count()
            )));
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { grid, values })
    }

    /// Samples `f` at every abscissa of `grid`.
    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(grid, grid.abscissas().map(f).collect())
    }

    pub fn zeros(grid: Grid) -> Self {
        Self {
            grid,
            values: vec![0.0; grid.count()],
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(x, value)` pairs in grid order.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid.abscissas().zip(self.values.iter().copied())
    }

    /// Pointwise map `(x, f(x)) -> g`; errors if the result is not finite.
    pub fn map(&self, g: impl Fn(f64, f64) -> f64) -> Result<Self> {
        Self::new(self.grid, self.iter().map(|(x, v)| g(x, v)).collect())
    }

    pub fn scaled(&self, a: f64) -> Result<Self> {
        self.map(|_, v| a * v)
    }

    /// `x^k f(x)`.
    pub fn times_power(&self, k: u32) -> Result<Self> {
        self.map(|x, v| x.powi(k as i32) * v)
    }

    /// `a * self + b * other`; both signals must share the grid.
    pub fn linear_combination(&self, a: f64, other: &Self, b: f64) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::InvalidParameter(
                "signals live on different grids".into(),
            ));
        }
        Self::new(
            self.grid,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(u, v)| a * u + b * v)
                .collect(),
        )
    }

    /// Linear interpolation at `x`; exact at grid points.
    pub fn value_at(&self, x: f64) -> Result<f64> {
        if !self.grid.contains(x) {
            return Err(Error::ProbeOutsideGrid {
                x,
                lo: self.grid.x_min(),
                hi: self.grid.x_max(),
            });
        }
        let s = ((x - self.grid.x_min()) / self.grid.step()).max(0.0);
        let i = (s.floor() as usize).min(self.len() - 2);
        let frac = (s - i as f64).clamp(0.0, 1.0);
        if frac == 0.0 {
            return Ok(self.values[i]);
        }
        Ok(self.values[i] * (1.0 - frac) + self.values[i + 1] * frac)
    }

    /// Keeps every `factor`-th sample.
    pub fn decimated(&self, factor: usize) -> Result<Self> {
        let grid = self.grid.decimated(factor)?;
        let values = self.values.iter().step_by(factor).copied().collect();
        Self::new(grid, values)
    }

    /// Restriction to the points with `lo <= x <= hi`.
    pub fn restricted(&self, lo: f64, hi: f64) -> Result<Self> {
        let first = (0..self.len()).find(|&i| self.grid.x(i) >= lo - 1e-12);
        let last = (0..self.len())
            .rev()
            .find(|&i| self.grid.x(i) <= hi + 1e-12);
        match (first, last) {
            (Some(a), Some(b)) if b > a => Self::new(
                Grid::new(self.grid.x(a), self.grid.step(), b - a + 1)?,
                self.values[a..=b].to_vec(),
            ),
            _ => Err(Error::InvalidParameter(format!(
                "[{lo}, {hi}] holds fewer than two grid points"
            ))),
        }
    }
}

/// Composite trapezoid approximation of the integral over the grid span.
pub fn integrate(f: &SampledSignal) -> f64 {
    let v = f.values();
    let n = v.len();
    let inner: f64 = v[1..n - 1].iter().sum();
    f.grid().step() * (inner + 0.5 * (v[0] + v[n - 1]))
}

/// Central differences in the interior, one-sided differences at the ends.
pub fn derivative(f: &SampledSignal) -> SampledSignal {
    let v = f.values();
    let n = v.len();
    let h = f.grid().step();
    let mut d = Vec::with_capacity(n);
    d.push((v[1] - v[0]) / h);
    d.extend(v.windows(3).map(|w| (w[2] - w[0]) / (2.0 * h)));
    d.push((v[n - 1] - v[n - 2]) / h);
    SampledSignal {
        grid: *f.grid(),
        values: d,
    }
}

/// Trapezoid approximation of `∫ |f|`.
pub fn l1_norm(f: &SampledSignal) -> f64 {
    let v = f.values();
    let n = v.len();
    let inner: f64 = v[1..n - 1].iter().map(|x| x.abs()).sum();
    f.grid().step() * (inner + 0.5 * (v[0].abs() + v[n - 1].abs()))
}

/// Trapezoid approximation of `(∫ f²)^½`.
pub fn l2_norm(f: &SampledSignal) -> f64 {
    let v = f.values();
    let n = v.len();
    let inner: f64 = v[1..n - 1].iter().map(|x| x * x).sum();
    (f.grid().step() * (inner + 0.5 * (v[0] * v[0] + v[n - 1] * v[n - 1]))).sqrt()
}

pub fn sup_norm(f: &SampledSignal) -> f64 {
    f.values().iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// `‖f‖₁ + ‖f′‖∞`, the size-plus-regularity norm used by the decay bounds.
pub fn mixed_norm(f: &SampledSignal) -> f64 {
    l1_norm(f) + sup_norm(&derivative(f))
}
