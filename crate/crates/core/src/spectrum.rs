//! Discrete Fourier transform with an explicit continuous-frequency mapping.
//!
//! Conventions, fixed because reports quote bin indices:
//!
//! * bin `k` of an `n`-point transform has angular frequency
//!   `2π k' / (n · step)` where `k' = k` for `k <= n/2` and `k' = k - n`
//!   otherwise. DC is bin 0, negative frequencies occupy the upper half and
//!   the even-length Nyquist bin maps to `+π/step`;
//! * [`Spectrum::values`] approximate the continuous transform
//!   `f̂(ω) = ∫ f(x) e^{-jωx} dx`, i.e. `step · e^{-jω x_min} · X[k]` with
//!   `X[k] = Σₙ fₙ e^{-2πj kn/n}` the raw DFT.
//!
//! With this scaling Parseval reads `Σ |f|² step = Σ |f̂|² Δω / 2π`.

use std::f64::consts::PI;

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::numerics::{Grid, SampledSignal};

/// Angular frequency of bin `k` in an `n`-point transform with sample spacing `step`.
pub fn bin_frequency(k: usize, n: usize, step: f64) -> f64 {
    let signed = if k <= n / 2 {
        k as f64
    } else {
        k as f64 - n as f64
    };
    2.0 * PI * signed / (n as f64 * step)
}

/// Sampled continuous Fourier transform of a [`SampledSignal`].
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    grid: Grid,
    frequencies: Vec<f64>,
    values: Vec<Complex64>,
}

impl Spectrum {
    /// Grid of the signal this spectrum came from.
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// Angular frequency of every bin (radians per abscissa unit).
    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Bin spacing `2π / (n · step)`.
    pub fn delta_omega(&self) -> f64 {
        2.0 * PI / (self.grid.count() as f64 * self.grid.step())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Builds a spectrum from continuous-transform values on the bins of `grid`.
    pub fn from_values(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.count() {
            return Err(Error::InvalidParameter(format!(
                "{} spectral values for a grid of {} points",
                values.len(),
                grid.count()
            )));
        }
        let n = grid.count();
        let frequencies = (0..n).map(|k| bin_frequency(k, n, grid.step())).collect();
        Ok(Self {
            grid,
            frequencies,
            values,
        })
    }
}

pub(crate) fn fft(buffer: &mut [Complex64]) {
    FftPlanner::new()
        .plan_fft_forward(buffer.len())
        .process(buffer);
}

/// Unnormalized inverse transform.
pub(crate) fn ifft(buffer: &mut [Complex64]) {
    FftPlanner::new()
        .plan_fft_inverse(buffer.len())
        .process(buffer);
}

pub fn dft(f: &SampledSignal) -> Spectrum {
    let grid = *f.grid();
    let n = grid.count();
    let h = grid.step();
    let mut buf: Vec<Complex64> = f.values().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft(&mut buf);
    let frequencies: Vec<f64> = (0..n).map(|k| bin_frequency(k, n, h)).collect();
    let values = buf
        .into_iter()
        .zip(&frequencies)
        .map(|(x, &w)| x * Complex64::from_polar(h, -w * grid.x_min()))
        .collect();
    Spectrum {
        grid,
        frequencies,
        values,
    }
}

/// Inverse of [`dft`]; any imaginary residue is discarded.
pub fn idft(s: &Spectrum) -> Result<SampledSignal> {
    let grid = s.grid;
    let n = grid.count();
    let h = grid.step();
    let mut buf: Vec<Complex64> = s
        .values
        .iter()
        .zip(&s.frequencies)
        .map(|(v, &w)| v * Complex64::from_polar(1.0 / h, w * grid.x_min()))
        .collect();
    ifft(&mut buf);
    let scale = 1.0 / n as f64;
    SampledSignal::new(grid, buf.into_iter().map(|c| c.re * scale).collect())
}
