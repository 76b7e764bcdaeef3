//! Exact transform of a step function.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{Grid, SampledSignal};
use crate::wavelets::PiecewiseConstant;

/// `Σᵢ (levelᵢ / π) ln |(x - bᵢ) / (x - bᵢ₊₁)|`.
///
/// For the Haar wavelet this is `(1/π) ln(|x² - 1| / x²)`. The transform has a
/// logarithmic singularity at every breakpoint.
pub fn hilbert_box_closed_form(p: &PiecewiseConstant, x: f64) -> Result<f64> {
    let b = p.breakpoints();
    if b.contains(&x) {
        return Err(Error::SingularPoint { x });
    }
    let s: f64 = p
        .levels()
        .iter()
        .zip(b.windows(2))
        .map(|(level, w)| level * ((x - w[0]) / (x - w[1])).abs().ln())
        .sum();
    Ok(s / PI)
}

/// The closed form sampled on `grid`; fails if a grid point hits a breakpoint.
pub fn sample_closed_form(p: &PiecewiseConstant, grid: &Grid) -> Result<SampledSignal> {
    let values = grid
        .abscissas()
        .map(|x| hilbert_box_closed_form(p, x))
        .collect::<Result<Vec<_>>>()?;
    SampledSignal::new(*grid, values)
}
