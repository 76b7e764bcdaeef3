//! `H[w(x) cos(ω₀x)] = w(x) sin(ω₀x)` when `ŵ` vanishes outside `|ω| < ω₀`.

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_spectral, SpectralConfig};
use crate::numerics::{Grid, SampledSignal};
use crate::wavelets::Window;

/// Largest envelope value accepted at the grid ends.
///
/// The `1/x²` envelope of `sinc²` is still `6e-5` at `|x| = 128`; its
/// truncation error lands far below that because the tail oscillates.
pub const EDGE_ENVELOPE_LIMIT: f64 = 1e-4;

/// L∞ distance between the spectral transform of `w·cos(ω₀x)` and
/// `w·sin(ω₀x)` over the central half of `grid`.
pub fn bedrosian_residual(window: Window, omega0: f64, grid: &Grid) -> Result<f64> {
    if !omega0.is_finite() {
        return Err(Error::InvalidParameter("omega0 must be finite".into()));
    }
    let edge = window
        .envelope(grid.x_min())
        .max(window.envelope(grid.x_max()));
    if edge > EDGE_ENVELOPE_LIMIT {
        return Err(Error::GridTooNarrow {
            edge_value: edge,
            limit: EDGE_ENVELOPE_LIMIT,
        });
    }
    let modulated = SampledSignal::from_fn(*grid, |x| window.eval(x) * (omega0 * x).cos())?;
    let transformed = hilbert_spectral(&modulated, &SpectralConfig::default());
    let centre = 0.5 * (grid.x_min() + grid.x_max());
    let quarter = 0.25 * grid.span();
    Ok(transformed
        .iter()
        .filter(|(x, _)| (x - centre).abs() <= quarter)
        .map(|(x, v)| (v - window.eval(x) * (omega0 * x).sin()).abs())
        .fold(0.0, f64::max))
}
