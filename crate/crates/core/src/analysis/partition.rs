//! Integer-shift sums `Σ_{|k|≤K} g(x - k)` of a scaling function or its transform.

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_spectral, SpectralConfig};
use crate::numerics::{Grid, SampledSignal};
use crate::wavelets::{sample, WaveletSpec};

/// Returns `Σ_{|k|≤K} g(x - k) - 1` on `grid`, where `g` is the scaling
/// function (`transformed = false`) or its spectral Hilbert transform.
///
/// Shifts are taken on the samples, so `1/step` must be an integer.
/// `g` is built on a grid extended by `K` on both sides so that every
/// shifted sample exists.
pub fn partition_deviation(
    spec: &WaveletSpec,
    k_max: u32,
    transformed: bool,
    grid: &Grid,
) -> Result<SampledSignal> {
    if !spec.is_scaling_function() {
        return Err(Error::NotScalingFunction(spec.name()));
    }
    let per_unit = 1.0 / grid.step();
    let s = per_unit.round();
    if s < 1.0 || (per_unit - s).abs() > 1e-9 * per_unit {
        return Err(Error::InvalidGrid(format!(
            "integer shifts need 1/step to be an integer, got {per_unit}"
        )));
    }
    let s = s as usize;
    let k = k_max as usize;
    let ext = Grid::new(
        grid.x_min() - k_max as f64,
        grid.step(),
        grid.count() + 2 * k * s,
    )?;
    let mut g = sample(spec, &ext);
    if transformed {
        g = hilbert_spectral(&g, &SpectralConfig::default());
    }
    let gv = g.values();
    let values = (0..grid.count())
        .map(|i| (0..=2 * k).map(|j| gv[i + j * s]).sum::<f64>() - 1.0)
        .collect();
    SampledSignal::new(*grid, values)
}
