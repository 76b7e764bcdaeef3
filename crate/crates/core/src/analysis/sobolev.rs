//! Spectral Sobolev norms `‖f‖²_{W^{2,γ}} = (1/2π) ∫ (1+ω²)^γ |f̂(ω)|² dω`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::SampledSignal;
use crate::spectrum::dft;

/// Largest relative change under 2× refinement still counted as "finite".
pub const GRID_STABILITY_THRESHOLD: f64 = 0.10;

pub fn sobolev_norm(f: &SampledSignal, gamma: f64) -> Result<f64> {
    if !(gamma >= 0.0 && gamma.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "gamma = {gamma} must be >= 0"
        )));
    }
    let s = dft(f);
    let sum: f64 = s
        .frequencies()
        .iter()
        .zip(s.values())
        .map(|(w, c)| (1.0 + w * w).powf(gamma) * c.norm_sqr())
        .sum();
    Ok((sum * s.delta_omega() / (2.0 * std::f64::consts::PI)).sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SobolevEstimate {
    pub gammas: Vec<f64>,
    /// Norms on the input grid.
    pub norms: Vec<f64>,
    /// Norms on every other sample.
    pub coarse_norms: Vec<f64>,
    /// `|fine - coarse| / fine`.
    pub relative_change: Vec<f64>,
    pub grid_stable: Vec<bool>,
    pub smoothness_order: u32,
}

/// Sobolev norms at the input resolution and at half of it.
///
/// A norm that moves by less than 10% when the step halves is taken as
/// finite. `smoothness_order` is the largest `n` with a stable `γ > n + ½`,
/// and 0 when there is none.
pub fn smoothness_profile(f: &SampledSignal, gammas: &[f64]) -> Result<SobolevEstimate> {
    if gammas.is_empty() {
        return Err(Error::InvalidParameter("empty gamma grid".into()));
    }
    let coarse = f.decimated(2)?;
    let mut est = SobolevEstimate {
        gammas: gammas.to_vec(),
        norms: Vec::with_capacity(gammas.len()),
        coarse_norms: Vec::with_capacity(gammas.len()),
        relative_change: Vec::with_capacity(gammas.len()),
        grid_stable: Vec::with_capacity(gammas.len()),
        smoothness_order: 0,
    };
    for &g in gammas {
        let fine = sobolev_norm(f, g)?;
        let rough = sobolev_norm(&coarse, g)?;
        let change = if fine > 0.0 {
            (fine - rough).abs() / fine
        } else {
            0.0
        };
        let stable = change < GRID_STABILITY_THRESHOLD;
        if stable && g > 0.5 {
            // largest integer strictly below g - 1/2
            let n = (g - 0.5).ceil() as u32 - 1;
            est.smoothness_order = est.smoothness_order.max(n);
        }
        est.norms.push(fine);
        est.coarse_norms.push(rough);
        est.relative_change.push(change);
        est.grid_stable.push(stable);
    }
    Ok(est)
}

/// `0, 0.5, 1, …, 4`.
pub fn default_gamma_grid() -> Vec<f64> {
    (0..=8).map(|i| 0.5 * i as f64).collect()
}
