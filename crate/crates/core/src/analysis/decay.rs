//! Power-law fits `|f(x)| ≈ C |x|^(-p)` on log-log axes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{sup_norm, SampledSignal};

/// Fewest usable samples a fit accepts.
pub const MIN_FIT_POINTS: usize = 8;

/// Samples below `NOISE_FLOOR_FACTOR · ε · ‖f‖∞` are treated as numerical zeros.
pub const NOISE_FLOOR_FACTOR: f64 = 1e3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayFit {
    /// `p` in `|f| ≈ C |x|^(-p)`.
    pub exponent: f64,
    /// `ln C`.
    pub log_constant: f64,
    pub r_squared: f64,
    /// `[lo, hi]` in `|x|`.
    pub fit_window: (f64, f64),
    pub side: Side,
    pub points_used: usize,
    /// Samples in the window dropped as numerical zeros.
    pub points_excluded: usize,
}

struct LineFit {
    slope: f64,
    intercept: f64,
    r_squared: f64,
    used: usize,
    excluded: usize,
}

fn fit_one_side(f: &SampledSignal, lo: f64, hi: f64, negative: bool) -> Result<LineFit> {
    let g = f.grid();
    let (a, b) = if negative { (-hi, -lo) } else { (lo, hi) };
    let tol = 1e-9 * g.step();
    if a < g.x_min() - tol || b > g.x_max() + tol {
        return Err(Error::WindowOutsideGrid {
            lo: a,
            hi: b,
            grid_lo: g.x_min(),
            grid_hi: g.x_max(),
        });
    }
    let floor = NOISE_FLOOR_FACTOR * f64::EPSILON * sup_norm(f);
    let mut total = 0;
    let mut pts = Vec::new();
    for (x, v) in f.iter() {
        if x < a - tol || x > b + tol {
            continue;
        }
        total += 1;
        if v.abs() > floor {
            pts.push((x.abs().ln(), v.abs().ln()));
        }
    }
    let excluded = total - pts.len();
    if pts.len() < MIN_FIT_POINTS || 2 * excluded > total {
        return Err(Error::TooFewPoints {
            usable: pts.len(),
            total,
        });
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = pts
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum();
    let r_squared = if syy > 0.0 {
        (1.0 - ss_res / syy).clamp(0.0, 1.0)
    } else {
        1.0
    };
    Ok(LineFit {
        slope,
        intercept,
        r_squared,
        used: pts.len(),
        excluded,
    })
}

/// Least-squares fit of `ln|f|` against `ln|x|` for `lo <= |x| <= hi`.
///
/// A two-sided fit averages the exponents and constants of both tails and
/// reports the worse `r²`.
pub fn fit_decay(f: &SampledSignal, window: (f64, f64), side: Side) -> Result<DecayFit> {
    let (lo, hi) = window;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "fit window [{lo}, {hi}] must satisfy 0 < lo < hi"
        )));
    }
    let fits = match side {
        Side::Right => vec![fit_one_side(f, lo, hi, false)?],
        Side::Left => vec![fit_one_side(f, lo, hi, true)?],
        Side::TwoSided => vec![
            fit_one_side(f, lo, hi, true)?,
            fit_one_side(f, lo, hi, false)?,
        ],
    };
    let k = fits.len() as f64;
    Ok(DecayFit {
        exponent: -fits.iter().map(|l| l.slope).sum::<f64>() / k,
        log_constant: fits.iter().map(|l| l.intercept).sum::<f64>() / k,
        r_squared: fits.iter().map(|l| l.r_squared).fold(1.0, f64::min),
        fit_window: window,
        side,
        points_used: fits.iter().map(|l| l.used).sum(),
        points_excluded: fits.iter().map(|l| l.excluded).sum(),
    })
}
