//! Exact step functions; the Haar family lives here.

use crate::error::{Error, Result};

/// `levels[i]` on `[breakpoints[i], breakpoints[i + 1])`, zero elsewhere.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseConstant {
    breakpoints: Vec<f64>,
    levels: Vec<f64>,
}

impl PiecewiseConstant {
    pub fn new(breakpoints: Vec<f64>, levels: Vec<f64>) -> Result<Self> {
        if levels.is_empty() || breakpoints.len() != levels.len() + 1 {
            return Err(Error::InvalidParameter(format!(
                "{} breakpoints for {} levels",
                breakpoints.len(),
                levels.len()
            )));
        }
        if breakpoints.iter().chain(&levels).any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(
                "non-finite breakpoint or level".into(),
            ));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        Ok(Self {
            breakpoints,
            levels,
        })
    }

    /// Indicator of `[a, b)`.
    pub fn indicator(a: f64, b: f64) -> Result<Self> {
        Self::new(vec![a, b], vec![1.0])
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn support(&self) -> (f64, f64) {
        (self.breakpoints[0], *self.breakpoints.last().unwrap())
    }

    pub fn eval(&self, x: f64) -> f64 {
        // first breakpoint strictly greater than x
        let upper = self.breakpoints.partition_point(|&b| b <= x);
        if upper == 0 || upper == self.breakpoints.len() {
            0.0
        } else {
            self.levels[upper - 1]
        }
    }

    pub fn scaled(&self, a: f64) -> Self {
        Self {
            breakpoints: self.breakpoints.clone(),
            levels: self.levels.iter().map(|l| a * l).collect(),
        }
    }
}

/// Haar wavelet: `+1` on `[-1, 0)`, `-1` on `[0, 1)`.
pub fn make_haar_wavelet() -> PiecewiseConstant {
    PiecewiseConstant {
        breakpoints: vec![-1.0, 0.0, 1.0],
        levels: vec![1.0, -1.0],
    }
}

/// Haar scaling function, the box on `[0, 1)`.
pub fn make_haar_scaling() -> PiecewiseConstant {
    PiecewiseConstant {
        breakpoints: vec![0.0, 1.0],
        levels: vec![1.0],
    }
}
