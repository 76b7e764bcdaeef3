//! The far-field limit `x · Hf(x) → (1/π) ∫ f`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{integrate, SampledSignal};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailLimit {
    pub x_probe: f64,
    /// `x_probe · Hf(x_probe)`.
    pub probe_value: f64,
    /// `(1/π) ∫ f`.
    pub predicted: f64,
}

impl TailLimit {
    /// `|probe / predicted - 1|`, infinite when nothing is predicted.
    pub fn relative_deviation(&self) -> f64 {
        if self.predicted == 0.0 {
            f64::INFINITY
        } else {
            (self.probe_value / self.predicted - 1.0).abs()
        }
    }
}

pub fn tail_limit(f: &SampledSignal, hf: &SampledSignal, x_probe: f64) -> Result<TailLimit> {
    if !x_probe.is_finite() {
        return Err(Error::InvalidParameter("probe must be finite".into()));
    }
    Ok(TailLimit {
        x_probe,
        probe_value: x_probe * hf.value_at(x_probe)?,
        predicted: integrate(f) / PI,
    })
}
