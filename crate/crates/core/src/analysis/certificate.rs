//! Empirical constants for the pointwise decay bounds
//! `|Hψ(x)| ≤ C · norms / (1 + |x|^(n+1))`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{l1_norm, mixed_norm, SampledSignal};

/// Allowed growth of the constant when the span doubles.
pub const STABILITY_TOLERANCE: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Theorem {
    /// `O(|x|^-1)` for any integrable, locally smooth `f`.
    T1,
    /// `O(|x|^-(n+1))` for a wavelet with `n` vanishing moments.
    T2 { n: u32 },
}

impl Theorem {
    pub fn order(&self) -> u32 {
        match self {
            Theorem::T1 => 0,
            Theorem::T2 { n } => *n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub theorem: Theorem,
    /// Norms of `ψ` entering the bound, keyed by a readable label.
    pub norm_bundle: BTreeMap<String, f64>,
    pub norm_sum: f64,
    /// The constant over the full grid.
    pub empirical_constant: f64,
    /// The constant over the central half of the grid.
    pub constant_half_span: f64,
    pub half_span: f64,
    pub full_span: f64,
    /// `empirical_constant <= (1 + 5%) · constant_half_span`.
    pub stable: bool,
}

fn sup_weighted(hpsi: &SampledSignal, n: u32, lo: f64, hi: f64, norm_sum: f64) -> f64 {
    hpsi.iter()
        .filter(|(x, _)| *x >= lo && *x <= hi)
        .map(|(x, v)| v.abs() * (1.0 + x.abs().powi(n as i32 + 1)) / norm_sum)
        .fold(0.0, f64::max)
}

/// Compares the bound constant on the central half of the grid with the
/// constant on the whole grid; a genuine tail slower than `|x|^-(n+1)`
/// makes it grow with the span.
///
/// `n = 0` certifies the general `1/|x|` bound; `n >= 1` the bound for a
/// wavelet with `n` vanishing moments.
pub fn theorem_certificate(
    psi: &SampledSignal,
    hpsi: &SampledSignal,
    n: i64,
) -> Result<BoundCertificate> {
    if n < 0 {
        return Err(Error::InvalidParameter(format!(
            "order n = {n} must be >= 0"
        )));
    }
    if psi.grid() != hpsi.grid() {
        return Err(Error::InvalidGrid(
            "psi and its transform must share a grid".into(),
        ));
    }
    let n = u32::try_from(n)
        .map_err(|_| Error::InvalidParameter(format!("order n = {n} too large")))?;
    let theorem = if n == 0 {
        Theorem::T1
    } else {
        Theorem::T2 { n }
    };

    let mut bundle = BTreeMap::new();
    bundle.insert("norm_1_inf(psi)".to_string(), mixed_norm(psi));
    bundle.insert(
        format!("norm_1_inf(x^{} psi)", n + 1),
        mixed_norm(&psi.times_power(n + 1)?),
    );
    if n >= 1 {
        bundle.insert(format!("norm_1(x^{n} psi)"), l1_norm(&psi.times_power(n)?));
    }
    let norm_sum: f64 = bundle.values().sum();
    if !norm_sum.is_finite() || norm_sum <= 0.0 {
        return Err(Error::InvalidParameter("psi has zero norm".into()));
    }

    let g = psi.grid();
    let centre = 0.5 * (g.x_min() + g.x_max());
    let quarter = 0.25 * g.span();
    let half = sup_weighted(hpsi, n, centre - quarter, centre + quarter, norm_sum);
    let full = sup_weighted(hpsi, n, g.x_min(), g.x_max(), norm_sum);
    Ok(BoundCertificate {
        theorem,
        norm_bundle: bundle,
        norm_sum,
        empirical_constant: full,
        constant_half_span: half,
        half_span: 2.0 * quarter,
        full_span: g.span(),
        stable: full.is_finite() && full <= (1.0 + STABILITY_TOLERANCE) * half,
    })
}
