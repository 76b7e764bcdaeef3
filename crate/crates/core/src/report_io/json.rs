//! JSON reports: one object per run, tagged by `kind`.
//!
//! ```text
//! {
//!   "tool_version": "0.1.0",
//!   "input_digest": "<sha256 hex of the input>",
//!   "pass": true,
//!   "kind": "decay_fit",
//!   ...fields of the report...
//! }
//! ```
//!
//! Output is pretty-printed with fields in declaration order and map keys
//! sorted, so identical inputs give identical bytes.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::analysis::{BoundCertificate, DecayFit, MomentReport, SobolevEstimate, TailLimit};
use crate::error::{Error, Result};
use crate::numerics::{Grid, SampledSignal};
use crate::wavelets::Window;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BedrosianReport {
    #[serde(flatten)]
    pub window: Window,
    pub omega0: f64,
    pub grid: Grid,
    /// L∞ residual over the central half of the grid.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub scaling_function: String,
    pub k_max: u32,
    pub transformed: bool,
    /// `[lo, hi]` over which the extremes below are taken.
    pub central_window: (f64, f64),
    pub max_abs_deviation: f64,
    pub min_abs_deviation: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Pv,
    Spectral,
}

/// Sidecar describing how a transformed signal was produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HilbertRun {
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pad_factor: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub singularity_correction: Option<bool>,
    pub grid: Grid,
    /// sha256 of the transformed output.
    pub output_digest: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Moments(MomentReport),
    DecayFit(DecayFit),
    BoundCertificate(BoundCertificate),
    SobolevEstimate(SobolevEstimate),
    Bedrosian(BedrosianReport),
    TailLimit(TailLimit),
    Partition(PartitionReport),
    Hilbert(HilbertRun),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub tool_version: String,
    pub input_digest: String,
    /// Outcome of the check the run was asked to make.
    pub pass: bool,
    #[serde(flatten)]
    pub report: Report,
}

impl ReportEnvelope {
    pub fn new(report: Report, input_digest: String, pass: bool) -> Self {
        Self {
            tool_version: TOOL_VERSION.to_string(),
            input_digest,
            pass,
            report,
        }
    }
}

pub fn digest_bytes(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// sha256 over the little-endian bytes of `x_min`, `step`, `count` and the values.
pub fn digest_signal(f: &SampledSignal) -> String {
    let g = f.grid();
    let mut h = Sha256::new();
    h.update(g.x_min().to_le_bytes());
    h.update(g.step().to_le_bytes());
    h.update((g.count() as u64).to_le_bytes());
    for v in f.values() {
        h.update(v.to_le_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub fn to_json_string(envelope: &ReportEnvelope) -> Result<String> {
    let mut s = serde_json::to_string_pretty(envelope).map_err(|e| Error::Schema(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json_str(text: &str) -> Result<ReportEnvelope> {
    serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
}

pub fn write_report_json(envelope: &ReportEnvelope, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_json_string(envelope)?)?;
    Ok(())
}

pub fn read_report_json(path: impl AsRef<Path>) -> Result<ReportEnvelope> {
    from_json_str(&std::fs::read_to_string(path)?)
}
