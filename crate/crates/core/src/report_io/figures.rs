//! The three standard figures, each built from scratch: generate, transform, plot.

use std::f64::consts::PI;

use crate::error::Result;
use crate::hilbert::{hilbert_pv_exact, hilbert_spectral, PvConfig, SpectralConfig};
use crate::numerics::{sup_norm, Grid, SampledSignal};
use crate::wavelets::{sample, WaveletSpec};

use super::svg::{Curve, FigureSpec, Panel, Role};

/// Sampling step of every figure pipeline.
pub const FIGURE_STEP: f64 = 1.0 / 128.0;
/// Half-width of the computation grid; the plots show the central part.
pub const FIGURE_HALF_SPAN: f64 = 16.0;
/// Kernel plot clip level.
pub const KERNEL_CLIP: f64 = 5.0;

fn symmetric_range(signals: &[&SampledSignal], cap: f64) -> (f64, f64) {
    let m = signals
        .iter()
        .map(|s| sup_norm(s))
        .fold(0.0, f64::max)
        .min(cap);
    let m = if m > 0.0 { 1.1 * m } else { 1.0 };
    (-m, m)
}

fn pair_panel(
    title: &str,
    spec: &WaveletSpec,
    f: SampledSignal,
    hf: SampledSignal,
    x_range: (f64, f64),
) -> Panel {
    let y_range = symmetric_range(&[&f, &hf], 3.0);
    Panel {
        title: title.into(),
        curves: vec![
            Curve {
                signal: f,
                role: Role::Original,
                label: spec.name(),
            },
            Curve {
                signal: hf,
                role: Role::Transformed,
                label: format!("H {}", spec.name()),
            },
        ],
        x_range,
        y_range,
    }
}

/// Haar and cubic B-spline scaling functions with their transforms.
pub fn figure_1(cfg: &PvConfig) -> Result<FigureSpec> {
    let grid = Grid::symmetric(FIGURE_HALF_SPAN, FIGURE_STEP)?;
    let haar = WaveletSpec::haar_scaling();
    let h_haar = hilbert_pv_exact(&haar, &grid, cfg);
    let cubic = WaveletSpec::bspline_scaling(3)?;
    let f_cubic = sample(&cubic, &grid);
    let h_cubic = hilbert_spectral(&f_cubic, &SpectralConfig::default());
    FigureSpec::new(
        1,
        "Scaling functions and their Hilbert transforms",
        vec![
            pair_panel(
                "(a) Haar scaling function",
                &haar,
                sample(&haar, &grid),
                h_haar,
                (-4.0, 5.0),
            ),
            pair_panel("(b) cubic B-spline", &cubic, f_cubic, h_cubic, (-6.0, 6.0)),
        ],
    )
}

/// The kernel `1/(πx)`, sampled half a step off the origin and clipped.
pub fn figure_2() -> Result<FigureSpec> {
    let half = 4.0;
    let count = (2.0 * half / FIGURE_STEP) as usize;
    let grid = Grid::new(-half + FIGURE_STEP / 2.0, FIGURE_STEP, count)?;
    let kernel = SampledSignal::from_fn(grid, |x| 1.0 / (PI * x))?;
    FigureSpec::new(
        2,
        "Hilbert transform kernel",
        vec![Panel {
            title: "1/(πx)".into(),
            curves: vec![Curve {
                signal: kernel,
                role: Role::Kernel,
                label: "1/(πx)".into(),
            }],
            x_range: (-half, half),
            y_range: (-KERNEL_CLIP, KERNEL_CLIP),
        }],
    )
}

/// Spline wavelets of degree 0 to 3 with their transforms, one panel each.
pub fn figure_3(cfg: &PvConfig) -> Result<FigureSpec> {
    let grid = Grid::symmetric(FIGURE_HALF_SPAN, FIGURE_STEP)?;
    let mut panels = Vec::with_capacity(4);
    for d in 0..=3u32 {
        let spec = WaveletSpec::spline_wavelet(d)?;
        let f = sample(&spec, &grid);
        let hf = hilbert_pv_exact(&spec, &grid, cfg);
        panels.push(pair_panel(
            &format!("degree {d}"),
            &spec,
            f,
            hf,
            (-6.0, 6.0),
        ));
    }
    FigureSpec::new(3, "Spline wavelets and their Hilbert transforms", panels)
}

pub fn build_figure(id: u8, cfg: &PvConfig) -> Result<FigureSpec> {
    match id {
        1 => figure_1(cfg),
        2 => figure_2(),
        3 => figure_3(cfg),
        other => Err(crate::error::Error::InvalidParameter(format!(
            "figure id {other} is not 1, 2 or 3"
        ))),
    }
}
