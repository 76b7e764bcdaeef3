//! Generators for every test function: the Haar family, centered B-spline
//! scaling functions, Chui–Wang spline wavelets, modulated windows and boxes.

mod bspline;
mod piecewise;
mod spline_wavelet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{Grid, SampledSignal};

pub use bspline::{cardinal as cardinal_bspline, centered as centered_bspline, MAX_DEGREE};
pub use piecewise::{make_haar_scaling, make_haar_wavelet, PiecewiseConstant};

use spline_wavelet::SplineWavelet;

/// Anything that can be evaluated pointwise on the real line.
pub trait Evaluate {
    fn eval(&self, x: f64) -> f64;
}

impl Evaluate for PiecewiseConstant {
    fn eval(&self, x: f64) -> f64 {
        PiecewiseConstant::eval(self, x)
    }
}

impl<F: Fn(f64) -> f64> Evaluate for F {
    fn eval(&self, x: f64) -> f64 {
        self(x)
    }
}

/// Localization window of a modulated wavelet.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "window", rename_all = "snake_case")]
pub enum Window {
    /// `(sin x / x)²`, bandlimited to `(-2, 2)`.
    Sinc2,
    /// `exp(-x² / 2σ²)`.
    Gauss { sigma: f64 },
}

impl Window {
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            Window::Sinc2 => {
                if x == 0.0 {
                    1.0
                } else {
                    let s = x.sin() / x;
                    s * s
                }
            }
            Window::Gauss { sigma } => (-0.5 * (x / sigma).powi(2)).exp(),
        }
    }

    /// Upper bound on `|w(x)|`, monotone in `|x|`.
    pub fn envelope(&self, x: f64) -> f64 {
        match *self {
            Window::Sinc2 => (1.0 / (x * x)).min(1.0),
            Window::Gauss { .. } => self.eval(x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WaveletKind {
    HaarScaling,
    HaarWavelet,
    BsplineScaling {
        degree: u32,
    },
    SplineWavelet {
        degree: u32,
    },
    ModulatedWindow {
        window: Window,
        omega0: f64,
        phase: f64,
    },
    Box {
        a: f64,
        b: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Shape {
    Piecewise(PiecewiseConstant),
    Bspline(u32),
    SplineWavelet(SplineWavelet),
    Modulated {
        window: Window,
        omega0: f64,
        phase: f64,
    },
}

/// A generator: its kind, support, and the data needed to evaluate it.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveletSpec {
    kind: WaveletKind,
    support: (f64, f64),
    shape: Shape,
}

fn check_degree(degree: u32) -> Result<()> {
    if degree > MAX_DEGREE {
        return Err(Error::InvalidParameter(format!(
            "degree {degree} exceeds the cap of {MAX_DEGREE}"
        )));
    }
    Ok(())
}

impl WaveletSpec {
    pub fn haar_scaling() -> Self {
        Self {
            kind: WaveletKind::HaarScaling,
            support: (0.0, 1.0),
            shape: Shape::Piecewise(make_haar_scaling()),
        }
    }

    pub fn haar_wavelet() -> Self {
        Self {
            kind: WaveletKind::HaarWavelet,
            support: (-1.0, 1.0),
            shape: Shape::Piecewise(make_haar_wavelet()),
        }
    }

    /// Indicator of `[a, b)`.
    pub fn boxcar(a: f64, b: f64) -> Result<Self> {
        let p = PiecewiseConstant::indicator(a, b)?;
        Ok(Self {
            kind: WaveletKind::Box { a, b },
            support: (a, b),
            shape: Shape::Piecewise(p),
        })
    }

    /// The unit box `[0, 1)`.
    pub fn unit_box() -> Self {
        Self::boxcar(0.0, 1.0).expect("valid interval")
    }

    pub fn bspline_scaling(degree: u32) -> Result<Self> {
        check_degree(degree)?;
        let r = (degree as f64 + 1.0) / 2.0;
        Ok(Self {
            kind: WaveletKind::BsplineScaling { degree },
            support: (-r, r),
            shape: Shape::Bspline(degree),
        })
    }

    pub fn spline_wavelet(degree: u32) -> Result<Self> {
        check_degree(degree)?;
        let w = SplineWavelet::new(degree);
        let r = w.half_support();
        Ok(Self {
            kind: WaveletKind::SplineWavelet { degree },
            support: (-r, r),
            shape: Shape::SplineWavelet(w),
        })
    }

    pub fn modulated_window(window: Window, omega0: f64, phase: f64) -> Result<Self> {
        if !(omega0.is_finite() && omega0 >= 0.0) || !phase.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "need finite omega0 >= 0 and finite phase, got {omega0}, {phase}"
            )));
        }
        if let Window::Gauss { sigma } = window {
            if !(sigma.is_finite() && sigma > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "sigma {sigma} must be positive"
                )));
            }
        }
        Ok(Self {
            kind: WaveletKind::ModulatedWindow {
                window,
                omega0,
                phase,
            },
            support: (f64::NEG_INFINITY, f64::INFINITY),
            shape: Shape::Modulated {
                window,
                omega0,
                phase,
            },
        })
    }

    /// Rebuilds a generator from its kind.
    pub fn from_kind(kind: WaveletKind) -> Result<Self> {
        match kind {
            WaveletKind::HaarScaling => Ok(Self::haar_scaling()),
            WaveletKind::HaarWavelet => Ok(Self::haar_wavelet()),
            WaveletKind::BsplineScaling { degree } => Self::bspline_scaling(degree),
            WaveletKind::SplineWavelet { degree } => Self::spline_wavelet(degree),
            WaveletKind::ModulatedWindow {
                window,
                omega0,
                phase,
            } => Self::modulated_window(window, omega0, phase),
            WaveletKind::Box { a, b } => Self::boxcar(a, b),
        }
    }

    pub fn kind(&self) -> WaveletKind {
        self.kind
    }

    /// Closed support interval; infinite for the modulated windows.
    pub fn support(&self) -> (f64, f64) {
        self.support
    }

    /// Scaling functions satisfy a partition of unity under integer shifts.
    pub fn is_scaling_function(&self) -> bool {
        matches!(
            self.kind,
            WaveletKind::HaarScaling | WaveletKind::BsplineScaling { .. }
        )
    }

    /// Exact step-function form, when there is one.
    pub fn as_piecewise(&self) -> Option<&PiecewiseConstant> {
        match &self.shape {
            Shape::Piecewise(p) => Some(p),
            _ => None,
        }
    }

    /// Short human-readable name, e.g. `spline-wavelet(3)`.
    pub fn name(&self) -> String {
        match self.kind {
            WaveletKind::HaarScaling => "haar-scaling".into(),
            WaveletKind::HaarWavelet => "haar-wavelet".into(),
            WaveletKind::BsplineScaling { degree } => format!("bspline-scaling({degree})"),
            WaveletKind::SplineWavelet { degree } => format!("spline-wavelet({degree})"),
            WaveletKind::ModulatedWindow {
                window,
                omega0,
                phase,
            } => match window {
                Window::Sinc2 => format!("sinc2-cos({omega0}, {phase})"),
                Window::Gauss { sigma } => format!("gauss-cos({sigma}, {omega0}, {phase})"),
            },
            WaveletKind::Box { a, b } => format!("box({a}, {b})"),
        }
    }
}

impl Evaluate for WaveletSpec {
    fn eval(&self, x: f64) -> f64 {
        match &self.shape {
            Shape::Piecewise(p) => p.eval(x),
            Shape::Bspline(d) => centered_bspline(*d, x),
            Shape::SplineWavelet(w) => w.eval(x),
            Shape::Modulated {
                window,
                omega0,
                phase,
            } => window.eval(x) * (omega0 * x + phase).cos(),
        }
    }
}

pub fn make_bspline_scaling(degree: u32) -> Result<WaveletSpec> {
    WaveletSpec::bspline_scaling(degree)
}

pub fn make_spline_wavelet(degree: u32) -> Result<WaveletSpec> {
    WaveletSpec::spline_wavelet(degree)
}

pub fn make_modulated_window(window: Window, omega0: f64, phase: f64) -> Result<WaveletSpec> {
    WaveletSpec::modulated_window(window, omega0, phase)
}

/// Pointwise evaluation at the grid abscissas.
pub fn sample(source: &impl Evaluate, grid: &Grid) -> SampledSignal {
    SampledSignal::from_fn(*grid, |x| source.eval(x)).expect("generators are finite")
}

/// The spline wavelet as `Σ c_n N_m(2(x + shift) - n)`: returns `(order, shift, c)`.
///
/// Exposed so that oracles can transform the wavelet term by term.
pub fn spline_wavelet_expansion(spec: &WaveletSpec) -> Option<(usize, f64, Vec<f64>)> {
    match &spec.shape {
        Shape::SplineWavelet(w) => Some((w.order(), w.half_support(), w.coefficients().to_vec())),
        _ => None,
    }
}
