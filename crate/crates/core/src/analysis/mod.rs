//! Checks that sampled transforms behave the way the theory says they should:
//! moments, decay rates, bound constants, Sobolev smoothness, the Bedrosian
//! identity and the integer-shift sums of scaling functions.
//!
//! Every quantity here is an empirical proxy. A "vanishing" moment is one
//! below a truncation-aware tolerance, a "finite" Sobolev norm is one that is
//! stable under grid refinement, and a bound constant is "finite" when it
//! stops growing as the span doubles.

mod bedrosian;
mod certificate;
mod decay;
mod moments;
mod partition;
mod sobolev;
mod tail;

pub use bedrosian::{bedrosian_residual, EDGE_ENVELOPE_LIMIT};
pub use certificate::{theorem_certificate, BoundCertificate, Theorem, STABILITY_TOLERANCE};
pub use decay::{fit_decay, DecayFit, Side, MIN_FIT_POINTS, NOISE_FLOOR_FACTOR};
pub use moments::{
    fourier_derivatives_at_zero, moments, predicted_fourier_derivative, MomentReport,
    MomentTolerance, MOMENT_TOLERANCE_FLOOR, SPECTRAL_IDENTITY, TRUNCATION_FACTOR,
};
pub use partition::partition_deviation;
pub use sobolev::{
    default_gamma_grid, smoothness_profile, sobolev_norm, SobolevEstimate, GRID_STABILITY_THRESHOLD,
};
pub use tail::{tail_limit, TailLimit};
