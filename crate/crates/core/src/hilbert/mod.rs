//! The two Hilbert transform engines and the step-function oracle.
//!
//! * [`hilbert_pv`] discretizes the principal-value convolution with `1/(πt)`;
//! * [`hilbert_spectral`] multiplies the Fourier transform by `−j·sign(ω)`;
//! * [`hilbert_box_closed_form`] is exact for piecewise-constant inputs.
//!
//! The first two share no code path beyond the sampled input, so their
//! agreement is evidence for both.

mod closed_form;
mod pv;
mod spectral;

pub use closed_form::{hilbert_box_closed_form, sample_closed_form};
pub use pv::{hilbert_pv, hilbert_pv_exact, PvConfig};
pub use spectral::{hilbert_spectral, SpectralConfig};
