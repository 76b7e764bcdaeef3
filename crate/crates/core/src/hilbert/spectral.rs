//! Fourier-multiplier Hilbert transform: `−j·sign(ω)` applied to a
//! zero-padded DFT.

use rustfft::num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::SampledSignal;
use crate::spectrum::{fft, ifft};

/// Settings for [`hilbert_spectral`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectralConfig {
    pad_factor: usize,
}

impl SpectralConfig {
    pub const DEFAULT_PAD_FACTOR: usize = 16;

    pub fn new(pad_factor: usize) -> Result<Self> {
        if pad_factor == 0 {
            return Err(Error::InvalidParameter(
                "pad factor must be at least 1".into(),
            ));
        }
        Ok(Self { pad_factor })
    }

    /// The transform is taken over `pad_factor × count` points.
    pub fn pad_factor(&self) -> usize {
        self.pad_factor
    }
}

impl Default for SpectralConfig {
    fn default() -> Self {
        Self {
            pad_factor: Self::DEFAULT_PAD_FACTOR,
        }
    }
}

/// Multiplies bin `k` by `−j·sign(ω_k)`; DC and, for even lengths, Nyquist are zeroed.
fn apply_quadrature_multiplier(buf: &mut [Complex64]) {
    let len = buf.len();
    buf[0] = Complex64::new(0.0, 0.0);
    for (k, c) in buf.iter_mut().enumerate().skip(1) {
        *c = if 2 * k < len {
            Complex64::new(c.im, -c.re)
        } else if 2 * k > len {
            Complex64::new(-c.im, c.re)
        } else {
            Complex64::new(0.0, 0.0)
        };
    }
}

/// Spectral Hilbert transform.
///
/// The samples are centred in a zero buffer of `pad_factor × count` points,
/// transformed, multiplied by `−j·sign(ω)` and transformed back; the window
/// that held the input is returned. Padding pushes the periodic images of the
/// `1/x` kernel away, leaving an error of order `1 / (pad_factor · span)`.
pub fn hilbert_spectral(f: &SampledSignal, cfg: &SpectralConfig) -> SampledSignal {
    let n = f.len();
    let len = n * cfg.pad_factor;
    let offset = (len - n) / 2;
    let mut buf = vec![Complex64::new(0.0, 0.0); len];
    for (slot, &v) in buf[offset..offset + n].iter_mut().zip(f.values()) {
        *slot = Complex64::new(v, 0.0);
    }
    fft(&mut buf);
    apply_quadrature_multiplier(&mut buf);
    ifft(&mut buf);

    let scale = 1.0 / len as f64;
    let window = &buf[offset..offset + n];
    let peak_re = window.iter().fold(0.0f64, |m, c| m.max(c.re.abs()));
    let peak_im = window.iter().fold(0.0f64, |m, c| m.max(c.im.abs()));
    assert!(
        peak_im <= 1e-10 * peak_re + 1e-300,
        "imaginary residue {:e} relative to {:e}",
        peak_im * scale,
        peak_re * scale
    );
    SampledSignal::new(*f.grid(), window.iter().map(|c| c.re * scale).collect())
        .expect("finite input gives finite output")
}
