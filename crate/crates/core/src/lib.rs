//! Hilbert transforms of wavelets and scaling functions, computed two
//! independent ways and checked against the decay, vanishing-moment and
//! smoothness properties they are supposed to have.

pub mod analysis;
pub mod error;
pub mod hilbert;
pub mod numerics;
pub mod report_io;
pub mod spectrum;
pub mod wavelets;

pub use error::{Error, Result};
pub use numerics::{Grid, SampledSignal};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/signals.md")]
    mod signals {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/transforms.md")]
    mod transforms {}
    #[doc = include_str!("../../../book/src/analysis.md")]
    mod analysis {}
    #[doc = include_str!("../../../book/src/formats.md")]
    mod formats {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
