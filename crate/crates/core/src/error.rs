//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by generators, engines, analyses and file formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("non-finite sample at index {index}")]
    NonFinite { index: usize },

    #[error("x = {x} is a breakpoint of the piecewise-constant function; its transform is singular there")]
    SingularPoint { x: f64 },

    #[error("too few usable points for a decay fit: {usable} usable of {total} in the window")]
    TooFewPoints { usable: usize, total: usize },

    #[error("window [{lo}, {hi}] is not contained in the grid span [{grid_lo}, {grid_hi}]")]
    WindowOutsideGrid {
        lo: f64,
        hi: f64,
        grid_lo: f64,
        grid_hi: f64,
    },

    #[error("probe x = {x} lies outside the grid span [{lo}, {hi}]")]
    ProbeOutsideGrid { x: f64, lo: f64, hi: f64 },

    #[error(
        "grid too narrow: window envelope is {edge_value:e} at the grid edge (limit {limit:e})"
    )]
    GridTooNarrow { edge_value: f64, limit: f64 },

    #[error("{0} is not a scaling function")]
    NotScalingFunction(String),

    #[error("parse error at row {row}: {message}")]
    Parse { row: usize, message: String },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("figure has no panels")]
    EmptyFigure,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
