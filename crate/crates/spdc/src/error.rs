//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by the dispersion, phase-matching and spectrum engines.
#[derive(Debug, Clone, Error)]
pub enum SpdcError {
    /// An evaluation was requested outside a model's stated validity interval.
    #[error("{quantity} = {value} outside validity interval [{min}, {max}]")]
    OutOfValidity {
        quantity: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// A bracketing root search found no sign change.
    #[error("no sign change of {function} over bracket [{lo:e}, {hi:e}]")]
    RootNotFound {
        function: &'static str,
        lo: f64,
        hi: f64,
    },

    /// The poling-period solve has no forward solution (k_p - 2 k_d <= 0).
    #[error("no quasi-phase-matching solution: k_p - 2 k_d = {denominator:e} rad/m is not positive")]
    NoQpmSolution { denominator: f64 },

    /// Adaptive quadrature failed to reach its tolerance.
    #[error("quadrature did not converge: last two estimates {previous:e}, {latest:e}")]
    QuadratureNotConverged { previous: f64, latest: f64 },

    /// Several grid samples failed; indices carried for diagnostics.
    #[error("spectrum evaluation failed at {} sample(s), first at index {}: {first}", indices.len(), indices[0])]
    SpectrumSamples {
        indices: Vec<usize>,
        first: Box<SpdcError>,
    },

    /// A curve did not cross its half-maximum level exactly twice.
    #[error("half-maximum crossed {crossings} time(s); need exactly 2 for a width")]
    Shape { crossings: usize },

    /// The spectral window truncates an amplitude that is still significant.
    #[error("spectral window clips the amplitude (|g| = {edge_amplitude:.3e} at the edge, limit {limit:.1e}); widen the window")]
    WindowClipping { edge_amplitude: f64, limit: f64 },

    /// Slit kernel wider than the frequency span of the grid.
    #[error("slit kernel width {kernel:e} rad/s exceeds grid span {span:e} rad/s")]
    KernelTooWide { kernel: f64, span: f64 },

    /// Invalid argument combinations caught at API boundaries.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Failure to parse a crystal dispersion data file.
    #[error("crystal file parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, SpdcError>;
