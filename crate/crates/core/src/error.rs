use thiserror::Error;

/// Errors raised by the algebra kernel, the curve conversions and the classifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("unsupported degree {found} (at most {max} allowed)")]
    UnsupportedDegree { found: usize, max: usize },

    #[error("the Frenet frame is not rational: the curve is not 2-PH")]
    NotRationalFrame,

    #[error("the curve is a straight line: |a' x a''| vanishes identically")]
    LineDegeneracy,

    #[error("proportional pair: z1/z2 is constant, the Wronskian vanishes identically")]
    ProportionalPair,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
