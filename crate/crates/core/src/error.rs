use thiserror::Error;

use crate::label::ClassLabel;

/// Every failure the library can report.
///
/// Sample-level failures (`PivotNotUnit`, `DegenerateSpanAtBase`, `NotAPoint`, ...) are
/// normally absorbed by the resampling loops; they only escape when a caller works with a
/// single base point directly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by a jet with zero constant term")]
    DivisionByNonUnit,
    #[error("no unit pivot available: base point is not generic")]
    PivotNotUnit,
    #[error("binary form has degree {found}, expected {expected}")]
    WrongDegree { expected: usize, found: usize },

    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown variable `{0}` (only u and v are allowed)")]
    UnknownVariable(String),
    #[error("point map {0} is identically zero")]
    ZeroPointMap(usize),
    #[error("unknown class label `{0}`")]
    UnknownLabel(String),

    #[error("the three spanning points are dependent at this base point")]
    DegenerateSpanAtBase,
    #[error("the spanning points never span a plane")]
    DegenerateChart,
    #[error("the planes of the chart do not fill P4 (realization dimension {0})")]
    DegenerateCongruence(usize),

    #[error("focal locus for a generic direction is not a point")]
    NotAPoint,
    #[error("focal locus for this direction is not a line")]
    NotALine,
    #[error("a pencil of characteristic forms is identically zero")]
    ZeroPencil,
    #[error("every point of the line is focal")]
    WholeLineFocal,
    #[error("expected a single focus on the general line, found {0}")]
    UnexpectedFocusCount(usize),
    #[error("focal-point image has dimension {0}, impossible for an alpha congruence")]
    UnexpectedFocusDim(usize),
    #[error("root is not simple; it cannot be followed through the jet ring")]
    MultipleRoot,

    #[error("a one-parameter family was expected, but the chart depends on v")]
    NotOneParameter,
    #[error("non-generic sample")]
    NonGenericSample,
    #[error("resample budget exhausted after {0} attempts")]
    NonGenericChart(usize),
    #[error("rank/direction pattern outside the classification table at every sample")]
    InconsistentSample,
    #[error("certificate check `{0}` failed")]
    CertificateFailed(String),

    #[error("could not generate a {0} chart within the attempt budget")]
    GenerationFailed(ClassLabel),
    #[error("transform matrix is singular")]
    SingularTransform,
}

pub type Result<T> = std::result::Result<T, Error>;
