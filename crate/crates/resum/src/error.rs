use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at x = {0}")]
    Pole(f64),
    #[error("gamma function overflows at x = {0}")]
    Overflow(f64),
    #[error("transform coefficient {index} hits a gamma pole")]
    TransformPole { index: usize },
    #[error("amplitude factor undefined for beta = {0}")]
    Domain(f64),
    #[error("iterated root takes a non-integer power of a non-positive base")]
    ComplexValue,
    #[error("leading coefficient is zero")]
    ZeroLeadingCoefficient,
    #[error("parameter A_{0} has a vanishing slope and cannot be fitted")]
    DegenerateOrder(usize),
    #[error("function is undefined on every grid point")]
    NoDefinedPoint,
    #[error("no solutions to select from")]
    EmptySolutionSet,
    #[error("reference coefficient {0} is zero")]
    ZeroReferenceCoefficient(usize),
    #[error("finite-x evaluation is not available for {0}")]
    UnsupportedKind(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
