use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of {function} at {argument}")]
    Pole { function: &'static str, argument: f64 },

    #[error("hypergeometric series diverges: {0}")]
    Divergent(String),

    #[error("series failed to converge within {max_terms} terms")]
    NoConvergence { max_terms: usize },

    #[error("axis {axis}: sample {value} lies below the domain bound {bound}")]
    OutOfDomain { axis: usize, value: f64, bound: f64 },

    #[error("function value is not finite at {point:?}")]
    NonFinite { point: Vec<f64> },

    #[error("axis count mismatch: {left} vs {right}")]
    AxisMismatch { left: usize, right: usize },

    #[error("axis {axis} out of range for {axes} axes")]
    AxisOutOfRange { axis: usize, axes: usize },

    #[error("operation would produce {terms} terms, above the cap of {cap}")]
    TermCap { terms: usize, cap: usize },

    #[error("summation box holds {terms} terms, above the cap of {cap}")]
    BoxTooLarge { terms: u128, cap: u64 },

    #[error("invalid scheme: {0}")]
    InvalidScheme(String),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("hypergeometric factor vanishes in a denominator at q = {q}")]
    ZeroDenominator { q: f64 },

    #[error("residual at q = 1 is {residual}, expected |g(1)| <= {tolerance}")]
    UnitRootCheck { residual: f64, tolerance: f64 },
}

impl Error {
    /// True for errors caused by parameters outside a function's domain,
    /// as opposed to numerical failures encountered mid-computation.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Pole { .. }
                | Error::Divergent(_)
                | Error::OutOfDomain { .. }
                | Error::AxisMismatch { .. }
                | Error::AxisOutOfRange { .. }
                | Error::InvalidScheme(_)
                | Error::InvalidProblem(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
