use std::fmt;

/// Work estimate attached to a refusal. Powers of two print as `2^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Work(pub u128);

impl fmt::Display for Work {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_power_of_two() && self.0 >= 1024 {
            write!(f, "2^{}", self.0.trailing_zeros())
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("gcd({n}, {q}) != 1: cyclotomic cosets undefined")]
    NotCoprime { n: usize, q: usize },

    #[error("{0}")]
    InvalidInput(String),

    #[error("{what} needs {required} operations, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        required: Work,
        budget: Work,
    },

    #[error("zero set is not {0}: the dual zero set is not contained in it")]
    NotSelfOrthogonal(&'static str),

    #[error("basis is not self-dual")]
    NotSelfDualBasis,

    #[error("polynomial coefficient lies outside the base field")]
    CoefficientOutsideBaseField,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn budget(what: &'static str, required: u128, budget: u128) -> Self {
        Error::BudgetExceeded {
            what,
            required: Work(required),
            budget: Work(budget),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
