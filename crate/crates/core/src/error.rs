use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomial has {found} exponents but the ring has {expected} variables")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ring needs at least one variable")]
    EmptyRing,

    #[error("characteristic {0} is neither 0 nor a prime")]
    NotPrime(u64),

    #[error("ideal is not m-primary: the quotient is not finite dimensional")]
    NotMPrimary,

    #[error("ideal is not stable: {0}")]
    NotStable(String),

    #[error("no Artinian quotient has this Hilbert function: degree {degree}, {reason} (deficit {deficit})")]
    InfeasibleHilbert {
        degree: usize,
        reason: &'static str,
        deficit: u64,
    },

    #[error("linear form: {0}")]
    InvalidLinearForm(String),

    #[error("random search needs at least one trial for an ideal that is neither stable nor Borel-fixed")]
    NoTrials,

    #[error("exponent arithmetic overflowed")]
    Overflow,

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
