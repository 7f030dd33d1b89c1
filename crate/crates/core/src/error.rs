use alloc::string::String;

/// Errors raised by the polynomial and sweep routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the zero polynomial is not a valid input here")]
    ZeroPolynomial,

    #[error("polynomial has a zero constant term")]
    ZeroConstantTerm,

    #[error("polynomial must have degree at least {0}")]
    DegreeTooSmall(usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("polynomial vanishes identically modulo {0}")]
    VanishesModP(u64),

    #[error("polynomial is not squarefree modulo {0}")]
    NotSquarefreeModP(u64),

    #[error("invalid class-B exponents: {0}")]
    InvalidClassB(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse polynomial: {0}")]
    Parse(String),

    #[error("isolating interval is invalid: {0}")]
    BadInterval(String),

    #[error("beta = {0} lies outside (1, golden ratio]")]
    BetaOutOfDomain(String),

    #[error("sign undecided after {0} bits of refinement")]
    PrecisionExhausted(u32),

    #[error("value does not fit: {0}")]
    Overflow(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = core::result::Result<T, Error>;
