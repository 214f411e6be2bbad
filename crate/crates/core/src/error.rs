//! Error type shared by every module in the crate.

/// Errors produced by evaluation, summation, quadrature, and the
/// verification runner.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("requested decimal digits {0} outside supported range 1..=10000")]
    DigitsOutOfRange(u32),

    #[error("unknown constant name `{0}`")]
    UnknownConstant(String),

    #[error("gamma-family pole at nonpositive integer argument {0}")]
    GammaPole(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("divergent: {0}")]
    Divergent(String),

    #[error("method not applicable: {0}")]
    MethodInapplicable(String),

    #[error("precision cap of {cap} digits exceeded by request for {requested}; pass --force-cap to clamp")]
    CapExceeded { cap: u32, requested: u32 },

    #[error("quadrature did not converge within maximum level {0}")]
    MaxLevelExceeded(u32),

    #[error("quadrature diverges; integrand appears to have a non-integrable singularity")]
    NonIntegrable,

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("unknown integrand name `{0}`")]
    UnknownIntegrand(String),

    #[error("non-finite value produced in {0}")]
    NonFinite(&'static str),

    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
