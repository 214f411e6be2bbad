//! Arbitrary-precision numerical engine for evaluating and certifying
//! closed-form identities among binomial-harmonic series, generalized
//! hypergeometric functions, complete elliptic integrals, and the
//! singular integrals that connect them.
//!
//! The crate is organized in layers:
//!
//! - [`numcore`]: precision contexts, exact rationals, fundamental
//!   constants, harmonic numbers, and digit-agreement comparison.
//! - [`special`]: gamma-family special functions (log-gamma, gamma,
//!   digamma, beta, Pochhammer symbols, gamma quotients).
//! - [`quad`]: double-exponential (tanh-sinh) quadrature with a catalog
//!   of named singular integrands.
//! - [`hyper`]: generalized hypergeometric evaluation and classical
//!   summation theorems (Gauss, Bailey, Dixon, Watson, Luke, Chu).
//! - [`elliptic`]: complete elliptic integrals K and E by AGM, singular
//!   values, and the central-binomial generating function.
//! - [`series`]: rate-aware summation of binomial-harmonic series with
//!   alternating-series acceleration and tail extrapolation.
//! - [`verify`]: the identity registry, verification runner, proof-chain
//!   replay, and machine-readable reports.
//!
//! Every real-valued computation is tied to a [`numcore::PrecisionContext`]
//! that fixes the MPFR working precision; verification re-runs each
//! evaluation at elevated precision to flag silent cancellation.

pub mod elliptic;
pub mod error;
pub mod hyper;
pub mod numcore;
pub mod quad;
pub mod series;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use numcore::{PrecisionContext, Rational, Real};
