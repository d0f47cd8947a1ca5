//! Crate-wide error type shared by distributions, dynamics, and solvers.

use thiserror::Error;

/// Errors raised by constructors, evaluators, and simulations.
///
/// Everything here is a caller-input problem; no variant wraps an I/O or
/// allocation failure. All variants are cheap to clone and compare, which
/// keeps them easy to assert on in tests.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A numeric argument fell outside its documented domain.
    #[error("{name} = {value} is outside [{min}, {max}]")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// Distribution parameters violate a support or exponent constraint.
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// Initial compartments are inconsistent: the transmitter fraction
    /// exceeds the fraction of the population that participates at all.
    #[error("infeasible initial state: r0 = {r0} exceeds the participating fraction {limit}")]
    InfeasibleState { r0: f64, limit: f64 },

    /// The requested transmitter level lies at or above the asymptote (or
    /// transmission is switched off), so no finite time reaches it.
    #[error("unreachable level: target r = {target} with asymptote {limit} and beta = {beta}")]
    UnreachableLevel { target: f64, limit: f64, beta: f64 },

    /// No agent sits at or above the trust cutoff, so there is nobody to
    /// seed the information with.
    #[error("no agent at or above trust cutoff {tc}; cannot seed a transmitter")]
    NoSeedTransmitter { tc: f64 },

    /// A layer target cannot be met by any cutoff for this population size.
    #[error("layer {layer} is infeasible for population size {n}")]
    InfeasibleLayer { layer: u32, n: u32 },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
