//! Trust-gated rumor diffusion across Dunbar's social layers.
//!
//! A rumor spreads through a population of `N` people, but only those who
//! trust its source at least `T_c` ever pass it on. That single gate links
//! two classic models: SIR-style spreading dynamics (ignorant /
//! susceptible / transmitter compartments) and the layered structure of
//! human social circles — the cumulative 5 / 15 / 50 / 150 hierarchy
//! popularized by Dunbar. The asymptotic informed count is `N·f(T_c)`,
//! with `f` the survival function of the trust distribution, so "how much
//! trust does it take to inform my 50-person band?" has a closed-form
//! answer that is independent of how fast the rumor moves.
//!
//! The crate provides:
//!
//! - [`trust`]: trust distributions (uniform, bounded power law) with
//!   exact survival functions, inverse-survival cutoffs, and seeded
//!   sampling;
//! - [`dynamics`]: the mean-field model — closed-form transmitter curve,
//!   time-to-level inversion, and a Runge–Kutta integrator for the full
//!   `(i, s, r)` state;
//! - [`dunbar`]: layer-cutoff solving, sweeps, and scaling curves over
//!   population size and power-law exponent;
//! - [`monte_carlo`]: a stochastic agent-level counterpart with
//!   reproducible seeded ensembles;
//! - [`table`] and [`chart`]: deterministic CSV and SVG renderers for the
//!   results;
//! - [`cli`]: the `dunbar-diffusion` command-line frontend over all of
//!   the above.
//!
//! The `examples/` directory demonstrates each capability as a runnable
//! program; start with `trajectory` and `layer_cutoffs`.

// Negated comparisons like `!(t <= t_end)` are deliberate throughout:
// unlike the un-negated opposite, they treat NaN as out of range.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod chart;
pub mod cli;
pub mod dunbar;
pub mod dynamics;
pub mod error;
pub mod monte_carlo;
pub mod table;
pub mod trust;

pub use dunbar::{cutoff_for_layer, CutoffResult, DunbarLayers, DEFAULT_LAYERS};
pub use dynamics::{integrate, time_to_level, transmitter_fraction, ModelParams, Trajectory};
pub use error::{Error, Result};
pub use monte_carlo::{assign_trust, simulate_ensemble, simulate_run, EnsembleResult};
pub use trust::{DriverRange, TrustDistribution};
