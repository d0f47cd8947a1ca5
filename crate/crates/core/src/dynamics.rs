//! Mean-field diffusion dynamics over three compartments.
//!
//! The population splits into ignorant (below the trust cutoff, never
//! participates), susceptible (can receive the information), and
//! transmitter (actively spreads it). In normalized fractions `i + s + r = 1`
//! with
//!
//! ```text
//! di/dt = 0        ds/dt = −β·s·r        dr/dt = β·s·r
//! ```
//!
//! The transmitter fraction has the logistic closed form
//!
//! ```text
//! r(t) = (1−i)·r0 / ((1−i−r0)·e^(−(1−i)·β·t) + r0)
//! ```
//!
//! saturating at `1 − i`: every susceptible eventually gets the
//! information, the ignorant never do. This module provides the closed
//! form, a fixed-step RK4 integrator that cross-checks it, and the exact
//! inversion "when does `r` reach a given level".

use crate::error::{Error, Result};
use crate::trust::TrustDistribution;

/// One full scenario: population size, transmission rate, trust cutoff,
/// initial transmitter fraction, and the trust distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    /// Population size `N` (at least 2).
    pub n: u32,
    /// Transmission probability per unit time, in `[0, 1]`.
    pub beta: f64,
    /// Critical trust value in `[0, 1]`; individuals below it are ignorant.
    pub tc: f64,
    /// Initial transmitter fraction in `(0, 1)`; defaults to `1/N`
    /// (a single seeded individual).
    pub r0: f64,
    /// Distribution the population's trust values are drawn from.
    pub dist: TrustDistribution,
}

impl ModelParams {
    /// Builds a scenario with the default single-individual seed
    /// `r0 = 1/N`.
    ///
    /// # Errors
    /// `OutOfDomain` for `n < 2` or `beta`/`tc` outside `[0, 1]`;
    /// `InfeasibleState` if the seed fraction exceeds the participating
    /// fraction (impossible with the default seed unless nobody qualifies).
    pub fn new(n: u32, beta: f64, tc: f64, dist: TrustDistribution) -> Result<Self> {
        let r0 = 1.0 / n as f64;
        Self::with_r0(n, beta, tc, r0, dist)
    }

    /// Builds a scenario with an explicit initial transmitter fraction.
    ///
    /// # Errors
    /// As [`new`](Self::new), plus `OutOfDomain` for `r0` outside `(0, 1)`.
    pub fn with_r0(n: u32, beta: f64, tc: f64, r0: f64, dist: TrustDistribution) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfDomain {
                name: "n",
                value: n as f64,
                min: 2.0,
                max: f64::INFINITY,
            });
        }
        check_unit("beta", beta)?;
        check_unit("tc", tc)?;
        if !(r0 > 0.0 && r0 < 1.0) {
            return Err(Error::OutOfDomain {
                name: "r0",
                value: r0,
                min: f64::MIN_POSITIVE,
                max: 1.0,
            });
        }
        let participating = dist.survival_fraction(tc)?;
        if r0 > participating {
            return Err(Error::InfeasibleState {
                r0,
                limit: participating,
            });
        }
        Ok(ModelParams {
            n,
            beta,
            tc,
            r0,
            dist,
        })
    }

    /// Fraction of the population at or above the trust cutoff — the ceiling
    /// the transmitter fraction saturates towards.
    pub fn participating_fraction(&self) -> f64 {
        // Parameters were validated at construction; the cutoff is in range.
        self.dist
            .survival_fraction(self.tc)
            .expect("tc validated at construction")
    }

    /// Ignorant fraction `i = 1 − participating`.
    pub fn ignorant_fraction(&self) -> f64 {
        1.0 - self.participating_fraction()
    }

    /// Compartment fractions at `t = 0`.
    pub fn initial_state(&self) -> PopulationFractions {
        let ignorant = self.ignorant_fraction();
        PopulationFractions {
            ignorant,
            susceptible: 1.0 - ignorant - self.r0,
            transmitter: self.r0,
        }
    }
}

/// Normalized compartment fractions at one instant; they sum to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PopulationFractions {
    /// Below the trust cutoff; never participates.
    pub ignorant: f64,
    /// Participates but has not yet received the information.
    pub susceptible: f64,
    /// Has the information and spreads it.
    pub transmitter: f64,
}

impl PopulationFractions {
    /// Sum of the three fractions (should be 1 up to rounding).
    pub fn sum(&self) -> f64 {
        self.ignorant + self.susceptible + self.transmitter
    }
}

/// A time series of compartment states plus the informed head count `N·r`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    /// Strictly increasing sample times.
    pub times: Vec<f64>,
    /// Compartment fractions at each sample time.
    pub states: Vec<PopulationFractions>,
    /// Informed individuals `N·r(t)` — kept continuous, never rounded.
    pub informed: Vec<f64>,
}

impl Trajectory {
    /// Number of samples.
    pub fn len(&self) -> usize {
        self.times.len()
    }

    /// True when the trajectory holds no samples (it never does after a
    /// successful integration, but the standard pairing with `len` is kept).
    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// State at the final sample time.
    pub fn final_state(&self) -> PopulationFractions {
        *self.states.last().expect("trajectory has at least one sample")
    }

    /// Informed head count at the final sample time.
    pub fn final_informed(&self) -> f64 {
        *self.informed.last().expect("trajectory has at least one sample")
    }

    /// Appends one sample, deriving the informed count from `n`.
    fn record(&mut self, n: u32, t: f64, state: PopulationFractions) {
        self.times.push(t);
        self.states.push(state);
        self.informed.push(informed_count(n, state.transmitter));
    }
}

/// Closed-form transmitter fraction `r(t)` for ignorant fraction `i`.
///
/// Evaluated in the decay form `(1−i)·r0 / ((1−i−r0)·e^(−kt) + r0)` with
/// `k = (1−i)·β`, which is stable for arbitrarily large `t` (the exponential
/// underflows to zero and the expression settles on the `1−i` asymptote
/// instead of overflowing).
///
/// # Errors
/// `OutOfDomain` for negative/non-finite `t`, `i` outside `[0, 1)`,
/// nonpositive `r0`, or negative `beta`; `InfeasibleState` if `r0 > 1 − i`.
pub fn transmitter_fraction(t: f64, ignorant: f64, r0: f64, beta: f64) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::OutOfDomain {
            name: "t",
            value: t,
            min: 0.0,
            max: f64::MAX,
        });
    }
    if !(0.0..1.0).contains(&ignorant) {
        return Err(Error::OutOfDomain {
            name: "ignorant",
            value: ignorant,
            min: 0.0,
            max: 1.0,
        });
    }
    if !(r0 > 0.0) {
        return Err(Error::OutOfDomain {
            name: "r0",
            value: r0,
            min: f64::MIN_POSITIVE,
            max: 1.0,
        });
    }
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(Error::OutOfDomain {
            name: "beta",
            value: beta,
            min: 0.0,
            max: f64::MAX,
        });
    }
    let cap = 1.0 - ignorant;
    if r0 > cap {
        return Err(Error::InfeasibleState { r0, limit: cap });
    }
    if t == 0.0 {
        // Exact initial condition; the algebra below reproduces it only up
        // to rounding.
        return Ok(r0);
    }
    let k = cap * beta;
    Ok(cap * r0 / ((cap - r0) * (-k * t).exp() + r0))
}

/// Closed-form transmitter fraction when nobody is ignorant (`i = 0`);
/// delegates to [`transmitter_fraction`] so the two can never drift apart.
pub fn transmitter_fraction_no_ignorant(t: f64, r0: f64, beta: f64) -> Result<f64> {
    transmitter_fraction(t, 0.0, r0, beta)
}

/// Informed head count for a population of `n`: the continuous value `n·r`.
/// Layer comparisons are done on this continuous count; rounding is left to
/// rendering code.
pub fn informed_count(n: u32, r: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&r), "r = {r} outside [0, 1]");
    n as f64 * r
}

/// Integrates the compartment system with classic fixed-step RK4.
///
/// The derivative couples `s` and `r` through the single product `β·s·r`,
/// computed once per stage and applied with opposite signs, so `s + r` is
/// conserved to rounding and `i` stays bit-identical. Time stamps are
/// `j·dt` (not accumulated), with one shortened final step when `dt` does
/// not divide `t_end`.
///
/// # Errors
/// `OutOfDomain` for nonpositive `dt`, non-finite bounds, or `t_end < dt`.
pub fn integrate(params: &ModelParams, dt: f64, t_end: f64) -> Result<Trajectory> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::OutOfDomain {
            name: "dt",
            value: dt,
            min: f64::MIN_POSITIVE,
            max: f64::MAX,
        });
    }
    if !(t_end >= dt && t_end.is_finite()) {
        return Err(Error::OutOfDomain {
            name: "t_end",
            value: t_end,
            min: dt,
            max: f64::MAX,
        });
    }

    let beta = params.beta;
    let start = params.initial_state();
    let full_steps = (t_end / dt + 1e-9).floor() as u64;
    let remainder = t_end - full_steps as f64 * dt;
    let take_tail_step = remainder > 1e-12;
    let samples = full_steps as usize + 1 + usize::from(take_tail_step);

    let mut traj = Trajectory {
        times: Vec::with_capacity(samples),
        states: Vec::with_capacity(samples),
        informed: Vec::with_capacity(samples),
    };

    let mut state = start;
    traj.record(params.n, 0.0, state);
    for j in 1..=full_steps {
        state = rk4_step(state, beta, dt);
        traj.record(params.n, j as f64 * dt, state);
    }
    if take_tail_step {
        state = rk4_step(state, beta, remainder);
        traj.record(params.n, t_end, state);
    }

    Ok(traj)
}

/// One classic RK4 step of the `(s, r)` subsystem; `i` is constant.
fn rk4_step(state: PopulationFractions, beta: f64, h: f64) -> PopulationFractions {
    // Each stage's flux β·s·r feeds s and r with opposite signs, so the
    // accumulated increments are exact negations of each other.
    let flux = |s: f64, r: f64| beta * s * r;
    let s = state.susceptible;
    let r = state.transmitter;

    let k1 = flux(s, r);
    let k2 = flux(s - 0.5 * h * k1, r + 0.5 * h * k1);
    let k3 = flux(s - 0.5 * h * k2, r + 0.5 * h * k2);
    let k4 = flux(s - h * k3, r + h * k3);
    let increment = h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    PopulationFractions {
        ignorant: state.ignorant,
        susceptible: s - increment,
        transmitter: r + increment,
    }
}

/// Time at which the transmitter fraction reaches `target_r`, inverted from
/// the logistic closed form:
///
/// ```text
/// t = ln( target·(1−i−r0) / (r0·(1−i−target)) ) / ((1−i)·β)
/// ```
///
/// `target_r = r0` returns exactly 0. The time is proportional to `1/β`
/// with everything else fixed — doubling the transmission rate halves every
/// crossing time.
///
/// # Errors
/// `UnreachableLevel` if `beta = 0` or `target_r ≥ 1 − i` (the asymptote is
/// approached, never crossed); `OutOfDomain` if `target_r < r0`.
pub fn time_to_level(params: &ModelParams, target_r: f64) -> Result<f64> {
    let cap = 1.0 - params.ignorant_fraction();
    let r0 = params.r0;
    if params.beta == 0.0 || target_r >= cap {
        return Err(Error::UnreachableLevel {
            target: target_r,
            limit: cap,
            beta: params.beta,
        });
    }
    if !(target_r >= r0) {
        return Err(Error::OutOfDomain {
            name: "target_r",
            value: target_r,
            min: r0,
            max: cap,
        });
    }
    let k = cap * params.beta;
    let ratio = (target_r * (cap - r0)) / (r0 * (cap - target_r));
    Ok(ratio.ln() / k)
}

fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::OutOfDomain {
            name,
            value,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(())
}
