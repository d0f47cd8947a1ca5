//! Stochastic agent-based counterpart of the mean-field model.
//!
//! Each run draws exponential waiting times for individual
//! susceptible→transmitter conversions at rate `β·S·R/N` (the event-driven
//! scheme usually credited to Gillespie), so a trajectory is a pure jump
//! process that starts at the seeded transmitter count and climbs one
//! conversion at a time until the participating pool is exhausted. Runs are
//! reproducible: the same seed yields the same event path bit for bit, and
//! ensembles derive per-run seeds as `seed ^ k` so any run can be replayed
//! in isolation.
//!
//! Participant counts are fixed deterministically from the distribution
//! (`K = round(N·f(T_c))`, seeds `R₀ = round(N·r₀)`, floor one) rather than
//! re-sampled per run: every completed run then absorbs at exactly `K`
//! transmitters, which keeps the absorption count a sharp invariant instead
//! of a binomially smeared one. Sampling-level randomness is still
//! available separately through [`assign_trust`], which draws an explicit
//! agent population with per-agent trust values.

use crate::dynamics::ModelParams;
use crate::error::{Error, Result};
use crate::trust::TrustDistribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Number of evenly spaced sample times an ensemble is reduced onto.
pub const ENSEMBLE_GRID_POINTS: usize = 200;

/// Where an agent stands with respect to the rumor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AgentStatus {
    /// Trust below the cutoff: never participates.
    Ignorant,
    /// Participates and can still be converted.
    Susceptible,
    /// Actively spreading.
    Transmitter,
}

/// An explicit population of agents with sampled trust values.
#[derive(Debug, Clone)]
pub struct AgentPopulation {
    /// Per-agent trust draws from the configured distribution.
    pub trust: Vec<f64>,
    /// Per-agent status; consistent with `trust` and `tc` by construction.
    pub status: Vec<AgentStatus>,
    /// The cutoff that split participants from ignorants.
    pub tc: f64,
}

impl AgentPopulation {
    /// Number of agents.
    pub fn len(&self) -> usize {
        self.trust.len()
    }

    /// True when the population holds no agents.
    pub fn is_empty(&self) -> bool {
        self.trust.is_empty()
    }

    /// Counts of (ignorant, susceptible, transmitter) agents.
    pub fn counts(&self) -> (u32, u32, u32) {
        let mut tally = (0u32, 0u32, 0u32);
        for s in &self.status {
            match s {
                AgentStatus::Ignorant => tally.0 += 1,
                AgentStatus::Susceptible => tally.1 += 1,
                AgentStatus::Transmitter => tally.2 += 1,
            }
        }
        tally
    }
}

/// Samples `n` agents' trust from `dist`, marks those at or above `tc` as
/// participants, and promotes one uniformly chosen participant to the
/// seeding transmitter. A single seeded stream drives both the trust draws
/// and the seed choice, so the whole population is a pure function of
/// `(dist, n, tc, seed)`.
///
/// # Errors
/// `OutOfDomain` for `n < 2` or a cutoff outside the unit interval;
/// `NoSeedTransmitter` when no agent clears the cutoff.
pub fn assign_trust(
    dist: &TrustDistribution,
    n: u32,
    tc: f64,
    seed: u64,
) -> Result<AgentPopulation> {
    if n < 2 {
        return Err(Error::OutOfDomain {
            name: "n",
            value: n as f64,
            min: 2.0,
            max: f64::INFINITY,
        });
    }
    if !(0.0..=1.0).contains(&tc) {
        return Err(Error::OutOfDomain {
            name: "tc",
            value: tc,
            min: 0.0,
            max: 1.0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trust = dist.sample_with_rng(&mut rng, n as usize)?;
    let mut status: Vec<AgentStatus> = trust
        .iter()
        .map(|&x| {
            if x >= tc {
                AgentStatus::Susceptible
            } else {
                AgentStatus::Ignorant
            }
        })
        .collect();
    let qualifying: Vec<usize> = status
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == AgentStatus::Susceptible)
        .map(|(idx, _)| idx)
        .collect();
    if qualifying.is_empty() {
        return Err(Error::NoSeedTransmitter { tc });
    }
    let chosen = qualifying[rng.gen_range(0..qualifying.len())];
    status[chosen] = AgentStatus::Transmitter;
    Ok(AgentPopulation { trust, status, tc })
}

/// One stochastic trajectory: the event times and the transmitter count
/// after each event. `times[0]` is 0 with the seeded count; every later
/// entry records one conversion.
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticRun {
    /// Event times, strictly increasing from 0.
    pub times: Vec<f64>,
    /// Transmitter count right after the matching event.
    pub transmitters: Vec<u32>,
    /// Size of the participating pool `K`; the absorbing count.
    pub participants: u32,
    /// True when the run exhausted its susceptibles within the horizon.
    pub absorbed: bool,
}

impl StochasticRun {
    /// Transmitter count at time `t ≥ 0`, as a right-continuous step
    /// function of the event path.
    pub fn transmitters_at(&self, t: f64) -> u32 {
        let idx = self.times.partition_point(|&ev| ev <= t);
        if idx == 0 {
            0
        } else {
            self.transmitters[idx - 1]
        }
    }

    /// First event time at which the transmitter count reaches `count`,
    /// or `None` if the run never gets there.
    pub fn first_time_reaching(&self, count: u32) -> Option<f64> {
        let idx = self.transmitters.partition_point(|&c| c < count);
        self.times.get(idx).copied()
    }
}

/// Runs one seeded stochastic trajectory up to `t_end`.
///
/// The conversion rate in a state with `S` susceptibles and `R`
/// transmitters is `β·S·R/N`; waiting times are inverse-transform
/// exponentials, one uniform draw per event. A rate of zero (exhausted
/// pool, or `β = 0`) ends the run; a waiting time that overshoots the
/// horizon ends it unabsorbed.
///
/// # Errors
/// `OutOfDomain` when `t_end` is negative or not finite.
pub fn simulate_run(params: &ModelParams, seed: u64, t_end: f64) -> Result<StochasticRun> {
    if !(t_end.is_finite() && t_end >= 0.0) {
        return Err(Error::OutOfDomain {
            name: "t_end",
            value: t_end,
            min: 0.0,
            max: f64::MAX,
        });
    }
    let n = params.n as f64;
    let fraction = params.participating_fraction();
    let seeds = ((n * params.r0).round() as u32).max(1);
    // r0 ≤ f is validated at construction, so rounding keeps K ≥ R₀ except
    // when both round to zero and the floor lifts R₀; clamp K to match.
    let participants = ((n * fraction).round() as u32).max(seeds);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut susceptible = participants - seeds;
    let mut transmitter = seeds;
    let mut t = 0.0;
    let mut times = vec![0.0];
    let mut transmitters = vec![transmitter];
    let absorbed;
    loop {
        let rate = params.beta * susceptible as f64 * transmitter as f64 / n;
        if rate <= 0.0 {
            absorbed = susceptible == 0;
            break;
        }
        let u: f64 = rng.gen();
        t += -(1.0 - u).ln() / rate;
        if !(t <= t_end) {
            absorbed = false;
            break;
        }
        susceptible -= 1;
        transmitter += 1;
        times.push(t);
        transmitters.push(transmitter);
    }
    Ok(StochasticRun {
        times,
        transmitters,
        participants,
        absorbed,
    })
}

/// Ensemble statistics on a fixed time grid: per-point mean and population
/// standard deviation of the transmitter fraction `R(t)/N` across runs.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleResult {
    /// Sample times: `ENSEMBLE_GRID_POINTS` evenly spaced points from 0 to
    /// `t_end` inclusive.
    pub times: Vec<f64>,
    /// Mean transmitter fraction at each sample time.
    pub mean_r: Vec<f64>,
    /// Population standard deviation of the fraction at each sample time.
    pub std_r: Vec<f64>,
    /// Number of runs aggregated.
    pub runs: u32,
    /// Base seed; run `k` used `seed ^ k`.
    pub seed: u64,
}

/// Runs `runs` independent trajectories in parallel and reduces them onto
/// a fixed 200-point time grid. Run `k` is seeded with `seed ^ k`, so
/// results are independent of thread scheduling and any single run can be
/// reproduced by [`simulate_run`] with that derived seed.
///
/// # Errors
/// `OutOfDomain` for `runs < 1` or a nonpositive/non-finite `t_end`.
pub fn simulate_ensemble(
    params: &ModelParams,
    runs: u32,
    seed: u64,
    t_end: f64,
) -> Result<EnsembleResult> {
    if runs < 1 {
        return Err(Error::OutOfDomain {
            name: "runs",
            value: runs as f64,
            min: 1.0,
            max: u32::MAX as f64,
        });
    }
    if !(t_end.is_finite() && t_end > 0.0) {
        return Err(Error::OutOfDomain {
            name: "t_end",
            value: t_end,
            min: f64::MIN_POSITIVE,
            max: f64::MAX,
        });
    }

    let trajectories: Vec<StochasticRun> = (0..runs)
        .into_par_iter()
        .map(|k| simulate_run(params, seed ^ k as u64, t_end))
        .collect::<Result<_>>()?;

    let last = ENSEMBLE_GRID_POINTS - 1;
    let times: Vec<f64> = (0..ENSEMBLE_GRID_POINTS)
        .map(|j| {
            if j == last {
                t_end
            } else {
                t_end * j as f64 / last as f64
            }
        })
        .collect();

    let n = params.n as f64;
    let mut mean_r = Vec::with_capacity(times.len());
    let mut std_r = Vec::with_capacity(times.len());
    for &t in &times {
        let mut sum = 0.0;
        for run in &trajectories {
            sum += run.transmitters_at(t) as f64 / n;
        }
        let mean = sum / runs as f64;
        let mut sq = 0.0;
        for run in &trajectories {
            let dev = run.transmitters_at(t) as f64 / n - mean;
            sq += dev * dev;
        }
        mean_r.push(mean);
        std_r.push((sq / runs as f64).sqrt());
    }

    Ok(EnsembleResult {
        times,
        mean_r,
        std_r,
        runs,
        seed,
    })
}
