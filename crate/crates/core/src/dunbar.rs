//! Layer-cutoff analysis: which trust cutoff lets information reach a
//! Dunbar layer?
//!
//! Dunbar's hierarchy nests acquaintance circles of cumulative sizes
//! 5, 15, 50, 150 (then 500, 1500, 5000). The asymptotic informed count of
//! the diffusion model is `N·f(T_c)` with `f` the survival fraction of the
//! trust distribution, so "reach layer `L`" pins the cutoff through the
//! inverse survival: the largest `T_c` with `N·f(T_c) ≥ L`. That value
//! depends only on the distribution and `N` — never on the transmission
//! rate `β` or the seed `r0`, which only set *when* the asymptote is
//! approached. [`beta_independence_check`] turns that claim into an
//! executable check.

use crate::dynamics::{self, ModelParams};
use crate::error::{Error, Result};
use crate::trust::{DriverRange, TrustDistribution};

/// Default layer sizes analyzed throughout: support clique, sympathy
/// group, band, and the full Dunbar number.
pub const DEFAULT_LAYERS: [u32; 4] = [5, 15, 50, 150];

/// An ordered list of layer sizes (strictly increasing, all at least 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DunbarLayers {
    levels: Vec<u32>,
}

impl Default for DunbarLayers {
    fn default() -> Self {
        DunbarLayers {
            levels: DEFAULT_LAYERS.to_vec(),
        }
    }
}

impl DunbarLayers {
    /// Validates and wraps a custom layer list.
    ///
    /// # Errors
    /// `OutOfDomain` if the list is empty, contains zero, or is not
    /// strictly increasing.
    pub fn new(levels: Vec<u32>) -> Result<Self> {
        let increasing = levels.windows(2).all(|w| w[0] < w[1]);
        if levels.is_empty() || levels[0] == 0 || !increasing {
            return Err(Error::OutOfDomain {
                name: "layers",
                value: f64::NAN,
                min: 1.0,
                max: f64::INFINITY,
            });
        }
        Ok(DunbarLayers { levels })
    }

    /// The layer sizes, smallest first.
    pub fn levels(&self) -> &[u32] {
        &self.levels
    }
}

/// One solved row: the cutoff at which population `n` still informs `layer`
/// people asymptotically. `cutoff` is `None` when no cutoff can do it
/// (the layer exceeds the number of participants even at the support
/// minimum); [`feasible`](Self::feasible) mirrors that.
#[derive(Debug, Clone, PartialEq)]
pub struct CutoffResult {
    pub n: u32,
    pub layer: u32,
    pub dist: TrustDistribution,
    pub cutoff: Option<f64>,
}

impl CutoffResult {
    /// True when a cutoff exists for this `(n, layer)` pair.
    pub fn feasible(&self) -> bool {
        self.cutoff.is_some()
    }
}

/// Axis of a sweep table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    TrustCutoff,
    Alpha,
    PopulationSize,
}

/// One sweep row; `value` is `None` for infeasible entries so that ladders
/// over mixed feasibility still render completely.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub x: f64,
    pub value: Option<f64>,
}

/// An axis-ordered table of sweep results (axis values strictly increase).
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub axis: SweepAxis,
    pub rows: Vec<SweepRow>,
}

/// Solves for the largest trust cutoff at which the asymptotic informed
/// count still reaches `layer` out of a population of `n`.
///
/// Solved through the closed-form inverse survival at fraction `layer/n`;
/// the asymptotic informed count at the returned cutoff equals `layer`
/// exactly in the continuous model. `layer > n` yields an infeasible row,
/// not an error, so sweeps over mixed populations render completely;
/// `layer = n` is feasible at exactly the distribution's support minimum
/// (cutoff 0 for uniform trust on the unit interval).
///
/// # Errors
/// `OutOfDomain` for `n < 2` or `layer < 1` — those are malformed
/// questions rather than infeasible ones.
pub fn cutoff_for_layer(dist: &TrustDistribution, n: u32, layer: u32) -> Result<CutoffResult> {
    if n < 2 {
        return Err(Error::OutOfDomain {
            name: "n",
            value: n as f64,
            min: 2.0,
            max: f64::INFINITY,
        });
    }
    if layer < 1 {
        return Err(Error::OutOfDomain {
            name: "layer",
            value: layer as f64,
            min: 1.0,
            max: f64::INFINITY,
        });
    }
    // Even at the support minimum only n·survival(support_min) = n people
    // participate, so any larger layer is out of reach at every cutoff.
    let max_fraction = dist
        .survival_fraction(dist.support_min())
        .expect("support minimum is a valid cutoff");
    let needed = layer as f64 / n as f64;
    let cutoff = if needed <= max_fraction {
        Some(dist.cutoff_for_fraction(needed)?)
    } else {
        None
    };
    Ok(CutoffResult {
        n,
        layer,
        dist: dist.clone(),
        cutoff,
    })
}

/// Sweeps the trust cutoff over a regular grid on `[0, 1]` and tabulates
/// the asymptotic informed count `n·f(T_c)` at each point. With the default
/// step 0.01 the table has 101 rows from 0.00 to 1.00 inclusive.
///
/// # Errors
/// `OutOfDomain` unless `0 < step < 1` and `n ≥ 2`.
pub fn sweep_cutoffs(dist: &TrustDistribution, n: u32, step: f64) -> Result<SweepTable> {
    if !(step > 0.0 && step < 1.0) {
        return Err(Error::OutOfDomain {
            name: "step",
            value: step,
            min: f64::MIN_POSITIVE,
            max: 1.0,
        });
    }
    if n < 2 {
        return Err(Error::OutOfDomain {
            name: "n",
            value: n as f64,
            min: 2.0,
            max: f64::INFINITY,
        });
    }
    let points = (1.0 / step + 1e-9).floor() as usize + 1;
    let mut rows = Vec::with_capacity(points);
    for j in 0..points {
        // j·step can overshoot 1.0 by an ulp on the last point; clamp so the
        // survival domain check stays happy and the grid ends exactly at 1.
        let tc = (j as f64 * step).min(1.0);
        let informed = n as f64 * dist.survival_fraction(tc)?;
        rows.push(SweepRow {
            x: tc,
            value: Some(informed),
        });
    }
    Ok(SweepTable {
        axis: SweepAxis::TrustCutoff,
        rows,
    })
}

/// Solves the layer cutoff for each population size, tabulating how the
/// required trust rises as the network grows. Population sizes at or below
/// the layer yield infeasible rows rather than errors.
///
/// # Errors
/// `OutOfDomain` if `populations` is empty or not strictly increasing, or
/// for a malformed `(n, layer)` question per [`cutoff_for_layer`].
pub fn cutoff_vs_population(
    dist: &TrustDistribution,
    layer: u32,
    populations: &[u32],
) -> Result<SweepTable> {
    let increasing = populations.windows(2).all(|w| w[0] < w[1]);
    if populations.is_empty() || !increasing {
        return Err(Error::OutOfDomain {
            name: "populations",
            value: f64::NAN,
            min: 2.0,
            max: f64::INFINITY,
        });
    }
    let mut rows = Vec::with_capacity(populations.len());
    for &n in populations {
        let result = cutoff_for_layer(dist, n, layer)?;
        rows.push(SweepRow {
            x: n as f64,
            value: result.cutoff,
        });
    }
    Ok(SweepTable {
        axis: SweepAxis::PopulationSize,
        rows,
    })
}

/// Layer cutoff as a function of the power-law exponent, over a strictly
/// increasing α grid. Steeper exponents concentrate trust near the support
/// minimum, so the cutoff that still reaches the layer falls as α rises.
/// The table carries `(α, cutoff)`; renderers that want the `α·cutoff`
/// product derive it per row.
///
/// # Errors
/// `InfeasibleLayer` if `layer ≥ n` (the curve would be degenerate);
/// `OutOfDomain` for an empty/unsorted α grid or an α the power-law
/// constructor rejects.
pub fn alpha_cutoff_curve(
    n: u32,
    layer: u32,
    alphas: &[f64],
    driver: DriverRange,
) -> Result<SweepTable> {
    let increasing = alphas.windows(2).all(|w| w[0] < w[1]);
    if alphas.is_empty() || !increasing {
        return Err(Error::OutOfDomain {
            name: "alphas",
            value: f64::NAN,
            min: 1.0,
            max: f64::INFINITY,
        });
    }
    if layer >= n {
        return Err(Error::InfeasibleLayer { layer, n });
    }
    let mut rows = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let dist = TrustDistribution::power_law_on(alpha, 0.1, 1.0, driver)?;
        let result = cutoff_for_layer(&dist, n, layer)?;
        rows.push(SweepRow {
            x: alpha,
            value: result.cutoff,
        });
    }
    Ok(SweepTable {
        axis: SweepAxis::Alpha,
        rows,
    })
}

/// Executable witness that layer cutoffs do not depend on the transmission
/// rate.
///
/// Re-solves the cutoff under every `β` and compares the results bit for
/// bit (they must agree — `β` never enters the asymptotic computation).
/// As a dynamic cross-check, it then integrates the mean-field system at
/// the solved cutoff, each `β` out to its own saturation horizon (within a
/// quarter person of the asymptote), and requires the final informed
/// counts to agree within half a person. Returns `true` when both checks
/// hold; an infeasible layer passes vacuously (there is no cutoff to
/// disagree about).
///
/// # Errors
/// `OutOfDomain` if `betas` is empty or contains a nonpositive/non-finite
/// rate, or for a malformed `(n, layer)` question.
pub fn beta_independence_check(
    dist: &TrustDistribution,
    n: u32,
    layer: u32,
    betas: &[f64],
) -> Result<bool> {
    if betas.is_empty() || betas.iter().any(|b| !(*b > 0.0 && b.is_finite())) {
        return Err(Error::OutOfDomain {
            name: "betas",
            value: f64::NAN,
            min: f64::MIN_POSITIVE,
            max: f64::MAX,
        });
    }

    let mut solved: Option<Option<u64>> = None;
    for _beta in betas {
        let bits = cutoff_for_layer(dist, n, layer)?.cutoff.map(f64::to_bits);
        match &solved {
            None => solved = Some(bits),
            Some(prev) if *prev != bits => return Ok(false),
            Some(_) => {}
        }
    }
    let cutoff = match solved.flatten() {
        Some(bits) => f64::from_bits(bits),
        None => return Ok(true), // infeasible everywhere: nothing to compare
    };

    // Integrate each rate past its own saturation point — within a quarter
    // person of the asymptote N·f(T_c). A fixed shared horizon would sit
    // mid-transient for slow scenarios (the logistic rate k = f·β can be
    // arbitrarily small), where informed counts legitimately differ.
    let mut informed_finals = Vec::with_capacity(betas.len());
    for &beta in betas {
        let params = ModelParams::new(n, beta, cutoff, dist.clone())?;
        let target = params.participating_fraction() - 0.25 / n as f64;
        let t_end = if target <= params.r0 {
            // The seed alone already sits within a quarter person of the
            // asymptote (layer ≈ 1), so the state is essentially constant.
            1.0
        } else {
            1.05 * dynamics::time_to_level(&params, target)?
        };
        let dt = (t_end / 50_000.0).clamp(0.01, 1.0);
        let traj = dynamics::integrate(&params, dt, t_end)?;
        informed_finals.push(traj.final_informed());
    }
    let spread = informed_finals.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        - informed_finals.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(spread <= 0.5)
}
