//! Event-driven stochastic runs versus the mean-field curve — including
//! the one place they systematically disagree.
//!
//! Every individual run absorbs at exactly N·f informed (the mean-field
//! asymptote), and each run's shape matches the logistic knee. But the
//! *ensemble average* lags the mean-field curve: with a single seeded
//! transmitter, early growth is a branching process whose random takeoff
//! delay shifts each run's knee by a different amount, and averaging
//! over shifted knees flattens and delays the aggregate. That bias does
//! not shrink with more runs or bigger populations; it is a property of
//! starting from one transmitter. See the README's "Known limitation"
//! section for the arithmetic.
//!
//! Run with: `cargo run --release --example stochastic_ensemble`

use dunbar_diffusion::{integrate, simulate_ensemble, simulate_run, time_to_level, ModelParams};
use dunbar_diffusion::trust::TrustDistribution;

fn main() -> dunbar_diffusion::Result<()> {
    let params = ModelParams::new(1500, 0.25, 0.9, TrustDistribution::uniform_unit())?;
    let participants = (1500.0 * params.participating_fraction()).round();

    // 1. absorption: long-horizon runs always stop at N·f exactly
    let mut absorbed_at = Vec::new();
    for k in 0..200u32 {
        let run = simulate_run(&params, 42 ^ k as u64, 4000.0)?;
        assert!(run.absorbed);
        absorbed_at.push(*run.transmitters.last().unwrap());
    }
    assert!(absorbed_at.iter().all(|&c| c as f64 == participants));
    println!(
        "all 200 long runs absorb at exactly {participants} informed = N·f (N = {}, f = {:.2})",
        params.n,
        params.participating_fraction()
    );

    // 2. ensemble mean vs mean-field on the way up
    let cap = params.participating_fraction();
    let t90 = time_to_level(&params, 0.9 * cap)?;
    let ensemble = simulate_ensemble(&params, 500, 42, t90)?;
    let traj = integrate(&params, 0.01, t90)?;

    println!("\n500 runs to t90 = {t90:.1} (mean-field 90%-saturation time)\n");
    println!(
        "{:>8} {:>16} {:>16} {:>8}",
        "t", "ensemble mean", "mean-field", "ratio"
    );
    for j in (0..ensemble.times.len()).step_by(ensemble.times.len() / 10) {
        let t = ensemble.times[j];
        let idx = traj.times.partition_point(|&x| x < t - 1e-9);
        let field = traj.states[idx.min(traj.states.len() - 1)].transmitter;
        let mean = ensemble.mean_r[j];
        println!(
            "{t:>8.1} {:>16.1} {:>16.1} {:>8.3}",
            mean * 1500.0,
            field * 1500.0,
            mean / field
        );
    }

    println!("\nthe ratio dips hardest mid-knee (~0.8): the ensemble mean lags");
    println!("the deterministic curve even though every single run, shifted to");
    println!("its own takeoff time, follows the same logistic shape.");
    Ok(())
}
