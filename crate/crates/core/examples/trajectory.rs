//! Integrate the mean-field rumor model for a 150-person community and
//! check the numerical trajectory against the closed-form solution.
//!
//! Run with: `cargo run --example trajectory`

use dunbar_diffusion::{integrate, time_to_level, transmitter_fraction, ModelParams};
use dunbar_diffusion::trust::TrustDistribution;

fn main() -> dunbar_diffusion::Result<()> {
    // One seeded transmitter in a community of 150, trust cutoff 0.66:
    // only people with trust ≥ 0.66 (a third of a uniform population)
    // ever pass the rumor on.
    let params = ModelParams::new(150, 0.25, 0.66, TrustDistribution::uniform_unit())?;
    let traj = integrate(&params, 0.01, 120.0)?;

    let n = params.n as f64;
    println!("N = {}, beta = {}, tc = {}", params.n, params.beta, params.tc);
    println!(
        "participating fraction f = {:.4} ({:.1} people can transmit)\n",
        params.participating_fraction(),
        n * params.participating_fraction()
    );

    println!("{:>6} {:>10} {:>12} {:>12} {:>10}", "t", "informed", "rk4 r(t)", "closed form", "|diff|");
    let ignorant = params.ignorant_fraction();
    for &t in &[0.0, 20.0, 40.0, 60.0, 80.0, 100.0, 120.0] {
        let idx = traj.times.partition_point(|&x| x < t - 1e-9);
        let r_num = traj.states[idx].transmitter;
        let r_exact = transmitter_fraction(t, ignorant, params.r0, params.beta)?;
        println!(
            "{:>6.0} {:>10.2} {:>12.8} {:>12.8} {:>10.2e}",
            t,
            traj.informed[idx],
            r_num,
            r_exact,
            (r_num - r_exact).abs()
        );
    }

    let cap = params.participating_fraction();
    let t_half = time_to_level(&params, 0.5 * cap)?;
    let t_90 = time_to_level(&params, 0.9 * cap)?;
    println!("\nhalf of the reachable audience is informed at t = {t_half:.2}");
    println!("90% of the reachable audience is informed at t = {t_90:.2}");
    println!(
        "asymptote: {:.1} informed people out of {} (the rest never trust enough)",
        traj.final_informed(),
        params.n
    );
    Ok(())
}
