//! The transmission rate β sets *when* the audience is reached, never
//! *how large* it is. Layer cutoffs are therefore β-independent — and
//! doubling β exactly halves every timing quantity, down to the last
//! floating-point bit.
//!
//! Run with: `cargo run --release --example beta_independence`

use dunbar_diffusion::dunbar::beta_independence_check;
use dunbar_diffusion::{simulate_run, time_to_level, ModelParams};
use dunbar_diffusion::trust::TrustDistribution;

fn main() -> dunbar_diffusion::Result<()> {
    let uniform = TrustDistribution::uniform_unit();
    let power = TrustDistribution::power_law(2.1)?;

    // 1. cutoffs re-solved under different β agree bit for bit, and the
    // integrated dynamics reach the same asymptote
    let betas = [0.1, 0.25, 0.5, 1.0];
    for (label, dist) in [("uniform", &uniform), ("power law 2.1", &power)] {
        for (n, layer) in [(150u32, 50u32), (500, 150), (5000, 150)] {
            let ok = beta_independence_check(dist, n, layer, &betas)?;
            println!("{label:<14} (N = {n:>4}, layer {layer:>3}): β-independent = {ok}");
            assert!(ok);
        }
    }

    // 2. timing scales exactly: t(2β) = t(β)/2 in the closed form …
    let slow = ModelParams::new(150, 0.25, 0.66, uniform.clone())?;
    let fast = ModelParams::new(150, 0.5, 0.66, uniform.clone())?;
    let target = 0.5 * slow.participating_fraction();
    let t_slow = time_to_level(&slow, target)?;
    let t_fast = time_to_level(&fast, target)?;
    println!("\ntime to half-saturation: {t_slow:.6} at β = 0.25, {t_fast:.6} at β = 0.5");
    assert_eq!(t_fast.to_bits(), (0.5 * t_slow).to_bits());
    println!("t(β = 0.5) == t(β = 0.25)/2 exactly (bitwise)");

    // … and in the stochastic simulator, where doubling β halves every
    // exponential waiting time of a seed-matched run
    let a = simulate_run(&slow, 7, 5000.0)?;
    let b = simulate_run(&fast, 7, 5000.0)?;
    let count = (target * 150.0).ceil() as u32;
    let ta = a.first_time_reaching(count).expect("run saturates");
    let tb = b.first_time_reaching(count).expect("run saturates");
    println!(
        "\nseed-matched stochastic crossing of {count} informed: {ta:.4} vs {tb:.4}"
    );
    assert_eq!(tb.to_bits(), (0.5 * ta).to_bits());
    println!("the stochastic crossing time also halves bitwise");
    Ok(())
}
