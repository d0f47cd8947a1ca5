//! Layer cutoffs when trust follows a bounded power law p(x) ∝ x^(−α)
//! on [0.1, 1] instead of a uniform distribution.
//!
//! Heavier tails (larger α) concentrate trust near the bottom of the
//! range, so the cutoff that still reaches a layer drops as α grows.
//! The library supports two inverse-transform drivers for the same
//! density — feeding the inverse CDF from the full unit interval, or
//! from a driver truncated to [0.1, 1] — which disagree slightly on
//! small survival fractions; both are printed for one large-N case.
//!
//! Run with: `cargo run --example alpha_curve`

use dunbar_diffusion::dunbar::{alpha_cutoff_curve, cutoff_for_layer};
use dunbar_diffusion::trust::{DriverRange, TrustDistribution};

fn main() -> dunbar_diffusion::Result<()> {
    let alphas: Vec<f64> = (0..9).map(|j| 2.1 + 0.1 * j as f64).collect();
    let table = alpha_cutoff_curve(150, 50, &alphas, DriverRange::FullUnit)?;

    println!("trust cutoff reaching the 50-person band of N = 150, power-law trust\n");
    println!("{:>6} {:>10} {:>14}", "alpha", "cutoff", "alpha*cutoff");
    for row in &table.rows {
        let c = row.value.expect("band is feasible at N = 150");
        println!("{:>6.1} {:>10.4} {:>14.4}", row.x, c, row.x * c);
    }

    // The same question at N = 5000, layer 150 (a 3% survival fraction)
    // is where the two drivers visibly part ways.
    println!("\n(N = 5000, layer 150), alpha = 2.1:");
    for (label, driver) in [
        ("full-unit driver", DriverRange::FullUnit),
        ("truncated driver", DriverRange::Truncated),
    ] {
        let dist = TrustDistribution::power_law_on(2.1, 0.1, 1.0, driver)?;
        let c = cutoff_for_layer(&dist, 5000, 150)?.cutoff.unwrap();
        println!("  {label:<18} cutoff {c:.4}");
    }

    Ok(())
}
