//! The larger the community, the *more* trust a rumor can demand and
//! still fill a fixed layer — informing 50 people out of 5000 only needs
//! the most trusting 1%.
//!
//! Run with: `cargo run --example population_ladder`

use dunbar_diffusion::dunbar::cutoff_vs_population;
use dunbar_diffusion::trust::TrustDistribution;

fn main() -> dunbar_diffusion::Result<()> {
    let uniform = TrustDistribution::uniform_unit();
    let populations = [150u32, 500, 1500, 5000];

    println!("cutoff filling a fixed layer as the population grows (uniform trust)\n");
    print!("{:>8}", "L \\ N");
    for n in populations {
        print!("{n:>10}");
    }
    println!();

    for layer in [5u32, 15, 50, 150] {
        let table = cutoff_vs_population(&uniform, layer, &populations)?;
        print!("{layer:>8}");
        for row in &table.rows {
            match row.value {
                Some(c) => print!("{c:>10.4}"),
                None => print!("{:>10}", "infeasible"),
            }
        }
        println!();
    }

    println!();
    println!("each row climbs toward 1: in a big enough network even a rumor");
    println!("that almost nobody trusts still finds its five-person audience.");
    Ok(())
}
