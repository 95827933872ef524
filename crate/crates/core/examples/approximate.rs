//! Compares exact mining with candidate reduction and vertex sampling on a
//! synthetic graph.
//!
//! `cargo run --release --example approximate`

use std::time::Instant;

use parm::approx::mine_pioneer_approx;
use parm::synthgen::{generate, GenSpec};
use parm::{mine_pioneer, MiningConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = generate(&GenSpec::uniform(3_000, 15_000, 1))?;
    let base = MiningConfig::absolute(40, 2);

    let start = Instant::now();
    let exact = mine_pioneer(&g, &base)?;
    let exact_rules = exact.sets.rule_set();
    println!(
        "exact: {} rules in {:?}",
        exact_rules.len(),
        start.elapsed()
    );

    for (psi, rho) in [(0.4, 1.0), (1.0, 0.4), (0.4, 0.4)] {
        let cfg = MiningConfig {
            psi,
            rho,
            seed: 11,
            ..base.clone()
        };
        let start = Instant::now();
        let approx = mine_pioneer_approx(&g, &cfg)?;
        let elapsed = start.elapsed();
        let got = approx.sets.rule_set();
        let hits = got.intersection(&exact_rules).count();
        println!(
            "psi={psi} rho={rho}: {} rules in {elapsed:?}, precision {:.3}, recall {:.3}",
            got.len(),
            hits as f64 / got.len().max(1) as f64,
            hits as f64 / exact_rules.len().max(1) as f64
        );
        if let Some(e) = approx.sets.rules.iter().find_map(|r| r.estimate.as_ref()) {
            println!(
                "  e.g. estimate {:.1} in [{:.1}, {:.1}] at z={}",
                e.estimate, e.ci_low, e.ci_high, e.z
            );
        }
    }
    Ok(())
}
