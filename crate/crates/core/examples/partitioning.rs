//! Splits the relevant vertices of a graph across workers by estimated
//! cost and runs mining with several thread counts.
//!
//! `cargo run --release --example partitioning`

use std::time::Instant;

use parm::mining::bounds::TargetSets;
use parm::parallel::{estimate_cost, partition, prune_irrelevant};
use parm::synthgen::{generate, EdgeDistribution, GenSpec};
use parm::{mine_pioneer, GraphIndexes, MiningConfig, ReachBound};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = GenSpec {
        distribution: EdgeDistribution::exponential(),
        ..GenSpec::uniform(5_000, 25_000, 3)
    };
    let g = generate(&spec)?;
    let (theta, k) = (150, 2);

    let idx = GraphIndexes::build(&g);
    let targets = TargetSets::compute(&g, &idx, theta, k, 1.0, ReachBound::Capped(k));
    let (attrs, labels) = (targets.attr_union(), targets.label_union());
    let kept = prune_irrelevant(&g, &attrs, &labels);
    let costs: Vec<_> = kept
        .iter()
        .map(|&v| (v, estimate_cost(&g, v, &attrs, &labels)))
        .collect();
    println!(
        "{} of {} vertices are relevant",
        kept.len(),
        g.vertex_count()
    );
    for workers in [1, 2, 4, 8] {
        let p = partition(&costs, workers)?;
        println!(
            "N={workers}: cap {} counts {:?} costs {:?}",
            p.cap,
            p.counts(),
            p.cost_sums
        );
    }

    let mut reference = None;
    for threads in [1, 2, 4] {
        let start = Instant::now();
        let mined = mine_pioneer(
            &g,
            &MiningConfig {
                threads,
                ..MiningConfig::absolute(theta, k)
            },
        )?;
        println!(
            "threads={threads}: {} rules in {:?}",
            mined.sets.rules.len(),
            start.elapsed()
        );
        match &reference {
            None => reference = Some(mined.sets),
            Some(r) => assert!(r == &mined.sets, "results depend on the thread count"),
        }
    }
    Ok(())
}
