//! Mines the bundled example graph and prints its strongest rules.
//!
//! `cargo run --example mine_fig1`

use std::path::PathBuf;

use parm::{load_graph, mine_pioneer, MiningConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let g = load_graph(&dir.join("fig1.vertices.tsv"), &dir.join("fig1.edges.tsv"))?;
    let mined = mine_pioneer(&g, &MiningConfig::absolute(2, 2))?;

    println!(
        "{} vertices, {} edges: {} frequent patterns, {} rules",
        g.vertex_count(),
        g.edge_count(),
        mined.sets.patterns().count(),
        mined.sets.rules.len()
    );
    let mut rules: Vec<_> = mined
        .sets
        .rules
        .iter()
        .filter(|r| r.measures.conf() == 1.0)
        .collect();
    rules.sort_by(|a, b| b.measures.lift().total_cmp(&a.measures.lift()));
    for r in rules.iter().take(10) {
        println!(
            "{} => {}  asupp={} conf={:.2} lift={:.2}",
            r.rule.antecedent().display(&g),
            r.rule.consequent().display(&g),
            r.measures.asupp,
            r.measures.conf(),
            r.measures.lift()
        );
    }
    for (phase, stats) in mined.stats.phases() {
        println!("{phase:>12}: {stats:?}");
    }
    Ok(())
}
