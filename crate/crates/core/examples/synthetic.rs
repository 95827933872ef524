//! Generates uniform and exponentially skewed graphs, writes one to disk
//! and reads it back.
//!
//! `cargo run --example synthetic`

use parm::synthgen::{generate, EdgeDistribution, GenSpec};
use parm::{load_graph, save_graph, PropertyGraph};

fn max_in_degree(g: &PropertyGraph) -> usize {
    g.vertices().map(|v| g.in_degree(v)).max().unwrap_or(0)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let uniform = generate(&GenSpec::uniform(10_000, 50_000, 42))?;
    let skewed = generate(&GenSpec {
        distribution: EdgeDistribution::exponential(),
        ..GenSpec::uniform(10_000, 50_000, 42)
    })?;
    for (name, g) in [("uniform", &uniform), ("exponential", &skewed)] {
        let mean_attrs =
            g.vertices().map(|v| g.attrs(v).len()).sum::<usize>() as f64 / g.vertex_count() as f64;
        println!(
            "{name:>11}: {} vertices, {} edges, max in-degree {}, mean attributes {mean_attrs:.2}",
            g.vertex_count(),
            g.edge_count(),
            max_in_degree(g)
        );
    }

    let dir = std::env::temp_dir().join(format!("parm-synthetic-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let (v, e) = (dir.join("g.vertices.tsv"), dir.join("g.edges.tsv"));
    save_graph(&skewed, &v, &e)?;
    let back = load_graph(&v, &e)?;
    assert_eq!(back.edge_count(), skewed.edge_count());
    println!("round-tripped through {}", dir.display());
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
