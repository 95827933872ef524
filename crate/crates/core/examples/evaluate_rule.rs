//! Parses patterns in their text form, lists their matches and evaluates a
//! rule between them.
//!
//! `cargo run --example evaluate_rule`

use std::path::PathBuf;

use parm::{evaluate_rule, load_graph, match_set, PathPattern, ReachBound, Rule};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let g = load_graph(&dir.join("fig1.vertices.tsv"), &dir.join("fig1.edges.tsv"))?;
    let bound = ReachBound::Capped(2);

    let x = PathPattern::parse("{CS}-[Follows]->{Art}", &g)?;
    let y = PathPattern::parse("{Male}-[BelongTo]->{Uni}", &g)?;
    let star = PathPattern::parse("{CS}-[Follows*]->{Art}", &g)?;
    for p in [&x, &y, &star] {
        let names: Vec<&str> = match_set(&g, p, bound)
            .into_iter()
            .map(|v| g.vertex_names().name(v).unwrap_or("?"))
            .collect();
        println!("{:<28} matches {names:?}", p.to_text(&g));
    }

    let m = evaluate_rule(&g, &Rule::new(x.clone(), y)?, bound)?;
    println!(
        "asupp={} rsupp={:.3} conf={:.3} lift={:.3}",
        m.asupp,
        m.rsupp(),
        m.conf(),
        m.lift()
    );

    // A rule whose consequent is a prefix of its antecedent is trivially true.
    match Rule::new(x, PathPattern::parse("{CS}", &g)?) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
