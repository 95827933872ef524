mod common;

use std::collections::BTreeSet;

use common::{naive_match, oracle_dominates, random_graph, random_pattern, Shape};
use parm::mining::bounds::{prefix_bound, suffix_bound};
use parm::mining::index::{MatchIndex, TargetLists};
use parm::parallel::partition;
use parm::{
    match_set, mine_baseline, mine_pioneer, vertex_matches, AttrSet, GraphIndexes, MiningConfig,
    PathPattern, PropertyGraph, ReachBound, StarMode,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn shape(vertices: usize, edges: usize, attrs: usize, labels: usize) -> Shape {
    Shape {
        vertices,
        edges,
        attrs,
        labels,
        max_attrs_per_vertex: 3,
    }
}

fn graph_strategy(max_vertices: usize) -> impl Strategy<Value = PropertyGraph> {
    sized_graphs(max_vertices, 4, 6)
}

fn sized_graphs(
    max_vertices: usize,
    max_density: usize,
    max_attrs: usize,
) -> impl Strategy<Value = PropertyGraph> {
    (
        any::<u64>(),
        2..=max_vertices,
        0..=max_density,
        2..=max_attrs,
        1usize..=3,
    )
        .prop_map(|(seed, n, density, attrs, labels)| {
            random_graph(seed, shape(n, n * density, attrs, labels))
        })
}

/// Same graph with vertex ids permuted by `perm`.
fn relabel(g: &PropertyGraph, perm: &[u32]) -> PropertyGraph {
    let mut attrs = vec![AttrSet::empty(); g.vertex_count()];
    for v in g.vertices() {
        attrs[perm[v as usize] as usize] = g.attrs(v).clone();
    }
    let edges = g
        .edges()
        .map(|(s, l, t)| (perm[s as usize], l, perm[t as usize]))
        .collect();
    PropertyGraph::from_parts(attrs, edges, g.label_count(), g.attr_count()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matcher_agrees_with_walk_enumeration(g in graph_strategy(25), seed in any::<u64>(), unbounded in any::<bool>()) {
        let bound = if unbounded { ReachBound::Unbounded } else { ReachBound::Capped(2) };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..20 {
            let p = random_pattern(&mut rng, &g, 3, i % 4 == 0);
            let got: BTreeSet<u32> = match_set(&g, &p, bound).into_iter().collect();
            prop_assert_eq!(&got, &naive_match(&g, &p, bound), "{}", p.to_text(&g));
            for v in g.vertices() {
                prop_assert_eq!(vertex_matches(&g, v, &p, bound), got.contains(&v));
            }
        }
    }

    #[test]
    fn dominance_matches_definition(g in graph_strategy(10), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..50 {
            let p = random_pattern(&mut rng, &g, 3, i % 5 == 0);
            let q = random_pattern(&mut rng, &g, 3, i % 7 == 0);
            prop_assert_eq!(p.dominates(&q), oracle_dominates(&p, &q));
            prop_assert!(p.dominates(&p));
            if !p.is_reachability() {
                for len in 0..=p.len() {
                    prop_assert!(p.dominates(&p.prefix(len)));
                }
            }
        }
    }

    #[test]
    fn bounds_cover_support(g in graph_strategy(40), seed in any::<u64>()) {
        let idx = GraphIndexes::build(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..30 {
            let p = random_pattern(&mut rng, &g, 3, false);
            let support = match_set(&g, &p, ReachBound::Capped(3)).len();
            for i in 1..=p.len() {
                let l = p.labels()[i - 1];
                prop_assert!(suffix_bound(&g, &idx, &p.attrs()[i], l, i).unwrap() >= support);
                prop_assert!(prefix_bound(&g, &idx, &p.attrs()[i - 1], l, i).unwrap() >= support);
            }
        }
    }

    #[test]
    fn canonical_text_round_trips(g in graph_strategy(5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..30 {
            let p = random_pattern(&mut rng, &g, 4, i % 3 == 0);
            let text = p.to_text(&g);
            prop_assert_eq!(PathPattern::parse(&text, &g).unwrap(), p);
        }
    }

    #[test]
    fn pioneer_matches_baseline(g in sized_graphs(30, 2, 4), theta in 2usize..=4, k in 1usize..=3, unbounded in any::<bool>()) {
        let cfg = MiningConfig {
            star_mode: if unbounded { StarMode::Unbounded } else { StarMode::Capped },
            ..MiningConfig::absolute(theta, k)
        };
        let base = mine_baseline(&g, &cfg).unwrap();
        let pio = mine_pioneer(&g, &cfg).unwrap();
        prop_assert!(base.sets == pio.sets);
        for (_, phase) in pio.stats.phases() {
            prop_assert!(phase.is_consistent());
        }
        prop_assert!(pio.stats.checked() <= base.stats.checked());
    }

    #[test]
    fn results_ignore_vertex_numbering(g in sized_graphs(30, 2, 5), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<u32> = (0..g.vertex_count() as u32).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = relabel(&g, &perm);
        let cfg = MiningConfig::absolute(2, 2);
        prop_assert!(mine_pioneer(&g, &cfg).unwrap().sets == mine_pioneer(&h, &cfg).unwrap().sets);
    }

    #[test]
    fn partition_respects_cap(costs in prop::collection::vec(0u64..1000, 0..200), workers in 1usize..=9) {
        let items: Vec<(u32, u64)> = costs.iter().enumerate().map(|(v, &c)| (v as u32, c)).collect();
        let p = partition(&items, workers).unwrap();
        let cap = items.len().div_ceil(workers);
        prop_assert_eq!(p.worker_count(), workers);
        prop_assert!(p.counts().iter().all(|&c| c <= cap));
        let mut seen: Vec<u32> = p.members.iter().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..items.len() as u32).collect::<Vec<_>>());
        prop_assert_eq!(p.cost_sums.iter().sum::<u64>(), costs.iter().sum::<u64>());
    }

    #[test]
    fn index_extension_matches_direct_evaluation(g in graph_strategy(30), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..10 {
            let p = random_pattern(&mut rng, &g, 2, false);
            let mut index = MatchIndex::new(2);
            // Two shards: even and odd vertices.
            let holders: Vec<u32> = g.vertices().filter(|&v| g.has_attrs(v, p.source_attrs())).collect();
            let lists = (0..2)
                .map(|s| TargetLists::identity(holders.iter().copied().filter(|v| v % 2 == s).collect()))
                .collect();
            let mut id = index.insert(PathPattern::attr_set(p.source_attrs().clone()).unwrap(), lists);
            for i in 0..p.len() {
                let lists = index.extend_from_index(&g, id, p.labels()[i], &p.attrs()[i + 1]).unwrap();
                id = index.insert(p.prefix(i + 1), lists);
            }
            let want = match_set(&g, &p, ReachBound::Capped(1));
            prop_assert_eq!(index.sources(id), want);
            prop_assert_eq!(index.support(id), index.sources(id).len());
        }
    }
}
