//! Test-side oracles built without the crate's matching or mining code:
//! walks are enumerated explicitly and every pattern a walk witnesses is
//! produced by taking all non-empty subsets of the visited attribute sets.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::path::PathBuf;

use parm::{
    load_graph, AttrSet, FrequentSets, PathPattern, PropertyGraph, ReachBound, Rule, RuleMeasures,
    VertexId,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fig1() -> PropertyGraph {
    load_graph(&fixture("fig1.vertices.tsv"), &fixture("fig1.edges.tsv")).expect("fixture loads")
}

pub fn pat(g: &PropertyGraph, text: &str) -> PathPattern {
    PathPattern::parse(text, g).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// Shape of the random graphs used for equivalence checks.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub vertices: usize,
    pub edges: usize,
    pub attrs: usize,
    pub labels: usize,
    pub max_attrs_per_vertex: usize,
}

/// Random sparse graph; every draw is determined by `seed`.
pub fn random_graph(seed: u64, shape: Shape) -> PropertyGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attrs: Vec<AttrSet> = (0..shape.vertices)
        .map(|_| {
            let count = rng.random_range(0..=shape.max_attrs_per_vertex.min(shape.attrs));
            let mut set = BTreeSet::new();
            while set.len() < count {
                set.insert(rng.random_range(0..shape.attrs as u32));
            }
            AttrSet::new(set)
        })
        .collect();
    let edges = (0..shape.edges)
        .map(|_| {
            (
                rng.random_range(0..shape.vertices as u32),
                rng.random_range(0..shape.labels as u32),
                rng.random_range(0..shape.vertices as u32),
            )
        })
        .collect();
    PropertyGraph::from_parts(attrs, edges, shape.labels, shape.attrs).unwrap()
}

/// Shape for the `index`-th graph of the equivalence corpus: every third
/// graph is small enough for the full-enumeration oracle.
pub fn corpus_shape(index: u64) -> Shape {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE ^ index);
    let vertices = if index.is_multiple_of(3) {
        rng.random_range(5..=30)
    } else {
        rng.random_range(31..=200)
    };
    let edges = rng.random_range(vertices..=(vertices * 5 / 2).min(1000));
    Shape {
        vertices,
        edges,
        attrs: rng.random_range(2..=6),
        labels: rng.random_range(1..=3),
        max_attrs_per_vertex: 3,
    }
}

pub fn corpus_graph(index: u64) -> PropertyGraph {
    random_graph(1000 + index, corpus_shape(index))
}

/// All non-empty subsets.
pub fn subsets(set: &AttrSet) -> Vec<AttrSet> {
    let items = set.as_slice();
    (1u32..(1 << items.len()))
        .map(|mask| {
            AttrSet::new(
                (0..items.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| items[i]),
            )
        })
        .collect()
}

fn successors(g: &PropertyGraph, u: VertexId, label: u32) -> Vec<VertexId> {
    g.edges()
        .filter(|&(s, l, _)| s == u && l == label)
        .map(|(_, _, t)| t)
        .collect()
}

/// Every walk from `v` with 1..=`k` edges, as (vertices, labels).
fn walks(g: &PropertyGraph, v: VertexId, k: usize) -> Vec<(Vec<VertexId>, Vec<u32>)> {
    let mut out = Vec::new();
    let mut stack = vec![(vec![v], Vec::new())];
    while let Some((vs, ls)) = stack.pop() {
        if !ls.is_empty() {
            out.push((vs.clone(), ls.clone()));
        }
        if ls.len() == k {
            continue;
        }
        let last = *vs.last().unwrap();
        for (s, l, t) in g.edges() {
            if s == last {
                let mut vs2 = vs.clone();
                vs2.push(t);
                let mut ls2 = ls.clone();
                ls2.push(l);
                stack.push((vs2, ls2));
            }
        }
    }
    out
}

/// Vertices reachable from `v` by 1..=cap `label` edges.
fn reachable(g: &PropertyGraph, v: VertexId, label: u32, bound: ReachBound) -> BTreeSet<VertexId> {
    let cap = match bound {
        ReachBound::Capped(c) => c,
        ReachBound::Unbounded => g.vertex_count(),
    };
    let mut found = BTreeSet::new();
    let mut layer: BTreeSet<VertexId> = [v].into();
    for _ in 0..cap {
        let next: BTreeSet<VertexId> = layer
            .iter()
            .flat_map(|&u| successors(g, u, label))
            .collect();
        let before = found.len();
        found.extend(next.iter().copied());
        if found.len() == before && next.iter().all(|u| layer.contains(u)) {
            break;
        }
        layer = next;
    }
    found
}

fn product(sets: &[Vec<AttrSet>]) -> Vec<Vec<AttrSet>> {
    let mut acc: Vec<Vec<AttrSet>> = vec![Vec::new()];
    for options in sets {
        let mut next = Vec::new();
        for prefix in &acc {
            for o in options {
                let mut p = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        acc = next;
    }
    acc
}

/// Every pattern of length 1..=k (and every reachability pattern) matched
/// by each vertex.
pub fn patterns_by_vertex(
    g: &PropertyGraph,
    k: usize,
    bound: ReachBound,
) -> Vec<HashSet<PathPattern>> {
    g.vertices()
        .map(|v| {
            let mut found = HashSet::new();
            for (vs, ls) in walks(g, v, k) {
                let options: Vec<Vec<AttrSet>> = vs.iter().map(|&u| subsets(g.attrs(u))).collect();
                if options.iter().any(Vec::is_empty) {
                    continue;
                }
                for attrs in product(&options) {
                    found.insert(PathPattern::simple(attrs, ls.clone()).unwrap());
                }
            }
            for l in 0..g.label_count() as u32 {
                for u in reachable(g, v, l, bound) {
                    for a0 in subsets(g.attrs(v)) {
                        for a1 in subsets(g.attrs(u)) {
                            found.insert(PathPattern::reachability(a0.clone(), l, a1).unwrap());
                        }
                    }
                }
            }
            found
        })
        .collect()
}

/// Direct evaluation of `𝒱(p)` by walk enumeration.
pub fn naive_match(g: &PropertyGraph, p: &PathPattern, bound: ReachBound) -> BTreeSet<VertexId> {
    g.vertices()
        .filter(|&v| {
            if !p.source_attrs().is_subset_of(g.attrs(v)) {
                return false;
            }
            if p.is_empty() {
                return true;
            }
            if p.is_reachability() {
                return reachable(g, v, p.labels()[0], bound)
                    .iter()
                    .any(|&u| p.last_attrs().is_subset_of(g.attrs(u)));
            }
            walks(g, v, p.len()).into_iter().any(|(vs, ls)| {
                ls.as_slice() == p.labels()
                    && vs
                        .iter()
                        .zip(p.attrs())
                        .all(|(&u, a)| a.is_subset_of(g.attrs(u)))
            })
        })
        .collect()
}

/// `x` dominates `y`, restated from the definition.
pub fn oracle_dominates(x: &PathPattern, y: &PathPattern) -> bool {
    x.kind() == y.kind()
        && y.len() <= x.len()
        && (0..y.len()).all(|i| x.labels()[i] == y.labels()[i])
        && (0..=y.len()).all(|i| y.attrs()[i].is_subset_of(&x.attrs()[i]))
}

#[derive(Debug, Default, PartialEq)]
pub struct OracleOutput {
    pub attribute_sets: BTreeMap<AttrSet, usize>,
    pub patterns: BTreeMap<PathPattern, usize>,
    pub rules: BTreeMap<Rule, RuleMeasures>,
}

pub fn naive_mine(g: &PropertyGraph, theta: usize, k: usize, bound: ReachBound) -> OracleOutput {
    let mut attr_counts: HashMap<AttrSet, usize> = HashMap::new();
    for v in g.vertices() {
        for s in subsets(g.attrs(v)) {
            *attr_counts.entry(s).or_default() += 1;
        }
    }
    let attribute_sets = attr_counts
        .into_iter()
        .filter(|&(_, c)| c >= theta)
        .collect();

    let mut holders: HashMap<PathPattern, BTreeSet<VertexId>> = HashMap::new();
    for (v, ps) in patterns_by_vertex(g, k, bound).into_iter().enumerate() {
        for p in ps {
            holders.entry(p).or_default().insert(v as VertexId);
        }
    }
    let frequent: Vec<(PathPattern, BTreeSet<VertexId>)> = holders
        .into_iter()
        .filter(|(_, vs)| vs.len() >= theta)
        .collect();
    let patterns = frequent
        .iter()
        .map(|(p, vs)| (p.clone(), vs.len()))
        .collect();
    let mut rules = BTreeMap::new();
    for (x, vx) in &frequent {
        for (y, vy) in &frequent {
            if x == y || oracle_dominates(x, y) || oracle_dominates(y, x) {
                continue;
            }
            let common = vx.intersection(vy).count();
            if common >= theta {
                let m = RuleMeasures::from_counts(common, vx.len(), vy.len(), g.vertex_count());
                rules.insert(Rule::new(x.clone(), y.clone()).unwrap(), m);
            }
        }
    }
    OracleOutput {
        attribute_sets,
        patterns,
        rules,
    }
}

/// A miner's output in the oracle's shape.
pub fn as_oracle(sets: &FrequentSets) -> OracleOutput {
    OracleOutput {
        attribute_sets: sets.attribute_sets.iter().cloned().collect(),
        patterns: sets
            .patterns()
            .map(|s| (s.pattern.clone(), s.support))
            .collect(),
        rules: sets
            .rules
            .iter()
            .map(|r| (r.rule.clone(), r.measures))
            .collect(),
    }
}

/// Random pattern over the graph's vocabulary with 1..=max_len steps.
pub fn random_pattern<R: Rng>(
    rng: &mut R,
    g: &PropertyGraph,
    max_len: usize,
    reach: bool,
) -> PathPattern {
    let set = |rng: &mut R| {
        let n = rng.random_range(1..=2.min(g.attr_count()));
        let mut s = BTreeSet::new();
        while s.len() < n {
            s.insert(rng.random_range(0..g.attr_count() as u32));
        }
        AttrSet::new(s)
    };
    if reach {
        let a0 = set(rng);
        let a1 = set(rng);
        return PathPattern::reachability(a0, rng.random_range(0..g.label_count() as u32), a1)
            .unwrap();
    }
    let len = rng.random_range(1..=max_len);
    let attrs = (0..=len).map(|_| set(rng)).collect();
    let labels = (0..len)
        .map(|_| rng.random_range(0..g.label_count() as u32))
        .collect();
    PathPattern::simple(attrs, labels).unwrap()
}
