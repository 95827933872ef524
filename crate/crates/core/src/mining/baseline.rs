//! Reference miner: plain level-wise enumeration with every candidate
//! evaluated from scratch.
//!
//! Source sets range over the frequent attribute sets. Sets at later
//! positions range over every attribute set held by at least one vertex: a
//! pattern can be frequent while the attribute set of a later position is
//! held by fewer than `θ` vertices, since many sources may share one target.

use std::sync::Arc;
use std::time::Instant;

use fixedbitset::FixedBitSet;

use crate::error::ConfigError;
use crate::graph::{AttrSet, LabelId, PropertyGraph, VertexId};
use crate::matching::{reach_closure, simple_match_bits, ReachBound};
use crate::measures::{Rule, RuleMeasures};
use crate::mining::apriori::{mine_attribute_sets, AttrSetMatches};
use crate::mining::{
    canonical_ranks, elapsed_ms, sort_ranked, FrequentSets, Mined, MinedRule, MiningConfig,
    MiningStats, PatternSupport, PhaseStats,
};
use crate::pattern::PathPattern;

/// A frequent pattern with its match set.
#[derive(Clone, Debug)]
pub struct Matched {
    pub pattern: PathPattern,
    pub matches: FixedBitSet,
}

impl Matched {
    pub fn support(&self) -> usize {
        self.matches.count_ones(..)
    }
}

pub fn mine_baseline(g: &PropertyGraph, cfg: &MiningConfig) -> Result<Mined, ConfigError> {
    cfg.validate()?;
    let theta = cfg.effective_theta(g.vertex_count());
    let bound = cfg.reach_bound();
    let mut stats = MiningStats::default();

    let t = Instant::now();
    let p0 = mine_attribute_sets(g, theta, &mut stats.attributes);
    stats.attributes.millis = elapsed_ms(t);
    let held = held_attribute_sets(g);

    let t = Instant::now();
    let simple = simple_levels(g, theta, cfg.k, &p0, &held, &mut stats.simple);
    stats.simple.millis = elapsed_ms(t);

    let t = Instant::now();
    let reach = reachability(g, theta, &p0, &held, bound, &mut stats.reachability);
    stats.reachability.millis = elapsed_ms(t);

    let t = Instant::now();
    let all: Vec<&Matched> = simple.iter().flatten().chain(reach.iter()).collect();
    let rules = rules(g, theta, &all, &mut stats.rules);
    stats.rules.millis = elapsed_ms(t);

    let mut sets = FrequentSets {
        theta,
        attribute_sets: p0
            .iter()
            .map(|m| (m.attrs.clone(), m.vertices.len()))
            .collect(),
        simple: simple
            .iter()
            .map(|level| level.iter().map(to_support).collect())
            .collect(),
        reachability: reach.iter().map(to_support).collect(),
        rules,
    };
    sets.canonicalize();
    Ok(Mined { sets, stats })
}

/// Frequent simple patterns of lengths `1..=k`; `result[i]` has length `i + 1`.
pub fn mine_simple_patterns_baseline(
    g: &PropertyGraph,
    theta: usize,
    k: usize,
    p0: &[AttrSet],
) -> Vec<Vec<Matched>> {
    let p0 = matches_of(g, p0);
    simple_levels(
        g,
        theta,
        k,
        &p0,
        &held_attribute_sets(g),
        &mut PhaseStats::default(),
    )
}

/// Frequent reachability patterns `⟨A₀, ℓ*, A₁⟩` with `A₀ ∈ p0`.
pub fn mine_reachability_baseline(
    g: &PropertyGraph,
    theta: usize,
    p0: &[AttrSet],
    bound: ReachBound,
) -> Vec<Matched> {
    let p0 = matches_of(g, p0);
    reachability(
        g,
        theta,
        &p0,
        &held_attribute_sets(g),
        bound,
        &mut PhaseStats::default(),
    )
}

/// Rules over every unordered non-dominating pair with at least `theta`
/// common sources, in both directions.
pub fn mine_rules_baseline(
    g: &PropertyGraph,
    theta: usize,
    patterns: &[Matched],
) -> Vec<MinedRule> {
    let all: Vec<&Matched> = patterns.iter().collect();
    rules(g, theta, &all, &mut PhaseStats::default())
}

fn to_support(m: &Matched) -> PatternSupport {
    PatternSupport {
        pattern: m.pattern.clone(),
        support: m.support(),
    }
}

fn matches_of(g: &PropertyGraph, sets: &[AttrSet]) -> Vec<AttrSetMatches> {
    sets.iter()
        .map(|s| AttrSetMatches {
            attrs: s.clone(),
            vertices: g.vertices().filter(|&v| g.has_attrs(v, s)).collect(),
        })
        .collect()
}

fn held_attribute_sets(g: &PropertyGraph) -> Vec<(AttrSet, FixedBitSet)> {
    mine_attribute_sets(g, 1, &mut PhaseStats::default())
        .into_iter()
        .map(|m| (m.attrs, to_bits(g.vertex_count(), &m.vertices)))
        .collect()
}

fn to_bits(n: usize, vs: &[VertexId]) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for &v in vs {
        b.insert(v as usize);
    }
    b
}

fn simple_levels(
    g: &PropertyGraph,
    theta: usize,
    k: usize,
    p0: &[AttrSetMatches],
    held: &[(AttrSet, FixedBitSet)],
    stats: &mut PhaseStats,
) -> Vec<Vec<Matched>> {
    let mut levels: Vec<Vec<Matched>> = Vec::new();
    let mut prev: Vec<PathPattern> = p0
        .iter()
        .filter_map(|m| PathPattern::attr_set(m.attrs.clone()).ok())
        .collect();
    for _ in 1..=k {
        let mut level = Vec::new();
        for p in &prev {
            for l in 0..g.label_count() as LabelId {
                for (set, _) in held {
                    let cand = p.extend(l, set.clone());
                    stats.generated += 1;
                    let matches = simple_match_bits(g, &cand);
                    if matches.count_ones(..) >= theta {
                        stats.frequent += 1;
                        level.push(Matched {
                            pattern: cand,
                            matches,
                        });
                    } else {
                        stats.infrequent += 1;
                    }
                }
            }
        }
        if level.is_empty() {
            break;
        }
        prev = level.iter().map(|m| m.pattern.clone()).collect();
        levels.push(level);
    }
    levels
}

fn reachability(
    g: &PropertyGraph,
    theta: usize,
    p0: &[AttrSetMatches],
    held: &[(AttrSet, FixedBitSet)],
    bound: ReachBound,
    stats: &mut PhaseStats,
) -> Vec<Matched> {
    let n = g.vertex_count();
    let mut sources = FixedBitSet::with_capacity(n);
    for m in p0 {
        for &v in &m.vertices {
            sources.insert(v as usize);
        }
    }
    let sources: Vec<VertexId> = sources.ones().map(|v| v as VertexId).collect();
    let p0_bits: Vec<FixedBitSet> = p0.iter().map(|m| to_bits(n, &m.vertices)).collect();
    let mut out = Vec::new();
    for l in 0..g.label_count() as LabelId {
        let closure = reach_closure(g, l, &sources, bound);
        for (a1, a1_bits) in held {
            let mut reaches = FixedBitSet::with_capacity(n);
            for (&v, reached) in sources.iter().zip(&closure) {
                if reached.iter().any(|&u| a1_bits.contains(u as usize)) {
                    reaches.insert(v as usize);
                }
            }
            for (m, bits) in p0.iter().zip(&p0_bits) {
                stats.generated += 1;
                let mut matches = reaches.clone();
                matches.intersect_with(bits);
                if matches.count_ones(..) >= theta {
                    stats.frequent += 1;
                    let pattern = PathPattern::reachability(m.attrs.clone(), l, a1.clone())
                        .expect("attribute sets are non-empty");
                    out.push(Matched { pattern, matches });
                } else {
                    stats.infrequent += 1;
                }
            }
        }
    }
    out
}

fn rules(
    g: &PropertyGraph,
    theta: usize,
    all: &[&Matched],
    stats: &mut PhaseStats,
) -> Vec<MinedRule> {
    let n = g.vertex_count();
    let supports: Vec<usize> = all.iter().map(|m| m.support()).collect();
    let shared: Vec<Arc<PathPattern>> = all.iter().map(|m| Arc::new(m.pattern.clone())).collect();
    let rank = canonical_ranks(all.iter().map(|m| &m.pattern));
    let mut out = Vec::new();
    for (i, x) in all.iter().enumerate() {
        for (j, y) in all.iter().enumerate().skip(i + 1) {
            stats.generated += 1;
            if x.pattern.dominates(&y.pattern) || y.pattern.dominates(&x.pattern) {
                stats.pruned_anti_monotone += 1;
                continue;
            }
            let common = x.matches.intersection_count(&y.matches);
            if common < theta {
                stats.infrequent += 1;
                continue;
            }
            stats.frequent += 1;
            let measures = RuleMeasures::from_counts(common, supports[i], supports[j], n);
            let rule = Rule::from_shared(shared[i].clone(), shared[j].clone())
                .expect("pair is non-dominated");
            out.push((
                (rank[j], rank[i]),
                MinedRule {
                    rule: rule.reversed(),
                    measures: measures.reversed(),
                    estimate: None,
                },
            ));
            out.push((
                (rank[i], rank[j]),
                MinedRule {
                    rule,
                    measures,
                    estimate: None,
                },
            ));
        }
    }
    sort_ranked(out)
}
