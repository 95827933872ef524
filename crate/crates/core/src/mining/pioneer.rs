//! PIONEER: level-wise mining with bound-based candidate pruning, a
//! per-shard match index, and rule discovery over the pattern-pair lattice.
//!
//! Simple patterns of length `i` start from vertical extensions of
//! `P_{i-1}` restricted to the target sets; horizontal rounds then merge
//! frequent patterns of the same shape one attribute at a time. Reachability
//! patterns follow the same scheme from unit patterns `⟨{a}, ℓ*, {b}⟩`.
//!
//! Rule discovery walks pairs of frequent patterns upward from pairs of
//! length-1 unit patterns. A pair is expanded only while its common support
//! reaches `θ`, which is anti-monotone in both sides. Pairs where one side
//! dominates the other are expanded without evaluation (their common support
//! is the support of the dominating side) but never emitted.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;
use std::time::Instant;

use rustc_hash::FxHashSet;

use crate::approx::{estimate_from, sample, stratify, Sample};
use crate::error::ConfigError;
use crate::graph::{AttrId, AttrSet, GraphIndexes, LabelId, PropertyGraph, VertexId};
use crate::matching::{reachable_into, ReachBound};
use crate::measures::{intersection_count, Rule, RuleMeasures};
use crate::mining::apriori::{intersect, mine_attribute_sets};
use crate::mining::bounds::{power_bound, reach_bound, reduced_bound, TargetSets};
use crate::mining::candidates::{
    horizontal_extend, lattice_parents, sub_patterns, vertical_labels,
};
use crate::mining::index::{extend_lists, MatchIndex, PatternId, Scratch, TargetLists};
use crate::mining::{
    canonical_ranks, elapsed_ms, sort_ranked, FrequentSets, Mined, MinedRule, MiningConfig,
    MiningStats, PatternSupport, PhaseStats,
};
use crate::parallel::{estimate_cost, partition, prune_irrelevant, run_workers};
use crate::pattern::PathPattern;

/// Candidates evaluated per parallel round.
const CHUNK: usize = 1024;

/// Exact PIONEER. `psi` and `rho` in `cfg` are ignored; see
/// [`crate::approx::mine_pioneer_approx`] for the approximate variants.
pub fn mine_pioneer(g: &PropertyGraph, cfg: &MiningConfig) -> Result<Mined, ConfigError> {
    let exact = MiningConfig {
        psi: 1.0,
        rho: 1.0,
        ..cfg.clone()
    };
    run(g, &exact)
}

enum Derive {
    /// Extend `parent` by one step.
    Extend {
        parent: PatternId,
        label: LabelId,
        attrs: AttrSet,
    },
    /// Extend `parent` by one step, only from sources matching every pattern
    /// in `within`.
    Restricted {
        parent: PatternId,
        label: LabelId,
        attrs: AttrSet,
        within: Vec<PatternId>,
    },
    /// Reachability pattern, optionally restricted like above.
    Reach {
        label: LabelId,
        a0: AttrSet,
        a1: AttrSet,
        within: Vec<PatternId>,
    },
}

struct Candidate {
    pattern: PathPattern,
    derive: Derive,
}

struct Engine<'g> {
    g: &'g PropertyGraph,
    idx: GraphIndexes,
    targets: TargetSets,
    theta: usize,
    k: usize,
    bound: ReachBound,
    psi: f64,
    z: f64,
    shards: Vec<Vec<VertexId>>,
    sample: Option<Sample>,
    index: MatchIndex,
    /// Exact count, or weighted estimate when sampling; by pattern id.
    support: Vec<f64>,
    /// `reach[shard][label]`: reachable sets of the shard's possible sources.
    reach: Vec<Vec<TargetLists>>,
}

pub(crate) fn run(g: &PropertyGraph, cfg: &MiningConfig) -> Result<Mined, ConfigError> {
    cfg.validate()?;
    let theta = cfg.effective_theta(g.vertex_count());
    let bound = cfg.reach_bound();
    let mut stats = MiningStats::default();

    let t = Instant::now();
    let p0 = mine_attribute_sets(g, theta, &mut stats.attributes);
    stats.attributes.millis = elapsed_ms(t);

    let idx = GraphIndexes::build(g);
    let targets = TargetSets::compute(g, &idx, theta, cfg.k, cfg.psi, bound);
    let frequent_attrs: Vec<AttrId> = p0
        .iter()
        .filter(|m| m.attrs.len() == 1)
        .map(|m| m.attrs.as_slice()[0])
        .collect();

    let sample = if cfg.rho < 1.0 {
        Some(
            sample(&stratify(g, &frequent_attrs), cfg.rho, cfg.seed)
                .map_err(|_| ConfigError::Rho(cfg.rho))?,
        )
    } else {
        None
    };
    let mut attr_targets = targets.attr_union();
    attr_targets.extend_from_slice(&frequent_attrs);
    attr_targets.sort_unstable();
    attr_targets.dedup();
    let label_targets = targets.label_union();
    let mut is_frequent = vec![false; g.attr_count()];
    for &a in &frequent_attrs {
        is_frequent[a as usize] = true;
    }
    let costs: Vec<(VertexId, u64)> = prune_irrelevant(g, &attr_targets, &label_targets)
        .into_iter()
        .filter(|&v| g.attrs(v).iter().any(|a| is_frequent[a as usize]))
        .filter(|&v| sample.as_ref().is_none_or(|s| s.contains(v)))
        .map(|v| (v, estimate_cost(g, v, &attr_targets, &label_targets)))
        .collect();
    let shards = partition(&costs, cfg.threads)
        .map_err(|_| ConfigError::Threads)?
        .members;

    let mut engine = Engine {
        g,
        idx,
        targets,
        theta,
        k: cfg.k,
        bound,
        psi: cfg.psi,
        z: cfg.z,
        index: MatchIndex::new(shards.len()),
        shards,
        sample,
        support: Vec::new(),
        reach: Vec::new(),
    };

    let level0: Vec<PatternId> = p0
        .iter()
        .map(|m| {
            let lists = engine
                .shards
                .iter()
                .map(|s| TargetLists::identity(intersect(s, &m.vertices)))
                .collect();
            let pattern =
                PathPattern::attr_set(m.attrs.clone()).expect("frequent sets are non-empty");
            engine.add(pattern, lists, m.vertices.len() as f64)
        })
        .collect();

    let t = Instant::now();
    let simple = engine.mine_simple(level0, &mut stats.simple);
    stats.simple.millis = elapsed_ms(t);

    let t = Instant::now();
    let reach = engine.mine_reachability(&frequent_attrs, &mut stats.reachability);
    stats.reachability.millis = elapsed_ms(t);

    let t = Instant::now();
    let all: Vec<PatternId> = simple
        .iter()
        .flatten()
        .chain(reach.iter())
        .copied()
        .collect();
    let rules = engine.mine_rules(&all, &mut stats.rules);
    stats.rules.millis = elapsed_ms(t);

    let mut sets = FrequentSets {
        theta,
        attribute_sets: p0
            .iter()
            .map(|m| (m.attrs.clone(), m.vertices.len()))
            .collect(),
        simple: simple
            .iter()
            .map(|level| level.iter().map(|&id| engine.pattern_support(id)).collect())
            .collect(),
        reachability: reach.iter().map(|&id| engine.pattern_support(id)).collect(),
        rules,
    };
    sets.canonicalize();
    Ok(Mined { sets, stats })
}

fn record(stats: &mut PhaseStats, frequent: bool) {
    if frequent {
        stats.frequent += 1;
    } else {
        stats.infrequent += 1;
    }
}

impl Engine<'_> {
    fn add(&mut self, pattern: PathPattern, lists: Vec<TargetLists>, support: f64) -> PatternId {
        let id = self.index.insert(pattern, lists);
        debug_assert_eq!(id, self.support.len());
        self.support.push(support);
        id
    }

    fn pattern_support(&self, id: PatternId) -> PatternSupport {
        PatternSupport {
            pattern: self.index.pattern(id).clone(),
            support: self.support[id].round() as usize,
        }
    }

    fn is_frequent(&self, support: f64) -> bool {
        support >= self.theta as f64 - 1e-9
    }

    fn weight_of(&self, lists: &TargetLists) -> f64 {
        match &self.sample {
            None => lists.len() as f64,
            Some(s) => lists.sources().iter().map(|&v| s.weight(v)).sum(),
        }
    }

    /// Sources of shard `w` matching every pattern in `within`.
    fn restriction(&self, w: usize, within: &[PatternId]) -> Option<Vec<VertexId>> {
        let (first, rest) = within.split_first()?;
        let mut acc = self.index.lists(w, *first).sources().to_vec();
        for &p in rest {
            acc = intersect(&acc, self.index.lists(w, p).sources());
        }
        Some(acc)
    }

    fn derive(&self, w: usize, c: &Candidate, scratch: &mut Scratch) -> TargetLists {
        match &c.derive {
            Derive::Extend {
                parent,
                label,
                attrs,
            } => extend_lists(
                self.g,
                self.index.lists(w, *parent),
                *label,
                attrs,
                None,
                scratch,
            ),
            Derive::Restricted {
                parent,
                label,
                attrs,
                within,
            } => {
                let allowed = self.restriction(w, within);
                extend_lists(
                    self.g,
                    self.index.lists(w, *parent),
                    *label,
                    attrs,
                    allowed.as_deref(),
                    scratch,
                )
            }
            Derive::Reach {
                label,
                a0,
                a1,
                within,
            } => {
                let allowed = self.restriction(w, within);
                let store = &self.reach[w][*label as usize];
                let mut out = TargetLists::new();
                let mut hits = Vec::new();
                for (v, reached) in store.iter() {
                    if allowed
                        .as_ref()
                        .is_some_and(|a| a.binary_search(&v).is_err())
                        || !self.g.has_attrs(v, a0)
                    {
                        continue;
                    }
                    hits.clear();
                    hits.extend(reached.iter().copied().filter(|&u| self.g.has_attrs(u, a1)));
                    if !hits.is_empty() {
                        out.push(v, &hits);
                    }
                }
                out
            }
        }
    }

    /// Evaluates `cands` on all shards, indexes the frequent ones and returns
    /// their ids in candidate order.
    fn evaluate(&mut self, cands: Vec<Candidate>, stats: &mut PhaseStats) -> Vec<PatternId> {
        let mut admitted = Vec::new();
        let mut rest = cands;
        while !rest.is_empty() {
            let tail = rest.split_off(rest.len().min(CHUNK));
            let chunk = std::mem::replace(&mut rest, tail);
            let per_shard = {
                let this = &*self;
                let chunk = &chunk;
                run_workers(self.shards.len(), move |w| {
                    let mut scratch = Scratch::new(this.g.vertex_count());
                    chunk
                        .iter()
                        .map(|c| this.derive(w, c, &mut scratch))
                        .collect::<Vec<_>>()
                })
            };
            let mut columns: Vec<_> = per_shard.into_iter().map(Vec::into_iter).collect();
            for c in chunk {
                let lists: Vec<TargetLists> = columns
                    .iter_mut()
                    .map(|it| it.next().expect("one list per candidate"))
                    .collect();
                let support: f64 = lists.iter().map(|l| self.weight_of(l)).sum();
                let frequent = self.is_frequent(support);
                record(stats, frequent);
                if frequent {
                    admitted.push(self.add(c.pattern, lists, support));
                }
            }
        }
        admitted
    }

    fn max_in_degree(&self) -> usize {
        self.idx.max_in_degree()
    }

    fn mine_simple(
        &mut self,
        level0: Vec<PatternId>,
        stats: &mut PhaseStats,
    ) -> Vec<Vec<PatternId>> {
        let (nl, na, nv) = (
            self.g.label_count() as u64,
            self.g.attr_count() as u64,
            self.g.vertex_count(),
        );
        let mut levels: Vec<Vec<PatternId>> = Vec::new();
        let mut prev = level0;
        for i in 1..=self.k {
            let mut seen: HashSet<PathPattern> = HashSet::new();
            let mut cands = Vec::new();
            for &pid in &prev {
                let p = self.index.pattern(pid).clone();
                stats.generated += nl * na;
                let mut kept = 0u64;
                let labels: Vec<LabelId> = vertical_labels(&p, &self.targets, i).collect();
                for l in labels {
                    let last = p.last_attrs();
                    if last.len() > 1 {
                        let v = self
                            .idx
                            .vertex_set_size(self.g, last, l)
                            .expect("label and set are valid");
                        if power_bound(v, self.max_in_degree(), i - 1, nv) < self.theta {
                            continue;
                        }
                    }
                    for &a in self.targets.attrs_at(i, l) {
                        let attrs = AttrSet::singleton(a);
                        let pattern = p.extend(l, attrs.clone());
                        seen.insert(pattern.clone());
                        cands.push(Candidate {
                            pattern,
                            derive: Derive::Extend {
                                parent: pid,
                                label: l,
                                attrs,
                            },
                        });
                        kept += 1;
                    }
                }
                stats.pruned_bound += nl * na - kept;
            }
            let vertical = self.evaluate(cands, stats);
            let mut by_count: BTreeMap<usize, Vec<PatternId>> = BTreeMap::new();
            for id in vertical {
                by_count
                    .entry(self.index.pattern(id).attr_count())
                    .or_default()
                    .push(id);
            }
            self.horizontal_rounds(&mut by_count, &mut seen, stats, |this, q| {
                this.simple_derivation(q, i)
            });
            let level: Vec<PatternId> = by_count.into_values().flatten().collect();
            for &pid in &prev {
                self.index.release_targets(pid);
            }
            if level.is_empty() {
                break;
            }
            levels.push(level.clone());
            prev = level;
        }
        levels
    }

    /// Checks a horizontal simple candidate against its prefix and bounds.
    fn simple_derivation(&self, q: &PathPattern, i: usize) -> Result<Derive, Pruned> {
        let prefix = q.prefix(i - 1);
        let parent = self.index.id(&prefix).ok_or(Pruned::AntiMonotone)?;
        let label = q.labels()[i - 1];
        let last = q.last_attrs();
        let nv = self.g.vertex_count();
        if last.len() > 1 {
            let e = self
                .idx
                .edge_set_size(self.g, last, label)
                .expect("label and set are valid");
            if reduced_bound(e, self.max_in_degree(), i - 1, self.psi, nv) < self.theta as f64 {
                return Err(Pruned::Bound);
            }
        }
        let before = &q.attrs()[i - 1];
        if before.len() > 1 {
            let v = self
                .idx
                .vertex_set_size(self.g, before, label)
                .expect("label and set are valid");
            if power_bound(v, self.max_in_degree(), i - 1, nv) < self.theta {
                return Err(Pruned::Bound);
            }
        }
        let within = self.within(q);
        Ok(Derive::Restricted {
            parent,
            label,
            attrs: last.clone(),
            within,
        })
    }

    fn within(&self, q: &PathPattern) -> Vec<PatternId> {
        sub_patterns(q)
            .map(|s| {
                self.index
                    .id(&s)
                    .expect("sub-patterns passed the join check")
            })
            .collect()
    }

    /// Runs horizontal rounds by increasing attribute count until no layer
    /// can produce candidates. `derivation` validates each new union.
    fn horizontal_rounds<F>(
        &mut self,
        by_count: &mut BTreeMap<usize, Vec<PatternId>>,
        seen: &mut HashSet<PathPattern>,
        stats: &mut PhaseStats,
        derivation: F,
    ) where
        F: Fn(&Self, &PathPattern) -> Result<Derive, Pruned>,
    {
        let Some(&start) = by_count.keys().next() else {
            return;
        };
        let mut c = start + 1;
        while by_count.keys().next_back().is_some_and(|&max| c <= max + 1) {
            let layer: Vec<PathPattern> = by_count
                .get(&(c - 1))
                .map(|ids| {
                    ids.iter()
                        .map(|&id| self.index.pattern(id).clone())
                        .collect()
                })
                .unwrap_or_default();
            c += 1;
            if layer.len() < 2 {
                continue;
            }
            let h = horizontal_extend(&layer);
            stats.generated += h.pruned_anti_monotone;
            stats.pruned_anti_monotone += h.pruned_anti_monotone;
            let mut cands = Vec::new();
            for q in h.candidates {
                if !seen.insert(q.clone()) {
                    continue;
                }
                stats.generated += 1;
                match derivation(self, &q) {
                    Ok(derive) => cands.push(Candidate { pattern: q, derive }),
                    Err(Pruned::AntiMonotone) => stats.pruned_anti_monotone += 1,
                    Err(Pruned::Bound) => stats.pruned_bound += 1,
                }
            }
            for id in self.evaluate(cands, stats) {
                by_count
                    .entry(self.index.pattern(id).attr_count())
                    .or_default()
                    .push(id);
            }
        }
    }

    fn build_reach_store(&mut self, frequent_attrs: &[AttrId]) {
        let g = self.g;
        let bound = self.bound;
        let targets = &self.targets;
        let labels: Vec<bool> = (0..g.label_count() as LabelId)
            .map(|l| {
                !targets.reach_attrs(l).is_empty()
                    && frequent_attrs
                        .iter()
                        .any(|&a| targets.label_allowed(1, a, l))
            })
            .collect();
        let shards = &self.shards;
        self.reach = run_workers(shards.len(), |w| {
            let mut seen = fixedbitset::FixedBitSet::with_capacity(g.vertex_count());
            let mut out = Vec::new();
            (0..g.label_count() as LabelId)
                .map(|l| {
                    let mut lists = TargetLists::new();
                    if !labels[l as usize] {
                        return lists;
                    }
                    for &v in &shards[w] {
                        if !g.attrs(v).iter().any(|a| targets.label_allowed(1, a, l)) {
                            continue;
                        }
                        seen.clear();
                        reachable_into(g, v, l, bound, &mut seen, &mut out);
                        if !out.is_empty() {
                            lists.push(v, &out);
                        }
                    }
                    lists
                })
                .collect()
        });
    }

    fn mine_reachability(
        &mut self,
        frequent_attrs: &[AttrId],
        stats: &mut PhaseStats,
    ) -> Vec<PatternId> {
        self.build_reach_store(frequent_attrs);
        let (nl, na) = (self.g.label_count() as u64, self.g.attr_count() as u64);
        let mut seen = HashSet::new();
        let mut cands = Vec::new();
        for &a in frequent_attrs {
            stats.generated += nl * na;
            let mut kept = 0;
            for &l in self.targets.labels_at(1, a) {
                for &b in self.targets.reach_attrs(l) {
                    let (a0, a1) = (AttrSet::singleton(a), AttrSet::singleton(b));
                    let pattern =
                        PathPattern::reachability(a0.clone(), l, a1.clone()).expect("singletons");
                    seen.insert(pattern.clone());
                    cands.push(Candidate {
                        pattern,
                        derive: Derive::Reach {
                            label: l,
                            a0,
                            a1,
                            within: Vec::new(),
                        },
                    });
                    kept += 1;
                }
            }
            stats.pruned_bound += nl * na - kept;
        }
        let units = self.evaluate(cands, stats);
        let mut by_count: BTreeMap<usize, Vec<PatternId>> = BTreeMap::new();
        if !units.is_empty() {
            by_count.insert(2, units);
        }
        self.horizontal_rounds(&mut by_count, &mut seen, stats, |this, q| {
            this.reach_derivation(q)
        });
        by_count.into_values().flatten().collect()
    }

    fn reach_derivation(&self, q: &PathPattern) -> Result<Derive, Pruned> {
        let a0 = q.source_attrs();
        let source = PathPattern::attr_set(a0.clone()).expect("non-empty");
        if self.index.id(&source).is_none() {
            return Err(Pruned::AntiMonotone);
        }
        let label = q.labels()[0];
        let a1 = q.last_attrs();
        if a1.len() > 1 {
            let e = self
                .idx
                .edge_set_size(self.g, a1, label)
                .expect("label and set are valid");
            if reach_bound(e, self.max_in_degree(), self.bound, self.g.vertex_count()) < self.theta
            {
                return Err(Pruned::Bound);
            }
        }
        Ok(Derive::Reach {
            label,
            a0: a0.clone(),
            a1: a1.clone(),
            within: self.within(q),
        })
    }

    /// `(count, weighted)` common sources of two patterns over all shards.
    fn common(&self, p: PatternId, q: PatternId) -> (usize, f64) {
        let mut count = 0;
        let mut weighted = 0.0;
        for w in 0..self.shards.len() {
            let (a, b) = (
                self.index.lists(w, p).sources(),
                self.index.lists(w, q).sources(),
            );
            match &self.sample {
                None => count += intersection_count(a, b),
                Some(s) => {
                    for v in intersect(a, b) {
                        count += 1;
                        weighted += s.weight(v);
                    }
                }
            }
        }
        if self.sample.is_none() {
            weighted = count as f64;
        }
        (count, weighted)
    }

    fn mine_rules(&mut self, all: &[PatternId], stats: &mut PhaseStats) -> Vec<MinedRule> {
        let mut children: Vec<Vec<PatternId>> = vec![Vec::new(); self.index.len()];
        for &q in all {
            for parent in lattice_parents(self.index.pattern(q)) {
                if let Some(pid) = self.index.id(&parent) {
                    children[pid].push(q);
                }
            }
        }
        let seeds: Vec<PatternId> = all
            .iter()
            .copied()
            .filter(|&id| {
                let p = self.index.pattern(id);
                p.len() == 1 && p.is_unit()
            })
            .collect();
        let mut visited: FxHashSet<(PatternId, PatternId)> = FxHashSet::default();
        let mut frontier = Vec::new();
        for (i, &x) in seeds.iter().enumerate() {
            for &y in &seeds[i..] {
                visited.insert((x, y));
                frontier.push((x, y));
            }
        }
        let rank = canonical_ranks(all.iter().map(|&id| self.index.pattern(id)));
        let mut rank_of = vec![0; self.index.len()];
        for (&id, &r) in all.iter().zip(&rank) {
            rank_of[id] = r;
        }
        let mut rules = Vec::new();
        let n = self.g.vertex_count();
        while !frontier.is_empty() {
            stats.generated += frontier.len() as u64;
            let mut expand = Vec::new();
            let mut check = Vec::new();
            for &(x, y) in &frontier {
                let (px, py) = (self.index.pattern(x), self.index.pattern(y));
                if x == y || px.dominates(py) || py.dominates(px) {
                    stats.pruned_anti_monotone += 1;
                    expand.push((x, y));
                } else {
                    check.push((x, y));
                }
            }
            let results: Vec<(usize, f64)> = {
                let this = &*self;
                let parts = run_workers(self.shards.len().min(check.len().max(1)), |w| {
                    let workers = this.shards.len().min(check.len().max(1));
                    check
                        .iter()
                        .skip(w)
                        .step_by(workers)
                        .map(|&(x, y)| this.common(x, y))
                        .collect::<Vec<_>>()
                });
                let workers = parts.len();
                let mut iters: Vec<_> = parts.into_iter().map(Vec::into_iter).collect();
                (0..check.len())
                    .map(|i| iters[i % workers].next().expect("strided result"))
                    .collect()
            };
            for (&(x, y), (count, weighted)) in check.iter().zip(results) {
                let frequent = self.is_frequent(weighted);
                record(stats, frequent);
                if !frequent {
                    continue;
                }
                expand.push((x, y));
                let [backward, forward] = self.rule_pair(x, y, count, weighted, n);
                rules.push(((rank_of[y], rank_of[x]), backward));
                rules.push(((rank_of[x], rank_of[y]), forward));
            }
            let mut next = Vec::new();
            for (x, y) in expand {
                for &c in &children[x] {
                    let key = if c <= y { (c, y) } else { (y, c) };
                    if visited.insert(key) {
                        next.push(key);
                    }
                }
                for &c in &children[y] {
                    let key = if x <= c { (x, c) } else { (c, x) };
                    if visited.insert(key) {
                        next.push(key);
                    }
                }
            }
            frontier = next;
        }
        sort_ranked(rules)
    }

    fn rule_pair(
        &self,
        x: PatternId,
        y: PatternId,
        count: usize,
        weighted: f64,
        n: usize,
    ) -> [MinedRule; 2] {
        let (px, py) = (self.index.shared(x).clone(), self.index.shared(y).clone());
        let (sx, sy) = (
            self.support[x].round() as usize,
            self.support[y].round() as usize,
        );
        let asupp = (weighted.round() as usize).min(sx).min(sy);
        let measures = RuleMeasures::from_counts(asupp, sx, sy, n);
        let estimate = self.sample.as_ref().map(|s| {
            let a0 = px.source_attrs().union(py.source_attrs());
            Arc::new(
                estimate_from(weighted, count, s.related(&a0), self.z, s.rho)
                    .expect("matched vertices are sampled"),
            )
        });
        let rule = Rule::from_shared(px, py).expect("pair is non-dominated");
        [
            MinedRule {
                rule: rule.reversed(),
                measures: measures.reversed(),
                estimate: estimate.clone(),
            },
            MinedRule {
                rule,
                measures,
                estimate,
            },
        ]
    }
}

enum Pruned {
    AntiMonotone,
    Bound,
}
