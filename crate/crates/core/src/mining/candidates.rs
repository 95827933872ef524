//! Candidate generation on the pattern level.
//!
//! Vertical candidates append one step `(ℓ, {a})` to a frequent pattern of
//! the previous length. Horizontal candidates merge two frequent patterns of
//! the same shape that differ in exactly one attribute.

use std::collections::{HashMap, HashSet};

use crate::graph::{AttrId, AttrSet, LabelId};
use crate::mining::bounds::TargetSets;
use crate::pattern::{PathPattern, PatternKind};

/// Labels `ℓ` admissible after `p` at step `i`: every attribute of the last
/// set of `p` must admit `ℓ`.
pub fn vertical_labels<'t>(
    p: &'t PathPattern,
    targets: &'t TargetSets,
    i: usize,
) -> impl Iterator<Item = LabelId> + 't {
    let last = p.last_attrs();
    let first = last.as_slice()[0];
    targets
        .labels_at(i, first)
        .iter()
        .copied()
        .filter(move |&l| last.iter().all(|a| targets.label_allowed(i, a, l)))
}

/// One-step extensions of the length-`(i-1)` patterns in `frequent`.
pub fn vertical_extend(
    frequent: &[PathPattern],
    targets: &TargetSets,
    i: usize,
) -> Vec<PathPattern> {
    let mut out = Vec::new();
    for p in frequent {
        debug_assert_eq!(p.len() + 1, i);
        for l in vertical_labels(p, targets, i) {
            for &a in targets.attrs_at(i, l) {
                out.push(p.extend(l, AttrSet::singleton(a)));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct HorizontalCandidates {
    /// Sorted, without duplicates.
    pub candidates: Vec<PathPattern>,
    /// Unions rejected because a one-attribute-smaller sub-pattern is missing.
    pub pruned_anti_monotone: u64,
}

type JoinKey = (PatternKind, Vec<AttrSet>, Vec<LabelId>);

/// Pairwise unions of patterns in `layer` that share kind and labels and
/// whose attribute counts are all `c - 1` with a union of count `c`.
///
/// `layer` must hold every frequent pattern of that length and count: a
/// union survives only if all its sub-patterns with one attribute removed
/// (and no set emptied) appear in `layer`.
pub fn horizontal_extend(layer: &[PathPattern]) -> HorizontalCandidates {
    let known: HashSet<&PathPattern> = layer.iter().collect();
    let mut groups: HashMap<JoinKey, Vec<(usize, usize, AttrId)>> = HashMap::new();
    for (idx, p) in layer.iter().enumerate() {
        for (pos, set) in p.attrs().iter().enumerate() {
            for a in set.iter() {
                let mut attrs = p.attrs().to_vec();
                attrs[pos] = set.without(a);
                groups
                    .entry((p.kind(), attrs, p.labels().to_vec()))
                    .or_default()
                    .push((idx, pos, a));
            }
        }
    }
    let mut seen: HashSet<PathPattern> = HashSet::new();
    let mut rejected: HashSet<PathPattern> = HashSet::new();
    for ((_, attrs, _), members) in groups {
        for (x, &(px, posx, ax)) in members.iter().enumerate() {
            for &(py, posy, ay) in &members[x + 1..] {
                if px == py {
                    continue;
                }
                let mut merged = attrs.clone();
                merged[posx] = merged[posx].with(ax);
                merged[posy] = merged[posy].with(ay);
                let cand = layer[px]
                    .with_attrs_at(posx, merged[posx].clone())
                    .with_attrs_at(posy, merged[posy].clone());
                if seen.contains(&cand) || rejected.contains(&cand) {
                    continue;
                }
                if sub_patterns(&cand).all(|s| known.contains(&s)) {
                    seen.insert(cand);
                } else {
                    rejected.insert(cand);
                }
            }
        }
    }
    let mut candidates: Vec<PathPattern> = seen.into_iter().collect();
    candidates.sort();
    HorizontalCandidates {
        candidates,
        pruned_anti_monotone: rejected.len() as u64,
    }
}

/// Patterns obtained by removing one attribute from a set of size ≥ 2.
pub fn sub_patterns(p: &PathPattern) -> impl Iterator<Item = PathPattern> + '_ {
    p.attrs()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.len() >= 2)
        .flat_map(move |(pos, s)| s.iter().map(move |a| p.with_attrs_at(pos, s.without(a))))
}

/// Frequent-pattern parents of `p` in the extension lattice: sub-patterns
/// with one attribute removed, and for simple patterns ending in a
/// singleton, the prefix without the last step.
pub fn lattice_parents(p: &PathPattern) -> Vec<PathPattern> {
    let mut out: Vec<PathPattern> = sub_patterns(p).collect();
    if p.kind() == PatternKind::Simple && p.len() >= 2 && p.last_attrs().len() == 1 {
        out.push(p.prefix(p.len() - 1));
    }
    out
}
