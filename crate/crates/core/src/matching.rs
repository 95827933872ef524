//! Vertex matching under homomorphism semantics: a vertex matches a simple
//! pattern when it is the source of a conforming walk (vertices may repeat),
//! and a reachability pattern when a vertex holding `A₁` is reachable over a
//! non-empty run of `ℓ`-edges.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::graph::{LabelId, PropertyGraph, VertexId};
use crate::pattern::{PathPattern, PatternKind};

/// Hop limit applied to `ℓ*` traversals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReachBound {
    /// Paths of at most this many edges.
    Capped(usize),
    Unbounded,
}

impl ReachBound {
    pub fn allows(self, hops: usize) -> bool {
        match self {
            ReachBound::Capped(k) => hops <= k,
            ReachBound::Unbounded => true,
        }
    }
}

/// Targets of all walks from `v` that match the simple pattern `p`.
pub fn walk_targets(g: &PropertyGraph, v: VertexId, p: &PathPattern) -> Vec<VertexId> {
    debug_assert_eq!(p.kind(), PatternKind::Simple);
    if !g.has_attrs(v, p.source_attrs()) {
        return Vec::new();
    }
    let mut frontier = vec![v];
    let mut seen = FixedBitSet::with_capacity(g.vertex_count());
    for (&label, attrs) in p.labels().iter().zip(p.attrs()[1..].iter()) {
        seen.clear();
        let mut next = Vec::new();
        for &u in &frontier {
            for w in g.out_with_label(u, label) {
                if !seen.put(w as usize) && g.has_attrs(w, attrs) {
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            return next;
        }
        frontier = next;
    }
    frontier.sort_unstable();
    frontier
}

/// Vertices reachable from `source` over one or more `label` edges.
pub fn reachable_from(
    g: &PropertyGraph,
    source: VertexId,
    label: LabelId,
    bound: ReachBound,
) -> Vec<VertexId> {
    let mut seen = FixedBitSet::with_capacity(g.vertex_count());
    let mut out = Vec::new();
    reachable_into(g, source, label, bound, &mut seen, &mut out);
    out
}

/// Same as [`reachable_from`], reusing caller-provided scratch space.
/// `seen` must be empty on entry and is left dirty.
pub(crate) fn reachable_into(
    g: &PropertyGraph,
    source: VertexId,
    label: LabelId,
    bound: ReachBound,
    seen: &mut FixedBitSet,
    out: &mut Vec<VertexId>,
) {
    out.clear();
    let mut frontier = vec![source];
    let mut hops = 0;
    while !frontier.is_empty() && bound.allows(hops + 1) {
        hops += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for w in g.out_with_label(u, label) {
                if !seen.put(w as usize) {
                    next.push(w);
                }
            }
        }
        out.extend_from_slice(&next);
        frontier = next;
    }
    out.sort_unstable();
}

/// Per-source reachable sets over `label` edges, excluding the empty path.
pub fn reach_closure(
    g: &PropertyGraph,
    label: LabelId,
    sources: &[VertexId],
    bound: ReachBound,
) -> Vec<Vec<VertexId>> {
    let mut seen = FixedBitSet::with_capacity(g.vertex_count());
    sources
        .iter()
        .map(|&s| {
            seen.clear();
            let mut out = Vec::new();
            reachable_into(g, s, label, bound, &mut seen, &mut out);
            out
        })
        .collect()
}

pub fn vertex_matches(g: &PropertyGraph, v: VertexId, p: &PathPattern, bound: ReachBound) -> bool {
    match p.kind() {
        PatternKind::Simple => !walk_targets(g, v, p).is_empty(),
        PatternKind::Reachability => {
            g.has_attrs(v, p.source_attrs())
                && reachable_from(g, v, p.labels()[0], bound)
                    .into_iter()
                    .any(|u| g.has_attrs(u, p.last_attrs()))
        }
    }
}

/// `𝒱(p)`, sorted ascending.
///
/// Simple patterns are evaluated by backward propagation from the vertices
/// holding `Aₙ`; reachability patterns by a backward breadth-first search
/// from the vertices holding `A₁`.
pub fn match_set(g: &PropertyGraph, p: &PathPattern, bound: ReachBound) -> Vec<VertexId> {
    let bits = match p.kind() {
        PatternKind::Simple => simple_match_bits(g, p),
        PatternKind::Reachability => reach_match_bits(g, p, bound),
    };
    bits.ones().map(|v| v as VertexId).collect()
}

fn holders(g: &PropertyGraph, attrs: &crate::graph::AttrSet) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(g.vertex_count());
    for v in g.vertices() {
        if g.has_attrs(v, attrs) {
            bits.insert(v as usize);
        }
    }
    bits
}

pub(crate) fn simple_match_bits(g: &PropertyGraph, p: &PathPattern) -> FixedBitSet {
    let n = p.len();
    let mut current = holders(g, &p.attrs()[n]);
    for pos in (0..n).rev() {
        let label = p.labels()[pos];
        let attrs = &p.attrs()[pos];
        let mut next = FixedBitSet::with_capacity(g.vertex_count());
        for v in g.vertices() {
            if g.has_attrs(v, attrs)
                && g.out_with_label(v, label)
                    .any(|w| current.contains(w as usize))
            {
                next.insert(v as usize);
            }
        }
        current = next;
    }
    current
}

fn reach_match_bits(g: &PropertyGraph, p: &PathPattern, bound: ReachBound) -> FixedBitSet {
    let label = p.labels()[0];
    // Vertices at distance ≤ cap-1 (distance 0 allowed) from a target.
    let mut near = holders(g, p.last_attrs());
    let mut frontier: Vec<VertexId> = near.ones().map(|v| v as VertexId).collect();
    let mut depth = 0;
    while !frontier.is_empty() && bound.allows(depth + 2) {
        depth += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for s in g.in_with_label(u, label) {
                if !near.put(s as usize) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    let mut out = FixedBitSet::with_capacity(g.vertex_count());
    if !bound.allows(1) {
        return out;
    }
    for u in near.ones() {
        for s in g.in_with_label(u as VertexId, label) {
            if g.has_attrs(s, p.source_attrs()) {
                out.insert(s as usize);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::AttrSet;

    // a -> b -> c, all labeled 0 and holding attribute 0.
    fn chain() -> PropertyGraph {
        PropertyGraph::from_parts(
            vec![AttrSet::singleton(0); 3],
            vec![(0, 0, 1), (1, 0, 2)],
            1,
            1,
        )
        .unwrap()
    }

    #[test]
    fn chain_closure() {
        let g = chain();
        let sets = reach_closure(&g, 0, &[0, 1, 2], ReachBound::Unbounded);
        assert_eq!(sets, vec![vec![1, 2], vec![2], vec![]]);
        let capped = reach_closure(&g, 0, &[0], ReachBound::Capped(1));
        assert_eq!(capped, vec![vec![1]]);
    }

    #[test]
    fn self_reach_needs_a_cycle() {
        let g = PropertyGraph::from_parts(vec![AttrSet::new([0, 1])], vec![], 1, 2).unwrap();
        let p = PathPattern::reachability(AttrSet::singleton(0), 0, AttrSet::singleton(1)).unwrap();
        assert!(!vertex_matches(&g, 0, &p, ReachBound::Unbounded));
        assert!(match_set(&g, &p, ReachBound::Unbounded).is_empty());
        let looped =
            PropertyGraph::from_parts(vec![AttrSet::new([0, 1])], vec![(0, 0, 0)], 1, 2).unwrap();
        assert!(vertex_matches(&looped, 0, &p, ReachBound::Capped(1)));
        assert_eq!(match_set(&looped, &p, ReachBound::Capped(1)), vec![0]);
    }

    #[test]
    fn chain_reachability_pattern() {
        let g = chain();
        let p = PathPattern::reachability(AttrSet::singleton(0), 0, AttrSet::singleton(0)).unwrap();
        assert_eq!(match_set(&g, &p, ReachBound::Unbounded), vec![0, 1]);
        assert_eq!(match_set(&g, &p, ReachBound::Capped(1)), vec![0, 1]);
        assert_eq!(
            match_set(&g, &p, ReachBound::Capped(0)),
            Vec::<VertexId>::new()
        );
    }

    #[test]
    fn capped_reachability_depth() {
        // 0 -> 1 -> 2 -> 3, only vertex 3 holds attribute 1.
        let mut attrs = vec![AttrSet::singleton(0); 4];
        attrs[3] = AttrSet::singleton(1);
        let g =
            PropertyGraph::from_parts(attrs, vec![(0, 0, 1), (1, 0, 2), (2, 0, 3)], 1, 2).unwrap();
        let p = PathPattern::reachability(AttrSet::singleton(0), 0, AttrSet::singleton(1)).unwrap();
        assert_eq!(match_set(&g, &p, ReachBound::Capped(1)), vec![2]);
        assert_eq!(match_set(&g, &p, ReachBound::Capped(2)), vec![1, 2]);
        assert_eq!(match_set(&g, &p, ReachBound::Capped(3)), vec![0, 1, 2]);
        for v in 0..4 {
            for cap in 0..4 {
                let b = ReachBound::Capped(cap);
                assert_eq!(
                    vertex_matches(&g, v, &p, b),
                    match_set(&g, &p, b).contains(&v)
                );
            }
        }
    }

    #[test]
    fn length_zero_and_walk_semantics() {
        let g = chain();
        let p0 = PathPattern::attr_set(AttrSet::singleton(0)).unwrap();
        assert_eq!(match_set(&g, &p0, ReachBound::Unbounded), vec![0, 1, 2]);
        // Walks may revisit vertices: a 2-cycle matches arbitrarily long patterns.
        let cyc = PropertyGraph::from_parts(
            vec![AttrSet::singleton(0); 2],
            vec![(0, 0, 1), (1, 0, 0)],
            1,
            1,
        )
        .unwrap();
        let long = PathPattern::unit(&[0, 0, 0, 0], &[0, 0, 0]).unwrap();
        assert_eq!(match_set(&cyc, &long, ReachBound::Unbounded), vec![0, 1]);
        assert_eq!(walk_targets(&cyc, 0, &long), vec![1]);
    }
}
