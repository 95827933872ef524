//! Level-wise frequent attribute set mining over vertex attribute sets.

use std::collections::HashSet;

use crate::graph::{AttrSet, PropertyGraph, VertexId};
use crate::measures::intersection_count;
use crate::mining::PhaseStats;

/// A frequent attribute set and the sorted vertices holding it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttrSetMatches {
    pub attrs: AttrSet,
    pub vertices: Vec<VertexId>,
}

/// All attribute sets held by at least `theta` vertices, ordered by size and
/// then lexicographically.
pub fn frequent_attribute_sets(g: &PropertyGraph, theta: usize) -> Vec<(AttrSet, usize)> {
    mine_attribute_sets(g, theta, &mut PhaseStats::default())
        .into_iter()
        .map(|m| (m.attrs, m.vertices.len()))
        .collect()
}

pub(crate) fn mine_attribute_sets(
    g: &PropertyGraph,
    theta: usize,
    stats: &mut PhaseStats,
) -> Vec<AttrSetMatches> {
    let theta = theta.max(1);
    let mut holders: Vec<Vec<VertexId>> = vec![Vec::new(); g.attr_count()];
    for v in g.vertices() {
        for a in g.attrs(v).iter() {
            holders[a as usize].push(v);
        }
    }
    let mut level = Vec::new();
    for (a, vs) in holders.into_iter().enumerate() {
        stats.generated += 1;
        if vs.len() >= theta {
            stats.frequent += 1;
            level.push(AttrSetMatches {
                attrs: AttrSet::singleton(a as u32),
                vertices: vs,
            });
        } else {
            stats.infrequent += 1;
        }
    }
    let mut all = Vec::new();
    while !level.is_empty() {
        let known: HashSet<&AttrSet> = level.iter().map(|m| &m.attrs).collect();
        let mut next = Vec::new();
        // Join sets sharing all but their last attribute; `level` is sorted.
        for (i, x) in level.iter().enumerate() {
            let head = &x.attrs.as_slice()[..x.attrs.len() - 1];
            for y in &level[i + 1..] {
                if &y.attrs.as_slice()[..y.attrs.len() - 1] != head {
                    break;
                }
                let cand = x.attrs.with(*y.attrs.as_slice().last().unwrap());
                stats.generated += 1;
                let all_subsets_frequent = cand
                    .iter()
                    .all(|a| cand.len() <= 2 || known.contains(&cand.without(a)));
                if !all_subsets_frequent {
                    stats.pruned_anti_monotone += 1;
                    continue;
                }
                if intersection_count(&x.vertices, &y.vertices) < theta {
                    stats.infrequent += 1;
                    continue;
                }
                stats.frequent += 1;
                next.push(AttrSetMatches {
                    attrs: cand,
                    vertices: intersect(&x.vertices, &y.vertices),
                });
            }
        }
        all.append(&mut level);
        level = next;
    }
    all
}

pub(crate) fn intersect(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
