//! Vertex partitioning for parallel mining.
//!
//! Vertices that can neither hold a target attribute nor leave along a
//! target label are dropped first. The rest are spread over `N` workers by a
//! greedy largest-cost-first assignment with a per-worker vertex cap of
//! `⌈n/N⌉`. Workers only read the shared graph and their own slice; results
//! are merged in worker order.

use crate::error::PartitionError;
use crate::graph::{AttrId, LabelId, PropertyGraph, VertexId};

fn mask(ids: &[u32], len: usize) -> Vec<bool> {
    let mut m = vec![false; len];
    for &i in ids {
        if let Some(slot) = m.get_mut(i as usize) {
            *slot = true;
        }
    }
    m
}

/// Vertices holding a target attribute or having an out-edge with a target
/// label, ascending.
pub fn prune_irrelevant(
    g: &PropertyGraph,
    target_attrs: &[AttrId],
    target_labels: &[LabelId],
) -> Vec<VertexId> {
    let am = mask(target_attrs, g.attr_count());
    let lm = mask(target_labels, g.label_count());
    g.vertices()
        .filter(|&v| {
            g.attrs(v).iter().any(|a| am[a as usize])
                || g.out_edges(v).iter().any(|&(l, _)| lm[l as usize])
        })
        .collect()
}

/// `d_T(v) · |A_T(v)|`: target-labeled out-degree times the number of
/// target attributes held.
pub fn estimate_cost(
    g: &PropertyGraph,
    v: VertexId,
    target_attrs: &[AttrId],
    target_labels: &[LabelId],
) -> u64 {
    let d = g
        .out_edges(v)
        .iter()
        .filter(|&&(l, _)| target_labels.binary_search(&l).is_ok())
        .count() as u64;
    let a = g
        .attrs(v)
        .iter()
        .filter(|a| target_attrs.binary_search(a).is_ok())
        .count() as u64;
    d * a
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    /// Ascending vertex ids per worker.
    pub members: Vec<Vec<VertexId>>,
    pub cost_sums: Vec<u64>,
    pub cap: usize,
}

impl Partition {
    pub fn worker_count(&self) -> usize {
        self.members.len()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    pub fn worker_of(&self, v: VertexId) -> Option<usize> {
        self.members
            .iter()
            .position(|m| m.binary_search(&v).is_ok())
    }
}

/// Greedy assignment: vertices in order of decreasing cost (ties by id) go
/// to the worker with the smallest cost sum among those below the cap (ties
/// to the lowest worker id).
pub fn partition(costs: &[(VertexId, u64)], workers: usize) -> Result<Partition, PartitionError> {
    if workers == 0 {
        return Err(PartitionError);
    }
    let cap = costs.len().div_ceil(workers).max(1);
    let mut order = costs.to_vec();
    order.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut members = vec![Vec::new(); workers];
    let mut cost_sums = vec![0u64; workers];
    for (v, c) in order {
        let w = (0..workers)
            .filter(|&w| members[w].len() < cap)
            .min_by_key(|&w| (cost_sums[w], w))
            .expect("cap leaves room for every vertex");
        members[w].push(v);
        cost_sums[w] += c;
    }
    for m in &mut members {
        m.sort_unstable();
    }
    Ok(Partition {
        members,
        cost_sums,
        cap,
    })
}

/// Runs `f(worker)` for every worker on scoped threads and returns the
/// results in worker order. A single worker runs on the calling thread.
pub fn run_workers<T, F>(workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    if workers <= 1 {
        return vec![f(0)];
    }
    std::thread::scope(|s| {
        let f = &f;
        let handles: Vec<_> = (0..workers).map(|w| s.spawn(move || f(w))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker thread panicked"))
            .collect()
    })
}
