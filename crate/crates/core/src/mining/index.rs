//! Per-shard match index: for every indexed pattern and every matching
//! source vertex of a shard, the set of vertices where a conforming walk can
//! end. Extending a pattern by one step only touches the stored targets.

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::error::IndexError;
use crate::graph::{AttrSet, LabelId, PropertyGraph, VertexId};
use crate::pattern::PathPattern;

pub type PatternId = usize;

/// Sources with their target lists, stored contiguously. Sources are
/// ascending, each target list is ascending and non-empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TargetLists {
    sources: Vec<VertexId>,
    offsets: Vec<u32>,
    targets: Vec<VertexId>,
}

impl TargetLists {
    pub fn new() -> Self {
        TargetLists {
            sources: Vec::new(),
            offsets: vec![0],
            targets: Vec::new(),
        }
    }

    /// Every vertex is its own single target.
    pub fn identity(vertices: Vec<VertexId>) -> Self {
        let offsets = (0..=vertices.len() as u32).collect();
        TargetLists {
            targets: vertices.clone(),
            sources: vertices,
            offsets,
        }
    }

    /// Appends `source` with its `targets`; both must keep the ordering
    /// invariants.
    pub fn push(&mut self, source: VertexId, targets: &[VertexId]) {
        debug_assert!(!targets.is_empty());
        debug_assert!(self.sources.last().is_none_or(|&s| s < source));
        if self.offsets.is_empty() {
            self.offsets.push(0);
        }
        self.sources.push(source);
        self.targets.extend_from_slice(targets);
        self.offsets.push(self.targets.len() as u32);
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    pub fn sources(&self) -> &[VertexId] {
        &self.sources
    }

    pub fn targets_of(&self, i: usize) -> &[VertexId] {
        &self.targets[self.offsets[i] as usize..self.offsets[i + 1] as usize]
    }

    pub fn targets_for(&self, v: VertexId) -> Option<&[VertexId]> {
        self.sources
            .binary_search(&v)
            .ok()
            .map(|i| self.targets_of(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &[VertexId])> {
        (0..self.len()).map(move |i| (self.sources[i], self.targets_of(i)))
    }

    /// Drops the targets and keeps the sources.
    pub fn release_targets(&mut self) {
        self.targets = Vec::new();
        self.offsets = Vec::new();
    }

    pub fn has_targets(&self) -> bool {
        !self.offsets.is_empty()
    }
}

/// Reusable per-worker buffers.
pub(crate) struct Scratch {
    seen: FixedBitSet,
    touched: Vec<VertexId>,
    next: Vec<VertexId>,
}

impl Scratch {
    pub(crate) fn new(vertex_count: usize) -> Self {
        Scratch {
            seen: FixedBitSet::with_capacity(vertex_count),
            touched: Vec::new(),
            next: Vec::new(),
        }
    }
}

/// Extends each entry of `parent` by one `(label, attrs)` step. With
/// `restrict`, only sources in that ascending list are considered.
pub(crate) fn extend_lists(
    g: &PropertyGraph,
    parent: &TargetLists,
    label: LabelId,
    attrs: &AttrSet,
    restrict: Option<&[VertexId]>,
    scratch: &mut Scratch,
) -> TargetLists {
    let mut out = TargetLists::new();
    let mut r = 0;
    for (i, &v) in parent.sources.iter().enumerate() {
        if let Some(allowed) = restrict {
            while r < allowed.len() && allowed[r] < v {
                r += 1;
            }
            if r == allowed.len() {
                break;
            }
            if allowed[r] != v {
                continue;
            }
        }
        scratch.next.clear();
        for &u in parent.targets_of(i) {
            for w in g.out_with_label(u, label) {
                if !scratch.seen.put(w as usize) {
                    scratch.touched.push(w);
                    if g.has_attrs(w, attrs) {
                        scratch.next.push(w);
                    }
                }
            }
        }
        for &w in &scratch.touched {
            scratch.seen.set(w as usize, false);
        }
        scratch.touched.clear();
        if !scratch.next.is_empty() {
            scratch.next.sort_unstable();
            out.push(v, &scratch.next);
        }
    }
    out
}

/// Patterns with their per-shard target lists.
#[derive(Clone, Debug, Default)]
pub struct MatchIndex {
    patterns: Vec<Arc<PathPattern>>,
    ids: FxHashMap<PathPattern, PatternId>,
    shards: Vec<Vec<TargetLists>>,
}

impl MatchIndex {
    pub fn new(shard_count: usize) -> Self {
        MatchIndex {
            patterns: Vec::new(),
            ids: FxHashMap::default(),
            shards: vec![Vec::new(); shard_count],
        }
    }

    pub fn shard_count(&self) -> usize {
        self.shards.len()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Adds `pattern` with one entry per shard and returns its id.
    pub fn insert(&mut self, pattern: PathPattern, lists: Vec<TargetLists>) -> PatternId {
        assert_eq!(lists.len(), self.shards.len(), "one target list per shard");
        let id = self.patterns.len();
        self.ids.insert(pattern.clone(), id);
        self.patterns.push(Arc::new(pattern));
        for (shard, l) in self.shards.iter_mut().zip(lists) {
            shard.push(l);
        }
        id
    }

    pub fn id(&self, p: &PathPattern) -> Option<PatternId> {
        self.ids.get(p).copied()
    }

    pub fn pattern(&self, id: PatternId) -> &PathPattern {
        &self.patterns[id]
    }

    pub fn shared(&self, id: PatternId) -> &Arc<PathPattern> {
        &self.patterns[id]
    }

    pub fn lists(&self, shard: usize, id: PatternId) -> &TargetLists {
        &self.shards[shard][id]
    }

    /// Number of matching sources over all shards.
    pub fn support(&self, id: PatternId) -> usize {
        self.shards.iter().map(|s| s[id].len()).sum()
    }

    /// All matching sources, ascending.
    pub fn sources(&self, id: PatternId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .shards
            .iter()
            .flat_map(|s| s[id].sources().iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Entries stored for vertex `v`: pattern ids with their target sets.
    pub fn entries_of(&self, v: VertexId) -> Vec<(PatternId, &[VertexId])> {
        let mut out = Vec::new();
        for shard in &self.shards {
            for (id, l) in shard.iter().enumerate() {
                if let Some(t) = l.targets_for(v) {
                    out.push((id, t));
                }
            }
        }
        out.sort_by_key(|&(id, _)| id);
        out
    }

    pub fn release_targets(&mut self, id: PatternId) {
        for shard in &mut self.shards {
            shard[id].release_targets();
        }
    }

    /// Target lists of `p` extended by `(label, attrs)` on every shard.
    pub fn extend_from_index(
        &self,
        g: &PropertyGraph,
        p: PatternId,
        label: LabelId,
        attrs: &AttrSet,
    ) -> Result<Vec<TargetLists>, IndexError> {
        if p >= self.patterns.len() {
            return Err(IndexError::UnknownPattern(p));
        }
        let mut scratch = Scratch::new(g.vertex_count());
        Ok(self
            .shards
            .iter()
            .map(|s| extend_lists(g, &s[p], label, attrs, None, &mut scratch))
            .collect())
    }
}
