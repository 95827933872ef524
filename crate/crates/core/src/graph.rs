//! In-memory property graph: vertices carry attribute sets, edges are
//! directed and labeled. Labels, attributes and vertex names are interned to
//! dense ids in order of first occurrence.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use smallvec::SmallVec;

use crate::error::GraphError;

pub type VertexId = u32;
pub type LabelId = u32;
pub type AttrId = u32;

/// A sorted, deduplicated set of attribute ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AttrSet(SmallVec<[AttrId; 4]>);

impl AttrSet {
    pub fn new<I: IntoIterator<Item = AttrId>>(attrs: I) -> Self {
        let mut v: SmallVec<[AttrId; 4]> = attrs.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        AttrSet(v)
    }

    pub fn empty() -> Self {
        AttrSet(SmallVec::new())
    }

    pub fn singleton(a: AttrId) -> Self {
        let mut v = SmallVec::new();
        v.push(a);
        AttrSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[AttrId] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = AttrId> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, a: AttrId) -> bool {
        self.0.binary_search(&a).is_ok()
    }

    /// `self ⊆ other`, by merging the two sorted lists.
    pub fn is_subset_of(&self, other: &AttrSet) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    pub fn union(&self, other: &AttrSet) -> AttrSet {
        let mut out = SmallVec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        AttrSet(out)
    }

    pub fn with(&self, a: AttrId) -> AttrSet {
        match self.0.binary_search(&a) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, a);
                AttrSet(v)
            }
        }
    }

    pub fn without(&self, a: AttrId) -> AttrSet {
        AttrSet(self.0.iter().copied().filter(|&x| x != a).collect())
    }
}

impl fmt::Debug for AttrSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<AttrId> for AttrSet {
    fn from_iter<I: IntoIterator<Item = AttrId>>(iter: I) -> Self {
        AttrSet::new(iter)
    }
}

pub(crate) fn is_sorted_subset(small: &[AttrId], big: &[AttrId]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// String interner with ids assigned in order of first occurrence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dictionary {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

impl Dictionary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Dictionary whose names are `prefix0`, `prefix1`, ...
    pub fn numbered(prefix: &str, count: usize) -> Self {
        let mut d = Dictionary::new();
        for i in 0..count {
            d.intern(&format!("{prefix}{i}"));
        }
        d
    }

    pub fn intern(&mut self, name: &str) -> u32 {
        if let Some(&id) = self.ids.get(name) {
            return id;
        }
        let id = self.names.len() as u32;
        self.names.push(name.to_owned());
        self.ids.insert(name.to_owned(), id);
        id
    }

    pub fn id(&self, name: &str) -> Option<u32> {
        self.ids.get(name).copied()
    }

    pub fn name(&self, id: u32) -> Option<&str> {
        self.names.get(id as usize).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &str)> {
        self.names
            .iter()
            .enumerate()
            .map(|(i, s)| (i as u32, s.as_str()))
    }

    /// Sidecar format: `<string>\t<id>` per line.
    pub fn write_to(&self, path: &Path) -> Result<(), GraphError> {
        let mut w = BufWriter::new(fs::File::create(path)?);
        for (id, name) in self.iter() {
            writeln!(w, "{name}\t{id}")?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_from(path: &Path) -> Result<Self, GraphError> {
        let text = fs::read_to_string(path)?;
        let mut entries = Vec::new();
        for (no, line) in text.lines().enumerate() {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = || GraphError::Malformed {
                file: path.display().to_string(),
                line: no + 1,
                reason: "expected `<string>\\t<id>`".into(),
            };
            let (name, id) = line.rsplit_once('\t').ok_or_else(malformed)?;
            let id: u32 = id.trim().parse().map_err(|_| malformed())?;
            entries.push((id, name.to_owned()));
        }
        entries.sort();
        let mut d = Dictionary::new();
        for (expected, (id, name)) in entries.into_iter().enumerate() {
            if id as usize != expected {
                return Err(GraphError::Malformed {
                    file: path.display().to_string(),
                    line: expected + 1,
                    reason: format!("dictionary ids are not dense (missing id {expected})"),
                });
            }
            d.intern(&name);
        }
        Ok(d)
    }
}

/// Directed, edge-labeled graph with attribute sets on vertices.
///
/// Out-edges are stored in CSR form sorted by `(label, target)`, so the
/// edges of a vertex with a given label form a contiguous run. In-edges are
/// mirrored the same way for backward traversals.
#[derive(Clone, Debug)]
pub struct PropertyGraph {
    attrs: Vec<AttrSet>,
    out_offsets: Vec<usize>,
    out_edges: Vec<(LabelId, VertexId)>,
    in_offsets: Vec<usize>,
    in_edges: Vec<(LabelId, VertexId)>,
    label_count: usize,
    attr_count: usize,
    vertex_names: Dictionary,
    label_names: Dictionary,
    attr_names: Dictionary,
}

impl PropertyGraph {
    /// Builds a graph from raw parts. Attribute sets are normalized and
    /// identical edges are collapsed.
    pub fn from_parts(
        vertex_attrs: Vec<AttrSet>,
        edges: Vec<(VertexId, LabelId, VertexId)>,
        label_count: usize,
        attr_count: usize,
    ) -> Result<Self, GraphError> {
        let n = vertex_attrs.len();
        Self::with_names(
            vertex_attrs,
            edges,
            Dictionary::numbered("v", n),
            Dictionary::numbered("l", label_count),
            Dictionary::numbered("a", attr_count),
        )
    }

    pub fn with_names(
        vertex_attrs: Vec<AttrSet>,
        mut edges: Vec<(VertexId, LabelId, VertexId)>,
        vertex_names: Dictionary,
        label_names: Dictionary,
        attr_names: Dictionary,
    ) -> Result<Self, GraphError> {
        let n = vertex_attrs.len();
        let label_count = label_names.len();
        let attr_count = attr_names.len();
        if vertex_names.len() != n {
            return Err(GraphError::Invalid(format!(
                "{} vertex names for {} vertices",
                vertex_names.len(),
                n
            )));
        }
        for set in &vertex_attrs {
            if let Some(a) = set.iter().find(|&a| a as usize >= attr_count) {
                return Err(GraphError::Invalid(format!(
                    "attribute id {a} out of range"
                )));
            }
        }
        for &(s, l, t) in &edges {
            if s as usize >= n || t as usize >= n {
                return Err(GraphError::Invalid(format!(
                    "edge ({s}, {l}, {t}) has an endpoint out of range"
                )));
            }
            if l as usize >= label_count {
                return Err(GraphError::UnknownLabel(l));
            }
        }
        edges.sort_unstable();
        edges.dedup();

        let mut out_offsets = vec![0usize; n + 1];
        let mut in_offsets = vec![0usize; n + 1];
        for &(s, _, t) in &edges {
            out_offsets[s as usize + 1] += 1;
            in_offsets[t as usize + 1] += 1;
        }
        for i in 0..n {
            out_offsets[i + 1] += out_offsets[i];
            in_offsets[i + 1] += in_offsets[i];
        }
        // `edges` is sorted by (source, label, target), which is already CSR order.
        let out_edges: Vec<(LabelId, VertexId)> = edges.iter().map(|&(_, l, t)| (l, t)).collect();
        let mut in_list: Vec<(VertexId, LabelId, VertexId)> =
            edges.iter().map(|&(s, l, t)| (t, l, s)).collect();
        in_list.sort_unstable();
        let in_edges = in_list.into_iter().map(|(_, l, s)| (l, s)).collect();

        Ok(PropertyGraph {
            attrs: vertex_attrs,
            out_offsets,
            out_edges,
            in_offsets,
            in_edges,
            label_count,
            attr_count,
            vertex_names,
            label_names,
            attr_names,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.attrs.len()
    }

    pub fn edge_count(&self) -> usize {
        self.out_edges.len()
    }

    pub fn label_count(&self) -> usize {
        self.label_count
    }

    pub fn attr_count(&self) -> usize {
        self.attr_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.attrs.len() as VertexId
    }

    pub fn attrs(&self, v: VertexId) -> &AttrSet {
        &self.attrs[v as usize]
    }

    pub fn has_attrs(&self, v: VertexId, set: &AttrSet) -> bool {
        set.is_subset_of(&self.attrs[v as usize])
    }

    /// All out-edges of `v` as `(label, target)`, sorted.
    pub fn out_edges(&self, v: VertexId) -> &[(LabelId, VertexId)] {
        &self.out_edges[self.out_offsets[v as usize]..self.out_offsets[v as usize + 1]]
    }

    /// All in-edges of `v` as `(label, source)`, sorted.
    pub fn in_edges(&self, v: VertexId) -> &[(LabelId, VertexId)] {
        &self.in_edges[self.in_offsets[v as usize]..self.in_offsets[v as usize + 1]]
    }

    pub fn out_with_label(
        &self,
        v: VertexId,
        label: LabelId,
    ) -> impl Iterator<Item = VertexId> + '_ {
        label_run(self.out_edges(v), label).iter().map(|&(_, t)| t)
    }

    pub fn in_with_label(
        &self,
        v: VertexId,
        label: LabelId,
    ) -> impl Iterator<Item = VertexId> + '_ {
        label_run(self.in_edges(v), label).iter().map(|&(_, s)| s)
    }

    pub fn has_out_label(&self, v: VertexId, label: LabelId) -> bool {
        !label_run(self.out_edges(v), label).is_empty()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_offsets[v as usize + 1] - self.in_offsets[v as usize]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_offsets[v as usize + 1] - self.out_offsets[v as usize]
    }

    /// Every edge as `(source, label, target)` in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, LabelId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |v| self.out_edges(v).iter().map(move |&(l, t)| (v, l, t)))
    }

    pub fn vertex_names(&self) -> &Dictionary {
        &self.vertex_names
    }

    pub fn label_names(&self) -> &Dictionary {
        &self.label_names
    }

    pub fn attr_names(&self) -> &Dictionary {
        &self.attr_names
    }

    pub fn label_id(&self, name: &str) -> Option<LabelId> {
        self.label_names.id(name)
    }

    pub fn attr_id(&self, name: &str) -> Option<AttrId> {
        self.attr_names.id(name)
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_names.id(name)
    }

    pub fn attr_set_by_names(&self, names: &[&str]) -> Option<AttrSet> {
        names
            .iter()
            .map(|n| self.attr_id(n))
            .collect::<Option<Vec<_>>>()
            .map(AttrSet::new)
    }
}

fn label_run(edges: &[(LabelId, VertexId)], label: LabelId) -> &[(LabelId, VertexId)] {
    let lo = edges.partition_point(|&(l, _)| l < label);
    let hi = lo + edges[lo..].partition_point(|&(l, _)| l == label);
    &edges[lo..hi]
}

/// Maximum in-degree over all vertices; 0 for an edgeless graph.
pub fn max_in_degree(g: &PropertyGraph) -> usize {
    g.vertices().map(|v| g.in_degree(v)).max().unwrap_or(0)
}

#[derive(Clone, Debug, Default)]
struct IndexEntry {
    /// Edges `(v, ℓ, v')` with the attribute on `v'`.
    edges: Vec<(VertexId, VertexId)>,
    /// Vertices holding the attribute with an out-edge labeled `ℓ`.
    sources: Vec<VertexId>,
}

/// Precomputed counts `|ℰ(a, ℓ)|` and `|𝒱(a, ℓ)|` for single attributes,
/// plus the maximum in-degree. Multi-attribute queries are answered by
/// filtering the member list of the rarest attribute.
#[derive(Clone, Debug)]
pub struct GraphIndexes {
    max_in_degree: usize,
    label_count: usize,
    entries: HashMap<(AttrId, LabelId), IndexEntry>,
}

impl GraphIndexes {
    pub fn build(g: &PropertyGraph) -> Self {
        let mut entries: HashMap<(AttrId, LabelId), IndexEntry> = HashMap::new();
        for v in g.vertices() {
            let mut last_label = None;
            for &(l, t) in g.out_edges(v) {
                for a in g.attrs(t).iter() {
                    entries.entry((a, l)).or_default().edges.push((v, t));
                }
                if last_label != Some(l) {
                    for a in g.attrs(v).iter() {
                        entries.entry((a, l)).or_default().sources.push(v);
                    }
                    last_label = Some(l);
                }
            }
        }
        GraphIndexes {
            max_in_degree: max_in_degree(g),
            label_count: g.label_count(),
            entries,
        }
    }

    pub fn max_in_degree(&self) -> usize {
        self.max_in_degree
    }

    fn check_label(&self, label: LabelId) -> Result<(), GraphError> {
        if (label as usize) < self.label_count {
            Ok(())
        } else {
            Err(GraphError::UnknownLabel(label))
        }
    }

    /// `|ℰ(a, ℓ)|` for a single attribute.
    pub fn edge_count(&self, a: AttrId, label: LabelId) -> usize {
        self.entries.get(&(a, label)).map_or(0, |e| e.edges.len())
    }

    /// `|𝒱(a, ℓ)|` for a single attribute.
    pub fn vertex_count(&self, a: AttrId, label: LabelId) -> usize {
        self.entries.get(&(a, label)).map_or(0, |e| e.sources.len())
    }

    fn rarest<F: Fn(&IndexEntry) -> usize>(
        &self,
        set: &AttrSet,
        label: LabelId,
        size: F,
    ) -> Option<&IndexEntry> {
        let mut best: Option<&IndexEntry> = None;
        for a in set.iter() {
            let e = self.entries.get(&(a, label))?;
            if best.is_none_or(|b| size(e) < size(b)) {
                best = Some(e);
            }
        }
        best
    }

    /// `|ℰ(A, ℓ)|`: edges labeled `ℓ` whose target holds every attribute of `A`.
    pub fn edge_set_size(
        &self,
        g: &PropertyGraph,
        set: &AttrSet,
        label: LabelId,
    ) -> Result<usize, GraphError> {
        self.check_label(label)?;
        if set.is_empty() {
            return Err(GraphError::EmptyAttrSet);
        }
        if set.len() == 1 {
            return Ok(self.edge_count(set.as_slice()[0], label));
        }
        Ok(self.rarest(set, label, |e| e.edges.len()).map_or(0, |e| {
            e.edges
                .iter()
                .filter(|&&(_, t)| g.has_attrs(t, set))
                .count()
        }))
    }

    /// `|𝒱(A, ℓ)|`: vertices holding `A` with at least one out-edge labeled `ℓ`.
    pub fn vertex_set_size(
        &self,
        g: &PropertyGraph,
        set: &AttrSet,
        label: LabelId,
    ) -> Result<usize, GraphError> {
        self.check_label(label)?;
        if set.is_empty() {
            return Err(GraphError::EmptyAttrSet);
        }
        if set.len() == 1 {
            return Ok(self.vertex_count(set.as_slice()[0], label));
        }
        Ok(self.rarest(set, label, |e| e.sources.len()).map_or(0, |e| {
            e.sources.iter().filter(|&&v| g.has_attrs(v, set)).count()
        }))
    }
}

fn malformed(file: &Path, line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Malformed {
        file: file.display().to_string(),
        line,
        reason: reason.into(),
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

/// Loads a graph from a vertex file (`<vertex>\t<attr>[,<attr>...]`) and an
/// edge file (`<src>\t<label>\t<dst>`).
pub fn load_graph(vertex_file: &Path, edge_file: &Path) -> Result<PropertyGraph, GraphError> {
    let vtext = fs::read_to_string(vertex_file)?;
    let etext = fs::read_to_string(edge_file)?;
    parse_graph(&vtext, &etext, vertex_file, edge_file)
}

pub(crate) fn parse_graph(
    vertex_text: &str,
    edge_text: &str,
    vertex_file: &Path,
    edge_file: &Path,
) -> Result<PropertyGraph, GraphError> {
    let mut vertex_names = Dictionary::new();
    let mut attr_names = Dictionary::new();
    let mut label_names = Dictionary::new();
    let mut vertex_attrs = Vec::new();

    for (no, line) in data_lines(vertex_text) {
        let (name, attr_field) = match line.split_once('\t') {
            Some((n, rest)) => {
                if rest.contains('\t') {
                    return Err(malformed(
                        vertex_file,
                        no,
                        "expected `<vertex_id>\\t<attr>[,<attr>...]`",
                    ));
                }
                (n, rest)
            }
            None => (line, ""),
        };
        let name = name.trim();
        if name.is_empty() {
            return Err(malformed(vertex_file, no, "empty vertex id"));
        }
        if vertex_names.id(name).is_some() {
            return Err(GraphError::DuplicateVertex {
                line: no,
                vertex: name.to_owned(),
            });
        }
        let mut ids = Vec::new();
        for attr in attr_field
            .split(',')
            .map(str::trim)
            .filter(|a| !a.is_empty())
        {
            ids.push(attr_names.intern(attr));
        }
        vertex_names.intern(name);
        vertex_attrs.push(AttrSet::new(ids));
    }

    let mut edges = Vec::new();
    for (no, line) in data_lines(edge_text) {
        let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
        if fields.len() != 3 || fields.iter().any(|f| f.is_empty()) {
            return Err(malformed(
                edge_file,
                no,
                "expected `<src>\\t<label>\\t<dst>`",
            ));
        }
        let lookup = |name: &str| {
            vertex_names
                .id(name)
                .ok_or_else(|| GraphError::DanglingEdge {
                    line: no,
                    vertex: name.to_owned(),
                })
        };
        let s = lookup(fields[0])?;
        let t = lookup(fields[2])?;
        let l = label_names.intern(fields[1]);
        edges.push((s, l, t));
    }

    PropertyGraph::with_names(vertex_attrs, edges, vertex_names, label_names, attr_names)
}

/// Writes the graph in the loader's format, plus `<file>.dict` sidecars for
/// attribute names (next to the vertex file) and labels (next to the edge file).
pub fn save_graph(
    g: &PropertyGraph,
    vertex_file: &Path,
    edge_file: &Path,
) -> Result<(), GraphError> {
    let mut w = BufWriter::new(fs::File::create(vertex_file)?);
    for v in g.vertices() {
        let names: Vec<&str> = g
            .attrs(v)
            .iter()
            .map(|a| g.attr_names.name(a).unwrap_or("?"))
            .collect();
        writeln!(
            w,
            "{}\t{}",
            g.vertex_names.name(v).unwrap_or("?"),
            names.join(",")
        )?;
    }
    w.flush()?;
    let mut w = BufWriter::new(fs::File::create(edge_file)?);
    for (s, l, t) in g.edges() {
        writeln!(
            w,
            "{}\t{}\t{}",
            g.vertex_names.name(s).unwrap_or("?"),
            g.label_names.name(l).unwrap_or("?"),
            g.vertex_names.name(t).unwrap_or("?")
        )?;
    }
    w.flush()?;
    g.attr_names.write_to(&sidecar(vertex_file))?;
    g.label_names.write_to(&sidecar(edge_file))?;
    Ok(())
}

/// Path of the dictionary sidecar written next to a graph file.
pub fn sidecar(path: &Path) -> std::path::PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".dict");
    s.into()
}
