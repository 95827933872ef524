//! Path patterns and the dominance order between them.
//!
//! Text form: `{a,b}-[l]->{c}-[m]->{d}` for simple patterns and
//! `{a}-[l*]->{c}` for reachability patterns. A bare `{a,b}` is a length-0
//! pattern.

use std::fmt;

use smallvec::SmallVec;

use crate::error::PatternError;
use crate::graph::{AttrId, AttrSet, LabelId, PropertyGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    Simple,
    Reachability,
}

/// A simple pattern `⟨A₀, ℓ₀, A₁, …, ℓₙ₋₁, Aₙ⟩` or a reachability pattern
/// `⟨A₀, ℓ*, A₁⟩`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathPattern {
    kind: PatternKind,
    attrs: SmallVec<[AttrSet; 3]>,
    labels: SmallVec<[LabelId; 2]>,
}

impl PathPattern {
    /// Length-0 pattern.
    pub fn attr_set(a0: AttrSet) -> Result<Self, PatternError> {
        Self::simple(vec![a0], vec![])
    }

    pub fn simple(attrs: Vec<AttrSet>, labels: Vec<LabelId>) -> Result<Self, PatternError> {
        if attrs.is_empty() || labels.len() + 1 != attrs.len() {
            return Err(PatternError::Shape {
                attrs: attrs.len(),
                labels: labels.len(),
            });
        }
        if let Some(i) = attrs.iter().position(AttrSet::is_empty) {
            return Err(PatternError::EmptyAttrSet(i));
        }
        Ok(PathPattern {
            kind: PatternKind::Simple,
            attrs: attrs.into(),
            labels: labels.into(),
        })
    }

    pub fn reachability(a0: AttrSet, label: LabelId, a1: AttrSet) -> Result<Self, PatternError> {
        if a0.is_empty() {
            return Err(PatternError::EmptyAttrSet(0));
        }
        if a1.is_empty() {
            return Err(PatternError::EmptyAttrSet(1));
        }
        let mut labels = SmallVec::new();
        labels.push(label);
        Ok(PathPattern {
            kind: PatternKind::Reachability,
            attrs: [a0, a1].into_iter().collect(),
            labels,
        })
    }

    /// Convenience constructor for unit patterns from raw ids.
    pub fn unit(attrs: &[AttrId], labels: &[LabelId]) -> Result<Self, PatternError> {
        Self::simple(
            attrs.iter().map(|&a| AttrSet::singleton(a)).collect(),
            labels.to_vec(),
        )
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn is_reachability(&self) -> bool {
        self.kind == PatternKind::Reachability
    }

    /// Number of edge positions. Reachability patterns report 1.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn attrs(&self) -> &[AttrSet] {
        &self.attrs
    }

    pub fn labels(&self) -> &[LabelId] {
        &self.labels
    }

    pub fn source_attrs(&self) -> &AttrSet {
        &self.attrs[0]
    }

    pub fn last_attrs(&self) -> &AttrSet {
        &self.attrs[self.attrs.len() - 1]
    }

    /// Total number of attributes over all positions.
    pub fn attr_count(&self) -> usize {
        self.attrs.iter().map(AttrSet::len).sum()
    }

    /// Every attribute set is a singleton.
    pub fn is_unit(&self) -> bool {
        self.attrs.iter().all(|a| a.len() == 1)
    }

    /// Appends a step `⟨ℓ, A⟩`. Only meaningful for simple patterns.
    pub fn extend(&self, label: LabelId, attrs: AttrSet) -> PathPattern {
        debug_assert_eq!(self.kind, PatternKind::Simple);
        let mut p = self.clone();
        p.labels.push(label);
        p.attrs.push(attrs);
        p
    }

    /// The simple pattern made of the first `len` steps.
    pub fn prefix(&self, len: usize) -> PathPattern {
        debug_assert_eq!(self.kind, PatternKind::Simple);
        PathPattern {
            kind: PatternKind::Simple,
            attrs: self.attrs[..=len].iter().cloned().collect(),
            labels: self.labels[..len].iter().copied().collect(),
        }
    }

    /// Same pattern with attribute set `pos` replaced.
    pub fn with_attrs_at(&self, pos: usize, attrs: AttrSet) -> PathPattern {
        let mut p = self.clone();
        p.attrs[pos] = attrs;
        p
    }

    /// Position-wise union. Both patterns must share kind and labels.
    pub fn union(&self, other: &PathPattern) -> Option<PathPattern> {
        if self.kind != other.kind || self.labels != other.labels {
            return None;
        }
        let mut p = self.clone();
        for (mine, theirs) in p.attrs.iter_mut().zip(other.attrs.iter()) {
            *mine = mine.union(theirs);
        }
        Some(p)
    }

    /// `self` dominates `other`: `other` is no longer, labels agree
    /// position-wise and each of `other`'s attribute sets is contained in ours.
    /// Patterns of different kinds never dominate each other.
    pub fn dominates(&self, other: &PathPattern) -> bool {
        if self.kind != other.kind || other.len() > self.len() {
            return false;
        }
        other
            .labels
            .iter()
            .zip(self.labels.iter())
            .all(|(a, b)| a == b)
            && other
                .attrs
                .iter()
                .zip(self.attrs.iter())
                .all(|(theirs, mine)| theirs.is_subset_of(mine))
    }

    /// Canonical text using the graph's label and attribute names.
    pub fn display<'a>(&'a self, g: &'a PropertyGraph) -> PatternDisplay<'a> {
        PatternDisplay {
            pattern: self,
            graph: g,
        }
    }

    pub fn to_text(&self, g: &PropertyGraph) -> String {
        self.display(g).to_string()
    }

    /// Parses the canonical text form, resolving names against `g`.
    pub fn parse(text: &str, g: &PropertyGraph) -> Result<PathPattern, PatternError> {
        Parser {
            src: text,
            pos: 0,
            graph: g,
        }
        .pattern()
    }
}

impl fmt::Debug for PathPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.attrs[0])?;
        for (l, a) in self.labels.iter().zip(self.attrs[1..].iter()) {
            let star = if self.is_reachability() { "*" } else { "" };
            write!(f, "-[{l}{star}]->{a:?}")?;
        }
        Ok(())
    }
}

pub struct PatternDisplay<'a> {
    pattern: &'a PathPattern,
    graph: &'a PropertyGraph,
}

impl fmt::Display for PatternDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.graph;
        let write_set = |f: &mut fmt::Formatter<'_>, set: &AttrSet| -> fmt::Result {
            let mut names: Vec<&str> = set
                .iter()
                .map(|a| g.attr_names().name(a).unwrap_or("?"))
                .collect();
            names.sort_unstable();
            write!(f, "{{{}}}", names.join(","))
        };
        let p = self.pattern;
        write_set(f, &p.attrs[0])?;
        for (l, a) in p.labels.iter().zip(p.attrs[1..].iter()) {
            let star = if p.is_reachability() { "*" } else { "" };
            write!(f, "-[{}{star}]->", g.label_names().name(*l).unwrap_or("?"))?;
            write_set(f, a)?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    graph: &'a PropertyGraph,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), PatternError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(PatternError::parse(self.pos, format!("expected `{token}`")))
        }
    }

    /// Reads a name up to one of the delimiter characters.
    fn name(&mut self, stops: &[char]) -> Result<(usize, &'a str), PatternError> {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c| stops.contains(&c))
            .unwrap_or(self.rest().len());
        let src: &'a str = self.src;
        let name = src[start..start + len].trim();
        if name.is_empty() {
            return Err(PatternError::parse(start, "expected a name"));
        }
        self.pos += len;
        Ok((start, name))
    }

    fn attr_set(&mut self, index: usize) -> Result<AttrSet, PatternError> {
        self.expect("{")?;
        let mut ids = Vec::new();
        if !self.eat("}") {
            loop {
                let (at, name) = self.name(&[',', '}'])?;
                let id = self.graph.attr_id(name).ok_or_else(|| {
                    PatternError::parse(at, format!("unknown attribute `{name}`"))
                })?;
                ids.push(id);
                if self.eat("}") {
                    break;
                }
                self.expect(",")?;
            }
        }
        if ids.is_empty() {
            return Err(PatternError::EmptyAttrSet(index));
        }
        Ok(AttrSet::new(ids))
    }

    fn pattern(&mut self) -> Result<PathPattern, PatternError> {
        let mut attrs = vec![self.attr_set(0)?];
        let mut labels = Vec::new();
        let mut star = false;
        while self.eat("-[") {
            let (at, name) = self.name(&[']'])?;
            let (name, is_star) = match name.strip_suffix('*') {
                Some(n) => (n.trim_end(), true),
                None => (name, false),
            };
            let label = self
                .graph
                .label_id(name)
                .ok_or_else(|| PatternError::parse(at, format!("unknown label `{name}`")))?;
            if is_star && !labels.is_empty() || star {
                return Err(PatternError::parse(
                    at,
                    "a reachability pattern has exactly one `ℓ*` step",
                ));
            }
            star = is_star;
            self.expect("]->")?;
            labels.push(label);
            attrs.push(self.attr_set(attrs.len())?);
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(PatternError::parse(self.pos, "unexpected trailing input"));
        }
        if star {
            let a1 = attrs.pop().expect("two sets");
            let a0 = attrs.pop().expect("two sets");
            PathPattern::reachability(a0, labels[0], a1)
        } else {
            PathPattern::simple(attrs, labels)
        }
    }
}
