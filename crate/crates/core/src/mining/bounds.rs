//! Support upper bounds and the per-position target sets derived from them.
//!
//! For a simple pattern whose `i`-th step is `(ℓ, A)`, at most
//! `|ℰ(A, ℓ)| · d_m^(i-1)` source vertices can reach one of the `ℓ`-edges
//! into `A` along `i - 1` preceding steps, `d_m` being the maximum in-degree.
//! The same holds with `|𝒱(A, ℓ)|`, the `A`-holders with an outgoing
//! `ℓ`-edge, for the step leaving position `i - 1`. Every bound is capped at
//! `|𝒱|`.

use crate::error::GraphError;
use crate::graph::{AttrId, AttrSet, GraphIndexes, LabelId, PropertyGraph};
use crate::matching::ReachBound;

/// `count · d_m^exp`, saturating at `cap`.
pub fn power_bound(count: usize, max_in_degree: usize, exp: usize, cap: usize) -> usize {
    let mut b = count.min(cap);
    for _ in 0..exp {
        if b == 0 || b >= cap {
            break;
        }
        b = b.saturating_mul(max_in_degree).min(cap);
    }
    b.min(cap)
}

/// `count · d_m^(ψ·exp)`, capped at `cap`. `ψ = 1` takes the exact integer
/// path so that the exact and reduced bounds agree there.
pub fn reduced_bound(count: usize, max_in_degree: usize, exp: usize, psi: f64, cap: usize) -> f64 {
    if psi >= 1.0 {
        return power_bound(count, max_in_degree, exp, cap) as f64;
    }
    let b = count as f64 * (max_in_degree as f64).powf(psi * exp as f64);
    b.min(cap as f64)
}

/// Upper bound on the support of any simple pattern whose step at 1-based
/// position `i` is `(label, set)`.
pub fn suffix_bound(
    g: &PropertyGraph,
    idx: &GraphIndexes,
    set: &AttrSet,
    label: LabelId,
    i: usize,
) -> Result<usize, GraphError> {
    let e = idx.edge_set_size(g, set, label)?;
    Ok(power_bound(
        e,
        idx.max_in_degree(),
        i.saturating_sub(1),
        g.vertex_count(),
    ))
}

/// Upper bound on the support of any simple pattern whose set at 0-based
/// position `i - 1` is `set` and whose `i`-th label is `label`.
pub fn prefix_bound(
    g: &PropertyGraph,
    idx: &GraphIndexes,
    set: &AttrSet,
    label: LabelId,
    i: usize,
) -> Result<usize, GraphError> {
    let v = idx.vertex_set_size(g, set, label)?;
    Ok(power_bound(
        v,
        idx.max_in_degree(),
        i.saturating_sub(1),
        g.vertex_count(),
    ))
}

/// The suffix bound with the degree exponent scaled by `psi`.
pub fn cr_suffix_bound(
    g: &PropertyGraph,
    idx: &GraphIndexes,
    set: &AttrSet,
    label: LabelId,
    i: usize,
    psi: f64,
) -> Result<f64, GraphError> {
    let e = idx.edge_set_size(g, set, label)?;
    Ok(reduced_bound(
        e,
        idx.max_in_degree(),
        i.saturating_sub(1),
        psi,
        g.vertex_count(),
    ))
}

/// Upper bound on the support of `⟨A₀, ℓ*, A₁⟩` from the `A₁`-targets of
/// `ℓ`-edges: every matching source lies within `cap - 1` reverse hops of
/// such an edge's source.
pub fn reach_bound(
    edge_count: usize,
    max_in_degree: usize,
    bound: ReachBound,
    cap: usize,
) -> usize {
    match bound {
        ReachBound::Unbounded => {
            if edge_count > 0 {
                cap
            } else {
                0
            }
        }
        ReachBound::Capped(c) => {
            let mut total = 0usize;
            for j in 0..c {
                total = total.saturating_add(power_bound(edge_count, max_in_degree, j, cap));
                if total >= cap {
                    return cap;
                }
            }
            total
        }
    }
}

/// Single attributes and labels admissible at each position.
///
/// `attrs_at(i, ℓ)` is `𝒜_{T_i}(ℓ)`: attributes `a` whose suffix bound for
/// step `i` with label `ℓ` reaches `θ`. `labels_at(i, a)` is `ℒ_{T_i}(a)`:
/// labels whose prefix bound for `{a}` leaving position `i - 1` reaches `θ`.
#[derive(Clone, Debug)]
pub struct TargetSets {
    k: usize,
    suffix_attrs: Vec<Vec<Vec<AttrId>>>,
    prefix_labels: Vec<Vec<Vec<LabelId>>>,
    reach_attrs: Vec<Vec<AttrId>>,
}

impl TargetSets {
    /// `psi` scales the suffix bounds; prefix bounds stay exact.
    pub fn compute(
        g: &PropertyGraph,
        idx: &GraphIndexes,
        theta: usize,
        k: usize,
        psi: f64,
        star: ReachBound,
    ) -> TargetSets {
        let (na, nl, nv, dm) = (
            g.attr_count(),
            g.label_count(),
            g.vertex_count(),
            idx.max_in_degree(),
        );
        let mut suffix_attrs = vec![vec![Vec::new(); nl]; k];
        let mut prefix_labels = vec![vec![Vec::new(); na]; k];
        let mut reach_attrs = vec![Vec::new(); nl];
        for a in 0..na as AttrId {
            for l in 0..nl as LabelId {
                let e = idx.edge_count(a, l);
                let v = idx.vertex_count(a, l);
                if e == 0 && v == 0 {
                    continue;
                }
                for i in 1..=k {
                    if reduced_bound(e, dm, i - 1, psi, nv) >= theta as f64 {
                        suffix_attrs[i - 1][l as usize].push(a);
                    }
                    if power_bound(v, dm, i - 1, nv) >= theta {
                        prefix_labels[i - 1][a as usize].push(l);
                    }
                }
                if reach_bound(e, dm, star, nv) >= theta {
                    reach_attrs[l as usize].push(a);
                }
            }
        }
        TargetSets {
            k,
            suffix_attrs,
            prefix_labels,
            reach_attrs,
        }
    }

    pub fn max_length(&self) -> usize {
        self.k
    }

    /// `𝒜_{T_i}(ℓ)` for 1-based `i`.
    pub fn attrs_at(&self, i: usize, label: LabelId) -> &[AttrId] {
        &self.suffix_attrs[i - 1][label as usize]
    }

    /// `ℒ_{T_i}(a)` for 1-based `i`.
    pub fn labels_at(&self, i: usize, a: AttrId) -> &[LabelId] {
        &self.prefix_labels[i - 1][a as usize]
    }

    pub fn label_allowed(&self, i: usize, a: AttrId, label: LabelId) -> bool {
        self.labels_at(i, a).binary_search(&label).is_ok()
    }

    /// Candidate `A₁` attributes of reachability patterns over `label`.
    pub fn reach_attrs(&self, label: LabelId) -> &[AttrId] {
        &self.reach_attrs[label as usize]
    }

    /// Every attribute admissible at some position after the source.
    pub fn attr_union(&self) -> Vec<AttrId> {
        let mut out: Vec<AttrId> = self
            .suffix_attrs
            .iter()
            .flatten()
            .flatten()
            .chain(self.reach_attrs.iter().flatten())
            .copied()
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Every label admissible at some position.
    pub fn label_union(&self) -> Vec<LabelId> {
        let mut out: Vec<LabelId> = self
            .prefix_labels
            .iter()
            .flatten()
            .flatten()
            .copied()
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_bound_saturates() {
        assert_eq!(power_bound(3, 2, 0, 100), 3);
        assert_eq!(power_bound(3, 2, 2, 100), 12);
        assert_eq!(power_bound(3, 2, 10, 100), 100);
        assert_eq!(power_bound(usize::MAX, usize::MAX, 3, 50), 50);
        assert_eq!(power_bound(0, 9, 3, 50), 0);
    }

    #[test]
    fn reduced_bound_matches_exact_at_one() {
        for &(c, d, e) in &[(3usize, 2usize, 2usize), (5, 7, 1), (1, 1, 4)] {
            assert_eq!(
                reduced_bound(c, d, e, 1.0, 1000),
                power_bound(c, d, e, 1000) as f64
            );
            assert!(reduced_bound(c, d, e, 0.5, 1000) <= reduced_bound(c, d, e, 1.0, 1000));
        }
    }

    #[test]
    fn reach_bound_sums_lengths() {
        assert_eq!(reach_bound(2, 3, ReachBound::Capped(1), 100), 2);
        assert_eq!(reach_bound(2, 3, ReachBound::Capped(2), 100), 8);
        assert_eq!(reach_bound(2, 3, ReachBound::Capped(3), 100), 26);
        assert_eq!(reach_bound(0, 3, ReachBound::Unbounded, 100), 0);
        assert_eq!(reach_bound(1, 3, ReachBound::Unbounded, 100), 100);
    }

    #[test]
    fn target_sets_on_star() {
        // Leaves 1..=4 hold attribute 0 and point at hub 0 holding attribute 1.
        let mut attrs = vec![AttrSet::singleton(1)];
        attrs.extend(std::iter::repeat_n(AttrSet::singleton(0), 4));
        let edges = (1..=4).map(|v| (v, 0, 0)).collect();
        let g = PropertyGraph::from_parts(attrs, edges, 1, 2).unwrap();
        let idx = GraphIndexes::build(&g);
        let t = TargetSets::compute(&g, &idx, 3, 2, 1.0, ReachBound::Capped(2));
        assert_eq!(t.attrs_at(1, 0), &[1]);
        assert_eq!(t.labels_at(1, 0), &[0]);
        assert!(t.labels_at(1, 1).is_empty());
        assert_eq!(t.reach_attrs(0), &[1]);
        assert_eq!(
            suffix_bound(&g, &idx, &AttrSet::singleton(1), 0, 1).unwrap(),
            4
        );
        assert_eq!(
            suffix_bound(&g, &idx, &AttrSet::singleton(1), 0, 2).unwrap(),
            5
        );
        assert_eq!(
            prefix_bound(&g, &idx, &AttrSet::singleton(0), 0, 1).unwrap(),
            4
        );
        assert!(suffix_bound(&g, &idx, &AttrSet::empty(), 0, 1).is_err());
        assert!(prefix_bound(&g, &idx, &AttrSet::singleton(0), 7, 1).is_err());
    }
}
