//! Rules between path patterns and their quality measures.

use std::sync::Arc;

use serde::Serialize;

use crate::error::RuleError;
use crate::graph::PropertyGraph;
use crate::matching::{match_set, ReachBound};
use crate::pattern::PathPattern;

/// `p_X ⇒ p_Y`. Construction rejects identical sides and pairs where one
/// side dominates the other. Sides are shared, so cloning a rule or
/// building many rules over the same patterns does not copy them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    antecedent: Arc<PathPattern>,
    consequent: Arc<PathPattern>,
}

impl Rule {
    pub fn new(antecedent: PathPattern, consequent: PathPattern) -> Result<Self, RuleError> {
        Self::from_shared(Arc::new(antecedent), Arc::new(consequent))
    }

    pub fn from_shared(
        antecedent: Arc<PathPattern>,
        consequent: Arc<PathPattern>,
    ) -> Result<Self, RuleError> {
        if antecedent == consequent {
            return Err(RuleError::Identical);
        }
        if antecedent.dominates(&consequent) {
            return Err(RuleError::Dominated {
                dominating: "antecedent",
                dominated: "consequent",
            });
        }
        if consequent.dominates(&antecedent) {
            return Err(RuleError::Dominated {
                dominating: "consequent",
                dominated: "antecedent",
            });
        }
        Ok(Rule {
            antecedent,
            consequent,
        })
    }

    pub fn antecedent(&self) -> &PathPattern {
        &self.antecedent
    }

    pub fn consequent(&self) -> &PathPattern {
        &self.consequent
    }

    pub fn reversed(&self) -> Rule {
        Rule {
            antecedent: self.consequent.clone(),
            consequent: self.antecedent.clone(),
        }
    }
}

/// Exact counts behind the four measures. Ratios are derived on demand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RuleMeasures {
    pub asupp: usize,
    pub antecedent_matches: usize,
    pub consequent_matches: usize,
    pub vertex_count: usize,
}

impl RuleMeasures {
    pub fn from_counts(
        asupp: usize,
        antecedent_matches: usize,
        consequent_matches: usize,
        vertex_count: usize,
    ) -> Self {
        debug_assert!(asupp <= antecedent_matches.min(consequent_matches));
        RuleMeasures {
            asupp,
            antecedent_matches,
            consequent_matches,
            vertex_count,
        }
    }

    /// `ASupp / |𝒱|`.
    pub fn rsupp(&self) -> f64 {
        self.asupp as f64 / self.vertex_count as f64
    }

    /// `ASupp / |𝒱(p_X)|`.
    pub fn conf(&self) -> f64 {
        self.asupp as f64 / self.antecedent_matches as f64
    }

    /// `ASupp · |𝒱| / (|𝒱(p_X)| · |𝒱(p_Y)|)`.
    pub fn lift(&self) -> f64 {
        (self.asupp as f64 * self.vertex_count as f64)
            / (self.antecedent_matches as f64 * self.consequent_matches as f64)
    }

    /// Measures of the reversed rule.
    pub fn reversed(&self) -> Self {
        RuleMeasures {
            antecedent_matches: self.consequent_matches,
            consequent_matches: self.antecedent_matches,
            ..*self
        }
    }
}

/// Size of the intersection of two ascending vertex lists.
pub fn intersection_count(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Computes the measures of `rule` from fresh match sets.
pub fn evaluate_rule(
    g: &PropertyGraph,
    rule: &Rule,
    bound: ReachBound,
) -> Result<RuleMeasures, RuleError> {
    let x = match_set(g, rule.antecedent(), bound);
    if x.is_empty() {
        return Err(RuleError::EmptyAntecedent);
    }
    let y = match_set(g, rule.consequent(), bound);
    if y.is_empty() {
        return Err(RuleError::EmptyConsequent);
    }
    Ok(RuleMeasures::from_counts(
        intersection_count(&x, &y),
        x.len(),
        y.len(),
        g.vertex_count(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::AttrSet;

    #[test]
    fn rule_construction_rejects_dominance() {
        let p = PathPattern::unit(&[0, 1], &[0]).unwrap();
        let q = PathPattern::unit(&[0, 1, 2], &[0, 0]).unwrap();
        assert_eq!(Rule::new(p.clone(), p.clone()), Err(RuleError::Identical));
        assert!(matches!(
            Rule::new(q.clone(), p.clone()),
            Err(RuleError::Dominated {
                dominating: "antecedent",
                ..
            })
        ));
        assert!(matches!(
            Rule::new(p.clone(), q),
            Err(RuleError::Dominated {
                dominating: "consequent",
                ..
            })
        ));
        let other = PathPattern::unit(&[0, 1], &[1]).unwrap();
        assert!(Rule::new(p, other).is_ok());
    }

    #[test]
    fn full_cover_rule() {
        let m = RuleMeasures::from_counts(10, 10, 10, 10);
        assert_eq!(m.conf(), 1.0);
        assert_eq!(m.lift(), 1.0);
        assert_eq!(m.rsupp(), 1.0);
    }

    #[test]
    fn lift_is_symmetric_and_conf_identity() {
        let m = RuleMeasures::from_counts(3, 5, 7, 20);
        assert_eq!(m.lift(), m.reversed().lift());
        assert_eq!(
            (m.conf() * m.antecedent_matches as f64).round() as usize,
            m.asupp
        );
    }

    #[test]
    fn empty_sides_error() {
        let g = PropertyGraph::from_parts(
            vec![AttrSet::singleton(0), AttrSet::singleton(1)],
            vec![(0, 0, 1)],
            1,
            3,
        )
        .unwrap();
        let live = PathPattern::unit(&[0, 1], &[0]).unwrap();
        let dead = PathPattern::unit(&[2, 1], &[0]).unwrap();
        let b = ReachBound::Unbounded;
        assert_eq!(
            evaluate_rule(&g, &Rule::new(dead.clone(), live.clone()).unwrap(), b),
            Err(RuleError::EmptyAntecedent)
        );
        assert_eq!(
            evaluate_rule(&g, &Rule::new(live, dead).unwrap(), b),
            Err(RuleError::EmptyConsequent)
        );
    }

    #[test]
    fn intersections() {
        assert_eq!(intersection_count(&[1, 3, 5, 7], &[2, 3, 7, 9]), 2);
        assert_eq!(intersection_count(&[], &[1]), 0);
    }
}
