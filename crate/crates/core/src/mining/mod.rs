//! Frequent pattern and rule mining.
//!
//! [`baseline`] is the straightforward level-wise miner and serves as the
//! reference. [`pioneer`] is the pruned miner with bound-based candidate
//! reduction, vertical/horizontal candidate generation and a per-shard match
//! index; it also hosts the approximate variants (see [`crate::approx`]).

pub mod apriori;
pub mod baseline;
pub mod bounds;
pub mod candidates;
pub mod index;
pub mod pioneer;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::approx::SampleEstimate;
use crate::error::ConfigError;
use crate::graph::AttrSet;
use crate::matching::ReachBound;
use crate::measures::{Rule, RuleMeasures};
use crate::pattern::PathPattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThetaMode {
    Absolute,
    Relative,
}

/// How `ℓ*` traversals are limited.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StarMode {
    /// At most `k` hops, `k` being the maximum pattern length.
    Capped,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MiningConfig {
    pub theta: f64,
    pub theta_mode: ThetaMode,
    /// Maximum simple pattern length.
    pub k: usize,
    /// Candidate reduction factor; 1 disables it.
    pub psi: f64,
    /// Sampling rate; 1 disables sampling.
    pub rho: f64,
    pub threads: usize,
    pub seed: u64,
    /// z-value for sampling confidence intervals.
    pub z: f64,
    pub star_mode: StarMode,
}

impl Default for MiningConfig {
    fn default() -> Self {
        MiningConfig {
            theta: 2.0,
            theta_mode: ThetaMode::Absolute,
            k: 2,
            psi: 1.0,
            rho: 1.0,
            threads: 1,
            seed: 0,
            z: 1.96,
            star_mode: StarMode::Capped,
        }
    }
}

impl MiningConfig {
    pub fn absolute(theta: usize, k: usize) -> Self {
        MiningConfig {
            theta: theta as f64,
            k,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.theta.is_finite() && self.theta > 0.0) {
            return Err(ConfigError::Theta(self.theta));
        }
        if self.theta_mode == ThetaMode::Relative && self.theta > 1.0 {
            return Err(ConfigError::RelativeTheta(self.theta));
        }
        if self.k < 1 {
            return Err(ConfigError::MaxLength);
        }
        if !(0.0..=1.0).contains(&self.psi) {
            return Err(ConfigError::Psi(self.psi));
        }
        if !(self.rho > 0.0 && self.rho <= 1.0) {
            return Err(ConfigError::Rho(self.rho));
        }
        if self.threads < 1 {
            return Err(ConfigError::Threads);
        }
        if !(self.z.is_finite() && self.z > 0.0) {
            return Err(ConfigError::Z(self.z));
        }
        Ok(())
    }

    /// Absolute support threshold. Relative thresholds are scaled by `|𝒱|`
    /// once; fractional thresholds round up since supports are integers.
    pub fn effective_theta(&self, vertex_count: usize) -> usize {
        let raw = match self.theta_mode {
            ThetaMode::Absolute => self.theta,
            ThetaMode::Relative => self.theta * vertex_count as f64,
        };
        ((raw - 1e-9).ceil() as usize).max(1)
    }

    pub fn reach_bound(&self) -> ReachBound {
        match self.star_mode {
            StarMode::Capped => ReachBound::Capped(self.k),
            StarMode::Unbounded => ReachBound::Unbounded,
        }
    }

    pub fn is_approximate(&self) -> bool {
        self.psi < 1.0 || self.rho < 1.0
    }
}

/// A frequent pattern with its support (exact, or the rounded estimate
/// when mining on a vertex sample).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternSupport {
    pub pattern: PathPattern,
    pub support: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinedRule {
    pub rule: Rule,
    pub measures: RuleMeasures,
    /// Shared by the two directions of a pair.
    pub estimate: Option<Arc<SampleEstimate>>,
}

/// Everything a miner reports: frequent attribute sets, simple patterns by
/// length, reachability patterns and rules. All lists are kept in canonical
/// (sorted) order so two results compare with `==`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FrequentSets {
    pub theta: usize,
    pub attribute_sets: Vec<(AttrSet, usize)>,
    /// `simple[i]` holds the frequent patterns of length `i + 1`.
    pub simple: Vec<Vec<PatternSupport>>,
    pub reachability: Vec<PatternSupport>,
    pub rules: Vec<MinedRule>,
}

impl FrequentSets {
    pub fn canonicalize(&mut self) {
        self.attribute_sets.sort();
        for level in &mut self.simple {
            level.sort();
        }
        self.reachability.sort();
        self.rules.sort_by(|a, b| a.rule.cmp(&b.rule));
    }

    /// Frequent simple and reachability patterns of length ≥ 1.
    pub fn patterns(&self) -> impl Iterator<Item = &PatternSupport> {
        self.simple.iter().flatten().chain(self.reachability.iter())
    }

    pub fn contains_pattern(&self, p: &PathPattern) -> bool {
        self.patterns().any(|s| &s.pattern == p)
    }

    pub fn find_rule(
        &self,
        antecedent: &PathPattern,
        consequent: &PathPattern,
    ) -> Option<&MinedRule> {
        self.rules
            .iter()
            .find(|r| r.rule.antecedent() == antecedent && r.rule.consequent() == consequent)
    }

    /// Rule set without measures, for containment comparisons.
    pub fn rule_set(&self) -> std::collections::BTreeSet<Rule> {
        self.rules.iter().map(|r| r.rule.clone()).collect()
    }
}

/// Rank of each pattern in canonical pattern order.
pub(crate) fn canonical_ranks<'a>(patterns: impl Iterator<Item = &'a PathPattern>) -> Vec<u32> {
    let patterns: Vec<&PathPattern> = patterns.collect();
    let mut order: Vec<usize> = (0..patterns.len()).collect();
    order.sort_unstable_by(|&a, &b| patterns[a].cmp(patterns[b]));
    let mut rank = vec![0; patterns.len()];
    for (r, i) in order.into_iter().enumerate() {
        rank[i] = r as u32;
    }
    rank
}

/// Rules in canonical order, keyed by the ranks of their two sides.
pub(crate) fn sort_ranked(mut ranked: Vec<((u32, u32), MinedRule)>) -> Vec<MinedRule> {
    ranked.sort_unstable_by_key(|r| r.0);
    ranked.into_iter().map(|r| r.1).collect()
}

/// Candidate accounting for one mining phase. Every generated candidate is
/// pruned by anti-monotonicity, pruned by a bound, or checked against the
/// graph and found frequent or infrequent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PhaseStats {
    pub generated: u64,
    pub pruned_anti_monotone: u64,
    pub pruned_bound: u64,
    pub frequent: u64,
    pub infrequent: u64,
    pub millis: u64,
}

impl PhaseStats {
    /// Candidates whose support was actually computed.
    pub fn checked(&self) -> u64 {
        self.frequent + self.infrequent
    }

    pub fn is_consistent(&self) -> bool {
        self.generated
            == self.pruned_anti_monotone + self.pruned_bound + self.frequent + self.infrequent
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MiningStats {
    pub attributes: PhaseStats,
    pub simple: PhaseStats,
    pub reachability: PhaseStats,
    pub rules: PhaseStats,
}

impl MiningStats {
    pub fn phases(&self) -> [(&'static str, &PhaseStats); 4] {
        [
            ("attributes", &self.attributes),
            ("simple", &self.simple),
            ("reachability", &self.reachability),
            ("rules", &self.rules),
        ]
    }

    pub fn checked(&self) -> u64 {
        self.phases().iter().map(|(_, p)| p.checked()).sum()
    }
}

#[derive(Clone, Debug)]
pub struct Mined {
    pub sets: FrequentSets,
    pub stats: MiningStats,
}

pub(crate) fn elapsed_ms(start: std::time::Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relative_theta_scales_once() {
        let cfg = MiningConfig {
            theta: 0.5,
            theta_mode: ThetaMode::Relative,
            ..Default::default()
        };
        assert_eq!(cfg.effective_theta(12), 6);
        let cfg = MiningConfig {
            theta: 0.01,
            theta_mode: ThetaMode::Relative,
            ..Default::default()
        };
        assert_eq!(cfg.effective_theta(100_000), 1000);
        assert_eq!(MiningConfig::absolute(3, 1).effective_theta(10), 3);
    }

    #[test]
    fn config_validation() {
        assert!(MiningConfig::default().validate().is_ok());
        let bad = |f: fn(&mut MiningConfig)| {
            let mut c = MiningConfig::default();
            f(&mut c);
            c.validate().unwrap_err()
        };
        assert_eq!(bad(|c| c.theta = 0.0), ConfigError::Theta(0.0));
        assert_eq!(
            bad(|c| {
                c.theta_mode = ThetaMode::Relative;
                c.theta = 1.5
            }),
            ConfigError::RelativeTheta(1.5)
        );
        assert_eq!(bad(|c| c.k = 0), ConfigError::MaxLength);
        assert_eq!(bad(|c| c.psi = 1.2), ConfigError::Psi(1.2));
        assert_eq!(bad(|c| c.rho = 0.0), ConfigError::Rho(0.0));
        assert_eq!(bad(|c| c.threads = 0), ConfigError::Threads);
    }
}
