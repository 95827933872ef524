//! Approximate mining: candidate reduction and stratified vertex sampling.
//!
//! Candidate reduction scales the degree exponent of the suffix bound by
//! `ψ`, which only removes candidates. Sampling draws `⌈ρ·|h|⌉` vertices
//! from every stratum `h` (vertices with identical attribute sets) and
//! estimates supports from the sampled sources, with a normal-approximation
//! confidence interval.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{ConfigError, SampleError};
use crate::graph::{AttrId, AttrSet, PropertyGraph, VertexId};
use crate::matching::{vertex_matches, ReachBound};
pub use crate::mining::bounds::cr_suffix_bound;
use crate::mining::{pioneer, Mined, MiningConfig};
use crate::pattern::PathPattern;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleEstimate {
    pub estimate: f64,
    /// Sample variance of the 0/1 match indicators.
    pub variance: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub z: f64,
    pub rho: f64,
    /// Vertices of the related strata.
    pub population: usize,
    /// Sampled vertices of the related strata.
    pub sample_size: usize,
    /// `(stratum size, sampled)` for each related stratum.
    pub stratum_sizes: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub attrs: AttrSet,
    /// Ascending.
    pub vertices: Vec<VertexId>,
}

/// Groups vertices by exact attribute set, dropping vertices that hold none
/// of `frequent`. Strata are ordered by attribute set.
pub fn stratify(g: &PropertyGraph, frequent: &[AttrId]) -> Vec<Stratum> {
    let mut keep = vec![false; g.attr_count()];
    for &a in frequent {
        keep[a as usize] = true;
    }
    let mut groups: std::collections::BTreeMap<&AttrSet, Vec<VertexId>> = Default::default();
    for v in g.vertices() {
        if g.attrs(v).iter().any(|a| keep[a as usize]) {
            groups.entry(g.attrs(v)).or_default().push(v);
        }
    }
    groups
        .into_iter()
        .map(|(attrs, vertices)| Stratum {
            attrs: attrs.clone(),
            vertices,
        })
        .collect()
}

/// Per-stratum sample sizes for rate `rho`.
pub fn sample_size(stratum: usize, rho: f64) -> usize {
    ((rho * stratum as f64 - 1e-9).ceil().max(0.0) as usize).clamp(stratum.min(1), stratum)
}

#[derive(Clone, Debug)]
pub struct Sample {
    pub rho: f64,
    pub strata: Vec<Stratum>,
    /// Sampled vertices per stratum, ascending.
    pub chosen: Vec<Vec<VertexId>>,
    weights: Vec<f64>,
}

impl Sample {
    /// All sampled vertices, ascending.
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self.chosen.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    pub fn len(&self) -> usize {
        self.chosen.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.weight(v) > 0.0
    }

    /// Inverse inclusion probability of a sampled vertex; 0 otherwise.
    pub fn weight(&self, v: VertexId) -> f64 {
        self.weights.get(v as usize).copied().unwrap_or(0.0)
    }

    /// `(population, sampled)` of each stratum whose attribute set contains
    /// `a0`.
    pub fn related(&self, a0: &AttrSet) -> Vec<(usize, usize)> {
        self.strata
            .iter()
            .zip(&self.chosen)
            .filter(|(s, _)| a0.is_subset_of(&s.attrs))
            .map(|(s, c)| (s.vertices.len(), c.len()))
            .collect()
    }
}

/// Uniform per-stratum sampling without replacement, deterministic under
/// `seed`.
pub fn sample(strata: &[Stratum], rho: f64, seed: u64) -> Result<Sample, SampleError> {
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(SampleError::Rho(rho));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = strata
        .iter()
        .flat_map(|s| s.vertices.iter())
        .map(|&v| v as usize + 1)
        .max()
        .unwrap_or(0);
    let mut weights = vec![0.0; n];
    let mut chosen = Vec::with_capacity(strata.len());
    for s in strata {
        let size = sample_size(s.vertices.len(), rho);
        let mut picked: Vec<VertexId> = if size == s.vertices.len() {
            s.vertices.clone()
        } else {
            index::sample(&mut rng, s.vertices.len(), size)
                .into_iter()
                .map(|i| s.vertices[i])
                .collect()
        };
        picked.sort_unstable();
        let w = s.vertices.len() as f64 / size.max(1) as f64;
        for &v in &picked {
            weights[v as usize] = w;
        }
        chosen.push(picked);
    }
    Ok(Sample {
        rho,
        strata: strata.to_vec(),
        chosen,
        weights,
    })
}

/// Builds the estimate from a weighted match total, the number of matched
/// sampled vertices and the related strata.
pub(crate) fn estimate_from(
    weighted: f64,
    matched: usize,
    related: Vec<(usize, usize)>,
    z: f64,
    rho: f64,
) -> Result<SampleEstimate, SampleError> {
    let population: usize = related.iter().map(|r| r.0).sum();
    let n: usize = related.iter().map(|r| r.1).sum();
    if n == 0 {
        return Err(SampleError::EmptySample);
    }
    let mean = if population > 0 {
        weighted / population as f64
    } else {
        0.0
    };
    let m = matched as f64;
    let variance = if n > 1 {
        (m * (1.0 - mean).powi(2) + (n as f64 - m) * mean.powi(2)) / (n as f64 - 1.0)
    } else {
        0.0
    };
    let half = z * population as f64 * (variance / n as f64).sqrt();
    Ok(SampleEstimate {
        estimate: weighted,
        variance,
        ci_low: weighted - half,
        ci_high: weighted + half,
        z,
        rho,
        population,
        sample_size: n,
        stratum_sizes: related,
    })
}

/// Estimated `|𝒱(p)|` from the sampled vertices of the strata related to
/// the source set of `p`. Each matched vertex counts with its stratum's
/// inverse sampling rate, which reduces to `|𝒱_s(p)| / ρ` whenever `ρ`
/// divides every stratum evenly.
pub fn estimate_support(
    g: &PropertyGraph,
    s: &Sample,
    p: &PathPattern,
    bound: ReachBound,
    z: f64,
) -> Result<SampleEstimate, SampleError> {
    let mut weighted = 0.0;
    let mut matched = 0;
    for (stratum, chosen) in s.strata.iter().zip(&s.chosen) {
        if !p.source_attrs().is_subset_of(&stratum.attrs) {
            continue;
        }
        let w = stratum.vertices.len() as f64 / chosen.len().max(1) as f64;
        for &v in chosen {
            if vertex_matches(g, v, p, bound) {
                weighted += w;
                matched += 1;
            }
        }
    }
    estimate_from(weighted, matched, s.related(p.source_attrs()), z, s.rho)
}

/// PIONEER with candidate reduction (`ψ < 1`) and/or sampling (`ρ < 1`).
/// Patterns and rules are admitted when their estimated support reaches
/// `θ`; every rule then carries its [`SampleEstimate`] when sampling.
pub fn mine_pioneer_approx(g: &PropertyGraph, cfg: &MiningConfig) -> Result<Mined, ConfigError> {
    pioneer::run(g, cfg)
}
