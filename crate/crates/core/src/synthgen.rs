//! Synthetic property graphs with uniform or exponentially skewed targets.

use std::collections::HashSet;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use serde::{Deserialize, Serialize};

use crate::error::GenError;
use crate::graph::{AttrId, AttrSet, LabelId, PropertyGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeDistribution {
    Uniform,
    /// Target rank `r` drawn with probability `∝ exp(-λ·r/n)` over a
    /// seeded permutation of the vertices.
    Exponential {
        lambda: f64,
    },
}

impl EdgeDistribution {
    pub const DEFAULT_LAMBDA: f64 = 5.0;

    pub fn exponential() -> Self {
        EdgeDistribution::Exponential {
            lambda: Self::DEFAULT_LAMBDA,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub distribution: EdgeDistribution,
    pub n_labels: usize,
    pub n_attrs: usize,
    pub avg_attrs_per_vertex: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn uniform(n_vertices: usize, n_edges: usize, seed: u64) -> Self {
        GenSpec {
            n_vertices,
            n_edges,
            distribution: EdgeDistribution::Uniform,
            n_labels: 4,
            n_attrs: 10,
            avg_attrs_per_vertex: 2.0,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.n_vertices == 0 && self.n_edges > 0 {
            return Err(GenError::Spec("edges need at least one vertex".into()));
        }
        if self.n_labels == 0 && self.n_edges > 0 {
            return Err(GenError::Spec("edges need at least one label".into()));
        }
        if !(self.avg_attrs_per_vertex >= 0.0 && self.avg_attrs_per_vertex <= self.n_attrs as f64) {
            return Err(GenError::Spec(format!(
                "average attribute count {} must lie in [0, {}]",
                self.avg_attrs_per_vertex, self.n_attrs
            )));
        }
        if let EdgeDistribution::Exponential { lambda } = self.distribution {
            if !(lambda.is_finite() && lambda > 0.0) {
                return Err(GenError::Spec(format!(
                    "lambda must be positive, got {lambda}"
                )));
            }
        }
        let capacity = (self.n_vertices as u128).pow(2) * self.n_labels as u128;
        if self.n_edges as u128 > capacity {
            return Err(GenError::Infeasible {
                edges: self.n_edges,
                capacity,
            });
        }
        Ok(())
    }
}

/// Draws target ranks from the truncated exponential on `[0, n)` by
/// inverting its CDF.
struct RankSampler {
    n: f64,
    lambda: f64,
    mass: f64,
}

impl RankSampler {
    fn new(n: usize, lambda: f64) -> Self {
        RankSampler {
            n: n as f64,
            lambda,
            mass: 1.0 - (-lambda).exp(),
        }
    }

    fn draw<R: Rng>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.random();
        let x = -(1.0 - u * self.mass).ln() / self.lambda;
        ((x * self.n) as usize).min(self.n as usize - 1)
    }
}

/// Builds a graph with exactly `n_edges` distinct `(source, label, target)`
/// triples; self-loops are allowed. Identical specs give identical graphs.
pub fn generate(spec: &GenSpec) -> Result<PropertyGraph, GenError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n_vertices;

    let attrs: Vec<AttrSet> = if spec.n_attrs == 0 || spec.avg_attrs_per_vertex == 0.0 {
        vec![AttrSet::empty(); n]
    } else {
        let poisson =
            Poisson::new(spec.avg_attrs_per_vertex).map_err(|e| GenError::Spec(e.to_string()))?;
        (0..n)
            .map(|_| {
                let count = (poisson.sample(&mut rng) as usize).min(spec.n_attrs);
                index::sample(&mut rng, spec.n_attrs, count)
                    .into_iter()
                    .map(|a| a as AttrId)
                    .collect()
            })
            .collect()
    };

    let ranks = match spec.distribution {
        EdgeDistribution::Uniform => None,
        EdgeDistribution::Exponential { lambda } => {
            let mut order: Vec<VertexId> = (0..n as VertexId).collect();
            order.shuffle(&mut rng);
            Some((order, RankSampler::new(n, lambda)))
        }
    };
    let mut seen: HashSet<(VertexId, LabelId, VertexId)> = HashSet::with_capacity(spec.n_edges);
    let mut edges = Vec::with_capacity(spec.n_edges);
    while edges.len() < spec.n_edges {
        let s = rng.random_range(0..n) as VertexId;
        let l = rng.random_range(0..spec.n_labels) as LabelId;
        let t = match &ranks {
            None => rng.random_range(0..n) as VertexId,
            Some((order, sampler)) => order[sampler.draw(&mut rng)],
        };
        if seen.insert((s, l, t)) {
            edges.push((s, l, t));
        }
    }
    PropertyGraph::from_parts(attrs, edges, spec.n_labels, spec.n_attrs)
        .map_err(|e| GenError::Spec(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_edge_count_and_determinism() {
        let spec = GenSpec::uniform(100, 500, 7);
        let a = generate(&spec).unwrap();
        assert_eq!(a.vertex_count(), 100);
        assert_eq!(a.edge_count(), 500);
        let b = generate(&spec).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        let c = generate(&GenSpec { seed: 8, ..spec }).unwrap();
        assert_ne!(a.edges().collect::<Vec<_>>(), c.edges().collect::<Vec<_>>());
    }

    #[test]
    fn infeasible_specs() {
        let spec = GenSpec {
            n_labels: 1,
            ..GenSpec::uniform(3, 10, 0)
        };
        assert_eq!(
            generate(&spec).unwrap_err(),
            GenError::Infeasible {
                edges: 10,
                capacity: 9
            }
        );
        let full = GenSpec {
            n_labels: 1,
            ..GenSpec::uniform(3, 9, 0)
        };
        assert_eq!(generate(&full).unwrap().edge_count(), 9);
        let bad = GenSpec {
            avg_attrs_per_vertex: 11.0,
            ..GenSpec::uniform(3, 1, 0)
        };
        assert!(matches!(generate(&bad), Err(GenError::Spec(_))));
    }

    #[test]
    fn attribute_mean_tracks_spec() {
        let spec = GenSpec::uniform(5000, 0, 3);
        let g = generate(&spec).unwrap();
        let mean = g.vertices().map(|v| g.attrs(v).len()).sum::<usize>() as f64 / 5000.0;
        assert!((mean - 2.0).abs() < 0.1, "mean {mean}");
    }

    #[test]
    fn rank_sampler_stays_in_range() {
        let s = RankSampler::new(10, 5.0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut counts = [0usize; 10];
        for _ in 0..10_000 {
            counts[s.draw(&mut rng)] += 1;
        }
        assert!(counts[0] > counts[9] * 10);
    }
}
