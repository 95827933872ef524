//! Path association rule mining on property graphs.
//!
//! A path pattern constrains a walk by edge labels and by attribute sets on
//! the visited vertices; a rule `p_X ⇒ p_Y` relates two patterns through the
//! source vertices matching both. The crate loads graphs from TSV files,
//! mines frequent patterns and rules exactly ([`mining::baseline`],
//! [`mining::pioneer`]) or approximately ([`approx`]), and generates
//! synthetic graphs ([`synthgen`]).

pub mod approx;
pub mod cli;
pub mod error;
pub mod graph;
pub mod matching;
pub mod measures;
pub mod mining;
pub mod parallel;
pub mod pattern;
pub mod report;
pub mod synthgen;

pub use error::{
    ConfigError, GenError, GraphError, IndexError, PartitionError, PatternError, RuleError,
    SampleError,
};
pub use graph::{
    load_graph, save_graph, AttrId, AttrSet, GraphIndexes, LabelId, PropertyGraph, VertexId,
};
pub use matching::{match_set, vertex_matches, ReachBound};
pub use measures::{evaluate_rule, Rule, RuleMeasures};
pub use mining::baseline::mine_baseline;
pub use mining::pioneer::mine_pioneer;
pub use mining::{FrequentSets, Mined, MinedRule, MiningConfig, MiningStats, StarMode, ThetaMode};
pub use pattern::{PathPattern, PatternKind};
