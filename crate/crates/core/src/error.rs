use thiserror::Error;

use crate::graph::LabelId;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{file}:{line}: {reason}")]
    Malformed {
        file: String,
        line: usize,
        reason: String,
    },
    #[error("edge file line {line}: unknown vertex `{vertex}`")]
    DanglingEdge { line: usize, vertex: String },
    #[error("vertex file line {line}: duplicate vertex `{vertex}`")]
    DuplicateVertex { line: usize, vertex: String },
    #[error("unknown edge label id {0}")]
    UnknownLabel(LabelId),
    #[error("attribute set must not be empty")]
    EmptyAttrSet,
    #[error("invalid graph: {0}")]
    Invalid(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("attribute set at position {0} is empty")]
    EmptyAttrSet(usize),
    #[error("a simple pattern with {attrs} attribute sets needs {} labels, got {labels}", attrs.saturating_sub(1))]
    Shape { attrs: usize, labels: usize },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

impl PatternError {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        PatternError::Parse {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RuleError {
    #[error("antecedent matches no vertex")]
    EmptyAntecedent,
    #[error("consequent matches no vertex")]
    EmptyConsequent,
    #[error("antecedent and consequent are identical")]
    Identical,
    #[error("the {dominating} dominates the {dominated}; such rules are excluded")]
    Dominated {
        dominating: &'static str,
        dominated: &'static str,
    },
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("theta must be positive, got {0}")]
    Theta(f64),
    #[error("relative theta must lie in (0, 1], got {0}")]
    RelativeTheta(f64),
    #[error("k must be at least 1")]
    MaxLength,
    #[error("psi must lie in [0, 1], got {0}")]
    Psi(f64),
    #[error("rho must lie in (0, 1], got {0}")]
    Rho(f64),
    #[error("thread count must be at least 1")]
    Threads,
    #[error("z must be positive and finite, got {0}")]
    Z(f64),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("pattern id {0} is not in the match index")]
    UnknownPattern(usize),
}

#[derive(Debug, Error, PartialEq)]
pub enum SampleError {
    #[error("sampling rate must lie in (0, 1], got {0}")]
    Rho(f64),
    #[error("candidate reduction factor must lie in [0, 1], got {0}")]
    Psi(f64),
    #[error("sample contains no vertex related to the pattern")]
    EmptySample,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("{edges} distinct edges requested but only {capacity} (source, label, target) triples exist")]
    Infeasible { edges: usize, capacity: u128 },
    #[error("invalid generator spec: {0}")]
    Spec(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("thread count must be at least 1")]
pub struct PartitionError;
