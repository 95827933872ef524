//! Rule files and run reports.

use std::io::{self, Write};

use serde::Serialize;

use crate::graph::PropertyGraph;
use crate::mining::{FrequentSets, MinedRule, MiningConfig, MiningStats};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleFormat {
    Tsv,
    Json,
}

struct Row<'a> {
    antecedent: String,
    consequent: String,
    rule: &'a MinedRule,
}

/// Rules ordered by decreasing absolute support, then by canonical text.
fn rows<'a>(g: &PropertyGraph, rules: &'a [MinedRule]) -> Vec<Row<'a>> {
    let mut rows: Vec<Row> = rules
        .iter()
        .map(|r| Row {
            antecedent: r.rule.antecedent().to_text(g),
            consequent: r.rule.consequent().to_text(g),
            rule: r,
        })
        .collect();
    rows.sort_by(|a, b| {
        b.rule
            .measures
            .asupp
            .cmp(&a.rule.measures.asupp)
            .then_with(|| a.antecedent.cmp(&b.antecedent))
            .then_with(|| a.consequent.cmp(&b.consequent))
    });
    rows
}

#[derive(Serialize)]
struct JsonRule<'a> {
    antecedent: &'a str,
    consequent: &'a str,
    asupp: usize,
    rsupp: f64,
    conf: f64,
    lift: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    est: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ci_low: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ci_high: Option<f64>,
}

/// Writes the rules as TSV with a header row, or as JSON lines. Estimate
/// columns appear when any rule carries a sampling estimate.
pub fn write_rules<W: Write + ?Sized>(
    out: &mut W,
    g: &PropertyGraph,
    rules: &[MinedRule],
    format: RuleFormat,
) -> io::Result<()> {
    let estimated = rules.iter().any(|r| r.estimate.is_some());
    let rows = rows(g, rules);
    match format {
        RuleFormat::Tsv => {
            write!(out, "antecedent\tconsequent\tasupp\trsupp\tconf\tlift")?;
            if estimated {
                write!(out, "\test\tci_low\tci_high")?;
            }
            writeln!(out)?;
            for row in &rows {
                let m = &row.rule.measures;
                write!(
                    out,
                    "{}\t{}\t{}\t{:?}\t{:?}\t{:?}",
                    row.antecedent,
                    row.consequent,
                    m.asupp,
                    m.rsupp(),
                    m.conf(),
                    m.lift()
                )?;
                if let Some(e) = &row.rule.estimate {
                    write!(out, "\t{:?}\t{:?}\t{:?}", e.estimate, e.ci_low, e.ci_high)?;
                } else if estimated {
                    write!(out, "\t\t\t")?;
                }
                writeln!(out)?;
            }
        }
        RuleFormat::Json => {
            for row in &rows {
                let m = &row.rule.measures;
                let e = row.rule.estimate.as_ref();
                let json = JsonRule {
                    antecedent: &row.antecedent,
                    consequent: &row.consequent,
                    asupp: m.asupp,
                    rsupp: m.rsupp(),
                    conf: m.conf(),
                    lift: m.lift(),
                    est: e.map(|e| e.estimate),
                    ci_low: e.map(|e| e.ci_low),
                    ci_high: e.map(|e| e.ci_high),
                };
                serde_json::to_writer(&mut *out, &json)?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

/// Summary of one mining run. `millis` fields and `peak_memory_kb` vary
/// between runs; everything else is determined by the inputs.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub algo: String,
    pub config: MiningConfig,
    pub effective_theta: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub phases: MiningStats,
    pub attribute_sets: usize,
    pub simple_patterns: usize,
    pub reachability_patterns: usize,
    pub rule_count: usize,
    pub millis: u64,
    pub peak_memory_kb: Option<u64>,
}

impl RunReport {
    pub fn new(
        algo: &str,
        cfg: &MiningConfig,
        g: &PropertyGraph,
        sets: &FrequentSets,
        stats: MiningStats,
        millis: u64,
    ) -> Self {
        RunReport {
            algo: algo.to_owned(),
            config: cfg.clone(),
            effective_theta: sets.theta,
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            phases: stats,
            attribute_sets: sets.attribute_sets.len(),
            simple_patterns: sets.simple.iter().map(Vec::len).sum(),
            reachability_patterns: sets.reachability.len(),
            rule_count: sets.rules.len(),
            millis,
            peak_memory_kb: peak_memory_kb(),
        }
    }

    pub fn counters_consistent(&self) -> bool {
        self.phases.phases().iter().all(|(_, p)| p.is_consistent())
    }
}

/// Resident-set high-water mark, where the platform reports it.
pub fn peak_memory_kb() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}
