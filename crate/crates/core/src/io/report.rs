//! Versioned JSON reports. Integers that can outgrow 64 bits (growth table
//! entries, cell bounds) are written as decimal strings.

use num_rational::Ratio;
use serde::Serialize;

use crate::advisor::{Analysis, BenchRow};
use crate::complexity::{GrowthTable, MDPair};
use crate::poly::{PolySet, Var, VarTable};
use crate::projection::Operator;

pub const SCHEMA_VERSION: &str = "chordcad-report/1";

/// JSON schema describing both report kinds.
pub const SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Clone, Debug, Serialize)]
pub struct InputSummary {
    pub variables: Vec<String>,
    pub polynomial_count: usize,
    pub combined_degree: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomials: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChordalitySummary {
    pub chordal: bool,
    pub chordless_cycle: Option<Vec<String>>,
    pub fill_edges: Vec<[String; 2]>,
    pub fill_d: String,
    pub fill_d_value: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderingSummary {
    pub text: String,
    pub strategy: String,
    pub is_peo: bool,
    pub candidates: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceSummary {
    pub operator: Operator,
    pub level_counts: Vec<usize>,
    pub proj_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeSummary {
    pub height: usize,
    pub max_children: usize,
    /// `[child, parent]` pairs.
    pub arcs: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairSummary {
    pub m: String,
    pub d: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowSummary {
    pub index: usize,
    pub number: String,
    pub degree: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsSummary {
    pub global_pair: PairSummary,
    pub general_table: Vec<RowSummary>,
    pub tree_table: Vec<RowSummary>,
    pub cell_bound_general: String,
    pub cell_bound_tree: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TimingSummary {
    pub ordering_ms: f64,
    pub projection_ms: f64,
    pub bounds_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub input: InputSummary,
    pub chordality: ChordalitySummary,
    pub ordering: OrderingSummary,
    pub trace: TraceSummary,
    pub tree: TreeSummary,
    pub bounds: BoundsSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<TimingSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareRow {
    pub ordering: String,
    pub is_peo: bool,
    pub proj_count: Option<usize>,
    pub level_counts: Vec<usize>,
    pub tree_height: Option<usize>,
    pub fill_d: String,
    pub fill_d_value: f64,
    pub predicted_cell_bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub input: InputSummary,
    pub operator: Operator,
    pub rows: Vec<CompareRow>,
}

/// What optional content a report carries.
#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    pub show_polys: bool,
    pub timings: bool,
}

fn ratio_text(r: &Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn ratio_value(r: &Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn ms(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1000.0
}

fn names(vs: &[Var], t: &VarTable) -> Vec<String> {
    vs.iter().map(|&v| t.name(v).to_string()).collect()
}

fn pair_names(es: &[(Var, Var)], t: &VarTable) -> Vec<[String; 2]> {
    es.iter().map(|&(a, b)| [t.name(a).to_string(), t.name(b).to_string()]).collect()
}

fn rows(table: &GrowthTable) -> Vec<RowSummary> {
    table
        .rows
        .iter()
        .map(|r| RowSummary {
            index: r.index,
            number: r.number.to_string(),
            degree: r.degree.to_string(),
        })
        .collect()
}

fn pair(p: &MDPair) -> PairSummary {
    PairSummary {
        m: p.m.to_string(),
        d: p.d.to_string(),
    }
}

/// Input summary; `combined_degree` is 0 for an empty set.
pub fn input_summary(f: &PolySet, table: &VarTable, show_polys: bool) -> InputSummary {
    InputSummary {
        variables: names(&f.vars(), table),
        polynomial_count: f.len(),
        combined_degree: crate::complexity::combined_degree(f).unwrap_or(0),
        polynomials: show_polys.then(|| f.to_strings(table)),
    }
}

pub fn analysis_report(f: &PolySet, a: &Analysis, table: &VarTable, opts: ReportOptions) -> AnalysisReport {
    let why = &a.rationale;
    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        command: "analyze",
        input: input_summary(f, table, opts.show_polys),
        chordality: ChordalitySummary {
            chordal: why.chordal,
            chordless_cycle: why.cycle.as_ref().map(|c| names(c, table)),
            fill_edges: pair_names(&why.fill_edges, table),
            fill_d: ratio_text(&why.fill_d),
            fill_d_value: ratio_value(&why.fill_d),
        },
        ordering: OrderingSummary {
            text: a.ordering.display(table),
            strategy: why.strategy.clone(),
            is_peo: why.is_peo,
            candidates: why.candidates,
        },
        trace: TraceSummary {
            operator: a.trace.operator,
            level_counts: a.trace.counts.clone(),
            proj_count: crate::projection::proj_count(&a.trace),
            levels: opts
                .show_polys
                .then(|| a.trace.levels.iter().map(|l| l.to_strings(table)).collect()),
        },
        tree: TreeSummary {
            height: a.tree.height(),
            max_children: a.tree.max_children(),
            arcs: pair_names(&a.tree.arcs(), table),
        },
        bounds: BoundsSummary {
            global_pair: pair(&a.global_pair),
            general_table: rows(&a.general_table),
            tree_table: rows(&a.tree_table),
            cell_bound_general: a.cell_bound_general.to_string(),
            cell_bound_tree: a.cell_bound_tree.to_string(),
        },
        timings: opts.timings.then(|| TimingSummary {
            ordering_ms: ms(a.timings.ordering),
            projection_ms: ms(a.timings.projection),
            bounds_ms: ms(a.timings.bounds),
        }),
    }
}

pub fn compare_report(
    f: &PolySet,
    bench: &[BenchRow],
    op: Operator,
    table: &VarTable,
    opts: ReportOptions,
) -> CompareReport {
    CompareReport {
        schema_version: SCHEMA_VERSION,
        command: "compare",
        input: input_summary(f, table, opts.show_polys),
        operator: op,
        rows: bench
            .iter()
            .map(|r| CompareRow {
                ordering: r.ordering.display(table),
                is_peo: r.is_peo,
                proj_count: r.proj_count,
                level_counts: r.level_counts.clone(),
                tree_height: r.tree_height,
                fill_d: ratio_text(&r.fill_d),
                fill_d_value: ratio_value(&r.fill_d),
                predicted_cell_bound: r.predicted_cell_bound.as_ref().map(|b| b.to_string()),
                wall_time_ms: opts.timings.then(|| ms(r.wall_time)),
                error: r.error.clone(),
            })
            .collect(),
    }
}

/// Plain-text rendering of an analysis.
pub fn render_analysis(r: &AnalysisReport) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "variables: {} ({})", r.input.variables.len(), r.input.variables.join(" "));
    let _ = writeln!(out, "polynomials: {}", r.input.polynomial_count);
    let _ = writeln!(out, "combined degree: {}", r.input.combined_degree);
    let c = &r.chordality;
    match &c.chordless_cycle {
        None => {
            let _ = writeln!(out, "chordal: yes");
        }
        Some(cycle) => {
            let _ = writeln!(out, "chordal: no (chordless cycle {})", cycle.join(" - "));
        }
    }
    if !c.fill_edges.is_empty() {
        let edges: Vec<String> = c.fill_edges.iter().map(|[a, b]| format!("{a}-{b}")).collect();
        let _ = writeln!(out, "fill edges: {}", edges.join(" "));
    }
    let _ = writeln!(out, "fill d: {} ({:.3})", c.fill_d, c.fill_d_value);
    let o = &r.ordering;
    let _ = writeln!(out, "ordering: {} [{}{}]", o.text, o.strategy, if o.is_peo { ", PEO" } else { "" });
    if o.candidates > 1 {
        let _ = writeln!(out, "candidates examined: {}", o.candidates);
    }
    let _ = writeln!(out, "operator: {}", r.trace.operator);
    let counts: Vec<String> = r.trace.level_counts.iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "level sizes: {}", counts.join(" "));
    let _ = writeln!(out, "#proj: {}", r.trace.proj_count);
    if let Some(levels) = &r.trace.levels {
        for (k, l) in levels.iter().enumerate() {
            let _ = writeln!(out, "  level {k}: {{{}}}", l.join(", "));
        }
    }
    let _ = writeln!(out, "tree height: {} (max children {})", r.tree.height, r.tree.max_children);
    let b = &r.bounds;
    let _ = writeln!(out, "global (m, d): ({}, {})", b.global_pair.m, b.global_pair.d);
    let _ = writeln!(out, "cell bound, general: {}", b.cell_bound_general);
    let _ = writeln!(out, "cell bound, tree:    {}", b.cell_bound_tree);
    if let Some(t) = &r.timings {
        let _ = writeln!(
            out,
            "time: ordering {:.3} ms, projection {:.3} ms, bounds {:.3} ms",
            t.ordering_ms, t.projection_ms, t.bounds_ms
        );
    }
    out
}
