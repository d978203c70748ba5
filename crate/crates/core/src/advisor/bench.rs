use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::chordal::{associated_graph, elimination_game, fill_metric, tree_of_ordering, verify_peo, ElimTree, Ordering, VarGraph};
use crate::complexity::{cell_bound_tree, combined_degree, md_witness, CellBoundInput, MDPair};
use crate::poly::{PolySet, Var, VarTable};
use crate::projection::{proj_count, projection_procedure, Operator};

use super::AdvisorError;

/// One ordering's projection cost and structural figures.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub ordering: Ordering,
    /// Whether the ordering is a PEO of the associated graph itself.
    pub is_peo: bool,
    pub proj_count: Option<usize>,
    pub level_counts: Vec<usize>,
    pub tree_height: Option<usize>,
    pub fill_d: Ratio<u64>,
    pub predicted_cell_bound: Option<BigUint>,
    pub wall_time: Duration,
    pub error: Option<String>,
}

/// `(m, d)` for each `A_l`: the members whose largest variable is `x_l`.
/// Variables owning no member get `(1, 1)`.
pub(crate) fn per_variable_pairs(a: &PolySet, o: &Ordering) -> BTreeMap<Var, MDPair> {
    let pos = o.positions();
    let mut parts: BTreeMap<Var, PolySet> = o.ranked().iter().map(|&v| (v, PolySet::new())).collect();
    for f in a {
        if let Some(top) = f.vars().into_iter().min_by_key(|v| pos[v]) {
            parts.get_mut(&top).expect("ordering covers the set").insert(f.clone());
        }
    }
    parts
        .into_iter()
        .map(|(v, part)| {
            let pair = match combined_degree(&part) {
                Ok(d) => md_witness(&part, d).expect("every member fits the combined degree of its set"),
                Err(_) => MDPair::new(1, 1).unwrap(),
            };
            (v, pair)
        })
        .collect()
}

/// The associated graph of `a`, with `extra` variables as isolated vertices.
pub(crate) fn graph_with(a: &PolySet, extra: &[Var]) -> VarGraph {
    let mut g = associated_graph(a);
    for &v in extra {
        g.add_vertex(v);
    }
    g
}

/// The elimination-game completion of `g` under `o`, its tree, and `d`.
pub(crate) fn completion_figures(g: &VarGraph, o: &Ordering) -> (VarGraph, ElimTree, Ratio<u64>) {
    let h = elimination_game(g, o).expect("ordering covers the graph").graph;
    let tree = tree_of_ordering(&h, o);
    let d = fill_metric(g, &h).unwrap_or_else(|_| Ratio::from_integer(0));
    (h, tree, d)
}

/// Projects `a` under `o` and collects the row figures. The ordering must rank
/// every variable of `a`; variables it ranks beyond those count as isolated.
pub fn evaluate_ordering(a: &PolySet, o: &Ordering, op: Operator) -> Result<BenchRow, AdvisorError> {
    let g = graph_with(a, o.ranked());
    let start = Instant::now();
    let is_peo = verify_peo(&g, o)?;
    let (_, tree, fill_d) = completion_figures(&g, o);
    let trace = projection_procedure(a, o, op)?;
    let input = CellBoundInput {
        pairs: per_variable_pairs(a, o),
        tree: tree.clone(),
    };
    let bound = cell_bound_tree(&input)?;
    Ok(BenchRow {
        ordering: o.clone(),
        is_peo,
        proj_count: Some(proj_count(&trace)),
        level_counts: trace.counts.clone(),
        tree_height: Some(tree.height()),
        fill_d,
        predicted_cell_bound: Some(bound),
        wall_time: start.elapsed(),
        error: None,
    })
}

/// One row per ordering, evaluated in parallel and returned in input order.
/// Rows whose evaluation fails carry the error and no counts.
pub fn compare_orderings(a: &PolySet, orderings: &[Ordering], op: Operator) -> Vec<BenchRow> {
    orderings
        .par_iter()
        .map(|o| {
            evaluate_ordering(a, o, op).unwrap_or_else(|e| BenchRow {
                ordering: o.clone(),
                is_peo: false,
                proj_count: None,
                level_counts: Vec::new(),
                tree_height: None,
                fill_d: Ratio::from_integer(0),
                predicted_cell_bound: None,
                wall_time: Duration::ZERO,
                error: Some(e.to_string()),
            })
        })
        .collect()
}

/// Aligned plain-text table of rows. With `timings` a wall-time column is added.
pub fn render_rows(rows: &[BenchRow], table: &VarTable, timings: bool) -> String {
    let mut header = vec!["ordering", "PEO", "#proj", "height", "d", "cell bound (digits)"];
    if timings {
        header.push("time");
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut cells = vec![
                r.ordering.display(table),
                if r.is_peo { "yes" } else { "no" }.to_string(),
                r.proj_count.map_or_else(|| "failed".to_string(), |c| c.to_string()),
                r.tree_height.map_or_else(|| "-".to_string(), |h| h.to_string()),
                format!("{:.2}", *r.fill_d.numer() as f64 / (*r.fill_d.denom()).max(1) as f64),
                r.predicted_cell_bound
                    .as_ref()
                    .map_or_else(|| "-".to_string(), |b| b.to_string().len().to_string()),
            ];
            if timings {
                cells.push(format!("{:.3}s", r.wall_time.as_secs_f64()));
            }
            cells
        })
        .collect();
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &body {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let line = |cells: &[String], out: &mut String| {
        let parts: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&header.iter().map(|s| s.to_string()).collect::<Vec<_>>(), &mut out);
    for row in &body {
        line(row, &mut out);
    }
    out
}
