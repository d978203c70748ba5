use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::chordal::{tree_of_ordering, ElimTree, Ordering};
use crate::complexity::{
    cell_bound_general, cell_bound_tree, combined_degree, growth_table_general, growth_table_tree, md_witness,
    CellBoundInput, GrowthTable, MDPair,
};
use crate::poly::PolySet;
use crate::projection::{projection_procedure, Operator, ProjectionTrace};

use super::bench::per_variable_pairs;
use super::strategy::{suggest_ordering, Rationale, Strategy};
use super::AdvisorError;

/// Everything the full pipeline produces for one system.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub ordering: Ordering,
    pub rationale: Rationale,
    pub trace: ProjectionTrace,
    /// Elimination tree of the chordal structure under the chosen ordering.
    pub tree: ElimTree,
    pub combined_degree: u32,
    /// `(m, d)` for the whole input, `d` being the largest member degree.
    pub global_pair: MDPair,
    pub general_table: GrowthTable,
    pub tree_table: GrowthTable,
    pub cell_bound_general: BigUint,
    pub cell_bound_tree: BigUint,
    pub timings: Timings,
}

#[derive(Clone, Debug, Default)]
pub struct Timings {
    pub ordering: Duration,
    pub projection: Duration,
    pub bounds: Duration,
}

/// Chooses an ordering, projects along it and evaluates both cell bounds.
pub fn analyze(f: &PolySet, strategy: &Strategy, op: Operator) -> Result<Analysis, AdvisorError> {
    if f.is_empty() {
        return Err(AdvisorError::EmptySystem);
    }
    let t0 = Instant::now();
    let (ordering, rationale) = suggest_ordering(f, strategy)?;
    let t1 = Instant::now();
    let mut trace = projection_procedure(f, &ordering, op)?;
    trace.structure = Some(rationale.structure.clone());
    let t2 = Instant::now();

    let tree = tree_of_ordering(&rationale.structure, &ordering);
    let cd = combined_degree(f)?;
    let largest = f
        .iter()
        .map(|p| p.vars().into_iter().map(|v| p.degree(v)).max().unwrap_or(0))
        .max()
        .unwrap_or(1)
        .max(1);
    let global_pair = md_witness(f, largest)?;
    let n = ordering.len().max(1);
    let input = CellBoundInput {
        pairs: per_variable_pairs(f, &ordering),
        tree: tree.clone(),
    };
    let uniform = input.uniform_pair().unwrap_or_else(|| global_pair.clone());
    let analysis = Analysis {
        general_table: growth_table_general(&global_pair, n)?,
        tree_table: growth_table_tree(&uniform, input.w(), tree.height()),
        cell_bound_general: cell_bound_general(&global_pair, n)?,
        cell_bound_tree: cell_bound_tree(&input)?,
        ordering,
        rationale,
        trace,
        tree,
        combined_degree: cd,
        global_pair,
        timings: Timings::default(),
    };
    let t3 = Instant::now();
    Ok(Analysis {
        timings: Timings {
            ordering: t1 - t0,
            projection: t2 - t1,
            bounds: t3 - t2,
        },
        ..analysis
    })
}
