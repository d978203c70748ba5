use std::fmt;

use num_rational::Ratio;

use crate::chordal::{
    elimination_game, enumerate_peos, is_chordal, mcs_peo, min_fill_ordering, min_height_peo,
    verify_peo, Chordality, Ordering, VarGraph,
};
use crate::poly::{PolySet, Var};
use crate::projection::Operator;

use super::bench::{compare_orderings, completion_figures, graph_with};
use super::AdvisorError;

/// How an ordering is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Use this ordering as is.
    Given(Ordering),
    /// A perfect elimination ordering of minimum elimination-tree height, on
    /// the associated graph when chordal, otherwise on its min-fill completion.
    MinHeightPeo,
    /// The greedy minimum-fill elimination ordering.
    MinFill,
    /// Project under up to `cap` PEOs of the chordal structure and keep the
    /// one with the smallest `#proj`.
    EnumerateAll { cap: usize, seed: u64, operator: Operator },
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Given(_) => "given",
            Strategy::MinHeightPeo => "min-height-peo",
            Strategy::MinFill => "min-fill",
            Strategy::EnumerateAll { .. } => "enumerate",
        })
    }
}

/// Why an ordering was suggested.
#[derive(Clone, Debug)]
pub struct Rationale {
    pub strategy: String,
    /// Whether the associated graph is chordal.
    pub chordal: bool,
    /// A chordless cycle of the associated graph, when it is not chordal.
    pub cycle: Option<Vec<Var>>,
    /// The chordal structure the ordering eliminates.
    pub structure: VarGraph,
    pub fill_edges: Vec<(Var, Var)>,
    pub fill_d: Ratio<u64>,
    pub tree_height: usize,
    /// Whether the ordering is a PEO of the associated graph itself.
    pub is_peo: bool,
    pub candidates: usize,
}

/// Picks an ordering for `f` under strategy `s`.
pub fn suggest_ordering(f: &PolySet, s: &Strategy) -> Result<(Ordering, Rationale), AdvisorError> {
    let extra: Vec<Var> = match s {
        Strategy::Given(o) => o.ranked().to_vec(),
        _ => Vec::new(),
    };
    let g = graph_with(f, &extra);
    let cycle = match mcs_peo(&g) {
        Chordality::Chordal(_) => None,
        Chordality::NotChordal(c) => Some(c),
    };
    let chordal_structure = || {
        if cycle.is_none() {
            g.clone()
        } else {
            elimination_game(&g, &min_fill_ordering(&g)).expect("covers").graph
        }
    };
    let mut candidates = 1;
    let ordering = match s {
        Strategy::Given(o) => {
            if !o.covers(&g) {
                return Err(crate::chordal::GraphError::VertexMismatch.into());
            }
            o.clone()
        }
        Strategy::MinFill => min_fill_ordering(&g),
        Strategy::MinHeightPeo => min_height_peo(&chordal_structure())?.0,
        Strategy::EnumerateAll { cap, seed, operator } => {
            if *cap == 0 {
                return Err(AdvisorError::ZeroCap);
            }
            let peos = enumerate_peos(&chordal_structure(), *cap, *seed)?;
            candidates = peos.len();
            let rows = compare_orderings(f, &peos, *operator);
            rows.into_iter()
                .filter_map(|r| r.proj_count.map(|c| (c, r.tree_height.unwrap_or(0), r.ordering)))
                .min_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)).then_with(|| a.2.ranked().cmp(b.2.ranked())))
                .map(|(_, _, o)| o)
                .ok_or(AdvisorError::Family("no ordering could be evaluated".to_string()))?
        }
    };
    let (structure, tree, fill_d) = completion_figures(&g, &ordering);
    debug_assert!(is_chordal(&structure));
    let fill_edges = structure.edges_not_in(&g);
    let rationale = Rationale {
        strategy: s.to_string(),
        chordal: cycle.is_none(),
        cycle,
        is_peo: verify_peo(&g, &ordering)?,
        tree_height: tree.height(),
        structure,
        fill_edges,
        fill_d,
        candidates,
    };
    Ok((ordering, rationale))
}
