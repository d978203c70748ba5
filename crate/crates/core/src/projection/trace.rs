use std::time::{Duration, Instant};

use crate::chordal::{associated_graph, Ordering, VarGraph};
use crate::poly::{finest_basis, PolySet, Var};

use super::operators::step;
use super::{Operator, ProjectionError};

/// The sets `P_n, …, P_1` of a projection procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionTrace {
    pub ordering: Ordering,
    pub operator: Operator,
    /// `levels[0]` is the input; `levels[k]` results from projecting `ordering[k - 1]`.
    pub levels: Vec<PolySet>,
    pub counts: Vec<usize>,
    /// Chordal structure the ordering was taken from, when known.
    pub structure: Option<VarGraph>,
    pub elapsed: Duration,
}

impl ProjectionTrace {
    /// The variable eliminated to produce `levels[k]`, for `k ≥ 1`.
    pub fn eliminated(&self, k: usize) -> Option<Var> {
        k.checked_sub(1).and_then(|i| self.ordering.ranked().get(i).copied())
    }

    pub fn last(&self) -> &PolySet {
        self.levels.last().expect("a trace has at least one level")
    }

    /// Nonconstant polynomials over all levels.
    pub fn union(&self) -> PolySet {
        let mut all = PolySet::new();
        for l in &self.levels {
            all.extend(l.iter().cloned());
        }
        all
    }
}

/// Projects `a` along `o`, largest variable first, wrapping every step in the
/// finest basis. Variables ranked by `o` but absent from the current set leave
/// it unchanged; once a set is univariate its projection is empty.
pub fn projection_procedure(a: &PolySet, o: &Ordering, op: Operator) -> Result<ProjectionTrace, ProjectionError> {
    if a.vars().iter().any(|v| !o.ranked().contains(v)) {
        return Err(ProjectionError::OrderingMismatch);
    }
    let start = Instant::now();
    let mut levels = vec![a.clone()];
    for &x in o.ranked().iter().take(o.len().saturating_sub(1)) {
        let next = finest_basis(&step(op, levels.last().unwrap(), x)?);
        levels.push(next);
    }
    let counts = levels.iter().map(PolySet::len).collect();
    Ok(ProjectionTrace {
        ordering: o.clone(),
        operator: op,
        levels,
        counts,
        structure: None,
        elapsed: start.elapsed(),
    })
}

/// `#proj`: the total size of all levels below the input.
pub fn proj_count(t: &ProjectionTrace) -> usize {
    t.counts.iter().skip(1).sum()
}

/// Whether the associated graph of every level is a subgraph of `g`.
pub fn check_preservation(t: &ProjectionTrace, g: &VarGraph) -> bool {
    t.levels.iter().all(|l| {
        let h = associated_graph(l);
        h.vertices().all(|v| g.has_vertex(v)) && h.edges().into_iter().all(|(a, b)| g.has_edge(a, b))
    })
}
