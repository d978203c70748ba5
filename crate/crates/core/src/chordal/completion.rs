use std::collections::BTreeSet;

use num_rational::Ratio;

use crate::poly::Var;

use super::graph::{Ordering, VarGraph};
use super::peo::is_chordal;
use super::GraphError;

/// A chordal completion produced by the elimination game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub graph: VarGraph,
    /// Edges added by the game, `(a, b)` with `a < b`, in insertion order.
    pub fill: Vec<(Var, Var)>,
}

/// Eliminates variables in ranked order, joining the remaining neighbors of each
/// eliminated variable into a clique. `o` is a perfect elimination ordering of
/// the result.
pub fn elimination_game(g: &VarGraph, o: &Ordering) -> Result<Completion, GraphError> {
    if !o.covers(g) {
        return Err(GraphError::VertexMismatch);
    }
    let pos = o.positions();
    let mut h = g.clone();
    let mut fill = Vec::new();
    for (i, &v) in o.ranked().iter().enumerate() {
        let later: Vec<Var> = h.neighbors(v).filter(|w| pos[w] > i).collect();
        for (k, &a) in later.iter().enumerate() {
            for &b in &later[k + 1..] {
                if h.add_edge(a, b) {
                    fill.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    Ok(Completion { graph: h, fill })
}

/// Greedy minimum-fill ordering: repeatedly eliminate the vertex whose
/// remaining neighbors need the fewest new edges, smallest variable on ties.
pub fn min_fill_ordering(g: &VarGraph) -> Ordering {
    let mut h = g.clone();
    let mut remaining: BTreeSet<Var> = g.vertices().collect();
    let mut ranked = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let mut best: Option<(usize, Var)> = None;
        for &v in &remaining {
            let cost = fill_cost(&h, v, &remaining);
            if best.is_none_or(|(c, _)| cost < c) {
                best = Some((cost, v));
            }
        }
        let (_, v) = best.expect("nonempty");
        let nbrs: Vec<Var> = h.neighbors(v).filter(|w| remaining.contains(w)).collect();
        for (k, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[k + 1..] {
                h.add_edge(a, b);
            }
        }
        remaining.remove(&v);
        ranked.push(v);
    }
    Ordering::new(ranked).expect("each vertex eliminated once")
}

fn fill_cost(h: &VarGraph, v: Var, remaining: &BTreeSet<Var>) -> usize {
    let nbrs: Vec<Var> = h.neighbors(v).filter(|w| remaining.contains(w)).collect();
    let mut missing = 0;
    for (k, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[k + 1..] {
            if !h.has_edge(a, b) {
                missing += 1;
            }
        }
    }
    missing
}

/// Whether the chordal completion `h` of `g` is minimal, by the single fill
/// edge criterion: it is minimal iff removing any one fill edge breaks
/// chordality.
pub fn is_minimal_completion(g: &VarGraph, h: &VarGraph) -> Result<bool, GraphError> {
    if !h.contains_graph(g) || h.num_vertices() != g.num_vertices() {
        return Err(GraphError::NotSupergraph);
    }
    if !is_chordal(h) {
        return Err(GraphError::NotChordalCompletion);
    }
    for (a, b) in h.edges_not_in(g) {
        let mut smaller = h.clone();
        smaller.remove_edge(a, b);
        if is_chordal(&smaller) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `1 − |E(g)| / |E(h)|`.
pub fn fill_metric(g: &VarGraph, h: &VarGraph) -> Result<Ratio<u64>, GraphError> {
    if !h.contains_graph(g) {
        return Err(GraphError::NotSupergraph);
    }
    let eh = h.num_edges() as u64;
    if eh == 0 {
        return Err(GraphError::Edgeless);
    }
    Ok(Ratio::new(eh - g.num_edges() as u64, eh))
}
