use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::poly::Var;

use super::graph::{Ordering, VarGraph};
use super::GraphError;

/// Checks that `o` is a perfect elimination ordering of `g`: every variable
/// together with its smaller neighbors induces a clique.
pub fn verify_peo(g: &VarGraph, o: &Ordering) -> Result<bool, GraphError> {
    if !o.covers(g) {
        return Err(GraphError::VertexMismatch);
    }
    Ok(first_peo_violation(g, o).is_none())
}

/// The first variable (in ranked order) whose smaller neighbors are not a clique.
pub(crate) fn first_peo_violation(g: &VarGraph, o: &Ordering) -> Option<Var> {
    let pos = o.positions();
    for (i, &v) in o.ranked().iter().enumerate() {
        let later: Vec<Var> = g.neighbors(v).filter(|w| pos[w] > i).collect();
        if !g.is_clique(&later) {
            return Some(v);
        }
    }
    None
}

/// Outcome of a chordality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering.
    Chordal(Ordering),
    /// A chordless cycle on at least four vertices, listed in cycle order.
    NotChordal(Vec<Var>),
}

/// Maximum cardinality search. Returns a perfect elimination ordering when `g`
/// is chordal, otherwise a chordless cycle. Ties go to the smallest variable.
pub fn mcs_peo(g: &VarGraph) -> Chordality {
    let n = g.num_vertices();
    let mut weight: HashMap<Var, usize> = g.vertices().map(|v| (v, 0)).collect();
    let mut visited: BTreeSet<Var> = BTreeSet::new();
    let mut visit_order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g
            .vertices()
            .filter(|v| !visited.contains(v))
            .max_by(|a, b| weight[a].cmp(&weight[b]).then(b.cmp(a)))
            .expect("unvisited vertex remains");
        visited.insert(v);
        visit_order.push(v);
        for w in g.neighbors(v) {
            if !visited.contains(&w) {
                *weight.get_mut(&w).unwrap() += 1;
            }
        }
    }
    // the last visited vertex is eliminated first
    visit_order.reverse();
    let o = Ordering::new(visit_order).expect("each vertex visited once");
    if first_peo_violation(g, &o).is_none() {
        Chordality::Chordal(o)
    } else {
        Chordality::NotChordal(chordless_cycle(g).expect("a non-chordal graph has a chordless cycle"))
    }
}

pub fn is_chordal(g: &VarGraph) -> bool {
    matches!(mcs_peo(g), Chordality::Chordal(_))
}

/// Finds a chordless cycle of length at least four, if any.
///
/// For each vertex `v` and pair of non-adjacent neighbors `u`, `w`, a shortest
/// `u`–`w` path avoiding the rest of `v`'s closed neighborhood closes an
/// induced cycle through `v`.
pub fn chordless_cycle(g: &VarGraph) -> Option<Vec<Var>> {
    for v in g.vertices() {
        let nbrs: Vec<Var> = g.neighbors(v).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let blocked: BTreeSet<Var> = nbrs
                    .iter()
                    .copied()
                    .filter(|&x| x != u && x != w)
                    .chain(std::iter::once(v))
                    .collect();
                if let Some(path) = shortest_path(g, u, w, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &VarGraph, from: Var, to: Var, blocked: &BTreeSet<Var>) -> Option<Vec<Var>> {
    let mut prev: HashMap<Var, Var> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = BTreeSet::from([from]);
    while let Some(a) = queue.pop_front() {
        if a == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[&cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for b in g.neighbors(a) {
            if !blocked.contains(&b) && seen.insert(b) {
                prev.insert(b, a);
                queue.push_back(b);
            }
        }
    }
    None
}

/// Checks that `cycle` is a chordless cycle of `g` on at least four vertices.
pub fn is_chordless_cycle(g: &VarGraph, cycle: &[Var]) -> bool {
    let k = cycle.len();
    if k < 4 || cycle.iter().collect::<BTreeSet<_>>().len() != k {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}
