use std::collections::BTreeMap;

use crate::poly::Var;

use super::graph::{Ordering, VarGraph};
use super::peo::first_peo_violation;
use super::GraphError;

/// Elimination tree (a forest for disconnected graphs): each variable points
/// to its largest smaller neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElimTree {
    parent: BTreeMap<Var, Var>,
    roots: Vec<Var>,
    ordering: Ordering,
}

impl ElimTree {
    /// Builds a tree directly from a parent map. Used to construct arbitrary
    /// (possibly invalid) trees for checking.
    pub fn from_parts(parent: BTreeMap<Var, Var>, ordering: Ordering) -> Self {
        let mut roots: Vec<Var> = ordering
            .ranked()
            .iter()
            .copied()
            .filter(|v| !parent.contains_key(v))
            .collect();
        roots.reverse();
        ElimTree { parent, roots, ordering }
    }

    pub fn parent(&self, v: Var) -> Option<Var> {
        self.parent.get(&v).copied()
    }

    pub fn parents(&self) -> &BTreeMap<Var, Var> {
        &self.parent
    }

    /// Roots, smallest variable of the ordering first.
    pub fn roots(&self) -> &[Var] {
        &self.roots
    }

    /// The root of a connected tree (the minimum of the ordering).
    pub fn root(&self) -> Option<Var> {
        self.ordering.ranked().last().copied()
    }

    pub fn ordering(&self) -> &Ordering {
        &self.ordering
    }

    /// Children of `v` in ranked order.
    pub fn children(&self, v: Var) -> Vec<Var> {
        self.ordering
            .ranked()
            .iter()
            .copied()
            .filter(|c| self.parent.get(c) == Some(&v))
            .collect()
    }

    /// Arcs `(child, parent)`.
    pub fn arcs(&self) -> Vec<(Var, Var)> {
        self.ordering
            .ranked()
            .iter()
            .filter_map(|&c| self.parent.get(&c).map(|&p| (c, p)))
            .collect()
    }

    pub fn depth(&self, v: Var) -> usize {
        let mut d = 0;
        let mut cur = v;
        while let Some(&p) = self.parent.get(&cur) {
            d += 1;
            cur = p;
            if d > self.parent.len() {
                break;
            }
        }
        d
    }

    /// Longest root-to-leaf arc count, maximized over components.
    pub fn height(&self) -> usize {
        self.ordering.ranked().iter().map(|&v| self.depth(v)).max().unwrap_or(0)
    }

    /// Height of the subtree rooted at each variable (leaves have height 0).
    pub fn subtree_heights(&self) -> BTreeMap<Var, usize> {
        let mut h: BTreeMap<Var, usize> = BTreeMap::new();
        // children precede parents in the ordering
        for &v in self.ordering.ranked() {
            let hv = *h.entry(v).or_insert(0);
            if let Some(&p) = self.parent.get(&v) {
                let e = h.entry(p).or_insert(0);
                *e = (*e).max(hv + 1);
            }
        }
        h
    }

    pub fn is_ancestor(&self, a: Var, v: Var) -> bool {
        let mut cur = v;
        let mut steps = 0;
        while let Some(&p) = self.parent.get(&cur) {
            if p == a {
                return true;
            }
            cur = p;
            steps += 1;
            if steps > self.parent.len() {
                return false;
            }
        }
        false
    }

    /// Largest number of children of any node.
    pub fn max_children(&self) -> usize {
        let mut count: BTreeMap<Var, usize> = BTreeMap::new();
        for &p in self.parent.values() {
            *count.entry(p).or_insert(0) += 1;
        }
        count.values().copied().max().unwrap_or(0)
    }
}

/// Elimination tree of a chordal graph under one of its perfect elimination
/// orderings.
pub fn elimination_tree(g: &VarGraph, o: &Ordering) -> Result<ElimTree, GraphError> {
    if !o.covers(g) {
        return Err(GraphError::VertexMismatch);
    }
    if first_peo_violation(g, o).is_some() {
        return Err(GraphError::NotPeo);
    }
    Ok(tree_of_ordering(g, o))
}

/// Parent = the earliest-ranked neighbor among those ranked later. No PEO check.
pub(crate) fn tree_of_ordering(g: &VarGraph, o: &Ordering) -> ElimTree {
    let pos = o.positions();
    let mut parent = BTreeMap::new();
    for (i, &v) in o.ranked().iter().enumerate() {
        if let Some(p) = g.neighbors(v).filter(|w| pos[w] > i).min_by_key(|w| pos[w]) {
            parent.insert(v, p);
        }
    }
    ElimTree::from_parts(parent, o.clone())
}

/// For every edge `(s, t)` of `g` with `s` smaller than `t`, `s` must be an
/// ancestor of `t` in the tree.
pub fn tree_path_check(g: &VarGraph, t: &ElimTree) -> bool {
    let pos = t.ordering().positions();
    g.edges().into_iter().all(|(a, b)| {
        let (Some(&pa), Some(&pb)) = (pos.get(&a), pos.get(&b)) else {
            return false;
        };
        let (larger, smaller) = if pa < pb { (a, b) } else { (b, a) };
        t.is_ancestor(smaller, larger)
    })
}
