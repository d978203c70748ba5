use std::collections::BTreeMap;

use crate::chordal::ElimTree;
use crate::poly::{finest_basis, PolySet, Var};

use super::operators::step;
use super::trace::ProjectionTrace;
use super::{Operator, ProjectionError};

/// Sets `T_p` of the projection indexed by an elimination tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeTrace {
    pub tree: ElimTree,
    pub operator: Operator,
    pub sets: BTreeMap<Var, PolySet>,
}

impl TreeTrace {
    pub fn union(&self) -> PolySet {
        let mut all = PolySet::new();
        for s in self.sets.values() {
            all.extend(s.iter().cloned());
        }
        all
    }
}

/// Members of `a` whose largest variable under the tree's ordering is `p`.
fn own_part(a: &PolySet, p: Var, pos: &std::collections::HashMap<Var, usize>) -> PolySet {
    a.filter(|f| f.vars().iter().min_by_key(|v| pos.get(v).copied().unwrap_or(usize::MAX)) == Some(&p))
}

/// Computes `T_p = A_p ∪ ⋃ proj(T_l, x_l)` over the children `x_l` of each
/// `x_p`, bottom-up. Leaves keep `A_p` as is; inner sets are wrapped in the
/// finest basis like the levels of a projection procedure.
pub fn tree_projection(a: &PolySet, t: &ElimTree, op: Operator) -> Result<TreeTrace, ProjectionError> {
    let ordering = t.ordering();
    if a.vars().iter().any(|v| !ordering.ranked().contains(v)) {
        return Err(ProjectionError::OrderingMismatch);
    }
    let pos = ordering.positions();
    let mut sets: BTreeMap<Var, PolySet> = BTreeMap::new();
    // children are ranked before their parents
    for &p in ordering.ranked() {
        let own = own_part(a, p, &pos);
        let children = t.children(p);
        let tp = if children.is_empty() {
            own
        } else {
            let mut acc = own;
            for c in children {
                acc.extend(step(op, &sets[&c], c)?);
            }
            finest_basis(&acc)
        };
        sets.insert(p, tp);
    }
    Ok(TreeTrace {
        tree: t.clone(),
        operator: op,
        sets,
    })
}

/// Compares the tree-indexed sets with a projection trace over the same
/// ordering: equal nonconstant unions, and for every variable the members of
/// `T_i` and `P_i` that contain `x_i` coincide.
pub fn tp_equals_pi(tt: &TreeTrace, t: &ProjectionTrace) -> Result<bool, ProjectionError> {
    if tt.operator != t.operator || tt.tree.ordering() != &t.ordering || t.levels.len() != t.ordering.len().max(1) {
        return Err(ProjectionError::TraceMismatch);
    }
    if tt.union() != t.union() {
        return Ok(false);
    }
    for (k, &x) in t.ordering.ranked().iter().enumerate() {
        let from_trace = t.levels[k].filter(|f| f.contains_var(x));
        let from_tree = tt.sets.get(&x).map(|s| s.filter(|f| f.contains_var(x))).unwrap_or_default();
        if from_trace != from_tree {
            return Ok(false);
        }
    }
    Ok(true)
}
