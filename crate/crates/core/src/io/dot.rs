//! Graphviz output for chordal structures and elimination trees.

use std::fmt::Write as _;

use crate::chordal::{ElimTree, VarGraph};
use crate::poly::{Var, VarTable};

fn quoted(v: Var, t: &VarTable) -> String {
    format!("\"{}\"", t.name(v).replace('"', "\\\""))
}

/// Undirected graph; edges listed in `fill` are drawn dashed.
pub fn graph_dot(g: &VarGraph, fill: &[(Var, Var)], t: &VarTable) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", quoted(v, t));
    }
    for (a, b) in g.edges() {
        let dashed = fill.contains(&(a, b)) || fill.contains(&(b, a));
        let style = if dashed { " [style=dashed]" } else { "" };
        let _ = writeln!(out, "  {} -- {}{};", quoted(a, t), quoted(b, t), style);
    }
    out.push_str("}\n");
    out
}

/// Directed tree with arcs from each child to its parent.
pub fn tree_dot(tree: &ElimTree, t: &VarTable) -> String {
    let mut out = String::from("digraph T {\n");
    for &v in tree.ordering().ranked() {
        let _ = writeln!(out, "  {};", quoted(v, t));
    }
    for (c, p) in tree.arcs() {
        let _ = writeln!(out, "  {} -> {};", quoted(c, t), quoted(p, t));
    }
    out.push_str("}\n");
    out
}
