use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::poly::{PolySet, Var, VarTable};

use super::GraphError;

/// Undirected simple graph on variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VarGraph {
    adj: BTreeMap<Var, BTreeSet<Var>>,
}

impl VarGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices<I: IntoIterator<Item = Var>>(vs: I) -> Self {
        let mut g = Self::new();
        for v in vs {
            g.add_vertex(v);
        }
        g
    }

    pub fn from_edges<I: IntoIterator<Item = (Var, Var)>>(edges: I) -> Self {
        let mut g = Self::new();
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_vertex(&mut self, v: Var) {
        self.adj.entry(v).or_default();
    }

    /// Adds an undirected edge; self-loops are ignored.
    pub fn add_edge(&mut self, a: Var, b: Var) -> bool {
        self.add_vertex(a);
        self.add_vertex(b);
        if a == b {
            return false;
        }
        self.adj.get_mut(&b).unwrap().insert(a);
        self.adj.get_mut(&a).unwrap().insert(b)
    }

    pub fn remove_edge(&mut self, a: Var, b: Var) -> bool {
        let found = self.adj.get_mut(&a).is_some_and(|s| s.remove(&b));
        if let Some(s) = self.adj.get_mut(&b) {
            s.remove(&a);
        }
        found
    }

    pub fn has_vertex(&self, v: Var) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, a: Var, b: Var) -> bool {
        self.adj.get(&a).is_some_and(|s| s.contains(&b))
    }

    pub fn neighbors(&self, v: Var) -> impl Iterator<Item = Var> + '_ {
        self.adj.get(&v).into_iter().flat_map(|s| s.iter().copied())
    }

    pub fn degree(&self, v: Var) -> usize {
        self.adj.get(&v).map_or(0, |s| s.len())
    }

    pub fn vertices(&self) -> impl Iterator<Item = Var> + '_ {
        self.adj.keys().copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(Var, Var)> {
        let mut out = Vec::new();
        for (&a, ns) in &self.adj {
            for &b in ns.range(a..) {
                if b != a {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_clique(&self, vs: &[Var]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Same vertex set and every edge of `other` present here.
    pub fn contains_graph(&self, other: &VarGraph) -> bool {
        other.vertices().all(|v| self.has_vertex(v))
            && other.edges().into_iter().all(|(a, b)| self.has_edge(a, b))
    }

    /// Edges of `self` that are not in `base`.
    pub fn edges_not_in(&self, base: &VarGraph) -> Vec<(Var, Var)> {
        self.edges().into_iter().filter(|&(a, b)| !base.has_edge(a, b)).collect()
    }

    pub fn induced(&self, vs: &[Var]) -> VarGraph {
        let keep: BTreeSet<Var> = vs.iter().copied().collect();
        let mut g = VarGraph::with_vertices(keep.iter().copied());
        for &v in &keep {
            for w in self.neighbors(v) {
                if keep.contains(&w) {
                    g.add_edge(v, w);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Var>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if !seen.insert(v) {
                continue;
            }
            let mut comp = vec![v];
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn rename(&self, map: &dyn Fn(Var) -> Var) -> VarGraph {
        let mut g = VarGraph::with_vertices(self.vertices().map(map));
        for (a, b) in self.edges() {
            g.add_edge(map(a), map(b));
        }
        g
    }
}

/// The associated graph: vertices are the variables of `f`, with an edge
/// between two variables whenever some member contains both.
pub fn associated_graph(f: &PolySet) -> VarGraph {
    let mut g = VarGraph::new();
    for p in f {
        let vs = p.vars();
        for (i, &a) in vs.iter().enumerate() {
            g.add_vertex(a);
            for &b in &vs[i + 1..] {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// A total order on variables, listed from largest to smallest. The largest
/// variable is projected (eliminated) first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ordering {
    ranked: Vec<Var>,
}

impl Ordering {
    pub fn new(ranked: Vec<Var>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for &v in &ranked {
            if !seen.insert(v) {
                return Err(GraphError::InvalidOrdering(format!("variable {v} repeated")));
            }
        }
        Ok(Ordering { ranked })
    }

    /// Parses `x4>x5>x3` against a symbol table.
    pub fn parse(text: &str, table: &VarTable) -> Result<Self, GraphError> {
        let mut ranked = Vec::new();
        for part in text.split('>') {
            let name = part.trim();
            if name.is_empty() {
                return Err(GraphError::InvalidOrdering(format!(
                    "empty variable name in `{text}` (use `>` between names)"
                )));
            }
            let v = table
                .get(name)
                .ok_or_else(|| GraphError::InvalidOrdering(format!("unknown variable `{name}`")))?;
            ranked.push(v);
        }
        Ordering::new(ranked).map_err(|_| {
            GraphError::InvalidOrdering(format!("a variable is repeated in `{text}`"))
        })
    }

    pub fn ranked(&self) -> &[Var] {
        &self.ranked
    }

    pub fn len(&self) -> usize {
        self.ranked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranked.is_empty()
    }

    /// Position of each variable (0 = largest).
    pub fn positions(&self) -> HashMap<Var, usize> {
        self.ranked.iter().enumerate().map(|(i, &v)| (v, i)).collect()
    }

    /// True when this ranks exactly the vertices of `g`.
    pub fn covers(&self, g: &VarGraph) -> bool {
        self.ranked.len() == g.num_vertices() && self.ranked.iter().all(|&v| g.has_vertex(v))
    }

    /// Appends variables not yet ranked, as the smallest, in id order.
    pub fn extended_with(&self, vars: &[Var]) -> Ordering {
        let mut ranked = self.ranked.clone();
        for &v in vars {
            if !ranked.contains(&v) {
                ranked.push(v);
            }
        }
        Ordering { ranked }
    }

    pub fn display(&self, table: &VarTable) -> String {
        self.ranked
            .iter()
            .map(|&v| table.name(v))
            .collect::<Vec<_>>()
            .join(">")
    }

    pub fn rename(&self, map: &dyn Fn(Var) -> Var) -> Ordering {
        Ordering {
            ranked: self.ranked.iter().map(|&v| map(v)).collect(),
        }
    }
}
