use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::Var;

use super::etree::tree_of_ordering;
use super::graph::{Ordering, VarGraph};
use super::peo::is_chordal;
use super::GraphError;

/// Graphs up to this many vertices are enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 9;
/// Randomized greedy restarts used above the exhaustive limit.
pub const RANDOM_RESTARTS: usize = 64;
/// Memo entries allowed for the exact minimum-height search before it gives up.
const MEMO_LIMIT: usize = 400_000;

/// Up to `cap` distinct perfect elimination orderings of a chordal graph.
///
/// Small graphs are enumerated by depth-first search over simplicial vertex
/// choices in variable order. Larger graphs use seeded randomized greedy
/// pruning; results keep first-discovery order.
pub fn enumerate_peos(g: &VarGraph, cap: usize, seed: u64) -> Result<Vec<Ordering>, GraphError> {
    if !is_chordal(g) {
        return Err(GraphError::NotChordal);
    }
    let mut out = Vec::new();
    if cap == 0 {
        return Ok(out);
    }
    if g.num_vertices() <= EXHAUSTIVE_LIMIT {
        let mut remaining: BTreeSet<Var> = g.vertices().collect();
        let mut prefix = Vec::new();
        dfs(g, &mut remaining, &mut prefix, cap, &mut |o| out.push(o));
        return Ok(out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    for _ in 0..RANDOM_RESTARTS {
        let mut remaining: BTreeSet<Var> = g.vertices().collect();
        let mut ranked = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let simplicial: Vec<Var> =
                remaining.iter().copied().filter(|&v| is_simplicial(g, v, &remaining)).collect();
            let &v = simplicial.choose(&mut rng).expect("chordal graphs have a simplicial vertex");
            remaining.remove(&v);
            ranked.push(v);
        }
        if seen.insert(ranked.clone()) {
            out.push(Ordering::new(ranked).expect("permutation"));
            if out.len() >= cap {
                break;
            }
        }
    }
    Ok(out)
}

fn is_simplicial(g: &VarGraph, v: Var, remaining: &BTreeSet<Var>) -> bool {
    let nbrs: Vec<Var> = g.neighbors(v).filter(|w| remaining.contains(w)).collect();
    g.is_clique(&nbrs)
}

fn dfs(
    g: &VarGraph,
    remaining: &mut BTreeSet<Var>,
    prefix: &mut Vec<Var>,
    cap: usize,
    emit: &mut dyn FnMut(Ordering),
) -> usize {
    if remaining.is_empty() {
        emit(Ordering::new(prefix.clone()).expect("permutation"));
        return 1;
    }
    let mut found = 0;
    let candidates: Vec<Var> =
        remaining.iter().copied().filter(|&v| is_simplicial(g, v, remaining)).collect();
    for v in candidates {
        remaining.remove(&v);
        prefix.push(v);
        found += dfs(g, remaining, prefix, cap - found, emit);
        prefix.pop();
        remaining.insert(v);
        if found >= cap {
            break;
        }
    }
    found
}

/// A perfect elimination ordering whose elimination tree has minimum height.
///
/// Up to the exhaustive limit every PEO is examined and ties go to the
/// lexicographically smallest ranked variable list. Above it an exact search
/// over connected vertex subsets is used: the root of a subtree is the last
/// variable of its component, subject to its outside neighbors forming a
/// clique, and the remaining components become child subtrees. If that search
/// grows too large, the best of the randomized PEOs is returned instead.
pub fn min_height_peo(g: &VarGraph) -> Result<(Ordering, usize), GraphError> {
    if !is_chordal(g) {
        return Err(GraphError::NotChordal);
    }
    if g.num_vertices() <= EXHAUSTIVE_LIMIT {
        let mut best: Option<(usize, Ordering)> = None;
        let mut remaining: BTreeSet<Var> = g.vertices().collect();
        let mut prefix = Vec::new();
        dfs(g, &mut remaining, &mut prefix, usize::MAX, &mut |o| {
            let h = tree_of_ordering(g, &o).height();
            let better = match &best {
                None => true,
                Some((bh, bo)) => h < *bh || (h == *bh && o.ranked() < bo.ranked()),
            };
            if better {
                best = Some((h, o));
            }
        });
        let (h, o) = best.unwrap_or((0, Ordering::new(Vec::new()).unwrap()));
        return Ok((o, h));
    }
    if let Some(found) = exact_min_height(g) {
        return Ok(found);
    }
    let candidates = enumerate_peos(g, RANDOM_RESTARTS, 0)?;
    let (h, o) = candidates
        .into_iter()
        .map(|o| (tree_of_ordering(g, &o).height(), o))
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.ranked().cmp(b.1.ranked())))
        .expect("a chordal graph has a PEO");
    Ok((o, h))
}

struct HeightSearch<'a> {
    verts: Vec<Var>,
    adj: Vec<u64>,
    g: &'a VarGraph,
    memo: HashMap<u64, Option<(usize, usize)>>,
    overflow: bool,
}

fn exact_min_height(g: &VarGraph) -> Option<(Ordering, usize)> {
    let verts: Vec<Var> = g.vertices().collect();
    if verts.len() > 64 {
        return None;
    }
    let index: HashMap<Var, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<u64> = verts
        .iter()
        .map(|&v| g.neighbors(v).fold(0u64, |m, w| m | (1 << index[&w])))
        .collect();
    let mut s = HeightSearch {
        verts,
        adj,
        g,
        memo: HashMap::new(),
        overflow: false,
    };
    let mut ranked = Vec::new();
    let mut height = 0;
    let all: u64 = if s.verts.len() == 64 { u64::MAX } else { (1u64 << s.verts.len()) - 1 };
    for comp in s.components(all) {
        let (h, _) = s.solve(comp)?;
        if s.overflow {
            return None;
        }
        height = height.max(h);
        s.build(comp, &mut ranked);
    }
    Some((Ordering::new(ranked).expect("permutation"), height))
}

impl HeightSearch<'_> {
    fn components(&self, set: u64) -> Vec<u64> {
        let mut rest = set;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let i = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[i] & set & !comp;
                comp |= new;
                frontier |= new;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    fn outside_is_clique(&self, r: usize, set: u64) -> bool {
        let outside = self.adj[r] & !set;
        let vs: Vec<Var> = bits(outside).map(|i| self.verts[i]).collect();
        self.g.is_clique(&vs)
    }

    /// Minimum subtree height for the connected set, with the chosen root index.
    fn solve(&mut self, set: u64) -> Option<(usize, usize)> {
        if let Some(&cached) = self.memo.get(&set) {
            return cached;
        }
        if self.memo.len() >= MEMO_LIMIT {
            self.overflow = true;
            return None;
        }
        let mut best: Option<(usize, usize)> = None;
        for r in bits(set) {
            if !self.outside_is_clique(r, set) {
                continue;
            }
            let rest = set & !(1u64 << r);
            let mut h = 0;
            let mut ok = true;
            for c in self.components(rest) {
                match self.solve(c) {
                    Some((ch, _)) => h = h.max(ch + 1),
                    None => {
                        ok = false;
                        break;
                    }
                }
                if best.is_some_and(|(bh, _)| h >= bh) {
                    ok = false;
                    break;
                }
            }
            if self.overflow {
                return None;
            }
            if ok && best.is_none_or(|(bh, _)| h < bh) {
                best = Some((h, r));
            }
        }
        self.memo.insert(set, best);
        best
    }

    /// Appends the ordering realizing the memoized optimum: children first, root last.
    fn build(&self, set: u64, ranked: &mut Vec<Var>) {
        let (_, r) = self.memo[&set].expect("solved");
        let rest = set & !(1u64 << r);
        for c in self.components(rest) {
            self.build(c, ranked);
        }
        ranked.push(self.verts[r]);
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}
