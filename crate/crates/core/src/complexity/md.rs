use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::poly::{Poly, PolySet, Var};

use super::ComplexityError;

/// A set has the (m,d)-property when it splits into at most `m` parts, each
/// of combined degree at most `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MDPair {
    pub m: BigUint,
    pub d: BigUint,
}

impl MDPair {
    pub fn new(m: u64, d: u64) -> Result<Self, ComplexityError> {
        if m == 0 || d == 0 {
            return Err(ComplexityError::InvalidPair);
        }
        Ok(MDPair {
            m: BigUint::from(m),
            d: BigUint::from(d),
        })
    }

    /// `⌊(m+1)²/2⌋`.
    pub fn big_m(&self) -> BigUint {
        let m1 = &self.m + 1u32;
        (&m1 * &m1) >> 1
    }
}

impl fmt::Display for MDPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.d)
    }
}

fn degree_profile<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> BTreeMap<Var, u32> {
    let mut deg = BTreeMap::new();
    for p in polys {
        for v in p.vars() {
            *deg.entry(v).or_insert(0) += p.degree(v);
        }
    }
    deg
}

/// Largest degree of the product of the members in any single variable.
pub fn combined_degree(a: &PolySet) -> Result<u32, ComplexityError> {
    if a.is_empty() {
        return Err(ComplexityError::EmptySet);
    }
    Ok(degree_profile(a).values().copied().max().unwrap_or(0))
}

/// Certifies an (m,d)-property by first-fit packing, members taken by
/// descending combined degree. The returned `m` need not be minimal.
pub fn md_witness(a: &PolySet, d: u32) -> Result<MDPair, ComplexityError> {
    if d == 0 {
        return Err(ComplexityError::InvalidPair);
    }
    let mut items: Vec<(u32, &Poly)> = a
        .iter()
        .map(|p| (degree_profile([p]).values().copied().max().unwrap_or(0), p))
        .collect();
    if let Some(&(found, _)) = items.iter().find(|(c, _)| *c > d) {
        return Err(ComplexityError::ExceedsDegree { found, bound: d });
    }
    items.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(y.1)));
    let mut bins: Vec<BTreeMap<Var, u32>> = Vec::new();
    for (_, p) in items {
        let profile = degree_profile([p]);
        let fits = |bin: &BTreeMap<Var, u32>| profile.iter().all(|(v, e)| bin.get(v).copied().unwrap_or(0) + e <= d);
        match bins.iter_mut().find(|b| fits(b)) {
            Some(bin) => {
                for (v, e) in profile {
                    *bin.entry(v).or_insert(0) += e;
                }
            }
            None => bins.push(profile),
        }
    }
    Ok(MDPair {
        m: BigUint::from(bins.len().max(1)),
        d: BigUint::from(d),
    })
}

fn two_d_squared(d: &BigUint) -> BigUint {
    (d * d) << 1
}

/// One McCallum projection step: `(⌊(m+1)²/2⌋, 2d²)`, or `(m², 2d²)` when
/// `refined` is set and `m > 1`.
pub fn md_step_general(p: &MDPair, refined: bool) -> MDPair {
    let m = if refined && p.m > BigUint::one() { &p.m * &p.m } else { p.big_m() };
    MDPair { m, d: two_d_squared(&p.d) }
}

/// One step up the elimination tree for a node with `children` children:
/// the number grows by the factor `children + 1` on top of the general step.
pub fn md_step_tree(p: &MDPair, children: usize, refined: bool) -> MDPair {
    let step = md_step_general(p, refined);
    MDPair {
        m: step.m * BigUint::from(children + 1),
        d: step.d,
    }
}
