use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;

use crate::chordal::ElimTree;
use crate::poly::Var;

use super::md::MDPair;
use super::ComplexityError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthRow {
    /// Number of remaining variables (general table) or node height (tree table).
    pub index: usize,
    pub number: BigUint,
    pub degree: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthTable {
    pub rows: Vec<GrowthRow>,
}

impl GrowthTable {
    /// Aligned plain-text rendering; `index_label` heads the first column.
    pub fn render(&self, index_label: &str) -> String {
        let cells: Vec<[String; 3]> = self
            .rows
            .iter()
            .map(|r| [r.index.to_string(), r.number.to_string(), r.degree.to_string()])
            .collect();
        let header = [index_label.to_string(), "Number".to_string(), "Degree".to_string()];
        let mut width = header.clone().map(|h| h.len());
        for c in &cells {
            for i in 0..3 {
                width[i] = width[i].max(c[i].len());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&header).chain(cells.iter()) {
            let _ = writeln!(out, "{:>w0$}  {:>w1$}  {:>w2$}", row[0], row[1], row[2], w0 = width[0], w1 = width[1], w2 = width[2]);
        }
        out
    }
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn pow(b: &BigUint, e: BigUint) -> BigUint {
    let e: u32 = e.try_into().expect("exponent fits in u32");
    b.pow(e)
}

/// Degree bound `2^(2^r − 1) · d^(2^r)` after `r` steps.
fn degree_after(d: &BigUint, r: usize) -> BigUint {
    pow2((1usize << r) - 1) * pow(d, pow2(r))
}

/// Closed-form growth of `(m, d)` over `n` variables: row `r` (for `n − r`
/// variables) is `(M^(2^(r−1)), 2^(2^r − 1) d^(2^r))`, row 0 the input.
pub fn growth_table_general(p: &MDPair, n: usize) -> Result<GrowthTable, ComplexityError> {
    if n == 0 {
        return Err(ComplexityError::NoVariables);
    }
    let big_m = p.big_m();
    let mut rows = vec![GrowthRow {
        index: n,
        number: p.m.clone(),
        degree: p.d.clone(),
    }];
    for r in 1..n {
        rows.push(GrowthRow {
            index: n - r,
            number: pow(&big_m, pow2(r - 1)),
            degree: degree_after(&p.d, r),
        });
    }
    Ok(GrowthTable { rows })
}

/// Closed-form growth along an elimination tree with at most `w` children per
/// node: row `r` (node height) is `((w+1)^(2^r − 1) M^(2^(r−1)), 2^(2^r − 1) d^(2^r))`.
pub fn growth_table_tree(p: &MDPair, w: usize, h: usize) -> GrowthTable {
    let big_m = p.big_m();
    let w1 = BigUint::from(w + 1);
    let mut rows = vec![GrowthRow {
        index: 0,
        number: p.m.clone(),
        degree: p.d.clone(),
    }];
    for r in 1..=h {
        rows.push(GrowthRow {
            index: r,
            number: pow(&w1, pow2(r) - 1u32) * pow(&big_m, pow2(r - 1)),
            degree: degree_after(&p.d, r),
        });
    }
    GrowthTable { rows }
}

/// Cell-count bound for a general ordering over `n` variables:
/// `(2md + 1) · ∏_{r=1}^{n−1} (2 · 2^(2^r − 1) M^(2^(r−1)) d^(2^r) + 1)`.
pub fn cell_bound_general(p: &MDPair, n: usize) -> Result<BigUint, ComplexityError> {
    let table = growth_table_general(p, n)?;
    Ok(table
        .rows
        .iter()
        .map(|r| ((&r.number * &r.degree) << 1) + 1u32)
        .product())
}

/// Inputs to the elimination-tree cell bound.
#[derive(Clone, Debug)]
pub struct CellBoundInput {
    /// `(m, d)` for each `A_l`, the members whose largest variable is `x_l`.
    pub pairs: BTreeMap<Var, MDPair>,
    pub tree: ElimTree,
}

impl CellBoundInput {
    /// Largest number of children of any node.
    pub fn w(&self) -> usize {
        self.tree.max_children()
    }

    /// Componentwise maximum of the supplied pairs: every `A_l` has this property.
    pub fn uniform_pair(&self) -> Option<MDPair> {
        let m = self.pairs.values().map(|p| p.m.clone()).max()?;
        let d = self.pairs.values().map(|p| p.d.clone()).max()?;
        Some(MDPair { m, d })
    }
}

/// Cell-count bound along an elimination tree: `∏ (2K_i + 1)` with
/// `K_i = m_i d_i` at leaves and `(2(w+1))^(2^h − 1) M^(2^(h−1)) d^(2^h)` at
/// inner nodes of height `h`. Inner nodes use the componentwise maximum of
/// the supplied pairs, since the bound assumes one pair for every `A_l`.
pub fn cell_bound_tree(input: &CellBoundInput) -> Result<BigUint, ComplexityError> {
    let ranked = input.tree.ordering().ranked();
    for &v in ranked {
        if !input.pairs.contains_key(&v) {
            return Err(ComplexityError::MissingPair(v));
        }
    }
    let Some(uniform) = input.uniform_pair() else {
        return Ok(BigUint::one());
    };
    let big_m = uniform.big_m();
    let base = BigUint::from(2 * (input.w() + 1));
    let heights = input.tree.subtree_heights();
    let mut acc = BigUint::one();
    for &v in ranked {
        let h = heights[&v];
        let k = if h == 0 {
            let p = &input.pairs[&v];
            &p.m * &p.d
        } else {
            pow(&base, pow2(h) - 1u32) * pow(&big_m, pow2(h - 1)) * pow(&uniform.d, pow2(h))
        };
        acc *= (k << 1) + 1u32;
    }
    Ok(acc)
}
