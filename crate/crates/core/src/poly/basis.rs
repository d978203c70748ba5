use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::factor::split_linear_factors;
use super::gcd::{content, gcd, squarefree_decomposition};
use super::poly::Poly;
use super::var::{Var, VarTable};

/// A finite set of nonconstant, sign-normalized polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolySet {
    elems: BTreeSet<Poly>,
}

impl PolySet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts the sign-normalized form of `p`. Constants are ignored.
    /// Returns whether the set changed.
    pub fn insert(&mut self, p: Poly) -> bool {
        if p.is_constant() {
            return false;
        }
        self.elems.insert(p.sign_normalized())
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.elems.contains(&p.clone().sign_normalized())
    }

    pub fn remove(&mut self, p: &Poly) -> bool {
        self.elems.remove(&p.clone().sign_normalized())
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Poly> + '_ {
        self.elems.iter()
    }

    /// Sorted union of the member variable sets.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.elems.iter().flat_map(|p| p.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn union(&self, other: &PolySet) -> PolySet {
        PolySet {
            elems: self.elems.union(&other.elems).cloned().collect(),
        }
    }

    pub fn extend<I: IntoIterator<Item = Poly>>(&mut self, it: I) {
        for p in it {
            self.insert(p);
        }
    }

    pub fn filter(&self, pred: impl Fn(&Poly) -> bool) -> PolySet {
        PolySet {
            elems: self.elems.iter().filter(|p| pred(p)).cloned().collect(),
        }
    }

    pub fn is_subset(&self, other: &PolySet) -> bool {
        self.elems.is_subset(&other.elems)
    }

    pub fn rename(&self, map: &dyn Fn(Var) -> Var) -> PolySet {
        self.iter().map(|p| p.rename(map)).collect()
    }

    /// Canonical text of every member, in set order.
    pub fn to_strings(&self, table: &VarTable) -> Vec<String> {
        self.iter().map(|p| p.display(table).to_string()).collect()
    }

    /// Product of all members (1 for the empty set).
    pub fn product(&self) -> Poly {
        self.iter().fold(Poly::one(), |acc, p| &acc * p)
    }
}

impl FromIterator<Poly> for PolySet {
    fn from_iter<I: IntoIterator<Item = Poly>>(iter: I) -> Self {
        let mut s = PolySet::new();
        s.extend(iter);
        s
    }
}

impl<'a> IntoIterator for &'a PolySet {
    type Item = &'a Poly;
    type IntoIter = std::collections::btree_set::Iter<'a, Poly>;
    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

impl IntoIterator for PolySet {
    type Item = Poly;
    type IntoIter = std::collections::btree_set::IntoIter<Poly>;
    fn into_iter(self) -> Self::IntoIter {
        self.elems.into_iter()
    }
}

/// How one input polynomial factors over a basis: `input = content · ∏ bᵉ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub content: BigInt,
    pub factors: Vec<(Poly, u32)>,
}

impl Witness {
    pub fn expand(&self) -> Poly {
        let mut acc = Poly::constant(self.content.clone());
        for (b, e) in &self.factors {
            acc = &acc * &b.pow(*e);
        }
        acc
    }
}

/// The relaxed finest squarefree basis: pairwise coprime, squarefree,
/// integer-primitive, sign-normalized nonconstant polynomials generating every
/// member of `a` up to an integer factor.
///
/// Full irreducible factorization is not attempted. Members are split by
/// recursive contents, squarefree decomposition, and factors linear in every
/// variable, then refined to a gcd-free family.
pub fn finest_basis(a: &PolySet) -> PolySet {
    finest_basis_of(a.iter())
}

pub fn finest_basis_of<'a, I: IntoIterator<Item = &'a Poly>>(polys: I) -> PolySet {
    let mut pieces: Vec<Poly> = Vec::new();
    for p in polys {
        if p.is_constant() {
            continue;
        }
        for c in split_contents(p) {
            let x = c.vars()[0];
            for (q, _) in squarefree_decomposition(&c, x) {
                pieces.extend(split_linear_factors(&q));
            }
        }
    }
    let mut refined: Vec<Poly> = Vec::new();
    for q in pieces {
        refine_insert(&mut refined, q);
    }
    refined.into_iter().map(|p| p.canonical()).collect()
}

/// Expresses `p` over `basis` by repeated exact division. `None` when the
/// cofactor left over is not an integer.
pub fn witness(p: &Poly, basis: &PolySet) -> Option<Witness> {
    if p.is_zero() {
        return None;
    }
    let pv = p.vars();
    let mut rest = p.clone();
    let mut factors = Vec::new();
    for b in basis {
        if !b.vars().iter().all(|v| pv.binary_search(v).is_ok()) {
            continue;
        }
        let mut e = 0;
        while let Some(q) = rest.exact_div(b) {
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((b.clone(), e));
        }
    }
    let content = rest.constant_value()?;
    Some(Witness { content, factors })
}

/// Splits off contents with respect to each variable until every piece is
/// primitive in each of its variables. Pieces are integer-primitive.
fn split_contents(p: &Poly) -> Vec<Poly> {
    let p = p.int_primitive();
    if p.is_constant() {
        return Vec::new();
    }
    for x in p.vars() {
        let c = content(&p, x);
        if !c.is_constant() {
            let rest = p.exact_div(&c).expect("content divides");
            let mut out = split_contents(&c);
            out.extend(split_contents(&rest));
            return out;
        }
    }
    vec![p]
}

/// Adds a squarefree piece to a pairwise coprime family of squarefree pieces,
/// splitting shared factors so the family stays pairwise coprime.
///
/// All pieces are primitive in each of their variables, so every irreducible
/// factor of a piece involves all of its variables. Two pieces with different
/// variable sets are therefore coprime without computing a gcd.
fn refine_insert(family: &mut Vec<Poly>, q: Poly) {
    let mut rest = q;
    let mut fresh: Vec<Poly> = Vec::new();
    for b in family.iter_mut() {
        if rest.is_constant() {
            break;
        }
        if b.is_constant() || b.vars() != rest.vars() {
            continue;
        }
        if modular_coprime(b, &rest) {
            continue;
        }
        let g = gcd(b, &rest);
        if g.is_constant() {
            continue;
        }
        *b = b.exact_div(&g).expect("gcd divides");
        rest = rest.exact_div(&g).expect("gcd divides");
        fresh.push(g);
    }
    family.retain(|b| !b.is_constant());
    family.extend(fresh);
    if !rest.is_constant() {
        family.push(rest);
    }
}

const MOD_P: u64 = (1u64 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD_P as u128) as u64
}

fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MOD_P {
        s - MOD_P
    } else {
        s
    }
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, MOD_P - 2)
}

fn reduce(c: &BigInt) -> u64 {
    let p = BigInt::from(MOD_P);
    let mut r = c % &p;
    if r < BigInt::zero() {
        r += &p;
    }
    r.try_into().expect("reduced residue fits")
}

/// Image of `f` in 𝔽_p[x] after fixing every other variable.
fn image(f: &Poly, x: Var, point: &dyn Fn(Var) -> u64) -> Vec<u64> {
    let mut out = vec![0u64; f.degree(x) as usize + 1];
    for (m, c) in f.terms() {
        let mut t = reduce(c);
        let mut e = 0;
        for &(v, k) in m.pairs() {
            if v == x {
                e = k as usize;
            } else {
                t = mulmod(t, powmod(point(v), k as u64));
            }
        }
        out[e] = addmod(out[e], t);
    }
    out
}

fn trim_mod(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim_mod(&mut a);
    trim_mod(&mut b);
    while !b.is_empty() {
        // a <- a mod b
        let inv = invmod(*b.last().unwrap());
        while a.len() >= b.len() {
            let factor = mulmod(*a.last().unwrap(), inv);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                let sub = mulmod(factor, bc);
                a[i + shift] = addmod(a[i + shift], MOD_P - sub);
            }
            trim_mod(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Sound coprimality filter for pieces primitive in every variable: a common
/// factor would involve `x` and keep its degree in the modular image whenever
/// the leading coefficients survive the evaluation.
fn modular_coprime(f: &Poly, g: &Poly) -> bool {
    let Some(&x) = f.vars().first() else {
        return true;
    };
    coprime_image(f, g, x)
}

/// True when the images of `f` and `g` in 𝔽_p[x] (other variables fixed) are
/// coprime and keep their degrees in `x`. Then no common factor of `f` and
/// `g` involves `x`.
pub(crate) fn coprime_image(f: &Poly, g: &Poly, x: Var) -> bool {
    let point = |v: Var| -> u64 { (v.0 as u64 + 3).wrapping_mul(0x9E37_79B9_7F4A_7C15) % MOD_P };
    let fi = image(f, x, &point);
    let gi = image(g, x, &point);
    if fi.last() == Some(&0) || gi.last() == Some(&0) {
        return false;
    }
    gcd_degree_mod(fi, gi) == 0
}
