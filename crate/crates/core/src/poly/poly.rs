use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::var::{Var, VarTable};

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted in decreasing graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn var(v: Var) -> Self {
        Poly {
            terms: vec![(Monomial::var(v), BigInt::one())],
        }
    }

    pub fn monomial<T: Into<BigInt>>(c: T, m: Monomial) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Collects arbitrary terms, combining like monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<(Monomial, BigInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    /// Builds from terms already sorted in decreasing order without duplicates.
    fn from_sorted_unchecked(terms: Vec<(Monomial, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// True for the zero polynomial and nonzero integers.
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// The integer value of a constant polynomial.
    pub fn constant_value(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Leading term under graded lex.
    pub fn leading(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(BigInt::zero)
    }

    /// Sorted, deduplicated set of variables occurring in the polynomial.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.iter().flat_map(|(m, _)| m.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn contains_var(&self, x: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.degree(x) > 0)
    }

    pub fn degree(&self, x: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree(x)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|(m, _)| m.total_degree()).unwrap_or(0)
    }

    pub fn max_coeff_bits(&self) -> u64 {
        self.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly::from_sorted_unchecked(
            self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        )
    }

    /// Exact division by an integer; `None` if some coefficient is not divisible.
    pub fn div_int(&self, k: &BigInt) -> Option<Poly> {
        if k.is_zero() {
            return None;
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            terms.push((m.clone(), q));
        }
        Some(Poly { terms })
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact division `self / d`, or `None` when `d` does not divide `self` in ℤ[x̄].
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some(k) = d.constant_value() {
            return self.div_int(&k);
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (dm, dc) = d.terms[0].clone();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.first() {
            let qm = rm.div(&dm)?;
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let t = Poly::monomial(qc.clone(), qm.clone());
            rem = &rem - &(&t * d);
            quot.push((qm, qc));
        }
        // quotient terms arrive in decreasing order
        Some(Poly::from_sorted_unchecked(quot))
    }

    /// Coefficients with respect to `x`, indexed by power (`result[i]` multiplies `x^i`).
    pub fn coeffs_in(&self, x: Var) -> Vec<Poly> {
        if self.is_zero() {
            return vec![Poly::zero()];
        }
        let deg = self.degree(x) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(x);
            buckets[e as usize].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                ts.sort_by(|a, b| b.0.cmp(&a.0));
                Poly::from_sorted_unchecked(ts)
            })
            .collect()
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs_in(x: Var, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (i, c) in coeffs.iter().enumerate() {
            let xm = Monomial::var_pow(x, i as u32);
            for (m, k) in &c.terms {
                terms.push((m.mul(&xm), k.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    pub fn derivative(&self, x: Var) -> Poly {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(x);
            if e > 0 {
                terms.push((rest.mul(&Monomial::var_pow(x, e - 1)), c * BigInt::from(e)));
            }
        }
        Poly::from_terms(terms)
    }

    /// Substitutes the integer `value` for `x`.
    pub fn substitute(&self, x: Var, value: &BigInt) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(x);
            terms.push((rest, c * num_traits::pow(value.clone(), e as usize)));
        }
        Poly::from_terms(terms)
    }

    /// Substitutes a polynomial for `x`.
    pub fn compose(&self, x: Var, value: &Poly) -> Poly {
        let coeffs = self.coeffs_in(x);
        let mut acc = Poly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Nonnegative gcd of all integer coefficients (0 for the zero polynomial).
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the integer content.
    pub fn int_primitive(&self) -> Poly {
        let g = self.int_content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        self.div_int(&g).expect("content divides every coefficient")
    }

    pub fn is_sign_normalized(&self) -> bool {
        self.terms.first().map(|t| t.1.is_positive()).unwrap_or(true)
    }

    /// Multiplies by −1 if the leading coefficient is negative.
    pub fn sign_normalized(self) -> Poly {
        if self.is_sign_normalized() {
            self
        } else {
            -self
        }
    }

    /// Integer-primitive, sign-normalized representative of `±k·self`.
    pub fn canonical(&self) -> Poly {
        self.int_primitive().sign_normalized()
    }

    pub fn rename(&self, map: &dyn Fn(Var) -> Var) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.rename(map), c.clone())))
    }

    /// Evaluates at integer points for every variable, via `point(var)`.
    pub fn eval_all(&self, point: &dyn Fn(Var) -> BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                t *= num_traits::pow(point(v), e as usize);
            }
            acc += t;
        }
        acc
    }

    pub fn display<'a>(&'a self, table: &'a VarTable) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, table }
    }

    fn add_sorted(a: &[(Monomial, BigInt)], b: &[(Monomial, BigInt)], negate_b: bool) -> Poly {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_b { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly::from_sorted_unchecked(out)
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            let o = a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        Poly::add_sorted(&self.terms, &rhs.terms, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        Poly::add_sorted(&self.terms, &rhs.terms, true)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return Poly::from_sorted_unchecked(
                self.terms.iter().map(|(n, k)| (n.mul(m), k * c)).collect(),
            );
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        Poly::from_map(acc)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for t in &mut self.terms {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -self.clone()
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(c)
    }
}

/// Canonical text: graded-lex term order, explicit `*` and `^`.
pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    table: &'a VarTable,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut first = true;
            if !abs.is_one() || m.is_one() {
                write!(f, "{}", abs)?;
                first = false;
            }
            for &(v, e) in m.pairs() {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.table.name(v))?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}
