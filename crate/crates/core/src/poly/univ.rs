//! Dense univariate views: a polynomial in one distinguished variable with
//! multivariate coefficients, stored low degree first.

use super::poly::Poly;

pub(crate) type UPoly = Vec<Poly>;

pub(crate) fn trim(mut a: UPoly) -> UPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub(crate) fn is_zero(a: &[Poly]) -> bool {
    a.iter().all(|c| c.is_zero())
}

/// Degree of a trimmed, nonzero dense polynomial.
pub(crate) fn deg(a: &[Poly]) -> usize {
    debug_assert!(!a.is_empty());
    a.len() - 1
}

pub(crate) fn lc(a: &[Poly]) -> &Poly {
    a.last().expect("nonzero dense polynomial")
}

pub(crate) fn scale(a: &[Poly], k: &Poly) -> UPoly {
    trim(a.iter().map(|c| c * k).collect())
}

pub(crate) fn exact_div(a: &[Poly], k: &Poly) -> Option<UPoly> {
    a.iter().map(|c| c.exact_div(k)).collect()
}

/// Pseudo-remainder `lc(b)^(deg a − deg b + 1) · a mod b`.
pub(crate) fn prem(a: &[Poly], b: &[Poly]) -> UPoly {
    let db = deg(b);
    let lb = lc(b).clone();
    if a.len() <= db {
        return a.to_vec();
    }
    let mut e = a.len() - db;
    let mut r: UPoly = a.to_vec();
    while !r.is_empty() && r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        let mut next: UPoly = r.iter().map(|c| c * &lb).collect();
        for (i, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            next[i + shift] = &next[i + shift] - &t;
        }
        next.pop();
        r = trim(next);
        e -= 1;
    }
    if e > 0 && !r.is_empty() {
        let f = lb.pow(e as u32);
        r = scale(&r, &f);
    }
    r
}
