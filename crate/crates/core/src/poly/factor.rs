//! Partial factorization: rational roots of integer polynomials and extraction of
//! factors that are linear in every variable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::poly::Poly;
use super::var::Var;

/// Upper limit on candidate affine root functions tried per root.
const MAX_COMBINATIONS: usize = 4096;
/// Upper limit on (numerator, denominator) pairs tested per univariate polynomial.
const MAX_ROOT_CANDIDATES: usize = 200_000;
const TRIAL_DIVISION_LIMIT: u64 = 100_000;

/// Distinct rational roots of `Σ p[i] xⁱ`, each as a reduced fraction.
///
/// Divisors are obtained by trial division up to a fixed bound; a leftover
/// cofactor is treated as prime, so roots needing its proper divisors may be
/// missed for coefficients with large prime factors.
pub fn rational_roots(p: &[BigInt]) -> Vec<BigRational> {
    let mut p: Vec<BigInt> = p.to_vec();
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    let mut roots = Vec::new();
    if p.len() <= 1 {
        return roots;
    }
    if p[0].is_zero() {
        roots.push(BigRational::zero());
        let k = p.iter().take_while(|c| c.is_zero()).count();
        p.drain(..k);
    }
    if p.len() <= 1 {
        return roots;
    }
    let a0 = p[0].abs();
    let an = p[p.len() - 1].abs();
    let num_divs = divisors(&a0);
    let den_divs = divisors(&an);
    let at_one: BigInt = p.iter().sum();
    let at_minus_one: BigInt = p
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .sum();
    let mut tested = 0usize;
    for w in &den_divs {
        for u in &num_divs {
            if !u.gcd(w).is_one() {
                continue;
            }
            for sign in [1i32, -1] {
                tested += 1;
                if tested > MAX_ROOT_CANDIDATES {
                    return roots;
                }
                let u = if sign > 0 { u.clone() } else { -u };
                // a root u/w forces (w - u) | p(1) and (w + u) | p(-1)
                let wm = w - &u;
                if !wm.is_zero() && !(&at_one % &wm).is_zero() {
                    continue;
                }
                let wp = w + &u;
                if !wp.is_zero() && !(&at_minus_one % &wp).is_zero() {
                    continue;
                }
                if eval_homogeneous(&p, &u, w).is_zero() {
                    roots.push(BigRational::new(u, w.clone()));
                }
            }
        }
    }
    roots
}

/// `Σ p[i] uⁱ w^(n−i)`, the numerator of `p(u/w)·wⁿ`.
fn eval_homogeneous(p: &[BigInt], u: &BigInt, w: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut wpow = BigInt::one();
    // Horner in u; c_i picks up w^(n-i) as the w-powers grow from the top
    for c in p.iter().rev() {
        acc = acc * u + c * &wpow;
        wpow *= w;
    }
    acc
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut m = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > m {
            break;
        }
        let mut e = 0;
        while (&m % &bd).is_zero() {
            m /= &bd;
            e += 1;
        }
        if e > 0 {
            primes.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for dv in &divs {
            let mut q = dv.clone();
            for _ in 0..=e {
                next.push(q.clone());
                q *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Splits a squarefree polynomial that is primitive in each of its variables into
/// factors linear in every variable plus one remaining cofactor. The product of
/// the returned list is `±q`; every entry is integer-primitive and sign-normalized.
pub fn split_linear_factors(q: &Poly) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut rest = q.canonical();
    while let Some(l) = find_linear_factor(&rest) {
        rest = rest.exact_div(&l).expect("factor divides").canonical();
        out.push(l);
        if rest.is_constant() {
            break;
        }
    }
    if !rest.is_constant() {
        out.push(rest);
    }
    out
}

fn find_linear_factor(q: &Poly) -> Option<Poly> {
    let vars = q.vars();
    if vars.is_empty() || vars.iter().any(|&v| q.degree(v) <= 1) {
        // primitive in every variable and linear in one of them: irreducible
        return None;
    }
    let x = *vars
        .iter()
        .min_by_key(|&&v| (q.degree(v), v))
        .expect("nonempty");
    let others: Vec<Var> = vars.iter().copied().filter(|&v| v != x).collect();
    let dx = q.degree(x);
    let lc = q.coeffs_in(x).pop().expect("nonzero");

    let base = base_point(&lc, &others)?;
    let roots0 = rational_roots(&univariate_at(q, x, &others, &base, None));
    if roots0.is_empty() {
        return None;
    }
    if others.is_empty() {
        return Some(linear_poly(x, &roots0[0], &[], &[], &[]));
    }
    let shifted_roots: Vec<Vec<BigRational>> = (0..others.len())
        .map(|j| rational_roots(&univariate_at(q, x, &others, &base, Some(j))))
        .collect();
    // bivariate restrictions: only y_j free
    let restrictions: Vec<Poly> = (0..others.len())
        .map(|j| {
            let mut r = q.clone();
            for (k, &y) in others.iter().enumerate() {
                if k != j {
                    r = r.substitute(y, &base[k]);
                }
            }
            r
        })
        .collect();
    debug_assert!(dx >= 2);
    for r0 in &roots0 {
        let mut slopes: Vec<Vec<BigRational>> = Vec::with_capacity(others.len());
        for j in 0..others.len() {
            let mut sj: Vec<BigRational> = Vec::new();
            for rj in &shifted_roots[j] {
                let s = rj - r0;
                let l = linear_poly(x, r0, &others[j..=j], &[s.clone()], &base[j..=j]);
                if restrictions[j].exact_div(&l).is_some() && !sj.contains(&s) {
                    sj.push(s);
                }
            }
            if sj.is_empty() {
                break;
            }
            slopes.push(sj);
        }
        if slopes.len() < others.len() {
            continue;
        }
        let total: usize = slopes.iter().map(|s| s.len()).product();
        if total > MAX_COMBINATIONS {
            continue;
        }
        let mut idx = vec![0usize; slopes.len()];
        loop {
            let chosen: Vec<BigRational> =
                idx.iter().enumerate().map(|(j, &k)| slopes[j][k].clone()).collect();
            let l = linear_poly(x, r0, &others, &chosen, &base);
            if q.exact_div(&l).is_some() {
                return Some(l);
            }
            // odometer increment
            let mut j = 0;
            while j < idx.len() {
                idx[j] += 1;
                if idx[j] < slopes[j].len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
            if j == idx.len() {
                break;
            }
        }
    }
    None
}

/// Integer point for `others` keeping the leading coefficient nonzero at the
/// point and at each unit shift.
fn base_point(lc: &Poly, others: &[Var]) -> Option<Vec<BigInt>> {
    for attempt in 0..32i64 {
        let base: Vec<BigInt> = (0..others.len() as i64)
            .map(|j| BigInt::from(((j * 5 + attempt * 3) % 13) - 4))
            .collect();
        let ok = (0..=others.len()).all(|shift| {
            let pt = |v: Var| {
                let k = others.iter().position(|&y| y == v).expect("coefficient var");
                let mut b = base[k].clone();
                if shift == k + 1 {
                    b += 1;
                }
                b
            };
            !lc.eval_all(&pt).is_zero()
        });
        if ok {
            return Some(base);
        }
    }
    None
}

/// Coefficients (low first) of `q` with `others` fixed at `base`, optionally
/// shifting coordinate `shift` by one.
fn univariate_at(
    q: &Poly,
    x: Var,
    others: &[Var],
    base: &[BigInt],
    shift: Option<usize>,
) -> Vec<BigInt> {
    let mut r = q.clone();
    for (k, &y) in others.iter().enumerate() {
        let mut v = base[k].clone();
        if shift == Some(k) {
            v += 1;
        }
        r = r.substitute(y, &v);
    }
    r.coeffs_in(x)
        .into_iter()
        .map(|c| c.constant_value().expect("all other variables substituted"))
        .collect()
}

/// Integer-primitive, sign-normalized form of `x − r0 − Σ s_j (y_j − v_j)`.
fn linear_poly(
    x: Var,
    r0: &BigRational,
    ys: &[Var],
    slopes: &[BigRational],
    base: &[BigInt],
) -> Poly {
    let mut constant = -r0.clone();
    for (s, v) in slopes.iter().zip(base) {
        constant += s * BigRational::from_integer(v.clone());
    }
    let mut den = constant.denom().clone();
    for s in slopes {
        den = den.lcm(s.denom());
    }
    let scale = |r: &BigRational| -> BigInt { (r * BigRational::from_integer(den.clone())).to_integer() };
    let mut terms = vec![(Monomial::var(x), den.clone())];
    for (s, &y) in slopes.iter().zip(ys) {
        terms.push((Monomial::var(y), -scale(s)));
    }
    terms.push((Monomial::one(), scale(&constant)));
    Poly::from_terms(terms).canonical()
}
