use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::basis::coprime_image;
use super::poly::Poly;
use super::univ::{self, UPoly};
use super::var::Var;

/// Greatest common divisor in ℤ[x̄], sign-normalized.
///
/// The integer content is kept, so `gcd(2*x1, 4*x1^2) = 2*x1`. Computed with a
/// recursive primitive polynomial remainder sequence.
pub fn gcd(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() {
        return g.clone().sign_normalized();
    }
    if g.is_zero() {
        return f.clone().sign_normalized();
    }
    if f.is_constant() || g.is_constant() {
        return Poly::constant(f.int_content().gcd(&g.int_content()));
    }
    if f == g || f == &-g {
        return f.clone().sign_normalized();
    }
    let fv = f.vars();
    let gv = g.vars();
    let Some(&x) = fv.iter().find(|v| gv.binary_search(v).is_ok()) else {
        return Poly::constant(f.int_content().gcd(&g.int_content()));
    };
    if g.exact_div(f).is_some() {
        return f.clone().sign_normalized();
    }
    if f.exact_div(g).is_some() {
        return g.clone().sign_normalized();
    }
    let cf = content(f, x);
    let cg = content(g, x);
    let c = gcd(&cf, &cg);
    let mut a = divide_coeffs(&f.coeffs_in(x), &cf);
    let mut b = divide_coeffs(&g.coeffs_in(x), &cg);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    // Both sides are primitive in x, so a gcd free of x is a unit.
    if coprime_image(&Poly::from_coeffs_in(x, &a), &Poly::from_coeffs_in(x, &b), x) {
        return c;
    }
    loop {
        let r = univ::prem(&a, &b);
        if univ::is_zero(&r) {
            break;
        }
        if r.len() == 1 {
            return c;
        }
        a = b;
        b = primitive_dense(r);
    }
    let p = Poly::from_coeffs_in(x, &primitive_dense(b));
    (&c * &p).sign_normalized()
}

pub fn gcd_all<'a, I: IntoIterator<Item = &'a Poly>>(polys: I) -> Poly {
    let mut items: Vec<&Poly> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    items.sort_by_key(|p| (p.num_terms(), p.total_degree()));
    let mut acc = Poly::zero();
    let mut int_only: Option<BigInt> = None;
    for p in items {
        if let Some(k) = &mut int_only {
            *k = k.gcd(&p.int_content());
            if k.is_one() {
                break;
            }
            continue;
        }
        acc = gcd(&acc, p);
        if acc.is_constant() {
            int_only = acc.constant_value();
        }
    }
    match int_only {
        Some(k) => Poly::constant(k),
        None => acc,
    }
}

/// Content with respect to `x`: the gcd of the coefficients in `x`, sign-normalized.
/// For `x` absent this is `f` itself (sign-normalized).
pub fn content(f: &Poly, x: Var) -> Poly {
    if f.is_zero() {
        return Poly::zero();
    }
    if !f.contains_var(x) {
        return f.clone().sign_normalized();
    }
    let cs = f.coeffs_in(x);
    gcd_all(cs.iter())
}

/// `f / content(f, x)`, sign-normalized so that `f = ±content · primitive_part`.
pub fn primitive_part(f: &Poly, x: Var) -> Poly {
    if f.is_zero() {
        return Poly::zero();
    }
    let c = content(f, x);
    f.exact_div(&c).expect("content divides").sign_normalized()
}

fn divide_coeffs(a: &[Poly], c: &Poly) -> UPoly {
    univ::exact_div(a, c).expect("content divides every coefficient")
}

fn primitive_dense(a: UPoly) -> UPoly {
    let c = gcd_all(a.iter());
    if c.is_one() || c.is_zero() {
        return a;
    }
    divide_coeffs(&a, &c)
}

/// Squarefree part: product of the distinct irreducible factors, integer-primitive.
pub fn squarefree_part(f: &Poly) -> Poly {
    if f.is_constant() {
        return Poly::one();
    }
    let f = f.int_primitive();
    let x = f.vars()[0];
    let c = content(&f, x);
    let p = f.exact_div(&c).expect("content divides");
    let dp = p.derivative(x);
    let h = gcd(&p, &dp);
    let s = p.exact_div(&h).expect("gcd divides");
    (&squarefree_part(&c) * &s).canonical()
}

/// Squarefree decomposition of `f` with respect to `x` (Yun). `f` must be
/// primitive in `x`. Returns `(factor, multiplicity)` pairs with nonconstant,
/// pairwise coprime, squarefree factors whose product with multiplicities is
/// `±f`.
pub fn squarefree_decomposition(f: &Poly, x: Var) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if !f.contains_var(x) {
        return out;
    }
    let df = f.derivative(x);
    let a0 = gcd(f, &df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let c = df.exact_div(&a0).expect("gcd divides derivative");
    let mut d = &c - &b.derivative(x);
    let mut i = 1u32;
    while b.contains_var(x) {
        let a = gcd(&b, &d);
        let nb = b.exact_div(&a).expect("gcd divides");
        let nc = d.exact_div(&a).expect("gcd divides");
        if a.contains_var(x) {
            out.push((a.canonical(), i));
        }
        d = &nc - &nb.derivative(x);
        b = nb;
        i += 1;
    }
    out
}
