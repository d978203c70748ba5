use super::poly::Poly;
use super::univ::{self, UPoly};
use super::var::Var;
use super::PolyError;

/// Sylvester resultant of `f` and `g` with respect to `x`, with its true sign
/// (the determinant of the Sylvester matrix with `f`'s rows first).
pub fn resultant_signed(f: &Poly, g: &Poly, x: Var) -> Result<Poly, PolyError> {
    let (df, dg) = (f.degree(x), g.degree(x));
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial("resultant"));
    }
    if df == 0 || dg == 0 {
        return Err(PolyError::DegreeTooLow {
            op: "resultant",
            var: x,
            needed: 1,
            found: df.min(dg),
        });
    }
    Ok(subresultant_resultant(f.coeffs_in(x), g.coeffs_in(x)))
}

/// Sylvester resultant, sign-normalized.
pub fn resultant(f: &Poly, g: &Poly, x: Var) -> Result<Poly, PolyError> {
    resultant_signed(f, g, x).map(Poly::sign_normalized)
}

/// Resultant by the subresultant algorithm on dense views. Both inputs have
/// positive degree.
fn subresultant_resultant(a: UPoly, b: UPoly) -> Poly {
    let mut a = univ::trim(a);
    let mut b = univ::trim(b);
    let mut s = 1i32;
    if a.len() < b.len() {
        if univ::deg(&a) % 2 == 1 && univ::deg(&b) % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let (da, db) = (univ::deg(&a), univ::deg(&b));
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = univ::prem(&a, &b);
        if univ::is_zero(&r) {
            return Poly::zero();
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = univ::exact_div(&r, &divisor).expect("subresultant division is exact");
        g = univ::lc(&a).clone();
        h = step_h(&h, &g, delta);
        if univ::deg(&b) == 0 {
            let da = univ::deg(&a) as u32;
            // h^(1 - da) * lc(b)^da
            let num = b[0].pow(da);
            let res = if da == 0 {
                &num * &h
            } else {
                num.exact_div(&h.pow(da - 1)).expect("exact")
            };
            return if s < 0 { -res } else { res };
        }
    }
}

/// `h^(1 − δ) · g^δ` with exact division.
fn step_h(h: &Poly, g: &Poly, delta: u32) -> Poly {
    match delta {
        0 => h.clone(),
        1 => g.clone(),
        _ => g
            .pow(delta)
            .exact_div(&h.pow(delta - 1))
            .expect("subresultant division is exact"),
    }
}

/// Discriminant `(−1)^(s(s−1)/2) · res(f, ∂f/∂x) / lc(f)` where `s = deg(f, x)`.
/// Returned as computed (not sign-normalized); may be zero.
pub fn discriminant_signed(f: &Poly, x: Var) -> Result<Poly, PolyError> {
    let s = f.degree(x);
    if s < 2 {
        return Err(PolyError::DegreeTooLow {
            op: "discriminant",
            var: x,
            needed: 2,
            found: s,
        });
    }
    let r = resultant_signed(f, &f.derivative(x), x)?;
    let lc = f.coeffs_in(x).pop().expect("nonzero");
    let q = r.exact_div(&lc).expect("leading coefficient divides the resultant");
    let sign_exp = (s as u64) * (s as u64 - 1) / 2;
    Ok(if sign_exp % 2 == 1 { -q } else { q })
}

/// Discriminant, sign-normalized when nonzero.
pub fn discriminant(f: &Poly, x: Var) -> Result<Poly, PolyError> {
    discriminant_signed(f, x).map(Poly::sign_normalized)
}

/// The subresultant chain `[f, g, S_{n−1}, …, S_0]` where `deg(f,x) ≥ deg(g,x) = n`
/// (inputs are swapped when needed). `S_j` is the `j`-th Sylvester subresultant;
/// `S_0` is the resultant. Entries are exact, not sign-normalized.
pub fn subresultant_chain(f: &Poly, g: &Poly, x: Var) -> Result<Vec<Poly>, PolyError> {
    let (mut f, mut g) = (f, g);
    if f.degree(x) < g.degree(x) {
        std::mem::swap(&mut f, &mut g);
    }
    let (m, n) = (f.degree(x) as usize, g.degree(x) as usize);
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial("subresultant chain"));
    }
    if n == 0 {
        return Err(PolyError::DegreeTooLow {
            op: "subresultant chain",
            var: x,
            needed: 1,
            found: 0,
        });
    }
    // subres[j] holds S_j for j < n
    let mut subres: Vec<Poly> = vec![Poly::zero(); n];

    // Subresultant PRS F_1 = f, F_2 = g, F_{i+2} = prem(F_i, F_{i+1}) / beta_i.
    let mut prev = univ::trim(f.coeffs_in(x));
    let mut cur = univ::trim(g.coeffs_in(x));
    let mut delta = (m - n) as u32;
    let mut beta = if delta % 2 == 0 { -Poly::one() } else { Poly::one() };
    let mut psi = -Poly::one();
    loop {
        let r = univ::prem(&prev, &cur);
        if univ::is_zero(&r) {
            break;
        }
        let next = univ::exact_div(&r, &beta).expect("subresultant division is exact");
        let n_cur = univ::deg(&cur);
        let n_next = univ::deg(&next);
        // F_{i+2} = S_{n_{i+1} - 1}
        subres[n_cur - 1] = Poly::from_coeffs_in(x, &next);
        let d_next = (n_cur - n_next) as u32;
        // psi_{i+1} from delta_i and lc(F_{i+1})
        let lc_cur = univ::lc(&cur).clone();
        psi = step_psi(&psi, &lc_cur, delta);
        if d_next > 1 {
            // the regular subresultant at the bottom of a defective block
            let lc_next = -univ::lc(&next);
            let num = lc_next.pow(d_next - 1);
            let den = psi.pow(d_next - 1);
            let scaled = univ::exact_div(&univ::scale(&next, &num), &den)
                .expect("regular subresultant scaling is exact");
            subres[n_next] = Poly::from_coeffs_in(x, &scaled);
        }
        if n_next == 0 {
            break;
        }
        prev = cur;
        cur = next;
        delta = d_next;
        let lc_prev = univ::lc(&prev).clone();
        beta = -(&lc_prev * &psi.pow(delta));
    }
    let mut chain = Vec::with_capacity(n + 2);
    chain.push(f.clone());
    chain.push(g.clone());
    for j in (0..n).rev() {
        chain.push(subres[j].clone());
    }
    Ok(chain)
}

/// `(−lc)^δ · ψ^(1−δ)`.
fn step_psi(psi: &Poly, lc: &Poly, delta: u32) -> Poly {
    let neg = -lc;
    match delta {
        0 => psi.clone(),
        1 => neg,
        _ => neg
            .pow(delta)
            .exact_div(&psi.pow(delta - 1))
            .expect("subresultant division is exact"),
    }
}
