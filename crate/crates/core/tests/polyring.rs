use chordcad::poly::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn v(i: u32) -> Poly {
    Poly::var(Var(i))
}

fn k(c: i64) -> Poly {
    Poly::constant(c)
}

fn parse(s: &str) -> Poly {
    let table = VarTable::from_names(["x1", "x2", "x3", "x4", "x5"]);
    chordcad::io::parse_poly(s, &table).unwrap()
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * &det(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// The j-th subresultant from its determinantal definition.
fn subresultant_by_minors(f: &Poly, g: &Poly, x: Var, j: usize) -> Poly {
    let fc = f.coeffs_in(x);
    let gc = g.coeffs_in(x);
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    let width = m + n - j;
    let mut rows: Vec<Vec<Poly>> = Vec::new();
    // row for x^s * p: coefficient of x^e sits in column (width - 1 - e)
    let push = |rows: &mut Vec<Vec<Poly>>, p: &[Poly], s: usize| {
        let mut row = vec![Poly::zero(); width];
        for (e, c) in p.iter().enumerate() {
            row[width - 1 - (e + s)] = c.clone();
        }
        rows.push(row);
    };
    for s in (0..n - j).rev() {
        push(&mut rows, &fc, s);
    }
    for s in (0..m - j).rev() {
        push(&mut rows, &gc, s);
    }
    let lead = width - j - 1;
    let mut acc = Poly::zero();
    for i in 0..=j {
        let mat: Vec<Vec<Poly>> = rows
            .iter()
            .map(|row| {
                let mut r: Vec<Poly> = row[..lead].to_vec();
                r.push(row[width - 1 - i].clone());
                r
            })
            .collect();
        let d = det(&mat);
        acc = &acc + &(&d * &Poly::monomial(1, Monomial::var_pow(x, i as u32)));
    }
    acc
}

fn sylvester_resultant(f: &Poly, g: &Poly, x: Var) -> Poly {
    subresultant_by_minors(f, g, x, 0)
}

#[test]
fn degree_examples() {
    assert_eq!(degree(&parse("x3^3 + x1"), Var(2)), Ok(3));
    assert_eq!(degree(&parse("x1 + x4"), Var(1)), Ok(0));
    assert_eq!(degree(&parse("x1*x3 - 1"), Var(0)), Ok(1));
    assert!(degree(&Poly::zero(), Var(0)).is_err());
}

#[test]
fn coefficient_examples() {
    assert_eq!(coeffs(&parse("x3^2 + x2"), Var(2)), vec![k(1), k(0), v(1)]);
    assert_eq!(coeffs(&parse("x2*x3 + 2*x3 + x1"), Var(2)), vec![parse("x2 + 2"), v(0)]);
    assert_eq!(coeffs(&k(5), Var(0)), vec![k(5)]);
    assert_eq!(lc(&parse("x2*x3 + 2*x3 + x1"), Var(2)), parse("x2 + 2"));
    assert_eq!(content(&parse("2*x1*x3 + 4*x1"), Var(2)), parse("2*x1"));
    assert_eq!(primitive_part(&parse("x3^2 + x2"), Var(2)), parse("x3^2 + x2"));
}

#[test]
fn resultant_examples() {
    assert_eq!(resultant(&parse("x1 + x4"), &parse("x2 + x4"), Var(3)), Ok(parse("x1 - x2")));
    let r = resultant(&parse("x3^2 + x2"), &parse("x3^3 + x1"), Var(2)).unwrap();
    assert_eq!(r, parse("x2^3 + x1^2"));
    let f = parse("x1^2*x2 + x2 - 3");
    assert!(resultant(&f, &f, Var(0)).unwrap().is_zero());
    assert!(resultant(&parse("x2 + 1"), &parse("x1 + 1"), Var(0)).is_err());
}

#[test]
fn discriminant_examples() {
    assert_eq!(discriminant_signed(&parse("x3^2 + x2"), Var(2)), Ok(parse("-4*x2")));
    assert_eq!(discriminant_signed(&parse("x3^3 + x1"), Var(2)), Ok(parse("-27*x1^2")));
    assert!(discriminant(&parse("x1^2 - 2*x1 + 1"), Var(0)).unwrap().is_zero());
    assert!(discriminant(&parse("x1 + x2"), Var(0)).is_err());
}

#[test]
fn subresultant_examples() {
    let f = parse("x3^3 + x1");
    let g = parse("x3^2 + x2");
    let chain = subresultant_chain(&f, &g, Var(2)).unwrap();
    assert_eq!(chain.len(), 4);
    assert_eq!(chain.last().unwrap().clone().sign_normalized(), parse("x2^3 + x1^2"));
    let lin = subresultant_chain(&f, &parse("x3 - x1"), Var(2)).unwrap();
    assert_eq!(lin.len(), 3);
    assert_eq!(lin[2], resultant_signed(&f, &parse("x3 - x1"), Var(2)).unwrap());
}

#[test]
fn subresultants_match_minors_on_defective_chain() {
    // degrees 5 and 4 with a gap in the remainder sequence
    let x = Var(0);
    let f = parse("x1^5 + x2*x1^3 + x1 + 1");
    let g = parse("x1^4 + x2*x1^2 + 2");
    let chain = subresultant_chain(&f, &g, x).unwrap();
    for j in 0..4 {
        assert_eq!(chain[2 + (3 - j)], subresultant_by_minors(&f, &g, x, j), "S_{j}");
    }
}

#[test]
fn squarefree_examples() {
    assert_eq!(squarefree_part(&parse("x1^2 - 2*x1 + 1")), parse("x1 - 1"));
    assert_eq!(squarefree_part(&parse("x1*x2")), parse("x1*x2"));
    assert_eq!(squarefree_part(&parse("x1^2*x2^3")), parse("x1*x2"));
}

#[test]
fn gcd_examples() {
    assert_eq!(gcd(&parse("x1^2 - 1"), &parse("x1 - 1")), parse("x1 - 1"));
    assert_eq!(gcd(&parse("x1 + x2"), &parse("x1 + x3")), k(1));
    assert_eq!(gcd(&parse("2*x1"), &parse("4*x1^2")), parse("2*x1"));
}

#[test]
fn finest_basis_examples() {
    let set = |xs: &[&str]| xs.iter().map(|s| parse(s)).collect::<PolySet>();
    assert_eq!(finest_basis(&set(&["(x1 - 1)^2*x2"])), set(&["x1 - 1", "x2"]));
    assert_eq!(finest_basis(&set(&["x1*x3 - 1"])), set(&["x1*x3 - 1"]));
    assert_eq!(finest_basis(&set(&["x1^2 - x2^2"])), set(&["x1 - x2", "x1 + x2"]));
}

fn nonzero_coeff() -> impl Strategy<Value = i64> {
    prop_oneof![-4i64..=-1, 1i64..=4]
}

fn arb_poly(nvars: u32, max_deg: u32) -> impl Strategy<Value = Poly> {
    let term = (nonzero_coeff(), prop::collection::vec(0..=max_deg, nvars as usize));
    (nonzero_coeff(), prop::collection::vec(term, 1..5)).prop_map(move |(c0, ts)| {
        let p = Poly::from_terms(ts.into_iter().filter_map(|(c, es)| {
            let total: u32 = es.iter().sum();
            if total > max_deg {
                return None;
            }
            let m = Monomial::from_pairs(es.iter().enumerate().map(|(i, &e)| (Var(i as u32), e)));
            Some((m, BigInt::from(c)))
        }));
        if p.is_zero() {
            Poly::constant(c0)
        } else {
            p
        }
    })
}

/// Random polynomial of positive degree in `x`.
fn arb_poly_in(x: Var, nvars: u32, max_deg: u32) -> impl Strategy<Value = Poly> {
    (arb_poly(nvars, max_deg - 1), nonzero_coeff(), 1..=max_deg).prop_map(move |(p, c, e)| {
        let lead = Poly::monomial(c, Monomial::var_pow(x, e));
        let q = &p + &lead;
        if q.degree(x) == 0 {
            lead
        } else {
            q
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn resultant_matches_sylvester_determinant(f in arb_poly_in(Var(0), 3, 4), g in arb_poly_in(Var(0), 3, 4)) {
        let x = Var(0);
        let fast = resultant_signed(&f, &g, x).unwrap();
        prop_assert_eq!(fast.clone(), sylvester_resultant(&f, &g, x));
        prop_assert!(!fast.contains_var(x));
    }

    #[test]
    fn subresultant_chain_matches_minors(f in arb_poly_in(Var(0), 2, 5), g in arb_poly_in(Var(0), 2, 5)) {
        let x = Var(0);
        let (mut f, mut g) = (f, g);
        if f.degree(x) < g.degree(x) {
            std::mem::swap(&mut f, &mut g);
        }
        let chain = subresultant_chain(&f, &g, x).unwrap();
        let n = g.degree(x) as usize;
        prop_assert_eq!(chain.len(), n + 2);
        for j in 0..n {
            prop_assert_eq!(&chain[2 + (n - 1 - j)], &subresultant_by_minors(&f, &g, x, j));
        }
        prop_assert_eq!(chain.last().unwrap(), &resultant_signed(&f, &g, x).unwrap());
    }

    #[test]
    fn elimination_removes_the_variable(f in arb_poly(3, 3), g in arb_poly(3, 3)) {
        let x = Var(1);
        let allowed: Vec<Var> = f.vars().into_iter().chain(g.vars()).filter(|&y| y != x).collect();
        if f.degree(x) >= 1 && g.degree(x) >= 1 {
            for s in subresultant_chain(&f, &g, x).unwrap().iter().skip(2) {
                for c in s.coeffs_in(x) {
                    prop_assert!(c.vars().iter().all(|y| allowed.contains(y)));
                }
            }
        }
        if f.degree(x) >= 2 {
            let d = discriminant(&f, x).unwrap();
            prop_assert!(d.vars().iter().all(|y| *y != x && f.vars().contains(y)));
        }
    }

    #[test]
    fn gcd_divides_both(f in arb_poly(3, 3), g in arb_poly(3, 3), h in arb_poly(3, 2)) {
        let a = &f * &h;
        let b = &g * &h;
        let d = gcd(&a, &b);
        prop_assert!(a.exact_div(&d).is_some());
        prop_assert!(b.exact_div(&d).is_some());
        prop_assert!(d.exact_div(&gcd(&h, &h)).is_some() || h.is_constant());
        if !f.is_constant() {
            prop_assert!(gcd(&f, &a).exact_div(&squarefree_part(&f)).is_some());
        }
    }

    #[test]
    fn basis_generates_inputs(fs in prop::collection::vec(arb_poly(3, 3), 1..4), h in arb_poly(3, 2)) {
        let mut set = PolySet::new();
        for f in &fs {
            set.insert(&(f * &h) * &h);
        }
        let basis = finest_basis(&set);
        let members: Vec<&Poly> = basis.iter().collect();
        for (i, a) in members.iter().enumerate() {
            prop_assert_eq!(squarefree_part(a), (*a).clone());
            prop_assert!(!a.is_constant());
            prop_assert_eq!(a.int_content(), BigInt::from(1));
            for b in &members[i + 1..] {
                prop_assert!(gcd(a, b).is_constant());
            }
        }
        let vars = set.vars();
        prop_assert!(basis.vars().iter().all(|v| vars.contains(v)));
        for f in &set {
            let w = witness(f, &basis);
            prop_assert!(w.is_some());
            prop_assert_eq!(w.unwrap().expand(), f.clone());
        }
    }
}
