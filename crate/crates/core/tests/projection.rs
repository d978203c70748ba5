mod common;

use chordcad::chordal::*;
use chordcad::io::{parse_poly, parse_system};
use chordcad::poly::{finest_basis, Poly, PolySet, Var, VarTable};
use chordcad::projection::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const LINEAR_CUBIC: &str = "x1 + x4\nx2 + x4\nx3^2 + x2\nx3^3 + x1\nx5 + x2\nx5 + x1 + x2";
const CHAIN4: &str = "x1 + x2 + 2\nx2*x3 + 2*x3 + x1\nx3*x4 + x2*x4 + x3 - 1\nx4 + x2";

fn table(n: usize) -> VarTable {
    VarTable::from_names((1..=n).map(|i| format!("x{i}")))
}

fn set(table: &VarTable, polys: &[&str]) -> PolySet {
    polys.iter().map(|s| parse_poly(s, table).unwrap()).collect()
}

fn ordering(text: &str, table: &VarTable) -> Ordering {
    Ordering::parse(text, table).unwrap()
}

fn system(text: &str) -> (VarTable, PolySet) {
    let s = parse_system(text).unwrap();
    let p = s.set();
    (s.table, p)
}

/// Product of a set's members, reduced to its primitive sign-normalized form.
fn product_class(s: &PolySet) -> Poly {
    s.product().canonical()
}

#[test]
fn mccallum_example_trace() {
    let (t, f) = system(LINEAR_CUBIC);
    let tr = projection_procedure(&f, &ordering("x4>x5>x3>x2>x1", &t), Operator::McCallum).unwrap();
    let want = [
        set(&t, &["x1", "x2", "x3^2+x2", "x3^3+x1", "x5+x2", "x5+x1+x2", "x1-x2"]),
        set(&t, &["x3^2+x2", "x3^3+x1", "x1-x2", "x1+x2", "x1", "x2"]),
        set(&t, &["x1-x2", "x1+x2", "x1", "x2", "x2^3+x1^2"]),
        set(&t, &["x1", "x1+1", "x1-1"]),
    ];
    assert_eq!(tr.levels[0], f);
    for (k, w) in want.iter().enumerate() {
        assert_eq!(&tr.levels[k + 1], w, "level {}", k + 1);
    }
    assert_eq!(tr.counts, vec![6, 7, 6, 5, 3]);
    assert_eq!(proj_count(&tr), 21);
}

#[test]
fn mccallum_single_steps() {
    let t = table(5);
    let (_, f) = system(LINEAR_CUBIC);
    let first = finest_basis(&proj_mccallum(&f, Var(3)).unwrap());
    assert_eq!(first, set(&t, &["x1", "x2", "x3^2+x2", "x3^3+x1", "x5+x2", "x5+x1+x2", "x1-x2"]));

    let f2 = set(&t, &["x3^2+x2", "x3^3+x1", "x1-x2", "x1+x2", "x1", "x2"]);
    let f3 = finest_basis(&proj_mccallum(&f2, Var(2)).unwrap());
    assert_eq!(f3, set(&t, &["x1-x2", "x1+x2", "x1", "x2", "x2^3+x1^2"]));

    let a = set(&t, &["x1*x2 + 1"]);
    assert_eq!(proj_mccallum(&a, Var(0)).unwrap(), set(&t, &["x2"]));

    assert_eq!(proj_mccallum(&a, Var(4)), Err(ProjectionError::VarNotPresent(Var(4))));
    let uni = set(&t, &["x1^2 - 2"]);
    assert_eq!(proj_mccallum(&uni, Var(0)), Err(ProjectionError::TooFewVariables(1)));
}

#[test]
fn brown_single_steps() {
    let t = table(3);
    let a = set(&t, &["x1^2 + x2"]);
    assert_eq!(proj_brown(&a, Var(0)).unwrap(), set(&t, &["4*x2"]));
    assert_eq!(finest_basis(&proj_brown(&a, Var(0)).unwrap()), set(&t, &["x2"]));
    // nothing contains x3, so only contents of the members survive: the members themselves
    let b = set(&t, &["x1 + x2", "x1 - x2"]);
    assert_eq!(proj_brown(&b.union(&set(&t, &["x3*x1 + 1"])), Var(2)).unwrap(), {
        let mut s = b.clone();
        s.insert(parse_poly("x1", &t).unwrap());
        s
    });
}

#[test]
fn mccallum_random_ordering_product() {
    let (t, f) = system(LINEAR_CUBIC);
    let tr = projection_procedure(&f, &ordering("x1>x2>x3>x4>x5", &t), Operator::McCallum).unwrap();
    let expected = set(
        &t,
        &[
            "x5", "x5-1", "x5+1", "x5-2", "x5-8", "4*x5-1", "8*x5-1", "27*x5-4", "3*x5-1",
            "x5^2+x5-1", "x5^2+x5+1", "x5^2-x5+1", "x5^2-3*x5+9", "x5^3-x5^2+2*x5-1",
            "x5^5-3*x5^4+3*x5^3+5*x5^2+2*x5-1", "x5^4+x5^3+x5^2+x5+1",
            "x5^5+4*x5^3-x5^2+2*x5-1", "-x5^3+4*x5^2-3*x5+1",
            "x5^5-3*x5^4-6*x5^3-19*x5^2+9*x5-1",
        ],
    );
    assert_eq!(expected.len(), 19);
    assert_eq!(product_class(tr.last()), product_class(&expected));
    assert_eq!(tr.last(), &expected);
}

#[test]
fn brown_example_trace() {
    let (t, f) = system(CHAIN4);
    let tr = projection_procedure(&f, &ordering("x1>x2>x3>x4", &t), Operator::Brown).unwrap();
    assert_eq!(tr.last(), &set(&t, &["x4", "x4+1", "x4-1", "x4-2"]));
    let c = proj_count(&tr);
    assert!(c == 12 || c == 13, "#proj {c}");
}

#[test]
fn brown_random_ordering_product() {
    let (t, f) = system(CHAIN4);
    let tr = projection_procedure(&f, &ordering("x2>x3>x4>x1", &t), Operator::Brown).unwrap();
    let expected = set(
        &t,
        &[
            "x1", "5+4*x1", "9+8*x1", "25+24*x1", "x1+1", "x1+2", "x1+3", "3*x1+4", "2*x1+5",
            "32*x1^2+56*x1+25", "20*x1^2+44*x1+25", "13*x1^2+34*x1+25", "4*x1^3+24*x1^2+44*x1+25",
            "4*x1^3-71*x1^2-172*x1-100", "x1^2+4*x1+5", "x1^4+7*x1^3+21*x1^2+34*x1+25",
        ],
    );
    assert_eq!(tr.last(), &expected);
}

#[test]
fn trivial_traces() {
    let (t, f) = system("x1^2 - 2");
    let tr = projection_procedure(&f, &ordering("x1", &t), Operator::McCallum).unwrap();
    assert_eq!(tr.levels.len(), 1);
    assert_eq!(proj_count(&tr), 0);
    assert!(check_preservation(&tr, &associated_graph(&f)));

    let (t, f) = system("x1 + x2");
    assert_eq!(
        projection_procedure(&f, &ordering("x1", &t), Operator::Brown),
        Err(ProjectionError::OrderingMismatch)
    );
}

#[test]
fn table_classes() {
    let (t, f) = system(LINEAR_CUBIC);
    let mut counts = Vec::new();
    for rest in [["x1", "x2", "x3"], ["x1", "x3", "x2"], ["x2", "x1", "x3"], ["x2", "x3", "x1"], ["x3", "x1", "x2"], ["x3", "x2", "x1"]] {
        let o = ordering(&format!("x4>x5>{}", rest.join(">")), &t);
        counts.push(proj_count(&projection_procedure(&f, &o, Operator::McCallum).unwrap()));
    }
    counts.sort();
    assert_eq!(counts, vec![20, 20, 21, 21, 21, 21]);
}

#[test]
fn preservation_negative_control() {
    let (t, f) = system(LINEAR_CUBIC);
    let g = associated_graph(&f);
    let peo = ordering("x4>x5>x3>x2>x1", &t);
    assert!(verify_peo(&g, &peo).unwrap());
    let good = projection_procedure(&f, &peo, Operator::McCallum).unwrap();
    assert!(check_preservation(&good, &g));

    let bad_order = ordering("x1>x2>x3>x4>x5", &t);
    assert!(!verify_peo(&g, &bad_order).unwrap());
    let bad = projection_procedure(&f, &bad_order, Operator::McCallum).unwrap();
    assert!(!check_preservation(&bad, &g));
}

#[test]
fn tree_projection_examples() {
    let (t, f) = system(LINEAR_CUBIC);
    let g = associated_graph(&f);
    let o = ordering("x4>x5>x3>x2>x1", &t);
    let tree = elimination_tree(&g, &o).unwrap();
    for op in [Operator::McCallum, Operator::Brown] {
        let tt = tree_projection(&f, &tree, op).unwrap();
        let tr = projection_procedure(&f, &o, op).unwrap();
        assert!(tp_equals_pi(&tt, &tr).unwrap(), "{op}");
        // x4 is a leaf: its set is the members whose largest variable is x4
        assert_eq!(tt.sets[&Var(3)], set(&t, &["x1+x4", "x2+x4"]));

        let mut perturbed = tt.clone();
        perturbed.sets.get_mut(&Var(0)).unwrap().insert(parse_poly("x1 + 7", &t).unwrap());
        assert!(!tp_equals_pi(&perturbed, &tr).unwrap());
    }

    // single-node tree
    let (t1, f1) = system("x1^2 - 2\nx1 + 3");
    let o1 = ordering("x1", &t1);
    let g1 = associated_graph(&f1);
    let tree1 = elimination_tree(&g1, &o1).unwrap();
    let tt1 = tree_projection(&f1, &tree1, Operator::McCallum).unwrap();
    assert_eq!(tt1.sets[&Var(0)], f1);

    // empty input
    let empty = PolySet::new();
    let o0 = Ordering::new(vec![]).unwrap();
    let tree0 = elimination_tree(&VarGraph::new(), &o0).unwrap();
    let tt0 = tree_projection(&empty, &tree0, Operator::Brown).unwrap();
    let tr0 = projection_procedure(&empty, &o0, Operator::Brown).unwrap();
    assert!(tp_equals_pi(&tt0, &tr0).unwrap());

    let tr_other = projection_procedure(&f, &o, Operator::Brown).unwrap();
    let tt_mc = tree_projection(&f, &tree, Operator::McCallum).unwrap();
    assert_eq!(tp_equals_pi(&tt_mc, &tr_other), Err(ProjectionError::TraceMismatch));
}

#[test]
fn preservation_on_random_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..40 {
        let a = common::random_system(&mut rng);
        let g0 = associated_graph(&a);
        let o = min_fill_ordering(&g0);
        let g = elimination_game(&g0, &o).unwrap().graph;
        let tree = elimination_tree(&g, &o).unwrap();
        for op in [Operator::McCallum, Operator::Brown] {
            let tr = projection_procedure(&a, &o, op).unwrap();
            assert!(check_preservation(&tr, &g), "case {case} {op}");
            for k in 1..tr.levels.len() {
                let x = tr.eliminated(k).unwrap();
                let prev: Vec<Var> = tr.levels[k - 1].vars();
                assert!(tr.levels[k].vars().iter().all(|v| *v != x && prev.contains(v)));
            }
            let tt = tree_projection(&a, &tree, op).unwrap();
            assert!(tp_equals_pi(&tt, &tr).unwrap(), "case {case} {op}");
        }
    }
}

#[test]
fn proj_count_invariant_under_renaming() {
    let (t, f) = system(LINEAR_CUBIC);
    let o = ordering("x4>x5>x3>x2>x1", &t);
    let perm = |v: Var| Var((v.0 + 2) % 5);
    let base = proj_count(&projection_procedure(&f, &o, Operator::McCallum).unwrap());
    let renamed = proj_count(&projection_procedure(&f.rename(&perm), &o.rename(&perm), Operator::McCallum).unwrap());
    assert_eq!(base, renamed);
}
