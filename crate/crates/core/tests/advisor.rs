use chordcad::advisor::*;
use chordcad::chordal::*;
use chordcad::io::parse_system;
use chordcad::poly::{PolySet, Var, VarTable};
use chordcad::projection::Operator;
use num_rational::Ratio;

const LINEAR_CUBIC: &str = "x1 + x4\nx2 + x4\nx3^2 + x2\nx3^3 + x1\nx5 + x2\nx5 + x1 + x2";
const CHAIN4: &str = "x1 + x2 + 2\nx2*x3 + 2*x3 + x1\nx3*x4 + x2*x4 + x3 - 1\nx4 + x2";

fn system(text: &str) -> (VarTable, PolySet) {
    let s = parse_system(text).unwrap();
    let p = s.set();
    (s.table, p)
}

fn permutations(items: &[Var]) -> Vec<Vec<Var>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// All orderings whose largest variables are `prefix`, the rest permuted.
fn class(prefix: &[u32], n: u32) -> Vec<Ordering> {
    let rest: Vec<Var> = (0..n).filter(|i| !prefix.contains(i)).map(Var).collect();
    permutations(&rest)
        .into_iter()
        .map(|tail| Ordering::new(prefix.iter().map(|&i| Var(i)).chain(tail).collect()).unwrap())
        .collect()
}

fn counts(rows: &[BenchRow]) -> Vec<usize> {
    rows.iter().map(|r| r.proj_count.unwrap()).collect()
}

fn mean(xs: &[usize]) -> Ratio<i64> {
    Ratio::new(xs.iter().sum::<usize>() as i64, xs.len() as i64)
}

#[test]
fn lattice_family() {
    let f4 = gen_lattice_family(4).unwrap();
    assert_eq!(f4.polys.len(), 1);
    assert_eq!(f4.polys[0].display(&f4.table).to_string(), "x1*x4 - x2*x3");
    let f5 = gen_lattice_family(5).unwrap();
    assert_eq!(f5.polys.len(), 2);
    assert_eq!(associated_graph(&f5.set()).num_vertices(), 5);
    for n in 4..=14 {
        assert!(is_chordal(&associated_graph(&gen_lattice_family(n).unwrap().set())), "n={n}");
    }
    assert!(gen_lattice_family(3).is_err());
}

#[test]
fn grid_family() {
    for ((n1, n2), vars) in [((1, 1), 8), ((2, 1), 14), ((1, 2), 14)] {
        let f = gen_grid_family(n1, n2).unwrap();
        assert_eq!(f.polys.len(), 4 * n1 * n2);
        assert_eq!(f.set().vars().len(), vars, "({n1},{n2})");
        assert_eq!(f.table.len(), vars);
    }
    assert!(gen_grid_family(0, 1).is_err());
}

#[test]
fn family_text_round_trips() {
    let f = gen_grid_family(2, 1).unwrap();
    let back = parse_system(&f.to_text()).unwrap();
    assert_eq!(back.table.names(), f.table.names());
    assert_eq!(back.set(), f.set());
}

#[test]
fn named_orderings_heights() {
    for n in 4..=14 {
        let g = associated_graph(&gen_lattice_family(n).unwrap().set());
        let (l1, l2) = named_orderings_fn(n).unwrap();
        let h1 = elimination_tree(&g, &l1).unwrap().height();
        let h2 = elimination_tree(&g, &l2).unwrap().height();
        assert_eq!(h1, n - 1, "n={n}");
        assert_eq!(h2, (n + 2) / 2, "n={n}");
    }
    let (l1, _) = named_orderings_fn(8).unwrap();
    let t = gen_lattice_family(8).unwrap().table;
    assert_eq!(l1.display(&t), "x1>x2>x3>x4>x5>x6>x7>x8");
    let (_, l2) = named_orderings_fn(8).unwrap();
    assert_eq!(l2.display(&t), "x1>x2>x3>x8>x7>x6>x5>x4");
}

#[test]
fn suggest_examples() {
    let (t, f) = system(LINEAR_CUBIC);
    let g = associated_graph(&f);
    let (o, why) = suggest_ordering(&f, &Strategy::MinHeightPeo).unwrap();
    assert!(verify_peo(&g, &o).unwrap());
    assert!(why.chordal && why.is_peo);
    assert_eq!(why.fill_d, Ratio::from_integer(0));
    assert!(verify_peo(&g, &Ordering::parse("x4>x5>x3>x2>x1", &t).unwrap()).unwrap());

    for n in 6..=12 {
        let fam = gen_lattice_family(n).unwrap();
        let (o, why) = suggest_ordering(&fam.set(), &Strategy::MinHeightPeo).unwrap();
        let g = associated_graph(&fam.set());
        assert!(verify_peo(&g, &o).unwrap());
        assert_eq!(why.tree_height, (n + 2) / 2, "n={n}");
    }

    let (_, one) = system("x1^3 - 2");
    let (o, why) = suggest_ordering(&one, &Strategy::MinHeightPeo).unwrap();
    assert_eq!(o.ranked(), &[Var(0)]);
    assert_eq!(why.tree_height, 0);
}

#[test]
fn suggest_on_non_chordal_input() {
    let (_, f) = system("a*b + 1\nb*c + 1\nc*d + 1\nd*a + 1");
    for s in [Strategy::MinHeightPeo, Strategy::MinFill] {
        let (o, why) = suggest_ordering(&f, &s).unwrap();
        assert!(!why.chordal);
        assert_eq!(why.cycle.as_ref().map(Vec::len), Some(4));
        assert_eq!(why.fill_edges.len(), 1);
        assert_eq!(why.fill_d, Ratio::new(1, 5));
        assert!(verify_peo(&why.structure, &o).unwrap());
        assert!(!why.is_peo);
    }
    let (o, why) = suggest_ordering(
        &f,
        &Strategy::EnumerateAll {
            cap: 8,
            seed: 0,
            operator: Operator::McCallum,
        },
    )
    .unwrap();
    assert!(verify_peo(&why.structure, &o).unwrap());
    assert_eq!(why.candidates, 8);
    assert!(suggest_ordering(&f, &Strategy::EnumerateAll { cap: 0, seed: 0, operator: Operator::Brown }).is_err());
}

#[test]
fn given_strategy_checks_coverage() {
    let (t, f) = system(LINEAR_CUBIC);
    let o = Ordering::parse("x1>x2>x3>x4>x5", &t).unwrap();
    let (got, why) = suggest_ordering(&f, &Strategy::Given(o.clone())).unwrap();
    assert_eq!(got, o);
    assert!(!why.is_peo);
    assert!(why.fill_d > Ratio::from_integer(0));
    let short = Ordering::parse("x1>x2", &t).unwrap();
    assert!(suggest_ordering(&f, &Strategy::Given(short)).is_err());
}

#[test]
fn linear_cubic_ordering_classes() {
    let (_, f) = system(LINEAR_CUBIC);
    let peo_rows = compare_orderings(&f, &class(&[3, 4], 5), Operator::McCallum);
    let mut c = counts(&peo_rows);
    assert!(peo_rows.iter().all(|r| r.is_peo));
    c.sort();
    assert_eq!(c, vec![20, 20, 21, 21, 21, 21]);
    assert_eq!(mean(&c), Ratio::new(62, 3));

    let other = compare_orderings(&f, &class(&[0, 1], 5), Operator::McCallum);
    assert!(other.iter().all(|r| !r.is_peo));
    let mut c = counts(&other);
    c.sort();
    let mut expected = vec![53, 74, 34, 33, 52, 47];
    expected.sort();
    assert_eq!(c, expected);
}

#[test]
fn chain4_class_averages() {
    let (_, f) = system(CHAIN4);
    let expected_avg = [(0, Ratio::new(76, 6)), (1, Ratio::new(200, 6)), (2, Ratio::new(103, 6)), (3, Ratio::new(97, 6))];
    for (first, avg) in expected_avg {
        let rows = compare_orderings(&f, &class(&[first], 4), Operator::Brown);
        let c = counts(&rows);
        assert_eq!(mean(&c), avg, "x{} class {c:?}", first + 1);
    }
}

#[test]
fn rows_follow_input_order_and_mark_failures() {
    let (t, f) = system(LINEAR_CUBIC);
    let a = Ordering::parse("x4>x5>x3>x2>x1", &t).unwrap();
    let b = Ordering::parse("x1>x2>x3>x4>x5", &t).unwrap();
    let rows = compare_orderings(&f, &[a.clone(), b.clone()], Operator::McCallum);
    assert_eq!(rows[0].ordering, a);
    assert_eq!(rows[1].ordering, b);
    assert_eq!(rows[0].proj_count, Some(21));
    assert_eq!(rows[0].tree_height, Some(2));
    assert!(rows[0].predicted_cell_bound.is_some());

    let single = compare_orderings(&f, &[a], Operator::Brown);
    assert_eq!(single.len(), 1);

    let bad = Ordering::parse("x1>x2", &t).unwrap();
    let failed = compare_orderings(&f, &[bad], Operator::McCallum);
    assert!(failed[0].error.is_some());
    assert_eq!(failed[0].proj_count, None);

    let text = render_rows(&rows, &t, false);
    assert!(text.lines().next().unwrap().starts_with("ordering"));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn relabeling_permutes_rows() {
    let (_, f) = system(CHAIN4);
    let orderings = class(&[2], 4);
    let perm = |v: Var| Var((v.0 + 1) % 4);
    let renamed: Vec<Ordering> = orderings.iter().map(|o| o.rename(&perm)).collect();
    let a = counts(&compare_orderings(&f, &orderings, Operator::Brown));
    let b = counts(&compare_orderings(&f.rename(&perm), &renamed, Operator::Brown));
    assert_eq!(a, b);
}

#[test]
fn grid_min_fill_metric() {
    let f = gen_grid_family(1, 1).unwrap();
    let g = associated_graph(&f.set());
    let o = min_fill_ordering(&g);
    let h = elimination_game(&g, &o).unwrap().graph;
    let d = fill_metric(&g, &h).unwrap();
    assert!(d <= Ratio::new(175, 1000), "d = {d}");
    assert!(is_minimal_completion(&g, &h).unwrap());
}
