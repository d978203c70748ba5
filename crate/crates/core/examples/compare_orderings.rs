//! Projection cost over classes of orderings for two small systems.

use chordcad::advisor::{compare_orderings, render_rows};
use chordcad::chordal::Ordering;
use chordcad::io::parse_system;
use chordcad::poly::Var;
use chordcad::projection::Operator;

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

fn class(prefix: &[Var], all: &[Var]) -> Vec<Ordering> {
    let rest: Vec<Var> = all.iter().copied().filter(|v| !prefix.contains(v)).collect();
    permutations(&rest)
        .into_iter()
        .map(|tail| Ordering::new(prefix.iter().copied().chain(tail).collect()).unwrap())
        .collect()
}

fn main() {
    let sys = parse_system("x1 + x4\nx2 + x4\nx3^2 + x2\nx3^3 + x1\nx5 + x2\nx5 + x1 + x2").unwrap();
    let t = &sys.table;
    let all: Vec<Var> = t.vars().collect();
    for prefix in [["x4", "x5"], ["x1", "x2"]] {
        let vs: Vec<Var> = prefix.iter().map(|n| t.get(n).unwrap()).collect();
        let rows = compare_orderings(&sys.set(), &class(&vs, &all), Operator::McCallum);
        print!("{}", render_rows(&rows, t, false));
        println!();
    }

    let sys = parse_system("x1 + x2 + 2\nx2*x3 + 2*x3 + x1\nx3*x4 + x2*x4 + x3 - 1\nx4 + x2").unwrap();
    let t = &sys.table;
    let all: Vec<Var> = t.vars().collect();
    for &first in &all {
        let rows = compare_orderings(&sys.set(), &class(&[first], &all), Operator::Brown);
        let counts: Vec<usize> = rows.iter().filter_map(|r| r.proj_count).collect();
        let avg = counts.iter().sum::<usize>() as f64 / counts.len() as f64;
        println!("{}>...: {counts:?}, average {avg:.1}", t.name(first));
    }
}
