//! McCallum projection along a perfect elimination ordering, level by level,
//! and the same sets recovered by projecting along the elimination tree.

use chordcad::chordal::{associated_graph, elimination_tree, Ordering};
use chordcad::io::parse_system;
use chordcad::projection::{check_preservation, proj_count, projection_procedure, tp_equals_pi, tree_projection, Operator};

fn main() {
    let sys = parse_system("x1 + x4\nx2 + x4\nx3^2 + x2\nx3^3 + x1\nx5 + x2\nx5 + x1 + x2").unwrap();
    let t = &sys.table;
    let f = sys.set();
    let g = associated_graph(&f);

    for text in ["x4>x5>x3>x2>x1", "x1>x2>x3>x4>x5"] {
        let o = Ordering::parse(text, t).unwrap();
        let tr = projection_procedure(&f, &o, Operator::McCallum).unwrap();
        println!("{text}: #proj = {}, structure preserved: {}", proj_count(&tr), check_preservation(&tr, &g));
        for (k, level) in tr.levels.iter().enumerate().skip(1) {
            let x = t.name(tr.eliminated(k).unwrap());
            let polys = level.to_strings(t);
            if polys.len() <= 8 {
                println!("  after {x}: {{{}}}", polys.join(", "));
            } else {
                println!("  after {x}: {} polynomials", polys.len());
            }
        }
    }

    let o = Ordering::parse("x4>x5>x3>x2>x1", t).unwrap();
    let tree = elimination_tree(&g, &o).unwrap();
    for op in [Operator::McCallum, Operator::Brown] {
        let tt = tree_projection(&f, &tree, op).unwrap();
        let tr = projection_procedure(&f, &o, op).unwrap();
        println!("{op}: tree projection equals the projection sets: {}", tp_equals_pi(&tt, &tr).unwrap());
    }
}
