//! Parsing, resultants, discriminants and the finest basis of a small set.

use chordcad::io::parse_system;
use chordcad::poly::{discriminant, finest_basis, resultant, squarefree_decomposition};

fn main() {
    let sys = parse_system("x^2 + y^2 - 1\nx - y\n(x - y)^2*(x + 2*y)").expect("valid input");
    let t = &sys.table;
    let x = t.get("x").unwrap();
    let [circle, line, cubic] = [&sys.polys[0], &sys.polys[1], &sys.polys[2]];

    println!("res_x(circle, line) = {}", resultant(circle, line, x).unwrap().display(t));
    println!("disc_x(circle)      = {}", discriminant(circle, x).unwrap().display(t));

    println!("squarefree parts of {} in x:", cubic.display(t));
    for (factor, mult) in squarefree_decomposition(cubic, x) {
        println!("  ({})^{mult}", factor.display(t));
    }

    println!("finest basis of the input:");
    for p in finest_basis(&sys.set()).iter() {
        println!("  {}", p.display(t));
    }
}
