//! Elimination-tree heights of the lattice family under the two named
//! orderings and under the minimum-height search. Writes DOT for n = 8.

use chordcad::advisor::{gen_lattice_family, named_orderings_fn};
use chordcad::chordal::{associated_graph, elimination_tree, min_height_peo};
use chordcad::io::tree_dot;

fn main() {
    println!("{:>3}  {:>5}  {:>5}  {:>10}", "n", "l1", "l2", "min height");
    for n in 4..=14 {
        let fam = gen_lattice_family(n).unwrap();
        let g = associated_graph(&fam.set());
        let (l1, l2) = named_orderings_fn(n).unwrap();
        let h1 = elimination_tree(&g, &l1).unwrap().height();
        let h2 = elimination_tree(&g, &l2).unwrap().height();
        let (_, best) = min_height_peo(&g).unwrap();
        println!("{n:>3}  {h1:>5}  {h2:>5}  {best:>10}");
    }

    let fam = gen_lattice_family(8).unwrap();
    let g = associated_graph(&fam.set());
    let (_, l2) = named_orderings_fn(8).unwrap();
    print!("{}", tree_dot(&elimination_tree(&g, &l2).unwrap(), &fam.table));
}
