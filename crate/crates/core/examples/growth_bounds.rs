//! Growth of the (m,d) pair under projection and the two cell-count bounds.

use chordcad::advisor::{gen_lattice_family, named_orderings_fn};
use chordcad::chordal::{associated_graph, elimination_tree};
use chordcad::complexity::{cell_bound_general, cell_bound_tree, growth_table_general, growth_table_tree, CellBoundInput, MDPair};

fn main() {
    let p = MDPair::new(1, 2).unwrap();
    println!("general ordering, (m, d) = {p}, n = 5");
    print!("{}", growth_table_general(&p, 5).unwrap().render("vars"));
    println!("elimination tree, w = 2, h = 4");
    print!("{}", growth_table_tree(&p, 2, 4).render("height"));

    let fam = gen_lattice_family(8).unwrap();
    let g = associated_graph(&fam.set());
    let (l1, l2) = named_orderings_fn(8).unwrap();
    println!("general bound, n = 8: {} digits", cell_bound_general(&p, 8).unwrap().to_string().len());
    for (name, o) in [("l1", l1), ("l2", l2)] {
        let tree = elimination_tree(&g, &o).unwrap();
        let height = tree.height();
        let pairs = o.ranked().iter().map(|&v| (v, p.clone())).collect();
        let bound = cell_bound_tree(&CellBoundInput { pairs, tree }).unwrap();
        println!("tree bound under {name} (height {height}): {} digits", bound.to_string().len());
    }
}
