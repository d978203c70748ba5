//! Associated graphs, chordality verdicts and minimum-fill completions.

use chordcad::advisor::gen_grid_family;
use chordcad::chordal::{associated_graph, elimination_game, fill_metric, mcs_peo, min_fill_ordering, Chordality};
use chordcad::io::parse_system;

fn main() {
    for (name, text) in [
        ("star", "y1^4 - 1\ny1^2 + y3\ny2^2 + y3\ny3^2 + y4"),
        ("4-cycle", "a*b + 1\nb*c + 1\nc*d + 1\nd*a + 1"),
    ] {
        let sys = parse_system(text).unwrap();
        let t = &sys.table;
        let g = associated_graph(&sys.set());
        match mcs_peo(&g) {
            Chordality::Chordal(o) => println!("{name}: chordal, PEO {}", o.display(t)),
            Chordality::NotChordal(cycle) => {
                let names: Vec<&str> = cycle.iter().map(|&v| t.name(v)).collect();
                println!("{name}: not chordal, chordless cycle {}", names.join(" - "));
                let o = min_fill_ordering(&g);
                let h = elimination_game(&g, &o).unwrap();
                for (a, b) in &h.fill {
                    println!("  fill edge {}-{}", t.name(*a), t.name(*b));
                }
                println!("  d = {}", fill_metric(&g, &h.graph).unwrap());
            }
        }
    }

    for (n1, n2) in [(1, 1), (2, 1), (1, 2)] {
        let fam = gen_grid_family(n1, n2).unwrap();
        let g = associated_graph(&fam.set());
        let h = elimination_game(&g, &min_fill_ordering(&g)).unwrap().graph;
        let d = fill_metric(&g, &h).unwrap();
        println!(
            "grid ({n1},{n2}): {} variables, {} edges, {} after fill, d = {d} ({:.3})",
            g.num_vertices(),
            g.num_edges(),
            h.num_edges(),
            *d.numer() as f64 / *d.denom() as f64
        );
    }
}
