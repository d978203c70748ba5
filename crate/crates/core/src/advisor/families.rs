use crate::chordal::Ordering;
use crate::poly::{Poly, PolySet, Var, VarTable};

use super::AdvisorError;

/// A generated system together with its symbol table.
#[derive(Clone, Debug)]
pub struct Family {
    pub table: VarTable,
    pub polys: Vec<Poly>,
}

impl Family {
    pub fn set(&self) -> PolySet {
        self.polys.iter().cloned().collect()
    }

    /// Input-file text: an `@vars` line fixing the variable order, then one
    /// polynomial per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("@vars {}\n", self.table.names().join(" "));
        for p in &self.polys {
            out.push_str(&p.display(&self.table).to_string());
            out.push('\n');
        }
        out
    }
}

fn binomial(a: Var, b: Var, c: Var, d: Var) -> Poly {
    &(&Poly::var(a) * &Poly::var(b)) - &(&Poly::var(c) * &Poly::var(d))
}

/// `x_k x_{k+3} − x_{k+1} x_{k+2}` for `k = 1, …, n − 3`.
pub fn gen_lattice_family(n: usize) -> Result<Family, AdvisorError> {
    if n < 4 {
        return Err(AdvisorError::Family(format!("lattice family needs n >= 4, got {n}")));
    }
    let table = VarTable::from_names((1..=n).map(|i| format!("x{i}")));
    let x = |k: usize| Var((k - 1) as u32);
    let polys = (1..=n - 3).map(|k| binomial(x(k), x(k + 3), x(k + 1), x(k + 2))).collect();
    Ok(Family { table, polys })
}

/// The four binomials per grid cell `(i, j)`, `0 ≤ i < n1`, `0 ≤ j < n2`,
/// over variables `U_i_j`, `R_i_j`, `D_i_j`, `L_i_j` (interned in order of
/// first appearance).
pub fn gen_grid_family(n1: usize, n2: usize) -> Result<Family, AdvisorError> {
    if n1 == 0 || n2 == 0 {
        return Err(AdvisorError::Family(format!("grid family needs n1, n2 >= 1, got ({n1}, {n2})")));
    }
    let mut table = VarTable::new();
    let mut polys = Vec::new();
    for i in 0..n1 {
        for j in 0..n2 {
            let mut v = |s: &str, a: usize, b: usize| table.intern(&format!("{s}_{a}_{b}"));
            let cell = [
                [v("U", i, j), v("R", i, j + 1), v("R", i, j), v("U", i + 1, j)],
                [v("D", i, j + 1), v("R", i, j), v("R", i, j + 1), v("D", i + 1, j + 1)],
                [v("D", i + 1, j + 1), v("L", i + 1, j), v("L", i + 1, j + 1), v("D", i, j + 1)],
                [v("U", i + 1, j), v("L", i + 1, j + 1), v("L", i + 1, j), v("U", i, j)],
            ];
            polys.extend(cell.iter().map(|[a, b, c, d]| binomial(*a, *b, *c, *d)));
        }
    }
    Ok(Family { table, polys })
}

/// The orderings `x1 > x2 > … > xn` and
/// `x1 > … > x_⌈(n−3)/2⌉ > xn > x_{n−1} > … > x_⌈(n−1)/2⌉` for the lattice family.
pub fn named_orderings_fn(n: usize) -> Result<(Ordering, Ordering), AdvisorError> {
    if n < 4 {
        return Err(AdvisorError::Family(format!("lattice family needs n >= 4, got {n}")));
    }
    let x = |k: usize| Var((k - 1) as u32);
    let first = Ordering::new((1..=n).map(x).collect())?;
    let head = (n - 3).div_ceil(2);
    let tail = (n - 1).div_ceil(2);
    let ranked: Vec<Var> = (1..=head).chain((tail..=n).rev()).map(x).collect();
    Ok((first, Ordering::new(ranked)?))
}
