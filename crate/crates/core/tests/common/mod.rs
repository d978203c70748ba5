//! Shared generators for the integration tests.
#![allow(dead_code)]

use chordcad::poly::{finest_basis, Poly, PolySet, Var};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A random sparse polynomial over the given variables with total degree at most 3.
pub fn random_poly(rng: &mut ChaCha8Rng, vars: &[Var]) -> Poly {
    loop {
        let mut p = Poly::zero();
        for _ in 0..rng.gen_range(1..=4) {
            let mut term = Poly::constant(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 });
            let deg = rng.gen_range(0..=3);
            for _ in 0..deg {
                term = &term * &Poly::var(vars[rng.gen_range(0..vars.len())]);
            }
            p = &p + &term;
        }
        if !p.is_constant() {
            return p;
        }
    }
}

/// A random system on up to 6 variables whose members each use a few
/// variables, as a finest basis.
pub fn random_system(rng: &mut ChaCha8Rng) -> PolySet {
    let n = rng.gen_range(2..=6u32);
    let mut s = PolySet::new();
    for _ in 0..rng.gen_range(1..=5) {
        let k = rng.gen_range(1..=3.min(n));
        let mut vs: Vec<Var> = (0..n).map(Var).collect();
        for i in (1..vs.len()).rev() {
            vs.swap(i, rng.gen_range(0..=i));
        }
        vs.truncate(k as usize);
        s.insert(random_poly(rng, &vs));
    }
    finest_basis(&s)
}

