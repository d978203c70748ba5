//! Sparse multivariate polynomials over ℤ and the elimination primitives used by
//! the projection operators.

mod basis;
mod elim;
mod factor;
mod gcd;
mod monomial;
#[allow(clippy::module_inception)]
mod poly;
mod univ;
mod var;

pub use basis::{finest_basis, finest_basis_of, witness, PolySet, Witness};
pub use elim::{discriminant, discriminant_signed, resultant, resultant_signed, subresultant_chain};
pub use factor::{rational_roots, split_linear_factors};
pub use gcd::{content, gcd, gcd_all, primitive_part, squarefree_decomposition, squarefree_part};
pub use monomial::Monomial;
pub use poly::{Poly, PolyDisplay};
pub use var::{natural_cmp, Var, VarTable};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("{0}: zero polynomial")]
    ZeroPolynomial(&'static str),
    #[error("{op}: degree in {var} is {found}, need at least {needed}")]
    DegreeTooLow {
        op: &'static str,
        var: Var,
        needed: u32,
        found: u32,
    },
}

/// Degree of `f` in `x`; rejects the zero polynomial.
pub fn degree(f: &Poly, x: Var) -> Result<u32, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial("degree"));
    }
    Ok(f.degree(x))
}

/// Coefficients `[a_s, …, a_0]` of `f` in `x`, highest first.
pub fn coeffs(f: &Poly, x: Var) -> Vec<Poly> {
    let mut cs = f.coeffs_in(x);
    cs.reverse();
    cs
}

/// Leading coefficient of `f` in `x`.
pub fn lc(f: &Poly, x: Var) -> Poly {
    f.coeffs_in(x).pop().unwrap_or_else(Poly::zero)
}
