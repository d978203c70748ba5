use crate::poly::{
    coeffs, content, discriminant, finest_basis, finest_basis_of, lc, primitive_part, resultant, Poly,
    PolyError, PolySet, Var,
};

use super::{Operator, ProjectionError};

/// McCallum's operator: contents, plus coefficients, discriminants and
/// pairwise resultants over the finest basis of the primitive parts.
/// Members without `x` pass through as their own content.
pub fn proj_mccallum(a: &PolySet, x: Var) -> Result<PolySet, ProjectionError> {
    check_pre(a, x)?;
    Ok(mccallum_step(a, x)?)
}

/// Brown's operator over the finest basis of `a`: contents, leading
/// coefficients, discriminants and pairwise resultants.
pub fn proj_brown(a: &PolySet, x: Var) -> Result<PolySet, ProjectionError> {
    check_pre(a, x)?;
    Ok(brown_step(a, x)?)
}

fn check_pre(a: &PolySet, x: Var) -> Result<(), ProjectionError> {
    let vars = a.vars();
    if !vars.contains(&x) {
        return Err(ProjectionError::VarNotPresent(x));
    }
    if vars.len() < 2 {
        return Err(ProjectionError::TooFewVariables(vars.len()));
    }
    Ok(())
}

/// One projection step without the precondition checks. On sets that do not
/// contain `x` it returns the set unchanged; on sets univariate in `x` it
/// returns the empty set (everything produced is constant).
pub(crate) fn step(op: Operator, a: &PolySet, x: Var) -> Result<PolySet, PolyError> {
    match op {
        Operator::McCallum => mccallum_step(a, x),
        Operator::Brown => brown_step(a, x),
    }
}

fn mccallum_step(a: &PolySet, x: Var) -> Result<PolySet, PolyError> {
    let mut out = PolySet::new();
    let mut prims = Vec::new();
    for f in a {
        if f.contains_var(x) {
            out.insert(content(f, x));
            prims.push(primitive_part(f, x));
        } else {
            out.insert(f.clone());
        }
    }
    let basis: Vec<Poly> = finest_basis_of(prims.iter())
        .into_iter()
        .filter(|b| b.contains_var(x))
        .collect();
    add_resultants(&mut out, &basis, x)?;
    for b in &basis {
        out.extend(coeffs(b, x).into_iter().filter(|c| !c.is_zero()));
        if b.degree(x) >= 2 {
            out.insert(discriminant(b, x)?);
        }
    }
    Ok(out)
}

fn brown_step(a: &PolySet, x: Var) -> Result<PolySet, PolyError> {
    let mut out = PolySet::new();
    let mut basis = Vec::new();
    for f in finest_basis(a) {
        if f.contains_var(x) {
            basis.push(f);
        } else {
            out.insert(f);
        }
    }
    for b in &basis {
        out.insert(content(b, x));
    }
    add_resultants(&mut out, &basis, x)?;
    for b in &basis {
        out.insert(lc(b, x));
        if b.degree(x) >= 2 {
            out.insert(discriminant(b, x)?);
        }
    }
    Ok(out)
}

fn add_resultants(out: &mut PolySet, basis: &[Poly], x: Var) -> Result<(), PolyError> {
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            out.insert(resultant(f, g, x)?);
        }
    }
    Ok(())
}
