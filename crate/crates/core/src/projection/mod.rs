//! Projection operators, projection procedures under an ordering, and the
//! projection indexed by an elimination tree.

mod operators;
mod trace;
mod tree;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::poly::{PolyError, Var};

pub use operators::{proj_brown, proj_mccallum};
pub use trace::{check_preservation, proj_count, projection_procedure, ProjectionTrace};
pub use tree::{tp_equals_pi, tree_projection, TreeTrace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Operator {
    McCallum,
    Brown,
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operator::McCallum => "mccallum",
            Operator::Brown => "brown",
        })
    }
}

impl FromStr for Operator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "mccallum" => Ok(Operator::McCallum),
            "brown" => Ok(Operator::Brown),
            _ => Err(format!("unknown operator `{s}` (expected mccallum or brown)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProjectionError {
    #[error("variable {0} does not occur in the set")]
    VarNotPresent(Var),
    #[error("projection needs at least two variables, the set has {0}")]
    TooFewVariables(usize),
    #[error("ordering does not rank every variable of the set")]
    OrderingMismatch,
    #[error("tree and trace were built from different inputs")]
    TraceMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
}
