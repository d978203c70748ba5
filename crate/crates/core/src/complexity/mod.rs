//! The (m,d)-property calculus: combined degrees, growth of the pair under
//! projection, and cell-count bounds.

mod bounds;
mod md;

pub use bounds::{cell_bound_general, cell_bound_tree, growth_table_general, growth_table_tree, CellBoundInput, GrowthRow, GrowthTable};
pub use md::{combined_degree, md_step_general, md_step_tree, md_witness, MDPair};

use crate::poly::Var;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexityError {
    #[error("combined degree of an empty set is undefined")]
    EmptySet,
    #[error("a member has combined degree {found}, above the bound {bound}")]
    ExceedsDegree { found: u32, bound: u32 },
    #[error("no (m,d) pair supplied for variable {0}")]
    MissingPair(Var),
    #[error("m and d must be at least 1")]
    InvalidPair,
    #[error("n must be at least 1")]
    NoVariables,
}
