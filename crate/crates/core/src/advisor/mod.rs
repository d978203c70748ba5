//! Ordering selection, multi-ordering comparison, and the benchmark families.

mod analysis;
mod bench;
mod families;
mod strategy;

pub use analysis::{analyze, Analysis, Timings};
pub use bench::{compare_orderings, evaluate_ordering, render_rows, BenchRow};
pub use families::{gen_grid_family, gen_lattice_family, named_orderings_fn, Family};
pub use strategy::{suggest_ordering, Rationale, Strategy};

use crate::chordal::GraphError;
use crate::complexity::ComplexityError;
use crate::projection::ProjectionError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdvisorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Projection(#[from] ProjectionError),
    #[error(transparent)]
    Complexity(#[from] ComplexityError),
    #[error("{0}")]
    Family(String),
    #[error("strategy `given` needs an explicit ordering")]
    MissingOrdering,
    #[error("empty system")]
    EmptySystem,
    #[error("enumeration cap must be positive")]
    ZeroCap,
}
