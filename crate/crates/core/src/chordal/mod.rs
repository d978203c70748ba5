//! Variable graphs, perfect elimination orderings, chordal completions and
//! elimination trees.

mod completion;
mod enumerate;
mod etree;
mod graph;
mod peo;

pub use completion::{elimination_game, fill_metric, is_minimal_completion, min_fill_ordering, Completion};
pub use enumerate::{enumerate_peos, min_height_peo, EXHAUSTIVE_LIMIT, RANDOM_RESTARTS};
pub use etree::{elimination_tree, tree_path_check, ElimTree};
pub use graph::{associated_graph, Ordering, VarGraph};
pub use peo::{chordless_cycle, is_chordal, is_chordless_cycle, mcs_peo, verify_peo, Chordality};

pub(crate) use etree::tree_of_ordering;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("ordering does not rank exactly the graph's vertices")]
    VertexMismatch,
    #[error("ordering is not a perfect elimination ordering of the graph")]
    NotPeo,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("completion does not contain the original graph")]
    NotSupergraph,
    #[error("completion is not chordal")]
    NotChordalCompletion,
    #[error("completion has no edges")]
    Edgeless,
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
}
