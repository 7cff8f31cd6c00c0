//! Degree-based topological indices of simple graphs, bridge and chain
//! composition of anchored components, and closed-form hyper Zagreb
//! evaluators for those composites, checked against direct computation.

pub mod closed_form;
pub mod compose;
pub mod edgelist;
pub mod error;
pub mod families;
pub mod graph;
pub mod index;
pub mod verify;

pub use closed_form::{summarize, AnchorStats, ComponentSummary, FormulaVariant};
pub use compose::{bridge_b1, bridge_b2, chain, AnchoredComponent, CompositeKind, CompositeResult};
pub use edgelist::{emit_edge_list, parse_edge_list};
pub use error::{Error, Result};
pub use families::{FamilySpec, PolyKind};
pub use graph::Graph;
pub use index::{
    first_zagreb, first_zagreb_edgewise, forgotten_index, hyper_zagreb, index_report,
    second_zagreb, IndexReport,
};
pub use verify::VerificationRecord;
