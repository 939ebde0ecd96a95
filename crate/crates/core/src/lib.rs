//! Ramsey numbers of paths versus Jahangir graphs.
//!
//! The crate builds the extremal witnesses, checks claimed values
//! exhaustively at small orders through isomorph-free enumeration, and runs
//! the constructive case analyses as certified embedding extractors.

pub mod canon;
pub mod detect;
pub mod enumerate;
pub mod error;
pub mod extract;
pub mod graph;
pub mod graph6;
pub mod ramsey;

pub use canon::{canonical_form, CanonicalForm};
pub use detect::{Embedding, JahangirEmbedding};
pub use error::{Error, Result};
pub use extract::{validate_embedding, CaseTrace, FalsificationRecord, Subcase};
pub use graph::{chromatic_number, make_standard, Graph, StandardGraph, VertexSet};
pub use graph6::{emit_graph6, parse_graph6};
pub use ramsey::{claimed_value, Claim, RamseyInstance};
