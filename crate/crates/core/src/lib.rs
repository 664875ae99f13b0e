//! Graph products of free monoids, their inverse hulls and the associated
//! graph groups.
//!
//! Each vertex of an independence graph carries a component monoid, either
//! monogenic or free on a finite alphabet. [`GraphProduct`] computes canonical
//! normal forms, right and left division, least common left multiples and
//! highest common left factors. [`HullElement`] is the inverse hull with zero
//! in pair form; for all-monogenic graphs it is the polygraph monoid.

pub mod check;
pub mod cli;
pub mod component;
pub mod error;
pub mod gproduct;
pub mod graph;
pub mod ihull;
pub mod oracle;
pub mod ragroup;
pub mod word;

pub use component::{Piece, Syllable};
pub use error::{Error, Result};
pub use gproduct::{Element, GraphProduct, Lclm};
pub use graph::{format_graph, parse_graph, ComponentKind, ComponentSpec, Graph, LetterId, Vertex};
pub use ihull::{HullElement, Relation, RelationFamily, RelationReport, RelationRhs};
pub use ragroup::{GroupOrZero, GroupWord};
pub use word::SignedLetter;
