//! Local views of a vertex in a d-regular graph, and their isomorph-free
//! exhaustive generation.
//!
//! A local view records everything a vertex observes: the graph induced on
//! itself and its d neighbours, plus, for each neighbour, the multiset of
//! colours on that neighbour's external neighbours. Views are represented as
//! roled simple graphs (centre, neighbours, pendant boundary vertices, colour
//! vertices) so that "equivalent up to renaming colours" becomes plain
//! role-preserving graph isomorphism, and are enumerated by canonical
//! augmentation in two phases: inner graphs, then boundary colourings.

mod catalogue;
mod generate;
mod observe;
mod oracle;
mod view;

pub use catalogue::Catalogue;
pub use generate::{
    build_simple_representation, generate_catalogue, generate_colourings, generate_inner_graphs,
};
pub use observe::local_view_of;
pub use oracle::brute_force_catalogue_forms;
pub use view::{LocalView, ViewError};
