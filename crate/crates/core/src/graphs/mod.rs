//! Small undirected graphs with vertex roles, canonical labelling and
//! automorphism machinery.
//!
//! Local views are encoded as simple graphs whose vertices carry one of five
//! roles (centre, neighbour, boundary, colour, plain). All symmetry
//! computations are role-preserving: a canonical form never maps vertices
//! across roles, and automorphism groups are subgroups of the product of the
//! symmetric groups on the role classes.

mod brute;
mod canon;
mod graph;
mod orbits;

pub use brute::{aut_order_brute, canonical_form_brute, role_preserving_permutations};
pub use canon::{aut_group, canonical_form, canonicalize, Canonical};
pub use graph::{GraphFormatError, Permutation, Role, SmallGraph, MAX_VERTICES, ROLE_ORDER};
pub use orbits::{is_canonical_augmentation, is_canonical_augmentation_with, AutGroup};
