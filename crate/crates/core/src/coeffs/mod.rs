//! Linear-programming data for local views: partition functions and
//! constraint coefficients as exact polynomials in t and r.
//!
//! For a view L the free vertices are the centre and its d neighbours; the
//! boundary colours are fixed. Summing over colourings of the free vertices
//! with weight (1+t)^(m_max - m) gives the shifted partition function
//! Ztilde, the expected-monochromatic-edge numerator for the centre, and
//! one balance numerator per partition shape, measuring how differently the
//! centre and its neighbours see the colour pattern around themselves. The
//! number of available colours enters symbolically: q = 5 exactly, or
//! q = r + 6 (minimisation) and q = r + 5 (maximisation) with r >= 0.

mod case;
mod colourings;
mod direct;
mod partition;
mod records;
mod tables;

pub use case::{Case, Sense};
pub use colourings::{enumerate_local_colourings, multiplicity, ColouringPattern};
pub use direct::{direct_coefficients, DirectCoeffs};
pub use partition::{partition_of_multiset, partitions_of, QPartition};
pub use records::{CoeffError, CoeffRecord, CoeffSet};
pub use tables::{
    assemble_coefficients, coefficient_vectors, compute_all_coeff_sets, compute_coeff_set,
    view_tables, ViewTables,
};
