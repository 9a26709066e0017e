//! Exact pipeline for certifying the extremal internal energies of the
//! antiferromagnetic Potts model on 4-regular graphs.
//!
//! The pipeline enumerates all local views of a vertex in a 4-regular graph
//! up to isomorphism, computes the partition-function data of each view as
//! exact rational functions in the temperature variable `t` (where `e^β = 1+t`)
//! and the colour-count offset `r`, and certifies via linear-programming
//! duality that among all 4-regular graphs the complete bipartite graph
//! K_{4,4} minimises and the complete graph K_5 maximises the internal energy
//! per vertex, for every number of colours q >= 5 and every t > 0.
//!
//! Modules:
//! - [`algebra`]: bivariate integer polynomials, rational functions with
//!   sign-certified denominators, exact evaluation and a 2x2 linear solver.
//! - [`graphs`]: small vertex-roled graphs, canonical labelling by
//!   individualisation-refinement, automorphism groups and orbit machinery.
//! - [`localview`]: canonical-augmentation enumeration of local views and the
//!   catalogue file format.
//! - [`coeffs`]: exact LP coefficient data (cleared partition function,
//!   objective and constraint numerators) per local view.
//! - [`verify`]: reference models, dual certificates, slack sign checks,
//!   primal feasibility identities and an independent exact simplex.

pub mod algebra;
pub mod coeffs;
pub mod graphs;
pub mod localview;
pub mod verify;
