//! Certification of the energy bounds: dual solutions, slack scans,
//! reference models, and an independent linear-programming cross-check.
//!
//! The minimisation certificate shows that the internal energy of the
//! antiferromagnetic Potts model on any 4-regular graph is at least that of
//! K_{4,4}, for q = 5 and symbolically for all q >= 6; the maximisation
//! certificate shows it is at most that of K_5 for all q >= 5. Both reduce
//! to coefficient-sign checks on exact polynomials, one per local view.

mod certificate;
mod dual;
mod feasibility;
mod multiplier;
mod reference;
mod simplex;
mod slack;
mod support;

pub use certificate::{Certificate, ViewStatus};
pub use dual::{dual_shapes, solve_dual, DualSolution};
pub use feasibility::check_k44_feasibility;
pub use multiplier::{multiplier_source, parse_multiplier, positivity_multiplier};
pub use reference::{k44_reference, k5_reference, K44Reference, K5Reference};
pub use simplex::{crosscheck_lp, solve_lp, LpCrossCheck, LpInstance, LpOutcome, LpSense};
pub use slack::{verify_max, verify_min};
pub use support::{k44_support_views, k5_view_index};

use std::fmt;

use crate::algebra::AlgebraError;
use crate::coeffs::CoeffError;

/// Errors raised during certification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    /// A required reference view is missing from the catalogue.
    SupportMissing(String),
    /// The coefficient set does not belong to the catalogue or case.
    MismatchedInputs(String),
    /// The support equations are singular.
    DualSingular,
    /// The third support equation disagrees with the other two.
    DualInconsistent,
    /// A positivity multiplier failed to parse or has a negative
    /// coefficient.
    MultiplierRejected(String),
    /// The candidate optimal point violates a constraint it must satisfy.
    PrimalInfeasible(String),
    /// Exact arithmetic refused an operation.
    Algebra(AlgebraError),
    /// Coefficient data failed its own invariants.
    Coeff(CoeffError),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::SupportMissing(what) => write!(f, "support view not found: {what}"),
            VerifyError::MismatchedInputs(msg) => write!(f, "mismatched inputs: {msg}"),
            VerifyError::DualSingular => write!(f, "support equations are singular"),
            VerifyError::DualInconsistent => {
                write!(f, "support equations are mutually inconsistent")
            }
            VerifyError::MultiplierRejected(msg) => {
                write!(f, "positivity multiplier rejected: {msg}")
            }
            VerifyError::PrimalInfeasible(msg) => {
                write!(f, "candidate optimum violates a constraint: {msg}")
            }
            VerifyError::Algebra(e) => write!(f, "algebra error: {e}"),
            VerifyError::Coeff(e) => write!(f, "coefficient error: {e}"),
        }
    }
}

impl std::error::Error for VerifyError {}

impl From<AlgebraError> for VerifyError {
    fn from(e: AlgebraError) -> Self {
        VerifyError::Algebra(e)
    }
}

impl From<CoeffError> for VerifyError {
    fn from(e: CoeffError) -> Self {
        VerifyError::Coeff(e)
    }
}

/// Checks that a coefficient set belongs to a catalogue: same degree, same
/// catalogue hash, one record per view.
pub(crate) fn ensure_matching(
    cat: &crate::localview::Catalogue,
    records: &crate::coeffs::CoeffSet,
) -> Result<(), VerifyError> {
    if records.d() != cat.d() {
        return Err(VerifyError::MismatchedInputs(format!(
            "coefficients are for d={}, catalogue has d={}",
            records.d(),
            cat.d()
        )));
    }
    if records.catalogue_hash() != cat.hash() {
        return Err(VerifyError::MismatchedInputs(
            "coefficient set was computed for a different catalogue".to_string(),
        ));
    }
    if records.len() != cat.len() {
        return Err(VerifyError::MismatchedInputs(format!(
            "{} coefficient records for {} views",
            records.len(),
            cat.len()
        )));
    }
    Ok(())
}
