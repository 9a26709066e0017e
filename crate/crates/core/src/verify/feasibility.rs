//! The primal side of the lower bound. Observing a uniformly random vertex
//! of K_{4,4} yields one of the three support views with probabilities
//! p*_s read off the reference model; that distribution must satisfy every
//! balance constraint exactly and realise the K_{4,4} energy per vertex as
//! its objective value. Both identities are checked in exact arithmetic.

use crate::algebra::RatFn;
use crate::coeffs::{partitions_of, CoeffSet, Sense};
use crate::localview::Catalogue;

use super::dual::{balance_weight, centre_weight};
use super::reference::k44_reference;
use super::support::k44_support_views;
use super::{ensure_matching, VerifyError};

/// Checks that the K_{4,4} view distribution is feasible and achieves the
/// reference energy:
///
/// ```text
/// sum_s p*_s  c_{L_s}        = U*
/// sum_s p*_s  gamma^S_{L_s}  = 0    for every partition S of 4
/// ```
pub fn check_k44_feasibility(cat: &Catalogue, records: &CoeffSet) -> Result<(), VerifyError> {
    let case = records.case();
    if case.sense() != Sense::Min {
        return Err(VerifyError::MismatchedInputs(format!(
            "the K44 distribution belongs to the minimisation cases, got {case}"
        )));
    }
    ensure_matching(cat, records)?;

    let support = k44_support_views(cat)?;
    let reference = k44_reference(case);
    let u_star = reference.u_star()?;

    let mut value = RatFn::zero();
    for (s, &l) in support.iter().enumerate() {
        let weight = centre_weight(&records.records()[l])?;
        value = value.add(&reference.pstar(s)?.mul(&weight));
    }
    if !value.eq_value(&u_star) {
        return Err(VerifyError::PrimalInfeasible(
            "expected energy of the view distribution misses the reference value".to_string(),
        ));
    }

    let shapes = partitions_of(4);
    for (shape_idx, shape) in shapes.iter().enumerate() {
        let mut total = RatFn::zero();
        for (s, &l) in support.iter().enumerate() {
            let weight = balance_weight(&records.records()[l], shape_idx)?;
            total = total.add(&reference.pstar(s)?.mul(&weight));
        }
        if !total.is_zero() {
            return Err(VerifyError::PrimalInfeasible(format!(
                "balance constraint for shape {shape} does not vanish"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Case;
    use crate::localview::generate_catalogue;

    #[test]
    fn rejects_max_case_and_wrong_degree() {
        let cat = generate_catalogue(2).unwrap();
        let records = crate::coeffs::compute_coeff_set(&cat, Case::MaxQGe5).unwrap();
        assert!(matches!(
            check_k44_feasibility(&cat, &records),
            Err(VerifyError::MismatchedInputs(_))
        ));
    }
}
