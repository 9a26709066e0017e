//! The slack scan. For each catalogue view the dual constraint leaves a
//! slack that must vanish on the support views and be strictly positive
//! everywhere else, for every t > 0 and r >= 0. Clearing denominators
//! turns each slack into a single polynomial whose coefficient signs
//! decide the question; a fixed positivity multiplier rescues the views
//! whose cleared slack has mixed signs.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{BiPoly, SignReport};
use crate::coeffs::{CoeffSet, Sense};
use crate::localview::Catalogue;

use super::certificate::{Certificate, ViewStatus};
use super::dual::{centre_weight, solve_dual};
use super::multiplier::positivity_multiplier;
use super::reference::k5_reference;
use super::support::k5_view_index;
use super::{ensure_matching, VerifyError};

/// True when every coefficient is non-negative and the restriction to
/// r = 0 is nonzero, which makes the polynomial strictly positive on the
/// whole domain t > 0, r >= 0.
fn strictly_positive(p: &BiPoly) -> bool {
    matches!(
        p.sign_report(),
        SignReport::AllNonNegative {
            strictly_positive_at_r0: true
        }
    )
}

/// Signs off one cleared slack polynomial. Identically zero is reported as
/// tight; otherwise the polynomial itself, then its product with the
/// multiplier, must show strict positivity. On failure the witness is the
/// smallest monomial that stayed negative after the multiplier step.
fn classify_slack(p: &BiPoly, multiplier: &BiPoly) -> ViewStatus {
    if p.is_zero() {
        return ViewStatus::Zero;
    }
    if strictly_positive(p) {
        return ViewStatus::Positive;
    }
    let boosted = p * multiplier;
    if strictly_positive(&boosted) {
        return ViewStatus::Positive;
    }
    match boosted.sign_report() {
        SignReport::HasNegative { witness } => ViewStatus::Fail {
            witness: Some(witness),
        },
        SignReport::AllNonNegative { .. } => ViewStatus::Fail { witness: None },
    }
}

/// Certifies the lower bound: the dual solved on the K_{4,4} support is
/// feasible with slack zero exactly on the three support views and
/// strictly positive on the other views.
///
/// With U* = N/D_U and the dual variables delta_i = A_i / D sharing one
/// denominator, the slack of view L scaled by the positive polynomial
/// 4 Ztilde_L D D_U is
///
/// ```text
/// P_L = 2 D D_U centre_L - 4 D N Ztilde_L - D_U A_1 bal_1(L) - D_U A_2 bal_2(L)
/// ```
///
/// so sign checks on P_L settle the sign of the slack.
pub fn verify_min(cat: &Catalogue, records: &CoeffSet) -> Result<Certificate, VerifyError> {
    let case = records.case();
    if case.sense() != Sense::Min {
        return Err(VerifyError::MismatchedInputs(format!(
            "verify_min needs a minimisation case, got {case}"
        )));
    }
    ensure_matching(cat, records)?;

    let dual = solve_dual(cat, records)?;
    let multiplier = positivity_multiplier(case)?;
    let shapes = dual.shapes();

    assert_eq!(
        dual.delta(0).den(),
        dual.delta(1).den(),
        "dual variables must share a denominator"
    );
    let d_poly = dual.delta(0).den();
    let a1 = dual.delta(0).num();
    let a2 = dual.delta(1).num();
    let n_u = dual.u_star().num();
    let d_u = dual.u_star().den();

    let mult_centre = (d_poly * d_u).scale(&BigInt::from(2));
    let mult_value = (d_poly * n_u).scale(&BigInt::from(4));
    let mult_bal1 = d_u * a1;
    let mult_bal2 = d_u * a2;

    let statuses: Vec<ViewStatus> = records
        .records()
        .par_iter()
        .map(|rec| {
            let p = &(&mult_centre * rec.centre()) - &(&mult_value * rec.ztilde());
            let p = &p - &(&mult_bal1 * rec.balance(shapes[0]));
            let p = &p - &(&mult_bal2 * rec.balance(shapes[1]));
            classify_slack(&p, &multiplier)
        })
        .collect();

    let labels = dual.shape_labels();
    let deltas = vec![
        (labels[0].clone(), dual.delta(0).clone()),
        (labels[1].clone(), dual.delta(1).clone()),
    ];
    Ok(Certificate::new(
        case,
        cat.hash().to_string(),
        dual.u_star().clone(),
        deltas,
        dual.support().to_vec(),
        statuses,
    ))
}

/// Certifies the upper bound: no balance constraint is needed, so the
/// slack of view L against the K_5 view is
///
/// ```text
/// P_L = centre_K5 Ztilde_L - centre_L Ztilde_K5
/// ```
///
/// over the positive denominator 2 Ztilde_K5 Ztilde_L. The K_5 view's own
/// centre weight is also checked against the whole-graph reference model.
pub fn verify_max(cat: &Catalogue, records: &CoeffSet) -> Result<Certificate, VerifyError> {
    let case = records.case();
    if case.sense() != Sense::Max {
        return Err(VerifyError::MismatchedInputs(format!(
            "verify_max needs the maximisation case, got {case}"
        )));
    }
    ensure_matching(cat, records)?;

    let k5 = k5_view_index(cat)?;
    let multiplier = positivity_multiplier(case)?;
    let top = &records.records()[k5];

    let u_star = k5_reference(case).u_star()?;
    if !centre_weight(top)?.eq_value(&u_star) {
        return Err(VerifyError::MismatchedInputs(
            "the K5 view's centre weight disagrees with the reference energy".to_string(),
        ));
    }

    let statuses: Vec<ViewStatus> = records
        .records()
        .par_iter()
        .map(|rec| {
            let p = &(top.centre() * rec.ztilde()) - &(rec.centre() * top.ztilde());
            classify_slack(&p, &multiplier)
        })
        .collect();

    Ok(Certificate::new(
        case,
        cat.hash().to_string(),
        u_star,
        Vec::new(),
        vec![k5],
        statuses,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly_expr;

    #[test]
    fn classify_zero_and_positive() {
        let m = parse_poly_expr("(t+1)^2").unwrap();
        assert_eq!(classify_slack(&BiPoly::zero(), &m), ViewStatus::Zero);
        let p = parse_poly_expr("t^2+3*t").unwrap();
        assert_eq!(classify_slack(&p, &m), ViewStatus::Positive);
    }

    #[test]
    fn classify_needs_multiplier() {
        // 1 - t + t^2 has a negative coefficient but (1+t)(1-t+t^2) = 1+t^3.
        let m = parse_poly_expr("t+1").unwrap();
        let p = parse_poly_expr("t^2-t+1").unwrap();
        assert_eq!(classify_slack(&p, &m), ViewStatus::Positive);
    }

    #[test]
    fn classify_hard_failure_keeps_witness() {
        // t - 1 is negative near 0; no non-negative multiplier fixes it.
        let m = parse_poly_expr("t+1").unwrap();
        let p = parse_poly_expr("t-1").unwrap();
        assert_eq!(
            classify_slack(&p, &m),
            ViewStatus::Fail {
                witness: Some((0, 0))
            }
        );
    }

    #[test]
    fn classify_rejects_vanishing_at_r0() {
        // r (t + 1) is non-negative but vanishes on the whole line r = 0.
        let m = parse_poly_expr("t+1").unwrap();
        let p = parse_poly_expr("r*(t+1)").unwrap();
        assert_eq!(classify_slack(&p, &m), ViewStatus::Fail { witness: None });
    }
}
