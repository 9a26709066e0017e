//! Dual variables for the minimisation bound. The candidate optimum puts
//! all probability on the three views that occur in K_{4,4}, so the dual
//! constraint must hold with equality there. Only two of the five balance
//! constraints carry a dual variable; equality on the three support views
//! gives three equations in those two unknowns, solved exactly and checked
//! for mutual consistency.

use crate::algebra::{solve_2x2, RatFn, SolveOutcome};
use crate::coeffs::{partitions_of, Case, CoeffRecord, CoeffSet, Sense};
use crate::localview::Catalogue;
use num_bigint::BigInt;

use super::reference::k44_reference;
use super::support::k44_support_views;
use super::{ensure_matching, VerifyError};

/// Indices into the partitions of 4, in standard order, of the two balance
/// constraints whose dual variables are nonzero. Only minimisation cases
/// have them.
pub fn dual_shapes(case: Case) -> Result<[usize; 2], VerifyError> {
    match case {
        Case::MinQ5 => Ok([0, 3]),
        Case::MinQGe6 => Ok([3, 4]),
        Case::MaxQGe5 => Err(VerifyError::MismatchedInputs(
            "the maximisation bound has no dual variables".to_string(),
        )),
    }
}

/// The centre weight c_L = centre / (2 Ztilde) of one view's record.
pub(super) fn centre_weight(rec: &CoeffRecord) -> Result<RatFn, VerifyError> {
    Ok(RatFn::new(
        rec.centre().clone(),
        rec.ztilde().scale(&BigInt::from(2)),
    )?)
}

/// The balance weight gamma^s_L = balance_s / (4 Ztilde) of one view's
/// record.
pub(super) fn balance_weight(rec: &CoeffRecord, s: usize) -> Result<RatFn, VerifyError> {
    Ok(RatFn::new(
        rec.balance(s).clone(),
        rec.ztilde().scale(&BigInt::from(4)),
    )?)
}

/// A solved dual: the candidate optimum value and the two dual variables,
/// exact rational functions of (t, r).
#[derive(Debug, Clone)]
pub struct DualSolution {
    case: Case,
    shapes: [usize; 2],
    support: [usize; 3],
    u_star: RatFn,
    delta: [RatFn; 2],
}

impl DualSolution {
    pub fn case(&self) -> Case {
        self.case
    }

    /// Partition-of-4 indices of the two balance constraints with nonzero
    /// dual variables.
    pub fn shapes(&self) -> [usize; 2] {
        self.shapes
    }

    /// Catalogue indices of the three support views.
    pub fn support(&self) -> [usize; 3] {
        self.support
    }

    /// The candidate optimum: the K_{4,4} energy per vertex.
    pub fn u_star(&self) -> &RatFn {
        &self.u_star
    }

    /// The dual variable paired with `shapes()[i]`.
    pub fn delta(&self, i: usize) -> &RatFn {
        &self.delta[i]
    }

    /// Human-readable labels of the two dual shapes.
    pub fn shape_labels(&self) -> [String; 2] {
        let parts = partitions_of(4);
        [
            parts[self.shapes[0]].to_string(),
            parts[self.shapes[1]].to_string(),
        ]
    }
}

/// Solves the three support equations
/// `U* + delta_1 gamma^{s1}_L + delta_2 gamma^{s2}_L = c_L` for the two
/// dual variables. The third equation is redundant when the candidate is
/// genuinely optimal; a contradiction or a singular pair is an error.
pub fn solve_dual(cat: &Catalogue, records: &CoeffSet) -> Result<DualSolution, VerifyError> {
    let case = records.case();
    if case.sense() != Sense::Min {
        return Err(VerifyError::MismatchedInputs(format!(
            "dual variables only exist for minimisation cases, got {case}"
        )));
    }
    ensure_matching(cat, records)?;

    let support = k44_support_views(cat)?;
    let shapes = dual_shapes(case)?;
    let u_star = k44_reference(case).u_star()?;
    let n_u = u_star.num();
    let d_u = u_star.den();

    // Each support equation is scaled by its own positive factor 4 Ztilde_L,
    // which leaves the solution unchanged but makes the two coefficient
    // columns plain polynomials, so the Cramer determinant stays small and
    // the two dual variables come out over one shared denominator.
    let mut rows = Vec::with_capacity(3);
    for &l in &support {
        let rec = &records.records()[l];
        let a = RatFn::from_poly(rec.balance(shapes[0]).clone());
        let b = RatFn::from_poly(rec.balance(shapes[1]).clone());
        let rhs_num = &rec.centre().scale(&BigInt::from(2)) * d_u;
        let rhs_num = &rhs_num - &(&rec.ztilde().scale(&BigInt::from(4)) * n_u);
        let rhs = RatFn::new(rhs_num, d_u.clone())?;
        rows.push((a, b, rhs));
    }
    let rows: [(RatFn, RatFn, RatFn); 3] = rows.try_into().expect("three support rows");

    match solve_2x2(&rows)? {
        SolveOutcome::Solved { x, y } => Ok(DualSolution {
            case,
            shapes,
            support,
            u_star,
            delta: [x, y],
        }),
        SolveOutcome::Singular => Err(VerifyError::DualSingular),
        SolveOutcome::Inconsistent => Err(VerifyError::DualInconsistent),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_per_case() {
        let parts = partitions_of(4);
        let q5 = dual_shapes(Case::MinQ5).unwrap();
        assert_eq!(parts[q5[0]].to_string(), "4");
        assert_eq!(parts[q5[1]].to_string(), "2+1+1");
        let qge6 = dual_shapes(Case::MinQGe6).unwrap();
        assert_eq!(parts[qge6[0]].to_string(), "2+1+1");
        assert_eq!(parts[qge6[1]].to_string(), "1+1+1+1");
        assert!(dual_shapes(Case::MaxQGe5).is_err());
    }
}
