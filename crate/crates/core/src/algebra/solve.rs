//! Overdetermined 2x2 linear solving over rational functions.

use super::ratfn::RatFn;
use super::AlgebraError;

/// Result of solving three equations `a_i x + b_i y = rhs_i` for two
/// unknowns.
#[derive(Debug, Clone)]
pub enum SolveOutcome {
    /// Unique solution of the first two equations, verified against the
    /// third. Both components share one denominator polynomial.
    Solved { x: RatFn, y: RatFn },
    /// The first two equations determine a solution the third contradicts.
    Inconsistent,
    /// The first two equations are linearly dependent.
    Singular,
}

/// Solves the 3-equation, 2-unknown system given as rows `(a, b, rhs)` by
/// Cramer's rule on the first two rows, then checks the third row exactly.
///
/// The two returned components are built through the same division, so their
/// denominators are structurally identical; the slack scan relies on that.
pub fn solve_2x2(rows: &[(RatFn, RatFn, RatFn); 3]) -> Result<SolveOutcome, AlgebraError> {
    let (a0, b0, c0) = &rows[0];
    let (a1, b1, c1) = &rows[1];

    let det = a0.mul(b1).sub(&a1.mul(b0));
    if det.is_zero() {
        return Ok(SolveOutcome::Singular);
    }
    let det_x = c0.mul(b1).sub(&c1.mul(b0));
    let det_y = a0.mul(c1).sub(&a1.mul(c0));
    debug_assert_eq!(det_x.den(), det_y.den());

    let x = det_x.div(&det)?;
    let y = det_y.div(&det)?;

    let (a2, b2, c2) = &rows[2];
    let lhs = a2.mul(&x).add(&b2.mul(&y));
    if !lhs.eq_value(c2) {
        return Ok(SolveOutcome::Inconsistent);
    }
    Ok(SolveOutcome::Solved { x, y })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BiPoly;

    fn poly(p: BiPoly) -> RatFn {
        RatFn::from_poly(p)
    }

    fn konst(c: i64) -> RatFn {
        poly(BiPoly::constant(c))
    }

    #[test]
    fn consistent_system() {
        // x = t, y = r from { x = t; y = r; x + y = t + r }
        let a = poly(BiPoly::var_t());
        let b = poly(BiPoly::var_r());
        let rows = [
            (konst(1), konst(0), a.clone()),
            (konst(0), konst(1), b.clone()),
            (konst(1), konst(1), a.add(&b)),
        ];
        match solve_2x2(&rows).unwrap() {
            SolveOutcome::Solved { x, y } => {
                assert!(x.eq_value(&a));
                assert!(y.eq_value(&b));
            }
            other => panic!("expected solution, got {other:?}"),
        }
    }

    #[test]
    fn singular_system() {
        let rows = [
            (konst(1), konst(1), konst(1)),
            (konst(2), konst(2), konst(2)),
            (konst(3), konst(3), konst(3)),
        ];
        assert!(matches!(solve_2x2(&rows).unwrap(), SolveOutcome::Singular));
    }

    #[test]
    fn inconsistent_system() {
        let rows = [
            (konst(1), konst(0), konst(1)),
            (konst(0), konst(1), konst(1)),
            (konst(1), konst(1), konst(3)),
        ];
        assert!(matches!(
            solve_2x2(&rows).unwrap(),
            SolveOutcome::Inconsistent
        ));
    }

    #[test]
    fn shared_denominators() {
        // (t+1)x + y = 1; x + (t+1)y = 1; x + y = 2/(t+2)
        // has x = y = 1/(t+2) and determinant t^2 + 2t.
        let t_plus_1 = poly(&BiPoly::var_t() + &BiPoly::one());
        let third_rhs =
            RatFn::new(BiPoly::constant(2), &BiPoly::var_t() + &BiPoly::constant(2)).unwrap();
        let rows = [
            (t_plus_1.clone(), konst(1), konst(1)),
            (konst(1), t_plus_1, konst(1)),
            (konst(1), konst(1), third_rhs),
        ];
        match solve_2x2(&rows).unwrap() {
            SolveOutcome::Solved { x, y } => {
                assert_eq!(x.den(), y.den());
                let expect =
                    RatFn::new(BiPoly::one(), &BiPoly::var_t() + &BiPoly::constant(2)).unwrap();
                assert!(x.eq_value(&expect));
                assert!(y.eq_value(&expect));
            }
            other => panic!("expected solution, got {other:?}"),
        }
    }
}
