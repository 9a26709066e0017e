//! Positivity multipliers: fixed strictly positive polynomials that, when
//! multiplied onto a slack numerator, clear its mixed signs and leave a
//! polynomial with non-negative coefficients. They were found by hand, one
//! per case, and are embedded here in factored form. A multiplier is only
//! usable because it is itself certifiably positive for t > 0, r >= 0: the
//! loader expands the factored expression and rejects it unless every
//! coefficient is non-negative and the polynomial is nonzero.

use crate::algebra::{parse_poly_expr, BiPoly, SignReport};
use crate::coeffs::Case;

use super::VerifyError;

const MULTIPLIER_Q5: &str = "6*t^2*(t+1)^31*(2*t^2+6*t+5)*(16*t^10+176*t^9+888*t^8\
+2676*t^7+5309*t^6+7260*t^5+6996*t^4+4760*t^3+2224*t^2+660*t+100)";

const MULTIPLIER_QGE6: &str = "2*(r+3)*(r+4)*(t+1)^35*(\
r^4*t^9+9*r^4*t^8+36*r^4*t^7+84*r^4*t^6+126*r^4*t^5\
+126*r^4*t^4+84*r^4*t^3+36*r^4*t^2+9*r^4*t+r^4\
+11*r^3*t^9+105*r^3*t^8+447*r^3*t^7+1117*r^3*t^6+1809*r^3*t^5\
+1971*r^3*t^4+1445*r^3*t^3+687*r^3*t^2+192*r^3*t+24*r^3\
+39*r^2*t^9+411*r^2*t^8+1926*r^2*t^7+5286*r^2*t^6+9393*r^2*t^5\
+11241*r^2*t^4+9090*r^2*t^3+4806*r^2*t^2+1512*r^2*t+216*r^2\
+51*r*t^9+645*r*t^8+3477*r*t^7+10715*r*t^6+21096*r*t^5\
+27816*r*t^4+24812*r*t^3+14580*r*t^2+5184*r*t+864*r\
+18*t^9+342*t^8+2250*t^7+7954*t^6+17508*t^5\
+25428*t^4+24888*t^3+16200*t^2+6480*t+1296)";

const MULTIPLIER_MAX: &str = "2*(t+1)^25";

/// The factored source text of the multiplier for a case.
pub fn multiplier_source(case: Case) -> &'static str {
    match case {
        Case::MinQ5 => MULTIPLIER_Q5,
        Case::MinQGe6 => MULTIPLIER_QGE6,
        Case::MaxQGe5 => MULTIPLIER_MAX,
    }
}

/// Expands a multiplier expression and certifies it: parse failure, a
/// negative coefficient, or the zero polynomial all reject it.
pub fn parse_multiplier(expr: &str) -> Result<BiPoly, VerifyError> {
    let poly =
        parse_poly_expr(expr).map_err(|e| VerifyError::MultiplierRejected(format!("{e}")))?;
    match poly.sign_report() {
        SignReport::HasNegative { witness: (a, b) } => Err(VerifyError::MultiplierRejected(
            format!("negative coefficient at t^{a} r^{b}"),
        )),
        SignReport::AllNonNegative { .. } if poly.is_zero() => Err(
            VerifyError::MultiplierRejected("zero polynomial".to_string()),
        ),
        SignReport::AllNonNegative { .. } => Ok(poly),
    }
}

/// The certified positivity multiplier for a case.
pub fn positivity_multiplier(case: Case) -> Result<BiPoly, VerifyError> {
    parse_multiplier(multiplier_source(case))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    #[test]
    fn all_multipliers_load() {
        for case in Case::ALL {
            let m = positivity_multiplier(case).unwrap();
            assert!(!m.is_zero());
            // Spot value: positive at a sample point in the domain.
            let v = m.eval(&rational(1, 2), &rational(1, 1));
            assert!(v > rational(0, 1));
        }
    }

    #[test]
    fn q5_multiplier_shape() {
        let m = positivity_multiplier(Case::MinQ5).unwrap();
        // Degree 2 + 31 + 2 + 10 = 45, pure in t, divisible by t^2.
        assert_eq!(m.deg_t(), Some(45));
        assert_eq!(m.deg_r(), Some(0));
        assert_eq!(m.coefficient(0, 0), 0.into());
        assert_eq!(m.coefficient(1, 0), 0.into());
        // Leading coefficient 6 * 2 * 16 = 192, trailing nonzero 3000.
        assert_eq!(m.coefficient(45, 0), 192.into());
        assert_eq!(m.coefficient(2, 0), 3000.into());
    }

    #[test]
    fn qge6_multiplier_shape() {
        let m = positivity_multiplier(Case::MinQGe6).unwrap();
        assert_eq!(m.deg_t(), Some(44));
        assert_eq!(m.deg_r(), Some(6));
        // Constant term: 2 * 3 * 4 * 1296.
        assert_eq!(m.coefficient(0, 0), 31104.into());
    }

    #[test]
    fn tampered_multiplier_is_rejected() {
        // Negating the whole expression turns every coefficient negative.
        let negated = format!("-{}", multiplier_source(Case::MinQ5));
        let err = parse_multiplier(&negated).unwrap_err();
        assert!(matches!(err, VerifyError::MultiplierRejected(_)));

        // Tampering with a factor creates mixed signs: the lowest term of
        // (t-1) times a positive polynomial is negative.
        let mixed = format!("(t-1)*{}", multiplier_source(Case::MaxQGe5));
        assert!(parse_multiplier(&mixed).is_err());

        // The zero polynomial certifies nothing.
        assert!(parse_multiplier("t-t").is_err());

        // Damage the syntax.
        let broken = multiplier_source(Case::MaxQGe5).replacen("(t+1)", "(t+1", 1);
        assert!(parse_multiplier(&broken).is_err());
    }
}
