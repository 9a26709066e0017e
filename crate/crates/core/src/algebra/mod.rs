//! Exact algebra over the two verification variables.
//!
//! Everything downstream works with bivariate polynomials in `t` (the
//! temperature variable, `e^β = 1 + t`) and `r` (the colour-count offset)
//! with arbitrary-precision integer coefficients, and with quotients of such
//! polynomials whose denominators are certified coefficient-non-negative.
//! No floating point appears anywhere in the pipeline.

mod parse;
mod poly;
mod ratfn;
mod solve;
mod textio;

pub use parse::{parse_poly_expr, ParseError};
pub use poly::{BiPoly, SignReport};
pub use ratfn::RatFn;
pub use solve::{solve_2x2, SolveOutcome};
pub use textio::{parse_poly_block, parse_ratfn_block, poly_to_text, ratfn_to_text, TextIoError};

pub use num_bigint::BigInt;

/// Exact rational scalar used for point evaluation and the simplex.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rational constants.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `a` or `a/b` with optional sign into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let numer: BigInt = n
        .parse()
        .map_err(|_| ParseError::new(format!("bad rational numerator `{n}`")))?;
    let denom: BigInt = d
        .parse()
        .map_err(|_| ParseError::new(format!("bad rational denominator `{d}`")))?;
    if denom == BigInt::from(0) {
        return Err(ParseError::new("rational with zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Errors raised by algebra operations whose contracts can fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// A rational function was constructed with an identically zero denominator.
    ZeroDenominator,
    /// A denominator candidate had both positive and negative coefficients,
    /// so its sign on the closed positive quadrant cannot be certified.
    DivisionLosesPositivity,
    /// Exact polynomial division was requested but the divisor does not
    /// divide the dividend in Z[t, r].
    NotDivisible,
    /// A point evaluation hit a vanishing denominator.
    EvalDividesByZero,
}

impl std::fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraError::ZeroDenominator => write!(f, "denominator is the zero polynomial"),
            AlgebraError::DivisionLosesPositivity => {
                write!(f, "denominator has mixed coefficient signs")
            }
            AlgebraError::NotDivisible => write!(f, "polynomial division is not exact"),
            AlgebraError::EvalDividesByZero => write!(f, "evaluation point zeroes a denominator"),
        }
    }
}

impl std::error::Error for AlgebraError {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_helpers() {
        assert_eq!(rational(1, 2) + rational(1, 3), rational(5, 6));
        assert_eq!(parse_rational("1/2").unwrap(), rational(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), rational(-3, 1));
        assert_eq!(parse_rational(" 7 / 4 ").unwrap(), rational(7, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
