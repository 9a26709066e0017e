//! Plain-text serialization for polynomials and rational functions.
//!
//! A polynomial is one line per term, `t^<a> r^<b> <signed-decimal>`, sorted
//! ascending by `(a, b)`; the zero polynomial has no lines. A rational
//! function is a numerator block, a `---` line, and a denominator block.

use num_bigint::BigInt;

use super::poly::BiPoly;
use super::ratfn::RatFn;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextIoError {
    message: String,
}

impl TextIoError {
    fn new(message: impl Into<String>) -> Self {
        TextIoError {
            message: message.into(),
        }
    }
}

impl std::fmt::Display for TextIoError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "text format error: {}", self.message)
    }
}

impl std::error::Error for TextIoError {}

/// Serializes a polynomial, one `t^a r^b coeff` line per term, trailing
/// newline included unless the polynomial is zero.
pub fn poly_to_text(p: &BiPoly) -> String {
    let mut out = String::new();
    for (&(a, b), c) in p.terms() {
        out.push_str(&format!("t^{a} r^{b} {c}\n"));
    }
    out
}

/// Parses a polynomial block. Blank lines and leading/trailing whitespace
/// are ignored; duplicate monomials are rejected.
pub fn parse_poly_block(text: &str) -> Result<BiPoly, TextIoError> {
    let mut terms: Vec<((u32, u32), BigInt)> = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let t_field = fields
            .next()
            .ok_or_else(|| TextIoError::new("empty term line"))?;
        let r_field = fields
            .next()
            .ok_or_else(|| TextIoError::new(format!("missing r field in `{line}`")))?;
        let c_field = fields
            .next()
            .ok_or_else(|| TextIoError::new(format!("missing coefficient in `{line}`")))?;
        if fields.next().is_some() {
            return Err(TextIoError::new(format!("trailing fields in `{line}`")));
        }
        let a = parse_exponent(t_field, "t")?;
        let b = parse_exponent(r_field, "r")?;
        let c: BigInt = c_field
            .parse()
            .map_err(|_| TextIoError::new(format!("bad coefficient `{c_field}`")))?;
        if terms.iter().any(|(key, _)| *key == (a, b)) {
            return Err(TextIoError::new(format!("duplicate monomial t^{a} r^{b}")));
        }
        terms.push(((a, b), c));
    }
    Ok(BiPoly::from_terms(terms))
}

fn parse_exponent(field: &str, var: &str) -> Result<u32, TextIoError> {
    let prefix = format!("{var}^");
    let rest = field
        .strip_prefix(&prefix)
        .ok_or_else(|| TextIoError::new(format!("expected `{prefix}<int>`, found `{field}`")))?;
    rest.parse()
        .map_err(|_| TextIoError::new(format!("bad exponent `{field}`")))
}

/// Serializes a rational function as numerator, `---`, denominator.
pub fn ratfn_to_text(f: &RatFn) -> String {
    let mut out = poly_to_text(f.num());
    out.push_str("---\n");
    out.push_str(&poly_to_text(f.den()));
    out
}

/// Parses a two-block rational function; the denominator contract
/// (nonzero, coefficient-non-negative) is re-checked on construction.
pub fn parse_ratfn_block(text: &str) -> Result<RatFn, TextIoError> {
    let mut parts = text.splitn(2, "---");
    let num_text = parts
        .next()
        .ok_or_else(|| TextIoError::new("missing numerator block"))?;
    let den_text = parts
        .next()
        .ok_or_else(|| TextIoError::new("missing `---` separator"))?;
    let num = parse_poly_block(num_text)?;
    let den = parse_poly_block(den_text)?;
    RatFn::new(num, den).map_err(|e| TextIoError::new(format!("invalid rational function: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip() {
        let p = parse_poly_block("t^0 r^0 5\nt^1 r^0 -3\nt^2 r^1 7\n").unwrap();
        assert_eq!(p.coefficient(1, 0), (-3).into());
        let text = poly_to_text(&p);
        assert_eq!(text, "t^0 r^0 5\nt^1 r^0 -3\nt^2 r^1 7\n");
        assert_eq!(parse_poly_block(&text).unwrap(), p);
    }

    #[test]
    fn zero_poly_is_empty_text() {
        assert_eq!(poly_to_text(&BiPoly::zero()), "");
        assert!(parse_poly_block("").unwrap().is_zero());
        assert!(parse_poly_block("\n  \n").unwrap().is_zero());
    }

    #[test]
    fn sorted_output() {
        let p = &(&BiPoly::var_r() * &BiPoly::var_t()) + &BiPoly::constant(2);
        assert_eq!(poly_to_text(&p), "t^0 r^0 2\nt^1 r^1 1\n");
    }

    #[test]
    fn ratfn_round_trip() {
        let f = RatFn::new(BiPoly::var_t(), BiPoly::one_plus_t_pow(2)).unwrap();
        let text = ratfn_to_text(&f);
        assert_eq!(text, "t^1 r^0 1\n---\nt^0 r^0 1\nt^1 r^0 2\nt^2 r^0 1\n");
        let back = parse_ratfn_block(&text).unwrap();
        assert!(back.eq_value(&f));
    }

    #[test]
    fn zero_numerator_round_trip() {
        let f = RatFn::new(BiPoly::zero(), BiPoly::one_plus_t_pow(1)).unwrap();
        let text = ratfn_to_text(&f);
        let back = parse_ratfn_block(&text).unwrap();
        assert!(back.is_zero());
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_poly_block("t^1 1").is_err());
        assert!(parse_poly_block("t^1 r^0 x").is_err());
        assert!(parse_poly_block("r^0 t^1 1").is_err());
        assert!(parse_poly_block("t^0 r^0 1\nt^0 r^0 2").is_err());
        assert!(parse_ratfn_block("t^0 r^0 1\n").is_err()); // no separator
        assert!(parse_ratfn_block("t^0 r^0 1\n---\n").is_err()); // zero denominator
                                                                 // mixed-sign denominator cannot be certified
        assert!(parse_ratfn_block("t^0 r^0 1\n---\nt^0 r^0 1\nt^1 r^0 -1\n").is_err());
    }
}
