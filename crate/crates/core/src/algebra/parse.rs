//! A small expression parser for polynomials in `t` and `r`.
//!
//! Grammar (whitespace ignored):
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ['^' uint]
//! base   := uint | 't' | 'r' | '(' expr ')'
//! ```
//! This is how embedded certificate constants (the sign multipliers) are
//! stored: as human-auditable factored expressions expanded at load time.

use num_bigint::BigInt;

use super::poly::BiPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    message: String,
}

impl ParseError {
    pub(crate) fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
        }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error: {}", self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parses an expression over `t`, `r`, integers, `+ - * ^` and parentheses
/// into an expanded polynomial.
pub fn parse_poly_expr(input: &str) -> Result<BiPoly, ParseError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser { tokens, pos: 0 };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(ParseError::new(format!(
            "unexpected trailing token at position {}",
            parser.pos
        )));
    }
    Ok(poly)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number(BigInt),
    VarT,
    VarR,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let value = digits
                    .parse::<BigInt>()
                    .map_err(|_| ParseError::new(format!("bad integer `{digits}`")))?;
                tokens.push(Token::Number(value));
            }
            't' => {
                chars.next();
                tokens.push(Token::VarT);
            }
            'r' => {
                chars.next();
                tokens.push(Token::VarR);
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::Open);
            }
            ')' => {
                chars.next();
                tokens.push(Token::Close);
            }
            other => return Err(ParseError::new(format!("unexpected character `{other}`"))),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.pos).cloned();
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    fn expr(&mut self) -> Result<BiPoly, ParseError> {
        let mut negate = false;
        if matches!(self.peek(), Some(Token::Minus)) {
            self.next();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Some(Token::Minus) => {
                    self.next();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.next();
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BiPoly, ParseError> {
        let base = self.base()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.next();
            match self.next() {
                Some(Token::Number(n)) => {
                    let exp = u32::try_from(&n)
                        .map_err(|_| ParseError::new(format!("exponent `{n}` out of range")))?;
                    Ok(base.pow(exp))
                }
                other => Err(ParseError::new(format!(
                    "expected integer exponent, found {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<BiPoly, ParseError> {
        match self.next() {
            Some(Token::Number(n)) => Ok(BiPoly::constant_big(n)),
            Some(Token::VarT) => Ok(BiPoly::var_t()),
            Some(Token::VarR) => Ok(BiPoly::var_r()),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(inner),
                    other => Err(ParseError::new(format!("expected `)`, found {other:?}"))),
                }
            }
            other => Err(ParseError::new(format!(
                "expected number, variable or `(`, found {other:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    #[test]
    fn parses_simple_sums() {
        let p = parse_poly_expr("2*t^2 + 6*t + 5").unwrap();
        assert_eq!(p.coefficient(2, 0), 2.into());
        assert_eq!(p.coefficient(1, 0), 6.into());
        assert_eq!(p.coefficient(0, 0), 5.into());
    }

    #[test]
    fn parses_factored_products() {
        let p = parse_poly_expr("6*t^2*(t+1)^3*(2*t^2+6*t+5)").unwrap();
        // constant term of (t+1)^3*(2t^2+6t+5) is 5; times 6t^2 shifts to t^2
        assert_eq!(p.coefficient(2, 0), 30.into());
        assert_eq!(p.deg_t(), Some(7));
        let q = parse_poly_expr("(r+3)*(r+4)").unwrap();
        assert_eq!(q.coefficient(0, 1), 7.into());
    }

    #[test]
    fn parses_negatives_and_nesting() {
        let p = parse_poly_expr("-(t - r)^2").unwrap();
        assert_eq!(p.coefficient(2, 0), (-1).into());
        assert_eq!(p.coefficient(1, 1), 2.into());
        assert_eq!(p.coefficient(0, 2), (-1).into());
        assert_eq!(p.eval(&rational(2, 1), &rational(1, 1)), rational(-1, 1));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly_expr("t +").is_err());
        assert!(parse_poly_expr("x").is_err());
        assert!(parse_poly_expr("(t").is_err());
        assert!(parse_poly_expr("t ^ r").is_err());
        assert!(parse_poly_expr("1 2").is_err());
    }
}
