//! Sparse bivariate polynomials over arbitrary-precision integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Rational};

/// A polynomial in `t` and `r` with `BigInt` coefficients.
///
/// Terms are keyed by `(t_exponent, r_exponent)`; the map never stores zero
/// coefficients, so the zero polynomial is the empty map and structural
/// equality is value equality. Iteration order is ascending in
/// `(t_exponent, r_exponent)`, which is also the serialization order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

/// Outcome of a coefficient sign scan, the primitive behind every
/// positivity certificate in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignReport {
    /// Every stored coefficient is positive (zero coefficients are not
    /// stored). `strictly_positive_at_r0` records whether the restriction
    /// to `r = 0` is a nonzero polynomial in `t`; the zero polynomial
    /// reports `AllNonNegative { strictly_positive_at_r0: false }`.
    AllNonNegative { strictly_positive_at_r0: bool },
    /// At least one coefficient is negative; `witness` is the smallest
    /// `(t_exponent, r_exponent)` with a negative coefficient.
    HasNegative { witness: (u32, u32) },
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        BiPoly::constant_big(BigInt::from(c))
    }

    pub fn constant_big(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BiPoly { terms }
    }

    /// The monomial `c * t^a * r^b`.
    pub fn monomial(c: BigInt, t_exp: u32, r_exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((t_exp, r_exp), c);
        }
        BiPoly { terms }
    }

    pub fn var_t() -> Self {
        BiPoly::monomial(BigInt::one(), 1, 0)
    }

    pub fn var_r() -> Self {
        BiPoly::monomial(BigInt::one(), 0, 1)
    }

    /// `(1 + t)^e` via the binomial row, used to clear partition-function
    /// denominators.
    pub fn one_plus_t_pow(e: u32) -> Self {
        let mut coeff = BigInt::one();
        let mut terms = BTreeMap::new();
        for k in 0..=e {
            terms.insert((k, 0), coeff.clone());
            if k < e {
                coeff = coeff * BigInt::from(e - k) / BigInt::from(k + 1);
            }
        }
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map(|c| c.is_one()).unwrap_or(false)
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Degree in `t`, or `None` for the zero polynomial.
    pub fn deg_t(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    /// Degree in `r`, or `None` for the zero polynomial.
    pub fn deg_r(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// Iterates terms in ascending `(t_exponent, r_exponent)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t_exp: u32, r_exp: u32) -> BigInt {
        self.terms
            .get(&(t_exp, r_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms(iter: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut terms: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (key, c) in iter {
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(key).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&key);
            }
        }
        BiPoly { terms }
    }

    pub fn add_assign_term(&mut self, t_exp: u32, r_exp: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (t_exp, r_exp);
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &BigInt) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The restriction `p(t, 0)` as a polynomial in `t` alone.
    pub fn restrict_r0(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|((_, b), _)| *b == 0)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, t0: &Rational, r0: &Rational) -> Rational {
        let dt = self.deg_t().unwrap_or(0) as usize;
        let dr = self.deg_r().unwrap_or(0) as usize;
        let t_pows = power_table(t0, dt);
        let r_pows = power_table(r0, dr);
        let mut acc = Rational::zero();
        for (&(a, b), c) in &self.terms {
            acc += &t_pows[a as usize] * &r_pows[b as usize] * Rational::from(c.clone());
        }
        acc
    }

    /// Scans stored coefficients for signs; see [`SignReport`].
    pub fn sign_report(&self) -> SignReport {
        for (&key, c) in &self.terms {
            if c.is_negative() {
                return SignReport::HasNegative { witness: key };
            }
        }
        let strictly_positive_at_r0 = self.terms.keys().any(|&(_, b)| b == 0);
        SignReport::AllNonNegative {
            strictly_positive_at_r0,
        }
    }

    /// Exact division in Z[t, r]: returns `q` with `self = q * divisor`, or
    /// `NotDivisible`. Internally performs long division in `t` with
    /// coefficients in Q[r].
    pub fn exact_div(&self, divisor: &BiPoly) -> Result<BiPoly, AlgebraError> {
        if divisor.is_zero() {
            return Err(AlgebraError::NotDivisible);
        }
        if self.is_zero() {
            return Ok(BiPoly::zero());
        }
        let num_deg = self.deg_t().unwrap() as i64;
        let den_deg = divisor.deg_t().unwrap() as i64;
        if num_deg < den_deg {
            return Err(AlgebraError::NotDivisible);
        }
        let mut rem = to_t_coeffs(self);
        let den = to_t_coeffs(divisor);
        let den_lead = &den[den_deg as usize];
        let mut quo: Vec<RPoly> = vec![RPoly::zero(); (num_deg - den_deg + 1) as usize];
        for d in (den_deg..=num_deg).rev() {
            let lead = rem.get(d as usize).cloned().unwrap_or_else(RPoly::zero);
            if lead.is_zero() {
                continue;
            }
            let q = lead.div_exact(den_lead).ok_or(AlgebraError::NotDivisible)?;
            for (i, dc) in den.iter().enumerate() {
                if dc.is_zero() {
                    continue;
                }
                let idx = (d - den_deg) as usize + i;
                let prod = q.mul(dc);
                rem[idx] = rem[idx].sub(&prod);
            }
            quo[(d - den_deg) as usize] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(AlgebraError::NotDivisible);
        }
        from_t_coeffs(&quo).ok_or(AlgebraError::NotDivisible)
    }
}

fn power_table(x: &Rational, deg: usize) -> Vec<Rational> {
    let mut pows = Vec::with_capacity(deg + 1);
    pows.push(Rational::one());
    for i in 0..deg {
        let next = &pows[i] * x;
        pows.push(next);
    }
    pows
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_assign_term(a, b, c);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            let neg = -c.clone();
            out.add_assign_term(a, b, &neg);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        // Products dominate the slack scan, so accumulate into a dense grid
        // indexed by exponent pair instead of a tree map when the result is
        // small enough, which it always is for the pipeline's degrees.
        let dt = (self.deg_t().unwrap() + rhs.deg_t().unwrap()) as usize;
        let dr = (self.deg_r().unwrap() + rhs.deg_r().unwrap()) as usize;
        let width = dr + 1;
        let cells = (dt + 1) * width;
        if cells <= 1 << 22 {
            let mut grid: Vec<BigInt> = vec![BigInt::zero(); cells];
            for (&(a1, b1), c1) in &self.terms {
                for (&(a2, b2), c2) in &rhs.terms {
                    let idx = (a1 + a2) as usize * width + (b1 + b2) as usize;
                    grid[idx] += c1 * c2;
                }
            }
            let mut terms = BTreeMap::new();
            for (idx, c) in grid.into_iter().enumerate() {
                if !c.is_zero() {
                    terms.insert(((idx / width) as u32, (idx % width) as u32), c);
                }
            }
            BiPoly { terms }
        } else {
            let mut out = BiPoly::zero();
            for (&(a1, b1), c1) in &self.terms {
                for (&(a2, b2), c2) in &rhs.terms {
                    let prod = c1 * c2;
                    out.add_assign_term(a1 + a2, b1 + b2, &prod);
                }
            }
            out
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let has_vars = a > 0 || b > 0;
            if !has_vars || !mag.is_one() {
                write!(f, "{mag}")?;
                if has_vars {
                    write!(f, "*")?;
                }
            }
            if a > 0 {
                write!(f, "t")?;
                if a > 1 {
                    write!(f, "^{a}")?;
                }
                if b > 0 {
                    write!(f, "*")?;
                }
            }
            if b > 0 {
                write!(f, "r")?;
                if b > 1 {
                    write!(f, "^{b}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coefficient of a polynomial viewed in `t`: a univariate polynomial in `r`
/// over exact rationals. Only used inside exact division.
#[derive(Clone)]
struct RPoly {
    coeffs: Vec<Rational>,
}

impl RPoly {
    fn zero() -> Self {
        RPoly { coeffs: vec![] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        self
    }

    fn deg(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    fn sub(&self, rhs: &RPoly) -> RPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        RPoly { coeffs }.trim()
    }

    fn mul(&self, rhs: &RPoly) -> RPoly {
        if self.is_zero() || rhs.is_zero() {
            return RPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        RPoly { coeffs }.trim()
    }

    /// Exact division in Q[r]; `None` when the remainder is nonzero.
    fn div_exact(&self, rhs: &RPoly) -> Option<RPoly> {
        let dd = rhs.deg()?;
        if self.is_zero() {
            return Some(RPoly::zero());
        }
        let nd = self.deg().unwrap();
        if nd < dd {
            return None;
        }
        let mut rem = self.clone().trim();
        let mut quo = vec![Rational::zero(); nd - dd + 1];
        let lead = rhs.coeffs[dd].clone();
        for d in (dd..=nd).rev() {
            let c = rem.coeffs.get(d).cloned().unwrap_or_else(Rational::zero);
            if c.is_zero() {
                continue;
            }
            let q = c / &lead;
            for (i, rc) in rhs.coeffs.iter().enumerate() {
                let idx = d - dd + i;
                let delta = &q * rc;
                rem.coeffs[idx] -= delta;
            }
            quo[d - dd] = q;
        }
        if rem.is_zero() {
            Some(RPoly { coeffs: quo }.trim())
        } else {
            None
        }
    }
}

fn to_t_coeffs(p: &BiPoly) -> Vec<RPoly> {
    let dt = p.deg_t().unwrap_or(0) as usize;
    let mut out = vec![RPoly::zero(); dt + 1];
    for (&(a, b), c) in &p.terms {
        let slot = &mut out[a as usize];
        if slot.coeffs.len() <= b as usize {
            slot.coeffs.resize(b as usize + 1, Rational::zero());
        }
        slot.coeffs[b as usize] = Rational::from(c.clone());
    }
    out
}

/// Rebuilds a BiPoly from rational `t`-coefficients; `None` if any
/// coefficient is non-integral (the division left Z[t, r]).
fn from_t_coeffs(coeffs: &[RPoly]) -> Option<BiPoly> {
    let mut out = BiPoly::zero();
    for (a, rp) in coeffs.iter().enumerate() {
        for (b, c) in rp.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return None;
            }
            out.add_assign_term(a as u32, b as u32, &c.to_integer());
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    fn t() -> BiPoly {
        BiPoly::var_t()
    }

    fn r() -> BiPoly {
        BiPoly::var_r()
    }

    #[test]
    fn constants_and_powers() {
        assert_eq!(BiPoly::one_plus_t_pow(0), BiPoly::one());
        let one_plus_t = &BiPoly::one() + &t();
        assert_eq!(&one_plus_t * &one_plus_t, BiPoly::one_plus_t_pow(2));
        let sq = BiPoly::one_plus_t_pow(2);
        assert_eq!(sq.coefficient(1, 0), 2.into());
        assert_eq!(sq.coefficient(2, 0), 1.into());
        assert_eq!(BiPoly::one_plus_t_pow(31).coefficient(15, 0), {
            // C(31, 15)
            BigInt::from(300540195u64)
        });
    }

    #[test]
    fn product_r_shift() {
        // (r+3)(r+4) = r^2 + 7r + 12
        let a = &r() + &BiPoly::constant(3);
        let b = &r() + &BiPoly::constant(4);
        let p = &a * &b;
        assert_eq!(p.coefficient(0, 2), 1.into());
        assert_eq!(p.coefficient(0, 1), 7.into());
        assert_eq!(p.coefficient(0, 0), 12.into());
        assert_eq!(p.term_count(), 3);
    }

    #[test]
    fn addition_cancels() {
        let p = &t() - &t();
        assert!(p.is_zero());
        let q = &(&t() + &r()) - &r();
        assert_eq!(q, t());
    }

    #[test]
    fn exact_division() {
        let cube = BiPoly::one_plus_t_pow(3);
        let lin = BiPoly::one_plus_t_pow(1);
        assert_eq!(cube.exact_div(&lin).unwrap(), BiPoly::one_plus_t_pow(2));

        // (t^2 + r t)/t = t + r
        let p = &(&t() * &t()) + &(&r() * &t());
        assert_eq!(p.exact_div(&t()).unwrap(), &t() + &r());

        // (t + 1)/t fails
        let p = &t() + &BiPoly::one();
        assert_eq!(p.exact_div(&t()), Err(AlgebraError::NotDivisible));

        // division by zero fails
        assert_eq!(
            p.exact_div(&BiPoly::zero()),
            Err(AlgebraError::NotDivisible)
        );

        // zero divided by anything is zero
        assert_eq!(BiPoly::zero().exact_div(&p).unwrap(), BiPoly::zero());
    }

    #[test]
    fn exact_division_bivariate() {
        // ((r+3)(1+t)^2) / (1+t) = (r+3)(1+t)
        let f = &(&r() + &BiPoly::constant(3)) * &BiPoly::one_plus_t_pow(2);
        let q = f.exact_div(&BiPoly::one_plus_t_pow(1)).unwrap();
        assert_eq!(
            q,
            &(&r() + &BiPoly::constant(3)) * &BiPoly::one_plus_t_pow(1)
        );
    }

    #[test]
    fn sign_reports() {
        let p = BiPoly::one_plus_t_pow(2);
        assert_eq!(
            p.sign_report(),
            SignReport::AllNonNegative {
                strictly_positive_at_r0: true
            }
        );

        let rt = &r() * &t();
        assert_eq!(
            rt.sign_report(),
            SignReport::AllNonNegative {
                strictly_positive_at_r0: false
            }
        );

        let p = &t() - &BiPoly::one();
        assert_eq!(p.sign_report(), SignReport::HasNegative { witness: (0, 0) });

        assert_eq!(
            BiPoly::zero().sign_report(),
            SignReport::AllNonNegative {
                strictly_positive_at_r0: false
            }
        );
    }

    #[test]
    fn evaluation() {
        let p = &BiPoly::one() + &t();
        assert_eq!(p.eval(&rational(1, 1), &rational(0, 1)), rational(2, 1));
        let q = &(&r() + &BiPoly::constant(3)) * &(&r() + &BiPoly::constant(4));
        assert_eq!(q.eval(&rational(0, 1), &rational(0, 1)), rational(12, 1));
        assert_eq!(q.eval(&rational(5, 1), &rational(1, 1)), rational(20, 1));
        assert_eq!(t().eval(&rational(1, 3), &rational(0, 1)), rational(1, 3));
    }

    #[test]
    fn restriction_to_r0() {
        let p = &(&t() * &r()) + &t();
        assert_eq!(p.restrict_r0(), t());
        let q = &t() * &r();
        assert!(q.restrict_r0().is_zero());
    }

    #[test]
    fn display_is_readable() {
        let p = &(&t() * &t()) - &(&BiPoly::constant(2) * &r());
        assert_eq!(format!("{p}"), "-2*r + t^2");
        assert_eq!(format!("{}", BiPoly::zero()), "0");
    }
}
