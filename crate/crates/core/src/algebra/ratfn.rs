//! Quotients of bivariate polynomials with certified denominators.

use std::fmt;

use super::poly::{BiPoly, SignReport};
use super::{AlgebraError, Rational};
use num_traits::Zero;

/// A rational function `num / den` in `t` and `r`.
///
/// The denominator is guaranteed nonzero with all coefficients >= 0, so it is
/// strictly positive wherever its constant content allows on the closed
/// positive quadrant and every sign statement about the quotient reduces to a
/// sign statement about the numerator. Construction enforces the guarantee;
/// a candidate denominator that is coefficient-non-positive is absorbed by
/// negating both parts, and mixed signs are an error.
///
/// No gcd reduction is performed: equality is tested by cross-multiplication.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFn {
    num: BiPoly,
    den: BiPoly,
}

impl RatFn {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        match den.sign_report() {
            SignReport::AllNonNegative { .. } => Ok(RatFn { num, den }),
            SignReport::HasNegative { .. } => {
                let negated = -&den;
                match negated.sign_report() {
                    SignReport::AllNonNegative { .. } => Ok(RatFn {
                        num: -&num,
                        den: negated,
                    }),
                    SignReport::HasNegative { .. } => Err(AlgebraError::DivisionLosesPositivity),
                }
            }
        }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RatFn {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn zero() -> Self {
        RatFn::from_poly(BiPoly::zero())
    }

    pub fn one() -> Self {
        RatFn::from_poly(BiPoly::one())
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    /// True iff the function is identically zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &RatFn) -> RatFn {
        if self.den == rhs.den {
            return RatFn {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RatFn {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }

    pub fn sub(&self, rhs: &RatFn) -> RatFn {
        if self.den == rhs.den {
            return RatFn {
                num: &self.num - &rhs.num,
                den: self.den.clone(),
            };
        }
        RatFn {
            num: &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &RatFn) -> RatFn {
        RatFn {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }

    /// Division; fails with `DivisionLosesPositivity` when the divisor's
    /// numerator has mixed coefficient signs (the new denominator could not
    /// be certified), and `ZeroDenominator` when dividing by the zero
    /// function.
    pub fn div(&self, rhs: &RatFn) -> Result<RatFn, AlgebraError> {
        RatFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Value equality via cross-multiplication.
    pub fn eq_value(&self, rhs: &RatFn) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }

    /// Exact evaluation; fails if the denominator vanishes at the point.
    pub fn eval(&self, t0: &Rational, r0: &Rational) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(t0, r0);
        if d.is_zero() {
            return Err(AlgebraError::EvalDividesByZero);
        }
        Ok(self.num.eval(t0, r0) / d)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    fn t() -> RatFn {
        RatFn::from_poly(BiPoly::var_t())
    }

    fn one() -> RatFn {
        RatFn::one()
    }

    fn poly_const(c: i64) -> BiPoly {
        BiPoly::constant(c)
    }

    #[test]
    fn construction_guards() {
        assert!(RatFn::new(BiPoly::one(), BiPoly::zero()).is_err());

        // all-non-positive denominator is absorbed by negation
        let minus_two = poly_const(-2);
        let f = RatFn::new(BiPoly::var_t(), minus_two).unwrap();
        assert!(f.eq_value(&RatFn::new(-&BiPoly::var_t(), poly_const(2)).unwrap()));

        // mixed-sign denominator is rejected
        let mixed = &BiPoly::var_t() - &BiPoly::one();
        assert_eq!(
            RatFn::new(BiPoly::one(), mixed).unwrap_err(),
            AlgebraError::DivisionLosesPositivity
        );
    }

    #[test]
    fn arithmetic() {
        // t/1 + 1/1 = (t+1)/1
        let s = t().add(&one());
        assert!(s.eq_value(&RatFn::from_poly(&BiPoly::var_t() + &BiPoly::one())));

        // (1/(1+t)) * (1/(1+t)) = 1/(1+t)^2
        let inv = RatFn::new(BiPoly::one(), BiPoly::one_plus_t_pow(1)).unwrap();
        let sq = inv.mul(&inv);
        assert_eq!(sq.den(), &BiPoly::one_plus_t_pow(2));
        assert!(sq.eq_value(&RatFn::new(BiPoly::one(), BiPoly::one_plus_t_pow(2)).unwrap()));
    }

    #[test]
    fn same_denominator_fast_path() {
        let a = RatFn::new(BiPoly::var_t(), BiPoly::one_plus_t_pow(3)).unwrap();
        let b = RatFn::new(BiPoly::var_r(), BiPoly::one_plus_t_pow(3)).unwrap();
        let s = a.add(&b);
        assert_eq!(s.den(), &BiPoly::one_plus_t_pow(3));
        assert_eq!(s.num(), &(&BiPoly::var_t() + &BiPoly::var_r()));
    }

    #[test]
    fn division() {
        // (t/1) / ((1+t)/1) has the certified denominator 1+t
        let d = t()
            .div(&RatFn::from_poly(BiPoly::one_plus_t_pow(1)))
            .unwrap();
        assert_eq!(d.den(), &BiPoly::one_plus_t_pow(1));

        // dividing by (t - 1)/1 cannot certify a denominator sign
        let mixed = RatFn::from_poly(&BiPoly::var_t() - &BiPoly::one());
        assert_eq!(
            t().div(&mixed).unwrap_err(),
            AlgebraError::DivisionLosesPositivity
        );

        // dividing by an all-non-positive numerator absorbs the sign
        let neg = RatFn::from_poly(-&BiPoly::one_plus_t_pow(1));
        let q = t().div(&neg).unwrap();
        assert_eq!(q.den(), &BiPoly::one_plus_t_pow(1));
        assert_eq!(q.num(), &(-&BiPoly::var_t()));

        // dividing by zero is an error
        assert_eq!(
            t().div(&RatFn::zero()).unwrap_err(),
            AlgebraError::ZeroDenominator
        );
    }

    #[test]
    fn value_equality() {
        // t/1 == 2t/2
        let two_t = RatFn::new(&poly_const(2) * &BiPoly::var_t(), poly_const(2)).unwrap();
        assert!(t().eq_value(&two_t));
        assert_ne!(t(), two_t); // structural inequality is fine

        let t_plus_one = RatFn::from_poly(&BiPoly::var_t() + &BiPoly::one());
        assert!(!t().eq_value(&t_plus_one));

        // 0/(1+t) == 0/1
        let z = RatFn::new(BiPoly::zero(), BiPoly::one_plus_t_pow(1)).unwrap();
        assert!(z.eq_value(&RatFn::zero()));
        assert!(z.is_zero());
    }

    #[test]
    fn evaluation() {
        let inv = RatFn::new(BiPoly::one(), BiPoly::one_plus_t_pow(1)).unwrap();
        assert_eq!(
            inv.eval(&rational(0, 1), &rational(0, 1)).unwrap(),
            rational(1, 1)
        );
        assert_eq!(
            inv.eval(&rational(1, 1), &rational(0, 1)).unwrap(),
            rational(1, 2)
        );

        let bad = RatFn::new(BiPoly::one(), BiPoly::var_t()).unwrap();
        assert_eq!(
            bad.eval(&rational(0, 1), &rational(0, 1)).unwrap_err(),
            AlgebraError::EvalDividesByZero
        );
    }
}
