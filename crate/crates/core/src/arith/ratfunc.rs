use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{PolyLambda, Rational};
use crate::error::{Error, Result};

/// Rational function in `L` over Q in canonical form: coprime numerator and
/// denominator, monic denominator. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: PolyLambda,
    den: PolyLambda,
}

impl RatFunc {
    pub fn normalize(num: PolyLambda, den: PolyLambda) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_nonzero(num, den))
    }

    fn normalize_nonzero(num: PolyLambda, den: PolyLambda) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = den.coeff(0).recip();
            return Self { num: num.scale(&inv), den: PolyLambda::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().expect("nonzero denominator").recip();
        Self { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn zero() -> Self {
        Self { num: PolyLambda::zero(), den: PolyLambda::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self { num: PolyLambda::constant(c), den: PolyLambda::one() }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn lambda() -> Self {
        Self::poly(PolyLambda::lambda())
    }

    pub fn poly(p: PolyLambda) -> Self {
        Self { num: p, den: PolyLambda::one() }
    }

    pub fn num(&self) -> &PolyLambda {
        &self.num
    }

    pub fn den(&self) -> &PolyLambda {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value if this does not depend on `L`.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::normalize(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn eval_at(&self, at: &Rational) -> Result<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::Pole(at.clone()));
        }
        Ok(self.num.eval(at) / d)
    }

    /// `f(L + shift)`.
    pub fn shift(&self, shift: &Rational) -> Self {
        Self::normalize_nonzero(self.num.shift(shift), self.den.shift(shift))
    }

    /// Machine text form: a polynomial, or `(<num>)/(<den>)`.
    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }

    pub fn render_latex(&self) -> String {
        if self.den.is_one() {
            self.num.render_latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.render_latex(), self.den.render_latex())
        }
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<PolyLambda> for RatFunc {
    fn from(p: PolyLambda) -> Self {
        Self::poly(p)
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc { num, den: PolyLambda::one() };
            }
            return RatFunc::normalize_nonzero(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::normalize_nonzero(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: PolyLambda::one() };
        }
        RatFunc::normalize_nonzero(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
        impl $tr<PolyLambda> for PolyLambda {
            type Output = PolyLambda;
            fn $m(self, rhs: PolyLambda) -> PolyLambda { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn p(c: &[i64]) -> PolyLambda {
        PolyLambda::from_ints(c)
    }

    #[test]
    fn normalize_examples() {
        let r = RatFunc::normalize(p(&[2, 2]), p(&[4, 4])).unwrap();
        assert_eq!(r, RatFunc::constant(q(1, 2)));

        let r = RatFunc::normalize(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(r, RatFunc::poly(p(&[1, 1])));

        let r = RatFunc::normalize(PolyLambda::zero(), p(&[7, 0, 0, 1])).unwrap();
        assert_eq!(r.num(), &PolyLambda::zero());
        assert_eq!(r.den(), &PolyLambda::one());

        assert_eq!(
            RatFunc::normalize(p(&[1]), PolyLambda::zero()).unwrap_err().to_string(),
            "division by zero polynomial"
        );
    }

    #[test]
    fn arithmetic_examples() {
        let a = RatFunc::normalize(p(&[1]), p(&[-1, 1])).unwrap();
        let b = RatFunc::normalize(p(&[1]), p(&[1, 1])).unwrap();
        let sum = &a + &b;
        assert_eq!(sum, RatFunc::normalize(p(&[0, 2]), p(&[-1, 0, 1])).unwrap());

        let l = RatFunc::lambda();
        assert!((&l * &l.inv().unwrap()).is_one());
        assert!((&sum - &sum).is_zero());
        assert_eq!(l.checked_div(&RatFunc::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn eval_examples() {
        // -(n - 3 + 2L) with n = 4 at L = -1
        let f = RatFunc::poly(p(&[-1, -2]));
        assert_eq!(f.eval_at(&q(-1, 1)).unwrap(), q(1, 1));
        assert_eq!(RatFunc::poly(p(&[0, 0, 1])).eval_at(&q(3, 2)).unwrap(), q(9, 4));
        let pole = RatFunc::normalize(p(&[1]), p(&[-1, 1])).unwrap();
        assert_eq!(pole.eval_at(&q(1, 1)), Err(Error::Pole(q(1, 1))));
        assert_eq!(pole.eval_at(&q(1, 1)).unwrap_err().to_string(), "pole at L = 1");
    }

    #[test]
    fn render_fraction() {
        let r = RatFunc::normalize(p(&[1]), p(&[-4, -4])).unwrap();
        assert_eq!(r.render(), "(-1/4)/(1 + L)");
    }
}
