use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{render_rational, Rational};

/// Univariate polynomial in the parameter `L` with exact rational coefficients.
///
/// Coefficients are stored by ascending degree and the vector is always trimmed,
/// so the zero polynomial is the empty vector and structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyLambda {
    coeffs: Vec<Rational>,
}

impl PolyLambda {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `L`.
    pub fn lambda() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `a*L + b`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs.get(degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Euclidean division over Q. Panics on a zero divisor; callers check first.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dlead = divisor.leading().expect("division by zero polynomial").clone();
        let ddeg = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= ddeg {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] / &dlead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(L + shift)`, by Horner's scheme in the shifted variable.
    pub fn shift(&self, shift: &Rational) -> Self {
        let x = Self::linear(Rational::one(), shift.clone());
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Machine text form, ascending degree: `-2 - 2*L + 1/3*L^2`.
    pub fn render(&self) -> String {
        self.render_with("L", "*", |d| format!("^{d}"))
    }

    /// LaTeX form with `\lambda`.
    pub fn render_latex(&self) -> String {
        self.render_with("\\lambda", " ", |d| format!("^{{{d}}}"))
    }

    fn render_with(&self, var: &str, times: &str, power: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let monomial = match deg {
                0 => String::new(),
                1 => var.to_string(),
                d => format!("{var}{}", power(d)),
            };
            if deg == 0 {
                out.push_str(&render_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&render_rational(&abs));
                out.push_str(times);
                out.push_str(&monomial);
            }
        }
        out
    }
}

impl fmt::Display for PolyLambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<Rational> for PolyLambda {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a PolyLambda> for &'a PolyLambda {
    type Output = PolyLambda;
    fn add(self, rhs: &PolyLambda) -> PolyLambda {
        let (long, short) =
            if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        PolyLambda::new(coeffs)
    }
}

impl<'a> Sub<&'a PolyLambda> for &'a PolyLambda {
    type Output = PolyLambda;
    fn sub(self, rhs: &PolyLambda) -> PolyLambda {
        self + &(-rhs)
    }
}

impl Neg for &PolyLambda {
    type Output = PolyLambda;
    fn neg(self) -> PolyLambda {
        PolyLambda { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a PolyLambda> for &'a PolyLambda {
    type Output = PolyLambda;
    fn mul(self, rhs: &PolyLambda) -> PolyLambda {
        if self.is_zero() || rhs.is_zero() {
            return PolyLambda::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyLambda::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    #[test]
    fn trims_leading_zeros() {
        let p = PolyLambda::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(PolyLambda::from_ints(&[0, 0]).is_zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = PolyLambda::from_ints(&[-1, 0, 0, 1]);
        let b = PolyLambda::from_ints(&[-1, 1]);
        let (quot, rem) = a.div_rem(&b);
        assert_eq!(quot, PolyLambda::from_ints(&[1, 1, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (L-1)(L+2) and (L-1)(L+5)
        let a = PolyLambda::from_ints(&[-2, 1, 1]);
        let b = PolyLambda::from_ints(&[-5, 4, 1]);
        assert_eq!(a.gcd(&b), PolyLambda::from_ints(&[-1, 1]));
    }

    #[test]
    fn shift_matches_substitution() {
        let p = PolyLambda::from_ints(&[3, -1, 2]);
        let s = q(5, 2);
        let shifted = p.shift(&s);
        for x in [q(0, 1), q(1, 3), q(-7, 2)] {
            assert_eq!(shifted.eval(&x), p.eval(&(&x + &s)));
        }
    }

    #[test]
    fn render_forms() {
        assert_eq!(PolyLambda::from_ints(&[-2, -2]).render(), "-2 - 2*L");
        assert_eq!(PolyLambda::from_ints(&[0, 1]).render(), "L");
        assert_eq!(PolyLambda::new(vec![q(1, 3), q(0, 1), q(-1, 1)]).render(), "1/3 - L^2");
        assert_eq!(PolyLambda::zero().render(), "0");
        assert_eq!(PolyLambda::from_ints(&[1, 0, 4]).render_latex(), "1 + 4 \\lambda^{2}");
    }
}
