//! Exact coefficient arithmetic: rationals, polynomials in `L`, and the
//! rational function field Q(L) in which every identity is checked.

mod poly;
mod ratfunc;

pub use poly::PolyLambda;
pub use ratfunc::RatFunc;

use num_traits::One;

pub type Rational = num_rational::BigRational;

/// `num/den` as a [`Rational`].
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn factorial(k: u32) -> Rational {
    (1..=k).fold(Rational::one(), |acc, i| acc * qi(i.into()))
}
