//! The families `D_N(L) = sum_j a_j(L) Delta^j T^{N-2j}` in `U(n-)` of
//! `g_{n+1}`, with `Delta = -(Q1-)^2 + (Q2-)^2 + sum_{j<=n-3} (Y_j-)^2` and
//! `T = Y_{n-2}-`, and the checks that characterize them.

mod centralizer;
mod equivariance;
mod parity;
mod uniqueness;

use std::fmt::Write as _;

use serde::Serialize;

pub use centralizer::{verify_centralizer, CentralizerReport, DegreeDimension};
pub use equivariance::{verify_equivariance, Condition, EquivarianceReport, Residue};
pub use parity::{verify_parity, ParityCheck};
pub use uniqueness::{verify_uniqueness, UniquenessReport};

use crate::arith::{qi, PolyLambda, RatFunc};
use crate::error::{Error, Result};
use crate::lie::Generator;
use crate::pbw::{EnvelopingAlgebra, UeaElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(order: u32) -> Self {
        if order.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `a` for even families, `b` for odd ones.
    pub fn symbol(self) -> &'static str {
        match self {
            Parity::Even => "a",
            Parity::Odd => "b",
        }
    }
}

/// Coefficients `a_j` (even order) or `b_j` (odd order), `j = 0..=order/2`,
/// with the top one equal to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCoefficients {
    pub n: usize,
    pub order: u32,
    pub parity: Parity,
    pub coeffs: Vec<PolyLambda>,
}

/// Solves the two-term recursion downward from the normalized top coefficient.
pub fn compute_coefficients(n: usize, order: u32) -> Result<FamilyCoefficients> {
    if n < 4 {
        return Err(Error::DimensionTooSmall(n));
    }
    let parity = Parity::of(order);
    let m = i64::from(order / 2);
    let nn = n as i64;
    let (shift, odd_extra) = match parity {
        Parity::Even => (nn - 1, 1),
        Parity::Odd => (nn - 3, 3),
    };
    let mut coeffs = vec![PolyLambda::one(); m as usize + 1];
    for j in (1..=m).rev() {
        // (m-j+1)(2m-2j+extra) c_{j-1} + j(shift + 2L - 4m + 2j) c_j = 0
        let denom = (m - j + 1) * (2 * m - 2 * j + odd_extra);
        let factor = PolyLambda::linear(qi(2 * j), qi(j * (shift - 4 * m + 2 * j)));
        coeffs[(j - 1) as usize] = (&factor * &coeffs[j as usize]).scale(&(qi(-1) / qi(denom)));
    }
    Ok(FamilyCoefficients { n, order, parity, coeffs })
}

impl FamilyCoefficients {
    /// Every recursion step holds exactly.
    pub fn satisfies_recursion(&self) -> bool {
        let m = i64::from(self.order / 2);
        let nn = self.n as i64;
        let (shift, extra) = match self.parity {
            Parity::Even => (nn - 1, 1),
            Parity::Odd => (nn - 3, 3),
        };
        self.coeffs.last().is_some_and(PolyLambda::is_one)
            && (1..=m).all(|j| {
                let left = self.coeffs[(j - 1) as usize].scale(&qi((m - j + 1) * (2 * m - 2 * j + extra)));
                let factor = PolyLambda::linear(qi(2 * j), qi(j * (shift - 4 * m + 2 * j)));
                (&left + &(&factor * &self.coeffs[j as usize])).is_zero()
            })
    }

    /// The coefficients with `coeffs[j]` increased by one.
    pub fn perturbed(&self, j: usize) -> Self {
        let mut out = self.clone();
        out.coeffs[j] = &out.coeffs[j] + &PolyLambda::one();
        out
    }

    /// `-(2 + 2*L)*Delta*T^2 + ...` with `D` for the d'Alembertian.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = self.order as usize - 2 * j;
            let mut factors = Vec::new();
            match j {
                0 => {}
                1 => factors.push("Delta".to_string()),
                _ => factors.push(format!("Delta^{j}")),
            }
            match t {
                0 => {}
                1 => factors.push("T".to_string()),
                _ => factors.push(format!("T^{t}")),
            }
            if !s.is_empty() {
                s.push_str(" + ");
            }
            let mono = factors.join("*");
            match (c.is_one(), mono.is_empty()) {
                (true, true) => s.push('1'),
                (true, false) => s.push_str(&mono),
                (false, true) => {
                    let _ = write!(s, "({c})");
                }
                (false, false) => {
                    let _ = write!(s, "({c})*{mono}");
                }
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// A family assembled in `U(g_{n+1})`.
#[derive(Clone, Debug)]
pub struct FamilyElement {
    pub coeffs: FamilyCoefficients,
    pub element: UeaElement,
}

/// `U(g_{n+1})` for families of `g_n`.
pub fn ambient_algebra(n: usize) -> Result<EnvelopingAlgebra> {
    if n < 4 {
        return Err(Error::DimensionTooSmall(n));
    }
    EnvelopingAlgebra::new(n + 1)
}

/// Assembles `sum_j c_j Delta^j T^{N-2j}` in `alg = U(g_{n+1})`.
pub fn assemble(alg: &EnvelopingAlgebra, coeffs: &FamilyCoefficients) -> Result<FamilyElement> {
    let n = coeffs.n;
    if alg.n() != n + 1 {
        return Err(Error::MixedContexts { left: alg.n(), right: n + 1 });
    }
    let small = EnvelopingAlgebra::new(n)?;
    let delta = small.include(&small.dalembertian(n - 3), alg)?;
    let t = alg.generator(Generator::YMinus(n - 2));
    let mut element = alg.zero();
    let mut delta_pow = alg.one();
    for (j, c) in coeffs.coeffs.iter().enumerate() {
        let t_pow = alg.pow(&t, coeffs.order - 2 * j as u32)?;
        let term = alg.multiply(&delta_pow, &t_pow)?.scale(&RatFunc::poly(c.clone()));
        element = element.add(&term)?;
        delta_pow = alg.multiply(&delta_pow, &delta)?;
    }
    Ok(FamilyElement { coeffs: coeffs.clone(), element })
}

pub fn build_family(n: usize, order: u32) -> Result<FamilyElement> {
    let alg = ambient_algebra(n)?;
    assemble(&alg, &compute_coefficients(n, order)?)
}

#[cfg(test)]
mod tests;
