//! Constant-coefficient differential operators on Minkowski space and the
//! non-compact model of the families.
//!
//! Coordinates are `x_1 .. x_m` with `x_1` timelike; `T` of the enveloping
//! algebra corresponds to `d/dx_n` and the restriction `i*` sets `x_n = 0`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{factorial, qi, render_rational, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::families::{compute_coefficients, FamilyCoefficients};

pub type MultiIndex = Vec<u32>;

/// Polynomial in `x_1 .. x_m` over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvPoly {
    vars: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl MvPoly {
    pub fn zero(vars: usize) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    pub fn monomial(exponents: &[u32], c: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents.to_vec(), c);
        p
    }

    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (MultiIndex, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: MultiIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// `x_1^2 + ... + x_m^2`.
    pub fn sum_of_squares(vars: usize) -> Self {
        Self::from_terms(
            vars,
            (0..vars).map(|i| {
                let mut e = vec![0; vars];
                e[i] = 2;
                (e, qi(1))
            }),
        )
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| **k > 0)
                    .map(|(i, k)| if *k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                    .collect();
                match (vars.is_empty(), c.is_one()) {
                    (true, _) => render_rational(c),
                    (false, true) => vars.join("*"),
                    (false, false) => format!("{}*{}", render_rational(c), vars.join("*")),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// `sum_alpha c_alpha d^alpha` on `R^m`, optionally followed by `x_m = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    ambient_dim: usize,
    terms: BTreeMap<MultiIndex, RatFunc>,
    restrict_last: bool,
}

impl DiffOp {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, terms: BTreeMap::new(), restrict_last: false }
    }

    pub fn identity(ambient_dim: usize) -> Self {
        Self::derivative(&vec![0; ambient_dim], RatFunc::one())
    }

    pub fn derivative(alpha: &[u32], c: RatFunc) -> Self {
        let mut op = Self::zero(alpha.len());
        op.add_term(alpha.to_vec(), &c);
        op
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, RatFunc> {
        &self.terms
    }

    pub fn restricts_last(&self) -> bool {
        self.restrict_last
    }

    pub fn coeff(&self, alpha: &[u32]) -> RatFunc {
        self.terms.get(alpha).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Highest total derivative order.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(|a| a.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, alpha: MultiIndex, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(alpha.clone()).or_insert_with(RatFunc::zero);
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self { terms: BTreeMap::new(), ..self.clone() };
        for (a, x) in &self.terms {
            out.add_term(a.clone(), &(x * c));
        }
        out
    }

    /// Composition of two unrestricted operators.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        if self.restrict_last || other.restrict_last {
            return Err(Error::OutsideShape("composition after restriction".into()));
        }
        let mut out = Self::zero(self.ambient_dim);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let sum: MultiIndex = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(sum, &(c * d));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        (0..k).try_fold(Self::identity(self.ambient_dim), |acc, _| acc.compose(self))
    }

    /// Extends to `R^{m+1}`, not differentiating in the new coordinate.
    pub fn extend(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(a, c)| {
                let mut a = a.clone();
                a.push(0);
                (a, c.clone())
            })
            .collect();
        Self { ambient_dim: self.ambient_dim + 1, terms, restrict_last: self.restrict_last }
    }

    /// `i* o self`.
    pub fn restricted(&self) -> Self {
        Self { restrict_last: true, ..self.clone() }
    }

    /// Substitutes `L = at` in every coefficient.
    pub fn specialize(&self, at: &Rational) -> Result<Self> {
        let mut out = Self { terms: BTreeMap::new(), ..self.clone() };
        for (a, c) in &self.terms {
            out.add_term(a.clone(), &RatFunc::constant(c.eval_at(at)?));
        }
        Ok(out)
    }

    /// `f(L + shift)` in every coefficient.
    pub fn shift(&self, shift: &Rational) -> Self {
        let terms = self.terms.iter().map(|(a, c)| (a.clone(), c.shift(shift))).collect();
        Self { terms, ..self.clone() }
    }

    /// Applies a specialized operator to `p`.
    pub fn apply(&self, p: &MvPoly) -> Result<MvPoly> {
        if p.vars != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: p.vars });
        }
        let out_vars = self.ambient_dim - usize::from(self.restrict_last);
        let mut out = MvPoly::zero(out_vars);
        for (alpha, c) in &self.terms {
            let c = c.as_constant().ok_or(Error::Unspecialized)?;
            for (e, pc) in &p.terms {
                if alpha.iter().zip(e).any(|(a, k)| a > k) {
                    continue;
                }
                let mut coef = &c * pc;
                let mut exps = Vec::with_capacity(e.len());
                for (a, k) in alpha.iter().zip(e) {
                    coef = coef * factorial(*k) / factorial(k - a);
                    exps.push(k - a);
                }
                if self.restrict_last
                    && exps.pop() != Some(0) {
                        continue;
                    }
                out.add_term(exps, coef);
            }
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        if self.restrict_last {
            s.push_str("i*(");
        }
        if self.terms.is_empty() {
            s.push('0');
        }
        for (k, (a, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            let d: Vec<String> = a
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| if *e == 1 { format!("d{}", i + 1) } else { format!("d{}^{e}", i + 1) })
                .collect();
            let op = if d.is_empty() { "1".to_string() } else { d.join("*") };
            if c.is_one() {
                s.push_str(&op);
            } else {
                let _ = write!(s, "({c})*{op}");
            }
        }
        if self.restrict_last {
            s.push(')');
        }
        s
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.ambient_dim != other.ambient_dim || self.restrict_last != other.restrict_last {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: other.ambient_dim });
        }
        Ok(())
    }
}

/// `-d_1^2 + d_2^2 + ... + d_m^2`.
pub fn dalembertian(m: usize) -> DiffOp {
    let mut op = DiffOp::zero(m);
    for i in 0..m {
        let mut a = vec![0; m];
        a[i] = 2;
        op.add_term(a, &RatFunc::int(if i == 0 { -1 } else { 1 }));
    }
    op
}

/// `sum_j c_j (Delta_{M^{n-1}})^j i* d_n^{N-2j}` for given coefficients.
pub fn assemble_nc(coeffs: &[RatFunc], n: usize, order: u32) -> Result<DiffOp> {
    let tangential = dalembertian(n - 1).extend();
    let mut out = DiffOp::zero(n);
    let mut power = DiffOp::identity(n);
    for (j, c) in coeffs.iter().enumerate() {
        let mut normal = vec![0; n];
        normal[n - 1] = order - 2 * j as u32;
        let term = power.compose(&DiffOp::derivative(&normal, c.clone()))?;
        out = out.add(&term)?;
        power = power.compose(&tangential)?;
    }
    Ok(out.restricted())
}

pub fn family_nc(n: usize, order: u32) -> Result<DiffOp> {
    let c = compute_coefficients(n, order)?;
    let coeffs: Vec<RatFunc> = c.coeffs.iter().cloned().map(RatFunc::poly).collect();
    assemble_nc(&coeffs, n, order)
}

/// The family in display form, e.g.
/// `\Delta_{\mathbb{M}^{3}} i^* + (-1 - 2\lambda) i^* \partial_{4}^{2}`.
pub fn render_family_latex(c: &FamilyCoefficients) -> String {
    let n = c.n;
    let mut parts = Vec::new();
    for (j, a) in c.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let k = c.order as usize - 2 * j;
        let mut s = String::new();
        if !a.is_one() {
            let _ = write!(s, "\\left({}\\right) ", a.render_latex());
        }
        match j {
            0 => {}
            1 => {
                let _ = write!(s, "\\Delta_{{\\mathbb{{M}}^{{{}}}}} ", n - 1);
            }
            _ => {
                let _ = write!(s, "\\Delta_{{\\mathbb{{M}}^{{{}}}}}^{{{j}}} ", n - 1);
            }
        }
        s.push_str("i^*");
        match k {
            0 => {}
            1 => {
                let _ = write!(s, " \\partial_{{{n}}}");
            }
            _ => {
                let _ = write!(s, " \\partial_{{{n}}}^{{{k}}}");
            }
        }
        parts.push(s);
    }
    parts.join(" + ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialValueCheck {
    pub identity: String,
    pub at: String,
    /// Coefficient-wise equality.
    pub coefficients_match: bool,
    /// Equality of the actions on all monomials of degree `<= order + 2`.
    pub actions_match: bool,
}

impl SpecialValueCheck {
    pub fn pass(&self) -> bool {
        self.coefficients_match && self.actions_match
    }
}

fn monomials_up_to(vars: usize, degree: u32) -> Vec<MultiIndex> {
    fn rec(vars: usize, left: u32, cur: &mut MultiIndex, out: &mut Vec<MultiIndex>) {
        if cur.len() == vars {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(vars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, degree, &mut Vec::new(), &mut out);
    out
}

fn same_action(a: &DiffOp, b: &DiffOp, degree: u32) -> Result<bool> {
    for e in monomials_up_to(a.ambient_dim(), degree) {
        let p = MvPoly::monomial(&e, qi(1));
        if a.apply(&p)? != b.apply(&p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D_{2k}(-n/2 + k) = i* (Delta_{M^n})^k` and
/// `D_{2k}(-(n-1)/2 + k) = (Delta_{M^{n-1}})^k i*`.
pub fn verify_special_values(n: usize, k: u32) -> Result<Vec<SpecialValueCheck>> {
    let op = family_nc(n, 2 * k)?;
    let kk = i64::from(k);
    let full = dalembertian(n).pow(k)?.restricted();
    let tangential = dalembertian(n - 1).extend().pow(k)?.restricted();
    let cases = [
        ("i* Delta_n^k", Rational::new((2 * kk - n as i64).into(), 2.into()), full),
        ("Delta_{n-1}^k i*", Rational::new((2 * kk - n as i64 + 1).into(), 2.into()), tangential),
    ];
    cases
        .into_iter()
        .map(|(identity, at, target)| {
            let special = op.specialize(&at)?;
            Ok(SpecialValueCheck {
                identity: identity.into(),
                at: render_rational(&at),
                coefficients_match: special == target,
                actions_match: same_action(&special, &target, 2 * k + 2)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, PolyLambda};

    fn x(exps: &[u32]) -> MvPoly {
        MvPoly::monomial(exps, qi(1))
    }

    #[test]
    fn dalembertian_examples() {
        let d = dalembertian(2);
        assert_eq!(d.coeff(&[2, 0]), RatFunc::int(-1));
        assert_eq!(d.coeff(&[0, 2]), RatFunc::int(1));
        assert_eq!(d.apply(&x(&[2, 0])).unwrap(), MvPoly::monomial(&[0, 0], qi(-2)));
        let null = x(&[2, 0]).terms().clone().into_iter().chain(x(&[0, 2]).terms().clone());
        assert!(d.apply(&MvPoly::from_terms(2, null)).unwrap().is_zero());
        for m in 2..=6 {
            let out = dalembertian(m).apply(&MvPoly::sum_of_squares(m)).unwrap();
            assert_eq!(out, MvPoly::monomial(&vec![0; m], qi(2 * (m as i64 - 2))));
        }
    }

    #[test]
    fn family_nc_examples() {
        let d1 = family_nc(5, 1).unwrap();
        assert_eq!(d1, DiffOp::derivative(&[0, 0, 0, 0, 1], RatFunc::one()).restricted());

        let d2 = family_nc(4, 2).unwrap();
        let expected = dalembertian(3)
            .extend()
            .add(&DiffOp::derivative(&[0, 0, 0, 2], RatFunc::poly(PolyLambda::from_ints(&[-1, -2]))))
            .unwrap()
            .restricted();
        assert_eq!(d2, expected);
        let at0 = d2.specialize(&qi(0)).unwrap();
        assert_eq!(at0.apply(&x(&[0, 0, 0, 2])).unwrap(), MvPoly::monomial(&[0, 0, 0], qi(-2)));
        assert_eq!(d2.order(), 2);
    }

    #[test]
    fn apply_examples() {
        let dn = DiffOp::derivative(&[0, 0, 1], RatFunc::one()).restricted();
        assert_eq!(dn.apply(&x(&[0, 0, 1])).unwrap(), MvPoly::monomial(&[0, 0], qi(1)));
        let restrict = DiffOp::identity(3).restricted();
        assert!(restrict.apply(&x(&[1, 0, 1])).unwrap().is_zero());
        let d3 = dalembertian(3).extend().restricted();
        let p = x(&[0, 2, 2, 0]);
        let expected = MvPoly::from_terms(3, [(vec![0, 0, 2], qi(2)), (vec![0, 2, 0], qi(2))]);
        assert_eq!(d3.apply(&p).unwrap(), expected);
        assert_eq!(family_nc(4, 2).unwrap().apply(&p), Err(Error::Unspecialized));
    }

    #[test]
    fn low_order_special_values() {
        let d = family_nc(4, 2).unwrap();
        assert_eq!(d.specialize(&qi(-1)).unwrap().coeff(&[0, 0, 0, 2]), RatFunc::one());
        assert!(d.specialize(&q(-1, 2)).unwrap().coeff(&[0, 0, 0, 2]).is_zero());
        for n in [4, 6] {
            for c in verify_special_values(n, 2).unwrap() {
                assert!(c.pass(), "{c:?}");
            }
        }
    }

    #[test]
    fn normal_coefficient_is_a0() {
        for n in 4..=6 {
            for order in 0..=5 {
                let op = family_nc(n, order).unwrap();
                let mut normal = vec![0; n];
                normal[n - 1] = order;
                let a0 = compute_coefficients(n, order).unwrap().coeffs[0].clone();
                assert_eq!(op.coeff(&normal), RatFunc::poly(a0));
                assert_eq!(op.order(), order);
            }
        }
    }

    #[test]
    fn latex() {
        let c = compute_coefficients(4, 2).unwrap();
        assert_eq!(
            render_family_latex(&c),
            "\\left(-1 - 2 \\lambda\\right) i^* \\partial_{4}^{2} + \\Delta_{\\mathbb{M}^{3}} i^*"
        );
    }
}
