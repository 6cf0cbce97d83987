//! Commutator identities for powers of `Y-` and of the d'Alembertian.
//!
//! All checks run in `U(g_{n+1})` with `Delta` built from the `n-` generators
//! of `g_n`.

use serde::Serialize;

use super::{EnvelopingAlgebra, UeaElement};
use crate::arith::RatFunc;
use crate::error::Result;
use crate::lie::{Generator, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub lemma: String,
    pub pass: bool,
    /// Rendered remainder that violated the expected shape, if any.
    pub residue: Option<String>,
}

fn int(alg: &EnvelopingAlgebra, c: i64) -> UeaElement {
    alg.constant(RatFunc::int(c))
}

fn mul(alg: &EnvelopingAlgebra, factors: &[&UeaElement]) -> Result<UeaElement> {
    factors.iter().try_fold(alg.one(), |acc, f| alg.multiply(&acc, f))
}

fn exact(alg: &EnvelopingAlgebra, lemma: String, diff: UeaElement) -> LemmaCheck {
    let pass = diff.is_zero();
    LemmaCheck { lemma, pass, residue: (!pass).then(|| alg.render(&diff)) }
}

/// Every monomial is an `n-` monomial followed by exactly one `m` generator.
fn ends_in_m(alg: &EnvelopingAlgebra, u: &UeaElement, single_nminus: bool) -> bool {
    u.terms().keys().all(|m| {
        let (head, tail) = m.split(|i| alg.subspace(i) == Subspace::NMinus);
        let tail_ok = tail.degree() == 1 && tail.factors().all(|(i, _)| alg.subspace(i) == Subspace::M);
        tail_ok && (!single_nminus || head.degree() == 1)
    })
}

fn shaped(alg: &EnvelopingAlgebra, lemma: String, rem: UeaElement, single: bool) -> LemmaCheck {
    let pass = ends_in_m(alg, &rem, single);
    LemmaCheck { lemma, pass, residue: (!pass).then(|| alg.render(&rem)) }
}

/// `[Y1+, (Y1-)^{2k}] = -2k(2k-1)(Y1-)^{2k-1} + 4k(Y1-)^{2k-1}H` and
/// `[Y1+, (Yr-)^{2k}] = 2k(2k-1)Y1-(Yr-)^{2k-2} + 4k(Yr-)^{2k-1}M_1r` for
/// `1 <= k <= max_k` and every `r >= 2` present in `g_{n+1}`.
pub fn y_powers(alg: &EnvelopingAlgebra, max_k: u32) -> Result<Vec<LemmaCheck>> {
    let lie = alg.lie();
    let yp = lie.gen(Generator::YPlus(1));
    let y1 = alg.generator(Generator::YMinus(1));
    let h = alg.generator(Generator::H);
    let mut out = Vec::new();
    for k in 1..=max_k {
        let kk = i64::from(k);
        let lhs = alg.commutator(&yp, &alg.pow(&y1, 2 * k)?)?;
        let odd = alg.pow(&y1, 2 * k - 1)?;
        let rhs = odd
            .scale(&RatFunc::int(-2 * kk * (2 * kk - 1)))
            .add(&mul(alg, &[&int(alg, 4 * kk), &odd, &h])?)?;
        out.push(exact(alg, format!("[Y1+, Y1-^{}] k={k}", 2 * k), lhs.sub(&rhs)?));

        for r in 2..=lie.n() - 3 {
            let yr = alg.generator(Generator::YMinus(r));
            let m1r = alg.generator(Generator::M(1, r));
            let lhs = alg.commutator(&yp, &alg.pow(&yr, 2 * k)?)?;
            let rhs = mul(alg, &[&int(alg, 2 * kk * (2 * kk - 1)), &y1, &alg.pow(&yr, 2 * k - 2)?])?
                .add(&mul(alg, &[&int(alg, 4 * kk), &alg.pow(&yr, 2 * k - 1)?, &m1r])?)?;
            out.push(exact(alg, format!("[Y1+, Y{r}-^{}] k={k}", 2 * k), lhs.sub(&rhs)?));
        }
    }
    Ok(out)
}

/// `[Y1+, Delta^j] - 2j(n-1-2j) Y1- Delta^{j-1} - 4j Y1- Delta^{j-1} H` lies in
/// `U(n-) m`, for `1 <= j <= max_j`. For `j = 1` each remainder monomial is a
/// single `n-` generator times an `m` generator.
pub fn delta_powers(alg: &EnvelopingAlgebra, max_j: u32) -> Result<Vec<LemmaCheck>> {
    let n = alg.n() - 1;
    let nn = n as i64;
    let lie = alg.lie();
    let yp = lie.gen(Generator::YPlus(1));
    let y1 = alg.generator(Generator::YMinus(1));
    let h = alg.generator(Generator::H);
    let delta = alg.dalembertian(n - 3);
    let mut out = Vec::new();
    let mut prev = alg.one();
    for j in 1..=max_j {
        let jj = i64::from(j);
        let power = alg.multiply(&prev, &delta)?;
        let lhs = alg.commutator(&yp, &power)?;
        let base = alg.multiply(&y1, &prev)?;
        let rem = lhs
            .sub(&base.scale(&RatFunc::int(2 * jj * (nn - 1 - 2 * jj))))?
            .sub(&mul(alg, &[&int(alg, 4 * jj), &base, &h])?)?;
        if j == 1 {
            out.push(shaped(alg, "[Y1+, Delta] remainder".into(), rem.clone(), true));
        }
        out.push(shaped(alg, format!("[Y1+, Delta^{j}] remainder"), rem, false));
        prev = power;
    }
    Ok(out)
}
