//! Light cone coordinates: the conformal embedding of Minkowski space into
//! the cone of `R^{2,n-1}`, its inverse, and the exponential of `n-`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{q, qi, Rational};
use crate::error::{Error, Result};
use crate::lie::{Generator, GroupElement, GroupTag, LieAlgebraContext};
use crate::matrix::RMatrix;

/// `-t1^2 - t2^2 + x1^2 + ... + x_{n-1}^2`.
pub fn quadratic_form(v: &[Rational]) -> Rational {
    v.iter()
        .enumerate()
        .map(|(i, x)| if i < 2 { -(x * x) } else { x * x })
        .fold(Rational::zero(), |a, b| a + b)
}

pub fn on_cone(v: &[Rational]) -> bool {
    quadratic_form(v).is_zero() && v.iter().any(|x| !x.is_zero())
}

/// Membership in the hyperboloid `Q(v) = -1`.
pub fn on_hyperboloid(v: &[Rational]) -> bool {
    quadratic_form(v) == qi(-1)
}

/// `(1, 0, 0, 1, 0, ..., 0)` in `R^{n+1}`.
pub fn base_point(n: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n + 1];
    v[0] = qi(1);
    v[3] = qi(1);
    v
}

/// `w = (w1, ..., w_{n-1})` to the cone point
/// `(1 + q, 2w1, 2w2, 1 - q, 2w3, ...)` with `q = -w1^2 + w2^2 + |w'|^2`.
pub fn embed(w: &[Rational]) -> Vec<Rational> {
    let norm = w
        .iter()
        .enumerate()
        .map(|(i, x)| if i == 0 { -(x * x) } else { x * x })
        .fold(Rational::zero(), |a, b| a + b);
    let two = qi(2);
    let mut v = vec![qi(1) + &norm, &two * &w[0], &two * &w[1], qi(1) - &norm];
    v.extend(w[2..].iter().map(|x| &two * x));
    v
}

/// Inverse of [`embed`] on the ray through `p`.
pub fn invert(p: &[Rational]) -> Result<Vec<Rational>> {
    let d = &p[0] + &p[3];
    if d.is_zero() {
        return Err(Error::SingularSet);
    }
    let mut w = vec![&p[1] / &d, &p[2] / &d];
    w.extend(p[4..].iter().map(|x| x / &d));
    Ok(w)
}

/// `exp(w1 Q1- + w2 Q2- + sum_{i>=3} w_i Y_{i-2}-)` in `O(2, n-1)`, `n = w.len() + 1`.
pub fn exp_nminus(ctx: &LieAlgebraContext, w: &[Rational]) -> Result<GroupElement> {
    let n = ctx.n();
    if w.len() != n - 1 {
        return Err(Error::DimensionMismatch { expected: n - 1, got: w.len() });
    }
    let mut x = ctx.gen(Generator::Q1Minus).scale(&w[0]);
    x = x.add(&ctx.gen(Generator::Q2Minus).scale(&w[1]))?;
    for (i, wi) in w.iter().enumerate().skip(2) {
        x = x.add(&ctx.gen(Generator::YMinus(i - 1)).scale(wi))?;
    }
    let m = ctx.matrix_of(&x);
    let size = ctx.matrix_size();
    let mut sum = RMatrix::identity(size);
    let mut power = RMatrix::identity(size);
    for k in 1..=size + 1 {
        power = (&power * &m).scale(&Rational::new(1.into(), (k as i64).into()));
        if power.is_zero() {
            return Ok(GroupElement::new(GroupTag::Custom("exp".into()), sum));
        }
        sum = &sum + &power;
    }
    Err(Error::NotNilpotent)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Isotropy {
    FixesRay,
    FixesLine,
    Neither,
}

/// Whether `g` maps the base point to a positive multiple (ray), a negative
/// multiple (line only), or elsewhere.
pub fn isotropy_check(g: &GroupElement) -> Isotropy {
    let n = g.matrix.rows() - 1;
    let base = base_point(n);
    let image = g.apply(&base);
    let factor = &image[0];
    if factor.is_zero() || image.iter().zip(&base).any(|(a, b)| *a != factor * b) {
        return Isotropy::Neither;
    }
    if factor.is_positive() {
        Isotropy::FixesRay
    } else {
        Isotropy::FixesLine
    }
}

/// Scales so that the first nonzero coordinate is `+1` or `-1`.
pub fn ray_representative(v: &[Rational]) -> Option<Vec<Rational>> {
    let lead = v.iter().find(|x| !x.is_zero())?.abs();
    Some(v.iter().map(|x| x / &lead).collect())
}

/// Scales so that the first nonzero coordinate is `+1`.
pub fn line_representative(v: &[Rational]) -> Option<Vec<Rational>> {
    let lead = v.iter().find(|x| !x.is_zero())?.clone();
    Some(v.iter().map(|x| x / &lead).collect())
}

/// `k`-th deterministic rational test point in `M^{n-1}`.
pub fn sample_point(n: usize, k: usize) -> Vec<Rational> {
    (0..n - 1)
        .map(|i| {
            let num = ((7 * k + 3 * i + 2) % 11) as i64 - 5;
            let den = ((k + 2 * i) % 4 + 1) as i64;
            q(num, den)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeometryReport {
    pub n: usize,
    pub points: usize,
    pub round_trip_failures: Vec<usize>,
    pub exp_failures: Vec<usize>,
    pub homomorphism_failures: Vec<usize>,
    pub isotropy: Vec<(String, Isotropy, Isotropy)>,
}

impl GeometryReport {
    pub fn pass(&self) -> bool {
        self.round_trip_failures.is_empty()
            && self.exp_failures.is_empty()
            && self.homomorphism_failures.is_empty()
            && self.isotropy.iter().all(|(_, got, want)| got == want)
    }
}

/// Round trips, the exponential cross-check and isotropy classification.
pub fn verify_geometry(n: usize, points: usize) -> Result<GeometryReport> {
    let ctx = LieAlgebraContext::new(n)?;
    let mut report = GeometryReport {
        n,
        points,
        round_trip_failures: Vec::new(),
        exp_failures: Vec::new(),
        homomorphism_failures: Vec::new(),
        isotropy: Vec::new(),
    };
    let base = base_point(n);
    for k in 0..points {
        let w = sample_point(n, k);
        let p = embed(&w);
        let scale = q(k as i64 + 1, 3);
        let scaled: Vec<Rational> = p.iter().map(|x| x * &scale).collect();
        let back = invert(&p)?;
        let ok = on_cone(&p)
            && back == w
            && invert(&scaled)? == w
            && ray_representative(&embed(&back)) == ray_representative(&scaled);
        if !ok {
            report.round_trip_failures.push(k);
        }

        let g = exp_nminus(&ctx, &w)?;
        if g.apply(&base) != p || !g.preserves_form(ctx.form()) {
            report.exp_failures.push(k);
        }
        let v = sample_point(n, k + points);
        let sum: Vec<Rational> = w.iter().zip(&v).map(|(a, b)| a + b).collect();
        let minus: Vec<Rational> = w.iter().map(|x| -x).collect();
        let prod = &g.matrix * &exp_nminus(&ctx, &v)?.matrix;
        let inv = &g.matrix * &exp_nminus(&ctx, &minus)?.matrix;
        if prod != exp_nminus(&ctx, &sum)?.matrix || inv != RMatrix::identity(n + 1) {
            report.homomorphism_failures.push(k);
        }
    }

    let mut cases = vec![
        ("w1".to_string(), GroupElement::w1(n), Isotropy::FixesRay),
        ("w2".to_string(), GroupElement::w2(n), Isotropy::FixesRay),
        ("J".to_string(), GroupElement::j(n), Isotropy::FixesLine),
    ];
    for k in 0..5 {
        let mut w = vec![Rational::zero(); n - 1];
        w[k % (n - 1)] = qi(k as i64 + 1);
        cases.push((format!("exp(w{k})"), exp_nminus(&ctx, &w)?, Isotropy::Neither));
    }
    report.isotropy = cases.into_iter().map(|(name, g, want)| (name, isotropy_check(&g), want)).collect();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|x| qi(*x)).collect()
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed(&ints(&[0, 0, 0])), ints(&[1, 0, 0, 1, 0]));
        assert_eq!(embed(&ints(&[1, 0, 0])), ints(&[0, 2, 0, 2, 0]));
        assert!(on_cone(&embed(&ints(&[1, 2, 3, 4]))));
    }

    #[test]
    fn invert_examples() {
        let w = ints(&[1, 0, 0]);
        assert_eq!(invert(&embed(&w)).unwrap(), w);
        assert_eq!(invert(&ints(&[1, 0, 0, 1, 0])).unwrap(), ints(&[0, 0, 0]));
        assert_eq!(invert(&ints(&[1, 1, 0, -1, 0])), Err(Error::SingularSet));
    }

    #[test]
    fn exp_examples() {
        let ctx = LieAlgebraContext::new(4).unwrap();
        assert_eq!(exp_nminus(&ctx, &ints(&[0, 0, 0])).unwrap().matrix, RMatrix::identity(5));
        let w = vec![q(1, 2), qi(-3), q(2, 5)];
        let g = exp_nminus(&ctx, &w).unwrap();
        assert_eq!(g.apply(&base_point(4)), embed(&w));
    }

    #[test]
    fn isotropy_examples() {
        let ctx = LieAlgebraContext::new(5).unwrap();
        assert_eq!(isotropy_check(&GroupElement::w1(5)), Isotropy::FixesRay);
        assert_eq!(isotropy_check(&GroupElement::j(5)), Isotropy::FixesLine);
        let g = exp_nminus(&ctx, &ints(&[1, 0, 0, 0])).unwrap();
        assert_eq!(isotropy_check(&g), Isotropy::Neither);
    }

    #[test]
    fn representatives_and_hyperboloid() {
        let v = ints(&[0, -2, 4, 0]);
        assert_eq!(ray_representative(&v).unwrap(), vec![qi(0), qi(-1), qi(2), qi(0)]);
        assert_eq!(line_representative(&v).unwrap(), vec![qi(0), qi(1), qi(-2), qi(0)]);
        assert!(ray_representative(&ints(&[0, 0])).is_none());
        assert!(on_hyperboloid(&ints(&[1, 0, 0, 0, 0])));
        assert!(!on_hyperboloid(&base_point(4)));
    }

    #[test]
    fn full_report() {
        let r = verify_geometry(5, 20).unwrap();
        assert!(r.pass(), "{r:?}");
    }
}
