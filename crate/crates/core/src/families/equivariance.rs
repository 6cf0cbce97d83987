use serde::Serialize;

use super::{ambient_algebra, assemble, compute_coefficients};
use crate::arith::RatFunc;
use crate::error::Result;
use crate::lie::{Generator, LieAlgebraContext, LieElement, Subspace};
use crate::pbw::{EnvelopingAlgebra, UeaElement};

/// The three homomorphism conditions on `F` of order `N`:
/// `[M, F] = 0` for `M` in `m_n`, `[X, F]` in the left ideal generated by
/// `m + C(H - L)` for `X` in `n+_n`, and `[H, F] = -N F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Condition {
    #[serde(rename = "A")]
    MInvariant,
    #[serde(rename = "B")]
    Singular,
    #[serde(rename = "C")]
    Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residue {
    pub condition: Condition,
    pub generator: String,
    pub residue: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeControl {
    pub perturbed: usize,
    pub rejected: bool,
    pub residue: Option<Residue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivarianceReport {
    pub n: usize,
    #[serde(rename = "N")]
    pub order: u32,
    pub residues: Vec<Residue>,
    pub negative_controls: Vec<NegativeControl>,
}

impl EquivarianceReport {
    pub fn pass(&self) -> bool {
        self.residues.is_empty() && self.negative_controls.iter().all(|c| c.rejected)
    }
}

/// `n+_n` is spanned by `Y_j+` and `W1 = Q1+ - Q2+`, `W2 = Q1+ + Q2+`.
pub(crate) fn nplus_generators(small: &LieAlgebraContext) -> Vec<(String, LieElement)> {
    let mut out: Vec<(String, LieElement)> = (1..=small.n() - 3)
        .map(|j| (Generator::YPlus(j).to_string(), small.gen(Generator::YPlus(j))))
        .collect();
    out.push(("W1".into(), small.w(1)));
    out.push(("W2".into(), small.w(2)));
    out
}

pub(crate) fn m_generators(small: &LieAlgebraContext) -> Vec<(String, LieElement)> {
    small
        .indices_in(Subspace::M)
        .into_iter()
        .map(|i| (small.basis()[i].name.to_string(), small.unit(i)))
        .collect()
}

/// Residues of `f` against the selected conditions, in `alg = U(g_{n+1})`.
pub(crate) fn residues(
    alg: &EnvelopingAlgebra,
    small: &LieAlgebraContext,
    f: &UeaElement,
    order: u32,
    conditions: &[Condition],
) -> Result<Vec<Residue>> {
    let big = alg.lie();
    let mut out = Vec::new();
    let mut record = |condition, generator: String, r: UeaElement| {
        if !r.is_zero() {
            out.push(Residue { condition, generator, residue: alg.render(&r) });
        }
    };
    if conditions.contains(&Condition::MInvariant) {
        for (name, x) in m_generators(small) {
            let c = alg.commutator(&small.include(&x, big)?, f)?;
            record(Condition::MInvariant, name, c);
        }
    }
    if conditions.contains(&Condition::Singular) {
        for (name, x) in nplus_generators(small) {
            let c = alg.commutator(&small.include(&x, big)?, f)?;
            record(Condition::Singular, name, alg.reduce_mod_ideal(&c)?);
        }
    }
    if conditions.contains(&Condition::Weight) {
        let h = small.include(&small.gen(Generator::H), big)?;
        let c = alg.commutator(&h, f)?.add(&f.scale(&RatFunc::int(i64::from(order))))?;
        record(Condition::Weight, "H".into(), c);
    }
    Ok(out)
}

/// Checks the three conditions on `D_N(L)` and that perturbing any single
/// coefficient by one violates the singular-vector condition. Families with a
/// single coefficient have no meaningful perturbation: it only rescales.
pub fn verify_equivariance(n: usize, order: u32) -> Result<EquivarianceReport> {
    let alg = ambient_algebra(n)?;
    let small = LieAlgebraContext::new(n)?;
    let coeffs = compute_coefficients(n, order)?;
    let family = assemble(&alg, &coeffs)?;
    let all = [Condition::MInvariant, Condition::Singular, Condition::Weight];
    let found = residues(&alg, &small, &family.element, order, &all)?;

    let mut negative_controls = Vec::new();
    if coeffs.coeffs.len() >= 2 {
        for j in 0..coeffs.coeffs.len() {
            let bad = assemble(&alg, &coeffs.perturbed(j))?;
            let r = residues(&alg, &small, &bad.element, order, &[Condition::Singular])?;
            negative_controls.push(NegativeControl {
                perturbed: j,
                rejected: !r.is_empty(),
                residue: r.into_iter().next(),
            });
        }
    }
    Ok(EquivarianceReport { n, order, residues: found, negative_controls })
}
