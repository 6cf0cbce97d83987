use serde::Serialize;

use super::equivariance::m_generators;
use crate::arith::RatFunc;
use crate::error::{Error, Result};
use crate::lie::Subspace;
use crate::linalg::RowEchelon;
use crate::pbw::{EnvelopingAlgebra, Monomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeDimension {
    pub degree: u32,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerReport {
    pub n: usize,
    pub max_degree: u32,
    pub unknowns: usize,
    /// Dimension of the centralizer within each homogeneous degree.
    pub per_degree: Vec<DegreeDimension>,
    pub dimension: usize,
    pub expected: usize,
    /// Every `Delta^k` with `2k <= max_degree` commutes with `m_n`.
    pub delta_powers_central: bool,
}

impl CentralizerReport {
    pub fn pass(&self) -> bool {
        self.dimension == self.expected && self.delta_powers_central
    }
}

/// The `m_n`-centralizer in `U(n-_n)` up to degree `max_degree`.
///
/// Commutators with `m_n` preserve degree, so each degree is solved
/// separately. Powers of `Delta` have distinct degrees and are therefore
/// independent; with the dimension count they span the centralizer.
pub fn verify_centralizer(n: usize, max_degree: u32) -> Result<CentralizerReport> {
    if n < 4 {
        return Err(Error::DimensionTooSmall(n));
    }
    let alg = EnvelopingAlgebra::new(n)?;
    let lie = alg.lie();
    let nminus = lie.indices_in(Subspace::NMinus);
    let ms = m_generators(lie);
    let mut per_degree = Vec::new();
    let mut unknowns = 0;
    for degree in 0..=max_degree {
        let monos = EnvelopingAlgebra::monomials_of_degree(&nminus, degree);
        unknowns += monos.len();
        let mut echelon = RowEchelon::new(monos.len());
        for (_, x) in &ms {
            let mut rows: std::collections::BTreeMap<Monomial, crate::linalg::SparseRow> =
                Default::default();
            for (col, m) in monos.iter().enumerate() {
                let c = alg.commutator(x, &alg.monomial(m.clone(), RatFunc::one()))?;
                for (out, coeff) in c.terms() {
                    rows.entry(out.clone()).or_default().insert(col, coeff.clone());
                }
            }
            for row in rows.into_values() {
                echelon.push(row);
            }
        }
        per_degree.push(DegreeDimension { degree, dimension: echelon.nullspace().len() });
    }
    let dimension = per_degree.iter().map(|d| d.dimension).sum();

    let delta = alg.dalembertian(n - 3);
    let mut power = alg.one();
    let mut delta_powers_central = true;
    for _ in 0..=max_degree / 2 {
        for (_, x) in &ms {
            delta_powers_central &= alg.commutator(x, &power)?.is_zero();
        }
        power = alg.multiply(&power, &delta)?;
    }
    Ok(CentralizerReport {
        n,
        max_degree,
        unknowns,
        per_degree,
        dimension,
        expected: max_degree as usize / 2 + 1,
        delta_powers_central,
    })
}
