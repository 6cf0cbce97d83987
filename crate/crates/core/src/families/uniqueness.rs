use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::equivariance::{m_generators, nplus_generators};
use super::{ambient_algebra, assemble, compute_coefficients};
use crate::arith::RatFunc;
use crate::error::Result;
use crate::lie::{Generator, LieAlgebraContext, Subspace};
use crate::linalg::{RowEchelon, SparseRow};
use crate::pbw::{EnvelopingAlgebra, Monomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub n: usize,
    #[serde(rename = "N")]
    pub order: u32,
    pub unknowns: usize,
    pub rank: usize,
    pub dimension: usize,
    /// Whether the single solution, scaled to match, equals `D_N(L)`.
    pub proportional_to_family: bool,
}

impl UniquenessReport {
    pub fn pass(&self) -> bool {
        self.dimension == 1 && self.proportional_to_family
    }
}

/// Solves the three conditions for a general element of `U(n-_{n+1})` of
/// degree `N` with unknown coefficients in `Q(L)`.
pub fn verify_uniqueness(n: usize, order: u32) -> Result<UniquenessReport> {
    let alg = ambient_algebra(n)?;
    let small = LieAlgebraContext::new(n)?;
    let big = alg.lie();
    let nminus = big.indices_in(Subspace::NMinus);
    let unknowns = EnvelopingAlgebra::monomials_of_degree(&nminus, order);
    let column: HashMap<&Monomial, usize> = unknowns.iter().enumerate().map(|(i, m)| (m, i)).collect();

    // Each condition maps an unknown monomial to an element of U(n-); a row
    // collects the coefficient of one output monomial across all unknowns.
    let mut blocks: Vec<BTreeMap<Monomial, SparseRow>> = Vec::new();
    let mut push_block = |images: Vec<crate::pbw::UeaElement>| {
        let mut rows: BTreeMap<Monomial, SparseRow> = BTreeMap::new();
        for (col, img) in images.into_iter().enumerate() {
            for (m, c) in img.terms() {
                rows.entry(m.clone()).or_default().insert(col, c.clone());
            }
        }
        blocks.push(rows);
    };
    let unit = |m: &Monomial| alg.monomial(m.clone(), RatFunc::one());

    for (_, x) in m_generators(&small) {
        let x = small.include(&x, big)?;
        let images = unknowns.iter().map(|m| alg.commutator(&x, &unit(m))).collect::<Result<_>>()?;
        push_block(images);
    }
    let h = big.gen(Generator::H);
    let weight = RatFunc::int(i64::from(order));
    let images = unknowns
        .iter()
        .map(|m| alg.commutator(&h, &unit(m))?.add(&unit(m).scale(&weight)))
        .collect::<Result<_>>()?;
    push_block(images);
    for (_, x) in nplus_generators(&small) {
        let x = small.include(&x, big)?;
        let images = unknowns
            .iter()
            .map(|m| alg.reduce_mod_ideal(&alg.commutator(&x, &unit(m))?))
            .collect::<Result<_>>()?;
        push_block(images);
    }

    let mut echelon = RowEchelon::new(unknowns.len());
    for block in blocks {
        for row in block.into_values() {
            echelon.push(row);
        }
    }
    let null = echelon.nullspace();

    let family = assemble(&alg, &compute_coefficients(n, order)?)?;
    let proportional_to_family = match null.as_slice() {
        [v] => {
            let (m0, c0) = family.element.terms().iter().next().expect("nonzero family");
            let scale = v[column[m0]].checked_div(c0)?;
            unknowns.iter().enumerate().all(|(i, m)| v[i] == &family.element.coeff(m) * &scale)
                && family.element.terms().keys().all(|m| column.contains_key(m))
        }
        _ => false,
    };
    Ok(UniquenessReport {
        n,
        order,
        unknowns: unknowns.len(),
        rank: echelon.rank(),
        dimension: null.len(),
        proportional_to_family,
    })
}
