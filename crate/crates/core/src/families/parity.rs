use serde::Serialize;

use super::{ambient_algebra, assemble, compute_coefficients};
use crate::arith::RatFunc;
use crate::error::Result;
use crate::lie::GroupElement;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityCheck {
    pub element: String,
    /// Expected eigenvalue of `Ad(i(w))` on `D_N(L)`.
    pub sign: i8,
    pub pass: bool,
}

/// `Ad(i(w1)) D = D`, `Ad(i(w2)) D = D` and `Ad(i(J)) D = (-1)^N D`.
pub fn verify_parity(n: usize, order: u32) -> Result<Vec<ParityCheck>> {
    let alg = ambient_algebra(n)?;
    let d = assemble(&alg, &compute_coefficients(n, order)?)?.element;
    let j_sign: i8 = if order.is_multiple_of(2) { 1 } else { -1 };
    [(GroupElement::w1(n), 1), (GroupElement::w2(n), 1), (GroupElement::j(n), j_sign)]
        .into_iter()
        .map(|(w, sign)| {
            let image = alg.ad_group_nminus(&w.include(), &d)?;
            let pass = image == d.scale(&RatFunc::int(sign.into()));
            Ok(ParityCheck { element: w.name.to_string(), sign, pass })
        })
        .collect()
}
