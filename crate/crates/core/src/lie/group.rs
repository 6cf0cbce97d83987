use std::fmt;

use crate::arith::{qi, Rational};
use crate::matrix::RMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupTag {
    W1,
    W2,
    J,
    Custom(String),
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::W1 => f.write_str("w1"),
            GroupTag::W2 => f.write_str("w2"),
            GroupTag::J => f.write_str("J"),
            GroupTag::Custom(s) => f.write_str(s),
        }
    }
}

/// An element of `O(2, n-1)` as an exact `(n+1) x (n+1)` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub name: GroupTag,
    pub matrix: RMatrix,
}

impl GroupElement {
    pub fn new(name: GroupTag, matrix: RMatrix) -> Self {
        Self { name, matrix }
    }

    fn diagonal(n: usize, name: GroupTag, flips: &[usize]) -> Self {
        let mut d = vec![qi(1); n + 1];
        for &i in flips {
            d[i] = qi(-1);
        }
        Self { name, matrix: RMatrix::diagonal(&d) }
    }

    /// Reflection `t2 -> -t2`.
    pub fn w1(n: usize) -> Self {
        Self::diagonal(n, GroupTag::W1, &[1])
    }

    /// Reflection `x1 -> -x1`.
    pub fn w2(n: usize) -> Self {
        Self::diagonal(n, GroupTag::W2, &[2])
    }

    /// `-1` on all of `R^{n+1}`.
    pub fn j(n: usize) -> Self {
        Self::diagonal(n, GroupTag::J, &(0..=n).collect::<Vec<_>>())
    }

    /// Group-level inclusion `g -> diag(g, 1)`.
    pub fn include(&self) -> Self {
        let size = self.matrix.rows() + 1;
        Self { name: self.name.clone(), matrix: self.matrix.embed(size, &qi(1)) }
    }

    pub fn preserves_form(&self, form: &RMatrix) -> bool {
        &(&self.matrix.transpose() * form) * &self.matrix == *form
    }

    pub fn inverse(&self) -> RMatrix {
        self.matrix.inverse().expect("group elements are invertible")
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v)
    }
}
