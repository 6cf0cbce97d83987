//! Incremental sparse Gauss-Jordan elimination over Q(L).

use std::collections::BTreeMap;

use crate::arith::RatFunc;

pub type SparseRow = BTreeMap<usize, RatFunc>;

/// Reduced row echelon form built one row at a time.
#[derive(Clone, Debug, Default)]
pub struct RowEchelon {
    columns: usize,
    /// pivot column -> row with a 1 in that column and 0 in every other pivot column
    pivots: BTreeMap<usize, SparseRow>,
}

impl RowEchelon {
    pub fn new(columns: usize) -> Self {
        Self { columns, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Reduces `row` against the current pivots and keeps it if independent.
    /// Returns whether the rank grew.
    pub fn push(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, c| !c.is_zero());
        for (pc, prow) in &self.pivots {
            if let Some(f) = row.get(pc).cloned() {
                axpy(&mut row, &f, prow);
            }
        }
        let Some((&pc, lead)) = row.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        let row: SparseRow = row.iter().map(|(k, c)| (*k, c * &inv)).collect();
        for other in self.pivots.values_mut() {
            if let Some(f) = other.get(&pc).cloned() {
                axpy(other, &f, &row);
            }
        }
        self.pivots.insert(pc, row);
        true
    }

    /// A basis of the solution space of `A v = 0`, one vector per free column,
    /// normalized to 1 at that column.
    pub fn nullspace(&self) -> Vec<Vec<RatFunc>> {
        (0..self.columns)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| {
                let mut v = vec![RatFunc::zero(); self.columns];
                v[free] = RatFunc::one();
                for (pc, prow) in &self.pivots {
                    if let Some(c) = prow.get(&free) {
                        v[*pc] = -c;
                    }
                }
                v
            })
            .collect()
    }
}

/// `row -= f * other`
fn axpy(row: &mut SparseRow, f: &RatFunc, other: &SparseRow) {
    for (k, c) in other {
        let d = f * c;
        let e = row.entry(*k).or_insert_with(RatFunc::zero);
        *e = &*e - &d;
        if e.is_zero() {
            row.remove(k);
        }
    }
}
