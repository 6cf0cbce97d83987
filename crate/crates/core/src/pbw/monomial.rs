use std::cmp::Ordering;

/// An ordered PBW monomial `x_{i1}^{e1} x_{i2}^{e2} ...` with `i1 < i2 < ...`,
/// stored sparsely as `(basis index, exponent)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(u16, u16)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn generator(index: usize) -> Self {
        Self(vec![(index as u16, 1)])
    }

    /// Builds a monomial from dense exponents indexed by basis position.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        Self(
            exponents
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| (i as u16, *e as u16))
                .collect(),
        )
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| u32::from(*e)).sum()
    }

    /// `(index, exponent)` pairs in increasing index order.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|(i, e)| (usize::from(*i), u32::from(*e)))
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0
            .iter()
            .find(|(i, _)| usize::from(*i) == index)
            .map_or(0, |(_, e)| u32::from(*e))
    }

    /// Each generator repeated by its exponent, in PBW order.
    pub fn letters(&self) -> Vec<usize> {
        self.factors().flat_map(|(i, e)| std::iter::repeat_n(i, e as usize)).collect()
    }

    pub(crate) fn first(&self) -> Option<usize> {
        self.0.first().map(|(i, _)| usize::from(*i))
    }

    /// `x_a * self` when `a` does not exceed the first index.
    pub(crate) fn prepend(&self, a: usize) -> Self {
        debug_assert!(self.first().is_none_or(|b| a <= b));
        let mut v = self.0.clone();
        match v.first_mut() {
            Some((i, e)) if usize::from(*i) == a => *e += 1,
            _ => v.insert(0, (a as u16, 1)),
        }
        Self(v)
    }

    /// Drops one copy of the first generator.
    pub(crate) fn pop_first(&self) -> Self {
        let mut v = self.0.clone();
        if v[0].1 == 1 {
            v.remove(0);
        } else {
            v[0].1 -= 1;
        }
        Self(v)
    }

    /// Product of two monomials whose generators pairwise commute.
    pub fn commuting_product(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        for &(i, e) in &other.0 {
            match v.binary_search_by_key(&i, |(j, _)| *j) {
                Ok(p) => v[p].1 += e,
                Err(p) => v.insert(p, (i, e)),
            }
        }
        Self(v)
    }

    /// Removes the factors for which `keep` is false, returning them separately.
    pub fn split(&self, keep: impl Fn(usize) -> bool) -> (Self, Self) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|(i, _)| keep(usize::from(*i)));
        (Self(a), Self(b))
    }
}

impl Ord for Monomial {
    /// Graded: total degree first, then lexicographic on the sparse factors.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
