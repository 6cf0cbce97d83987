//! The universal enveloping algebra `U(g_n)` over `Q(L)` in a PBW basis.
//!
//! The basis order is the one of [`LieAlgebraContext`]: `n-` first, then `m`,
//! then `H`, then `n+`. Products are straightened with the rule
//! `x_a x_b = x_b x_a + [x_a, x_b]` for `b < a`; the expansion of `x_a * m` for
//! an ordered monomial `m` only involves rationals and is memoized.

pub mod lemmas;
mod monomial;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

pub use monomial::Monomial;

use crate::arith::{qi, render_rational, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::lie::{Generator, GroupElement, LieAlgebraContext, LieElement, Subspace};

type Expansion = Vec<(Monomial, Rational)>;

/// An element of `U(g_n) (x) Q(L)` in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UeaElement {
    n: usize,
    terms: BTreeMap<Monomial, RatFunc>,
}

/// ad(H)-weight of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    Homogeneous(i32),
    Mixed,
    /// The zero element has every weight.
    Zero,
}

impl UeaElement {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, RatFunc> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self { n: self.n, terms: BTreeMap::new() };
        }
        self.map_coeffs(|x| x * c)
    }

    pub fn scale_q(&self, c: &Rational) -> Self {
        self.scale(&RatFunc::constant(c.clone()))
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self { n: self.n, terms }
    }

    fn add_term(&mut self, m: Monomial, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MixedContexts { left: self.n, right: other.n });
        }
        Ok(())
    }
}

/// `U(g_n)` with its PBW basis and a straightening cache.
#[derive(Debug)]
pub struct EnvelopingAlgebra {
    lie: LieAlgebraContext,
    cache: Mutex<HashMap<(usize, Monomial), Arc<Expansion>>>,
}

impl EnvelopingAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self::from_lie(LieAlgebraContext::new(n)?))
    }

    pub fn from_lie(lie: LieAlgebraContext) -> Self {
        Self { lie, cache: Mutex::new(HashMap::new()) }
    }

    pub fn lie(&self) -> &LieAlgebraContext {
        &self.lie
    }

    pub fn n(&self) -> usize {
        self.lie.n()
    }

    pub fn zero(&self) -> UeaElement {
        UeaElement { n: self.n(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> UeaElement {
        self.monomial(Monomial::one(), RatFunc::one())
    }

    pub fn constant(&self, c: RatFunc) -> UeaElement {
        self.monomial(Monomial::one(), c)
    }

    pub fn monomial(&self, m: Monomial, c: RatFunc) -> UeaElement {
        let mut e = self.zero();
        e.add_term(m, &c);
        e
    }

    pub fn generator(&self, g: Generator) -> UeaElement {
        let i = self.lie.index_of(g).unwrap_or_else(|| panic!("{g} is not in g_{}", self.n()));
        self.monomial(Monomial::generator(i), RatFunc::one())
    }

    pub fn from_lie_element(&self, x: &LieElement) -> Result<UeaElement> {
        if x.n() != self.n() {
            return Err(Error::MixedContexts { left: self.n(), right: x.n() });
        }
        let mut e = self.zero();
        for (i, c) in x.support() {
            e.add_term(Monomial::generator(i), &RatFunc::constant(c.clone()));
        }
        Ok(e)
    }

    /// `-(Q1-)^2 + (Q2-)^2 + sum_{j <= ys} (Y_j-)^2`.
    pub fn dalembertian(&self, ys: usize) -> UeaElement {
        let sq = |g: Generator, sign: i64| {
            let i = self.lie.index_of(g).expect("generator exists");
            self.monomial(Monomial::from_exponents(&exponent_at(i, 2)), RatFunc::int(sign))
        };
        let mut d = sq(Generator::Q1Minus, -1).add(&sq(Generator::Q2Minus, 1)).unwrap();
        for j in 1..=ys {
            d = d.add(&sq(Generator::YMinus(j), 1)).unwrap();
        }
        d
    }

    /// `x_a * m` in normal form.
    fn lmul(&self, a: usize, m: &Monomial) -> Arc<Expansion> {
        let b = match m.first() {
            Some(b) if b < a => b,
            _ => return Arc::new(vec![(m.prepend(a), Rational::one())]),
        };
        let key = (a, m.clone());
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return Arc::clone(hit);
        }
        let rest = m.pop_first();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        let mut push = |m: Monomial, c: Rational| {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        };
        // x_a x_b rest = x_b (x_a rest) + [x_a, x_b] rest
        for (m1, c1) in self.lmul(a, &rest).iter() {
            for (m2, c2) in self.lmul(b, m1).iter() {
                push(m2.clone(), c1 * c2);
            }
        }
        for (k, c) in self.lie.structure(a, b) {
            for (m2, c2) in self.lmul(*k, &rest).iter() {
                push(m2.clone(), c * c2);
            }
        }
        let mut out: Expansion = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by(|x, y| x.0.cmp(&y.0));
        let out = Arc::new(out);
        self.cache.lock().expect("cache lock").insert(key, Arc::clone(&out));
        out
    }

    /// Normal form of the product of two ordered monomials.
    pub fn monomial_product(&self, left: &Monomial, right: &Monomial) -> Expansion {
        let mut cur: HashMap<Monomial, Rational> = HashMap::from([(right.clone(), Rational::one())]);
        for a in left.letters().into_iter().rev() {
            let mut next: HashMap<Monomial, Rational> = HashMap::new();
            for (m, c) in &cur {
                for (m2, c2) in self.lmul(a, m).iter() {
                    *next.entry(m2.clone()).or_insert_with(Rational::zero) += c * c2;
                }
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
        }
        cur.into_iter().collect()
    }

    pub fn multiply(&self, u: &UeaElement, v: &UeaElement) -> Result<UeaElement> {
        self.check(u)?;
        self.check(v)?;
        let mut acc: HashMap<Monomial, RatFunc> = HashMap::new();
        for (mu, cu) in &u.terms {
            for (mv, cv) in &v.terms {
                let c = cu * cv;
                for (m, q) in self.monomial_product(mu, mv) {
                    let e = acc.entry(m).or_insert_with(RatFunc::zero);
                    *e = &*e + &c.scale(&q);
                }
            }
        }
        Ok(self.collect(acc))
    }

    pub fn pow(&self, u: &UeaElement, k: u32) -> Result<UeaElement> {
        let mut out = self.one();
        for _ in 0..k {
            out = self.multiply(&out, u)?;
        }
        Ok(out)
    }

    /// `X u - u X`.
    pub fn commutator(&self, x: &LieElement, u: &UeaElement) -> Result<UeaElement> {
        let xe = self.from_lie_element(x)?;
        self.multiply(&xe, u)?.sub(&self.multiply(u, &xe)?)
    }

    pub fn weight(&self, u: &UeaElement) -> Weight {
        let mut seen = None;
        for m in u.terms.keys() {
            let w: i32 = m
                .factors()
                .map(|(i, e)| self.lie.basis()[i].ad_h_weight * e as i32)
                .sum();
            match seen {
                None => seen = Some(w),
                Some(s) if s != w => return Weight::Mixed,
                _ => {}
            }
        }
        seen.map_or(Weight::Zero, Weight::Homogeneous)
    }

    /// Projects `u` along `U(n-)(m + C(H - L))` onto `U(n-) (x) Q(L)`.
    ///
    /// Only inputs with no `n+` factors and at most one factor from `m` or `H`
    /// per monomial are accepted.
    pub fn reduce_mod_ideal(&self, u: &UeaElement) -> Result<UeaElement> {
        self.check(u)?;
        let mut out = self.zero();
        for (m, c) in &u.terms {
            let (nminus, tail) = m.split(|i| self.subspace(i) == Subspace::NMinus);
            let tail_factors: Vec<(usize, u32)> = tail.factors().collect();
            let shape_ok = tail.degree() <= 1
                && tail_factors.iter().all(|(i, _)| self.subspace(*i) != Subspace::NPlus);
            if !shape_ok {
                return Err(Error::OutsideShape(self.render_monomial(m)));
            }
            match tail_factors.first().map(|(i, _)| self.subspace(*i)) {
                None => out.add_term(nminus, c),
                Some(Subspace::A) => out.add_term(nminus, &(c * &RatFunc::lambda())),
                _ => {}
            }
        }
        Ok(out)
    }

    /// `Ad(w)` extended multiplicatively to `U(n-)`; `w` must normalize `n-`.
    pub fn ad_group_nminus(&self, w: &GroupElement, u: &UeaElement) -> Result<UeaElement> {
        self.check(u)?;
        let mut images: HashMap<usize, UeaElement> = HashMap::new();
        let mut out = self.zero();
        for (m, c) in &u.terms {
            let mut term = self.constant(c.clone());
            for (i, e) in m.factors() {
                if let std::collections::hash_map::Entry::Vacant(e) = images.entry(i) {
                    if self.subspace(i) != Subspace::NMinus {
                        return Err(Error::OutsideShape(self.render_monomial(m)));
                    }
                    let img = self.lie.ad_group(w, &self.lie.unit(i))?;
                    if img.support().any(|(k, _)| self.subspace(k) != Subspace::NMinus) {
                        return Err(Error::AdNotPreserved(self.lie.basis()[i].name.to_string()));
                    }
                    e.insert(self.from_lie_element(&img)?);
                }
                term = self.multiply(&term, &self.pow(&images[&i], e)?)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Image of `u` under the inclusion `U(g_n) -> U(g_{n+1})`.
    pub fn include(&self, u: &UeaElement, target: &EnvelopingAlgebra) -> Result<UeaElement> {
        self.check(u)?;
        let mut out = target.zero();
        for (m, c) in &u.terms {
            let mut term = target.constant(c.clone());
            for i in m.letters() {
                let img = self.lie.include(&self.lie.unit(i), target.lie())?;
                term = target.multiply(&term, &target.from_lie_element(&img)?)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// All monomials of exact degree `d` in the given generator indices.
    pub fn monomials_of_degree(indices: &[usize], d: u32) -> Vec<Monomial> {
        fn rec(indices: &[usize], d: u32, exps: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial>) {
            match indices.split_first() {
                None => {
                    if d == 0 {
                        let max = exps.iter().map(|(i, _)| *i + 1).max().unwrap_or(0);
                        let mut dense = vec![0; max];
                        for (i, e) in exps.iter() {
                            dense[*i] = *e;
                        }
                        out.push(Monomial::from_exponents(&dense));
                    }
                }
                Some((&first, rest)) => {
                    for e in (0..=d).rev() {
                        exps.push((first, e));
                        rec(rest, d - e, exps, out);
                        exps.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        rec(indices, d, &mut Vec::new(), &mut out);
        out
    }

    pub fn subspace(&self, i: usize) -> Subspace {
        self.lie.basis()[i].subspace
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.factors()
            .map(|(i, e)| {
                let name = self.lie.basis()[i].name;
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn render(&self, u: &UeaElement) -> String {
        if u.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in u.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            let mono = self.render_monomial(m);
            match c.as_constant() {
                Some(q) if q.is_one() => s.push_str(&mono),
                Some(q) if m.is_one() => s.push_str(&render_rational(&q)),
                Some(q) => {
                    let _ = write!(s, "{}*{mono}", render_rational(&q));
                }
                None if m.is_one() => {
                    let _ = write!(s, "({c})");
                }
                None => {
                    let _ = write!(s, "({c})*{mono}");
                }
            }
        }
        s
    }

    fn collect(&self, acc: HashMap<Monomial, RatFunc>) -> UeaElement {
        UeaElement {
            n: self.n(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn check(&self, u: &UeaElement) -> Result<()> {
        if u.n != self.n() {
            return Err(Error::MixedContexts { left: self.n(), right: u.n });
        }
        Ok(())
    }
}

fn exponent_at(i: usize, e: u32) -> Vec<u32> {
    let mut v = vec![0; i + 1];
    v[i] = e;
    v
}

/// `sum c_i x_i` as a shorthand for tests and lemma checks.
pub fn linear(alg: &EnvelopingAlgebra, terms: &[(i64, Generator)]) -> UeaElement {
    terms.iter().fold(alg.zero(), |acc, (c, g)| {
        acc.add(&alg.generator(*g).scale_q(&qi(*c))).expect("same algebra")
    })
}

#[cfg(test)]
mod tests;
