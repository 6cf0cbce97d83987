//! The real form o(2, n-1) in its standard (n+1) x (n+1) matrix realization.
//!
//! Coordinates are ordered `(t1, t2, x1, x2, x3, ..., x_{n-1})` and the
//! invariant form is `diag(-1, -1, 1, ..., 1)`. Matrices are written in the
//! block layout `4x4 | 4x(n-3)`; the index `j` of `Y_j`, `Z_j` and `M_ij`
//! runs over the trailing `n-3` coordinates.

mod group;
mod table;

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

pub use group::{GroupElement, GroupTag};
pub use table::{RelationCheck, StructureViolations};

use crate::arith::{q, qi, render_rational, Rational};
use crate::error::{Error, Result};
use crate::matrix::RMatrix;

/// Named basis generator. The derived `Ord` is the PBW order: `n-` first,
/// then `m`, then `H`, then `n+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    YMinus(usize),
    Q1Minus,
    Q2Minus,
    H2,
    ZPlus(usize),
    ZMinus(usize),
    /// `M_ij` with `i < j`.
    M(usize, usize),
    H,
    YPlus(usize),
    Q1Plus,
    Q2Plus,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::YMinus(j) => write!(f, "Y-{j}"),
            Generator::YPlus(j) => write!(f, "Y+{j}"),
            Generator::ZMinus(j) => write!(f, "Z-{j}"),
            Generator::ZPlus(j) => write!(f, "Z+{j}"),
            Generator::Q1Minus => f.write_str("Q1-"),
            Generator::Q1Plus => f.write_str("Q1+"),
            Generator::Q2Minus => f.write_str("Q2-"),
            Generator::Q2Plus => f.write_str("Q2+"),
            Generator::H => f.write_str("H"),
            Generator::H2 => f.write_str("H2"),
            Generator::M(i, j) => write!(f, "M{i}_{j}"),
        }
    }
}

/// Langlands decomposition `g = n- + m + a + n+` of the maximal parabolic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subspace {
    NMinus,
    M,
    A,
    NPlus,
}

#[derive(Clone, Debug)]
pub struct LieBasisElement {
    pub name: Generator,
    pub matrix: RMatrix,
    pub ad_h_weight: i32,
    pub subspace: Subspace,
}

/// An element of `g_n`, as coordinates over the context basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    n: usize,
    coords: Vec<Rational>,
}

impl LieElement {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Nonzero `(basis index, coefficient)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { n: self.n, coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Self { n: self.n, coords })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&qi(-1)))
    }

    fn same_context(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MixedContexts { left: self.n, right: other.n });
        }
        Ok(())
    }
}

/// `g_n = o(2, n-1)` with its named basis and precomputed structure constants.
#[derive(Debug)]
pub struct LieAlgebraContext {
    n: usize,
    form: RMatrix,
    basis: Vec<LieBasisElement>,
    index: HashMap<Generator, usize>,
    /// `structure[i][j]` is the sparse expansion of `[e_i, e_j]`.
    structure: Vec<Vec<Vec<(usize, Rational)>>>,
    pivot_entries: Vec<usize>,
    pivot_inverse: RMatrix,
}

impl LieAlgebraContext {
    pub fn new(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::DimensionTooSmall(n));
        }
        let size = n + 1;
        let mut form_diag = vec![qi(1); size];
        form_diag[0] = qi(-1);
        form_diag[1] = qi(-1);
        let form = RMatrix::diagonal(&form_diag);

        let mut names = Vec::new();
        names.extend((1..=n - 3).map(Generator::YMinus));
        names.extend([Generator::Q1Minus, Generator::Q2Minus, Generator::H2]);
        names.extend((1..=n - 3).map(Generator::ZPlus));
        names.extend((1..=n - 3).map(Generator::ZMinus));
        for i in 1..=n - 3 {
            names.extend((i + 1..=n - 3).map(|j| Generator::M(i, j)));
        }
        names.push(Generator::H);
        names.extend((1..=n - 3).map(Generator::YPlus));
        names.extend([Generator::Q1Plus, Generator::Q2Plus]);
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));

        let h = raw_matrix(size, Generator::H);
        let mut basis = Vec::with_capacity(names.len());
        for name in names {
            let matrix = raw_matrix(size, name);
            let subspace = match name {
                Generator::YMinus(_) | Generator::Q1Minus | Generator::Q2Minus => Subspace::NMinus,
                Generator::YPlus(_) | Generator::Q1Plus | Generator::Q2Plus => Subspace::NPlus,
                Generator::H => Subspace::A,
                _ => Subspace::M,
            };
            let ad = h.commutator(&matrix);
            let weight = [-1i32, 0, 1]
                .into_iter()
                .find(|&w| ad == matrix.scale(&qi(w.into())))
                .expect("basis vector is an ad(H) eigenvector");
            basis.push(LieBasisElement { name, matrix, ad_h_weight: weight, subspace });
        }
        let index = basis.iter().enumerate().map(|(i, b)| (b.name, i)).collect();

        let dim = basis.len();
        let flat = RMatrix::from_rows(basis.iter().map(|b| b.matrix.entries().to_vec()).collect());
        let pivot_entries = flat.pivot_columns();
        assert_eq!(pivot_entries.len(), dim, "basis matrices are linearly independent");
        let square = RMatrix::from_rows(
            pivot_entries
                .iter()
                .map(|&p| basis.iter().map(|b| b.matrix.entries()[p].clone()).collect())
                .collect(),
        );
        let pivot_inverse = square.inverse().expect("pivot block is invertible");

        let mut ctx = Self {
            n,
            form,
            basis,
            index,
            structure: vec![vec![Vec::new(); dim]; dim],
            pivot_entries,
            pivot_inverse,
        };
        for i in 0..dim {
            for j in i + 1..dim {
                let m = ctx.basis[i].matrix.commutator(&ctx.basis[j].matrix);
                let coords = ctx.decompose(&m)?;
                let sparse: Vec<(usize, Rational)> =
                    coords.support().map(|(k, c)| (k, c.clone())).collect();
                ctx.structure[j][i] = sparse.iter().map(|(k, c)| (*k, -c)).collect();
                ctx.structure[i][j] = sparse;
            }
        }
        Ok(ctx)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix_size(&self) -> usize {
        self.n + 1
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn form(&self) -> &RMatrix {
        &self.form
    }

    pub fn basis(&self) -> &[LieBasisElement] {
        &self.basis
    }

    pub fn index_of(&self, g: Generator) -> Option<usize> {
        self.index.get(&g).copied()
    }

    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.structure[i][j]
    }

    /// Basis indices lying in `s`, in PBW order.
    pub fn indices_in(&self, s: Subspace) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].subspace == s).collect()
    }

    pub fn zero(&self) -> LieElement {
        LieElement { n: self.n, coords: vec![Rational::zero(); self.dim()] }
    }

    pub fn unit(&self, index: usize) -> LieElement {
        let mut e = self.zero();
        e.coords[index] = Rational::one();
        e
    }

    /// The basis element named `g`. Panics if `g` has an index out of range
    /// for this `n`.
    pub fn gen(&self, g: Generator) -> LieElement {
        let i = self.index_of(g).unwrap_or_else(|| panic!("{g} is not a generator of g_{}", self.n));
        self.unit(i)
    }

    /// `M_ij` for any `i, j`, with `M_ii = 0` and `M_ji = -M_ij`.
    pub fn m(&self, i: usize, j: usize) -> LieElement {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => self.zero(),
            std::cmp::Ordering::Less => self.gen(Generator::M(i, j)),
            std::cmp::Ordering::Greater => self.gen(Generator::M(j, i)).scale(&qi(-1)),
        }
    }

    /// `W_1 .. W_4` of the restricted root spaces `g_{+-f1+-f2}`.
    pub fn w(&self, k: usize) -> LieElement {
        let lc = |a: i64, x: Generator, b: i64, y: Generator| {
            self.gen(x).scale(&qi(a)).add(&self.gen(y).scale(&qi(b))).expect("same context")
        };
        match k {
            1 => lc(1, Generator::Q1Plus, -1, Generator::Q2Plus),
            2 => lc(1, Generator::Q1Plus, 1, Generator::Q2Plus),
            3 => lc(-1, Generator::Q1Minus, -1, Generator::Q2Minus),
            4 => lc(-1, Generator::Q1Minus, 1, Generator::Q2Minus),
            _ => panic!("W_{k} is not defined"),
        }
    }

    pub fn matrix_of(&self, x: &LieElement) -> RMatrix {
        let size = self.matrix_size();
        x.support().fold(RMatrix::zeros(size, size), |acc, (i, c)| {
            &acc + &self.basis[i].matrix.scale(c)
        })
    }

    /// Coordinates of a matrix over the basis; fails if it is not in `g_n`.
    pub fn decompose(&self, m: &RMatrix) -> Result<LieElement> {
        let size = self.matrix_size();
        if m.rows() != size || m.cols() != size {
            return Err(Error::DimensionMismatch { expected: size, got: m.rows() });
        }
        let picked: Vec<Rational> =
            self.pivot_entries.iter().map(|&p| m.entries()[p].clone()).collect();
        let x = LieElement { n: self.n, coords: self.pivot_inverse.mul_vec(&picked) };
        if &self.matrix_of(&x) != m {
            return Err(Error::NotInAlgebra(self.n));
        }
        Ok(x)
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        self.check(x)?;
        self.check(y)?;
        let mut out = self.zero();
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                let ab = a * b;
                for (k, c) in &self.structure[i][j] {
                    out.coords[*k] += &ab * c;
                }
            }
        }
        Ok(out)
    }

    /// Block embedding `X -> diag(X, 0)` into `target = g_{n+1}`.
    pub fn include(&self, x: &LieElement, target: &LieAlgebraContext) -> Result<LieElement> {
        self.check(x)?;
        if target.n != self.n + 1 {
            return Err(Error::MixedContexts { left: self.n + 1, right: target.n });
        }
        target.decompose(&self.matrix_of(x).embed(target.matrix_size(), &Rational::zero()))
    }

    /// `w X w^{-1}` over the basis.
    pub fn ad_group(&self, w: &GroupElement, x: &LieElement) -> Result<LieElement> {
        self.check(x)?;
        if w.matrix.rows() != self.matrix_size() {
            return Err(Error::DimensionMismatch { expected: self.matrix_size(), got: w.matrix.rows() });
        }
        let inv = w.inverse();
        let image = &(&w.matrix * &self.matrix_of(x)) * &inv;
        self.decompose(&image).map_err(|_| Error::AdNotPreserved(self.render(x)))
    }

    pub fn render(&self, x: &LieElement) -> String {
        let terms: Vec<String> = x
            .support()
            .map(|(i, c)| {
                let name = self.basis[i].name;
                if c.is_one() {
                    name.to_string()
                } else {
                    format!("{}*{name}", render_rational(c))
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    fn check(&self, x: &LieElement) -> Result<()> {
        if x.n != self.n {
            return Err(Error::MixedContexts { left: self.n, right: x.n });
        }
        Ok(())
    }
}

/// Matrix of a named generator in size `size = n + 1`.
fn raw_matrix(size: usize, g: Generator) -> RMatrix {
    let mut m = RMatrix::zeros(size, size);
    // trailing coordinate of e_j
    let e = |j: usize| 3 + j;
    let set = |m: &mut RMatrix, entries: &[(usize, usize, Rational)]| {
        for (i, j, v) in entries {
            m[(*i, *j)] = v.clone();
        }
    };
    let one = qi(1);
    let neg = qi(-1);
    match g {
        Generator::H => set(&mut m, &[(0, 3, one.clone()), (3, 0, one)]),
        Generator::H2 => set(&mut m, &[(1, 2, one.clone()), (2, 1, one)]),
        Generator::YPlus(j) => set(
            &mut m,
            &[(0, e(j), one.clone()), (3, e(j), one.clone()), (e(j), 0, one), (e(j), 3, neg)],
        ),
        Generator::ZPlus(j) => set(
            &mut m,
            &[(1, e(j), one.clone()), (2, e(j), one.clone()), (e(j), 1, one), (e(j), 2, neg)],
        ),
        Generator::YMinus(j) => return raw_matrix(size, Generator::YPlus(j)).transpose(),
        Generator::ZMinus(j) => return raw_matrix(size, Generator::ZPlus(j)).transpose(),
        Generator::M(i, j) => set(&mut m, &[(e(i), e(j), one), (e(j), e(i), neg)]),
        Generator::Q1Plus | Generator::Q2Plus => {
            let (w1, w2) = (w1_matrix(size), w2_matrix(size));
            let half = q(1, 2);
            return if g == Generator::Q1Plus {
                (&w1 + &w2).scale(&half)
            } else {
                (&w2 - &w1).scale(&half)
            };
        }
        Generator::Q1Minus => return raw_matrix(size, Generator::Q1Plus).transpose(),
        Generator::Q2Minus => return raw_matrix(size, Generator::Q2Plus).transpose(),
    }
    m
}

fn corner(size: usize, rows: [[i64; 4]; 4]) -> RMatrix {
    let mut m = RMatrix::zeros(size, size);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m[(i, j)] = qi(*v);
        }
    }
    m
}

fn w1_matrix(size: usize) -> RMatrix {
    corner(size, [[0, 1, -1, 0], [-1, 0, 0, 1], [-1, 0, 0, 1], [0, 1, -1, 0]])
}

fn w2_matrix(size: usize) -> RMatrix {
    corner(size, [[0, 1, 1, 0], [-1, 0, 0, 1], [1, 0, 0, -1], [0, 1, 1, 0]])
}
