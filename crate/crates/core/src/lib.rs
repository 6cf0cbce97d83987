//! Exact construction and verification of the differential operator families
//! `D_N(L)` attached to the pair `o(2, n) > o(2, n-1)`.
//!
//! Everything is computed over Q(L), the field of rational functions in the
//! spectral parameter, so every identity is checked symbolically.

pub mod arith;
pub mod asymptotics;
pub mod error;
pub mod families;
pub mod geometry;
pub mod lie;
pub mod linalg;
pub mod matrix;
pub mod minkowski;
pub mod pbw;
pub mod suite;

pub use arith::{PolyLambda, RatFunc, Rational};
pub use error::{Error, Result};
pub use families::{build_family, compute_coefficients, FamilyCoefficients, FamilyElement, Parity};
pub use lie::{Generator, GroupElement, LieAlgebraContext, LieElement};
pub use minkowski::{DiffOp, MvPoly};
pub use pbw::{EnvelopingAlgebra, Monomial, UeaElement, Weight};
pub use suite::{Cell, Report, Status, Suite};
