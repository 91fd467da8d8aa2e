//! Exact summation of polynomials over the unit circles of finite fields.
//!
//! Three planar geometries — blue (`x^2 + y^2`), red (`x^2 - y^2`), and green
//! (`xy`) — each carry a unit circle in the affine plane over `F_q`, `q` an
//! odd prime power. The normalized sum of a polynomial's values over such a
//! circle is a linear functional with striking structure: its values on
//! monomials are governed by coefficient ladders of the circular polynumbers
//! `((1+a)/2)^k ((1-a)/2)^l`, whose central coefficients are the circular
//! super Catalan numbers `S(m,n)/4^{m+n}`.
//!
//! The crate computes the functional three ways — brute-force summation over
//! the enumerated circle, the closed-form ladders, and an exponent-reduction
//! program for large degrees — and cross-verifies the routes exactly, with
//! no floating point anywhere.

// parity tests and halvings are written the way the formulas read
#![allow(clippy::manual_is_multiple_of, clippy::manual_div_ceil)]

pub mod arith;
pub mod chromogeometry;
pub mod cli;
pub mod error;
pub mod finite_field;
pub mod fourier;
pub mod polynumber;
pub mod super_catalan;
pub mod tables;
pub mod verify;

pub use chromogeometry::{AffinePoint, Color, Dihedron, UnitCircle};
pub use error::{Error, Result};
pub use finite_field::{Field, FieldElement};
pub use fourier::{Method, PsiInput, PsiRequest};
pub use polynumber::{CircularPolynumber, Polynumber, Polynumber2, Rationals};
