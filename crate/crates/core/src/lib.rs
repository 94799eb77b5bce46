//! Exact weighted Gaussian maps on projective space and on complete
//! intersection curves.
//!
//! The map `gamma_{a,b}(X, O_X(e))` sends `sigma (x) tau` to
//! `b tau d(sigma) - a sigma d(tau)`. Every space of sections is presented in
//! explicit coordinates over the rationals and every dimension is obtained by
//! exact elimination, so surjectivity and cokernel claims become rank tests.
//!
//! Layout:
//! - [`exactalg`]: sparse matrices over a field, fraction-free elimination,
//!   kernels, quotient dimensions and modular rank certificates.
//! - [`polyring`]: monomials in graded-lex order and sparse polynomials.
//! - [`cring`]: graded pieces of the coordinate ring of a complete
//!   intersection, Hilbert functions and curve invariants.
//! - [`cohom`]: twisted cotangent sections in Euler coordinates.
//! - [`gaussmaps`]: the Gaussian map matrices and their reports.
//! - [`verify`]: named checks with PASS/FAIL/INFO verdicts.
//! - [`curvespec`]: the JSON curve description read by the command line tool.

pub mod cohom;
pub mod cring;
pub mod curvespec;
pub mod error;
pub mod exactalg;
pub mod field;
pub mod gaussmaps;
pub mod polyring;
pub mod presets;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Coefficient, Field};

/// Arbitrary-precision rational numbers, the base field for every map.
pub type Rational = num_rational::BigRational;
/// Exact matrix over [`Rational`].
pub type RationalMatrix = exactalg::Matrix<Rational>;
/// Sparse homogeneous-friendly polynomial with rational coefficients.
pub type Poly = polyring::SparsePolynomial<Rational>;
/// Machine-word rationals; handy for small hand-built examples.
pub type SmallRational = num_rational::Ratio<i64>;
