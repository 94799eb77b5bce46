//! Polynomials in `X_0, ..., X_n` with sparse storage.
//!
//! Monomials are ordered graded-lexicographically with `X_0 > X_1 > ... > X_n`;
//! every coordinate basis in the crate lists monomials from the largest down,
//! so `X_0^m` is always coordinate 0 of a degree-`m` piece.

mod monomial;
mod poly;
mod text;

pub use monomial::{binomial, monomial_basis, Monomial, MonomialBasis};
pub use poly::SparsePolynomial;
pub use text::{format_poly, parse_poly};
