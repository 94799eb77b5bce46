//! Built-in complete intersections. Smoothness of each preset is assumed,
//! not computed; the Fermat curves and the diagonal pencil are classically
//! smooth and the seeded quadrics are generic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cring::CompleteIntersection;
use crate::field::int;
use crate::polyring::{monomial_basis, Monomial};
use crate::Poly;

/// Seed of the three quadrics cutting out the canonical genus 5 curve.
pub const CANONICAL_SEED: u64 = 5;

/// `X_0^d + ... + X_n^d`.
pub fn fermat(n: usize, d: u32) -> Poly {
    Poly::from_terms(
        n + 1,
        (0..=n).map(|i| {
            let mut e = vec![0; n + 1];
            e[i] = d;
            (Monomial::new(e), int(1))
        }),
    )
}

/// `sum_i w_i X_i^2`.
pub fn diagonal_quadric(weights: &[i64]) -> Poly {
    let nv = weights.len();
    Poly::from_terms(
        nv,
        weights.iter().enumerate().map(|(i, &w)| {
            let mut e = vec![0; nv];
            e[i] = 2;
            (Monomial::new(e), int(w))
        }),
    )
}

/// Degree-`d` forms with coefficients drawn uniformly from `-3..=3`.
pub fn random_forms(n: usize, degrees: &[u32], seed: u64) -> Vec<Poly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    degrees
        .iter()
        .map(|&d| {
            Poly::from_terms(
                n + 1,
                monomial_basis(n, d as i64)
                    .into_iter()
                    .map(|m| (m, int(rng.gen_range(-3..=3)))),
            )
        })
        .collect()
}

pub fn plane_quintic() -> CompleteIntersection {
    CompleteIntersection::new(2, vec![fermat(2, 5)]).expect("valid preset")
}

pub fn plane_sextic() -> CompleteIntersection {
    CompleteIntersection::new(2, vec![fermat(2, 6)]).expect("valid preset")
}

/// Genus 1 quartic in `P^3`: `sum X_i^2 = sum (i+1) X_i^2 = 0`.
pub fn elliptic_quartic() -> CompleteIntersection {
    CompleteIntersection::new(
        3,
        vec![diagonal_quadric(&[1, 1, 1, 1]), diagonal_quadric(&[1, 2, 3, 4])],
    )
    .expect("valid preset")
}

/// Canonical genus 5 curve: three seeded quadrics in `P^4`.
pub fn canonical_genus5() -> CompleteIntersection {
    CompleteIntersection::new(4, random_forms(4, &[2, 2, 2], CANONICAL_SEED)).expect("valid preset")
}

/// Named curve presets in a fixed order.
pub fn curve_presets() -> Vec<(&'static str, CompleteIntersection)> {
    vec![
        ("elliptic-quartic", elliptic_quartic()),
        ("canonical-genus5", canonical_genus5()),
        ("plane-quintic", plane_quintic()),
        ("plane-sextic", plane_sextic()),
    ]
}

pub fn by_name(name: &str) -> Option<CompleteIntersection> {
    curve_presets()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, ci)| ci)
}
