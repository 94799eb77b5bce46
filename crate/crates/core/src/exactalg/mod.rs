//! Exact linear algebra over the rationals.
//!
//! Every routine first splits the matrix into the connected blocks of its
//! sparsity pattern. Inside a block, a rank modulo a 61-bit prime that reaches
//! the block's smaller side is already exact (modular rank is a lower bound);
//! otherwise the block goes through fraction-free Bareiss elimination.

pub mod bareiss;
pub mod components;
pub mod matrix;
pub mod modular;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use matrix::{Matrix, SparseVec};

use crate::error::{Error, Result};
use crate::{Rational, RationalMatrix};
use components::Block;

fn local_columns(columns: &[SparseVec<Rational>], block: &Block, nrows: usize) -> Vec<SparseVec<Rational>> {
    let mut slot = vec![usize::MAX; nrows];
    for (k, &r) in block.rows.iter().enumerate() {
        slot[r] = k;
    }
    block
        .cols
        .iter()
        .map(|&c| columns[c].iter().map(|(r, x)| (slot[*r], x.clone())).collect())
        .collect()
}

/// Scales each vector to coprime integers; returns dense rows of length `width`.
fn integer_rows(vectors: &[SparseVec<Rational>], width: usize) -> Vec<Vec<BigInt>> {
    vectors
        .iter()
        .map(|v| {
            let lcm = v
                .iter()
                .fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
            let mut row = vec![BigInt::zero(); width];
            for (i, x) in v {
                row[*i] = x.numer() * (&lcm / x.denom());
            }
            row
        })
        .collect()
}

fn block_rank(nrows: usize, columns: &[SparseVec<Rational>]) -> usize {
    let full = nrows.min(columns.len());
    if let Some(rp) = modular::rank_mod_p(nrows, columns, modular::FAST_PRIME) {
        if rp == full {
            return rp;
        }
    }
    // columns of the block are the rows of the transposed problem
    bareiss::rank(integer_rows(columns, nrows))
}

/// Rank over Q.
pub fn rank(m: &RationalMatrix) -> usize {
    let blocks = components::blocks(m.rows(), m.columns());
    blocks
        .par_iter()
        .map(|b| block_rank(b.rows.len(), &local_columns(m.columns(), b, m.rows())))
        .sum()
}

/// Rank when the caller has proven `rank(m) <= upper`. A modular rank equal
/// to `upper` settles the answer without rational elimination.
pub fn rank_bounded(m: &RationalMatrix, upper: usize) -> Result<usize> {
    if let Some(rp) = modular::rank_mod_p(m.rows(), m.columns(), modular::FAST_PRIME) {
        if rp > upper {
            return Err(Error::Inconsistent(format!(
                "modular rank {rp} exceeds the claimed upper bound {upper}"
            )));
        }
        if rp == upper {
            return Ok(rp);
        }
    }
    let r = rank(m);
    if r > upper {
        return Err(Error::Inconsistent(format!(
            "rank {r} exceeds the claimed upper bound {upper}"
        )));
    }
    Ok(r)
}

/// Reduced echelon form of a list of vectors in `Q^ncoords`.
#[derive(Clone, Debug, PartialEq)]
pub struct Echelon {
    pub ncoords: usize,
    /// Pivot coordinate of each reduced row, ascending.
    pub pivots: Vec<usize>,
    /// Row `k` has a 1 at `pivots[k]` and zeros at every other pivot.
    pub rows: Vec<SparseVec<Rational>>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self) -> Vec<bool> {
        let mut v = vec![false; self.ncoords];
        for &p in &self.pivots {
            v[p] = true;
        }
        v
    }
}

/// Row-reduces `vectors` (each a sparse vector of length `ncoords`).
pub fn row_reduce(ncoords: usize, vectors: &[SparseVec<Rational>]) -> Result<Echelon> {
    if let Some((i, _)) = vectors.iter().flatten().find(|(i, _)| *i >= ncoords) {
        return Err(Error::Dimension(format!(
            "coordinate {i} outside a space of dimension {ncoords}"
        )));
    }
    let vectors: Vec<SparseVec<Rational>> =
        vectors.iter().cloned().map(matrix::normalize).collect();
    let blocks = components::blocks(ncoords, &vectors);
    let parts: Vec<Vec<(usize, SparseVec<Rational>)>> = blocks
        .par_iter()
        .map(|b| {
            let local = local_columns(&vectors, b, ncoords);
            let mut dense = integer_rows(&local, b.rows.len());
            let (pivots, d) = bareiss::gauss_jordan(&mut dense);
            pivots
                .iter()
                .zip(dense)
                .map(|(&p, row)| {
                    let reduced: SparseVec<Rational> = row
                        .into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(j, x)| (b.rows[j], Rational::new(x, d.clone())))
                        .collect();
                    (b.rows[p], reduced)
                })
                .collect()
        })
        .collect();
    let mut all: Vec<(usize, SparseVec<Rational>)> = parts.into_iter().flatten().collect();
    all.sort_by_key(|(p, _)| *p);
    let (pivots, rows) = all.into_iter().unzip();
    Ok(Echelon {
        ncoords,
        pivots,
        rows,
    })
}

/// Basis of the right kernel, one column per non-pivot column of `m`.
pub fn kernel_basis(m: &RationalMatrix) -> RationalMatrix {
    let ech = row_reduce(m.cols(), &m.row_vectors()).expect("row vectors index columns");
    let is_pivot = ech.is_pivot();
    let mut hits: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); m.cols()];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        for (j, x) in row {
            if *j != p {
                hits[*j].push((p, -x.clone()));
            }
        }
    }
    let columns = (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = std::mem::take(&mut hits[f]);
            v.push((f, Rational::one()));
            v
        })
        .collect();
    Matrix::from_columns(m.cols(), columns).expect("kernel vectors live in the column space")
}

/// `dim span(A) / (span(A) ∩ span(B))`, computed as `rank[A|B] - rank B`.
pub fn quotient_dim(ambient_dim: usize, subspace: &RationalMatrix, second: &RationalMatrix) -> Result<usize> {
    for (name, g) in [("subspace", subspace), ("second", second)] {
        if g.rows() != ambient_dim {
            return Err(Error::Dimension(format!(
                "{name} generators have {} rows, ambient dimension is {ambient_dim}",
                g.rows()
            )));
        }
    }
    Ok(rank(&subspace.hcat(second)?) - rank(second))
}

/// Rational rank together with ranks modulo several primes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub rational_rank: usize,
    /// `(p, rank mod p)`; `None` where `p` divides a denominator.
    pub modular: Vec<(u64, Option<usize>)>,
}

impl RankCertificate {
    pub fn max_modular(&self) -> usize {
        self.modular.iter().filter_map(|(_, r)| *r).max().unwrap_or(0)
    }

    /// No modular rank exceeds the rational one, and at least one meets it.
    pub fn confirmed(&self) -> bool {
        self.modular
            .iter()
            .all(|(_, r)| r.is_none_or(|r| r <= self.rational_rank))
            && self.max_modular() == self.rational_rank
    }
}

pub fn certify_rank(m: &RationalMatrix, primes: &[u64]) -> RankCertificate {
    RankCertificate {
        rational_rank: rank(m),
        modular: primes
            .iter()
            .map(|&p| (p, modular::rank_mod_p(m.rows(), m.columns(), p)))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> RationalMatrix {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::zeros(0, 0)), 0);
        assert_eq!(rank(&RationalMatrix::identity(2)), 2);
        assert_eq!(rank(&q(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&RationalMatrix::identity(2)).cols(), 0);

        let k = kernel_basis(&q(&[&[1, 1]]));
        assert_eq!(k.cols(), 1);
        let v = k.to_dense();
        assert_eq!(v[0][0].clone() + v[1][0].clone(), Rational::zero());
        assert!(!v[0][0].is_zero());

        // hand solution of x + 2y = 0: (2, -1) up to scale
        let k = kernel_basis(&q(&[&[1, 2], &[2, 4]]));
        assert_eq!(k.cols(), 1);
        let v = k.to_dense();
        let (x, y) = (v[0][0].clone(), v[1][0].clone());
        assert_eq!(x.clone() * Rational::from_integer((-1).into()), y.clone() * Rational::from_integer(2.into()));
        assert!(!x.is_zero());
    }

    #[test]
    fn quotient_examples() {
        let full = RationalMatrix::identity(3);
        let empty = RationalMatrix::zeros(3, 0);
        assert_eq!(quotient_dim(3, &full, &empty).unwrap(), 3);
        assert_eq!(quotient_dim(3, &full, &full).unwrap(), 0);
        let plane = RationalMatrix::identity(2);
        let diag = q(&[&[1], &[1]]);
        assert_eq!(quotient_dim(2, &plane, &diag).unwrap(), 1);
        assert!(matches!(
            quotient_dim(3, &plane, &diag),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn rank_bounded_fast_and_slow() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_bounded(&m, 2).unwrap(), 2);
        assert_eq!(rank_bounded(&m, 3).unwrap(), 2);
        assert!(rank_bounded(&m, 1).is_err());
    }

    #[test]
    fn echelon_is_reduced() {
        let vs = vec![
            vec![(0, Rational::from_integer(2.into())), (2, Rational::from_integer(4.into()))],
            vec![(0, Rational::from_integer(1.into())), (1, Rational::from_integer(1.into()))],
        ];
        let e = row_reduce(3, &vs).unwrap();
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rows[0], vec![(0, Rational::one()), (2, Rational::from_integer(2.into()))]);
        assert_eq!(e.rows[1], vec![(1, Rational::one()), (2, Rational::from_integer((-2).into()))]);
    }
}
