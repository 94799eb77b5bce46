//! Twisted cotangent sections in Euler coordinates.
//!
//! A section of `Omega^1_{P^n}(t)` restricted to `X` is a tuple
//! `(f_0, ..., f_n)` of degree `t-1` classes with `sum X_i f_i = 0` in
//! `(S/I)_t`. Coordinates are indexed by `(i, j)` with `j` running over the
//! representatives of `(S/I)_{t-1}`, flattened as `i * block + j`.

use serde::{Deserialize, Serialize};

use crate::cring::{CompleteIntersection, CurveInvariants};
use crate::error::{Error, Result};
use crate::exactalg::{self, SparseVec};
use crate::{Rational, RationalMatrix};

#[derive(Clone, Debug)]
pub struct OmegaSections {
    pub t: i64,
    pub n: usize,
    /// `dim (S/I)_{t-1}`.
    pub block_dim: usize,
    /// The map `V (x) (S/I)_{t-1} -> (S/I)_t`, `(i, f) -> X_i f`.
    pub multiplication: RationalMatrix,
    pub kernel_basis: RationalMatrix,
    /// Image of `H^0(N*_X(t))`, present on proper subvarieties.
    pub conormal_gens: Option<RationalMatrix>,
    /// `dim ker - rank(conormal)`: the image of the restricted forms.
    pub presented_dim: usize,
    /// `h^0` of the sheaf in question.
    pub dim_h0: usize,
    /// Set when `presented_dim` is only known to bound the true `h^0` from
    /// below (obstructed conormal twist, or no independent count available).
    pub lower_bound_only: bool,
}

impl OmegaSections {
    pub fn ambient_dim(&self) -> usize {
        (self.n + 1) * self.block_dim
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel_basis.cols()
    }

    /// Number of columns of `m` whose Euler contraction is nonzero.
    pub fn euler_violations(&self, m: &RationalMatrix) -> Result<usize> {
        if m.rows() != self.ambient_dim() {
            return Err(Error::Dimension(format!(
                "{} rows against {} Euler coordinates",
                m.rows(),
                self.ambient_dim()
            )));
        }
        Ok(m
            .columns()
            .iter()
            .filter(|c| !self.multiplication.mul_sparse(c).is_empty())
            .count())
    }
}

/// `V (x) (S/I)_{t-1} -> (S/I)_t`.
pub fn multiplication_matrix(ci: &CompleteIntersection, t: i64) -> Result<RationalMatrix> {
    let src = ci.piece(t - 1)?;
    let dst = ci.piece(t)?;
    let mut cols = Vec::with_capacity(ci.nvars() * src.dim());
    for i in 0..ci.nvars() {
        for j in 0..src.dim() {
            cols.push(dst.project_monomial(&src.rep(j).times_var(i))?.to_vec());
        }
    }
    RationalMatrix::from_columns(dst.dim(), cols)
}

fn euler_part(ci: &CompleteIntersection, t: i64) -> Result<(usize, RationalMatrix, RationalMatrix)> {
    if t <= 0 {
        return Err(Error::UnsupportedTwist(t));
    }
    let block = ci.hilbert_function(t - 1)?;
    let mult = multiplication_matrix(ci, t)?;
    let kernel = exactalg::kernel_basis(&mult);
    Ok((block, mult, kernel))
}

/// `H^0(P^n, Omega^1(t))` as the kernel of `V (x) S_{t-1} -> S_t`.
pub fn omega_pn_sections(n: usize, t: i64) -> Result<OmegaSections> {
    if n == 0 {
        return Err(Error::InvalidInput("P^0 has no cotangent sections".into()));
    }
    let pn = CompleteIntersection::projective_space(n);
    let (block_dim, multiplication, kernel_basis) = euler_part(&pn, t)?;
    let dim = kernel_basis.cols();
    Ok(OmegaSections {
        t,
        n,
        block_dim,
        multiplication,
        kernel_basis,
        conormal_gens: None,
        presented_dim: dim,
        dim_h0: dim,
        lower_bound_only: false,
    })
}

/// Euler coordinates of `(f_0, ..., f_n)` reduced into `(S/I)_{t-1}`.
pub fn euler_coordinates(ci: &CompleteIntersection, t: i64, blocks: &[crate::Poly]) -> Result<SparseVec<Rational>> {
    if blocks.len() != ci.nvars() {
        return Err(Error::Dimension(format!(
            "{} components for {} variables",
            blocks.len(),
            ci.nvars()
        )));
    }
    let w = ci.hilbert_function(t - 1)?;
    let mut out = Vec::new();
    for (i, f) in blocks.iter().enumerate() {
        for (j, x) in ci.normal_form_in_degree(f, t - 1)? {
            out.push((i * w + j, x));
        }
    }
    Ok(out)
}

/// Image of `H^0(N*_X(t)) = (+)_j (S/I)_{t-d_j}` under `g e_j -> g dF_j`.
pub fn conormal_image(ci: &CompleteIntersection, t: i64) -> Result<RationalMatrix> {
    if t <= 0 {
        return Err(Error::UnsupportedTwist(t));
    }
    let w = ci.hilbert_function(t - 1)?;
    let rows = ci.nvars() * w;
    let mut cols = Vec::new();
    for (f, &d) in ci.forms().iter().zip(ci.degrees()) {
        let grads: Vec<crate::Poly> = (0..ci.nvars()).map(|i| f.partial_derivative(i)).collect();
        let src = ci.piece(t - d)?;
        for j in 0..src.dim() {
            let g = src.rep(j);
            let comps: Vec<crate::Poly> = grads.iter().map(|p| p.mul_monomial(g)).collect();
            cols.push(euler_coordinates(ci, t, &comps)?);
        }
    }
    RationalMatrix::from_columns(rows, cols)
}

/// Which branch of the conormal vanishing criterion applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VanishingBranch {
    /// `k >= 2`: `H^1(O_X(c)) = 0` for every `c`.
    HigherDimension,
    /// Curve with `t > 2 d_1 + d_2 + ... + d_{n-1} - n - 1`.
    CurveAboveBound,
    /// Curve at or below the bound.
    CurveAtOrBelowBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConormalVanishing {
    pub t: i64,
    pub vanishes: bool,
    pub branch: VanishingBranch,
    /// `2 d_1 + d_2 + ... + d_{n-1} - n - 1` on curves.
    pub bound: Option<i64>,
    /// `sum_j h^1(O_C(t - d_j))` via Serre duality, on curves.
    pub duality_sum: Option<usize>,
}

/// `h^1(N*_X(t)) = 0`? The arithmetic criterion is cross-checked against the
/// duality count on curves.
pub fn h1_conormal_vanishes(ci: &CompleteIntersection, t: i64) -> Result<ConormalVanishing> {
    if ci.dim_x() >= 2 {
        return Ok(ConormalVanishing {
            t,
            vanishes: true,
            branch: VanishingBranch::HigherDimension,
            bound: None,
            duality_sum: None,
        });
    }
    let d = ci.degrees();
    let bound = 2 * d[0] + d[1..].iter().sum::<i64>() - ci.n() as i64 - 1;
    let vanishes = t > bound;
    let mut sum = 0;
    for &dj in d {
        sum += ci.h1_line(t - dj)?;
    }
    if vanishes != (sum == 0) {
        return Err(Error::Inconsistent(format!(
            "twist {t}: bound {bound} says {vanishes}, duality gives h^1 = {sum}"
        )));
    }
    Ok(ConormalVanishing {
        t,
        vanishes,
        branch: if vanishes {
            VanishingBranch::CurveAboveBound
        } else {
            VanishingBranch::CurveAtOrBelowBound
        },
        bound: Some(bound),
        duality_sum: Some(sum),
    })
}

/// `H^0(Omega^1_{P^n}|_X(t))` as the kernel of the multiplication map on
/// quotient pieces.
pub fn omega_restricted_sections(ci: &CompleteIntersection, t: i64) -> Result<OmegaSections> {
    let (block_dim, multiplication, kernel_basis) = euler_part(ci, t)?;
    let dim = kernel_basis.cols();
    Ok(OmegaSections {
        t,
        n: ci.n(),
        block_dim,
        multiplication,
        kernel_basis,
        conormal_gens: None,
        presented_dim: dim,
        dim_h0: dim,
        lower_bound_only: false,
    })
}

/// Restricted forms modulo the conormal image, for any complete
/// intersection. `dim_h0` is the presented dimension and is flagged as a
/// lower bound.
pub fn omega_presented(ci: &CompleteIntersection, t: i64) -> Result<OmegaSections> {
    let mut sec = omega_restricted_sections(ci, t)?;
    let conormal = conormal_image(ci, t)?;
    let cn_rank = exactalg::rank_bounded(&conormal, conormal.cols())?;
    sec.presented_dim = sec.kernel_dim() - cn_rank;
    sec.dim_h0 = sec.presented_dim;
    sec.lower_bound_only = true;
    sec.conormal_gens = Some(conormal);
    Ok(sec)
}

/// `H^0(Omega^1_C(t))` on a curve. The true dimension is
/// `h^0(O_C(xi + t))` since `Omega^1_C = O_C(xi)`; the presented quotient
/// must match it whenever `h^1(N*_C(t)) = 0`.
pub fn omega_x_sections(ci: &CompleteIntersection, t: i64) -> Result<OmegaSections> {
    let inv = ci.curve_invariants()?;
    let mut sec = omega_presented(ci, t)?;
    let vanishing = h1_conormal_vanishes(ci, t)?;
    sec.dim_h0 = ci.h0_line(inv.xi + t)?;
    sec.lower_bound_only = !vanishing.vanishes;
    if vanishing.vanishes && sec.presented_dim != sec.dim_h0 {
        return Err(Error::Inconsistent(format!(
            "twist {t}: presented dimension {} differs from h^0(O_C({})) = {}; is the curve smooth?",
            sec.presented_dim,
            inv.xi + t,
            sec.dim_h0
        )));
    }
    if sec.presented_dim > sec.dim_h0 {
        return Err(Error::Inconsistent(format!(
            "twist {t}: presented dimension {} exceeds h^0 = {}",
            sec.presented_dim, sec.dim_h0
        )));
    }
    Ok(sec)
}

/// Riemann-Roch value of `h^0(omega_C(t)) = (2g - 2) + t deg C - g + 1`, `t >= 1`.
pub fn riemann_roch_omega(inv: &CurveInvariants, t: i64) -> i64 {
    (2 * inv.genus - 2) + t * inv.degree_of_curve - inv.genus + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn omega_pn_examples() {
        assert_eq!(omega_pn_sections(1, 2).unwrap().dim_h0, 1);
        assert_eq!(omega_pn_sections(1, 3).unwrap().dim_h0, 2);
        assert_eq!(omega_pn_sections(2, 2).unwrap().dim_h0, 3);
        assert_eq!(omega_pn_sections(3, 1).unwrap().dim_h0, 0);
        assert!(matches!(omega_pn_sections(2, 0), Err(Error::UnsupportedTwist(0))));
    }

    #[test]
    fn restricted_examples() {
        assert_eq!(omega_restricted_sections(&presets::plane_sextic(), 3).unwrap().dim_h0, 8);
        assert_eq!(omega_restricted_sections(&presets::elliptic_quartic(), 1).unwrap().dim_h0, 0);
        assert_eq!(omega_restricted_sections(&presets::canonical_genus5(), 2).unwrap().dim_h0, 13);
    }

    #[test]
    fn conormal_column_counts() {
        let s = presets::plane_sextic();
        assert_eq!(conormal_image(&s, 6).unwrap().cols(), 1);
        assert_eq!(conormal_image(&s, 7).unwrap().cols(), 3);
        assert_eq!(conormal_image(&presets::elliptic_quartic(), 2).unwrap().cols(), 2);
    }

    #[test]
    fn conormal_lies_in_kernel() {
        for (_, ci) in presets::curve_presets() {
            for t in 1..6 {
                let sec = omega_presented(&ci, t).unwrap();
                let cn = sec.conormal_gens.as_ref().unwrap();
                assert_eq!(sec.euler_violations(cn).unwrap(), 0);
            }
        }
    }

    #[test]
    fn vanishing_examples() {
        let s = presets::plane_sextic();
        assert!(h1_conormal_vanishes(&s, 10).unwrap().vanishes);
        let at = h1_conormal_vanishes(&s, 9).unwrap();
        assert!(!at.vanishes);
        assert_eq!(at.bound, Some(9));
        let q = presets::elliptic_quartic();
        let v = h1_conormal_vanishes(&q, 3).unwrap();
        assert!(v.vanishes);
        assert_eq!(v.bound, Some(2));
        assert_eq!(v.duality_sum, Some(0));
        let surface = crate::cring::CompleteIntersection::new(3, vec![presets::fermat(3, 4)]).unwrap();
        assert_eq!(h1_conormal_vanishes(&surface, -5).unwrap().branch, VanishingBranch::HigherDimension);
    }

    #[test]
    fn omega_x_examples() {
        let s = omega_x_sections(&presets::plane_sextic(), 3).unwrap();
        assert_eq!(s.dim_h0, 27);
        assert!(s.lower_bound_only);
        assert_eq!(s.presented_dim, 8);
        assert_eq!(omega_x_sections(&presets::elliptic_quartic(), 3).unwrap().dim_h0, 12);
        let c = omega_x_sections(&presets::canonical_genus5(), 4).unwrap();
        assert_eq!(c.dim_h0, 36);
        assert!(!c.lower_bound_only);
        assert_eq!(c.presented_dim, 36);
    }
}
