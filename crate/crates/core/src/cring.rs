//! Graded coordinate ring `S/I` of a complete intersection in `P^n`.
//!
//! Each graded piece is computed by linear algebra in a single degree: the
//! ideal piece `I_m` is spanned by monomial multiples of the forms, and the
//! quotient basis consists of the earliest monomials (in the fixed order)
//! whose classes are independent modulo `I_m`. The Hilbert function of every
//! piece that is built is checked against the complete intersection series,
//! which certifies that the forms behave as a regular sequence up to there.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{self, SparseVec};
use crate::polyring::{binomial, monomial_basis, Monomial, MonomialBasis};
use crate::{Poly, Rational, RationalMatrix};

/// One graded piece `(S/I)_m` with its coordinates.
#[derive(Debug)]
pub struct QuotientPiece {
    pub degree: i64,
    pub basis: Arc<MonomialBasis>,
    /// Columns span `I_m` inside the monomial coordinates of degree `m`.
    pub ideal_gens: RationalMatrix,
    pub ideal_rank: usize,
    /// Ambient indices of the representative monomials, ascending.
    pub reps: Vec<usize>,
    slot: Vec<Option<usize>>,
    /// Column `k` holds the quotient coordinates of ambient monomial `k`.
    pub projection: RationalMatrix,
}

impl QuotientPiece {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.len()
    }

    /// The `j`-th representative monomial.
    pub fn rep(&self, j: usize) -> &Monomial {
        self.basis.get(self.reps[j])
    }

    /// Quotient slot of an ambient index, if that monomial is a representative.
    pub fn slot_of(&self, ambient: usize) -> Option<usize> {
        self.slot[ambient]
    }

    pub fn project_monomial(&self, m: &Monomial) -> Result<&[(usize, Rational)]> {
        let k = self.basis.index_of(m).ok_or_else(|| {
            Error::InvalidInput(format!("monomial {m} is not of degree {}", self.degree))
        })?;
        Ok(self.projection.column(k))
    }

    /// Quotient coordinates of a polynomial whose terms all have this degree.
    pub fn reduce(&self, p: &Poly) -> Result<SparseVec<Rational>> {
        let mut acc = Vec::new();
        for (m, c) in p.terms() {
            for (j, x) in self.project_monomial(m)? {
                acc.push((*j, x.clone() * c.clone()));
            }
        }
        Ok(normalize(acc))
    }
}

fn normalize(mut v: SparseVec<Rational>) -> SparseVec<Rational> {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<Rational> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

type PieceCell = Arc<OnceLock<Result<Arc<QuotientPiece>>>>;

/// A complete intersection `X = V(F_1, ..., F_c)` in `P^n`, forms sorted by
/// non-increasing degree. With no forms this is `P^n` itself.
#[derive(Debug)]
pub struct CompleteIntersection {
    n: usize,
    degrees: Vec<i64>,
    forms: Vec<Poly>,
    pieces: Mutex<HashMap<i64, PieceCell>>,
}

impl Clone for CompleteIntersection {
    fn clone(&self) -> Self {
        CompleteIntersection {
            n: self.n,
            degrees: self.degrees.clone(),
            forms: self.forms.clone(),
            pieces: Mutex::new(HashMap::new()),
        }
    }
}

/// Numerical invariants of a complete intersection curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveInvariants {
    /// `omega_C = O_C(xi)`, `xi = sum d_i - n - 1`.
    pub xi: i64,
    pub genus: i64,
    pub degree_of_curve: i64,
}

impl CurveInvariants {
    /// `zeta = xi / h`, defined only when `h` divides `xi`.
    pub fn zeta(&self, h: i64) -> Result<i64> {
        if h == 0 || self.xi % h != 0 {
            return Err(Error::UndefinedZeta { h, xi: self.xi });
        }
        Ok(self.xi / h)
    }
}

impl CompleteIntersection {
    pub fn new(n: usize, forms: Vec<Poly>) -> Result<Self> {
        if n == 0 || forms.len() >= n {
            return Err(Error::InvalidInput(format!(
                "{} forms in P^{n} do not cut out a positive-dimensional complete intersection",
                forms.len()
            )));
        }
        let mut with_deg = Vec::with_capacity(forms.len());
        for (j, f) in forms.into_iter().enumerate() {
            if f.nvars() != n + 1 {
                return Err(Error::InvalidInput(format!(
                    "form {j} has {} variables, expected {}",
                    f.nvars(),
                    n + 1
                )));
            }
            let d = f.homogeneous_degree().ok_or_else(|| {
                Error::InvalidInput(format!("form {j} is zero or not homogeneous"))
            })?;
            if d < 2 {
                return Err(Error::InvalidInput(format!(
                    "form {j} has degree {d}; degrees must be at least 2"
                )));
            }
            with_deg.push((d as i64, f));
        }
        with_deg.sort_by_key(|(d, _)| std::cmp::Reverse(*d));
        let (degrees, forms) = with_deg.into_iter().unzip();
        Ok(CompleteIntersection {
            n,
            degrees,
            forms,
            pieces: Mutex::new(HashMap::new()),
        })
    }

    pub fn projective_space(n: usize) -> Self {
        CompleteIntersection::new(n, Vec::new()).expect("no forms")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn forms(&self) -> &[Poly] {
        &self.forms
    }

    /// Dimension `k` of `X`.
    pub fn dim_x(&self) -> usize {
        self.n - self.forms.len()
    }

    pub fn is_curve(&self) -> bool {
        self.dim_x() == 1
    }

    fn require_curve(&self) -> Result<()> {
        if self.is_curve() {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "expected a curve, got a complete intersection of dimension {}",
                self.dim_x()
            )))
        }
    }

    /// Coefficient of `t^m` in `prod_j (1 - t^{d_j}) / (1 - t)^{n+1}`.
    pub fn series_coefficient(&self, m: i64) -> usize {
        hilbert_series_coefficient(self.n, &self.degrees, m)
    }

    pub fn piece(&self, m: i64) -> Result<Arc<QuotientPiece>> {
        let cell = {
            let mut map = self.pieces.lock().expect("piece cache poisoned");
            map.entry(m).or_default().clone()
        };
        cell.get_or_init(|| self.build_piece(m).map(Arc::new)).clone()
    }

    fn build_piece(&self, m: i64) -> Result<QuotientPiece> {
        let basis = Arc::new(MonomialBasis::new(self.n, m));
        let size = basis.len();
        let mut gens: Vec<SparseVec<Rational>> = Vec::new();
        for (f, &d) in self.forms.iter().zip(&self.degrees) {
            for alpha in monomial_basis(self.n, m - d) {
                let g = f.mul_monomial(&alpha);
                gens.push(
                    g.terms()
                        .map(|(mono, c)| (basis.index_of(mono).expect("degree m"), c.clone()))
                        .collect(),
                );
            }
        }
        let ideal_gens = RationalMatrix::from_columns(size, gens.clone())?;

        // Reduce with the coordinate order reversed: pivots then sit on the
        // latest monomials and the earliest ones survive as representatives.
        let flip = |k: usize| size - 1 - k;
        let flipped: Vec<SparseVec<Rational>> = gens
            .iter()
            .map(|v| v.iter().map(|(k, x)| (flip(*k), x.clone())).collect())
            .collect();
        let ech = exactalg::row_reduce(size, &flipped)?;
        let mut pivot_row = vec![None; size];
        for (r, &p) in ech.pivots.iter().enumerate() {
            pivot_row[flip(p)] = Some(r);
        }
        let reps: Vec<usize> = (0..size).filter(|&k| pivot_row[k].is_none()).collect();
        let mut slot = vec![None; size];
        for (j, &k) in reps.iter().enumerate() {
            slot[k] = Some(j);
        }
        let mut proj_cols = Vec::with_capacity(size);
        for k in 0..size {
            let col = match (slot[k], pivot_row[k]) {
                (Some(j), _) => vec![(j, Rational::one())],
                (None, Some(r)) => ech.rows[r]
                    .iter()
                    .filter(|(fj, _)| flip(*fj) != k)
                    .map(|(fj, x)| (slot[flip(*fj)].expect("non-pivot entry"), -x.clone()))
                    .collect(),
                (None, None) => unreachable!("every monomial is a pivot or a representative"),
            };
            proj_cols.push(col);
        }
        let projection = RationalMatrix::from_columns(reps.len(), proj_cols)?;

        let expected = self.series_coefficient(m);
        if reps.len() != expected {
            return Err(Error::Certification {
                degree: m,
                computed: reps.len(),
                expected,
            });
        }
        Ok(QuotientPiece {
            degree: m,
            basis,
            ideal_gens,
            ideal_rank: ech.rank(),
            reps,
            slot,
            projection,
        })
    }

    /// Columns spanning `I_m`: every `x^alpha * F_j` with `|alpha| = m - d_j`.
    pub fn ideal_piece(&self, m: i64) -> Result<RationalMatrix> {
        Ok(self.piece(m)?.ideal_gens.clone())
    }

    /// `dim (S/I)_m`, certified against the series.
    pub fn hilbert_function(&self, m: i64) -> Result<usize> {
        if m < 0 {
            return Ok(0);
        }
        Ok(self.piece(m)?.dim())
    }

    /// Quotient coordinates of a homogeneous polynomial.
    pub fn normal_form(&self, p: &Poly) -> Result<SparseVec<Rational>> {
        let m = p.homogeneous_degree().ok_or_else(|| {
            Error::InvalidInput("normal form needs a nonzero homogeneous polynomial".into())
        })?;
        self.normal_form_in_degree(p, m as i64)
    }

    /// Like [`normal_form`](Self::normal_form) but accepts zero and states the degree.
    pub fn normal_form_in_degree(&self, p: &Poly, m: i64) -> Result<SparseVec<Rational>> {
        if p.nvars() != self.nvars() {
            return Err(Error::InvalidInput("polynomial lives in another ring".into()));
        }
        if p.terms().any(|(mono, _)| mono.degree() as i64 != m) {
            return Err(Error::InvalidInput(format!(
                "polynomial is not homogeneous of degree {m}"
            )));
        }
        if m < 0 {
            return Ok(Vec::new());
        }
        self.piece(m)?.reduce(p)
    }

    pub fn curve_invariants(&self) -> Result<CurveInvariants> {
        self.require_curve()?;
        let sum: i64 = self.degrees.iter().sum();
        let prod: i64 = self.degrees.iter().product();
        let xi = sum - self.n as i64 - 1;
        let twice = xi * prod;
        if twice % 2 != 0 {
            return Err(Error::Inconsistent(format!("xi * deg = {twice} is odd")));
        }
        Ok(CurveInvariants {
            xi,
            genus: twice / 2 + 1,
            degree_of_curve: prod,
        })
    }

    /// `r = h^0(O_C(zeta)) - 1` for `zeta = xi / h`.
    pub fn r_for(&self, h: i64) -> Result<i64> {
        let zeta = self.curve_invariants()?.zeta(h)?;
        Ok(self.h0_line(zeta)? as i64 - 1)
    }

    /// `h^0(O_X(m))`; by projective normality this is the Hilbert function.
    pub fn h0_line(&self, m: i64) -> Result<usize> {
        self.hilbert_function(m)
    }

    /// `h^1(O_C(m)) = h^0(O_C(xi - m))` by Serre duality.
    pub fn h1_line(&self, m: i64) -> Result<usize> {
        let inv = self.curve_invariants()?;
        self.h0_line(inv.xi - m)
    }

    /// `h^0(N_C) = sum_j h^0(O_C(d_j))`.
    pub fn h0_normal_bundle(&self) -> Result<usize> {
        self.degrees.iter().map(|&d| self.h0_line(d)).sum()
    }

    /// Same ideal with each form multiplied by the matching factor.
    pub fn rescaled(&self, factors: &[Rational]) -> Result<Self> {
        if factors.len() != self.forms.len() || factors.iter().any(Zero::is_zero) {
            return Err(Error::InvalidInput("need one nonzero factor per form".into()));
        }
        let forms = self.forms.iter().zip(factors).map(|(f, c)| f.scale(c)).collect();
        CompleteIntersection::new(self.n, forms)
    }
}

/// Coefficient of `t^m` in `prod_j (1 - t^{d_j}) / (1 - t)^{n+1}`.
pub fn hilbert_series_coefficient(n: usize, degrees: &[i64], m: i64) -> usize {
    if m < 0 {
        return 0;
    }
    let top: i64 = degrees.iter().sum();
    let mut numer = vec![0i128; top as usize + 1];
    numer[0] = 1;
    for &d in degrees {
        for k in (d as usize..numer.len()).rev() {
            numer[k] -= numer[k - d as usize];
        }
    }
    let total: i128 = numer
        .iter()
        .enumerate()
        .map(|(k, c)| c * binomial(n as i64 + m - k as i64, n as i64) as i128)
        .sum();
    usize::try_from(total).expect("complete intersection series has nonnegative coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn ideal_piece_examples() {
        let sextic = presets::plane_sextic();
        assert_eq!(sextic.ideal_piece(5).unwrap().cols(), 0);
        let i6 = sextic.ideal_piece(6).unwrap();
        assert_eq!(i6.cols(), 1);
        assert_eq!(exactalg::rank(&i6), 1);

        let quartic = presets::elliptic_quartic();
        let i3 = quartic.ideal_piece(3).unwrap();
        assert_eq!(i3.cols(), 8);
        assert_eq!(exactalg::rank(&i3), 8);
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(presets::plane_sextic().hilbert_function(6).unwrap(), 27);
        assert_eq!(presets::elliptic_quartic().hilbert_function(1).unwrap(), 4);
        assert_eq!(presets::canonical_genus5().hilbert_function(3).unwrap(), 20);
        assert_eq!(presets::plane_sextic().hilbert_function(-1).unwrap(), 0);
    }

    #[test]
    fn normal_form_examples() {
        let ci = presets::elliptic_quartic();
        for f in ci.forms() {
            assert!(ci.normal_form(f).unwrap().is_empty());
        }
        let x0sq = Poly::term(Rational::one(), Monomial::new(vec![2, 0, 0, 0]));
        assert_eq!(ci.normal_form(&x0sq).unwrap(), vec![(0, Rational::one())]);

        let sextic = presets::plane_sextic();
        let piece = sextic.piece(5).unwrap();
        assert_eq!(piece.dim(), piece.ambient_dim());
        assert!(sextic
            .normal_form(&(Poly::var(0, 3) + Poly::constant(Rational::one(), 3)))
            .is_err());
    }

    #[test]
    fn projection_fixes_representatives() {
        let ci = presets::canonical_genus5();
        let piece = ci.piece(3).unwrap();
        for j in 0..piece.dim() {
            assert_eq!(piece.projection.column(piece.reps[j]), &[(j, Rational::one())]);
        }
        // projection kills the ideal
        let killed = piece.projection.mul(&piece.ideal_gens).unwrap();
        assert_eq!(killed.nnz(), 0);
    }

    #[test]
    fn curve_invariant_examples() {
        let s = presets::plane_sextic().curve_invariants().unwrap();
        assert_eq!((s.xi, s.genus, s.degree_of_curve), (3, 10, 6));
        assert_eq!(s.zeta(3).unwrap(), 1);
        assert_eq!(presets::plane_sextic().r_for(3).unwrap(), 2);
        assert!(matches!(s.zeta(2), Err(Error::UndefinedZeta { .. })));

        let e = presets::elliptic_quartic().curve_invariants().unwrap();
        assert_eq!((e.xi, e.genus, e.degree_of_curve), (0, 1, 4));
        let c = presets::canonical_genus5().curve_invariants().unwrap();
        assert_eq!((c.xi, c.genus, c.degree_of_curve), (1, 5, 8));

        assert!(CompleteIntersection::projective_space(2).curve_invariants().is_err());
    }

    #[test]
    fn line_bundle_examples() {
        let s = presets::plane_sextic();
        assert_eq!(s.h0_line(3).unwrap(), 10);
        assert_eq!(s.h1_line(3).unwrap(), 1);
        let e = presets::elliptic_quartic();
        assert_eq!(e.h1_line(0).unwrap(), 1);
        let c = presets::canonical_genus5();
        assert_eq!(c.h1_line(1).unwrap(), 1);
    }

    #[test]
    fn rejects_bad_forms() {
        let lin = Poly::var(0, 3);
        assert!(CompleteIntersection::new(2, vec![lin]).is_err());
        let mixed = Poly::var(0, 3) + Poly::term(Rational::one(), Monomial::new(vec![0, 2, 0]));
        assert!(CompleteIntersection::new(2, vec![mixed]).is_err());
    }

    #[test]
    fn dependent_forms_fail_certification() {
        let ci = CompleteIntersection::new(3, vec![
            presets::fermat(3, 2),
            presets::fermat(3, 2).scale(&crate::field::int(2)),
        ])
        .unwrap();
        assert!(matches!(ci.hilbert_function(2), Err(Error::Certification { degree: 2, .. })));
    }
}
