//! Weighted Gaussian maps `gamma_{a,b}: sigma (x) tau -> b tau d(sigma) - a sigma d(tau)`
//! as explicit matrices.
//!
//! Domain coordinates are pairs `(sigma, tau)` of representative monomials of
//! degrees `ae` and `be`, `sigma` outer. The value is written in Euler
//! coordinates: block `i` holds `b tau dsigma/dX_i - a sigma dtau/dX_i`. For
//! monomials this block is the single monomial `sigma tau / X_i` with
//! coefficient `b sigma_i - a tau_i`.

use serde::{Deserialize, Serialize};

use crate::cohom::{self, OmegaSections};
use crate::cring::CompleteIntersection;
use crate::error::{Error, Result};
use crate::exactalg::{self, SparseVec};
use crate::field::int;
use crate::polyring::{Monomial, SparsePolynomial};
use crate::{Poly, Rational, RationalMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Context {
    /// `gamma_{a,b}(P^n, O(e))`.
    ProjectiveSpace,
    /// `gamma_{a,b}(C, O_C(e))` on a complete intersection curve.
    Curve,
    /// Higher-dimensional complete intersection; codomain is the presented
    /// image only.
    Variety,
}

/// `rank >= h^0(L^a) + h^0(L^b) - 3`, strict when `b s - a t != 0` with
/// `s = h^0(L^a) - 1`, `t = h^0(L^b) - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingRankBound {
    pub h0_la: usize,
    pub h0_lb: usize,
    pub value: i64,
    pub strict: bool,
    pub holds: bool,
}

impl PairingRankBound {
    pub fn new(a: i64, b: i64, h0_la: usize, h0_lb: usize, rank: usize) -> Self {
        let value = h0_la as i64 + h0_lb as i64 - 3;
        let s = h0_la as i64 - 1;
        let t = h0_lb as i64 - 1;
        let strict = b * s - a * t != 0;
        let rank = rank as i64;
        PairingRankBound {
            h0_la,
            h0_lb,
            value,
            strict,
            holds: if strict { rank > value } else { rank >= value },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussMapReport {
    pub context: Context,
    pub n: usize,
    pub degrees: Vec<i64>,
    pub a: i64,
    pub b: i64,
    pub e: i64,
    /// Codomain twist `ae + be`.
    pub t: i64,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub coker_dim: usize,
    pub surjective: bool,
    pub bound_lower_bf06: PairingRankBound,
    /// `rank(eta_{a+b})`, a lower bound for `kernel_dim`.
    pub kernel_lower_bound_eta: usize,
    pub kernel_bound_holds: bool,
    pub h1_conormal_vanishes: bool,
    /// Dimension of the restricted forms modulo the conormal image.
    pub presented_codomain_dim: usize,
    pub lower_bound_only: bool,
    pub matrix_rows: usize,
    pub matrix_cols: usize,
    /// Cokernel dimension read as the tangent space dimension, for `mu_h`.
    pub tangent_dim: Option<usize>,
    pub matrix: Option<Vec<MatrixEntry>>,
}

impl GaussMapReport {
    pub fn arithmetic_consistent(&self) -> bool {
        self.rank + self.kernel_dim == self.domain_dim
            && self.rank + self.coker_dim == self.codomain_dim
            && self.surjective == (self.coker_dim == 0)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GaussOptions {
    /// Accept complete intersections of dimension >= 2, reporting against the
    /// presented codomain.
    pub allow_lower_bound: bool,
    pub dump_matrix: bool,
}

/// The matrix of a Gaussian map with everything needed to rank it.
#[derive(Clone, Debug)]
pub struct GaussMatrix {
    pub a: i64,
    pub b: i64,
    pub e: i64,
    /// Columns in Euler coordinates of `V (x) (S/I)_{t-1}`.
    pub matrix: RationalMatrix,
    pub sections: OmegaSections,
    /// `(sigma, tau)` representative index of each column.
    pub column_labels: Vec<(usize, usize)>,
}

fn check_weights(e: i64, a: i64, b: i64) -> Result<()> {
    if e < 1 || a < 1 || b < 1 {
        return Err(Error::InvalidInput(format!(
            "need e, a, b >= 1, got e = {e}, a = {a}, b = {b}"
        )));
    }
    Ok(())
}

/// Euler coordinates of `gamma_{a,b}(sigma (x) tau)` for arbitrary lifts,
/// reduced into `(S/I)_{t-1}`.
pub fn gamma_column(ci: &CompleteIntersection, a: i64, b: i64, sigma: &Poly, tau: &Poly) -> Result<SparseVec<Rational>> {
    let ds = sigma.homogeneous_degree();
    let dt = tau.homogeneous_degree();
    let (Some(ds), Some(dt)) = (ds, dt) else {
        return Err(Error::InvalidInput("sigma and tau must be nonzero homogeneous".into()));
    };
    let t = (ds + dt) as i64;
    let blocks: Vec<Poly> = (0..ci.nvars())
        .map(|i| {
            tau.multiply(&sigma.partial_derivative(i)).scale(&int(b))
                - sigma.multiply(&tau.partial_derivative(i)).scale(&int(a))
        })
        .collect();
    cohom::euler_coordinates(ci, t, &blocks)
}

fn monomial_column(
    ci: &CompleteIntersection,
    a: i64,
    b: i64,
    sigma: &Monomial,
    tau: &Monomial,
    target: &crate::cring::QuotientPiece,
) -> Result<SparseVec<Rational>> {
    let w = target.dim();
    let prod = sigma.mul(tau);
    let mut col = Vec::new();
    for i in 0..ci.nvars() {
        let c = b * sigma.exponents()[i] as i64 - a * tau.exponents()[i] as i64;
        if c == 0 {
            continue;
        }
        let m = prod.div_var(i).expect("X_i divides sigma tau when the weight is nonzero");
        for (j, x) in target.project_monomial(&m)? {
            col.push((i * w + j, x.clone() * int(c)));
        }
    }
    Ok(col)
}

/// Builds the matrix of `gamma_{a,b}(X, O_X(e))` together with its codomain
/// presentation. `sections` must be the presentation for twist `(a+b)e`.
pub fn gamma_matrix(ci: &CompleteIntersection, e: i64, a: i64, b: i64, sections: OmegaSections) -> Result<GaussMatrix> {
    check_weights(e, a, b)?;
    let t = (a + b) * e;
    if sections.t != t {
        return Err(Error::InvalidInput(format!("sections for twist {} used at twist {t}", sections.t)));
    }
    let pa = ci.piece(a * e)?;
    let pb = ci.piece(b * e)?;
    let target = ci.piece(t - 1)?;
    let mut cols = Vec::with_capacity(pa.dim() * pb.dim());
    let mut labels = Vec::with_capacity(pa.dim() * pb.dim());
    for j in 0..pa.dim() {
        for k in 0..pb.dim() {
            cols.push(monomial_column(ci, a, b, pa.rep(j), pb.rep(k), &target)?);
            labels.push((j, k));
        }
    }
    let matrix = RationalMatrix::from_columns(sections.ambient_dim(), cols)?;
    Ok(GaussMatrix {
        a,
        b,
        e,
        matrix,
        sections,
        column_labels: labels,
    })
}

/// Rank of the map into restricted forms modulo the conormal image. Both
/// matrices sit inside the Euler kernel, whose dimension caps the rank.
pub fn rank_modulo_conormal(gm: &GaussMatrix) -> Result<usize> {
    let sec = &gm.sections;
    if sec.euler_violations(&gm.matrix)? != 0 {
        return Err(Error::Inconsistent("Gaussian map column outside the Euler kernel".into()));
    }
    let kernel_dim = sec.kernel_dim();
    match &sec.conormal_gens {
        None => exactalg::rank_bounded(&gm.matrix, kernel_dim),
        Some(cn) => {
            let cn_rank = exactalg::rank_bounded(cn, cn.cols())?;
            let joint = exactalg::rank_bounded(&gm.matrix.hcat(cn)?, kernel_dim)?;
            Ok(joint - cn_rank)
        }
    }
}

fn dump(m: &RationalMatrix) -> Vec<MatrixEntry> {
    let mut v: Vec<MatrixEntry> = m
        .entries()
        .map(|(row, col, x)| MatrixEntry {
            row,
            col,
            value: format!("{}/{}", x.numer(), x.denom()),
        })
        .collect();
    v.sort_by_key(|m| (m.col, m.row));
    v
}

fn assemble(
    ci: &CompleteIntersection,
    context: Context,
    gm: &GaussMatrix,
    vanishes: bool,
    opts: GaussOptions,
) -> Result<GaussMapReport> {
    let (a, b, e) = (gm.a, gm.b, gm.e);
    let rank = rank_modulo_conormal(gm)?;
    let sec = &gm.sections;
    let domain_dim = gm.matrix.cols();
    let codomain_dim = sec.dim_h0;
    if rank > codomain_dim {
        return Err(Error::Inconsistent(format!(
            "rank {rank} exceeds codomain dimension {codomain_dim}"
        )));
    }
    let eta = eta_rank(ci, e, a + b)?;
    let kernel_dim = domain_dim - rank;
    Ok(GaussMapReport {
        context,
        n: ci.n(),
        degrees: ci.degrees().to_vec(),
        a,
        b,
        e,
        t: (a + b) * e,
        domain_dim,
        codomain_dim,
        rank,
        kernel_dim,
        coker_dim: codomain_dim - rank,
        surjective: rank == codomain_dim,
        bound_lower_bf06: PairingRankBound::new(a, b, ci.hilbert_function(a * e)?, ci.hilbert_function(b * e)?, rank),
        kernel_lower_bound_eta: eta,
        kernel_bound_holds: kernel_dim >= eta,
        h1_conormal_vanishes: vanishes,
        presented_codomain_dim: sec.presented_dim,
        lower_bound_only: sec.lower_bound_only,
        matrix_rows: gm.matrix.rows(),
        matrix_cols: gm.matrix.cols(),
        tangent_dim: None,
        matrix: opts.dump_matrix.then(|| dump(&gm.matrix)),
    })
}

/// `gamma_{a,b}(P^n, O(e))` into `H^0(Omega^1_{P^n}((a+b)e))`.
pub fn gauss_pn(n: usize, e: i64, a: i64, b: i64) -> Result<GaussMapReport> {
    gauss_pn_with(n, e, a, b, GaussOptions::default())
}

pub fn gauss_pn_with(n: usize, e: i64, a: i64, b: i64, opts: GaussOptions) -> Result<GaussMapReport> {
    let (pn, gm) = gauss_pn_matrix(n, e, a, b)?;
    assemble(&pn, Context::ProjectiveSpace, &gm, true, opts)
}

pub fn gauss_pn_matrix(n: usize, e: i64, a: i64, b: i64) -> Result<(CompleteIntersection, GaussMatrix)> {
    if n < 1 {
        return Err(Error::InvalidInput("need n >= 1".into()));
    }
    check_weights(e, a, b)?;
    let pn = CompleteIntersection::projective_space(n);
    let sections = cohom::omega_pn_sections(n, (a + b) * e)?;
    let gm = gamma_matrix(&pn, e, a, b, sections)?;
    Ok((pn, gm))
}

/// Codomain presentation used by [`gauss_ci`] for twist `t`.
pub fn ci_sections(ci: &CompleteIntersection, t: i64, opts: GaussOptions) -> Result<(Context, OmegaSections)> {
    if ci.is_curve() {
        Ok((Context::Curve, cohom::omega_x_sections(ci, t)?))
    } else if opts.allow_lower_bound {
        Ok((Context::Variety, cohom::omega_presented(ci, t)?))
    } else {
        Err(Error::Precondition(format!(
            "Gaussian maps on a {}-dimensional complete intersection need --allow-lower-bound",
            ci.dim_x()
        )))
    }
}

/// `gamma_{a,b}(X, O_X(e))` for a complete intersection curve.
pub fn gauss_ci(ci: &CompleteIntersection, e: i64, a: i64, b: i64) -> Result<GaussMapReport> {
    gauss_ci_with(ci, e, a, b, GaussOptions::default())
}

pub fn gauss_ci_with(ci: &CompleteIntersection, e: i64, a: i64, b: i64, opts: GaussOptions) -> Result<GaussMapReport> {
    let (context, gm) = gauss_ci_matrix(ci, e, a, b, opts)?;
    let vanishes = cohom::h1_conormal_vanishes(ci, (a + b) * e)?.vanishes;
    assemble(ci, context, &gm, vanishes, opts)
}

pub fn gauss_ci_matrix(ci: &CompleteIntersection, e: i64, a: i64, b: i64, opts: GaussOptions) -> Result<(Context, GaussMatrix)> {
    check_weights(e, a, b)?;
    let (context, sections) = ci_sections(ci, (a + b) * e, opts)?;
    Ok((context, gamma_matrix(ci, e, a, b, sections)?))
}

/// `mu_h = gamma_{1,h-1}(C, O_C(zeta))`, `zeta = xi / h`. The cokernel
/// dimension is reported as the tangent dimension.
pub fn mu_h(ci: &CompleteIntersection, h: i64) -> Result<GaussMapReport> {
    if h < 2 {
        return Err(Error::InvalidInput(format!("need h >= 2, got {h}")));
    }
    let inv = ci.curve_invariants()?;
    let zeta = inv.zeta(h)?;
    if zeta < 1 {
        return Err(Error::InvalidInput(format!(
            "zeta = {zeta}: the root O_C(zeta) has no sections to build mu_h from"
        )));
    }
    let mut report = gauss_ci(ci, zeta, 1, h - 1)?;
    report.tangent_dim = Some(report.coker_dim);
    Ok(report)
}

fn multisets(k: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s);
    fn rec(start: usize, k: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(i, k, s, cur, out);
            cur.pop();
        }
    }
    rec(0, k, s, &mut cur, &mut out);
    out
}

/// Rank of `Sym^s (S/I)_e -> (S/I)_{se}`.
pub fn eta_rank(ci: &CompleteIntersection, e: i64, s: i64) -> Result<usize> {
    if e < 1 || s < 1 {
        return Err(Error::InvalidInput(format!("need e, s >= 1, got e = {e}, s = {s}")));
    }
    let src = ci.piece(e)?;
    let dst = ci.piece(s * e)?;
    let cols = multisets(src.dim(), s as usize)
        .into_iter()
        .map(|idx| {
            let prod = idx
                .iter()
                .fold(Monomial::one(ci.nvars()), |acc, &j| acc.mul(src.rep(j)));
            dst.project_monomial(&prod).map(<[_]>::to_vec)
        })
        .collect::<Result<Vec<_>>>()?;
    let m = RationalMatrix::from_columns(dst.dim(), cols)?;
    exactalg::rank_bounded(&m, dst.dim().min(m.cols()))
}

/// Squeeze on `rank(mu_h)` for a root with a single section.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingleSectionSqueeze {
    pub g: i64,
    pub h: i64,
    /// `h^0(K_C - L) = g - (2g - 2)/h` when `h^0(L) = 1`.
    pub h0_k_minus_l: i64,
    /// Lower bound from the rank inequality, strict version applied, floored at 0.
    pub squeeze_lower: i64,
    /// `h^0(L) h^0(K_C - L) - rank(eta_h)` with `rank(eta_h) = 1`.
    pub squeeze_upper: i64,
    /// `(g-1)(h-2)/h` when integral.
    pub codim: Option<i64>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub g: i64,
    pub h: i64,
    pub r: i64,
    pub rank_lower: i64,
    pub rank_lower_strict: bool,
    /// `rank_lower + 1` when strict, never below 0.
    pub effective_lower: i64,
    /// `(r+1)(r+1 + (g-1)(h-2)/h) - rank(eta_h)`.
    pub rank_upper: i64,
    pub single_section: Option<SingleSectionSqueeze>,
}

fn require_root_arithmetic(g: i64, h: i64) -> Result<()> {
    if g < 2 || h < 2 {
        return Err(Error::InvalidInput(format!("need g, h >= 2, got g = {g}, h = {h}")));
    }
    if (2 * g - 2) % h != 0 {
        return Err(Error::InvalidInput(format!("h = {h} does not divide 2g - 2 = {}", 2 * g - 2)));
    }
    Ok(())
}

/// The rank squeeze for `r = 0`.
pub fn theorem34_identity(g: i64, h: i64) -> Result<SingleSectionSqueeze> {
    require_root_arithmetic(g, h)?;
    let h0_kl = g - (2 * g - 2) / h;
    let bf = PairingRankBound::new(1, h - 1, 1, h0_kl as usize, 0);
    let lower = (bf.value + i64::from(bf.strict)).max(0);
    let upper = h0_kl - 1;
    let num = (g - 1) * (h - 2);
    let codim = (num % h == 0).then_some(num / h);
    Ok(SingleSectionSqueeze {
        g,
        h,
        h0_k_minus_l: h0_kl,
        squeeze_lower: lower,
        squeeze_upper: upper,
        codim,
        holds: lower == upper && codim == Some(upper),
    })
}

/// Bounds on `rank(mu_h)` for `L` with `h^0(L) = h0_la`, `h^0(K_C - L) = h0_lb`.
pub fn rank_bounds(g: i64, h: i64, r: i64, h0_la: usize, h0_lb: usize, eta_rank_h: usize) -> Result<BoundRecord> {
    require_root_arithmetic(g, h)?;
    if r < 0 {
        return Err(Error::InvalidInput(format!("need r >= 0, got {r}")));
    }
    let bf = PairingRankBound::new(1, h - 1, h0_la, h0_lb, 0);
    let extra = (g - 1) * (h - 2) / h;
    Ok(BoundRecord {
        g,
        h,
        r,
        rank_lower: bf.value,
        rank_lower_strict: bf.strict,
        effective_lower: (bf.value + i64::from(bf.strict)).max(0),
        rank_upper: (r + 1) * (r + 1 + extra) - eta_rank_h as i64,
        single_section: if r == 0 { Some(theorem34_identity(g, h)?) } else { None },
    })
}

/// `sigma^a`-style helper used by tests: the lift of representative `j` of
/// degree `m` as a polynomial.
pub fn representative(ci: &CompleteIntersection, m: i64, j: usize) -> Result<Poly> {
    let piece = ci.piece(m)?;
    Ok(SparsePolynomial::term(int(1), piece.rep(j).clone()))
}

/// Polynomial with the given monomial coordinates in degree `m`.
fn poly_from_coords(ci: &CompleteIntersection, m: i64, coords: &[(usize, Rational)]) -> Result<Poly> {
    let piece = ci.piece(m)?;
    let mut p = SparsePolynomial::zero(ci.nvars());
    for (k, c) in coords {
        p.add_term(piece.basis.get(*k).clone(), c.clone());
    }
    Ok(p)
}

fn random_ideal_element(ci: &CompleteIntersection, m: i64, gens: &RationalMatrix, rng: &mut impl rand::Rng) -> Result<Poly> {
    let mut acc = Vec::new();
    for c in 0..gens.cols() {
        let w = int(rng.gen_range(-3..=3));
        acc.extend(gens.column(c).iter().map(|(r, x)| (*r, x.clone() * w.clone())));
    }
    poly_from_coords(ci, m, &exactalg::matrix::normalize(acc))
}

/// Perturbs the lifts of `trials` random domain columns by random elements of
/// `I_{ae}` and `I_{be}` and counts the columns whose value moved outside the
/// conormal image. Zero means the matrix does not depend on the lift.
pub fn lift_defects(ci: &CompleteIntersection, gm: &GaussMatrix, trials: usize, seed: u64) -> Result<usize> {
    use rand::{Rng, SeedableRng};

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let (a, b, e) = (gm.a, gm.b, gm.e);
    let pa = ci.piece(a * e)?;
    let pb = ci.piece(b * e)?;
    let rows = gm.matrix.rows();
    let conormal = gm.sections.conormal_gens.clone().unwrap_or_else(|| RationalMatrix::zeros(rows, 0));
    let base_rank = exactalg::rank(&conormal);
    let mut defects = 0;
    for _ in 0..trials {
        if gm.column_labels.is_empty() {
            break;
        }
        let col = rng.gen_range(0..gm.column_labels.len());
        let (j, k) = gm.column_labels[col];
        let sigma = representative(ci, a * e, j)? + random_ideal_element(ci, a * e, &pa.ideal_gens, &mut rng)?;
        let tau = representative(ci, b * e, k)? + random_ideal_element(ci, b * e, &pb.ideal_gens, &mut rng)?;
        let moved = gamma_column(ci, a, b, &sigma, &tau)?;
        let base = gm.matrix.column(col);
        let mut diff: Vec<(usize, Rational)> = moved;
        diff.extend(base.iter().map(|(r, x)| (*r, -x.clone())));
        let diff = exactalg::matrix::normalize(diff);
        if diff.is_empty() {
            continue;
        }
        let mut with = conormal.clone();
        with.push_column(diff)?;
        if exactalg::rank(&with) != base_rank {
            defects += 1;
        }
    }
    Ok(defects)
}
