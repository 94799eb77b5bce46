//! Named checks that turn each surjectivity, kernel and tangent statement into
//! a PASS/FAIL record with the numbers that decided it.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cohom;
use crate::cring::CompleteIntersection;
use crate::error::{Error, Result};
use crate::exactalg;
use crate::gaussmaps::{self, GaussMapReport};
use crate::polyring::Monomial;
use crate::presets;
use crate::RationalMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    Pass,
    /// Passed on a finite window of an infinite family.
    WindowedPass,
    Fail,
    /// Hypotheses not met; nothing is claimed.
    Info,
}

impl Verdict {
    pub fn is_fail(self) -> bool {
        self == Verdict::Fail
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::WindowedPass => "WINDOWED-PASS",
            Verdict::Fail => "FAIL",
            Verdict::Info => "INFO",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub instance: String,
    pub inputs: BTreeMap<String, Value>,
    pub expected: String,
    pub computed: String,
    pub witnesses: BTreeMap<String, Value>,
    pub verdict: Verdict,
}

impl CheckResult {
    fn new(check: &str, instance: impl Into<String>) -> Self {
        CheckResult {
            check: check.to_string(),
            instance: instance.into(),
            inputs: BTreeMap::new(),
            expected: String::new(),
            computed: String::new(),
            witnesses: BTreeMap::new(),
            verdict: Verdict::Info,
        }
    }

    fn input(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), v.into());
        self
    }

    fn witness(&mut self, key: &str, v: impl Into<Value>) {
        self.witnesses.insert(key.to_string(), v.into());
    }
}

/// A curve together with the label used in check output.
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub ci: CompleteIntersection,
}

impl Instance {
    pub fn new(label: impl Into<String>, ci: CompleteIntersection) -> Self {
        Instance { label: label.into(), ci }
    }
}

pub fn preset_instances() -> Vec<Instance> {
    presets::curve_presets()
        .into_iter()
        .map(|(name, ci)| Instance::new(name, ci))
        .collect()
}

fn report_witnesses(r: &mut CheckResult, g: &GaussMapReport) {
    r.witness("domain_dim", g.domain_dim);
    r.witness("codomain_dim", g.codomain_dim);
    r.witness("rank", g.rank);
    r.witness("kernel_dim", g.kernel_dim);
    r.witness("coker_dim", g.coker_dim);
}

/// `gamma_{a,b}(P^n, O(e))` is surjective.
pub fn check_lemma_surjectivity_pn(n: usize, e: i64, a: i64, b: i64) -> Result<CheckResult> {
    let report = gaussmaps::gauss_pn(n, e, a, b)?;
    let mut r = CheckResult::new("lemma1", format!("P^{n} e={e} a={a} b={b}"))
        .input("n", n)
        .input("e", e)
        .input("a", a)
        .input("b", b);
    r.expected = format!("rank = {}", report.codomain_dim);
    r.computed = format!("rank = {}", report.rank);
    report_witnesses(&mut r, &report);
    r.verdict = Verdict::from_bool(report.surjective);
    Ok(r)
}

/// Surjectivity of `gamma_{a,b}(X, O_X(1))` when `a + b != d_i` and the
/// conormal bundle twisted by `a + b` has no `H^1`.
pub fn check_proposition_ci(inst: &Instance, a: i64, b: i64) -> Result<CheckResult> {
    let ci = &inst.ci;
    let t = a + b;
    let vanishing = cohom::h1_conormal_vanishes(ci, t)?;
    let avoids_degrees = ci.degrees().iter().all(|&d| d != t);
    let report = gaussmaps::gauss_ci(ci, 1, a, b)?;
    let mut r = CheckResult::new("proposition", format!("{} a={a} b={b}", inst.label))
        .input("a", a)
        .input("b", b)
        .input("degrees", ci.degrees().to_vec());
    r.witness("t_avoids_degrees", avoids_degrees);
    r.witness("h1_conormal_vanishes", vanishing.vanishes);
    if let Some(bound) = vanishing.bound {
        r.witness("vanishing_bound", bound);
    }
    report_witnesses(&mut r, &report);
    r.computed = format!("rank = {} of {}", report.rank, report.codomain_dim);
    if avoids_degrees && vanishing.vanishes {
        r.expected = "surjective".into();
        r.verdict = Verdict::from_bool(report.surjective);
    } else {
        r.expected = "no claim".into();
        r.verdict = Verdict::Info;
    }
    Ok(r)
}

/// `h^1(I_X(m))`: sections of `O_X(m)` not coming from forms of degree `m`.
/// `h^0(O_X(m))` is taken from Riemann-Roch, independently of the ring.
fn normality_defect(ci: &CompleteIntersection, m: i64) -> Result<i64> {
    let inv = ci.curve_invariants()?;
    let rr = m * inv.degree_of_curve - inv.genus + 1 + ci.h1_line(m)? as i64;
    Ok(rr - ci.hilbert_function(m)? as i64)
}

/// Cokernel of `V (x) I_{t-1} -> I_t`.
fn ideal_generation_defect(ci: &CompleteIntersection, t: i64) -> Result<usize> {
    let target = ci.piece(t)?;
    if t < 1 {
        return Ok(target.ideal_rank);
    }
    let source = ci.piece(t - 1)?;
    let mut cols = Vec::new();
    for c in 0..source.ideal_gens.cols() {
        for i in 0..ci.nvars() {
            let mut col = Vec::new();
            for (k, x) in source.ideal_gens.column(c) {
                let m: Monomial = source.basis.get(*k).times_var(i);
                let idx = target.basis.index_of(&m).expect("degree t monomial");
                col.push((idx, x.clone()));
            }
            cols.push(exactalg::matrix::normalize(col));
        }
    }
    let m = RationalMatrix::from_columns(target.ambient_dim(), cols)?;
    let rank = exactalg::rank_bounded(&m, target.ideal_rank)?;
    Ok(target.ideal_rank - rank)
}

/// Hypotheses and conclusion of the surjectivity theorem for curves, on the
/// window `t0 .. t0 + window`. Hypothesis (3) is taken in the form
/// `h^1(O_X(t0 - D)) = 0` with `D` the largest generator degree, which the
/// literal `h^1(O_X(1)) = 0` implies once (2) holds.
pub fn check_theorem25_hypotheses(inst: &Instance, t0: i64, window: i64) -> Result<CheckResult> {
    if window < 1 {
        return Err(Error::InvalidInput(format!("window must be >= 1, got {window}")));
    }
    if t0 < 3 {
        return Err(Error::InvalidInput(format!("need t0 >= 3, got {t0}")));
    }
    let ci = &inst.ci;
    let ts: Vec<i64> = (t0..t0 + window).collect();
    let mut r = CheckResult::new("theorem25", format!("{} t0={t0} window={window}", inst.label))
        .input("t0", t0)
        .input("window", window)
        .input("degrees", ci.degrees().to_vec());

    let normality: Vec<i64> = ts.iter().map(|&t| normality_defect(ci, t - 1)).collect::<Result<_>>()?;
    let generation: Vec<usize> = ts.iter().map(|&t| ideal_generation_defect(ci, t)).collect::<Result<_>>()?;
    let top_degree = ci.degrees().iter().copied().max().unwrap_or(0);
    let h1_one = ci.h1_line(1)?;
    let h1_general = ci.h1_line(t0 - top_degree)?;
    let hyp1 = normality.iter().all(|&x| x == 0);
    let hyp2 = generation.iter().all(|&x| x == 0) && top_degree < t0;
    let hyp3 = top_degree < t0 && h1_general == 0;
    r.witness("h1_ideal", normality.clone());
    r.witness("generation_defect", generation.clone());
    r.witness("top_generator_degree", top_degree);
    r.witness("h1_OX_1", h1_one);
    r.witness("h1_OX_t0_minus_top", h1_general);
    r.witness("hypotheses", json!([hyp1, hyp2, hyp3]));

    if !(hyp1 && hyp2 && hyp3) {
        r.expected = "no claim".into();
        r.computed = format!("hypotheses (1)={hyp1} (2)={hyp2} (3)={hyp3}");
        r.verdict = Verdict::Info;
        return Ok(r);
    }

    let pairs: Vec<(i64, i64)> = ts.iter().flat_map(|&t| (1..t).map(move |a| (a, t - a))).collect();
    let reports: Vec<GaussMapReport> = pairs
        .par_iter()
        .map(|&(a, b)| gaussmaps::gauss_ci(ci, 1, a, b))
        .collect::<Result<_>>()?;
    let failures: Vec<Value> = pairs
        .iter()
        .zip(&reports)
        .filter(|(_, rep)| !rep.surjective)
        .map(|(&(a, b), rep)| json!({"a": a, "b": b, "rank": rep.rank, "codomain_dim": rep.codomain_dim}))
        .collect();
    r.witness("maps_checked", pairs.len());
    r.expected = format!("surjective for all a + b in [{t0}, {}]", t0 + window - 1);
    r.computed = format!("{} of {} surjective", pairs.len() - failures.len(), pairs.len());
    r.verdict = if failures.is_empty() {
        Verdict::WindowedPass
    } else {
        Verdict::Fail
    };
    r.witness("failures", failures);
    Ok(r)
}

/// `kernel_dim >= rank(eta_{a+b})`.
pub fn check_kernel_eta_bound(inst: &Instance, e: i64, a: i64, b: i64) -> Result<CheckResult> {
    let report = gaussmaps::gauss_ci(&inst.ci, e, a, b)?;
    let mut r = CheckResult::new("kernel-bound", format!("{} e={e} a={a} b={b}", inst.label))
        .input("e", e)
        .input("a", a)
        .input("b", b);
    report_witnesses(&mut r, &report);
    let eta = report.kernel_lower_bound_eta;
    r.witness("eta_rank", eta);
    r.witness("slack", report.kernel_dim as i64 - eta as i64);
    r.expected = format!("kernel >= {eta}");
    r.computed = format!("kernel = {}", report.kernel_dim);
    r.verdict = Verdict::from_bool(report.kernel_dim >= eta);
    Ok(r)
}

/// `coker(mu_h) = h^0(N_C) - (n+1)^2 + 1`, and the rank of `mu_h` stays
/// within its upper bound.
pub fn check_tangent_ci(inst: &Instance, h: i64) -> Result<CheckResult> {
    let ci = &inst.ci;
    let inv = ci.curve_invariants()?;
    let report = gaussmaps::mu_h(ci, h)?;
    let zeta = inv.zeta(h)?;
    let r_dim = ci.r_for(h)?;
    let nn = ci.n() as i64 + 1;
    let oracle = ci.h0_normal_bundle()? as i64 - nn * nn + 1;
    let eta_h = gaussmaps::eta_rank(ci, zeta, h)?;
    let h0_l = ci.h0_line(zeta)?;
    let h0_kl = ci.h0_line(inv.xi - zeta)?;
    let bounds = gaussmaps::rank_bounds(inv.genus, h, r_dim, h0_l, h0_kl, eta_h)?;
    let coker = report.coker_dim as i64;
    let coker_floor = 3 * inv.genus - 3 - bounds.rank_upper;

    let mut r = CheckResult::new("tangent", format!("{} h={h}", inst.label))
        .input("h", h)
        .input("degrees", ci.degrees().to_vec());
    report_witnesses(&mut r, &report);
    r.witness("genus", inv.genus);
    r.witness("xi", inv.xi);
    r.witness("zeta", zeta);
    r.witness("r", r_dim);
    r.witness("h0_normal_bundle", ci.h0_normal_bundle()?);
    r.witness("normal_bundle_count", oracle);
    r.witness("eta_rank", eta_h);
    r.witness("rank_upper", bounds.rank_upper);
    r.witness("rank_upper_attained", report.rank as i64 == bounds.rank_upper);
    r.expected = format!("tangent = {oracle}, tangent >= {coker_floor}");
    r.computed = format!("tangent = {coker}");
    r.verdict = Verdict::from_bool(coker == oracle && coker >= coker_floor);
    Ok(r)
}

/// The single-section squeeze pins `rank(mu_h) = (g-1)(h-2)/h`.
pub fn check_theorem34_identity(g: i64, h: i64) -> Result<CheckResult> {
    let s = gaussmaps::theorem34_identity(g, h)?;
    let mut r = CheckResult::new("theorem34", format!("g={g} h={h}"))
        .input("g", g)
        .input("h", h);
    r.witness("h0_k_minus_l", s.h0_k_minus_l);
    r.witness("squeeze_lower", s.squeeze_lower);
    r.witness("squeeze_upper", s.squeeze_upper);
    r.witness("codim", s.codim);
    r.expected = match s.codim {
        Some(c) => format!("rank = codim = {c}"),
        None => "integral codim".into(),
    };
    r.computed = format!("rank in [{}, {}]", s.squeeze_lower, s.squeeze_upper);
    r.verdict = Verdict::from_bool(s.holds);
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Lemma1,
    Proposition,
    Theorem25,
    KernelBound,
    Tangent,
    Theorem34,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = [
        "all",
        "lemma1",
        "proposition",
        "theorem25",
        "kernel-bound",
        "tangent",
        "theorem34",
    ];

    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "all" => Suite::All,
            "lemma1" => Suite::Lemma1,
            "proposition" => Suite::Proposition,
            "theorem25" => Suite::Theorem25,
            "kernel-bound" => Suite::KernelBound,
            "tangent" => Suite::Tangent,
            "theorem34" => Suite::Theorem34,
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown suite {other:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

/// Knobs for a suite run. `None` means the built-in grid.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub n: Option<usize>,
    pub e: Option<i64>,
    pub max_t: i64,
    pub window: i64,
    pub g: Option<i64>,
    pub h: Option<i64>,
    /// Curves to check; the presets when empty.
    pub instances: Vec<Instance>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n: None,
            e: None,
            max_t: 6,
            window: 3,
            g: None,
            h: None,
            instances: Vec::new(),
        }
    }
}

type Job = Box<dyn Fn() -> Result<CheckResult> + Send + Sync>;

fn lemma1_jobs(opts: &SuiteOptions) -> Vec<Job> {
    let ns = opts.n.map_or(vec![1, 2, 3], |n| vec![n]);
    let es = opts.e.map_or(vec![1, 2], |e| vec![e]);
    let mut jobs: Vec<Job> = Vec::new();
    for &n in &ns {
        for &e in &es {
            for t in 2..=opts.max_t {
                for a in 1..t {
                    let b = t - a;
                    jobs.push(Box::new(move || check_lemma_surjectivity_pn(n, e, a, b)));
                }
            }
        }
    }
    jobs
}

/// Twists where the proposition makes a claim, plus a couple where it does not.
fn proposition_twists(ci: &CompleteIntersection) -> Result<Vec<i64>> {
    let mut ts = vec![2, 3, ci.degrees()[0]];
    if let Some(bound) = cohom::h1_conormal_vanishes(ci, 1)?.bound {
        ts.push(bound + 1);
        ts.push(bound + 2);
    }
    ts.retain(|&t| t >= 2);
    ts.sort_unstable();
    ts.dedup();
    Ok(ts)
}

fn proposition_jobs(instances: &[Instance]) -> Result<Vec<Job>> {
    let mut jobs: Vec<Job> = Vec::new();
    for inst in instances {
        for t in proposition_twists(&inst.ci)? {
            let mut pairs = vec![(1, t - 1), (t / 2, t - t / 2)];
            pairs.dedup();
            for (a, b) in pairs {
                let inst = inst.clone();
                jobs.push(Box::new(move || check_proposition_ci(&inst, a, b)));
            }
        }
    }
    Ok(jobs)
}

/// First twist worth testing: the ideal must be generated below `t0`.
fn theorem25_start(ci: &CompleteIntersection) -> i64 {
    let top = ci.degrees().iter().copied().max().unwrap_or(2);
    (top + 1).max(3)
}

fn theorem25_jobs(instances: &[Instance], window: i64) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for inst in instances {
        let mut starts = vec![3, theorem25_start(&inst.ci)];
        if inst.ci.is_curve() && inst.ci.curve_invariants().map(|i| i.xi).unwrap_or(0) == 1 {
            // canonical curves: the surjectivity range starts one later
            starts.push(4);
        }
        starts.sort_unstable();
        starts.dedup();
        for t0 in starts {
            let inst = inst.clone();
            jobs.push(Box::new(move || check_theorem25_hypotheses(&inst, t0, window)));
        }
    }
    jobs
}

fn kernel_jobs(instances: &[Instance], e: Option<i64>) -> Vec<Job> {
    let e = e.unwrap_or(1);
    let mut jobs: Vec<Job> = Vec::new();
    for inst in instances {
        for (a, b) in [(1, 1), (1, 2), (2, 2)] {
            let inst = inst.clone();
            jobs.push(Box::new(move || check_kernel_eta_bound(&inst, e, a, b)));
        }
    }
    jobs
}

fn tangent_jobs(instances: &[Instance], h: Option<i64>) -> Result<Vec<Job>> {
    let mut jobs: Vec<Job> = Vec::new();
    for inst in instances {
        let inv = inst.ci.curve_invariants()?;
        let hs: Vec<i64> = match h {
            Some(h) => vec![h],
            None if inv.genus >= 2 => (2..=inv.xi).filter(|h| inv.xi % h == 0).collect(),
            None => Vec::new(),
        };
        for h in hs {
            let inst = inst.clone();
            jobs.push(Box::new(move || check_tangent_ci(&inst, h)));
        }
    }
    Ok(jobs)
}

fn theorem34_jobs(g: Option<i64>, h: Option<i64>) -> Vec<Job> {
    let pairs = match (g, h) {
        (Some(g), Some(h)) => vec![(g, h)],
        (Some(g), None) => (2..=2 * g - 2).filter(|h| (2 * g - 2) % h == 0).map(|h| (g, h)).collect(),
        (None, Some(h)) => (2..=12).filter(|g| (2 * g - 2) % h == 0).map(|g| (g, h)).collect(),
        (None, None) => vec![(2, 2), (3, 2), (4, 3), (5, 4), (7, 3), (10, 3), (10, 6)],
    };
    pairs
        .into_iter()
        .map(|(g, h)| Box::new(move || check_theorem34_identity(g, h)) as Job)
        .collect()
}

/// Runs a suite. Checks execute in parallel; results come back sorted by
/// check id, then in construction order.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let instances = if opts.instances.is_empty() {
        preset_instances()
    } else {
        opts.instances.clone()
    };
    let mut jobs: Vec<(usize, Job)> = Vec::new();
    let mut push = |order: usize, js: Vec<Job>| jobs.extend(js.into_iter().map(|j| (order, j)));
    if suite.includes(Suite::KernelBound) {
        push(0, kernel_jobs(&instances, opts.e));
    }
    if suite.includes(Suite::Lemma1) {
        push(1, lemma1_jobs(opts));
    }
    if suite.includes(Suite::Proposition) {
        push(2, proposition_jobs(&instances)?);
    }
    if suite.includes(Suite::Tangent) {
        push(3, tangent_jobs(&instances, opts.h)?);
    }
    if suite.includes(Suite::Theorem25) {
        push(4, theorem25_jobs(&instances, opts.window));
    }
    if suite.includes(Suite::Theorem34) {
        push(5, theorem34_jobs(opts.g, opts.h));
    }
    let mut results: Vec<(usize, CheckResult)> = jobs
        .par_iter()
        .map(|(order, job)| job().map(|r| (*order, r)))
        .collect::<Result<_>>()?;
    results.sort_by_key(|(order, _)| *order);
    Ok(results.into_iter().map(|(_, r)| r).collect())
}

pub fn any_failed(results: &[CheckResult]) -> bool {
    results.iter().any(|r| r.verdict.is_fail())
}

/// Fixed-width table with columns check, instance, expected, computed, verdict.
pub fn render_table(results: &[CheckResult]) -> String {
    let header = ["check", "instance", "expected", "computed", "verdict"];
    let rows: Vec<[&str; 5]> = results
        .iter()
        .map(|r| [r.check.as_str(), &r.instance, &r.expected, &r.computed, r.verdict.label()])
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: [&str; 5]| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                s.push_str(&format!("{cell:<w$}  "));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header);
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn preset(name: &str) -> Instance {
        Instance::new(name, presets::by_name(name).unwrap())
    }

    #[test]
    fn lemma_examples() {
        for (n, e, a, b) in [(2, 1, 1, 2), (1, 2, 2, 3), (3, 1, 1, 1)] {
            assert_eq!(check_lemma_surjectivity_pn(n, e, a, b).unwrap().verdict, Verdict::Pass);
        }
    }

    #[test]
    fn proposition_examples() {
        let sextic = preset("plane-sextic");
        assert_eq!(check_proposition_ci(&sextic, 1, 9).unwrap().verdict, Verdict::Pass);
        let r = check_proposition_ci(&sextic, 3, 3).unwrap();
        assert_eq!(r.verdict, Verdict::Info);
        assert!(r.witnesses.contains_key("rank"));
        assert_eq!(check_proposition_ci(&preset("elliptic-quartic"), 1, 2).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn theorem25_examples() {
        let q = check_theorem25_hypotheses(&preset("elliptic-quartic"), 3, 3).unwrap();
        assert_eq!(q.verdict, Verdict::WindowedPass);
        let c = check_theorem25_hypotheses(&preset("canonical-genus5"), 4, 2).unwrap();
        assert_eq!(c.verdict, Verdict::WindowedPass);
        let s = check_theorem25_hypotheses(&preset("plane-sextic"), 3, 3).unwrap();
        assert_eq!(s.verdict, Verdict::Info);
        assert_eq!(s.witnesses["h1_OX_1"], json!(6));
        assert!(check_theorem25_hypotheses(&preset("plane-sextic"), 3, 0).is_err());
    }

    #[test]
    fn kernel_examples() {
        let s = check_kernel_eta_bound(&preset("plane-sextic"), 1, 1, 2).unwrap();
        assert_eq!(s.verdict, Verdict::Pass);
        assert_eq!(s.witnesses["slack"], json!(0));
        let q = check_kernel_eta_bound(&preset("elliptic-quartic"), 1, 1, 2).unwrap();
        assert_eq!((q.witnesses["kernel_dim"].clone(), q.witnesses["slack"].clone()), (json!(20), json!(8)));
    }

    #[test]
    fn tangent_examples() {
        let s = check_tangent_ci(&preset("plane-sextic"), 3).unwrap();
        assert_eq!(s.verdict, Verdict::Pass);
        assert_eq!(s.witnesses["coker_dim"], json!(19));
        assert_eq!(s.witnesses["rank_upper_attained"], json!(true));
        let q = check_tangent_ci(&preset("plane-quintic"), 2).unwrap();
        assert_eq!(q.witnesses["coker_dim"], json!(12));
        assert_eq!(q.verdict, Verdict::Pass);
        assert!(check_tangent_ci(&preset("plane-sextic"), 1).is_err());
    }

    #[test]
    fn theorem34_examples() {
        for (g, h, codim) in [(2, 2, 0), (4, 3, 1), (10, 3, 3)] {
            let r = check_theorem34_identity(g, h).unwrap();
            assert_eq!(r.verdict, Verdict::Pass);
            assert_eq!(r.witnesses["codim"], json!(codim));
        }
    }

    #[test]
    fn suite_order_is_stable() {
        let opts = SuiteOptions::default();
        let a = run_suite(Suite::Theorem34, &opts).unwrap();
        let b = run_suite(Suite::Theorem34, &opts).unwrap();
        assert_eq!(a, b);
        assert!(!any_failed(&a));
        assert!(render_table(&a).starts_with("check"));
    }
}
