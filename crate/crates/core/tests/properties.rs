use gaussmap::exactalg::{self, modular};
use gaussmap::field::{int, rational};
use gaussmap::gaussmaps::{self, GaussMapReport, GaussOptions};
use gaussmap::polyring::{format_poly, parse_poly, Monomial};
use gaussmap::verify::{self, Instance};
use gaussmap::{presets, Poly, Rational, RationalMatrix};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -4i64..=4], c), r)
    })
}

fn to_matrix(rows: &[Vec<i64>]) -> RationalMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    RationalMatrix::from_i64_rows(&refs)
}

fn homogeneous_poly(nvars: usize, degree: u32) -> impl Strategy<Value = Poly> {
    let basis = gaussmap::polyring::monomial_basis(nvars - 1, degree as i64);
    let len = basis.len();
    prop::collection::vec((-5i64..=5, 1i64..=4), len).prop_map(move |cs| {
        Poly::from_terms(
            nvars,
            basis.iter().cloned().zip(cs).filter(|(_, (n, _))| *n != 0).map(|(m, (n, d))| (m, rational(n, d))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_invariant(rows in small_matrix(), seed in any::<u64>()) {
        let m = to_matrix(&rows);
        let r = exactalg::rank(&m);
        prop_assert_eq!(exactalg::rank(&m.transpose()), r);
        prop_assert_eq!(m.rank_gauss_jordan(), r);

        let mut perm: Vec<usize> = (0..m.rows()).collect();
        perm.rotate_left((seed as usize) % m.rows().max(1));
        prop_assert_eq!(exactalg::rank(&m.permute_rows(&perm)), r);

        let mut scaled = m.clone();
        for i in 0..scaled.rows() {
            scaled.scale_row(i, &rational((seed % 7) as i64 + i as i64 + 1, 3));
        }
        prop_assert_eq!(exactalg::rank(&scaled), r);
    }

    #[test]
    fn kernel_complements_rank(rows in small_matrix()) {
        let m = to_matrix(&rows);
        let k = exactalg::kernel_basis(&m);
        prop_assert_eq!(exactalg::rank(&m) + k.cols(), m.cols());
        prop_assert_eq!(exactalg::rank(&k), k.cols());
        for c in 0..k.cols() {
            prop_assert!(m.mul_sparse(k.column(c)).is_empty());
        }
    }

    #[test]
    fn modular_ranks_confirm(rows in small_matrix(), seed in any::<u64>()) {
        let m = to_matrix(&rows);
        let cert = exactalg::certify_rank(&m, &modular::random_primes(seed, 3));
        prop_assert!(cert.confirmed(), "{:?}", cert);
    }

    #[test]
    fn euler_operator_scales_by_degree(p in homogeneous_poly(3, 4)) {
        prop_assert_eq!(p.euler_operator(), p.scale(&int(4)));
    }

    #[test]
    fn leibniz_rule(p in homogeneous_poly(3, 2), q in homogeneous_poly(3, 3), i in 0usize..3) {
        let lhs = p.multiply(&q).partial_derivative(i);
        let rhs = p.partial_derivative(i).multiply(&q) + p.multiply(&q.partial_derivative(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_round_trip(p in homogeneous_poly(4, 3)) {
        let back = parse_poly(&format_poly(&p), 4).unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn riemann_roch_on_presets() {
    for (name, ci) in presets::curve_presets() {
        let inv = ci.curve_invariants().unwrap();
        for m in -2 * inv.xi..=2 * inv.xi + 4 {
            let chi = ci.h0_line(m).unwrap() as i64 - ci.h1_line(m).unwrap() as i64;
            assert_eq!(chi, m * inv.degree_of_curve - inv.genus + 1, "{name} m={m}");
        }
    }
}

fn gauss_cells() -> impl Strategy<Value = (usize, i64, i64, i64)> {
    (0usize..4, 1i64..=2, 1i64..=2).prop_map(|(k, a, b)| (k, 1, a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn gauss_columns_satisfy_euler_relation(n in 1usize..=3, e in 1i64..=2, a in 1i64..=2, b in 1i64..=2) {
        let (_, gm) = gaussmaps::gauss_pn_matrix(n, e, a, b).unwrap();
        prop_assert_eq!(gm.sections.euler_violations(&gm.matrix).unwrap(), 0);
        let r = gaussmaps::gauss_pn(n, e, a, b).unwrap();
        prop_assert!(r.arithmetic_consistent());
        prop_assert!(r.surjective);
        prop_assert!(r.bound_lower_bf06.holds);
    }

    #[test]
    fn lifts_are_irrelevant((k, e, a, b) in gauss_cells(), seed in any::<u64>()) {
        let (_, ci) = presets::curve_presets().swap_remove(k);
        let (_, gm) = gaussmaps::gauss_ci_matrix(&ci, e, a, b, GaussOptions::default()).unwrap();
        prop_assert_eq!(gm.sections.euler_violations(&gm.matrix).unwrap(), 0);
        prop_assert_eq!(gaussmaps::lift_defects(&ci, &gm, 10, seed).unwrap(), 0);
    }

    #[test]
    fn scaling_forms_keeps_dimensions((k, e, a, b) in gauss_cells(), factors in prop::collection::vec((1i64..=9, 1i64..=9, any::<bool>()), 3)) {
        let (_, ci) = presets::curve_presets().swap_remove(k);
        let fs: Vec<Rational> = factors
            .iter()
            .take(ci.forms().len())
            .map(|&(n, d, neg)| rational(if neg { -n } else { n }, d))
            .collect();
        let scaled = ci.rescaled(&fs).unwrap();
        let r1 = gaussmaps::gauss_ci(&ci, e, a, b).unwrap();
        let r2 = gaussmaps::gauss_ci(&scaled, e, a, b).unwrap();
        prop_assert_eq!(r1, r2);
    }

    #[test]
    fn reports_round_trip_through_json((k, e, a, b) in gauss_cells()) {
        let (_, ci) = presets::curve_presets().swap_remove(k);
        let opts = GaussOptions { dump_matrix: true, ..GaussOptions::default() };
        let r = gaussmaps::gauss_ci_with(&ci, e, a, b, opts).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: GaussMapReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}

#[test]
fn gauss_matrix_ranks_confirmed_mod_primes() {
    let ci = presets::plane_sextic();
    let (_, gm) = gaussmaps::gauss_ci_matrix(&ci, 1, 1, 2, GaussOptions::default()).unwrap();
    let cert = exactalg::certify_rank(&gm.matrix, &modular::random_primes(17, 4));
    assert!(cert.confirmed(), "{cert:?}");
}

#[test]
fn reruns_are_byte_identical() {
    let run = || {
        let ci = presets::canonical_genus5();
        let r = gaussmaps::gauss_ci(&ci, 1, 1, 2).unwrap();
        let checks = verify::check_kernel_eta_bound(&Instance::new("c", ci), 1, 1, 1).unwrap();
        (serde_json::to_string(&r).unwrap(), serde_json::to_string(&checks).unwrap())
    };
    assert_eq!(run(), run());
}

#[test]
fn leading_monomial_column_is_pinned() {
    // gamma(X0 (x) X1^2) on P^2 with e = 1, a = 1, b = 2
    let pn = gaussmap::cring::CompleteIntersection::projective_space(2);
    let s = Poly::term(int(1), Monomial::new(vec![1, 0, 0]));
    let t = Poly::term(int(1), Monomial::new(vec![0, 2, 0]));
    let col = gaussmaps::gamma_column(&pn, 1, 2, &s, &t).unwrap();
    let values: Vec<Rational> = col.into_iter().map(|(_, x)| x).collect();
    assert_eq!(values, vec![int(2), int(-2)]);
}
