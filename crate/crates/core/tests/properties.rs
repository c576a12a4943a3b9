use proptest::prelude::*;
use reciprocity::arith::{Field, PrimeField, Rational, RationalFunction, Rationals};
use reciprocity::cli::{run, Report};
use reciprocity::places::{divisor_of, support, valuation};
use reciprocity::poly::{is_irreducible, parse_polynomial, sturm_isolate, Polynomial, UniPoly};
use reciprocity::series::{
    germ_parametrize, hensel_lift_auto, qth_power_in_germ, series_invert, series_qth_root, SeriesRing, TruncatedSeries,
};
use reciprocity::symbols::{
    example0_driver, hilbert_symbol_q, qth_power_residue_fp, reciprocity_check_q, tame_symbol, weil_reciprocity_check,
};

const P: u64 = 13;
const N: u32 = 10;
const RINGS: [SeriesRing; 3] = [SeriesRing::Local, SeriesRing::YAdic, SeriesRing::XAdic];

fn f13() -> PrimeField {
    PrimeField::new(P)
}

fn ring() -> impl Strategy<Value = SeriesRing> {
    prop::sample::select(RINGS.to_vec())
}

fn terms() -> impl Strategy<Value = Vec<((u32, u32), u64)>> {
    prop::collection::vec(((0u32..6, 0u32..6), 0..P), 0..12)
}

fn series(ring: SeriesRing, t: Vec<((u32, u32), u64)>) -> TruncatedSeries {
    TruncatedSeries::from_terms(f13(), ring, N, t)
}

/// A unit with constant term `c != 0`. In the mixed rings the lowest layer
/// must be a unit of the coefficient ring, so it is kept constant.
fn unit(ring: SeriesRing, c: u64, t: Vec<((u32, u32), u64)>) -> TruncatedSeries {
    let rest = t.into_iter().filter(|&((i, j), _)| match ring {
        SeriesRing::Local => (i, j) != (0, 0),
        SeriesRing::YAdic => j > 0,
        SeriesRing::XAdic => i > 0,
    });
    series(ring, rest.chain([((0, 0), c)]).collect())
}

fn fp_poly(field: PrimeField) -> impl Strategy<Value = UniPoly<PrimeField>> {
    let p = field.modulus();
    prop::collection::vec(0..p, 1..6).prop_map(move |c| UniPoly::new(field, c))
}

fn nonzero_fp_poly(field: PrimeField) -> impl Strategy<Value = UniPoly<PrimeField>> {
    fp_poly(field).prop_filter("nonzero", |a| !a.is_zero())
}

fn bivariate() -> impl Strategy<Value = Polynomial<PrimeField>> {
    terms().prop_map(|t| Polynomial::from_terms(f13(), t))
}

fn nonzero_int() -> impl Strategy<Value = i64> {
    (-2000i64..2000).prop_filter("nonzero", |&n| n != 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_ring_laws(r in ring(), a in terms(), b in terms(), c in terms()) {
        let (a, b, c) = (series(r, a), series(r, b), series(r, c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverse_and_roots(r in ring(), c in 1..P, t in terms(), q in prop::sample::select(vec![2u32, 3])) {
        let u = unit(r, c, t);
        let one = TruncatedSeries::constant(f13(), r, N, 1);
        prop_assert_eq!(&u * &series_invert(&u).unwrap(), one);
        let w = u.pow(q);
        prop_assert_eq!(series_qth_root(&w, q, None).unwrap().pow(q), w);
    }

    #[test]
    fn precision_is_monotone(r in ring(), c in 1..P, t in terms()) {
        let u = unit(r, c, t);
        let low = series_invert(&u.truncate(5)).unwrap();
        prop_assert_eq!(series_invert(&u).unwrap().truncate(5), low);
    }

    #[test]
    fn hensel_factors_multiply_back(a1 in 0..P, a2 in 0..P, h1 in fp_poly(f13()), h2 in fp_poly(f13())) {
        prop_assume!(a1 != a2);
        let k = f13();
        let factor = |a: u64, h: &UniPoly<PrimeField>| {
            let tail = h.coeffs().iter().enumerate().map(|(j, &c)| ((0, j as u32 + 1), c));
            Polynomial::from_terms(k, [((1, 0), 1), ((0, 0), k.neg(&a))].into_iter().chain(tail))
        };
        let g = &factor(a1, &h1) * &factor(a2, &h2);
        let lift = hensel_lift_auto(&g, SeriesRing::YAdic, N).unwrap();
        prop_assert_eq!(lift.factors.len(), 2);
        prop_assert_eq!(lift.product(), TruncatedSeries::from_polynomial(&g, SeriesRing::YAdic, N));
    }

    #[test]
    fn smooth_germs_parametrize(lin in (0..P, 0..P), t in terms()) {
        prop_assume!(lin != (0, 0));
        let k = f13();
        let higher = t.into_iter().filter(|&((i, j), _)| i + j >= 2);
        let g = Polynomial::from_terms(k, [((1, 0), lin.0), ((0, 1), lin.1)].into_iter().chain(higher));
        for branch in germ_parametrize(&g, None, N).unwrap() {
            prop_assert!(branch.residual().is_zero());
        }
    }

    #[test]
    fn node_germs_split(s in 1..P, w in fp_poly(f13())) {
        let k = f13();
        let w0 = k.mul(&s, &s);
        let tail = w.coeffs().iter().enumerate().map(|(i, &c)| ((i as u32 + 3, 0), k.neg(&c)));
        let g = Polynomial::from_terms(k, [((0, 2), 1), ((2, 0), k.neg(&w0))].into_iter().chain(tail));
        let branches = germ_parametrize(&g, None, N).unwrap();
        prop_assert_eq!(branches.len(), 2);
        prop_assert!(branches.iter().all(|b| b.residual().is_zero()));
    }

    #[test]
    fn germ_verdict_is_stable_in_precision(lin in 1..P, t in terms()) {
        let k = f13();
        let higher = t.into_iter().filter(|&((i, j), _)| i + j >= 2);
        let g = Polynomial::from_terms(k, [((0, 1), lin)].into_iter().chain(higher));
        let f = Polynomial::var(k, reciprocity::poly::Var::X);
        let at = |n| qth_power_in_germ(&f, &g, SeriesRing::Local, 2, n).map(|a| a.verdict);
        prop_assert_eq!(at(8).ok(), at(16).ok());
    }

    #[test]
    fn valuations_add(a in nonzero_fp_poly(PrimeField::new(5)), b in nonzero_fp_poly(PrimeField::new(5))) {
        let (ra, rb) = (RationalFunction::from_poly(a.clone()), RationalFunction::from_poly(b.clone()));
        let ab = ra.mul(&rb);
        for place in support(&[&a, &b]).unwrap() {
            prop_assert_eq!(valuation(&ab, &place).unwrap(), valuation(&ra, &place).unwrap() + valuation(&rb, &place).unwrap());
        }
        let quotient = RationalFunction::new(a, b);
        prop_assert_eq!(divisor_of(&quotient).unwrap().degree(), 0);
    }

    #[test]
    fn residue_is_multiplicative(f1 in nonzero_fp_poly(f13()), f2 in nonzero_fp_poly(f13()), g in nonzero_fp_poly(f13())) {
        let g = g.monic();
        prop_assume!(g.degree().unwrap_or(0) > 0 && is_irreducible(&g));
        prop_assume!(f1.gcd(&g).is_one() && f2.gcd(&g).is_one());
        let r = |f: &UniPoly<PrimeField>| qth_power_residue_fp(f, &g, 2).unwrap();
        prop_assert_eq!(r(&(&f1 * &f2)), r(&f1) * r(&f2));
    }

    #[test]
    fn balanced_ramification_over_f_p(f in fp_poly(PrimeField::new(7)), omega in prop::sample::select(vec![3u64, 5])) {
        // 3 and 5 are not cubes in F_7.
        let report = example0_driver(3, 7, omega, &f).unwrap();
        prop_assert!(report.all_hold(), "{:?}", report);
    }

    #[test]
    fn tame_symbols_are_antisymmetric(a in nonzero_fp_poly(f13()), b in nonzero_fp_poly(f13())) {
        for place in support(&[&a, &b]).unwrap() {
            let ab = tame_symbol(&a, &b, &place).unwrap();
            let ba = tame_symbol(&b, &a, &place).unwrap();
            prop_assert!(ab.mul(&ba).is_one());
        }
        prop_assert!(weil_reciprocity_check(&a, &b).unwrap().satisfied);
    }

    #[test]
    fn hilbert_product_is_one(a in nonzero_int(), b in nonzero_int(), da in 1i64..50, db in 1i64..50) {
        let (a, b) = (Rational::new(a.into(), da.into()), Rational::new(b.into(), db.into()));
        let report = reciprocity_check_q(&a, &b).unwrap();
        prop_assert!(report.satisfied);
        for place in [2u64, 3, 5] {
            let place = reciprocity::places::rational::RationalPlace::prime(place);
            prop_assert_eq!(hilbert_symbol_q(&a, &b, &place).unwrap(), hilbert_symbol_q(&b, &a, &place).unwrap());
        }
    }

    #[test]
    fn polynomials_print_and_parse_back(g in bivariate()) {
        prop_assert_eq!(parse_polynomial(&g.to_string(), &f13()).unwrap(), g);
    }

    #[test]
    fn sturm_isolates_each_rational_root(roots in prop::collection::btree_set(-40i64..40, 1..6)) {
        let y = UniPoly::x(Rationals);
        let g = roots.iter().fold(UniPoly::one(Rationals), |acc, &r| {
            &acc * &(&y - &UniPoly::constant(Rationals, Rational::from_integer(r.into())))
        });
        let isolated = sturm_isolate(&g);
        prop_assert_eq!(isolated.len(), roots.len());
        for (root, &r) in isolated.iter().zip(&roots) {
            prop_assert!(root.contains(&Rational::from_integer(r.into())));
        }
    }

    #[test]
    fn json_reports_are_deterministic(a in 2i64..500, b in 2i64..500) {
        let argv = ["reciprocity", "--json", "reciprocity", "qr", &a.to_string(), &b.to_string()];
        let (first, second) = (run(argv), run(argv));
        prop_assert_eq!(&first, &second);
        let report: Report = serde_json::from_str(&first.stdout).unwrap();
        let again = serde_json::to_string_pretty(&report).unwrap();
        prop_assert_eq!(again.trim(), first.stdout.trim());
    }
}
