//! Invariants checked on random inputs.

use lie_double::catalog::Catalog;
use lie_double::geometry::{exp_subgroup, group_element, orthogonality_defect, weierstrass, Generator};
use lie_double::num::{parse_rational, rat, sin_over, tan_over, Jet, Poly, Ring};
use lie_double::poisson::{sklyanin, CoordinateFunction};
use lie_double::suites::{run, Suite, SuiteConfig};
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = f64> {
    -0.8..0.8
}

fn eta() -> impl Strategy<Value = f64> {
    prop_oneof![-1.0..-1e-3, 1e-3..1.0]
}

fn point() -> impl Strategy<Value = [f64; 6]> {
    prop::array::uniform6(coord())
}

fn function() -> impl Strategy<Value = CoordinateFunction> {
    prop::sample::select(CoordinateFunction::basic())
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..=3, 0u32..3, 0u32..3), 0..4).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (c, a, b)| {
            let mut t = Poly::integer(c);
            for _ in 0..a {
                t = t * Poly::var("eta");
            }
            for _ in 0..b {
                t = t * Poly::var("xi");
            }
            acc + t
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomials_form_a_ring(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() - a, Poly::zero());
    }

    #[test]
    fn decimal_literals_parse_exactly(n in -1_000_000i64..1_000_000, k in 0u32..6) {
        let d = 10i64.pow(k);
        let (q, r) = (n.abs() / d, n.abs() % d);
        let sign = if n < 0 { "-" } else { "" };
        let text = if k == 0 { format!("{sign}{q}") } else { format!("{sign}{q}.{r:0width$}", width = k as usize) };
        prop_assert_eq!(parse_rational(&text), Some(rat(n, d)));
    }

    #[test]
    fn series_branches_agree(e in 0.05f64..1.0, t in 0.3f64..0.8) {
        // Both sides of the |eta t| = 0.5 switch agree with the direct formula.
        let direct = (e * t).sin() / e;
        prop_assert!((sin_over(&e, &t) - direct).abs() <= 1e-15 * direct.abs().max(1.0));
        let direct = (e * t).tan() / e;
        prop_assert!((tan_over(&e, &t) - direct).abs() <= 1e-14 * direct.abs().max(1.0));
    }

    #[test]
    fn eta_jets_sum_to_float_values(x in prop::array::uniform3(coord()), e in -0.1f64..0.1) {
        let jet = weierstrass(&x.map(Jet::constant), &Jet::variable(8));
        let float = weierstrass(&x, &e);
        for i in 0..4 {
            let sum: f64 = (0..=8).map(|k| jet.0[i].coeff(k) * e.powi(k as i32)).sum();
            prop_assert!((sum - float.0[i]).abs() < 1e-12, "{} vs {}", sum, float.0[i]);
        }
    }

    #[test]
    fn group_elements_preserve_the_form(c in point(), e in eta()) {
        let t = group_element(&c, &e);
        prop_assert!(orthogonality_defect(t.matrix(), &e).max_abs() <= 1e-12);
    }

    #[test]
    fn subgroups_are_one_parameter(s in coord(), t in coord(), e in eta(), g in prop::sample::select(Generator::ALL.to_vec())) {
        let lhs = exp_subgroup(g, &s, &e).mul(&exp_subgroup(g, &t, &e));
        let rhs = exp_subgroup(g, &(s + t), &e);
        prop_assert!(lhs.sub(&rhs).max_abs() <= 1e-12);
    }

    #[test]
    fn so22_brackets_are_antisymmetric_and_jacobi(
        v in prop::array::uniform3(prop::array::uniform6(-3i64..=3)),
        e in -4i64..=4,
    ) {
        let alg = Catalog::builtin().algebra("so22_table").unwrap().substitute("eta", &Poly::constant(rat(e, 2)));
        let [a, b, c] = v.map(|w| w.map(Poly::integer).to_vec());
        let br = |x: &[Poly], y: &[Poly]| alg.bracket(x, y).unwrap();
        let zero = vec![Poly::zero(); 6];
        let sum: Vec<Poly> = br(&a, &b).iter().zip(br(&b, &a)).map(|(p, q)| p.clone() + q).collect();
        prop_assert_eq!(sum, zero.clone());
        let j1 = br(&a, &br(&b, &c));
        let j2 = br(&b, &br(&c, &a));
        let j3 = br(&c, &br(&a, &b));
        let jac: Vec<Poly> = (0..6).map(|i| j1[i].clone() + j2[i].clone() + j3[i].clone()).collect();
        prop_assert_eq!(jac, zero);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn brackets_are_antisymmetric_and_linear_in_xi(c in point(), e in eta(), f in function(), g in function()) {
        prop_assume!((e * c[0]).abs() <= 1.2);
        let a = sklyanin(&f, &g, &c, &e, &1.0).unwrap();
        prop_assert_eq!(sklyanin(&g, &f, &c, &e, &1.0).unwrap(), -a);
        prop_assert_eq!(sklyanin(&f, &g, &c, &e, &2.0).unwrap(), 2.0 * a);
    }

    #[test]
    fn casimir_is_central(c in point(), e in eta(), xi in prop::sample::select(vec![-2.0, -1.0, 1.0, 2.0]), u in function()) {
        prop_assume!((e * c[0]).abs() <= 1.2);
        prop_assert!(sklyanin(&CoordinateFunction::Casimir, &u, &c, &e, &xi).unwrap().abs() <= 1e-9);
    }

    #[test]
    fn xx_brackets_ignore_theta(c in point(), th in prop::array::uniform3(coord()), e in eta()) {
        prop_assume!((e * c[0]).abs() <= 1.2);
        let moved = [c[0], c[1], c[2], th[0], th[1], th[2]];
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let (f, g) = (CoordinateFunction::X(i), CoordinateFunction::X(j));
            let a = sklyanin(&f, &g, &c, &e, &1.0).unwrap();
            let b = sklyanin(&f, &g, &moved, &e, &1.0).unwrap();
            prop_assert!((a - b).abs() <= 1e-10);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn reports_depend_only_on_the_seed(seed in any::<u64>()) {
        let cat = Catalog::builtin();
        let cfg = SuiteConfig { seed, samples: 5 };
        let a = run(&cat, Suite::Poisson, &cfg).to_json_lines();
        prop_assert_eq!(&a, &run(&cat, Suite::Poisson, &cfg).to_json_lines());
    }
}

#[test]
fn catalog_text_round_trips() {
    let cat = Catalog::builtin();
    let again = Catalog::parse(&cat.to_text()).unwrap();
    assert_eq!(again.entries(), cat.entries());
}
