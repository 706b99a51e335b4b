//! Property-based invariants and cross-construction integration tests.

use proptest::prelude::*;

use uninorms::{
    catalog, underlying_ops, AnnihilatorMode, GeneratorSpec, Operator, PseudoFunction, ScaleMap,
};

fn unit() -> impl Strategy<Value = f64> {
    (0.0f64..=1.0).prop_map(|x| x.clamp(0.0, 1.0))
}

fn all_generators() -> Vec<GeneratorSpec> {
    vec![
        GeneratorSpec::product_t(),
        GeneratorSpec::lukasiewicz_t(),
        GeneratorSpec::probsum_c(),
        GeneratorSpec::lukasiewicz_c(),
        GeneratorSpec::logratio(),
        GeneratorSpec::splitlog(),
        GeneratorSpec::product_t().composed(0.3, 0.6).unwrap(),
        GeneratorSpec::logratio().composed(0.7, 0.4).unwrap(),
    ]
}

proptest! {
    #[test]
    fn generator_round_trip(x in unit()) {
        for g in all_generators() {
            let back = g.pseudo_inverse(g.eval(x).unwrap());
            prop_assert!((back - x).abs() <= 1e-9, "{:?}: {x} -> {back}", g.family());
        }
    }

    #[test]
    fn tnorm_tconorm_duality(x in unit(), y in unit()) {
        // -ln t and -ln(1-t) are dual generators, as are 1-t and t
        for (t_gen, c_gen) in [
            (GeneratorSpec::product_t(), GeneratorSpec::probsum_c()),
            (GeneratorSpec::lukasiewicz_t(), GeneratorSpec::lukasiewicz_c()),
        ] {
            let t = Operator::tnorm_from_generator(t_gen).unwrap();
            let c = Operator::tconorm_from_generator(c_gen).unwrap();
            let dual = 1.0 - t.eval(1.0 - x, 1.0 - y);
            prop_assert!((c.eval(x, y) - dual).abs() <= 1e-12);
        }
    }

    #[test]
    fn neutral_element_is_neutral(x in unit()) {
        for (name, op) in catalog::catalog_uninorms() {
            let e = op.neutral();
            prop_assert!((op.eval(e, x) - x).abs() <= 1e-12, "{name} at {x}");
            prop_assert!((op.eval(x, e) - x).abs() <= 1e-12, "{name} at {x}");
        }
    }

    #[test]
    fn catalog_operators_commute(x in unit(), y in unit()) {
        for (name, op) in catalog::catalog_uninorms() {
            prop_assert!(
                (op.eval(x, y) - op.eval(y, x)).abs() <= 1e-12,
                "{name} at ({x}, {y})"
            );
        }
    }

    #[test]
    fn scale_map_round_trip(x in unit()) {
        let map = ScaleMap::new(0.1, 0.3, 0.6, 0.9, 0.6, 0.5).unwrap();
        let y = map.forward(x);
        prop_assert!((0.1..=0.9).contains(&y));
        let back = map.inverse(y).unwrap();
        prop_assert!((back - x).abs() <= 1e-12);
    }

    #[test]
    fn s_internal_is_internal(x in unit(), y in unit()) {
        let boundary =
            PseudoFunction::from_points(vec![(0.0, 1.0), (0.3, 0.6), (0.6, 0.3), (1.0, 0.0)])
                .unwrap();
        let op = Operator::s_internal(boundary).unwrap();
        let v = op.eval(x, y);
        prop_assert!(v == x || v == y);
    }

    #[test]
    fn representable_annihilator_modes(x in unit()) {
        let conj =
            Operator::representable_uninorm(GeneratorSpec::logratio(), AnnihilatorMode::Conjunctive)
                .unwrap();
        let disj =
            Operator::representable_uninorm(GeneratorSpec::logratio(), AnnihilatorMode::Disjunctive)
                .unwrap();
        prop_assert_eq!(conj.eval(x, 0.0), 0.0);
        prop_assert_eq!(disj.eval(x, 1.0), 1.0);
        if x > 0.0 && x < 1.0 {
            // the two modes differ only at the two corners
            prop_assert_eq!(conj.eval(x, 1.0), disj.eval(x, 1.0));
            prop_assert_eq!(conj.eval(x, 0.0), disj.eval(x, 0.0));
        }
    }
}

#[test]
fn underlying_ops_of_nested_sum_are_scaled_ordinal_sums() {
    // the lower restriction of the nested sum is an ordinal sum of two
    // product-like t-norms on [0, 1/2] and [1/2, 1]
    let op = catalog::nested_splitlog_sum();
    let (t_u, c_u) = underlying_ops(&op).unwrap();
    assert!(t_u.is_tnorm());
    assert!(c_u.is_tconorm());
    let product = Operator::tnorm_from_generator(GeneratorSpec::product_t()).unwrap();
    let expected =
        Operator::ordinal_sum_tnorm(vec![(0.0, 0.5, product.clone()), (0.5, 1.0, product)])
            .unwrap();
    let mut worst: f64 = 0.0;
    for i in 0..=40 {
        for j in 0..=40 {
            let (x, y) = (i as f64 / 40.0, j as f64 / 40.0);
            worst = worst.max((t_u.eval(x, y) - expected.eval(x, y)).abs());
        }
    }
    assert!(worst <= 1e-9, "worst {worst}");
}

#[test]
fn u_min_composite_agrees_with_its_parts() {
    let op = catalog::umin_product_probsum();
    let e = op.neutral();
    let product = Operator::tnorm_from_generator(GeneratorSpec::product_t()).unwrap();
    let probsum = Operator::tconorm_from_generator(GeneratorSpec::probsum_c()).unwrap();
    for i in 0..=20 {
        for j in 0..=20 {
            let (x, y) = (i as f64 / 20.0, j as f64 / 20.0);
            let expected = if x <= e && y <= e {
                e * product.eval(x / e, y / e)
            } else if x >= e && y >= e {
                e + (1.0 - e) * probsum.eval((x - e) / (1.0 - e), (y - e) / (1.0 - e))
            } else {
                x.min(y)
            };
            assert!((op.eval(x, y) - expected).abs() <= 1e-12, "at ({x}, {y})");
        }
    }
}

#[test]
fn splitlog_uninorm_doubles_the_product_below_the_neutral() {
    let op = catalog::splitlog_disjunctive();
    for i in 1..40 {
        for j in 1..40 {
            let (x, y) = (i as f64 / 80.0, j as f64 / 80.0);
            assert!((op.eval(x, y) - 2.0 * x * y).abs() <= 1e-12);
        }
    }
}
