mod common;

use capf_core::verify::generate_corpus;
use capf_core::{build_group, Builtin, FiniteGroup, GroupSpec, DEFAULT_ORDER_CAP};
use common::group;
use proptest::prelude::*;

#[test]
fn corpus_tables_satisfy_the_axioms() {
    for spec in generate_corpus(48, DEFAULT_ORDER_CAP).unwrap().entries {
        let g = build_group(&spec, DEFAULT_ORDER_CAP).unwrap();
        assert!(g.check_axioms(), "{}", g.name());
        assert_eq!(
            g.element(0),
            &capf_core::GroupElementRep::identity(g.element(0).carrier())
        );
    }
}

#[test]
fn family_orders() {
    let cases = [
        ("C1", 1),
        ("C12", 12),
        ("D8", 8),
        ("D20", 20),
        ("Q8", 8),
        ("Q12", 12),
        ("S5", 120),
        ("A5", 60),
        ("A6", 360),
        ("SL(2,3)", 24),
        ("SL(2,5)", 120),
        ("GL(2,3)", 48),
        ("SL(2,7)", 336),
        ("C7:C3", 21),
        ("C13:C4", 52),
        ("S3xC4", 24),
        ("Q8xC2xC2", 32),
    ];
    for (name, order) in cases {
        let b: Builtin = name.parse().unwrap();
        assert_eq!(b.order(), order, "{name} declared order");
        assert_eq!(group(name).order(), order, "{name} built order");
    }
}

#[test]
fn abelian_flags() {
    for (name, abelian) in [
        ("C6", true),
        ("C2xC2xC2", true),
        ("S3", false),
        ("Q8", false),
        ("C5:C4", false),
    ] {
        assert_eq!(group(name).is_abelian(), abelian, "{name}");
    }
}

#[test]
fn quaternion_from_generator_file_matches_builtin() {
    let text = "name Q8-matrices\nmatrix 3\n0 1 2 0\n1 1 1 2\n";
    let spec = GroupSpec::from_file_text(text).unwrap();
    let g = build_group(&spec, DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(g.name(), "Q8-matrices");
    assert_eq!(g.order_histogram(), group("Q8").order_histogram());
}

#[test]
fn perm_generator_file() {
    let spec = GroupSpec::from_file_text("name S3-perm\nperm 3\n(0 1 2)\n(0 1)\n").unwrap();
    assert_eq!(build_group(&spec, DEFAULT_ORDER_CAP).unwrap().order(), 6);
}

#[test]
fn bad_descriptions_are_rejected() {
    for name in ["", "X5", "C0", "Q10", "SL(2,4)", "C7:C4", "S9"] {
        assert!(name.parse::<Builtin>().is_err(), "{name} should not parse");
    }
    assert!(GroupSpec::from_file_text("matrix 3\n1 0 0 1\n").is_err());
    assert!(GroupSpec::from_file_text("name bad\nmatrix 4\n1 0 0 1\n").is_err());
}

#[test]
fn order_cap_is_enforced() {
    let spec = GroupSpec::Builtin("S6".parse().unwrap());
    assert!(matches!(
        build_group(&spec, 100),
        Err(capf_core::Error::ClosureExceedsCap(100))
    ));
}

#[test]
fn quotient_by_centre_of_sl25_is_a5() {
    let g = group("SL(2,5)");
    let q = g.quotient(&g.center()).unwrap();
    assert_eq!(q.as_group().order(), 60);
    assert_eq!(q.as_group().order_histogram(), group("A5").order_histogram());
}

#[test]
fn quotient_by_non_normal_fails() {
    let g = group("S3");
    let t = g.subgroup_generated(&[(0..6).find(|&x| g.element_order(x) == 2).unwrap()]);
    assert!(matches!(g.quotient(&t), Err(capf_core::Error::NotNormal)));
}

fn fixtures() -> Vec<FiniteGroup> {
    ["S4", "SL(2,3)", "D10xC3", "Q8xC2", "C7:C3"]
        .iter()
        .map(|n| group(n))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjugation_is_an_automorphism(which in 0usize..5, x in 0usize..1000, y in 0usize..1000, z in 0usize..1000) {
        let gs = fixtures();
        let g = &gs[which];
        let (x, y, z) = (x % g.order(), y % g.order(), z % g.order());
        prop_assert_eq!(g.conj(g.mul(x, y), z), g.mul(g.conj(x, z), g.conj(y, z)));
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.inv(g.mul(x, y)), g.mul(g.inv(y), g.inv(x)));
        prop_assert_eq!(g.mul(x, y), g.mul(y, g.mul(x, g.commutator(x, y))));
    }

    #[test]
    fn element_orders_divide_the_group_order(which in 0usize..5, x in 0usize..1000) {
        let gs = fixtures();
        let g = &gs[which];
        let x = x % g.order();
        let k = g.element_order(x);
        prop_assert_eq!(g.order() % k, 0);
        prop_assert_eq!(g.pow(x, k), 0);
        prop_assert_eq!(g.subgroup_generated(&[x]).order(), k);
    }

    #[test]
    fn projection_is_a_homomorphism(x in 0usize..24, y in 0usize..24) {
        let g = group("SL(2,3)");
        let q = g.quotient(&g.center()).unwrap();
        let (px, py) = (q.project(x), q.project(y));
        prop_assert_eq!(q.project(g.mul(x, y)), q.as_group().mul(px, py));
        prop_assert!(q.lift(px).contains(&x));
        prop_assert_eq!(q.lift(px).len(), 2);
    }
}
