mod common;

use capf_core::chief::classify;
use capf_core::fusion::{is_strongly_p_embedded, FusionSystem};
use capf_core::verify::generate_corpus;
use capf_core::{build_group, FiniteGroup, SubgroupLattice, DEFAULT_LATTICE_CAP, DEFAULT_ORDER_CAP};
use common::{group, lattice, prime_factors};

fn corpus(max: usize) -> Vec<(FiniteGroup, SubgroupLattice)> {
    generate_corpus(max, DEFAULT_ORDER_CAP)
        .unwrap()
        .entries
        .iter()
        .map(|s| {
            let g = build_group(s, DEFAULT_ORDER_CAP).unwrap();
            let l = lattice(&g);
            (g, l)
        })
        .collect()
}

#[test]
fn strongly_closed_subgroups_are_normal_in_s() {
    for (g, l) in corpus(60) {
        for p in prime_factors(g.order()) {
            let fs = FusionSystem::new(&g, &l, p);
            let s = l.get(fs.sylow());
            let closed = fs.strongly_closed_subgroups();
            assert!(closed.contains(&l.trivial()) && closed.contains(&fs.sylow()));
            for q in closed {
                assert!(g.is_normal_in(l.get(q), s), "{} p={p} {}", g.name(), l.label(q));
            }
        }
    }
}

#[test]
fn p_nilpotent_fusion_is_inner() {
    let mut cases = 0;
    for (g, l) in corpus(60) {
        let flags = classify(&g, &l);
        for p in prime_factors(g.order()) {
            if !flags.is_p_nilpotent(p) {
                continue;
            }
            cases += 1;
            let fs = FusionSystem::new(&g, &l, p);
            let s = l.get(fs.sylow());
            let normal_in_s: Vec<usize> = fs
                .subgroups_of_s()
                .into_iter()
                .filter(|&q| g.is_normal_in(l.get(q), s))
                .collect();
            assert_eq!(fs.strongly_closed_subgroups(), normal_in_s, "{} p={p}", g.name());
        }
    }
    assert!(cases > 100);
}

#[test]
fn p_supersolvable_groups_have_supersolvable_fusion() {
    for (g, l) in corpus(60) {
        let flags = classify(&g, &l);
        for p in prime_factors(g.order()) {
            if flags.is_p_supersolvable(p) {
                assert!(FusionSystem::new(&g, &l, p).is_supersolvable(), "{} p={p}", g.name());
            }
        }
    }
}

#[test]
fn local_supersolvability_lifts() {
    // if every member of E* has a supersolvable normalizer system, so does F
    let mut premise = 0;
    for (g, l) in corpus(60) {
        for p in prime_factors(g.order()) {
            let fs = FusionSystem::new(&g, &l, p);
            let star = fs.essential_star_set(DEFAULT_LATTICE_CAP).unwrap();
            assert!(star.contains(&fs.sylow()));
            let local = star.iter().all(|&q| {
                let nf = fs.normalizer_fusion(q, DEFAULT_LATTICE_CAP).unwrap();
                nf.fusion().is_supersolvable()
            });
            if local {
                premise += 1;
                assert!(fs.is_supersolvable(), "{} p={p}", g.name());
            }
        }
    }
    assert!(premise > 0);
}

#[test]
fn essentials_of_s4_at_two() {
    let g = group("S4");
    let l = lattice(&g);
    let fs = FusionSystem::new(&g, &l, 2);
    let star = fs.essential_star_set(DEFAULT_LATTICE_CAP).unwrap();
    let orders: Vec<usize> = star.iter().map(|&q| l.order_of(q)).collect();
    assert_eq!(orders, [4, 8]);
    let v4 = star[0];
    assert!(l.is_normal(v4), "the essential Klein subgroup is the normal one");
    assert!(fs.is_centric(v4) && fs.is_fully_normalized(v4));
    assert_eq!(fs.aut_f(v4).order(), 6);
    assert_eq!(fs.out_f(v4).order(), 6);
}

#[test]
fn centric_and_fully_normalized() {
    let g = group("D8");
    let l = lattice(&g);
    let fs = FusionSystem::new(&g, &l, 2);
    assert!(fs.is_centric(fs.sylow()));
    let z = l.of_order(2).iter().copied().find(|&i| l.is_normal(i)).unwrap();
    assert!(!fs.is_centric(z));
    assert!(fs.is_fully_normalized(z));

    // in S4 the non-central double-transposition subgroups of S have a
    // smaller normalizer in S than the central one
    let g = group("S4");
    let l = lattice(&g);
    let fs = FusionSystem::new(&g, &l, 2);
    let not_full: Vec<usize> = fs
        .subgroups_of_s()
        .into_iter()
        .filter(|&q| !fs.is_fully_normalized(q))
        .collect();
    assert!(!not_full.is_empty());
    for q in not_full {
        assert!(matches!(
            fs.normalizer_fusion(q, DEFAULT_LATTICE_CAP),
            Err(capf_core::Error::NotFullyNormalized)
        ));
    }
}

#[test]
fn normalizer_fusion_fixtures() {
    let g = group("A5");
    let l = lattice(&g);
    let fs = FusionSystem::new(&g, &l, 5);
    let nf = fs.normalizer_fusion(fs.sylow(), DEFAULT_LATTICE_CAP).unwrap();
    assert_eq!(nf.group.order(), 10);
    assert_eq!(nf.lattice.order_of(nf.sylow), 5);
    assert!(nf.fusion().is_supersolvable());

    // a subgroup normal in G has N_G(Q) = G
    let g = group("S4");
    let l = lattice(&g);
    let fs = FusionSystem::new(&g, &l, 2);
    let v4 = *l.of_order(4).iter().find(|&&i| l.is_normal(i)).unwrap();
    let nf = fs.normalizer_fusion(v4, DEFAULT_LATTICE_CAP).unwrap();
    assert_eq!(nf.group.order(), 24);
    assert_eq!(nf.fusion().is_supersolvable(), fs.is_supersolvable());
}

#[test]
fn strongly_embedded_subgroups() {
    let g = group("S3");
    let l = lattice(&g);
    assert!(is_strongly_p_embedded(&g, l.get(l.of_order(2)[0]), 2));
    assert!(!is_strongly_p_embedded(&g, l.get(l.of_order(3)[0]), 2));
    let g = group("S4");
    let l = lattice(&g);
    assert!(!is_strongly_p_embedded(&g, l.get(l.of_order(8)[0]), 2));
    let g = group("A5");
    let l = lattice(&g);
    // two distinct point stabilisers meet in a subgroup of order 3
    assert!(is_strongly_p_embedded(&g, l.get(l.of_order(12)[0]), 2));
}
