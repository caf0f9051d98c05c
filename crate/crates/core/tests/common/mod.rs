//! Brute-force oracles shared by the integration tests. They work straight
//! from the multiplication table and never consult the subgroup lattice.

#![allow(dead_code)]

use std::collections::BTreeSet;

use capf_core::{
    build_group, Builtin, FiniteGroup, GroupSpec, SubgroupLattice, DEFAULT_LATTICE_CAP, DEFAULT_ORDER_CAP,
};

pub type Set = BTreeSet<usize>;

pub fn group(name: &str) -> FiniteGroup {
    let b: Builtin = name.parse().unwrap_or_else(|e| panic!("{name}: {e}"));
    build_group(&GroupSpec::Builtin(b), DEFAULT_ORDER_CAP).unwrap()
}

pub fn lattice(g: &FiniteGroup) -> SubgroupLattice {
    capf_core::enumerate_subgroups(g, DEFAULT_LATTICE_CAP).unwrap()
}

pub fn members(l: &SubgroupLattice, i: usize) -> Set {
    l.get(i).members().iter().copied().collect()
}

pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Set> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let class: Set = (0..n).map(|y| g.mul(g.mul(g.inv(y), x), y)).collect();
        for &c in &class {
            seen[c] = true;
        }
        out.push(class);
    }
    out
}

pub fn is_closed(g: &FiniteGroup, s: &Set) -> bool {
    s.iter().all(|&a| s.iter().all(|&b| s.contains(&g.mul(a, b))))
}

/// Normal subgroups as unions of conjugacy classes closed under the product.
/// Exponential in the number of classes; callers keep that small.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Set> {
    let classes = conjugacy_classes(g);
    let rest: Vec<&Set> = classes.iter().filter(|c| !c.contains(&0)).collect();
    assert!(rest.len() < 24, "too many classes for the oracle");
    let mut out = Vec::new();
    for mask in 0u32..(1 << rest.len()) {
        let mut s: Set = [0].into();
        for (i, c) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.extend(c.iter().copied());
            }
        }
        if g.order().is_multiple_of(s.len()) && is_closed(g, &s) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Every maximal chain of normal subgroups from 1 to G, each step a cover.
pub fn chief_series(g: &FiniteGroup) -> Vec<Vec<Set>> {
    let normals = normal_subgroups(g);
    let below = |a: &Set, b: &Set| a.len() < b.len() && a.is_subset(b);
    let covers: Vec<Vec<usize>> = normals
        .iter()
        .map(|a| {
            (0..normals.len())
                .filter(|&j| below(a, &normals[j]) && !normals.iter().any(|c| below(a, c) && below(c, &normals[j])))
                .collect()
        })
        .collect();
    let top = normals.len() - 1;
    let mut out = Vec::new();
    let mut stack = vec![vec![0usize]];
    while let Some(path) = stack.pop() {
        let last = *path.last().unwrap();
        if last == top {
            out.push(path.iter().map(|&i| normals[i].clone()).collect());
            continue;
        }
        for &next in &covers[last] {
            let mut p = path.clone();
            p.push(next);
            stack.push(p);
        }
    }
    out
}

pub fn product(g: &FiniteGroup, a: &Set, b: &Set) -> Set {
    a.iter().flat_map(|&x| b.iter().map(move |&y| g.mul(x, y))).collect()
}

/// Chief factors `(lower, upper)` of the subgroup `h`, from its normal
/// subgroups among `candidates`.
pub fn chief_factors_of(g: &FiniteGroup, h: &Set, candidates: &[Set]) -> Vec<(Set, Set)> {
    let normal: Vec<&Set> = candidates
        .iter()
        .filter(|k| k.is_subset(h))
        .filter(|k| {
            k.iter()
                .all(|&x| h.iter().all(|&y| k.contains(&g.mul(g.mul(g.inv(y), x), y))))
        })
        .collect();
    let below = |a: &Set, b: &Set| a.len() < b.len() && a.is_subset(b);
    let mut out = Vec::new();
    for &a in &normal {
        for &b in &normal {
            if below(a, b) && !normal.iter().any(|c| below(a, c) && below(c, b)) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

pub fn covers_or_avoids(g: &FiniteGroup, a: &Set, lower: &Set, upper: &Set) -> bool {
    let covers = product(g, a, upper) == product(g, a, lower);
    let avoids = a.intersection(upper).count() == a.intersection(lower).count();
    covers || avoids
}

pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
