//! Subgroup lattices and the characteristic subgroups read off them.

use std::collections::{BTreeMap, HashMap};

use fixedbitset::FixedBitSet;

use crate::arith::{is_power_of, p_part, prime_divisors};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

pub const DEFAULT_LATTICE_CAP: usize = 400;

/// `(order, k)`: the k-th subgroup (0-based) of that order in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubgroupLabel {
    pub order: usize,
    pub index: usize,
}

impl std::fmt::Display for SubgroupLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}#{}", self.order, self.index)
    }
}

/// Every subgroup of a group, sorted canonically (by order, then
/// lexicographically on sorted members). Index 0 is the trivial subgroup and
/// the last index is the whole group.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    normal: Vec<bool>,
    index: HashMap<FixedBitSet, usize>,
    by_order: BTreeMap<usize, Vec<usize>>,
}

/// Complete subgroup list by cyclic extension: starting from the cyclic
/// subgroups, every known subgroup is grown by each cyclic subgroup it does
/// not contain until no new subgroup appears.
pub fn enumerate_subgroups(g: &FiniteGroup, lattice_cap: usize) -> Result<SubgroupLattice> {
    if g.order() > lattice_cap {
        return Err(Error::LatticeExceedsCap {
            order: g.order(),
            limit: lattice_cap,
        });
    }
    let mut known: HashMap<FixedBitSet, Subgroup> = HashMap::new();
    let trivial = g.trivial_subgroup();
    known.insert(trivial.bits().clone(), trivial);
    let mut cyclic_gens = Vec::new();
    for x in 0..g.order() {
        let c = g.subgroup_generated(&[x]);
        if !known.contains_key(c.bits()) {
            cyclic_gens.push(x);
            known.insert(c.bits().clone(), c);
        }
    }
    let mut frontier: Vec<Subgroup> = known.values().cloned().collect();
    frontier.sort();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for &x in &cyclic_gens {
                if h.contains(x) {
                    continue;
                }
                let k = g.extend(h, x);
                if !known.contains_key(k.bits()) {
                    known.insert(k.bits().clone(), k.clone());
                    next.push(k);
                }
            }
        }
        next.sort();
        frontier = next;
    }
    let mut subgroups: Vec<Subgroup> = known.into_values().collect();
    subgroups.sort();
    Ok(SubgroupLattice::from_sorted(g, subgroups))
}

impl SubgroupLattice {
    fn from_sorted(g: &FiniteGroup, subgroups: Vec<Subgroup>) -> Self {
        let normal = subgroups.iter().map(|h| g.is_normal(h)).collect();
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| (h.bits().clone(), i))
            .collect();
        let mut by_order: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, h) in subgroups.iter().enumerate() {
            by_order.entry(h.order()).or_default().push(i);
        }
        SubgroupLattice {
            subgroups,
            normal,
            index,
            by_order,
        }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.bits()).copied()
    }

    pub fn index_of_bits(&self, bits: &FixedBitSet) -> Option<usize> {
        self.index.get(bits).copied()
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn order_of(&self, i: usize) -> usize {
        self.subgroups[i].order()
    }

    /// Normal in the whole group.
    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn normal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.normal[i]).collect()
    }

    pub fn of_order(&self, order: usize) -> &[usize] {
        self.by_order.get(&order).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_order.keys().copied()
    }

    pub fn label(&self, i: usize) -> SubgroupLabel {
        let order = self.order_of(i);
        let index = self.of_order(order).iter().position(|&j| j == i).unwrap();
        SubgroupLabel { order, index }
    }

    pub fn by_label(&self, label: SubgroupLabel) -> Option<usize> {
        self.of_order(label.order).get(label.index).copied()
    }

    pub fn contains(&self, big: usize, small: usize) -> bool {
        self.subgroups[small].is_subgroup_of(&self.subgroups[big])
    }

    /// Every subgroup containing `a`, `a` and the whole group included.
    pub fn overgroups(&self, a: usize) -> Vec<usize> {
        (a..self.len()).filter(|&h| self.contains(h, a)).collect()
    }

    /// Every subgroup of `h`, `h` and the trivial subgroup included.
    pub fn subgroups_of(&self, h: usize) -> Vec<usize> {
        (0..=h).filter(|&k| self.contains(h, k)).collect()
    }

    /// Maximal proper subgroups of `h`.
    pub fn maximal_subgroups_of(&self, h: usize) -> Vec<usize> {
        let proper: Vec<usize> = (0..h).filter(|&k| self.contains(h, k)).collect();
        proper
            .iter()
            .copied()
            .filter(|&k| !proper.iter().any(|&m| m != k && self.contains(m, k)))
            .collect()
    }

    /// Subgroups of `ambient` normalized by `ambient`.
    pub fn normal_in(&self, g: &FiniteGroup, ambient: usize) -> Vec<usize> {
        let amb = &self.subgroups[ambient];
        (0..=ambient)
            .filter(|&k| self.contains(ambient, k) && g.is_normal_in(&self.subgroups[k], amb))
            .collect()
    }

    /// Canonically least subgroup of order `p^a`, `p^a || |G|`.
    pub fn sylow(&self, p: usize) -> usize {
        let target = p_part(self.order_of(self.whole()), p);
        self.of_order(target)[0]
    }

    /// Join of two lattice members, looked up in the lattice.
    pub fn join(&self, g: &FiniteGroup, a: usize, b: usize) -> usize {
        let j = g.join(&self.subgroups[a], &self.subgroups[b]);
        self.index_of(&j).expect("lattice is complete")
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        let mut bits = self.subgroups[a].bits().clone();
        bits.intersect_with(self.subgroups[b].bits());
        self.index_of_bits(&bits).expect("lattice is complete")
    }

    pub fn is_cyclic(&self, g: &FiniteGroup, i: usize) -> bool {
        let h = &self.subgroups[i];
        h.members().iter().any(|&x| g.element_order(x) == h.order())
    }

    pub fn is_abelian(&self, g: &FiniteGroup, i: usize) -> bool {
        let gens = self.subgroups[i].generators();
        gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Cyclic subgroups of `within` of the given order.
    pub fn cyclic_of_order(&self, g: &FiniteGroup, within: usize, order: usize) -> Vec<usize> {
        self.of_order(order)
            .iter()
            .copied()
            .filter(|&k| self.contains(within, k) && self.is_cyclic(g, k))
            .collect()
    }

    /// Subgroups of `within` of the given order.
    pub fn of_order_within(&self, within: usize, order: usize) -> Vec<usize> {
        self.of_order(order)
            .iter()
            .copied()
            .filter(|&k| self.contains(within, k))
            .collect()
    }
}

/// Deterministic Sylow p-subgroup without a lattice: grow a p-subgroup by the
/// least-indexed normalizing element whose p-th power falls inside it.
pub fn sylow_subgroup(g: &FiniteGroup, p: usize) -> Subgroup {
    let target = p_part(g.order(), p);
    let mut s = g.trivial_subgroup();
    while s.order() < target {
        let n = g.normalizer(&s);
        let x = n
            .members()
            .iter()
            .copied()
            .find(|&x| !s.contains(x) && s.contains(g.pow(x, p)))
            .expect("Sylow's theorem: a p-subgroup below the Sylow order extends");
        s = g.extend(&s, x);
    }
    s
}

/// True when every element of `s` has order at most `k`.
pub fn exponent_at_most(g: &FiniteGroup, s: &Subgroup, k: usize) -> bool {
    s.members().iter().all(|&x| g.element_order(x) <= k)
}

/// Characteristic subgroups of an ambient group (lattice indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicSubgroups {
    pub o_p: BTreeMap<usize, usize>,
    pub o_p_prime: BTreeMap<usize, usize>,
    pub frattini: usize,
    pub fitting: usize,
    pub components: Vec<usize>,
    pub gen_fitting: usize,
    /// `1 = Z_0 < Z_1 < ...` up to the point where it stabilizes.
    pub upper_central: Vec<usize>,
    pub hypercentre_nilpotent: usize,
}

/// Largest subgroup among `candidates` (they are closed under joins, so the
/// join of all of them is one of them).
fn join_all(g: &FiniteGroup, lattice: &SubgroupLattice, candidates: &[usize]) -> usize {
    candidates
        .iter()
        .fold(lattice.trivial(), |acc, &k| lattice.join(g, acc, k))
}

/// Is `l` subnormal in `ambient`? Decided by iterated normal closure descent.
pub fn is_subnormal(g: &FiniteGroup, l: &Subgroup, ambient: &Subgroup) -> bool {
    let mut current = ambient.clone();
    loop {
        if current == *l {
            return true;
        }
        let next = g.normal_closure(l, &current);
        if next == current {
            return false;
        }
        current = next;
    }
}

/// Perfect, with `L/Z(L)` non-abelian simple.
pub fn is_quasisimple(g: &FiniteGroup, lattice: &SubgroupLattice, l: usize) -> bool {
    let sub = lattice.get(l);
    if sub.is_trivial() || g.derived_subgroup(sub) != *sub {
        return false;
    }
    let z = g.center_of(sub);
    if z == *sub {
        return false;
    }
    lattice
        .normal_in(g, l)
        .into_iter()
        .filter(|&k| z.is_subgroup_of(lattice.get(k)))
        .all(|k| k == l || *lattice.get(k) == z)
}

/// Upper central series of `ambient`, computed element-wise.
pub fn upper_central_series(g: &FiniteGroup, lattice: &SubgroupLattice, ambient: usize) -> Vec<usize> {
    let amb = lattice.get(ambient);
    let mut series = vec![lattice.trivial()];
    loop {
        let z = lattice.get(*series.last().unwrap());
        let members: Vec<usize> = amb
            .members()
            .iter()
            .copied()
            .filter(|&x| amb.generators().iter().all(|&h| z.contains(g.commutator(x, h))))
            .collect();
        let next = g.subgroup_from_members(&members).expect("central lift is a subgroup");
        let idx = lattice.index_of(&next).expect("lattice is complete");
        if idx == *series.last().unwrap() {
            return series;
        }
        series.push(idx);
    }
}

/// O_p, O_p', Frattini, Fitting, generalized Fitting and the upper central
/// series of the subgroup `ambient`.
pub fn core_subgroups_in(g: &FiniteGroup, lattice: &SubgroupLattice, ambient: usize) -> CharacteristicSubgroups {
    let order = lattice.order_of(ambient);
    let normal = lattice.normal_in(g, ambient);
    let mut o_p = BTreeMap::new();
    let mut o_p_prime = BTreeMap::new();
    for p in prime_divisors(order) {
        let p_subs: Vec<usize> = normal
            .iter()
            .copied()
            .filter(|&k| is_power_of(lattice.order_of(k), p))
            .collect();
        let pprime_subs: Vec<usize> = normal
            .iter()
            .copied()
            .filter(|&k| !lattice.order_of(k).is_multiple_of(p))
            .collect();
        o_p.insert(p, join_all(g, lattice, &p_subs));
        o_p_prime.insert(p, join_all(g, lattice, &pprime_subs));
    }
    let maximals = lattice.maximal_subgroups_of(ambient);
    let frattini = maximals.iter().fold(ambient, |acc, &m| lattice.meet(acc, m));
    let fitting = join_all(g, lattice, &o_p.values().copied().collect::<Vec<_>>());
    let amb = lattice.get(ambient);
    let components: Vec<usize> = lattice
        .subgroups_of(ambient)
        .into_iter()
        .filter(|&l| is_quasisimple(g, lattice, l) && is_subnormal(g, lattice.get(l), amb))
        .collect();
    let layer = join_all(g, lattice, &components);
    let gen_fitting = lattice.join(g, fitting, layer);
    let upper_central = upper_central_series(g, lattice, ambient);
    let hypercentre_nilpotent = *upper_central.last().unwrap();
    CharacteristicSubgroups {
        o_p,
        o_p_prime,
        frattini,
        fitting,
        components,
        gen_fitting,
        upper_central,
        hypercentre_nilpotent,
    }
}

pub fn core_subgroups(g: &FiniteGroup, lattice: &SubgroupLattice) -> CharacteristicSubgroups {
    core_subgroups_in(g, lattice, lattice.whole())
}

/// Every subgroup of the lattice containing `a`.
pub fn overgroups(lattice: &SubgroupLattice, a: usize) -> Vec<usize> {
    lattice.overgroups(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{build_group, DEFAULT_ORDER_CAP};

    fn setup(name: &str) -> (FiniteGroup, SubgroupLattice) {
        let g = build_group(&name.parse().unwrap(), DEFAULT_ORDER_CAP).unwrap();
        let l = enumerate_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
        (g, l)
    }

    #[test]
    fn lattice_counts() {
        assert_eq!(setup("C6").1.len(), 4);
        assert_eq!(setup("S4").1.len(), 30);
        let (_, q8) = setup("Q8");
        assert_eq!(q8.len(), 6);
        assert!((0..6).all(|i| q8.is_normal(i)));
        assert_eq!(setup("C1").1.len(), 1);
    }

    #[test]
    fn lattice_cap_is_enforced() {
        let g = build_group(&"S5".parse().unwrap(), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(
            enumerate_subgroups(&g, 100).unwrap_err(),
            Error::LatticeExceedsCap { order: 120, limit: 100 }
        );
    }

    #[test]
    fn sylow_examples() {
        let (g, l) = setup("SL(2,5)");
        let s = sylow_subgroup(&g, 2);
        assert_eq!(s.order(), 8);
        // quaternion: a single involution
        assert_eq!(s.members().iter().filter(|&&x| g.element_order(x) == 2).count(), 1);
        assert_eq!(l.order_of(l.sylow(2)), 8);
        let (g, _) = setup("C6");
        assert!(sylow_subgroup(&g, 5).is_trivial());
        let (g, _) = setup("S4");
        assert_eq!(sylow_subgroup(&g, 3).order(), 3);
    }

    #[test]
    fn characteristic_subgroups_of_sl25() {
        let (g, l) = setup("SL(2,5)");
        let c = core_subgroups(&g, &l);
        assert_eq!(l.order_of(c.o_p[&2]), 2);
        assert_eq!(l.order_of(c.frattini), 2);
        assert_eq!(l.order_of(c.fitting), 2);
        assert_eq!(c.components, vec![l.whole()]);
        assert_eq!(c.gen_fitting, l.whole());
        assert_eq!(g.center().order(), 2);
    }

    #[test]
    fn characteristic_subgroups_of_s4_and_abelian() {
        let (g, l) = setup("S4");
        let c = core_subgroups(&g, &l);
        assert_eq!(l.order_of(c.o_p[&2]), 4);
        assert_eq!(l.order_of(c.o_p[&3]), 1);
        assert_eq!(c.frattini, l.trivial());
        assert_eq!(l.maximal_subgroups_of(l.whole()).len(), 8);
        assert_eq!(c.hypercentre_nilpotent, l.trivial());
        let (g, l) = setup("C2xC6");
        let c = core_subgroups(&g, &l);
        assert_eq!(c.fitting, l.whole());
        assert_eq!(c.gen_fitting, l.whole());
        assert_eq!(c.hypercentre_nilpotent, l.whole());
    }

    #[test]
    fn overgroup_examples() {
        let (g, l) = setup("SL(2,5)");
        assert_eq!(overgroups(&l, l.trivial()).len(), l.len());
        assert_eq!(overgroups(&l, l.whole()), vec![l.whole()]);
        let c4 = l.cyclic_of_order(&g, l.whole(), 4)[0];
        assert!(overgroups(&l, c4).iter().any(|&h| l.order_of(h) == 24));
    }

    #[test]
    fn exponent_examples() {
        let (g, _) = setup("C2xC2xC2");
        assert!(exponent_at_most(&g, &g.whole(), 2));
        let (g, _) = setup("Q8");
        assert!(!exponent_at_most(&g, &g.whole(), 2));
    }

    #[test]
    fn labels_round_trip() {
        let (_, l) = setup("S4");
        for i in 0..l.len() {
            assert_eq!(l.by_label(l.label(i)), Some(i));
        }
    }
}
