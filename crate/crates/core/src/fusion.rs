//! Fusion systems `F_S(G)` of finite groups, represented by `(G, S, p)`.
//!
//! Every query reduces to conjugation inside G: a morphism of `F_S(G)` is a
//! map `P -> S` induced by some `g` with `P^g <= S`.

use std::collections::HashSet;

use crate::arith::p_part;
use crate::error::{Error, Result};
use crate::group::{Carrier, FiniteGroup, GroupElementRep, Subgroup};
use crate::structure::{enumerate_subgroups, SubgroupLattice};

/// Conjugacy classes of a group and the class index of every element.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn new(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..n).map(|y| g.conj(x, y)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        ConjugacyClasses { classes, class_of }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> &[usize] {
        &self.classes[self.class_of[x]]
    }
}

/// `1 = Q_0 < ... < Q_n = S` with every `Q_i` strongly closed and every
/// `Q_{i+1}/Q_i` cyclic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StronglyClosedChain {
    pub chain: Vec<usize>,
    pub quotient_orders: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupersolvableVerdict {
    Chain(StronglyClosedChain),
    /// Maximal strongly closed subgroups reachable from 1 by cyclic steps;
    /// none of them is S.
    Refuted {
        frontier: Vec<usize>,
    },
}

impl SupersolvableVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, SupersolvableVerdict::Chain(_))
    }
}

/// `F_S(G)` over a subgroup lattice of G. Subgroups are lattice indices.
pub struct FusionSystem<'a> {
    group: &'a FiniteGroup,
    lattice: &'a SubgroupLattice,
    sylow: usize,
    prime: usize,
    classes: ConjugacyClasses,
}

impl<'a> FusionSystem<'a> {
    /// Uses the canonical Sylow p-subgroup of the lattice.
    pub fn new(group: &'a FiniteGroup, lattice: &'a SubgroupLattice, prime: usize) -> Self {
        Self::with_sylow(group, lattice, prime, lattice.sylow(prime))
    }

    pub fn with_sylow(group: &'a FiniteGroup, lattice: &'a SubgroupLattice, prime: usize, sylow: usize) -> Self {
        assert_eq!(
            lattice.order_of(sylow),
            p_part(group.order(), prime),
            "not a Sylow {prime}-subgroup"
        );
        FusionSystem {
            group,
            lattice,
            sylow,
            prime,
            classes: ConjugacyClasses::new(group),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.group
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        self.lattice
    }

    pub fn sylow(&self) -> usize {
        self.sylow
    }

    pub fn prime(&self) -> usize {
        self.prime
    }

    fn s(&self) -> &Subgroup {
        self.lattice.get(self.sylow)
    }

    /// Subgroups of S, ascending in canonical order.
    pub fn subgroups_of_s(&self) -> Vec<usize> {
        self.lattice.subgroups_of(self.sylow)
    }

    /// `Q^g ∩ S <= Q` for every g, checked one conjugacy class at a time.
    pub fn is_strongly_closed(&self, q: usize) -> bool {
        let (q, s) = (self.lattice.get(q), self.s());
        q.members().iter().all(|&x| {
            self.classes
                .class_of(x)
                .iter()
                .all(|&y| !s.contains(y) || q.contains(y))
        })
    }

    pub fn strongly_closed_subgroups(&self) -> Vec<usize> {
        self.subgroups_of_s()
            .into_iter()
            .filter(|&q| self.is_strongly_closed(q))
            .collect()
    }

    /// Is `upper/lower` cyclic? (`lower` normal in `upper`.)
    fn quotient_is_cyclic(&self, lower: usize, upper: usize) -> bool {
        let (k, h) = (self.lattice.get(lower), self.lattice.get(upper));
        let index = h.order() / k.order();
        h.members().iter().any(|&x| {
            let mut y = x;
            let mut steps = 1;
            while !k.contains(y) {
                y = self.group.mul(y, x);
                steps += 1;
            }
            steps == index
        })
    }

    /// Depth-first search for a chain of strongly closed subgroups from 1 to
    /// S with cyclic steps.
    pub fn supersolvable_chain(&self) -> SupersolvableVerdict {
        let closed = self.strongly_closed_subgroups();
        let mut dead = HashSet::new();
        let mut reached = Vec::new();
        let mut path = vec![self.lattice.trivial()];
        if self.search(&closed, &mut path, &mut dead, &mut reached) {
            let quotient_orders = path
                .windows(2)
                .map(|w| self.lattice.order_of(w[1]) / self.lattice.order_of(w[0]))
                .collect();
            return SupersolvableVerdict::Chain(StronglyClosedChain {
                chain: path,
                quotient_orders,
            });
        }
        reached.sort_unstable();
        reached.dedup();
        let frontier = reached
            .iter()
            .copied()
            .filter(|&q| !reached.iter().any(|&r| r != q && self.lattice.contains(r, q)))
            .collect();
        SupersolvableVerdict::Refuted { frontier }
    }

    fn search(
        &self,
        closed: &[usize],
        path: &mut Vec<usize>,
        dead: &mut HashSet<usize>,
        reached: &mut Vec<usize>,
    ) -> bool {
        let q = *path.last().unwrap();
        reached.push(q);
        if q == self.sylow {
            return true;
        }
        if dead.contains(&q) {
            return false;
        }
        for &r in closed {
            if r == q || !self.lattice.contains(r, q) {
                continue;
            }
            if !self.group.is_normal_in(self.lattice.get(q), self.lattice.get(r)) || !self.quotient_is_cyclic(q, r) {
                continue;
            }
            path.push(r);
            if self.search(closed, path, dead, reached) {
                return true;
            }
            path.pop();
        }
        dead.insert(q);
        false
    }

    pub fn is_supersolvable(&self) -> bool {
        self.supersolvable_chain().holds()
    }

    /// Distinct conjugates `Q^g` lying inside S.
    fn conjugates_in_s(&self, q: usize) -> Vec<Subgroup> {
        let (q, s) = (self.lattice.get(q), self.s());
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for x in 0..self.group.order() {
            let c = self.group.conjugate_subgroup(q, x);
            if c.is_subgroup_of(s) && seen.insert(c.bits().clone()) {
                out.push(c);
            }
        }
        out
    }

    /// `C_S(P) = Z(P)` for every fusion image P of Q.
    pub fn is_centric(&self, q: usize) -> bool {
        let s = self.s();
        self.conjugates_in_s(q).iter().all(|p| {
            let c = self.group.centralizer_in(p, s);
            c.is_subgroup_of(p)
        })
    }

    /// `|N_S(Q)|` is maximal among the fusion images of Q.
    pub fn is_fully_normalized(&self, q: usize) -> bool {
        let s = self.s();
        let own = self.group.normalizer_in(self.lattice.get(q), s).order();
        self.conjugates_in_s(q)
            .iter()
            .all(|p| self.group.normalizer_in(p, s).order() <= own)
    }

    /// `Aut_F(Q) = N_G(Q)/C_G(Q)` as permutations of Q's sorted members.
    pub fn aut_f(&self, q: usize) -> FiniteGroup {
        let g = self.group;
        let q = self.lattice.get(q);
        let n = g.normalizer(q);
        self.conjugation_action(q, n.generators(), "Aut_F")
    }

    fn conjugation_action(&self, q: &Subgroup, by: &[usize], name: &str) -> FiniteGroup {
        let g = self.group;
        let members = q.members();
        let perms: Vec<GroupElementRep> = by
            .iter()
            .map(|&x| {
                let images = members
                    .iter()
                    .map(|&a| members.binary_search(&g.conj(a, x)).unwrap() as u32)
                    .collect();
                GroupElementRep::permutation(images).expect("conjugation permutes Q")
            })
            .collect();
        let carrier = Carrier::Permutation { degree: members.len() };
        FiniteGroup::generate(name, carrier, &perms, usize::MAX).expect("finite action")
    }

    /// `Out_F(Q) = Aut_F(Q)/Inn(Q)`.
    pub fn out_f(&self, q: usize) -> FiniteGroup {
        let aut = self.aut_f(q);
        let sub = self.lattice.get(q);
        let inner = self.conjugation_action(sub, sub.generators(), "Inn");
        let inner_in_aut: Vec<usize> = inner
            .elements()
            .iter()
            .map(|e| aut.index_of(e).expect("inner automorphisms are fusion maps"))
            .collect();
        let inn = aut.subgroup_generated(&inner_in_aut);
        let mut out = aut
            .quotient(&inn)
            .expect("Inn(Q) is normal in Aut_F(Q)")
            .as_group()
            .clone();
        out.set_name("Out_F");
        out
    }

    /// Does `Out_F(Q)` contain a strongly p-embedded subgroup? Brute force
    /// over the subgroup lattice of `Out_F(Q)`.
    pub fn out_has_strongly_embedded(&self, q: usize, lattice_cap: usize) -> Result<bool> {
        let out = self.out_f(q);
        let p = self.prime;
        if !out.order().is_multiple_of(p) {
            return Ok(false);
        }
        let lat = enumerate_subgroups(&out, lattice_cap)?;
        Ok((0..lat.whole()).any(|h| is_strongly_p_embedded(&out, lat.get(h), p)))
    }

    /// Centric, fully normalized, proper in S, and `Out_F(Q)` has a strongly
    /// p-embedded subgroup.
    pub fn is_essential(&self, q: usize, lattice_cap: usize) -> Result<bool> {
        if q == self.sylow || !self.is_centric(q) || !self.is_fully_normalized(q) {
            return Ok(false);
        }
        self.out_has_strongly_embedded(q, lattice_cap)
    }

    /// Essential subgroups together with S itself, ascending.
    pub fn essential_star_set(&self, lattice_cap: usize) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for q in self.subgroups_of_s() {
            if q == self.sylow || self.is_essential(q, lattice_cap)? {
                out.push(q);
            }
        }
        Ok(out)
    }

    /// `N_F(Q)` realized as `F_{N_S(Q)}(N_G(Q))`. Requires Q fully normalized.
    pub fn normalizer_fusion(&self, q: usize, lattice_cap: usize) -> Result<LocalFusion> {
        if !self.is_fully_normalized(q) {
            return Err(Error::NotFullyNormalized);
        }
        let g = self.group;
        let sub = self.lattice.get(q);
        let n = g.normalizer(sub);
        let ns = g.normalizer_in(sub, self.s());
        let (group, embedding) = g.subgroup_as_group(&n, format!("N({})", self.lattice.label(q)));
        let lattice = enumerate_subgroups(&group, lattice_cap)?;
        let back: Vec<usize> = ns
            .members()
            .iter()
            .map(|x| embedding.binary_search(x).expect("N_S(Q) <= N_G(Q)"))
            .collect();
        let sylow_sub = group.subgroup_from_members(&back).expect("N_S(Q) is a subgroup");
        let sylow = lattice.index_of(&sylow_sub).expect("lattice is complete");
        Ok(LocalFusion {
            group,
            lattice,
            sylow,
            prime: self.prime,
            embedding,
        })
    }
}

/// A fusion system whose group is built on the spot (a normalizer).
pub struct LocalFusion {
    pub group: FiniteGroup,
    pub lattice: SubgroupLattice,
    pub sylow: usize,
    pub prime: usize,
    /// Local element index -> index in the original group.
    pub embedding: Vec<usize>,
}

impl LocalFusion {
    pub fn fusion(&self) -> FusionSystem<'_> {
        FusionSystem::with_sylow(&self.group, &self.lattice, self.prime, self.sylow)
    }
}

/// Proper H with `p | |H|` and `p ∤ |H ∩ H^x|` for every x outside H.
pub fn is_strongly_p_embedded(g: &FiniteGroup, h: &Subgroup, p: usize) -> bool {
    if h.order() == g.order() || !h.order().is_multiple_of(p) {
        return false;
    }
    (0..g.order())
        .filter(|&x| !h.contains(x))
        .all(|x| !h.intersection_order(&g.conjugate_subgroup(h, x)).is_multiple_of(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{build_group, DEFAULT_ORDER_CAP};
    use crate::structure::DEFAULT_LATTICE_CAP;

    fn setup(name: &str) -> (FiniteGroup, SubgroupLattice) {
        let g = build_group(&name.parse().unwrap(), DEFAULT_ORDER_CAP).unwrap();
        let l = enumerate_subgroups(&g, DEFAULT_LATTICE_CAP).unwrap();
        (g, l)
    }

    #[test]
    fn a4_at_two() {
        let (g, l) = setup("A4");
        let fs = FusionSystem::new(&g, &l, 2);
        let orders: Vec<usize> = fs.strongly_closed_subgroups().iter().map(|&q| l.order_of(q)).collect();
        assert_eq!(orders, vec![1, 4]);
        for &q in l.of_order(2) {
            assert!(!fs.is_strongly_closed(q));
            assert!(!fs.is_centric(q));
            assert_eq!(fs.aut_f(q).order(), 1);
        }
        assert!(!fs.is_supersolvable());
        assert_eq!(fs.aut_f(fs.sylow()).order(), 3);
        assert_eq!(fs.out_f(fs.sylow()).order(), 3);
        assert_eq!(fs.essential_star_set(DEFAULT_LATTICE_CAP).unwrap(), vec![fs.sylow()]);
        assert!(!fs.is_centric(l.trivial()));
    }

    #[test]
    fn a5_at_five() {
        let (g, l) = setup("A5");
        let fs = FusionSystem::new(&g, &l, 5);
        assert_eq!(fs.strongly_closed_subgroups(), vec![l.trivial(), fs.sylow()]);
        match fs.supersolvable_chain() {
            SupersolvableVerdict::Chain(c) => {
                assert_eq!(c.chain, vec![l.trivial(), fs.sylow()]);
                assert_eq!(c.quotient_orders, vec![5]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(fs.aut_f(fs.sylow()).order(), 2);
        let local = fs.normalizer_fusion(fs.sylow(), DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(local.group.order(), 10);
        assert!(local.fusion().is_supersolvable());
    }

    #[test]
    fn s4_at_two() {
        let (g, l) = setup("S4");
        let fs = FusionSystem::new(&g, &l, 2);
        match fs.supersolvable_chain() {
            SupersolvableVerdict::Refuted { frontier } => assert!(!frontier.contains(&fs.sylow())),
            other => panic!("{other:?}"),
        }
        let essentials = fs.essential_star_set(DEFAULT_LATTICE_CAP).unwrap();
        let normal_v4 = l.of_order(4).iter().copied().find(|&i| l.is_normal(i)).unwrap();
        assert!(essentials.contains(&normal_v4));
        assert!(essentials.contains(&fs.sylow()));
    }

    #[test]
    fn p_groups_fuse_only_by_inner_maps() {
        let (g, l) = setup("D8");
        let fs = FusionSystem::new(&g, &l, 2);
        let normal: Vec<usize> = (0..l.len()).filter(|&i| l.is_normal(i)).collect();
        assert_eq!(fs.strongly_closed_subgroups(), normal);
        assert_eq!(fs.essential_star_set(DEFAULT_LATTICE_CAP).unwrap(), vec![l.whole()]);
        assert!(fs.is_supersolvable());
    }

    #[test]
    fn normalizer_fusion_requires_full_normalization() {
        // a double transposition off the centre of D8 has a smaller normalizer in S
        let (g, l) = setup("S4");
        let fs = FusionSystem::new(&g, &l, 2);
        let bad = fs.subgroups_of_s().into_iter().find(|&q| !fs.is_fully_normalized(q));
        let q = bad.expect("S4 has a subgroup of D8 that is not fully normalized");
        assert_eq!(
            fs.normalizer_fusion(q, DEFAULT_LATTICE_CAP).err(),
            Some(Error::NotFullyNormalized)
        );
        let whole = fs.normalizer_fusion(fs.sylow(), DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(whole.group.order(), 8);
    }

    #[test]
    fn aut_order_matches_normalizer_over_centralizer() {
        let (g, l) = setup("SL(2,3)");
        let fs = FusionSystem::new(&g, &l, 2);
        for q in fs.subgroups_of_s() {
            let sub = l.get(q);
            let expected = g.normalizer(sub).order() / g.centralizer(sub).order();
            assert_eq!(fs.aut_f(q).order(), expected);
        }
    }
}
