//! Chief factors, chief series, group class flags and the 𝔘-hypercentre.
//!
//! Everything is computed inside a subgroup lattice: a chief factor of an
//! ambient subgroup `X` is a covering pair `K < H` in the poset of subgroups
//! normal in `X`.

use std::collections::{BTreeMap, HashMap};

use crate::arith::{is_power_of, is_prime, p_part, prime_divisors};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::structure::{core_subgroups, SubgroupLattice};

pub const DEFAULT_SERIES_CAP: usize = 100_000;

/// `lower < upper`, both normal in the ambient group, with nothing normal in
/// between. Fields are lattice indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChiefFactor {
    pub lower: usize,
    pub upper: usize,
    pub order: usize,
}

impl ChiefFactor {
    pub fn is_pd_factor(&self, p: usize) -> bool {
        self.order.is_multiple_of(p)
    }

    /// 𝔘-central chief factors are exactly those of prime order.
    pub fn is_u_central(&self) -> bool {
        is_prime(self.order)
    }
}

pub fn is_pd_factor(f: &ChiefFactor, p: usize) -> bool {
    f.is_pd_factor(p)
}

pub fn is_u_central(f: &ChiefFactor) -> bool {
    f.is_u_central()
}

/// An ascending chain `1 = G_0 < ... < G_n = X` of lattice indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChiefSeries {
    pub chain: Vec<usize>,
}

impl ChiefSeries {
    pub fn factors(&self, lattice: &SubgroupLattice) -> Vec<ChiefFactor> {
        self.chain
            .windows(2)
            .map(|w| ChiefFactor {
                lower: w[0],
                upper: w[1],
                order: lattice.order_of(w[1]) / lattice.order_of(w[0]),
            })
            .collect()
    }

    pub fn factor_orders(&self, lattice: &SubgroupLattice) -> Vec<usize> {
        self.factors(lattice).iter().map(|f| f.order).collect()
    }
}

/// Subgroups normal in `ambient`, with their covering relation.
#[derive(Clone, Debug)]
pub struct NormalPoset {
    ambient: usize,
    normals: Vec<usize>,
    /// Upper covers of each normal subgroup, ascending.
    covers: HashMap<usize, Vec<usize>>,
}

impl NormalPoset {
    pub fn new(g: &FiniteGroup, lattice: &SubgroupLattice, ambient: usize) -> Self {
        let normals = lattice.normal_in(g, ambient);
        let mut covers = HashMap::new();
        for &k in &normals {
            let above: Vec<usize> = normals
                .iter()
                .copied()
                .filter(|&h| h != k && lattice.contains(h, k))
                .collect();
            let minimal: Vec<usize> = above
                .iter()
                .copied()
                .filter(|&h| !above.iter().any(|&m| m != h && lattice.contains(h, m)))
                .collect();
            covers.insert(k, minimal);
        }
        NormalPoset {
            ambient,
            normals,
            covers,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn normals(&self) -> &[usize] {
        &self.normals
    }

    pub fn covers_of(&self, k: usize) -> &[usize] {
        self.covers.get(&k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn factors(&self, lattice: &SubgroupLattice) -> Vec<ChiefFactor> {
        let mut out = Vec::new();
        for &k in &self.normals {
            for &h in self.covers_of(k) {
                out.push(ChiefFactor {
                    lower: k,
                    upper: h,
                    order: lattice.order_of(h) / lattice.order_of(k),
                });
            }
        }
        out
    }

    /// Greedy chain from `from` to the ambient group through the first cover
    /// at every step.
    pub fn series_from(&self, from: usize) -> Vec<usize> {
        let mut chain = vec![from];
        let mut cur = from;
        while cur != self.ambient {
            cur = self.covers_of(cur)[0];
            chain.push(cur);
        }
        chain
    }
}

/// Chief factors of the subgroup `ambient`.
pub fn chief_factors_in(g: &FiniteGroup, lattice: &SubgroupLattice, ambient: usize) -> Vec<ChiefFactor> {
    NormalPoset::new(g, lattice, ambient).factors(lattice)
}

pub fn all_chief_factors(g: &FiniteGroup, lattice: &SubgroupLattice) -> Vec<ChiefFactor> {
    chief_factors_in(g, lattice, lattice.whole())
}

/// Every maximal chain of normal subgroups of G.
pub fn all_chief_series(g: &FiniteGroup, lattice: &SubgroupLattice, series_cap: usize) -> Result<Vec<ChiefSeries>> {
    let poset = NormalPoset::new(g, lattice, lattice.whole());
    let mut out = Vec::new();
    let mut stack = vec![lattice.trivial()];
    extend_series(&poset, &mut stack, &mut out, series_cap)?;
    Ok(out)
}

fn extend_series(poset: &NormalPoset, stack: &mut Vec<usize>, out: &mut Vec<ChiefSeries>, cap: usize) -> Result<()> {
    let top = *stack.last().unwrap();
    if top == poset.ambient {
        if out.len() >= cap {
            return Err(Error::SeriesExplosion(cap));
        }
        out.push(ChiefSeries { chain: stack.clone() });
        return Ok(());
    }
    for &h in poset.covers_of(top) {
        stack.push(h);
        extend_series(poset, stack, out, cap)?;
        stack.pop();
    }
    Ok(())
}

/// One chief series of G, canonical in the lattice order.
pub fn chief_series(g: &FiniteGroup, lattice: &SubgroupLattice) -> ChiefSeries {
    let poset = NormalPoset::new(g, lattice, lattice.whole());
    ChiefSeries {
        chain: poset.series_from(lattice.trivial()),
    }
}

/// Largest normal subgroup all of whose G-chief factors have prime order,
/// grown by absorbing prime-order minimal normal subgroups of G/Z.
pub fn u_hypercentre(g: &FiniteGroup, lattice: &SubgroupLattice) -> usize {
    let poset = NormalPoset::new(g, lattice, lattice.whole());
    u_hypercentre_from(g, lattice, &poset, lattice.trivial())
}

pub(crate) fn u_hypercentre_from(
    g: &FiniteGroup,
    lattice: &SubgroupLattice,
    poset: &NormalPoset,
    floor: usize,
) -> usize {
    let mut z = floor;
    loop {
        let prime_covers: Vec<usize> = poset
            .covers_of(z)
            .iter()
            .copied()
            .filter(|&h| is_prime(lattice.order_of(h) / lattice.order_of(z)))
            .collect();
        if prime_covers.is_empty() {
            return z;
        }
        z = prime_covers.iter().fold(z, |acc, &h| lattice.join(g, acc, h));
    }
}

/// Membership flags for the classes the verifier's conclusions refer to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupClassFlags {
    pub p_solvable: BTreeMap<usize, bool>,
    pub p_supersolvable: BTreeMap<usize, bool>,
    pub p_nilpotent: BTreeMap<usize, bool>,
    pub solvable: bool,
    pub supersolvable: bool,
    pub nilpotent: bool,
    pub u_hypercentre: usize,
}

impl GroupClassFlags {
    pub fn is_p_supersolvable(&self, p: usize) -> bool {
        self.p_supersolvable.get(&p).copied().unwrap_or(true)
    }

    pub fn is_p_nilpotent(&self, p: usize) -> bool {
        self.p_nilpotent.get(&p).copied().unwrap_or(true)
    }
}

/// Class flags read off one chief series (Jordan-Hölder makes the choice
/// irrelevant).
pub fn classify(g: &FiniteGroup, lattice: &SubgroupLattice) -> GroupClassFlags {
    let orders = chief_series(g, lattice).factor_orders(lattice);
    let core = core_subgroups(g, lattice);
    let n = g.order();
    let mut p_solvable = BTreeMap::new();
    let mut p_supersolvable = BTreeMap::new();
    let mut p_nilpotent = BTreeMap::new();
    for p in prime_divisors(n) {
        let solv = orders.iter().all(|&o| is_power_of(o, p) || o % p != 0);
        let ss = solv && orders.iter().all(|&o| o % p != 0 || o == p);
        p_solvable.insert(p, solv);
        p_supersolvable.insert(p, ss);
        let complement = lattice.order_of(core.o_p_prime[&p]);
        p_nilpotent.insert(p, n / complement == p_part(n, p));
    }
    GroupClassFlags {
        p_solvable,
        p_supersolvable,
        p_nilpotent,
        solvable: orders.iter().all(|&o| prime_divisors(o).len() == 1),
        supersolvable: orders.iter().all(|&o| is_prime(o)),
        nilpotent: core.hypercentre_nilpotent == lattice.whole(),
        u_hypercentre: u_hypercentre(g, lattice),
    }
}

/// Is G/N supersolvable? Walks one chain of normal subgroups from `n` to G.
pub fn quotient_is_supersolvable(lattice: &SubgroupLattice, poset: &NormalPoset, n: usize) -> bool {
    poset
        .series_from(n)
        .windows(2)
        .all(|w| is_prime(lattice.order_of(w[1]) / lattice.order_of(w[0])))
}
