//! Concrete finite groups stored as full multiplication tables.
//!
//! A [`FiniteGroup`] is materialized from generators in one of two carriers
//! (permutations or invertible 2x2 matrices over a prime field). Every element
//! is addressed by its index; index 0 is always the identity. All downstream
//! modules work on indices only.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Faithful concrete representation of a group element.
///
/// Products act on the right: for permutations, point `i` is sent to
/// `(i^x)^y` by `x * y`; matrices multiply in the usual row-by-column way and
/// act on row vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElementRep {
    Permutation(Vec<u32>),
    Matrix2 { modulus: u32, entries: [u32; 4] },
}

/// Which carrier a group's elements live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Carrier {
    Permutation { degree: usize },
    Matrix2 { modulus: u32 },
}

impl GroupElementRep {
    pub fn permutation(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidGenerator(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(GroupElementRep::Permutation(images))
    }

    /// Parses cycle notation such as `(0 1)(2 3 4)` on `degree` points.
    /// `()` or an empty string is the identity.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in cycle notation: {text}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text}")))?;
            let points = open[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point '{t}' in {text}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(&bad) = points.iter().find(|&&x| x >= degree) {
                return Err(Error::InvalidGenerator(format!("point {bad} outside degree {degree}")));
            }
            // apply this cycle after the ones already read
            let mut cycle_map: Vec<u32> = (0..degree as u32).collect();
            for (k, &pt) in points.iter().enumerate() {
                cycle_map[pt] = points[(k + 1) % points.len()] as u32;
            }
            for img in images.iter_mut() {
                *img = cycle_map[*img as usize];
            }
            rest = open[close + 1..].trim_start();
        }
        GroupElementRep::permutation(images)
    }

    /// A 2x2 matrix `[a b; c d]` over the integers mod the prime `q`.
    pub fn matrix2(modulus: u32, entries: [i64; 4]) -> Result<Self> {
        if !is_prime(modulus as usize) {
            return Err(Error::InvalidGenerator(format!("modulus {modulus} is not prime")));
        }
        let q = modulus as i64;
        let e = entries.map(|x| x.rem_euclid(q) as u32);
        let det = (e[0] as i64 * e[3] as i64 - e[1] as i64 * e[2] as i64).rem_euclid(q);
        if det == 0 {
            return Err(Error::InvalidGenerator(format!(
                "matrix {entries:?} is singular mod {modulus}"
            )));
        }
        Ok(GroupElementRep::Matrix2 { modulus, entries: e })
    }

    pub fn identity(carrier: Carrier) -> Self {
        match carrier {
            Carrier::Permutation { degree } => GroupElementRep::Permutation((0..degree as u32).collect()),
            Carrier::Matrix2 { modulus } => GroupElementRep::Matrix2 {
                modulus,
                entries: [1, 0, 0, 1],
            },
        }
    }

    pub fn carrier(&self) -> Carrier {
        match self {
            GroupElementRep::Permutation(p) => Carrier::Permutation { degree: p.len() },
            GroupElementRep::Matrix2 { modulus, .. } => Carrier::Matrix2 { modulus: *modulus },
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (GroupElementRep::Permutation(x), GroupElementRep::Permutation(y)) => {
                GroupElementRep::Permutation(x.iter().map(|&i| y[i as usize]).collect())
            }
            (GroupElementRep::Matrix2 { modulus, entries: a }, GroupElementRep::Matrix2 { entries: b, .. }) => {
                let q = *modulus as u64;
                let (a, b) = (a.map(u64::from), b.map(u64::from));
                let e = [
                    (a[0] * b[0] + a[1] * b[2]) % q,
                    (a[0] * b[1] + a[1] * b[3]) % q,
                    (a[2] * b[0] + a[3] * b[2]) % q,
                    (a[2] * b[1] + a[3] * b[3]) % q,
                ];
                GroupElementRep::Matrix2 {
                    modulus: *modulus,
                    entries: e.map(|x| x as u32),
                }
            }
            _ => panic!("product of elements from different carriers"),
        }
    }

    /// Permutation image under the right action on nonzero row vectors of
    /// `F_q^2`; vector `(a, b)` is point `a*q + b - 1`. Permutations are
    /// returned unchanged.
    pub fn as_permutation(&self) -> Vec<u32> {
        match self {
            GroupElementRep::Permutation(p) => p.clone(),
            GroupElementRep::Matrix2 { modulus, entries } => {
                let q = *modulus as u64;
                let e = entries.map(u64::from);
                (1..q * q)
                    .map(|v| {
                        let (a, b) = (v / q, v % q);
                        let x = (a * e[0] + b * e[2]) % q;
                        let y = (a * e[1] + b * e[3]) % q;
                        (x * q + y - 1) as u32
                    })
                    .collect()
            }
        }
    }
}

impl fmt::Display for GroupElementRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElementRep::Permutation(p) => {
                let mut seen = vec![false; p.len()];
                let mut wrote = false;
                for start in 0..p.len() {
                    if seen[start] || p[start] as usize == start {
                        continue;
                    }
                    write!(f, "(")?;
                    let mut i = start;
                    let mut first = true;
                    while !seen[i] {
                        seen[i] = true;
                        if !first {
                            write!(f, " ")?;
                        }
                        write!(f, "{i}")?;
                        first = false;
                        i = p[i] as usize;
                    }
                    write!(f, ")")?;
                    wrote = true;
                }
                if !wrote {
                    write!(f, "()")?;
                }
                Ok(())
            }
            GroupElementRep::Matrix2 { entries: e, .. } => {
                write!(f, "[{} {}; {} {}]", e[0], e[1], e[2], e[3])
            }
        }
    }
}

/// A subset of a parent group's element indices closed under the group law.
///
/// The parent is not stored; every operation takes the [`FiniteGroup`]
/// explicitly. Equality and hashing use the member set only, ordering is by
/// order and then lexicographically on the sorted members.
#[derive(Clone, Debug)]
pub struct Subgroup {
    bits: FixedBitSet,
    members: Vec<usize>,
    gens: Vec<usize>,
}

impl Subgroup {
    fn from_parts(bits: FixedBitSet, mut members: Vec<usize>, gens: Vec<usize>) -> Self {
        members.sort_unstable();
        Subgroup { bits, members, gens }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    /// Sorted element indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.len() <= other.members.len() && self.bits.is_subset(&other.bits)
    }

    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        self.bits.intersection_count(&other.bits)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

/// Element-indexed finite group with a full multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    elements: Vec<GroupElementRep>,
    lookup: HashMap<GroupElementRep, usize>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<usize>,
}

impl FiniteGroup {
    /// Enumerates the closure of `generators` inside `carrier`.
    ///
    /// Fails with [`Error::ClosureExceedsCap`] as soon as more than
    /// `order_cap` elements have been produced.
    pub fn generate(
        name: impl Into<String>,
        carrier: Carrier,
        generators: &[GroupElementRep],
        order_cap: usize,
    ) -> Result<FiniteGroup> {
        for g in generators {
            if g.carrier() != carrier {
                return Err(Error::InvalidGenerator(format!(
                    "generator {g} does not live in {carrier:?}"
                )));
            }
        }
        let identity = GroupElementRep::identity(carrier);
        let k = generators.len();
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::from([(identity, 0usize)]);
        // parent[j] = (i, s) with element j = element i * generator s
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        let mut right: Vec<u32> = Vec::new();
        let mut i = 0;
        while i < elements.len() {
            for (s, g) in generators.iter().enumerate() {
                let prod = elements[i].mul(g);
                let idx = match lookup.get(&prod) {
                    Some(&idx) => idx,
                    None => {
                        let idx = elements.len();
                        if idx >= order_cap {
                            return Err(Error::ClosureExceedsCap(order_cap));
                        }
                        lookup.insert(prod.clone(), idx);
                        elements.push(prod);
                        parent.push((i as u32, s as u32));
                        idx
                    }
                };
                right.push(idx as u32);
            }
            i += 1;
        }
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            let row = &mut mul[a * n..(a + 1) * n];
            row[0] = a as u32;
            for j in 1..n {
                let (pi, s) = parent[j];
                row[j] = right[row[pi as usize] as usize * k + s as usize];
            }
        }
        let mut gens: Vec<usize> = (0..k).map(|s| right[s] as usize).filter(|&x| x != 0).collect();
        gens.dedup();
        let mut seen = std::collections::BTreeSet::new();
        gens.retain(|x| seen.insert(*x));
        Ok(Self::from_table(name.into(), elements, lookup, mul, gens))
    }

    pub(crate) fn from_table(
        name: String,
        elements: Vec<GroupElementRep>,
        lookup: HashMap<GroupElementRep, usize>,
        mul: Vec<u32>,
        gens: Vec<usize>,
    ) -> FiniteGroup {
        let n = elements.len();
        let mut inv = vec![0u32; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| mul[a * n + b] == 0)
                .expect("every table element has an inverse") as u32;
        }
        FiniteGroup {
            name,
            elements,
            lookup,
            mul,
            inv,
            gens,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, x: usize) -> &GroupElementRep {
        &self.elements[x]
    }

    pub fn elements(&self) -> &[GroupElementRep] {
        &self.elements
    }

    pub fn index_of(&self, rep: &GroupElementRep) -> Option<usize> {
        self.lookup.get(rep).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `x^g = g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exhaustive check of the group axioms on the table.
    pub fn check_axioms(&self) -> bool {
        let n = self.order();
        let identity = (0..n).all(|a| self.mul(0, a) == a && self.mul(a, 0) == a);
        let inverses = (0..n).all(|a| self.mul(a, self.inv(a)) == 0 && self.mul(self.inv(a), a) == 0);
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        });
        identity && inverses && assoc
    }

    /// Associativity on the triples `(a, b, c)` drawn from `samples`.
    pub fn check_associative_on(&self, samples: &[(usize, usize, usize)]) -> bool {
        samples
            .iter()
            .all(|&(a, b, c)| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.order());
        bits.insert(0);
        Subgroup::from_parts(bits, vec![0], Vec::new())
    }

    pub fn whole(&self) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.order());
        bits.insert_range(..);
        Subgroup::from_parts(bits, (0..self.order()).collect(), self.gens.clone())
    }

    /// Closes `h ∪ {x}` under multiplication.
    pub fn extend(&self, h: &Subgroup, x: usize) -> Subgroup {
        if h.contains(x) {
            return h.clone();
        }
        let mut gens = h.gens.clone();
        gens.push(x);
        let mut bits = h.bits.clone();
        let mut members = h.members.clone();
        let mut i = 0;
        while i < members.len() {
            let e = members[i];
            for &g in &gens {
                let y = self.mul(e, g);
                if !bits.contains(y) {
                    bits.insert(y);
                    members.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_parts(bits, members, gens)
    }

    /// Least subgroup containing `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        gens.iter().fold(self.trivial_subgroup(), |h, &x| self.extend(&h, x))
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        b.gens.iter().fold(a.clone(), |h, &x| self.extend(&h, x))
    }

    /// The subgroup with exactly these members, or `None` when the set is not
    /// closed (or is empty).
    pub fn subgroup_from_members(&self, members: &[usize]) -> Option<Subgroup> {
        let mut bits = FixedBitSet::with_capacity(self.order());
        bits.extend(members.iter().copied());
        let h = self.subgroup_generated(members);
        (h.bits == bits).then_some(h)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut h = self.trivial_subgroup();
        for x in a.bits.intersection(&b.bits) {
            if !h.contains(x) {
                h = self.extend(&h, x);
            }
        }
        h
    }

    /// `h^x = { x^-1 a x : a in h }`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, x: usize) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.order());
        let members: Vec<usize> = h.members.iter().map(|&a| self.conj(a, x)).collect();
        bits.extend(members.iter().copied());
        let gens = h.gens.iter().map(|&a| self.conj(a, x)).collect();
        Subgroup::from_parts(bits, members, gens)
    }

    /// Is `h` normalized by every element of `ambient`?
    pub fn is_normal_in(&self, h: &Subgroup, ambient: &Subgroup) -> bool {
        ambient
            .gens
            .iter()
            .all(|&g| h.gens.iter().all(|&a| h.contains(self.conj(a, g))))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.gens
            .iter()
            .all(|&g| h.gens.iter().all(|&a| h.contains(self.conj(a, g))))
    }

    fn collect_subgroup<F: Fn(usize) -> bool>(&self, within: &Subgroup, keep: F) -> Subgroup {
        let mut h = self.trivial_subgroup();
        for &x in &within.members {
            if !h.contains(x) && keep(x) {
                h = self.extend(&h, x);
            }
        }
        h
    }

    pub fn normalizer_in(&self, h: &Subgroup, ambient: &Subgroup) -> Subgroup {
        self.collect_subgroup(ambient, |x| h.gens.iter().all(|&a| h.contains(self.conj(a, x))))
    }

    /// `N_G(h)`.
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        self.normalizer_in(h, &self.whole())
    }

    pub fn centralizer_in(&self, h: &Subgroup, ambient: &Subgroup) -> Subgroup {
        self.collect_subgroup(ambient, |x| h.gens.iter().all(|&a| self.mul(a, x) == self.mul(x, a)))
    }

    /// `C_G(h)`.
    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        self.centralizer_in(h, &self.whole())
    }

    /// `Z(G)`.
    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    /// `Z(h)` for a subgroup `h`.
    pub fn center_of(&self, h: &Subgroup) -> Subgroup {
        self.centralizer_in(h, h)
    }

    /// Smallest subgroup of `ambient` containing `h` and normalized by `ambient`.
    pub fn normal_closure(&self, h: &Subgroup, ambient: &Subgroup) -> Subgroup {
        let mut n = h.clone();
        loop {
            let mut grown = false;
            for &g in &ambient.gens {
                for a in n.gens.clone() {
                    let c = self.conj(a, g);
                    if !n.contains(c) {
                        n = self.extend(&n, c);
                        grown = true;
                    }
                }
            }
            if !grown {
                return n;
            }
        }
    }

    /// `[h, h]`.
    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let mut seed = self.trivial_subgroup();
        for &a in &h.gens {
            for &b in &h.gens {
                let c = self.commutator(a, b);
                if !seed.contains(c) {
                    seed = self.extend(&seed, c);
                }
            }
        }
        self.normal_closure(&seed, h)
    }

    /// The element set `a · b`.
    pub fn product_set(&self, a: &Subgroup, b: &Subgroup) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order());
        for &x in &a.members {
            for &y in &b.members {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// Materializes `h` as a group in its own right. Returns the group and the
    /// embedding `new index -> parent index` (identity stays at 0).
    pub fn subgroup_as_group(&self, h: &Subgroup, name: impl Into<String>) -> (FiniteGroup, Vec<usize>) {
        let embed = h.members.clone();
        let mut back = HashMap::with_capacity(embed.len());
        for (i, &x) in embed.iter().enumerate() {
            back.insert(x, i);
        }
        let m = embed.len();
        let mut mul = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                mul[i * m + j] = back[&self.mul(embed[i], embed[j])] as u32;
            }
        }
        let elements: Vec<GroupElementRep> = embed.iter().map(|&x| self.elements[x].clone()).collect();
        let lookup = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let gens = h.gens.iter().map(|x| back[x]).collect();
        (FiniteGroup::from_table(name.into(), elements, lookup, mul, gens), embed)
    }

    /// Factor group by a normal subgroup.
    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientGroup> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let size = self.order();
        let mut projection = vec![usize::MAX; size];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for x in 0..size {
            if projection[x] != usize::MAX {
                continue;
            }
            let id = cosets.len();
            let mut coset: Vec<usize> = n.members.iter().map(|&k| self.mul(k, x)).collect();
            coset.sort_unstable();
            for &y in &coset {
                projection[y] = id;
            }
            cosets.push(coset);
        }
        let m = cosets.len();
        let reps: Vec<usize> = cosets.iter().map(|c| c[0]).collect();
        let mut mul = vec![0u32; m * m];
        for a in 0..m {
            for b in 0..m {
                mul[a * m + b] = projection[self.mul(reps[a], reps[b])] as u32;
            }
        }
        // regular action of the quotient on its own cosets
        let elements: Vec<GroupElementRep> = (0..m)
            .map(|c| GroupElementRep::Permutation((0..m).map(|d| mul[d * m + c]).collect()))
            .collect();
        let lookup = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut gens: Vec<usize> = self.gens.iter().map(|&g| projection[g]).filter(|&c| c != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let group = FiniteGroup::from_table(format!("{}/N{}", self.name, n.order()), elements, lookup, mul, gens);
        Ok(QuotientGroup {
            kernel: n.clone(),
            cosets,
            projection,
            group,
        })
    }

    /// Generators of the group rewritten as permutations (matrix groups act on
    /// nonzero vectors).
    pub fn permutation_generators(&self) -> Vec<Vec<u32>> {
        self.gens.iter().map(|&g| self.elements[g].as_permutation()).collect()
    }

    /// Distinct element orders with multiplicities, sorted by order.
    pub fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for x in 0..self.order() {
            *counts.entry(self.element_order(x)).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }
}

/// `G/N` with its coset bookkeeping.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    kernel: Subgroup,
    cosets: Vec<Vec<usize>>,
    projection: Vec<usize>,
    group: FiniteGroup,
}

impl QuotientGroup {
    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    /// The factor group; element `c` is the coset `cosets()[c]`.
    pub fn as_group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn project(&self, x: usize) -> usize {
        self.projection[x]
    }

    pub fn lift(&self, c: usize) -> &[usize] {
        &self.cosets[c]
    }

    /// Image `hN/N` of a subgroup of the base group.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = h.gens.iter().map(|&x| self.projection[x]).collect();
        self.group.subgroup_generated(&gens)
    }

    /// Full preimage of a subgroup of the factor group.
    pub fn preimage(&self, base: &FiniteGroup, h: &Subgroup) -> Subgroup {
        let members: Vec<usize> = h.members.iter().flat_map(|&c| self.cosets[c].iter().copied()).collect();
        base.subgroup_from_members(&members)
            .expect("preimage of a subgroup is a subgroup")
    }
}
