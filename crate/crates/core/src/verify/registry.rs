//! Theorem statements as (hypothesis, conclusion) pairs over one group.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::arith::{divisors, gcd, is_power_of};
use crate::cap::CapChecker;
use crate::chief::{quotient_is_supersolvable, GroupClassFlags, NormalPoset};
use crate::fusion::FusionSystem;
use crate::group::FiniteGroup;
use crate::structure::{core_subgroups_in, exponent_at_most, CharacteristicSubgroups, SubgroupLattice};

/// One evaluated parameter binding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub params: Vec<(String, String)>,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub note: Option<String>,
}

pub struct TheoremSpec {
    pub id: &'static str,
    pub summary: &'static str,
    pub evaluate: fn(&Context) -> Vec<Row>,
}

/// Everything the predicates need about one group, with lazily filled caches.
pub struct Context<'a> {
    pub group: &'a FiniteGroup,
    pub lattice: &'a SubgroupLattice,
    pub flags: &'a GroupClassFlags,
    pub core: &'a CharacteristicSubgroups,
    pub poset: &'a NormalPoset,
    pub primes: Vec<usize>,
    pub cap: CapChecker<'a>,
    fusion_supersolvable: RefCell<HashMap<usize, bool>>,
}

impl<'a> Context<'a> {
    pub fn new(
        group: &'a FiniteGroup,
        lattice: &'a SubgroupLattice,
        flags: &'a GroupClassFlags,
        core: &'a CharacteristicSubgroups,
        poset: &'a NormalPoset,
    ) -> Self {
        Context {
            group,
            lattice,
            flags,
            core,
            poset,
            primes: crate::arith::prime_divisors(group.order()),
            cap: CapChecker::new(group, lattice),
            fusion_supersolvable: RefCell::new(HashMap::new()),
        }
    }

    fn sylow(&self, p: usize) -> usize {
        self.lattice.sylow(p)
    }

    fn abelian(&self, i: usize) -> bool {
        self.lattice.is_abelian(self.group, i)
    }

    fn exp_le_2(&self, i: usize) -> bool {
        exponent_at_most(self.group, self.lattice.get(i), 2)
    }

    fn cyclic(&self, within: usize, order: usize) -> Vec<usize> {
        self.lattice.cyclic_of_order(self.group, within, order)
    }

    fn of_order(&self, within: usize, order: usize) -> Vec<usize> {
        self.lattice.of_order_within(within, order)
    }

    fn all_strong_p(&self, subs: &[usize], p: usize) -> bool {
        subs.iter().all(|&a| self.cap.strong_p_cap_holds(a, p))
    }

    fn all_strong(&self, subs: &[usize]) -> bool {
        subs.iter().all(|&a| self.cap.strong_cap_holds(a))
    }

    fn all_strong_q(&self, subs: &[usize]) -> bool {
        subs.iter().all(|&a| self.cap.strong_q_cap_for_all_holds(a))
    }

    fn all_cap(&self, subs: &[usize]) -> bool {
        subs.iter().all(|&a| self.cap.is_cap(a).holds)
    }

    fn all_partial(&self, subs: &[usize]) -> bool {
        subs.iter().all(|&a| self.cap.is_partial_cap(a).holds)
    }

    pub fn fusion_supersolvable(&self, p: usize) -> bool {
        if let Some(&b) = self.fusion_supersolvable.borrow().get(&p) {
            return b;
        }
        let b = FusionSystem::new(self.group, self.lattice, p).is_supersolvable();
        self.fusion_supersolvable.borrow_mut().insert(p, b);
        b
    }

    fn coprime_to_p_minus_1(&self, p: usize) -> bool {
        gcd(p - 1, self.group.order()) == 1
    }

    /// Cyclic subgroups of `within` of order p, plus order 4 when p = 2.
    fn cyclic_p_or_4(&self, within: usize, p: usize) -> Vec<usize> {
        let mut subs = self.cyclic(within, p);
        if p == 2 {
            subs.extend(self.cyclic(within, 4));
        }
        subs
    }

    /// Divisors d of |S| with 1 < d < |S|.
    fn proper_orders(&self, s: usize) -> Vec<usize> {
        let n = self.lattice.order_of(s);
        divisors(n).into_iter().filter(|&d| d > 1 && d < n).collect()
    }

    fn label(&self, i: usize) -> String {
        self.lattice.label(i).to_string()
    }

    /// Nontrivial normal p-subgroups of G.
    fn normal_p_subgroups(&self, p: usize) -> Vec<usize> {
        self.poset
            .normals()
            .iter()
            .copied()
            .filter(|&i| i != self.lattice.trivial() && is_power_of(self.lattice.order_of(i), p))
            .collect()
    }
}

fn p_param(p: usize) -> Vec<(String, String)> {
    vec![("p".into(), p.to_string())]
}

fn pd_param(p: usize, d: usize) -> Vec<(String, String)> {
    vec![("p".into(), p.to_string()), ("d".into(), d.to_string())]
}

fn row(params: Vec<(String, String)>, hypothesis: bool, conclusion: bool) -> Row {
    Row {
        params,
        hypothesis,
        conclusion,
        note: None,
    }
}

/// How the maximal subgroups of S and the order-4 clause are tested in the
/// p-supersolvability criteria.
#[derive(Clone, Copy)]
enum Strength {
    Partial,
    Cap,
    StrongQ,
}

fn maximal_subgroup_criterion(c: &Context, strength: Strength) -> Vec<Row> {
    let mut rows = Vec::new();
    for &p in &c.primes {
        let s = c.sylow(p);
        let test = |subs: &[usize]| match strength {
            Strength::Partial => c.all_partial(subs),
            Strength::Cap => c.all_cap(subs),
            Strength::StrongQ => c.all_strong_q(subs),
        };
        let hyp = c.lattice.order_of(s) > p
            && test(&c.lattice.maximal_subgroups_of(s))
            && (p != 2 || c.abelian(s) || test(&c.cyclic(c.lattice.whole(), 4)));
        let mut r = row(p_param(p), hyp, c.flags.is_p_supersolvable(p));
        if matches!(strength, Strength::Partial) {
            r.note = Some(format!("supersolvable={}", c.flags.supersolvable));
        }
        rows.push(r);
    }
    rows
}

fn t_1_5(c: &Context) -> Vec<Row> {
    maximal_subgroup_criterion(c, Strength::Partial)
}

fn c_3_4(c: &Context) -> Vec<Row> {
    maximal_subgroup_criterion(c, Strength::Cap)
}

fn c_3_5(c: &Context) -> Vec<Row> {
    maximal_subgroup_criterion(c, Strength::StrongQ)
}

/// Order-d subgroups of S, plus cyclic order-4 subgroups of S when S is
/// non-abelian and d = p = 2, all passing `test`.
fn order_d_hypothesis(c: &Context, p: usize, d: usize, test: &dyn Fn(&[usize]) -> bool) -> bool {
    let s = c.sylow(p);
    test(&c.of_order(s, d)) && (!(d == 2 && p == 2 && !c.abelian(s)) || test(&c.cyclic(s, 4)))
}

fn strong_cap_hypothesis(c: &Context, p: usize, d: usize) -> bool {
    order_d_hypothesis(c, p, d, &|subs| c.all_strong(subs))
}

fn strong_q_hypothesis(c: &Context, p: usize, d: usize) -> bool {
    order_d_hypothesis(c, p, d, &|subs| c.all_strong_q(subs))
}

/// The hypothesis shared by the strong p-CAP criteria over a normal p-group
/// `x` (either S, or P normal in G) and an order `d`. `order_4_bound` is the
/// threshold below which d = 2 brings in the cyclic order-4 clause.
fn strong_p_order_hypothesis(c: &Context, x: usize, p: usize, d: usize, order_4_bound: usize) -> bool {
    let base = c.all_strong_p(&c.of_order(x, d), p);
    if p != 2 {
        return base;
    }
    let needs_4 = !c.abelian(x) && d == 2 && d < order_4_bound;
    base && c.exp_le_2(x) && (!needs_4 || c.all_strong_p(&c.cyclic(x, 4), 2))
}

fn strong_p_hypothesis(c: &Context, p: usize, d: usize) -> bool {
    let s = c.sylow(p);
    strong_p_order_hypothesis(c, s, p, d, c.lattice.order_of(s) / 2)
}

fn per_order_rows(c: &Context, hyp: &dyn Fn(usize, usize) -> bool, concl: &dyn Fn(usize) -> bool) -> Vec<Row> {
    let mut rows = Vec::new();
    for &p in &c.primes {
        for d in c.proper_orders(c.sylow(p)) {
            rows.push(row(pd_param(p, d), hyp(p, d), concl(p)));
        }
    }
    rows
}

fn t_1_7(c: &Context) -> Vec<Row> {
    per_order_rows(c, &|p, d| strong_cap_hypothesis(c, p, d), &|p| {
        c.fusion_supersolvable(p)
    })
}

fn t_1_8(c: &Context) -> Vec<Row> {
    per_order_rows(c, &|p, d| strong_p_hypothesis(c, p, d), &|p| c.fusion_supersolvable(p))
}

fn c_4_3(c: &Context) -> Vec<Row> {
    per_order_rows(c, &|p, d| strong_q_hypothesis(c, p, d), &|p| c.fusion_supersolvable(p))
}

fn c_4_5(c: &Context) -> Vec<Row> {
    per_order_rows(
        c,
        &|p, d| c.coprime_to_p_minus_1(p) && strong_cap_hypothesis(c, p, d),
        &|p| c.flags.is_p_nilpotent(p),
    )
}

fn c_4_6(c: &Context) -> Vec<Row> {
    per_order_rows(
        c,
        &|p, d| c.coprime_to_p_minus_1(p) && strong_q_hypothesis(c, p, d),
        &|p| c.flags.is_p_nilpotent(p),
    )
}

fn c_4_7(c: &Context) -> Vec<Row> {
    per_order_rows(
        c,
        &|p, d| c.coprime_to_p_minus_1(p) && strong_p_hypothesis(c, p, d),
        &|p| c.flags.is_p_nilpotent(p),
    )
}

fn t_4_1(c: &Context) -> Vec<Row> {
    c.primes
        .iter()
        .map(|&p| {
            let hyp = c.all_strong_p(&c.cyclic_p_or_4(c.sylow(p), p), p);
            row(p_param(p), hyp, c.fusion_supersolvable(p))
        })
        .collect()
}

fn c_4_2(c: &Context) -> Vec<Row> {
    c.primes
        .iter()
        .map(|&p| {
            let hyp = c.coprime_to_p_minus_1(p) && c.all_strong_p(&c.cyclic_p_or_4(c.sylow(p), p), p);
            row(p_param(p), hyp, c.flags.is_p_nilpotent(p))
        })
        .collect()
}

fn t_3_1(c: &Context) -> Vec<Row> {
    c.primes
        .iter()
        .map(|&p| {
            let hyp = c.all_strong_p(&c.cyclic_p_or_4(c.lattice.whole(), p), p);
            row(p_param(p), hyp, c.flags.is_p_supersolvable(p))
        })
        .collect()
}

fn t_3_2(c: &Context) -> Vec<Row> {
    let mut rows = Vec::new();
    for &h in c.poset.normals() {
        let params = vec![("H".into(), c.label(h))];
        let hyp = quotient_is_supersolvable(c.lattice, c.poset, h) && {
            let fstar = core_subgroups_in(c.group, c.lattice, h).gen_fitting;
            c.primes.iter().all(|&p| c.all_strong_p(&c.cyclic_p_or_4(fstar, p), p))
        };
        rows.push(row(params, hyp, c.flags.supersolvable));
    }
    rows
}

fn t_2_3(c: &Context) -> Vec<Row> {
    let mut rows = Vec::new();
    for &p in &c.primes {
        for big_p in c.normal_p_subgroups(p) {
            let params = vec![("p".into(), p.to_string()), ("P".into(), c.label(big_p))];
            let hyp = c.all_strong_p(&c.cyclic_p_or_4(big_p, p), p);
            rows.push(row(params, hyp, c.lattice.contains(c.flags.u_hypercentre, big_p)));
        }
    }
    rows
}

fn t_2_4(c: &Context) -> Vec<Row> {
    let mut rows = Vec::new();
    for &p in &c.primes {
        for big_p in c.normal_p_subgroups(p) {
            let order = c.lattice.order_of(big_p);
            if order == p {
                continue;
            }
            for d in c.proper_orders(big_p) {
                let params = vec![
                    ("p".into(), p.to_string()),
                    ("P".into(), c.label(big_p)),
                    ("d".into(), d.to_string()),
                ];
                let hyp = strong_p_order_hypothesis(c, big_p, p, d, order / 2);
                rows.push(row(params, hyp, c.lattice.contains(c.flags.u_hypercentre, big_p)));
            }
        }
    }
    rows
}

/// Either clause suffices: cyclic subgroups of order 2 and 4 strong 2-CAP, or
/// exp(P) <= 2 with a suitable order d > 2.
fn c_2_5(c: &Context) -> Vec<Row> {
    if !c.primes.contains(&2) {
        return Vec::new();
    }
    let mut rows = Vec::new();
    for big_p in c.normal_p_subgroups(2) {
        let order = c.lattice.order_of(big_p);
        let clause1 = c.all_strong_p(&c.cyclic_p_or_4(big_p, 2), 2);
        let clause2 = c.exp_le_2(big_p)
            && c.proper_orders(big_p).into_iter().filter(|&d| d > 2).any(|d| {
                let needs_4 = d < order / 2 && !c.abelian(big_p);
                c.all_strong_p(&c.of_order(big_p, d), 2) && (!needs_4 || c.all_strong_p(&c.cyclic(big_p, 4), 2))
            });
        let params = vec![("P".into(), c.label(big_p))];
        let mut r = row(
            params,
            clause1 || clause2,
            c.lattice.contains(c.core.hypercentre_nilpotent, big_p),
        );
        r.note = Some(format!("clause1={clause1},clause2={clause2}"));
        rows.push(r);
    }
    rows
}

fn r_1_6(c: &Context) -> Vec<Row> {
    c.primes
        .iter()
        .map(|&p| row(p_param(p), c.flags.is_p_supersolvable(p), c.fusion_supersolvable(p)))
        .collect()
}

/// Every checked statement, in report order.
pub fn registry() -> Vec<TheoremSpec> {
    vec![
        TheoremSpec {
            id: "T-1.5",
            summary: "|S| > p, maximal subgroups of S (and cyclic order-4 subgroups of G when p = 2, S non-abelian) partial CAP => p-supersolvable",
            evaluate: t_1_5,
        },
        TheoremSpec {
            id: "T-1.7",
            summary: "order-d subgroups of S (and cyclic order 4 when d = p = 2, S non-abelian) strong CAP => F_S(G) supersolvable",
            evaluate: t_1_7,
        },
        TheoremSpec {
            id: "T-1.8",
            summary: "order-d subgroups of S strong p-CAP, with exp(S) <= 2 and the order-4 clause when p = 2 => F_S(G) supersolvable",
            evaluate: t_1_8,
        },
        TheoremSpec {
            id: "T-2.3",
            summary: "cyclic subgroups of order p or 4 of a normal p-subgroup P strong p-CAP => P <= Z_U(G)",
            evaluate: t_2_3,
        },
        TheoremSpec {
            id: "T-2.4",
            summary: "order-d subgroups of a normal p-subgroup P strong p-CAP (with the p = 2 clauses) => P <= Z_U(G)",
            evaluate: t_2_4,
        },
        TheoremSpec {
            id: "C-2.5",
            summary: "normal 2-subgroup P satisfying either cyclic or order-d clause => P <= Z_inf(G)",
            evaluate: c_2_5,
        },
        TheoremSpec {
            id: "T-3.1",
            summary: "cyclic subgroups of G of order p (and 4 when p = 2) strong p-CAP => p-supersolvable",
            evaluate: t_3_1,
        },
        TheoremSpec {
            id: "T-3.2",
            summary: "G/H supersolvable and cyclic subgroups of F*(H) of order p or 4 strong p-CAP for all p => G supersolvable",
            evaluate: t_3_2,
        },
        TheoremSpec {
            id: "C-3.4",
            summary: "|S| > p, maximal subgroups of S (and cyclic order-4 subgroups of G when p = 2, S non-abelian) CAP => p-supersolvable",
            evaluate: c_3_4,
        },
        TheoremSpec {
            id: "C-3.5",
            summary: "|S| > p, maximal subgroups of S (and cyclic order-4 subgroups of G when p = 2, S non-abelian) strong q-CAP for all q => p-supersolvable",
            evaluate: c_3_5,
        },
        TheoremSpec {
            id: "T-4.1",
            summary: "cyclic subgroups of S of order p (and 4 when p = 2) strong p-CAP => F_S(G) supersolvable",
            evaluate: t_4_1,
        },
        TheoremSpec {
            id: "C-4.2",
            summary: "(p-1, |G|) = 1 and cyclic subgroups of S of order p or 4 strong p-CAP => p-nilpotent",
            evaluate: c_4_2,
        },
        TheoremSpec {
            id: "C-4.3",
            summary: "order-d subgroups of S (and the order-4 clause) strong q-CAP for all q => F_S(G) supersolvable",
            evaluate: c_4_3,
        },
        TheoremSpec {
            id: "C-4.5",
            summary: "(p-1, |G|) = 1 and order-d subgroups of S strong CAP => p-nilpotent",
            evaluate: c_4_5,
        },
        TheoremSpec {
            id: "C-4.6",
            summary: "(p-1, |G|) = 1 and order-d subgroups of S strong q-CAP for all q => p-nilpotent",
            evaluate: c_4_6,
        },
        TheoremSpec {
            id: "C-4.7",
            summary: "(p-1, |G|) = 1 and order-d subgroups of S strong p-CAP with the p = 2 clauses => p-nilpotent",
            evaluate: c_4_7,
        },
        TheoremSpec {
            id: "R-1.6",
            summary: "p-supersolvable => F_S(G) supersolvable",
            evaluate: r_1_6,
        },
    ]
}
