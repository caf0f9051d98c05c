//! Cover-avoidance predicates: CAP, partial CAP, p-CAP and their strong forms.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use crate::arith::{is_prime, prime_divisors};
use crate::chief::{ChiefFactor, ChiefSeries, NormalPoset};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, QuotientGroup, Subgroup};
use crate::structure::{enumerate_subgroups, SubgroupLattice};

/// `A·H = A·K`, compared as element sets.
pub fn covers(g: &FiniteGroup, a: &Subgroup, lower: &Subgroup, upper: &Subgroup) -> bool {
    g.product_set(a, upper) == g.product_set(a, lower)
}

/// `A ∩ H = A ∩ K`.
pub fn avoids(a: &Subgroup, lower: &Subgroup, upper: &Subgroup) -> bool {
    let mut ah = a.bits().clone();
    ah.intersect_with(upper.bits());
    let mut ak = a.bits().clone();
    ak.intersect_with(lower.bits());
    ah == ak
}

/// Covering decided by `|AH| = |A||H|/|A∩H|` instead of building products.
pub fn covers_by_order(a: &Subgroup, lower: &Subgroup, upper: &Subgroup) -> bool {
    let ah = a.order() * upper.order() / a.intersection_order(upper);
    let ak = a.order() * lower.order() / a.intersection_order(lower);
    ah == ak
}

pub fn avoids_by_order(a: &Subgroup, lower: &Subgroup, upper: &Subgroup) -> bool {
    a.intersection_order(upper) == a.intersection_order(lower)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Cap,
    Partial,
    PCap(usize),
    StrongCap,
    StrongPCap(usize),
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Cap => write!(f, "cap"),
            Variant::Partial => write!(f, "partial"),
            Variant::PCap(p) => write!(f, "pcap:{p}"),
            Variant::StrongCap => write!(f, "strong-cap"),
            Variant::StrongPCap(p) => write!(f, "strong-pcap:{p}"),
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let prime = |t: &str| -> Result<usize> {
            match t.parse::<usize>() {
                Ok(p) if is_prime(p) => Ok(p),
                _ => Err(Error::Parse(format!("expected a prime, got `{t}`"))),
            }
        };
        match s.trim() {
            "cap" => Ok(Variant::Cap),
            "partial" => Ok(Variant::Partial),
            "strong-cap" => Ok(Variant::StrongCap),
            other => {
                if let Some(p) = other.strip_prefix("strong-pcap:") {
                    Ok(Variant::StrongPCap(prime(p)?))
                } else if let Some(p) = other.strip_prefix("pcap:") {
                    Ok(Variant::PCap(prime(p)?))
                } else {
                    Err(Error::Parse(format!("unknown variant `{other}`")))
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The subject neither covers nor avoids `factor` of the overgroup.
    Failure { overgroup: usize, factor: ChiefFactor },
    /// A chief series all of whose factors are covered or avoided.
    Series(ChiefSeries),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapReport {
    pub subject: usize,
    pub ambient: usize,
    pub variant: Variant,
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Failures of a subject across all of its overgroups, scanned in canonical
/// order. Enough to answer every strong variant for every prime.
#[derive(Clone, Debug, Default)]
struct StrongProfile {
    first: Option<(usize, ChiefFactor)>,
    first_by_prime: BTreeMap<usize, (usize, ChiefFactor)>,
}

/// Per-factor cover-or-avoid outcomes for one (subject, ambient) pair.
type Verdicts = Rc<Vec<bool>>;

/// Evaluates cover-avoidance predicates inside one group, caching chief
/// factors per ambient subgroup and verdicts per (subject, ambient).
pub struct CapChecker<'a> {
    group: &'a FiniteGroup,
    lattice: &'a SubgroupLattice,
    factors: RefCell<HashMap<usize, Rc<Vec<ChiefFactor>>>>,
    verdicts: RefCell<HashMap<(usize, usize), Verdicts>>,
    strong: RefCell<HashMap<usize, Rc<StrongProfile>>>,
    whole_poset: NormalPoset,
}

impl<'a> CapChecker<'a> {
    pub fn new(group: &'a FiniteGroup, lattice: &'a SubgroupLattice) -> Self {
        let whole_poset = NormalPoset::new(group, lattice, lattice.whole());
        CapChecker {
            group,
            lattice,
            factors: RefCell::new(HashMap::new()),
            verdicts: RefCell::new(HashMap::new()),
            strong: RefCell::new(HashMap::new()),
            whole_poset,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.group
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        self.lattice
    }

    /// Chief factors of the subgroup `ambient`.
    pub fn factors_in(&self, ambient: usize) -> Rc<Vec<ChiefFactor>> {
        if let Some(f) = self.factors.borrow().get(&ambient) {
            return f.clone();
        }
        let f = if ambient == self.lattice.whole() {
            Rc::new(self.whole_poset.factors(self.lattice))
        } else {
            Rc::new(NormalPoset::new(self.group, self.lattice, ambient).factors(self.lattice))
        };
        self.factors.borrow_mut().insert(ambient, f.clone());
        f
    }

    pub fn covers_or_avoids(&self, a: usize, f: &ChiefFactor) -> bool {
        let (a, k, h) = (
            self.lattice.get(a),
            self.lattice.get(f.lower),
            self.lattice.get(f.upper),
        );
        avoids(a, k, h) || covers(self.group, a, k, h)
    }

    /// Cover-or-avoid verdict for each chief factor of `ambient`.
    fn verdicts_in(&self, a: usize, ambient: usize) -> Rc<Vec<bool>> {
        if let Some(v) = self.verdicts.borrow().get(&(a, ambient)) {
            return v.clone();
        }
        let v: Rc<Vec<bool>> = Rc::new(
            self.factors_in(ambient)
                .iter()
                .map(|f| self.covers_or_avoids(a, f))
                .collect(),
        );
        self.verdicts.borrow_mut().insert((a, ambient), v.clone());
        v
    }

    /// First factor of `ambient` (restricted to pd-factors when `p` is given)
    /// that `a` neither covers nor avoids.
    fn first_failure_in(&self, a: usize, ambient: usize, p: Option<usize>) -> Option<ChiefFactor> {
        let factors = self.factors_in(ambient);
        let verdicts = self.verdicts_in(a, ambient);
        factors
            .iter()
            .zip(verdicts.iter())
            .find(|(f, &ok)| !ok && p.is_none_or(|p| f.is_pd_factor(p)))
            .map(|(f, _)| *f)
    }

    fn universal_report(&self, a: usize, ambient: usize, variant: Variant, p: Option<usize>) -> CapReport {
        let fail = self.first_failure_in(a, ambient, p);
        CapReport {
            subject: a,
            ambient,
            variant,
            holds: fail.is_none(),
            witness: fail.map(|factor| Witness::Failure {
                overgroup: ambient,
                factor,
            }),
        }
    }

    /// CAP in the subgroup `ambient` (which must contain `a`).
    pub fn is_cap_in(&self, a: usize, ambient: usize) -> CapReport {
        self.universal_report(a, ambient, Variant::Cap, None)
    }

    pub fn is_p_cap_in(&self, a: usize, ambient: usize, p: usize) -> CapReport {
        self.universal_report(a, ambient, Variant::PCap(p), Some(p))
    }

    pub fn is_cap(&self, a: usize) -> CapReport {
        self.is_cap_in(a, self.lattice.whole())
    }

    pub fn is_p_cap(&self, a: usize, p: usize) -> CapReport {
        self.is_p_cap_in(a, self.lattice.whole(), p)
    }

    fn strong_profile(&self, a: usize) -> Rc<StrongProfile> {
        if let Some(s) = self.strong.borrow().get(&a) {
            return s.clone();
        }
        let mut profile = StrongProfile::default();
        for h in self.lattice.overgroups(a) {
            let factors = self.factors_in(h);
            let verdicts = self.verdicts_in(a, h);
            for (f, &ok) in factors.iter().zip(verdicts.iter()) {
                if ok {
                    continue;
                }
                profile.first.get_or_insert((h, *f));
                for q in prime_divisors(f.order) {
                    profile.first_by_prime.entry(q).or_insert((h, *f));
                }
            }
        }
        let profile = Rc::new(profile);
        self.strong.borrow_mut().insert(a, profile.clone());
        profile
    }

    fn strong_report(&self, a: usize, variant: Variant, fail: Option<(usize, ChiefFactor)>) -> CapReport {
        CapReport {
            subject: a,
            ambient: self.lattice.whole(),
            variant,
            holds: fail.is_none(),
            witness: fail.map(|(overgroup, factor)| Witness::Failure { overgroup, factor }),
        }
    }

    /// CAP in every overgroup; the witness is the first failing overgroup in
    /// canonical order and its first failing factor.
    pub fn is_strong_cap(&self, a: usize) -> CapReport {
        let fail = self.strong_profile(a).first;
        self.strong_report(a, Variant::StrongCap, fail)
    }

    pub fn is_strong_p_cap(&self, a: usize, p: usize) -> CapReport {
        let fail = self.strong_profile(a).first_by_prime.get(&p).copied();
        self.strong_report(a, Variant::StrongPCap(p), fail)
    }

    pub fn strong_cap_holds(&self, a: usize) -> bool {
        self.strong_profile(a).first.is_none()
    }

    pub fn strong_p_cap_holds(&self, a: usize, p: usize) -> bool {
        !self.strong_profile(a).first_by_prime.contains_key(&p)
    }

    /// Strong q-CAP for every prime q dividing |G|.
    pub fn strong_q_cap_for_all_holds(&self, a: usize) -> bool {
        let n = self.group.order();
        let profile = self.strong_profile(a);
        prime_divisors(n)
            .iter()
            .all(|q| !profile.first_by_prime.contains_key(q))
    }

    /// Some chief series of G has every factor covered or avoided by `a`.
    /// Depth-first over the normal poset, memoized on the current floor.
    pub fn is_partial_cap(&self, a: usize) -> CapReport {
        let mut memo: HashMap<usize, Option<usize>> = HashMap::new();
        let whole = self.lattice.whole();
        let found = self.partial_from(a, self.lattice.trivial(), &mut memo);
        let witness = found.then(|| {
            let mut chain = vec![self.lattice.trivial()];
            let mut cur = self.lattice.trivial();
            while cur != whole {
                cur = memo[&cur].expect("successful path recorded");
                chain.push(cur);
            }
            Witness::Series(ChiefSeries { chain })
        });
        CapReport {
            subject: a,
            ambient: whole,
            variant: Variant::Partial,
            holds: found,
            witness,
        }
    }

    fn partial_from(&self, a: usize, k: usize, memo: &mut HashMap<usize, Option<usize>>) -> bool {
        if k == self.lattice.whole() {
            return true;
        }
        if let Some(next) = memo.get(&k) {
            return next.is_some();
        }
        let mut result = None;
        for &h in self.whole_poset.covers_of(k) {
            let f = ChiefFactor {
                lower: k,
                upper: h,
                order: self.lattice.order_of(h) / self.lattice.order_of(k),
            };
            if self.covers_or_avoids(a, &f) && self.partial_from(a, h, memo) {
                result = Some(h);
                break;
            }
        }
        memo.insert(k, result);
        result.is_some()
    }

    pub fn evaluate(&self, a: usize, variant: Variant) -> CapReport {
        match variant {
            Variant::Cap => self.is_cap(a),
            Variant::Partial => self.is_partial_cap(a),
            Variant::PCap(p) => self.is_p_cap(a, p),
            Variant::StrongCap => self.is_strong_cap(a),
            Variant::StrongPCap(p) => self.is_strong_p_cap(a, p),
        }
    }
}

/// `A·N/N` evaluated inside `G/N`.
pub struct TransferOutcome {
    pub quotient: QuotientGroup,
    pub lattice: SubgroupLattice,
    pub image: usize,
    pub report: CapReport,
}

pub fn quotient_transfer(
    g: &FiniteGroup,
    a: &Subgroup,
    n: &Subgroup,
    variant: Variant,
    lattice_cap: usize,
) -> Result<TransferOutcome> {
    let quotient = g.quotient(n)?;
    let lattice = enumerate_subgroups(quotient.as_group(), lattice_cap)?;
    let image = lattice.index_of(&quotient.image(a)).expect("lattice is complete");
    let report = CapChecker::new(quotient.as_group(), &lattice).evaluate(image, variant);
    Ok(TransferOutcome {
        quotient,
        lattice,
        image,
        report,
    })
}
