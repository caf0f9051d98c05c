//! The corpus of small groups the theorem registry is checked against.

use std::collections::HashSet;

use crate::arith::divisors;
use crate::builtin::{build_group, Builtin, GroupSpec};
use crate::error::Result;
use crate::group::FiniteGroup;

/// Groups the verifier runs over, in ascending order of size.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub entries: Vec<GroupSpec>,
}

/// Order, element-order histogram, and the same data for the abelianization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub histogram: Vec<(usize, usize)>,
    pub abelianization: Vec<(usize, usize)>,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let derived = g.derived_subgroup(&g.whole());
    let abelianization = g
        .quotient(&derived)
        .expect("the derived subgroup is normal")
        .as_group()
        .order_histogram();
    Fingerprint {
        order: g.order(),
        histogram: g.order_histogram(),
        abelianization,
    }
}

/// Every family member the corpus draws from, before filtering.
fn candidates(max_order: usize) -> Vec<Builtin> {
    use Builtin::*;
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(Cyclic(n));
    }
    let abelian: &[&[usize]] = &[
        &[2, 2],
        &[2, 4],
        &[3, 3],
        &[2, 2, 2],
        &[2, 6],
        &[2, 8],
        &[4, 4],
        &[2, 2, 4],
        &[2, 2, 2, 2],
        &[3, 6],
        &[2, 10],
        &[5, 5],
        &[2, 12],
        &[2, 2, 6],
        &[3, 3, 3],
        &[4, 8],
        &[2, 14],
        &[6, 6],
        &[2, 18],
        &[2, 2, 8],
        &[2, 4, 4],
        &[2, 20],
    ];
    for factors in abelian {
        out.push(Product(factors.iter().map(|&n| Cyclic(n)).collect()));
    }
    out.extend([Symmetric(3), Symmetric(4), Symmetric(5)]);
    out.extend([Alternating(4), Alternating(5)]);
    out.extend([SpecialLinear(3), GeneralLinear(3), SpecialLinear(5)]);
    for n in (6..=max_order).step_by(2) {
        out.push(Dihedral(n));
    }
    for n in (8..=max_order).step_by(4) {
        out.push(Dicyclic(n));
    }
    for p in (3..=max_order).filter(|&p| crate::arith::is_prime(p)) {
        for q in divisors(p - 1).into_iter().filter(|&q| q > 1) {
            if p * q <= max_order {
                out.push(Semidirect { p, q });
            }
        }
    }
    let products: &[&str] = &[
        "S3xC3",
        "S3xC4",
        "S3xC5",
        "A4xC2",
        "A4xC3",
        "A4xC4",
        "A4xC5",
        "S4xC2",
        "S4xC3",
        "D8xC2",
        "D8xC3",
        "D8xC5",
        "Q8xC2",
        "Q8xC3",
        "Q8xC5",
        "S3xS3",
        "SL(2,3)xC2",
        "SL(2,3)xC3",
        "D10xC3",
        "Q12xC2",
        "C5:C4xC2",
        "C7:C3xC2",
        "C7:C3xC3",
        "S3xC2xC2",
        "D8xC2xC2",
        "Q8xC2xC2",
        "A4xC2xC2",
        "A4xS3",
        "S3xD10",
        "Q8xS3",
        "D8xS3",
        "A5xC2",
        "GL(2,3)xC2",
        "S4xC4",
        "S4xC5",
    ];
    for text in products {
        match text.parse::<Builtin>() {
            Ok(b) => out.push(b),
            Err(e) => panic!("corpus product `{text}` does not parse: {e}"),
        }
    }
    out
}

/// Builtin families filtered to `|G| <= max_order` and deduplicated by
/// fingerprint, sorted by order (ties keep family order).
pub fn generate_corpus(max_order: usize, order_cap: usize) -> Result<Corpus> {
    let mut seen = HashSet::new();
    let mut kept: Vec<(usize, usize, GroupSpec)> = Vec::new();
    for (pos, b) in candidates(max_order).into_iter().enumerate() {
        let order = b.order();
        if order > max_order {
            continue;
        }
        let spec = GroupSpec::Builtin(b);
        let g = build_group(&spec, order_cap)?;
        if seen.insert(fingerprint(&g)) {
            kept.push((order, pos, spec));
        }
    }
    kept.sort_by_key(|(order, pos, _)| (*order, *pos));
    Ok(Corpus {
        entries: kept.into_iter().map(|(_, _, s)| s).collect(),
    })
}

impl Corpus {
    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(GroupSpec::name).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
