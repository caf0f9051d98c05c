//! Group descriptions: the builtin name grammar and the generator file format.
//!
//! Builtin grammar: `C<n>`, `D<2n>` (dihedral of order 2n), `Q<4n>`
//! (dicyclic; `Q8` is the quaternion group), `S<n>` and `A<n>` for n <= 6,
//! `SL(2,p)`, `GL(2,p)`, semidirect products `C<p>:C<q>` with q | p-1, and
//! direct products `X x Y` (spaces optional).
//!
//! Generator files:
//!
//! ```text
//! name Q8-as-matrices
//! matrix 3
//! 0 1 2 0
//! 1 1 1 2
//! ```
//!
//! or `perm <degree>` followed by one cycle-notation generator per line.

use std::fmt;
use std::str::FromStr;

use crate::arith::{is_prime, mult_order, primitive_root};
use crate::error::{Error, Result};
use crate::group::{Carrier, FiniteGroup, GroupElementRep};

pub const DEFAULT_ORDER_CAP: usize = 2000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Cyclic(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    /// Dicyclic group of the given order (a multiple of 4).
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    SpecialLinear(u32),
    GeneralLinear(u32),
    /// `C_p : C_q` with the faithful action `x -> a x` on `Z/p`.
    Semidirect {
        p: usize,
        q: usize,
    },
    Product(Vec<Builtin>),
}

/// Parsed form of a builtin name or a generator file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Builtin(Builtin),
    Explicit {
        name: String,
        carrier: Carrier,
        generators: Vec<GroupElementRep>,
    },
}

fn parse_num(s: &str, what: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::Parse(format!("expected a number in {what}, found '{s}'")))
}

fn parse_factor(s: &str) -> Result<Builtin> {
    let s = s.trim();
    let err = || Error::Parse(format!("unknown builtin group '{s}'"));
    if let Some(inner) = s.strip_prefix("SL(2,").and_then(|r| r.strip_suffix(')')) {
        let q = parse_num(inner.trim(), s)?;
        if !is_prime(q) {
            return Err(Error::Parse(format!("{s}: field size must be prime")));
        }
        return Ok(Builtin::SpecialLinear(q as u32));
    }
    if let Some(inner) = s.strip_prefix("GL(2,").and_then(|r| r.strip_suffix(')')) {
        let q = parse_num(inner.trim(), s)?;
        if !is_prime(q) {
            return Err(Error::Parse(format!("{s}: field size must be prime")));
        }
        return Ok(Builtin::GeneralLinear(q as u32));
    }
    if let Some((left, right)) = s.split_once(':') {
        let p = parse_num(left.strip_prefix('C').ok_or_else(err)?, s)?;
        let q = parse_num(right.strip_prefix('C').ok_or_else(err)?, s)?;
        if !is_prime(p) || q == 0 || (p - 1) % q != 0 {
            return Err(Error::Parse(format!("{s}: need p prime and q | p-1")));
        }
        return Ok(Builtin::Semidirect { p, q });
    }
    let (head, tail) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(err)?);
    let n = parse_num(tail, s)?;
    match head {
        "C" if n >= 1 => Ok(Builtin::Cyclic(n)),
        "D" if n >= 2 && n % 2 == 0 => Ok(Builtin::Dihedral(n)),
        "Q" if n >= 8 && n % 4 == 0 => Ok(Builtin::Dicyclic(n)),
        "S" if (1..=6).contains(&n) => Ok(Builtin::Symmetric(n)),
        "A" if (1..=6).contains(&n) => Ok(Builtin::Alternating(n)),
        _ => Err(err()),
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty group name".into()));
        }
        let factors = compact.split('x').map(parse_factor).collect::<Result<Vec<_>>>()?;
        Ok(if factors.len() == 1 {
            factors.into_iter().next().unwrap()
        } else {
            Builtin::Product(factors)
        })
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Cyclic(n) => write!(f, "C{n}"),
            Builtin::Dihedral(n) => write!(f, "D{n}"),
            Builtin::Dicyclic(n) => write!(f, "Q{n}"),
            Builtin::Symmetric(n) => write!(f, "S{n}"),
            Builtin::Alternating(n) => write!(f, "A{n}"),
            Builtin::SpecialLinear(q) => write!(f, "SL(2,{q})"),
            Builtin::GeneralLinear(q) => write!(f, "GL(2,{q})"),
            Builtin::Semidirect { p, q } => write!(f, "C{p}:C{q}"),
            Builtin::Product(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl Builtin {
    /// Group order, computed from the family formula without building anything.
    pub fn order(&self) -> usize {
        match self {
            Builtin::Cyclic(n) | Builtin::Dihedral(n) | Builtin::Dicyclic(n) => *n,
            Builtin::Symmetric(n) => factorial(*n),
            Builtin::Alternating(n) => (factorial(*n) / 2).max(1),
            Builtin::SpecialLinear(q) => {
                let q = *q as usize;
                q * (q * q - 1)
            }
            Builtin::GeneralLinear(q) => {
                let q = *q as usize;
                (q * q - 1) * (q * q - q)
            }
            Builtin::Semidirect { p, q } => p * q,
            Builtin::Product(parts) => parts.iter().map(Builtin::order).product(),
        }
    }

    fn carrier_and_generators(&self) -> Result<(Carrier, Vec<GroupElementRep>)> {
        let perm = |degree: usize, gens: Vec<Vec<u32>>| -> Result<(Carrier, Vec<GroupElementRep>)> {
            let gens = gens
                .into_iter()
                .map(GroupElementRep::permutation)
                .collect::<Result<Vec<_>>>()?;
            Ok((Carrier::Permutation { degree }, gens))
        };
        let cycle = |n: usize| -> Vec<u32> { (0..n as u32).map(|i| (i + 1) % n as u32).collect() };
        let swap01 = |n: usize| -> Vec<u32> {
            let mut v: Vec<u32> = (0..n as u32).collect();
            v.swap(0, 1);
            v
        };
        match *self {
            Builtin::Cyclic(1) | Builtin::Symmetric(1) | Builtin::Alternating(1..=2) => perm(1, vec![]),
            Builtin::Cyclic(n) => perm(n, vec![cycle(n)]),
            Builtin::Dihedral(2) => perm(2, vec![swap01(2)]),
            Builtin::Dihedral(4) => perm(4, vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]]),
            Builtin::Dihedral(order) => {
                let n = order / 2;
                let reflect: Vec<u32> = (0..n).map(|i| ((n - i) % n) as u32).collect();
                perm(n, vec![cycle(n), reflect])
            }
            Builtin::Dicyclic(order) => {
                // right regular action on the words a^i b^j, point i + 2n*j
                let m = order / 2;
                let n = m / 2;
                let point = |i: usize, j: usize| (i % m + m * j) as u32;
                let mut by_a = Vec::with_capacity(order);
                let mut by_b = Vec::with_capacity(order);
                for j in 0..2 {
                    for i in 0..m {
                        by_a.push(if j == 0 { point(i + 1, 0) } else { point(i + m - 1, 1) });
                        by_b.push(if j == 0 { point(i, 1) } else { point(i + n, 0) });
                    }
                }
                perm(order, vec![by_a, by_b])
            }
            Builtin::Symmetric(2) => perm(2, vec![swap01(2)]),
            Builtin::Symmetric(n) => perm(n, vec![swap01(n), cycle(n)]),
            Builtin::Alternating(n) => {
                let gens = (2..n)
                    .map(|k| {
                        let mut v: Vec<u32> = (0..n as u32).collect();
                        v[0] = 1;
                        v[1] = k as u32;
                        v[k] = 0;
                        v
                    })
                    .collect();
                perm(n, gens)
            }
            Builtin::SpecialLinear(q) => Ok((
                Carrier::Matrix2 { modulus: q },
                vec![
                    GroupElementRep::matrix2(q, [1, 1, 0, 1])?,
                    GroupElementRep::matrix2(q, [0, 1, -1, 0])?,
                ],
            )),
            Builtin::GeneralLinear(q) => {
                let w = primitive_root(q as u64) as i64;
                Ok((
                    Carrier::Matrix2 { modulus: q },
                    vec![
                        GroupElementRep::matrix2(q, [1, 1, 0, 1])?,
                        GroupElementRep::matrix2(q, [0, 1, -1, 0])?,
                        GroupElementRep::matrix2(q, [w, 0, 0, 1])?,
                    ],
                ))
            }
            Builtin::Semidirect { p, q } => {
                let root = primitive_root(p as u64);
                let a = (0..(p - 1) / q).fold(1u64, |acc, _| acc * root % p as u64);
                debug_assert_eq!(mult_order(a, p as u64) as usize, q.max(1));
                let scale: Vec<u32> = (0..p as u64).map(|x| (x * a % p as u64) as u32).collect();
                perm(p, vec![cycle(p), scale])
            }
            Builtin::Product(ref parts) => {
                let mut degree = 0;
                let mut blocks = Vec::new();
                for part in parts {
                    let (carrier, gens) = part.carrier_and_generators()?;
                    let gens: Vec<Vec<u32>> = gens.iter().map(GroupElementRep::as_permutation).collect();
                    let d = match carrier {
                        Carrier::Permutation { degree } => degree,
                        Carrier::Matrix2 { modulus } => (modulus * modulus - 1) as usize,
                    };
                    blocks.push((degree, d, gens));
                    degree += d;
                }
                let mut all = Vec::new();
                for (offset, d, gens) in blocks {
                    for g in gens {
                        let mut v: Vec<u32> = (0..degree as u32).collect();
                        for i in 0..d {
                            v[offset + i] = offset as u32 + g[i];
                        }
                        all.push(v);
                    }
                }
                perm(degree, all)
            }
        }
    }
}

impl GroupSpec {
    /// Parses the generator file format.
    pub fn from_file_text(text: &str) -> Result<GroupSpec> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let name = lines
            .next()
            .and_then(|l| l.strip_prefix("name"))
            .map(|n| n.trim().to_string())
            .ok_or_else(|| Error::Parse("first line must be `name <label>`".into()))?;
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing carrier line".into()))?;
        let (kind, arg) = header
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Parse(format!("bad carrier line '{header}'")))?;
        let arg = parse_num(arg.trim(), header)?;
        let (carrier, generators) = match kind {
            "perm" => {
                let gens = lines
                    .map(|l| GroupElementRep::from_cycles(l, arg))
                    .collect::<Result<Vec<_>>>()?;
                (Carrier::Permutation { degree: arg }, gens)
            }
            "matrix" => {
                let gens = lines.map(|l| parse_matrix(l, arg as u32)).collect::<Result<Vec<_>>>()?;
                (Carrier::Matrix2 { modulus: arg as u32 }, gens)
            }
            other => return Err(Error::Parse(format!("unknown carrier '{other}'"))),
        };
        if let Carrier::Matrix2 { modulus } = carrier {
            if !is_prime(modulus as usize) {
                return Err(Error::InvalidGenerator(format!("modulus {modulus} is not prime")));
            }
        }
        Ok(GroupSpec::Explicit {
            name,
            carrier,
            generators,
        })
    }

    pub fn name(&self) -> String {
        match self {
            GroupSpec::Builtin(b) => b.to_string(),
            GroupSpec::Explicit { name, .. } => name.clone(),
        }
    }
}

/// `a b c d` row-major entries of a 2x2 matrix mod `q`.
pub fn parse_matrix(line: &str, q: u32) -> Result<GroupElementRep> {
    let vals = line
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad matrix entry '{t}'")))
        })
        .collect::<Result<Vec<_>>>()?;
    let entries: [i64; 4] = vals
        .try_into()
        .map_err(|_| Error::Parse(format!("matrix needs four entries: '{line}'")))?;
    GroupElementRep::matrix2(q, entries)
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(GroupSpec::Builtin(s.parse()?))
    }
}

/// Materializes a group description, refusing closures above `order_cap`.
pub fn build_group(spec: &GroupSpec, order_cap: usize) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Builtin(b) => {
            let (carrier, gens) = b.carrier_and_generators()?;
            FiniteGroup::generate(b.to_string(), carrier, &gens, order_cap)
        }
        GroupSpec::Explicit {
            name,
            carrier,
            generators,
        } => FiniteGroup::generate(name.clone(), *carrier, generators, order_cap),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> FiniteGroup {
        build_group(&s.parse().unwrap(), DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn builtin_orders_match_formula() {
        for name in [
            "C1",
            "C7",
            "D4",
            "D8",
            "D12",
            "Q8",
            "Q12",
            "Q16",
            "S3",
            "S4",
            "A4",
            "A5",
            "S1",
            "A3",
            "SL(2,3)",
            "SL(2,5)",
            "GL(2,3)",
            "C7:C3",
            "C5:C4",
            "S3 x C2",
            "C2xC2xC2",
            "Q8 x C3",
            "SL(2,3) x C2",
        ] {
            let spec: Builtin = name.parse().unwrap();
            let g = build(name);
            assert_eq!(g.order(), spec.order(), "{name}");
        }
    }

    #[test]
    fn named_examples() {
        assert_eq!(build("SL(2,5)").order(), 120);
        assert_eq!(build("C1").order(), 1);
        assert_eq!(build("S4").order(), 24);
        let sl25 = build("SL(2,5)");
        let u = sl25
            .index_of(&GroupElementRep::matrix2(5, [1, 1, 0, 1]).unwrap())
            .unwrap();
        assert_eq!(sl25.element_order(u), 5);
    }

    #[test]
    fn dicyclic_is_quaternion() {
        let q8 = build("Q8");
        assert!(q8.check_axioms());
        // one involution, six elements of order four
        assert_eq!(q8.order_histogram(), vec![(1, 1), (2, 1), (4, 6)]);
        let q12 = build("Q12");
        assert_eq!(q12.order_histogram(), vec![(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)]);
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "X3", "D7", "Q6", "S7", "C6:C4", "C4:C2", "SL(2,4)", "C"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn product_names_round_trip() {
        let b: Builtin = "S3 x C3".parse().unwrap();
        assert_eq!(b.to_string(), "S3xC3");
        assert_eq!(b.to_string().parse::<Builtin>().unwrap(), b);
    }

    #[test]
    fn file_format() {
        let text = "name Q8m\nmatrix 3\n0 1 2 0\n1 1 1 2\n";
        let spec = GroupSpec::from_file_text(text).unwrap();
        let g = build_group(&spec, 100).unwrap();
        assert_eq!(g.name(), "Q8m");
        assert_eq!(g.order(), 8);
        let text = "name K4\nperm 4\n(0 1)(2 3)\n(0 2)(1 3)\n";
        let g = build_group(&GroupSpec::from_file_text(text).unwrap(), 100).unwrap();
        assert_eq!(g.order(), 4);
        let bad = "name Z\nmatrix 3\n1 1 1 1\n";
        assert!(matches!(
            GroupSpec::from_file_text(bad),
            Err(Error::InvalidGenerator(_))
        ));
        assert!(GroupSpec::from_file_text("perm 3\n(0 1)").is_err());
    }
}
