//! Canonical families of effect algebras, ways to combine them, exhaustive
//! enumeration of small instances and known-bad mutants.

use std::path::PathBuf;

use crate::algebra::{EffectAlgebra, RawTable};
use crate::error::{Error, Result};
use crate::set::ElemSet;

mod enumerate;
mod iso;
mod mutate;

pub use enumerate::{enumerate_all, enumerate_size};
pub use iso::{are_isomorphic, canonical_form, CanonicalForm};
pub use mutate::{mutate_negative, Mutation};

/// The chain `0 < a < 2a < ... < na = 1` with `ia ⊕ ja = (i + j)a` whenever
/// `i + j <= n`.
pub fn mv_chain(n: usize) -> Result<EffectAlgebra> {
    if n == 0 {
        return Err(Error::InvalidSpec("a chain needs n >= 1".into()));
    }
    if n + 1 > ElemSet::CAPACITY {
        return Err(Error::SizeGuardExceeded {
            what: "chain",
            size: n + 1,
            limit: ElemSet::CAPACITY,
        });
    }
    let names = (0..=n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == n => "1".to_string(),
            1 => "a".to_string(),
            i => format!("{i}a"),
        })
        .collect();
    let mut raw = RawTable::new(format!("c{n}"), names, 0, n);
    for i in 0..=n {
        for j in i..=n - i {
            raw.add_sum(i, j, i + j);
        }
    }
    EffectAlgebra::validate(&raw)
}

const GENERATORS: &str = "pqrstu";

/// The powerset of `k` generators, with `⊕` the union of disjoint sets.
/// Element `m` is the subset whose bitmask is `m`.
pub fn boolean_algebra(k: usize) -> Result<EffectAlgebra> {
    if k == 0 {
        return Err(Error::InvalidSpec("a Boolean algebra needs k >= 1".into()));
    }
    if k > GENERATORS.len() {
        return Err(Error::SizeGuardExceeded {
            what: "Boolean algebra",
            size: 1usize.checked_shl(k as u32).unwrap_or(usize::MAX),
            limit: ElemSet::CAPACITY,
        });
    }
    let n = 1usize << k;
    let names = (0..n)
        .map(|m| match m {
            0 => "0".to_string(),
            m if m == n - 1 => "1".to_string(),
            m => GENERATORS
                .chars()
                .enumerate()
                .filter(|&(i, _)| m >> i & 1 == 1)
                .map(|(_, c)| c)
                .collect(),
        })
        .collect();
    let mut raw = RawTable::new(format!("b{k}"), names, 0, n - 1);
    for a in 0..n {
        for b in 0..n {
            if a & b == 0 {
                raw.add_sum(a, b, a | b);
            }
        }
    }
    EffectAlgebra::validate(&raw)
}

fn fresh_name(taken: &[String], name: &str) -> String {
    if !taken.iter().any(|t| t == name) {
        return name.to_string();
    }
    (2..)
        .map(|i| format!("{name}.{i}"))
        .find(|candidate| !taken.contains(candidate))
        .expect("unbounded suffix search")
}

/// Glues `e1` and `e2` along their zeros and ones, with no sums between
/// the remaining elements of different summands.
///
/// The result lists `0`, the middle of `e1`, the middle of `e2`, then `1`.
/// Names from `e2` that clash get a numeric suffix.
pub fn horizontal_sum(e1: &EffectAlgebra, e2: &EffectAlgebra) -> Result<EffectAlgebra> {
    let middle = |e: &EffectAlgebra| -> Vec<usize> {
        (0..e.size()).filter(|&x| x != e.zero() && x != e.one()).collect()
    };
    let (m1, m2) = (middle(e1), middle(e2));
    let n = m1.len() + m2.len() + 2;
    if n > ElemSet::CAPACITY {
        return Err(Error::SizeGuardExceeded {
            what: "horizontal sum",
            size: n,
            limit: ElemSet::CAPACITY,
        });
    }
    let one = n - 1;

    let mut names = vec![e1.element_name(e1.zero()).to_string()];
    let mut map1 = vec![0; e1.size()];
    map1[e1.one()] = one;
    for (k, &x) in m1.iter().enumerate() {
        map1[x] = k + 1;
        names.push(e1.element_name(x).to_string());
    }
    let mut map2 = vec![0; e2.size()];
    map2[e2.one()] = one;
    let mut second = Vec::new();
    for (k, &x) in m2.iter().enumerate() {
        map2[x] = m1.len() + k + 1;
        let mut taken = names.clone();
        taken.push(e1.element_name(e1.one()).to_string());
        taken.extend(second.iter().cloned());
        second.push(fresh_name(&taken, e2.element_name(x)));
    }
    names.extend(second);
    names.push(e1.element_name(e1.one()).to_string());

    let mut raw = RawTable::new(format!("hsum({},{})", e1.name(), e2.name()), names, 0, one);
    for (e, map) in [(e1, &map1), (e2, &map2)] {
        for a in 0..e.size() {
            for b in 0..e.size() {
                if let Some(c) = e.oplus(a, b) {
                    raw.add_sum(map[a], map[b], map[c]);
                }
            }
        }
    }
    EffectAlgebra::validate(&raw)
}

/// The componentwise product; `(x, y)` is element `x * e2.size() + y`.
pub fn direct_product(e1: &EffectAlgebra, e2: &EffectAlgebra) -> Result<EffectAlgebra> {
    let (n1, n2) = (e1.size(), e2.size());
    let n = n1 * n2;
    if n > ElemSet::CAPACITY {
        return Err(Error::SizeGuardExceeded {
            what: "direct product",
            size: n,
            limit: ElemSet::CAPACITY,
        });
    }
    let names = (0..n)
        .map(|p| format!("({},{})", e1.element_name(p / n2), e2.element_name(p % n2)))
        .collect();
    let zero = e1.zero() * n2 + e2.zero();
    let one = e1.one() * n2 + e2.one();
    let mut raw = RawTable::new(format!("{}x{}", e1.name(), e2.name()), names, zero, one);
    for p in 0..n {
        for q in 0..n {
            let left = e1.oplus(p / n2, q / n2);
            let right = e2.oplus(p % n2, q % n2);
            if let (Some(l), Some(r)) = (left, right) {
                raw.sums.insert((p, q), l * n2 + r);
            }
        }
    }
    EffectAlgebra::validate(&raw)
}

/// The horizontal sum of `m` copies of the four-element Boolean algebra.
pub fn mo(m: usize) -> Result<EffectAlgebra> {
    let b2 = boolean_algebra(2)?;
    let mut acc = b2.clone();
    for _ in 1..m.max(1) {
        acc = horizontal_sum(&acc, &b2)?;
    }
    Ok(acc.renamed(format!("mo{m}")))
}

/// A recipe for an effect algebra.
///
/// Textual grammar: `chain:N`, `boolean:K`, `hsum(S,S)`, `product(S,S)`,
/// `file:PATH`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogSpec {
    Chain(usize),
    Boolean(usize),
    HorizontalSum(Box<CatalogSpec>, Box<CatalogSpec>),
    Product(Box<CatalogSpec>, Box<CatalogSpec>),
    File(PathBuf),
}

impl CatalogSpec {
    /// Maximum nesting of `hsum` and `product`.
    pub const MAX_DEPTH: usize = 8;

    pub fn parse(text: &str) -> Result<CatalogSpec> {
        parse_spec(text.trim(), 0)
    }

    pub fn build(&self) -> Result<EffectAlgebra> {
        match self {
            CatalogSpec::Chain(n) => mv_chain(*n),
            CatalogSpec::Boolean(k) => boolean_algebra(*k),
            CatalogSpec::HorizontalSum(a, b) => horizontal_sum(&a.build()?, &b.build()?),
            CatalogSpec::Product(a, b) => direct_product(&a.build()?, &b.build()?),
            CatalogSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                EffectAlgebra::validate(&crate::io::parse_ea(&text)?)
            }
        }
    }
}

impl std::fmt::Display for CatalogSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogSpec::Chain(n) => write!(f, "chain:{n}"),
            CatalogSpec::Boolean(k) => write!(f, "boolean:{k}"),
            CatalogSpec::HorizontalSum(a, b) => write!(f, "hsum({a},{b})"),
            CatalogSpec::Product(a, b) => write!(f, "product({a},{b})"),
            CatalogSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

fn parse_spec(text: &str, depth: usize) -> Result<CatalogSpec> {
    if depth > CatalogSpec::MAX_DEPTH {
        return Err(Error::InvalidSpec(format!(
            "nesting deeper than {}",
            CatalogSpec::MAX_DEPTH
        )));
    }
    let positive = |s: &str| -> Result<usize> {
        match s.trim().parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(Error::InvalidSpec(format!("expected a positive integer, got {s:?}"))),
        }
    };
    if let Some(n) = text.strip_prefix("chain:") {
        return Ok(CatalogSpec::Chain(positive(n)?));
    }
    if let Some(k) = text.strip_prefix("boolean:") {
        return Ok(CatalogSpec::Boolean(positive(k)?));
    }
    if let Some(path) = text.strip_prefix("file:") {
        if path.is_empty() {
            return Err(Error::InvalidSpec("empty file path".into()));
        }
        return Ok(CatalogSpec::File(PathBuf::from(path)));
    }
    for (head, pair) in [("hsum(", true), ("product(", false)] {
        let Some(rest) = text.strip_prefix(head) else {
            continue;
        };
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::InvalidSpec(format!("missing ')' in {text:?}")))?;
        let (a, b) = split_top_level(inner)
            .ok_or_else(|| Error::InvalidSpec(format!("expected two operands in {text:?}")))?;
        let (a, b) = (
            Box::new(parse_spec(a.trim(), depth + 1)?),
            Box::new(parse_spec(b.trim(), depth + 1)?),
        );
        return Ok(if pair {
            CatalogSpec::HorizontalSum(a, b)
        } else {
            CatalogSpec::Product(a, b)
        });
    }
    Err(Error::InvalidSpec(format!("unrecognized spec {text:?}")))
}

/// Splits `a,b` at the only comma outside parentheses.
fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            ',' if depth == 0 => {
                if split.is_some() {
                    return None;
                }
                split = Some(i);
            }
            _ => {}
        }
    }
    let i = split.filter(|_| depth == 0)?;
    Some((&s[..i], &s[i + 1..]))
}

/// The fixed instance list used by batch checks: chains up to six atoms,
/// Boolean algebras up to three generators, horizontal sums of up to three
/// four-element Boolean algebras, a few mixed horizontal sums and products
/// of at most 24 elements.
pub fn standard_catalog() -> Result<Vec<EffectAlgebra>> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(mv_chain(n)?);
    }
    for k in 1..=3 {
        out.push(boolean_algebra(k)?);
    }
    for m in 2..=3 {
        out.push(mo(m)?);
    }
    let c = |n| mv_chain(n);
    out.push(horizontal_sum(&c(2)?, &c(2)?)?);
    out.push(horizontal_sum(&c(3)?, &boolean_algebra(2)?)?);
    for (a, b) in [(2, 2), (2, 3), (3, 3), (2, 5), (3, 5)] {
        out.push(direct_product(&c(a)?, &c(b)?)?);
    }
    out.push(direct_product(&boolean_algebra(2)?, &c(2)?)?);
    out.push(direct_product(&boolean_algebra(2)?, &c(3)?)?);
    out.push(direct_product(&boolean_algebra(2)?, &c(5)?)?);
    out.push(direct_product(&mo(2)?, &c(2)?)?);
    out.push(direct_product(&mo(2)?, &c(3)?)?);
    out.push(direct_product(&horizontal_sum(&c(2)?, &c(2)?)?, &c(2)?)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_examples() {
        let c1 = mv_chain(1).unwrap();
        assert_eq!(c1.size(), 2);
        let c2 = mv_chain(2).unwrap();
        assert_eq!(c2.orthosupplement(1), 1);
        let c4 = mv_chain(4).unwrap();
        assert_eq!(c4.sharp_set().unwrap(), ElemSet::from_iter([0, 4]));
        assert!(c4.is_mv().unwrap());
        assert_eq!(c4.isotropic_index(1).unwrap(), 4);
        assert!(mv_chain(0).is_err());
    }

    #[test]
    fn boolean_examples() {
        assert_eq!(boolean_algebra(1).unwrap().size(), 2);
        let b2 = boolean_algebra(2).unwrap();
        assert_eq!(b2.atoms(), ElemSet::from_iter([1, 2]));
        assert_eq!(b2.names(), ["0", "p", "q", "1"]);
        let b3 = boolean_algebra(3).unwrap();
        assert_eq!(b3.size(), 8);
        assert_eq!(b3.sharp_set().unwrap(), b3.carrier());
        assert!(b3.is_mv().unwrap());
        assert!(boolean_algebra(7).unwrap_err().is_size_guard());
    }

    #[test]
    fn horizontal_sum_examples() {
        let b2 = boolean_algebra(2).unwrap();
        let mo2 = horizontal_sum(&b2, &b2).unwrap();
        assert_eq!(mo2.size(), 6);
        assert!(!mo2.is_distributive().unwrap());
        assert!(mo2.sharp_structure().unwrap().is_orthomodular);
        assert_eq!(mo2.names(), ["0", "p", "q", "p.2", "q.2", "1"]);

        let c2 = mv_chain(2).unwrap();
        let s = horizontal_sum(&c2, &c2).unwrap();
        assert_eq!(s.size(), 4);
        assert_eq!((s.orthosupplement(1), s.orthosupplement(2)), (1, 2));
        assert_eq!(s.sharp_set().unwrap(), ElemSet::from_iter([0, 3]));

        let two = boolean_algebra(1).unwrap();
        assert!(are_isomorphic(&horizontal_sum(&mo2, &two).unwrap(), &mo2));
    }

    #[test]
    fn product_examples() {
        let c2 = mv_chain(2).unwrap();
        let p = direct_product(&c2, &c2).unwrap();
        assert_eq!(p.size(), 9);
        assert!(p.is_mv().unwrap());
        let b2c2 = direct_product(&boolean_algebra(2).unwrap(), &c2).unwrap();
        assert!(b2c2.is_distributive().unwrap());
        assert!(b2c2.sharp_set().unwrap() != b2c2.carrier());
        // The two-element factor doubles the carrier; the product is a
        // copy of E below a copy of E.
        let two = boolean_algebra(1).unwrap();
        let doubled = direct_product(&b2c2, &two).unwrap();
        assert_eq!(doubled.size(), 2 * b2c2.size());
        assert!(are_isomorphic(&doubled, &direct_product(&two, &b2c2).unwrap()));
        let big = mv_chain(9).unwrap();
        assert!(direct_product(&big, &big).unwrap_err().is_size_guard());
    }

    #[test]
    fn combinations_commute() {
        let (c3, b2) = (mv_chain(3).unwrap(), boolean_algebra(2).unwrap());
        assert!(are_isomorphic(
            &horizontal_sum(&c3, &b2).unwrap(),
            &horizontal_sum(&b2, &c3).unwrap()
        ));
        assert!(are_isomorphic(
            &direct_product(&c3, &b2).unwrap(),
            &direct_product(&b2, &c3).unwrap()
        ));
    }

    #[test]
    fn spec_grammar() {
        let spec = CatalogSpec::parse("hsum(boolean:2, product(chain:2,chain:1))").unwrap();
        assert_eq!(spec.to_string(), "hsum(boolean:2,product(chain:2,chain:1))");
        assert_eq!(CatalogSpec::parse(&spec.to_string()).unwrap(), spec);
        assert_eq!(spec.build().unwrap().size(), 8);
        for bad in ["chain:0", "chain:x", "hsum(chain:2)", "product(chain:2,chain:2", "tree:3", "file:"] {
            assert!(CatalogSpec::parse(bad).is_err(), "{bad}");
        }
        let deep = (0..10).fold("chain:1".to_string(), |s, _| format!("hsum({s},chain:1)"));
        assert!(matches!(CatalogSpec::parse(&deep), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn standard_catalog_validates() {
        let all = standard_catalog().unwrap();
        assert!(all.iter().all(|e| e.size() <= 24));
        assert!(all.iter().any(|e| e.size() == 24));
    }
}
