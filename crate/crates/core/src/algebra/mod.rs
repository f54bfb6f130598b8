//! Finite effect algebras given by explicit partial `⊕`-tables.
//!
//! [`RawTable`] is the unchecked input; [`EffectAlgebra::validate`] checks the
//! four axioms and derives the order, orthosupplement and (when it exists)
//! the lattice structure. Everything else in this module hangs off a
//! validated [`EffectAlgebra`], which is immutable apart from lazily filled
//! caches.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::error::{Axiom, Error, Result};
use crate::set::ElemSet;

mod decompose;
mod directed;
mod elements;
mod lattice;

pub use decompose::{AtomDecomposition, SharpDecomposition};
pub use directed::DirectedFamily;
pub use elements::SharpStructure;
pub use lattice::Lattice;

/// Unvalidated effect-algebra data: element names, the two constants and a
/// partial sum map.
///
/// `sums` is expected to be symmetric; [`RawTable::add_sum`] keeps it that
/// way, but the map is public so broken tables can be represented too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTable {
    pub name: String,
    pub names: Vec<String>,
    pub zero: usize,
    pub one: usize,
    pub sums: BTreeMap<(usize, usize), usize>,
}

impl RawTable {
    /// A table with the given elements and no sums at all.
    pub fn new(name: impl Into<String>, names: Vec<String>, zero: usize, one: usize) -> RawTable {
        RawTable {
            name: name.into(),
            names,
            zero,
            one,
            sums: BTreeMap::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    /// Records `a ⊕ b = c` in both argument orders.
    pub fn add_sum(&mut self, a: usize, b: usize, c: usize) {
        self.sums.insert((a, b), c);
        self.sums.insert((b, a), c);
    }

    /// Records `0 ⊕ x = x` for every element.
    pub fn add_zero_sums(&mut self) {
        for x in 0..self.size() {
            self.add_sum(self.zero, x, x);
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn check_well_formed(&self) -> Result<()> {
        let n = self.size();
        if n == 0 {
            return Err(Error::Malformed("empty carrier".into()));
        }
        if n > ElemSet::CAPACITY {
            return Err(Error::Malformed(format!(
                "carrier of {n} elements exceeds the supported maximum of {}",
                ElemSet::CAPACITY
            )));
        }
        for (i, name) in self.names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::Malformed(format!("invalid element name {name:?}")));
            }
            if self.names[..i].contains(name) {
                return Err(Error::Malformed(format!("duplicate element name {name:?}")));
            }
        }
        if self.zero >= n || self.one >= n {
            return Err(Error::Malformed("zero or one index out of range".into()));
        }
        if let Some((&(a, b), &c)) = self.sums.iter().find(|(&(a, b), &c)| a >= n || b >= n || c >= n) {
            return Err(Error::Malformed(format!("sum ({a}, {b}) -> {c} out of range")));
        }
        Ok(())
    }
}

/// A validated finite effect algebra.
#[derive(Clone, Debug)]
pub struct EffectAlgebra {
    name: String,
    names: Vec<String>,
    zero: usize,
    one: usize,
    sum: Vec<Option<usize>>,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    ortho: Vec<usize>,
    lattice: std::result::Result<Lattice, Error>,
    cache: Cache,
}

#[derive(Clone, Debug, Default)]
struct Cache {
    atoms: OnceLock<ElemSet>,
    distributive: OnceLock<Option<(usize, usize, usize)>>,
    sharp: OnceLock<ElemSet>,
    mv: OnceLock<bool>,
    o_continuous: OnceLock<bool>,
    algebraic: OnceLock<bool>,
}

impl EffectAlgebra {
    /// Checks the axioms and builds the derived structure.
    ///
    /// Axioms are checked in the order 1, 4, 3, 2 so that the cheap,
    /// local conditions report first.
    pub fn validate(raw: &RawTable) -> Result<EffectAlgebra> {
        raw.check_well_formed()?;
        if raw.zero == raw.one {
            return Err(Error::Degenerate);
        }
        let n = raw.size();

        for (&(a, b), &c) in &raw.sums {
            if raw.sums.get(&(b, a)) != Some(&c) {
                return Err(Error::AxiomViolation {
                    axiom: Axiom::Commutativity,
                    witness: vec![a, b],
                });
            }
        }

        let mut sum = vec![None; n * n];
        for (&(a, b), &c) in &raw.sums {
            sum[a * n + b] = Some(c);
        }
        let get = |a: usize, b: usize| sum[a * n + b];
        let (zero, one) = (raw.zero, raw.one);

        if let Some(a) = (0..n).find(|&a| a != zero && get(a, one).is_some()) {
            return Err(Error::AxiomViolation {
                axiom: Axiom::ZeroOne,
                witness: vec![a],
            });
        }

        let mut ortho = Vec::with_capacity(n);
        for a in 0..n {
            let supplements: Vec<usize> = (0..n).filter(|&b| get(a, b) == Some(one)).collect();
            if supplements.len() != 1 {
                let mut witness = vec![a];
                witness.extend(supplements);
                return Err(Error::AxiomViolation {
                    axiom: Axiom::Orthosupplement,
                    witness,
                });
            }
            ortho.push(supplements[0]);
        }

        for a in 0..n {
            for b in 0..n {
                let Some(s) = get(a, b) else { continue };
                for c in 0..n {
                    let Some(t) = get(s, c) else { continue };
                    let ok = get(b, c).and_then(|u| get(a, u)) == Some(t);
                    if !ok {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::Associativity,
                            witness: vec![a, b, c],
                        });
                    }
                }
            }
        }

        let mut up = vec![ElemSet::EMPTY; n];
        let mut down = vec![ElemSet::EMPTY; n];
        for (a, above) in up.iter_mut().enumerate() {
            for b in 0..n {
                if let Some(c) = get(a, b) {
                    above.insert(c);
                    down[c].insert(a);
                }
            }
        }

        let ea = EffectAlgebra {
            name: raw.name.clone(),
            names: raw.names.clone(),
            zero,
            one,
            lattice: Err(Error::Degenerate),
            sum,
            up,
            down,
            ortho,
            cache: Cache::default(),
        };
        ea.check_order()?;
        ea.check_orthosupplement()?;
        let lattice = Lattice::from_order(&ea);
        Ok(EffectAlgebra { lattice, ..ea })
    }

    fn check_order(&self) -> Result<()> {
        let n = self.size();
        for a in 0..n {
            if !self.up[a].contains(a) {
                return Err(Error::InvariantBroken(format!("order not reflexive at {a}")));
            }
            for b in self.up[a] {
                if b != a && self.up[b].contains(a) {
                    return Err(Error::NotAPartialOrder { a, b });
                }
                if !self.up[b].is_subset(self.up[a]) {
                    return Err(Error::InvariantBroken(format!("order not transitive through {a} <= {b}")));
                }
            }
        }
        let all = ElemSet::full(n);
        if self.up[self.zero] != all || self.down[self.one] != all {
            return Err(Error::InvariantBroken("zero/one are not the order bounds".into()));
        }
        Ok(())
    }

    fn check_orthosupplement(&self) -> Result<()> {
        let n = self.size();
        for a in 0..n {
            let a_ = self.ortho[a];
            if self.ortho[a_] != a {
                return Err(Error::InvariantBroken(format!("orthosupplement not involutive at {a}")));
            }
            for b in 0..n {
                let b_ = self.ortho[b];
                if self.oplus(a, b).is_some() != self.leq(a, b_) {
                    return Err(Error::InvariantBroken(format!(
                        "{a} ⊕ {b} defined disagrees with {a} <= {b}'"
                    )));
                }
                if self.leq(a, b) != self.leq(b_, a_) {
                    return Err(Error::InvariantBroken(format!("orthosupplement not antitone at ({a}, {b})")));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    /// Returns a copy carrying a different instance name.
    pub fn renamed(&self, name: impl Into<String>) -> EffectAlgebra {
        EffectAlgebra {
            name: name.into(),
            ..self.clone()
        }
    }

    pub fn oplus(&self, a: usize, b: usize) -> Option<usize> {
        self.sum[a * self.size() + b]
    }

    pub fn orthosupplement(&self, a: usize) -> usize {
        self.ortho[a]
    }

    /// `a ⊖ b`: the `c` with `b ⊕ c = a`, defined exactly when `b <= a`.
    pub fn ominus(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.size()).find(|&c| self.oplus(b, c) == Some(a))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// `{b : a <= b}`.
    pub fn up_set(&self, a: usize) -> ElemSet {
        self.up[a]
    }

    /// `{b : b <= a}`.
    pub fn down_set(&self, a: usize) -> ElemSet {
        self.down[a]
    }

    /// The closed interval `[a, b]`; empty unless `a <= b`.
    pub fn interval(&self, a: usize, b: usize) -> ElemSet {
        self.up[a].intersection(self.down[b])
    }

    pub fn is_upper_set(&self, s: ElemSet) -> bool {
        s.iter().all(|x| self.up[x].is_subset(s))
    }

    pub fn is_lower_set(&self, s: ElemSet) -> bool {
        s.iter().all(|x| self.down[x].is_subset(s))
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in self.up[a] {
                if b != a && self.interval(a, b).len() == 2 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn lattice(&self) -> Result<&Lattice> {
        self.lattice.as_ref().map_err(Clone::clone)
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice.is_ok()
    }

    /// `k·x = x ⊕ .. ⊕ x` (`k` times); `0·x = 0`.
    pub fn multiple(&self, x: usize, k: usize) -> Option<usize> {
        let mut acc = self.zero;
        for _ in 0..k {
            acc = self.oplus(acc, x)?;
        }
        Some(acc)
    }

    /// The isotropic index: the largest `k` with `k·x` defined.
    pub fn isotropic_index(&self, x: usize) -> Result<usize> {
        if x == self.zero {
            return Err(Error::ZeroHasNoIndex);
        }
        let mut k = 1;
        let mut acc = x;
        while let Some(next) = self.oplus(acc, x) {
            acc = next;
            k += 1;
            if k > self.size() {
                return Err(Error::InvariantBroken(format!("isotropic index of {x} exceeds carrier size")));
            }
        }
        Ok(k)
    }

    /// Sum of a finite family (a multiset of elements).
    ///
    /// Folds in index-sorted order. The result is recomputed along a
    /// pseudo-random permutation, seeded by the family itself, and the two
    /// must agree.
    pub fn oplus_family(&self, family: &[usize]) -> Option<usize> {
        let mut sorted = family.to_vec();
        sorted.sort_unstable();
        let canonical = self.fold_sum(&sorted);

        let seed = sorted.iter().fold(0xcbf2_9ce4_8422_2325u64, |h, &x| {
            (h ^ x as u64).wrapping_mul(0x0100_0000_01b3)
        });
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut shuffled = sorted;
        shuffled.shuffle(&mut rng);
        assert_eq!(
            canonical,
            self.fold_sum(&shuffled),
            "⊕ of a family depends on summation order in a validated algebra"
        );
        canonical
    }

    fn fold_sum(&self, items: &[usize]) -> Option<usize> {
        items.iter().try_fold(self.zero, |acc, &x| self.oplus(acc, x))
    }

    /// All defined sums `(a, b, a ⊕ b)` with `a <= b` by index, zero sums
    /// excluded.
    pub fn nonzero_sums(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.size();
        (0..n).flat_map(move |a| (a..n).map(move |b| (a, b))).filter_map(move |(a, b)| {
            if a == self.zero || b == self.zero {
                return None;
            }
            self.oplus(a, b).map(|c| (a, b, c))
        })
    }

    /// The table this algebra was validated from, zero sums included.
    pub fn to_raw(&self) -> RawTable {
        let n = self.size();
        let mut raw = RawTable::new(self.name.clone(), self.names.clone(), self.zero, self.one);
        for a in 0..n {
            for b in 0..n {
                if let Some(c) = self.oplus(a, b) {
                    raw.sums.insert((a, b), c);
                }
            }
        }
        raw
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    /// `{0, a, 1}` with `a ⊕ a = 1`.
    pub fn c2_raw() -> RawTable {
        let mut raw = RawTable::new("c2", names(&["0", "a", "1"]), 0, 2);
        raw.add_zero_sums();
        raw.add_sum(1, 1, 2);
        raw
    }

    /// `{0, p, q, 1}` with `p ⊕ q = 1`.
    pub fn b2_raw() -> RawTable {
        let mut raw = RawTable::new("b2", names(&["0", "p", "q", "1"]), 0, 3);
        raw.add_zero_sums();
        raw.add_sum(1, 2, 3);
        raw
    }

    /// Chain `{0, a, 2a, .., na = 1}` with truncated addition.
    pub fn chain(n: usize) -> EffectAlgebra {
        let mut list = vec!["0".to_string()];
        list.extend((1..n).map(|i| if i == 1 { "a".to_string() } else { format!("{i}a") }));
        list.push("1".into());
        let mut raw = RawTable::new(format!("c{n}"), list, 0, n);
        for i in 0..=n {
            for j in 0..=n - i {
                raw.add_sum(i, j, i + j);
            }
        }
        EffectAlgebra::validate(&raw).unwrap()
    }

    pub fn c2() -> EffectAlgebra {
        EffectAlgebra::validate(&c2_raw()).unwrap()
    }

    pub fn b2() -> EffectAlgebra {
        EffectAlgebra::validate(&b2_raw()).unwrap()
    }

    /// Powerset of three generators; index = bitmask.
    pub fn b3() -> EffectAlgebra {
        let list = (0..8).map(|m: usize| format!("s{m}")).collect();
        let mut raw = RawTable::new("b3", list, 0, 7);
        for a in 0..8usize {
            for b in 0..8usize {
                if a & b == 0 {
                    raw.add_sum(a, b, a | b);
                }
            }
        }
        EffectAlgebra::validate(&raw).unwrap()
    }

    /// Two four-element Boolean blocks glued at 0 and 1:
    /// `0, a, a', b, b', 1` at indices 0..6.
    pub fn mo2() -> EffectAlgebra {
        let mut raw = RawTable::new("mo2", names(&["0", "a", "a'", "b", "b'", "1"]), 0, 5);
        raw.add_zero_sums();
        raw.add_sum(1, 2, 5);
        raw.add_sum(3, 4, 5);
        EffectAlgebra::validate(&raw).unwrap()
    }
}
