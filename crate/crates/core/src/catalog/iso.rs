//! Isomorphism tests and canonical forms.

use crate::algebra::EffectAlgebra;
use crate::error::{Error, Result};

/// Isomorphism invariants of a single element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Fingerprint {
    role: u8,
    below: usize,
    above: usize,
    defined_sums: usize,
    index: usize,
    is_atom: bool,
}

fn fingerprints(e: &EffectAlgebra) -> Vec<Fingerprint> {
    let atoms = e.atoms();
    (0..e.size())
        .map(|x| Fingerprint {
            role: if x == e.zero() {
                0
            } else if x == e.one() {
                2
            } else {
                1
            },
            below: e.down_set(x).len(),
            above: e.up_set(x).len(),
            defined_sums: (0..e.size()).filter(|&y| e.oplus(x, y).is_some()).count(),
            index: e.isotropic_index(x).unwrap_or(0),
            is_atom: atoms.contains(x),
        })
        .collect()
}

struct Matcher<'a> {
    e1: &'a EffectAlgebra,
    e2: &'a EffectAlgebra,
    f1: Vec<Fingerprint>,
    f2: Vec<Fingerprint>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn consistent(&self, x: usize, y: usize) -> bool {
        for u in (0..self.e1.size()).filter(|&u| u == x || self.map[u].is_some()) {
            let v = if u == x { y } else { self.map[u].unwrap() };
            match (self.e1.oplus(x, u), self.e2.oplus(y, v)) {
                (None, None) => {}
                (Some(c), Some(d)) => {
                    let image = if c == x { Some(y) } else { self.map[c] };
                    match image {
                        Some(img) if img != d => return false,
                        None if self.used[d] || d == y || self.f1[c] != self.f2[d] => return false,
                        _ => {}
                    }
                }
                _ => return false,
            }
        }
        true
    }

    fn search(&mut self, order: &[usize]) -> bool {
        let Some((&x, rest)) = order.split_first() else {
            return true;
        };
        for y in 0..self.e2.size() {
            if self.used[y] || self.f1[x] != self.f2[y] || !self.consistent(x, y) {
                continue;
            }
            self.map[x] = Some(y);
            self.used[y] = true;
            if self.search(rest) {
                return true;
            }
            self.map[x] = None;
            self.used[y] = false;
        }
        false
    }
}

/// Whether some bijection carries the `⊕` table of `e1` onto that of `e2`.
pub fn are_isomorphic(e1: &EffectAlgebra, e2: &EffectAlgebra) -> bool {
    if e1.size() != e2.size() {
        return false;
    }
    let (f1, f2) = (fingerprints(e1), fingerprints(e2));
    let (mut s1, mut s2) = (f1.clone(), f2.clone());
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return false;
    }
    // Rarest fingerprints first keeps the branching low.
    let mut order: Vec<usize> = (0..e1.size()).collect();
    order.sort_by_key(|&x| (f1.iter().filter(|&&f| f == f1[x]).count(), x));
    let mut m = Matcher {
        e1,
        e2,
        f1,
        f2,
        map: vec![None; e1.size()],
        used: vec![false; e1.size()],
    };
    if !m.search(&order) {
        return false;
    }
    let map: Vec<usize> = m.map.iter().map(|y| y.expect("complete matching")).collect();
    (0..e1.size()).all(|a| {
        (0..e1.size()).all(|b| e1.oplus(a, b).map(|c| map[c]) == e2.oplus(map[a], map[b]))
    })
}

/// The lexicographically least encoding of the `⊕` table over all
/// relabelings that keep fingerprint classes in a fixed order. Two
/// algebras are isomorphic iff their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

const UNDEFINED: u8 = u8::MAX;

/// Upper bound on the number of relabelings tried by [`canonical_form`].
pub const CANONICAL_FORM_BUDGET: u64 = 1_000_000;

pub fn canonical_form(e: &EffectAlgebra) -> Result<CanonicalForm> {
    let n = e.size();
    let fp = fingerprints(e);
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by_key(|&x| (fp[x], x));

    let mut relabelings = 1u64;
    let mut i = 0;
    while i < n {
        let j = (i..n).find(|&j| fp[slots[j]] != fp[slots[i]]).unwrap_or(n);
        relabelings = (1..=(j - i) as u64).fold(relabelings, |acc, k| acc.saturating_mul(k));
        i = j;
    }
    if relabelings > CANONICAL_FORM_BUDGET {
        return Err(Error::SizeGuardExceeded {
            what: "canonical form relabelings",
            size: relabelings.min(usize::MAX as u64) as usize,
            limit: CANONICAL_FORM_BUDGET as usize,
        });
    }

    let mut best: Option<Vec<u8>> = None;
    let mut inverse = vec![0usize; n];
    let mut used = vec![false; n];
    permute(e, &fp, &slots, 0, &mut inverse, &mut used, &mut best);
    let mut code = vec![n as u8];
    code.extend(best.expect("at least one relabeling"));
    Ok(CanonicalForm(code))
}

fn permute(
    e: &EffectAlgebra,
    fp: &[Fingerprint],
    slots: &[usize],
    k: usize,
    inverse: &mut Vec<usize>,
    used: &mut Vec<bool>,
    best: &mut Option<Vec<u8>>,
) {
    let n = e.size();
    if k == n {
        let mut label = vec![0u8; n];
        for (new, &old) in inverse.iter().enumerate() {
            label[old] = new as u8;
        }
        let code: Vec<u8> = (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .map(|(i, j)| e.oplus(inverse[i], inverse[j]).map_or(UNDEFINED, |c| label[c]))
            .collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    let class = fp[slots[k]];
    for x in 0..n {
        if used[x] || fp[x] != class {
            continue;
        }
        used[x] = true;
        inverse[k] = x;
        permute(e, fp, slots, k + 1, inverse, used, best);
        used[x] = false;
    }
}
