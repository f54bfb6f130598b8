//! Finite topological spaces and the intrinsic topologies of an effect
//! algebra.
//!
//! A topology on a finite set is determined by the smallest open
//! neighbourhood of each point (the intersection of all opens containing
//! it), and two topologies are equal iff these neighbourhoods agree. That
//! vector is the canonical form stored in [`Topology`]; the full family of
//! opens is only materialized on request, as a sorted list of bitmasks.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::set::ElemSet;

mod disconnect;
mod ideals;
mod intrinsic;

pub use disconnect::{
    binary_op_continuous, clopen_upper_sets, is_totally_order_disconnected, oplus_domain,
    oplus_is_continuous, unary_op_continuous,
};
pub use ideals::{
    completely_irreducible, completely_irreducible_dual_ideals, completely_irreducible_ideals,
    dual_ideals, ideals, DualIdeal, Ideal,
};
pub use intrinsic::{
    frink_ideal_topology, interval_topology, is_order_open, order_topology, OpenSetCriterion,
};

/// A topology on `{0, .., n-1}`, stored as minimal open neighbourhoods.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Topology {
    nbhd: Vec<FixedBitSet>,
}

/// Converts an element set into a bitset of width `n`.
pub fn bits(set: ElemSet, n: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for x in set {
        b.insert(x);
    }
    b
}

fn full(n: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    b.insert_range(..);
    b
}

impl Topology {
    /// The topology generated by `subbasis`: finite intersections (the empty
    /// one being the whole carrier), then arbitrary unions.
    pub fn from_subbasis<'a, I>(n: usize, subbasis: I) -> Result<Topology>
    where
        I: IntoIterator<Item = &'a FixedBitSet>,
    {
        let mut nbhd = vec![full(n); n];
        for s in subbasis {
            if s.ones().any(|x| x >= n) {
                return Err(Error::DomainMismatch(format!(
                    "subbasis member has points outside a carrier of {n}"
                )));
            }
            for x in s.ones() {
                nbhd[x].intersect_with(s);
            }
        }
        Ok(Topology { nbhd })
    }

    /// [`Topology::from_subbasis`] for subsets given as element sets.
    pub fn from_subbasis_sets<I>(n: usize, subbasis: I) -> Result<Topology>
    where
        I: IntoIterator<Item = ElemSet>,
    {
        let members: Vec<FixedBitSet> = subbasis.into_iter().map(|s| bits(s, n)).collect();
        Topology::from_subbasis(n, &members)
    }

    pub fn discrete(n: usize) -> Topology {
        let nbhd = (0..n)
            .map(|x| {
                let mut b = FixedBitSet::with_capacity(n);
                b.insert(x);
                b
            })
            .collect();
        Topology { nbhd }
    }

    pub fn indiscrete(n: usize) -> Topology {
        Topology { nbhd: vec![full(n); n] }
    }

    pub fn size(&self) -> usize {
        self.nbhd.len()
    }

    /// The smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> &FixedBitSet {
        &self.nbhd[x]
    }

    pub fn is_open(&self, u: &FixedBitSet) -> bool {
        u.ones().all(|x| self.nbhd[x].is_subset(u))
    }

    pub fn is_open_set(&self, u: ElemSet) -> bool {
        self.is_open(&bits(u, self.size()))
    }

    pub fn is_closed_set(&self, u: ElemSet) -> bool {
        self.is_open_set(u.complement(self.size()))
    }

    /// Every open set, as bitmasks in increasing integer order.
    pub fn opens(&self, limits: &Limits) -> Result<Vec<u64>> {
        let n = self.size();
        limits.check_topology(n, "open-set materialization")?;
        let nbhd: Vec<u64> = self
            .nbhd
            .iter()
            .map(|b| b.ones().fold(0u64, |m, y| m | 1 << y))
            .collect();
        Ok((0u64..1 << n)
            .filter(|&u| ElemSet(u).iter().all(|x| nbhd[x] & !u == 0))
            .collect())
    }

    /// Number of open sets, when it can be produced without exceeding the
    /// materialization guard (or the topology is discrete).
    pub fn open_count(&self, limits: &Limits) -> Option<u64> {
        if self.is_discrete() && self.size() < 64 {
            return Some(1 << self.size());
        }
        self.opens(limits).ok().map(|o| o.len() as u64)
    }

    /// Distinct points have disjoint open neighbourhoods.
    pub fn is_hausdorff(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (x + 1..n).all(|y| self.nbhd[x].is_disjoint(&self.nbhd[y])))
    }

    pub fn is_discrete(&self) -> bool {
        self.nbhd
            .iter()
            .enumerate()
            .all(|(x, b)| b.count_ones(..) == 1 && b.contains(x))
    }

    /// Always true: every open cover of a finite space is finite.
    pub fn is_compact(&self) -> bool {
        true
    }

    fn same_carrier(&self, other: &Topology) -> Result<()> {
        if self.size() != other.size() {
            return Err(Error::CarrierMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(())
    }

    /// Every open set of `other` is open in `self`.
    pub fn finer_than(&self, other: &Topology) -> Result<bool> {
        self.same_carrier(other)?;
        Ok(self.nbhd.iter().zip(&other.nbhd).all(|(mine, theirs)| mine.is_subset(theirs)))
    }

    pub fn equals(&self, other: &Topology) -> Result<bool> {
        self.same_carrier(other)?;
        Ok(self == other)
    }

    /// Product topology on `self × other`; the pair `(i, j)` is point
    /// `i * other.size() + j`.
    pub fn product(&self, other: &Topology) -> Topology {
        let (n1, n2) = (self.size(), other.size());
        let mut nbhd = Vec::with_capacity(n1 * n2);
        for i in 0..n1 {
            for j in 0..n2 {
                let mut b = FixedBitSet::with_capacity(n1 * n2);
                for p in self.nbhd[i].ones() {
                    for q in other.nbhd[j].ones() {
                        b.insert(p * n2 + q);
                    }
                }
                nbhd.push(b);
            }
        }
        Topology { nbhd }
    }

    /// Trace topology on `subset`; point `k` of the result is the `k`-th
    /// smallest member of `subset`.
    pub fn subspace(&self, subset: &FixedBitSet) -> Result<Topology> {
        let n = self.size();
        if subset.ones().any(|x| x >= n) {
            return Err(Error::DomainMismatch("subspace is not inside the carrier".into()));
        }
        let points: Vec<usize> = subset.ones().collect();
        let mut rank = vec![usize::MAX; n];
        for (k, &p) in points.iter().enumerate() {
            rank[p] = k;
        }
        let m = points.len();
        let nbhd = points
            .iter()
            .map(|&p| {
                let mut b = FixedBitSet::with_capacity(m);
                for y in self.nbhd[p].ones().filter(|&y| rank[y] != usize::MAX) {
                    b.insert(rank[y]);
                }
                b
            })
            .collect();
        Ok(Topology { nbhd })
    }
}

/// Whether the total map `f` (given by its value table) is continuous:
/// the preimage of every basic open set of `cod` is open in `dom`.
pub fn is_continuous(f: &[usize], dom: &Topology, cod: &Topology) -> Result<bool> {
    if f.len() != dom.size() {
        return Err(Error::DomainMismatch(format!(
            "map is defined on {} points, domain topology has {}",
            f.len(),
            dom.size()
        )));
    }
    if let Some(&y) = f.iter().find(|&&y| y >= cod.size()) {
        return Err(Error::DomainMismatch(format!("map value {y} outside codomain")));
    }
    let m = dom.size();
    Ok((0..cod.size()).all(|y| {
        let target = cod.neighbourhood(y);
        let mut preimage = FixedBitSet::with_capacity(m);
        for (x, &fx) in f.iter().enumerate() {
            if target.contains(fx) {
                preimage.insert(x);
            }
        }
        dom.is_open(&preimage)
    }))
}
