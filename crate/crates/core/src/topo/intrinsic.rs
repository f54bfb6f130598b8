//! The interval, order and Frink ideal topologies of an effect algebra.

use super::ideals::{completely_irreducible_dual_ideals, completely_irreducible_ideals};
use super::Topology;
use crate::algebra::{DirectedFamily, EffectAlgebra};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::set::{all_subsets, ElemSet};

/// Closed intervals `[a, b]` form a subbasis of closed sets.
pub fn interval_topology(ea: &EffectAlgebra) -> Result<Topology> {
    let n = ea.size();
    let complements = (0..n)
        .flat_map(|a| ea.up_set(a).iter().map(move |b| (a, b)))
        .map(|(a, b)| ea.interval(a, b).complement(n));
    Topology::from_subbasis_sets(n, complements)
}

/// Open-set test for the order topology of a lattice: `U` is open iff for
/// every nonempty directed `Y` and nonempty down-directed `Z` with
/// `∨Y = ∧Z ∈ U` there are `y ∈ Y`, `z ∈ Z` with `[y, z] ⊆ U`.
pub struct OpenSetCriterion<'a> {
    ea: &'a EffectAlgebra,
    family: DirectedFamily,
}

impl<'a> OpenSetCriterion<'a> {
    pub fn new(ea: &'a EffectAlgebra, limit: usize) -> Result<Self> {
        crate::limits::guard(ea.size(), limit, "open-set criterion")?;
        let family = DirectedFamily::of(ea, &Limits { directed: limit, ..Limits::DEFAULT })?;
        Ok(OpenSetCriterion { ea, family })
    }

    pub fn is_open(&self, u: ElemSet) -> bool {
        self.family
            .directed
            .iter()
            .filter(|&&(_, v)| u.contains(v))
            .all(|&(y_set, v)| {
                self.family
                    .down_directed
                    .iter()
                    .filter(|&&(_, w)| w == v)
                    .all(|&(z_set, _)| {
                        y_set.iter().any(|y| {
                            z_set.iter().any(|z| {
                                let iv = self.ea.interval(y, z);
                                self.ea.leq(y, z) && iv.is_subset(u)
                            })
                        })
                    })
            })
    }
}

/// The open-set criterion applied to a single subset.
pub fn is_order_open(ea: &EffectAlgebra, u: ElemSet, limits: &Limits) -> Result<bool> {
    Ok(OpenSetCriterion::new(ea, limits.open_set_oracle)?.is_open(u))
}

/// The order topology of a finite lattice effect algebra.
///
/// Finite directed sets contain their join, so every subset passes the
/// open-set criterion and the topology is discrete. That fast path is
/// cross-checked: against every subset up to `limits.open_set_oracle`
/// points, and against every singleton up to `limits.directed` points.
pub fn order_topology(ea: &EffectAlgebra, limits: &Limits) -> Result<Topology> {
    ea.lattice()?;
    let n = ea.size();
    let fast = Topology::discrete(n);
    if n <= limits.open_set_oracle {
        let oracle = OpenSetCriterion::new(ea, limits.open_set_oracle)?;
        for u in all_subsets(n) {
            if oracle.is_open(u) != fast.is_open_set(u) {
                return Err(Error::OracleMismatch(u.0));
            }
        }
    } else if n <= limits.directed {
        let oracle = OpenSetCriterion::new(ea, limits.directed)?;
        for x in 0..n {
            if !oracle.is_open(ElemSet::singleton(x)) {
                return Err(Error::OracleMismatch(1 << x));
            }
        }
    }
    Ok(fast)
}

/// Completely irreducible ideals and dual ideals as an open subbasis.
pub fn frink_ideal_topology(ea: &EffectAlgebra) -> Result<Topology> {
    let ideals = completely_irreducible_ideals(ea)?.into_iter().map(|i| i.0);
    let duals = completely_irreducible_dual_ideals(ea)?.into_iter().map(|d| d.0);
    Topology::from_subbasis_sets(ea.size(), ideals.chain(duals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;

    #[test]
    fn interval_topology_is_discrete() {
        for e in [chain(3), b2(), mo2()] {
            assert!(interval_topology(&e).unwrap().is_discrete());
        }
    }

    #[test]
    fn criterion_examples() {
        let l = Limits::DEFAULT;
        let c3 = chain(3);
        assert!(is_order_open(&c3, ElemSet::singleton(1), &l).unwrap());
        assert!(is_order_open(&c3, c3.carrier(), &l).unwrap());
        assert!(is_order_open(&b2(), ElemSet::singleton(1), &l).unwrap());
        assert!(is_order_open(&b2(), ElemSet::EMPTY, &l).unwrap());
    }

    #[test]
    fn criterion_guard() {
        assert!(is_order_open(&chain(9), ElemSet::EMPTY, &Limits::DEFAULT)
            .unwrap_err()
            .is_size_guard());
    }

    #[test]
    fn order_topology_examples() {
        for e in [chain(4), mo2(), b2(), chain(10)] {
            assert!(order_topology(&e, &Limits::DEFAULT).unwrap().is_discrete());
        }
    }

    #[test]
    fn frink_examples() {
        for e in [chain(3), b2(), b3(), mo2()] {
            assert!(frink_ideal_topology(&e).unwrap().is_discrete());
        }
    }

    #[test]
    fn frink_is_finer_than_interval() {
        for e in [chain(4), b3(), mo2()] {
            let id = frink_ideal_topology(&e).unwrap();
            let i = interval_topology(&e).unwrap();
            assert!(id.finer_than(&i).unwrap());
        }
    }
}
