//! Continuity of the algebra's operations and order-disconnectedness.

use fixedbitset::FixedBitSet;

use super::{intrinsic::order_topology, is_continuous, Topology};
use crate::algebra::EffectAlgebra;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::set::{all_subsets, ElemSet};

/// Upper sets that are both open and closed in `t`.
pub fn clopen_upper_sets(ea: &EffectAlgebra, t: &Topology, limits: &Limits) -> Result<Vec<ElemSet>> {
    let n = ea.size();
    limits.check_topology(n, "clopen upper set enumeration")?;
    if t.size() != n {
        return Err(Error::CarrierMismatch { left: n, right: t.size() });
    }
    Ok(all_subsets(n)
        .filter(|&u| ea.is_upper_set(u) && t.is_open_set(u) && t.is_closed_set(u))
        .collect())
}

/// `op : E × E → E` is continuous for the product of `t` with itself.
pub fn binary_op_continuous(
    ea: &EffectAlgebra,
    t: &Topology,
    op: impl Fn(usize, usize) -> usize,
) -> Result<bool> {
    let n = ea.size();
    let table: Vec<usize> = (0..n * n).map(|p| op(p / n, p % n)).collect();
    is_continuous(&table, &t.product(t), t)
}

pub fn unary_op_continuous(ea: &EffectAlgebra, t: &Topology, op: impl Fn(usize) -> usize) -> Result<bool> {
    let table: Vec<usize> = (0..ea.size()).map(op).collect();
    is_continuous(&table, t, t)
}

/// `{(a, b) : a <= b'}` as points of `E × E` (pair `(a, b)` is `a * n + b`).
pub fn oplus_domain(ea: &EffectAlgebra) -> FixedBitSet {
    let n = ea.size();
    let mut d = FixedBitSet::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            if ea.leq(a, ea.orthosupplement(b)) {
                d.insert(a * n + b);
            }
        }
    }
    d
}

/// `⊕` restricted to its domain of definition, with the subspace topology
/// of `t × t`, is continuous into `t`.
pub fn oplus_is_continuous(ea: &EffectAlgebra, t: &Topology) -> Result<bool> {
    let n = ea.size();
    let domain = oplus_domain(ea);
    let sub = t.product(t).subspace(&domain)?;
    let values = domain
        .ones()
        .map(|p| {
            ea.oplus(p / n, p % n).ok_or_else(|| {
                Error::DomainMismatch(format!("⊕ undefined at ({}, {})", p / n, p % n))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    is_continuous(&values, &sub, t)
}

/// The lattice operations are continuous for the order topology, and any
/// `x ≰ y` is separated by a clopen upper set containing `x` but not `y`.
///
/// Also requires `[u, 1]` and `[0, u']` to be clopen for every finite
/// element `u`; a violation is reported as an error.
pub fn is_totally_order_disconnected(ea: &EffectAlgebra, limits: &Limits) -> Result<bool> {
    let lat = ea.lattice()?;
    let t = order_topology(ea, limits)?;

    if ea.is_atomic() {
        for u in ea.finite_elements()? {
            let upper = ea.interval(u, ea.one());
            let lower = ea.interval(ea.zero(), ea.orthosupplement(u));
            for s in [upper, lower] {
                if !(t.is_open_set(s) && t.is_closed_set(s)) {
                    return Err(Error::InvariantBroken(format!(
                        "interval {s:?} for finite element {u} is not clopen"
                    )));
                }
            }
        }
    }

    if !binary_op_continuous(ea, &t, |a, b| lat.meet(a, b))?
        || !binary_op_continuous(ea, &t, |a, b| lat.join(a, b))?
    {
        return Ok(false);
    }
    let clopen = clopen_upper_sets(ea, &t, limits)?;
    let n = ea.size();
    Ok((0..n).all(|x| {
        (0..n)
            .filter(|&y| !ea.leq(x, y))
            .all(|y| clopen.iter().any(|u| u.contains(x) && !u.contains(y)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;

    #[test]
    fn clopen_upper_set_examples() {
        let c3 = chain(3);
        let t = order_topology(&c3, &Limits::DEFAULT).unwrap();
        let found = clopen_upper_sets(&c3, &t, &Limits::DEFAULT).unwrap();
        assert!(found.contains(&c3.interval(1, 3)));
        let b2 = b2();
        let t = order_topology(&b2, &Limits::DEFAULT).unwrap();
        let found = clopen_upper_sets(&b2, &t, &Limits::DEFAULT).unwrap();
        let p_up = b2.interval(1, 3);
        assert!(found.contains(&p_up) && !p_up.contains(2));
    }

    #[test]
    fn disconnectedness() {
        for e in [chain(3), b2(), b3(), mo2()] {
            assert!(is_totally_order_disconnected(&e, &Limits::DEFAULT).unwrap());
        }
    }

    #[test]
    fn indiscrete_separates_nothing() {
        let c3 = chain(3);
        let t = Topology::indiscrete(4);
        let found = clopen_upper_sets(&c3, &t, &Limits::DEFAULT).unwrap();
        assert_eq!(found, vec![ElemSet::EMPTY, c3.carrier()]);
    }

    #[test]
    fn oplus_continuity() {
        for e in [chain(4), mo2(), b2()] {
            let t = order_topology(&e, &Limits::DEFAULT).unwrap();
            assert!(oplus_is_continuous(&e, &t).unwrap());
        }
        // The Sierpiński-like topology {∅, {1}, E} on C2 (open point: top)
        // makes ⊕ discontinuous at (a, a) ↦ 1: the only neighbourhood of
        // (a, a) in the domain is everything, whose image is not inside {1}.
        let c2 = c2();
        let t = Topology::from_subbasis_sets(3, [ElemSet::singleton(2)]).unwrap();
        assert!(!oplus_is_continuous(&c2, &t).unwrap());
    }
}
