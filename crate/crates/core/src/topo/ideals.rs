use crate::algebra::{EffectAlgebra, Lattice};
use crate::error::{Error, Result};
use crate::set::ElemSet;

/// A downward closed, join-closed subset containing the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal(pub ElemSet);

/// An upward closed, meet-closed subset containing the top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualIdeal(pub ElemSet);

#[derive(Clone, Copy)]
enum Side {
    Down,
    Up,
}

type Cone = fn(&EffectAlgebra, usize) -> ElemSet;
type LatticeOp = fn(&Lattice, usize, usize) -> usize;

fn close(ea: &EffectAlgebra, side: Side, seed: ElemSet) -> Result<ElemSet> {
    let lat = ea.lattice()?;
    let (base, cone, op): (usize, Cone, LatticeOp) = match side {
        Side::Down => (ea.zero(), EffectAlgebra::down_set, Lattice::join),
        Side::Up => (ea.one(), EffectAlgebra::up_set, Lattice::meet),
    };
    let mut s = seed.with(base);
    loop {
        let mut next = s;
        for a in s {
            next = next.union(cone(ea, a));
            for b in s {
                next.insert(op(lat, a, b));
            }
        }
        if next == s {
            return Ok(s);
        }
        s = next;
    }
}

/// All closed sets of `close`, in lectic order (Ganter's next-closure).
fn all_closed(ea: &EffectAlgebra, side: Side) -> Result<Vec<ElemSet>> {
    let n = ea.size();
    let mut current = close(ea, side, ElemSet::EMPTY)?;
    let mut out = vec![current];
    'outer: loop {
        for i in (0..n).rev() {
            if current.contains(i) {
                continue;
            }
            let prefix = ElemSet(current.0 & ((1u64 << i) - 1));
            let candidate = close(ea, side, prefix.with(i))?;
            if ElemSet(candidate.0 & ((1u64 << i) - 1)) == prefix {
                current = candidate;
                out.push(current);
                continue 'outer;
            }
        }
        break;
    }
    Ok(out)
}

/// All ideals of a lattice effect algebra.
///
/// Found by enumerating closed sets of the ideal closure; on a finite
/// lattice each must be a principal downset, which is checked.
pub fn ideals(ea: &EffectAlgebra) -> Result<Vec<Ideal>> {
    let lat = ea.lattice()?;
    let found = all_closed(ea, Side::Down)?;
    for &s in &found {
        let top = lat.join_all(s);
        if s != ea.down_set(top) {
            return Err(Error::InvariantBroken(format!("ideal {s:?} is not principal")));
        }
    }
    Ok(found.into_iter().map(Ideal).collect())
}

pub fn dual_ideals(ea: &EffectAlgebra) -> Result<Vec<DualIdeal>> {
    let lat = ea.lattice()?;
    let found = all_closed(ea, Side::Up)?;
    for &s in &found {
        let bottom = lat.meet_all(s);
        if s != ea.up_set(bottom) {
            return Err(Error::InvariantBroken(format!("dual ideal {s:?} is not principal")));
        }
    }
    Ok(found.into_iter().map(DualIdeal).collect())
}

/// Members of `family` that are not the intersection of other members
/// strictly containing them. A member contained in no other one is kept.
pub fn completely_irreducible(family: &[ElemSet]) -> Vec<ElemSet> {
    family
        .iter()
        .copied()
        .filter(|&s| {
            let mut above = family.iter().filter(|&&t| t != s && s.is_subset(t)).peekable();
            if above.peek().is_none() {
                return true;
            }
            let meet = above.fold(ElemSet(u64::MAX), |acc, &t| acc.intersection(t));
            meet != s
        })
        .collect()
}

pub fn completely_irreducible_ideals(ea: &EffectAlgebra) -> Result<Vec<Ideal>> {
    let all: Vec<ElemSet> = ideals(ea)?.into_iter().map(|i| i.0).collect();
    Ok(completely_irreducible(&all).into_iter().map(Ideal).collect())
}

pub fn completely_irreducible_dual_ideals(ea: &EffectAlgebra) -> Result<Vec<DualIdeal>> {
    let all: Vec<ElemSet> = dual_ideals(ea)?.into_iter().map(|i| i.0).collect();
    Ok(completely_irreducible(&all).into_iter().map(DualIdeal).collect())
}
