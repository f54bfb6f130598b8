//! Quantification over directed subsets.
//!
//! On a finite carrier an increasing net is eventually constant, so the
//! net-based notions (order continuity, compactness, algebraicity) are
//! evaluated through their directed-subset formulations, exhaustively.

use super::EffectAlgebra;
use crate::error::Result;
use crate::limits::Limits;
use crate::set::{all_subsets, ElemSet};

/// Every nonempty directed subset with its join, and every nonempty
/// down-directed subset with its meet.
#[derive(Clone, Debug)]
pub struct DirectedFamily {
    pub directed: Vec<(ElemSet, usize)>,
    pub down_directed: Vec<(ElemSet, usize)>,
}

impl DirectedFamily {
    pub fn of(ea: &EffectAlgebra, limits: &Limits) -> Result<DirectedFamily> {
        limits.check_directed(ea.size(), "directed-subset enumeration")?;
        let lat = ea.lattice()?;
        let mut directed = Vec::new();
        let mut down_directed = Vec::new();
        for s in all_subsets(ea.size()).skip(1) {
            if ea.is_directed(s) {
                directed.push((s, lat.join_all(s)));
            }
            if ea.is_down_directed(s) {
                down_directed.push((s, lat.meet_all(s)));
            }
        }
        Ok(DirectedFamily {
            directed,
            down_directed,
        })
    }
}

impl EffectAlgebra {
    /// Every pair of members has an upper bound inside `s` (which, by
    /// induction, covers all finite subsets).
    pub fn is_directed(&self, s: ElemSet) -> bool {
        s.iter().all(|x| {
            s.iter()
                .all(|y| !self.up_set(x).intersection(self.up_set(y)).is_disjoint(s))
        })
    }

    pub fn is_down_directed(&self, s: ElemSet) -> bool {
        s.iter().all(|x| {
            s.iter()
                .all(|y| !self.down_set(x).intersection(self.down_set(y)).is_disjoint(s))
        })
    }

    /// `u <= ∨D` for a directed `D` implies `u <= d` for some `d ∈ D`.
    pub fn is_compact_element(&self, u: usize, limits: &Limits) -> Result<bool> {
        let family = DirectedFamily::of(self, limits)?;
        Ok(self.compact_in(u, &family))
    }

    fn compact_in(&self, u: usize, family: &DirectedFamily) -> bool {
        family
            .directed
            .iter()
            .filter(|&&(_, j)| self.leq(u, j))
            .all(|&(d, _)| !self.up_set(u).is_disjoint(d))
    }

    pub fn compact_elements(&self, limits: &Limits) -> Result<ElemSet> {
        let family = DirectedFamily::of(self, limits)?;
        Ok((0..self.size()).filter(|&u| self.compact_in(u, &family)).collect())
    }

    /// Every element is the join of the compact elements below it.
    pub fn is_algebraic(&self, limits: &Limits) -> Result<bool> {
        if let Some(&v) = self.cache.algebraic.get() {
            return Ok(v);
        }
        let lat = self.lattice()?;
        let compact = self.compact_elements(limits)?;
        let v = (0..self.size()).all(|x| lat.join_all(compact.intersection(self.down_set(x))) == x);
        Ok(*self.cache.algebraic.get_or_init(|| v))
    }

    /// `(∨D) ∧ y = ∨{d ∧ y : d ∈ D}` for every directed `D` and every `y`.
    pub fn is_o_continuous(&self, limits: &Limits) -> Result<bool> {
        if let Some(&v) = self.cache.o_continuous.get() {
            return Ok(v);
        }
        let lat = self.lattice()?;
        let family = DirectedFamily::of(self, limits)?;
        let v = family.directed.iter().all(|&(d, j)| {
            (0..self.size()).all(|y| {
                let pointwise = d.iter().fold(self.zero(), |acc, x| lat.join(acc, lat.meet(x, y)));
                lat.meet(j, y) == pointwise
            })
        });
        Ok(*self.cache.o_continuous.get_or_init(|| v))
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::error::Error;

    #[test]
    fn directed_subsets_contain_their_join() {
        let mo2 = mo2();
        let family = DirectedFamily::of(&mo2, &Limits::DEFAULT).unwrap();
        for &(d, j) in &family.directed {
            assert!(d.contains(j));
        }
        for &(d, m) in &family.down_directed {
            assert!(d.contains(m));
        }
        // {a, b} has no upper bound inside itself.
        assert!(!mo2.is_directed([1, 3].into_iter().collect()));
    }

    #[test]
    fn compactness_and_algebraicity() {
        let c3 = chain(3);
        assert!((0..4).all(|u| c3.is_compact_element(u, &Limits::DEFAULT).unwrap()));
        assert!(b3().is_algebraic(&Limits::DEFAULT).unwrap());
        assert!(mo2().is_algebraic(&Limits::DEFAULT).unwrap());
    }

    #[test]
    fn o_continuity() {
        for e in [chain(4), b3(), mo2()] {
            assert!(e.is_o_continuous(&Limits::DEFAULT).unwrap());
        }
    }

    #[test]
    fn size_guard_is_loud() {
        let tight = Limits { directed: 3, ..Limits::DEFAULT };
        assert!(matches!(
            chain(4).is_o_continuous(&tight),
            Err(Error::SizeGuardExceeded { size: 5, limit: 3, .. })
        ));
    }
}
