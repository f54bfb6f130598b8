use super::EffectAlgebra;
use crate::error::{Error, Result};
use crate::set::ElemSet;

/// Total meet and join tables of a lattice-ordered carrier.
#[derive(Clone, Debug)]
pub struct Lattice {
    n: usize,
    bottom: usize,
    top: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl Lattice {
    /// Computes meets and joins from the derived order, or reports the
    /// first pair without a least upper / greatest lower bound.
    pub(super) fn from_order(ea: &EffectAlgebra) -> Result<Lattice> {
        let n = ea.size();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let upper = ea.up_set(a).intersection(ea.up_set(b));
                let lub = upper
                    .iter()
                    .find(|&u| upper.is_subset(ea.up_set(u)))
                    .ok_or(Error::NotALattice { a, b, missing: "least upper bound" })?;
                let lower = ea.down_set(a).intersection(ea.down_set(b));
                let glb = lower
                    .iter()
                    .find(|&l| lower.is_subset(ea.down_set(l)))
                    .ok_or(Error::NotALattice { a, b, missing: "greatest lower bound" })?;
                join[a * n + b] = lub;
                join[b * n + a] = lub;
                meet[a * n + b] = glb;
                meet[b * n + a] = glb;
            }
        }
        Ok(Lattice {
            n,
            bottom: ea.zero(),
            top: ea.one(),
            meet,
            join,
        })
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    /// Join of a subset; the empty join is the bottom.
    pub fn join_all(&self, s: ElemSet) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a subset; the empty meet is the top.
    pub fn meet_all(&self, s: ElemSet) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }
}

impl EffectAlgebra {
    /// The first triple `(x, y, z)` with `x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z)`,
    /// if any.
    pub fn distributivity_witness(&self) -> Result<Option<(usize, usize, usize)>> {
        let lat = self.lattice()?;
        Ok(*self.cache.distributive.get_or_init(|| {
            let n = self.size();
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let lhs = lat.meet(x, lat.join(y, z));
                        let rhs = lat.join(lat.meet(x, y), lat.meet(x, z));
                        if lhs != rhs {
                            return Some((x, y, z));
                        }
                    }
                }
            }
            None
        }))
    }

    pub fn is_distributive(&self) -> Result<bool> {
        Ok(self.distributivity_witness()?.is_none())
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;

    #[test]
    fn boolean_meets_and_joins() {
        let b2 = b2();
        let lat = b2.lattice().unwrap();
        assert_eq!(lat.join(1, 2), 3);
        assert_eq!(lat.meet(1, 2), 0);
    }

    #[test]
    fn mo2_cross_block_join_is_top() {
        let mo2 = mo2();
        let lat = mo2.lattice().unwrap();
        assert_eq!(lat.join(1, 3), 5);
        assert_eq!(lat.meet(2, 4), 0);
    }

    #[test]
    fn distributivity() {
        for n in 1..=6 {
            assert!(chain(n).is_distributive().unwrap());
        }
        assert!(b2().is_distributive().unwrap());
        assert!(b3().is_distributive().unwrap());
        let mo2 = mo2();
        // a ∧ (a' ∨ b) = a but (a ∧ a') ∨ (a ∧ b) = 0.
        assert_eq!(mo2.distributivity_witness().unwrap(), Some((1, 2, 3)));
    }
}
