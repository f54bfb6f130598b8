//! Element-level notions: atoms, sharp elements, compatibility, principal
//! and finite elements.

use super::EffectAlgebra;
use crate::error::{Error, Result};
use crate::set::ElemSet;

/// How the sharp elements sit inside a lattice effect algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SharpStructure {
    pub is_sub_effect_algebra: bool,
    pub is_full_sublattice: bool,
    pub is_orthomodular: bool,
    pub is_boolean: bool,
}

impl EffectAlgebra {
    /// Nonzero elements `a` with `[0, a] = {0, a}`.
    pub fn atoms(&self) -> ElemSet {
        *self.cache.atoms.get_or_init(|| {
            (0..self.size())
                .filter(|&a| a != self.zero && self.down_set(a).len() == 2)
                .collect()
        })
    }

    /// A nonzero element with no atom below it, if any.
    pub fn atomicity_witness(&self) -> Option<usize> {
        let atoms = self.atoms();
        (0..self.size()).find(|&x| x != self.zero && self.down_set(x).is_disjoint(atoms))
    }

    pub fn is_atomic(&self) -> bool {
        self.atomicity_witness().is_none()
    }

    pub(crate) fn require_atomic(&self) -> Result<()> {
        match self.atomicity_witness() {
            Some(x) => Err(Error::NotAtomic(x)),
            None => Ok(()),
        }
    }

    /// `x ∧ x' = 0`.
    pub fn is_sharp(&self, x: usize) -> Result<bool> {
        Ok(self.sharp_set()?.contains(x))
    }

    pub fn sharp_set(&self) -> Result<ElemSet> {
        let lat = self.lattice()?;
        Ok(*self.cache.sharp.get_or_init(|| {
            (0..self.size())
                .filter(|&x| lat.meet(x, self.orthosupplement(x)) == self.zero)
                .collect()
        }))
    }

    pub fn sharp_structure(&self) -> Result<SharpStructure> {
        let lat = self.lattice()?;
        let sharp = self.sharp_set()?;

        let is_sub_effect_algebra = sharp.contains(self.zero)
            && sharp.contains(self.one)
            && sharp.iter().all(|a| sharp.contains(self.orthosupplement(a)))
            && sharp.iter().all(|a| {
                sharp
                    .iter()
                    .all(|b| self.oplus(a, b).is_none_or(|c| sharp.contains(c)))
            });

        // Binary suprema/infima taken inside S(E) must exist and agree with
        // the ones of E; on a finite carrier that covers all subsets.
        let sup_in = |a: usize, b: usize| {
            let upper = sharp.intersection(self.up_set(a)).intersection(self.up_set(b));
            upper.iter().find(|&u| upper.is_subset(self.up_set(u)))
        };
        let inf_in = |a: usize, b: usize| {
            let lower = sharp.intersection(self.down_set(a)).intersection(self.down_set(b));
            lower.iter().find(|&l| lower.is_subset(self.down_set(l)))
        };
        let is_full_sublattice = sharp.iter().all(|a| {
            sharp.iter().all(|b| {
                sup_in(a, b) == Some(lat.join(a, b)) && inf_in(a, b) == Some(lat.meet(a, b))
            })
        });

        let is_orthomodular = is_full_sublattice
            && sharp.iter().all(|a| {
                let a_ = self.orthosupplement(a);
                lat.join(a, a_) == self.one
                    && sharp.iter().filter(|&b| self.leq(a, b)).all(|b| {
                        lat.join(a, lat.meet(b, a_)) == b
                    })
            });

        let distributive_in_s = sharp.iter().all(|x| {
            sharp.iter().all(|y| {
                sharp.iter().all(|z| {
                    lat.meet(x, lat.join(y, z)) == lat.join(lat.meet(x, y), lat.meet(x, z))
                })
            })
        });
        let complemented = sharp.iter().all(|x| {
            let x_ = self.orthosupplement(x);
            lat.meet(x, x_) == self.zero && lat.join(x, x_) == self.one
        });
        let is_boolean = is_full_sublattice && distributive_in_s && complemented;

        Ok(SharpStructure {
            is_sub_effect_algebra,
            is_full_sublattice,
            is_orthomodular,
            is_boolean,
        })
    }

    /// `a ∨ b = a ⊕ (b ⊖ (a ∧ b))`.
    pub fn is_compatible(&self, a: usize, b: usize) -> Result<bool> {
        let lat = self.lattice()?;
        let m = lat.meet(a, b);
        let rest = self.ominus(b, m).ok_or_else(|| {
            Error::InvariantBroken(format!("{b} ⊖ ({a} ∧ {b}) undefined"))
        })?;
        Ok(self.oplus(a, rest) == Some(lat.join(a, b)))
    }

    /// The first incompatible pair, if any.
    pub fn incompatible_pair(&self) -> Result<Option<(usize, usize)>> {
        let n = self.size();
        for a in 0..n {
            for b in a + 1..n {
                if !self.is_compatible(a, b)? {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }

    /// Every pair of elements is compatible.
    pub fn is_mv(&self) -> Result<bool> {
        if let Some(&v) = self.cache.mv.get() {
            return Ok(v);
        }
        let v = self.incompatible_pair()?.is_none();
        Ok(*self.cache.mv.get_or_init(|| v))
    }

    /// `x` is principal if `a, b <= x` with `a ⊕ b` defined forces
    /// `a ⊕ b <= x`.
    pub fn is_principal_element(&self, x: usize) -> bool {
        let below = self.down_set(x);
        below.iter().all(|a| {
            below
                .iter()
                .all(|b| self.oplus(a, b).is_none_or(|c| self.leq(c, x)))
        })
    }

    /// Zero together with every defined sum of finitely many atoms.
    ///
    /// Computed as the closure of `{0}` under adding one atom at a time.
    pub fn finite_elements(&self) -> Result<ElemSet> {
        self.require_atomic()?;
        let atoms = self.atoms();
        let mut reached = ElemSet::singleton(self.zero);
        let mut frontier = vec![self.zero];
        while let Some(u) = frontier.pop() {
            for a in atoms {
                if let Some(v) = self.oplus(u, a) {
                    if !reached.contains(v) {
                        reached.insert(v);
                        frontier.push(v);
                    }
                }
            }
        }
        Ok(reached)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use crate::set::ElemSet;

    fn set(xs: &[usize]) -> ElemSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn atoms_examples() {
        assert_eq!(chain(3).atoms(), set(&[1]));
        assert_eq!(b3().atoms(), set(&[1, 2, 4]));
        assert_eq!(mo2().atoms(), set(&[1, 2, 3, 4]));
        for e in [chain(3), b3(), mo2()] {
            assert!(e.is_atomic());
        }
    }

    #[test]
    fn sharp_examples() {
        assert_eq!(chain(3).sharp_set().unwrap(), set(&[0, 3]));
        assert_eq!(b2().sharp_set().unwrap(), b2().carrier());
        assert_eq!(mo2().sharp_set().unwrap(), mo2().carrier());
        assert!(!chain(3).is_sharp(1).unwrap());
    }

    #[test]
    fn sharp_structure_examples() {
        let all = |s: super::SharpStructure| {
            s.is_sub_effect_algebra && s.is_full_sublattice && s.is_orthomodular && s.is_boolean
        };
        assert!(all(b2().sharp_structure().unwrap()));
        let c4 = chain(4);
        assert_eq!(c4.sharp_set().unwrap(), set(&[0, 4]));
        assert!(all(c4.sharp_structure().unwrap()));
        let s = mo2().sharp_structure().unwrap();
        assert!(s.is_sub_effect_algebra && s.is_full_sublattice && s.is_orthomodular);
        assert!(!s.is_boolean);
    }

    #[test]
    fn compatibility_examples() {
        for n in 1..=6 {
            assert!(chain(n).is_mv().unwrap());
        }
        assert!(b2().is_mv().unwrap());
        assert!(b3().is_mv().unwrap());
        let mo2 = mo2();
        assert!(!mo2.is_compatible(1, 3).unwrap());
        assert!(!mo2.is_mv().unwrap());
        assert_eq!(mo2.incompatible_pair().unwrap(), Some((1, 3)));
    }

    #[test]
    fn principal_examples() {
        for e in [chain(3), b2(), mo2()] {
            assert!(e.is_principal_element(e.zero()));
            assert!(e.is_principal_element(e.one()));
        }
        assert!(!chain(3).is_principal_element(1));
        let mo2 = mo2();
        assert!((0..6).all(|x| mo2.is_principal_element(x)));
    }

    #[test]
    fn finite_elements_examples() {
        for e in [chain(3), b2(), mo2()] {
            assert_eq!(e.finite_elements().unwrap(), e.carrier());
        }
    }
}
