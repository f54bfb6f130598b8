//! Atom decompositions, the sharp/unsharp splitting of an element, and the
//! smallest sharp element above an element.

use super::EffectAlgebra;
use crate::error::{Error, Result};

/// `x = ⊕ k·a` over distinct atoms `a`, stored as `(atom, k)` sorted by atom.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AtomDecomposition {
    pub parts: Vec<(usize, usize)>,
}

impl AtomDecomposition {
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `⊕ k·a`, if every multiple and the total sum are defined.
    pub fn oplus_value(&self, ea: &EffectAlgebra) -> Option<usize> {
        let multiples = self
            .parts
            .iter()
            .map(|&(a, k)| ea.multiple(a, k))
            .collect::<Option<Vec<_>>>()?;
        ea.oplus_family(&multiples)
    }

    /// `∨ k·a`, if every multiple is defined.
    pub fn join_value(&self, ea: &EffectAlgebra) -> Result<Option<usize>> {
        let lat = ea.lattice()?;
        Ok(self
            .parts
            .iter()
            .map(|&(a, k)| ea.multiple(a, k))
            .try_fold(ea.zero(), |acc, m| m.map(|m| lat.join(acc, m))))
    }
}

/// `x = w ⊕ (⊕ k·a)` with `w` sharp and no nonzero sharp element below the
/// atomic residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpDecomposition {
    pub sharp_part: usize,
    pub residual: AtomDecomposition,
}

impl EffectAlgebra {
    /// Peels atoms off `x`, always taking the lowest-index atom below the
    /// running residual, then groups equal atoms.
    ///
    /// The result must recombine to `x` both as a `⊕`-sum and as a join.
    pub fn atom_decomposition(&self, x: usize) -> Result<AtomDecomposition> {
        self.require_atomic()?;
        let atoms = self.atoms();
        let mut counts = vec![0usize; self.size()];
        let mut rest = x;
        let mut steps = 0;
        while rest != self.zero {
            let a = self
                .down_set(rest)
                .intersection(atoms)
                .first()
                .ok_or(Error::DecompositionFailed(x))?;
            rest = self.ominus(rest, a).ok_or(Error::DecompositionFailed(x))?;
            counts[a] += 1;
            steps += 1;
            if steps > self.size() * self.size() {
                return Err(Error::DecompositionFailed(x));
            }
        }
        let decomposition = AtomDecomposition {
            parts: counts
                .into_iter()
                .enumerate()
                .filter(|&(_, k)| k > 0)
                .collect(),
        };
        if decomposition.oplus_value(self) != Some(x) || decomposition.join_value(self)? != Some(x) {
            return Err(Error::DecompositionFailed(x));
        }
        Ok(decomposition)
    }

    /// Splits `x` into its sharp part and an atomic residual in which every
    /// multiplicity stays below the atom's isotropic index.
    ///
    /// Every sharp `w <= x` is tried; exactly one must qualify.
    pub fn sharp_decomposition(&self, x: usize) -> Result<SharpDecomposition> {
        let sharp = self.sharp_set()?;
        let mut found = Vec::new();
        for w in sharp.intersection(self.down_set(x)) {
            let rest = self
                .ominus(x, w)
                .ok_or_else(|| Error::InvariantBroken(format!("{x} ⊖ {w} undefined for {w} <= {x}")))?;
            if !sharp.intersection(self.down_set(rest)).difference(crate::ElemSet::singleton(self.zero)).is_empty() {
                continue;
            }
            let residual = if rest == self.zero {
                AtomDecomposition::default()
            } else {
                self.atom_decomposition(rest)?
            };
            let below_index = residual
                .parts
                .iter()
                .map(|&(a, k)| self.isotropic_index(a).map(|n| k < n))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|ok| ok);
            if below_index {
                found.push(SharpDecomposition {
                    sharp_part: w,
                    residual,
                });
            }
        }
        match found.len() {
            1 => Ok(found.pop().unwrap()),
            _ => Err(Error::UniquenessViolated {
                element: x,
                witnesses: found.iter().map(|d| d.sharp_part).collect(),
            }),
        }
    }

    /// The least sharp element above `u`, by brute force over all sharp
    /// dominators.
    pub fn smallest_sharp_above_brute(&self, u: usize) -> Result<usize> {
        let dominators = self.sharp_set()?.intersection(self.up_set(u));
        dominators
            .iter()
            .find(|&m| dominators.is_subset(self.up_set(m)))
            .ok_or(Error::NotSharplyDominating(u))
    }

    /// `∨ ord(a)·a` over the atoms of the decomposition of `u`; the empty
    /// join for `u = 0`.
    pub fn sharp_cover_formula(&self, u: usize) -> Result<usize> {
        if u == self.zero {
            return Ok(self.zero);
        }
        let lat = self.lattice()?;
        let decomposition = self.atom_decomposition(u)?;
        let mut acc = self.zero;
        for &(a, _) in &decomposition.parts {
            let n = self.isotropic_index(a)?;
            let full = self
                .multiple(a, n)
                .ok_or_else(|| Error::InvariantBroken(format!("{n}·{a} undefined")))?;
            acc = lat.join(acc, full);
        }
        Ok(acc)
    }

    /// The smallest sharp element above `u`.
    ///
    /// On atomic distributive instances the result is cross-checked against
    /// the `∨ ord(a)·a` formula, and monotonicity is checked against every
    /// element above `u`.
    pub fn smallest_sharp_above(&self, u: usize) -> Result<usize> {
        let hat = self.smallest_sharp_above_brute(u)?;
        if self.is_atomic() && self.is_distributive()? {
            let formula = self.sharp_cover_formula(u)?;
            if formula != hat {
                return Err(Error::InvariantBroken(format!(
                    "smallest sharp above {u}: brute force {hat}, formula {formula}"
                )));
            }
            for v in self.up_set(u) {
                if !self.leq(hat, self.smallest_sharp_above_brute(v)?) {
                    return Err(Error::InvariantBroken(format!(
                        "smallest sharp element not monotone at {u} <= {v}"
                    )));
                }
            }
        }
        Ok(hat)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;

    #[test]
    fn atom_decomposition_examples() {
        let c4 = chain(4);
        assert_eq!(c4.atom_decomposition(2).unwrap().parts, vec![(1, 2)]);
        // s3 = s1 ∨ s2 in the powerset indexing.
        assert_eq!(b3().atom_decomposition(3).unwrap().parts, vec![(1, 1), (2, 1)]);
        let mo2 = mo2();
        assert_eq!(mo2.atom_decomposition(5).unwrap().parts, vec![(1, 1), (2, 1)]);
        assert_eq!(mo2.atom_decomposition(0).unwrap().parts, vec![]);
    }

    #[test]
    fn sharp_decomposition_examples() {
        let c4 = chain(4);
        let d = c4.sharp_decomposition(2).unwrap();
        assert_eq!(d.sharp_part, 0);
        assert_eq!(d.residual.parts, vec![(1, 2)]);
        let d = c4.sharp_decomposition(3).unwrap();
        assert_eq!(d.sharp_part, 0);
        assert_eq!(d.residual.parts, vec![(1, 3)]);
        let d = c4.sharp_decomposition(4).unwrap();
        assert_eq!(d.sharp_part, 4);
        assert!(d.residual.is_empty());
        for x in 1..6 {
            let d = mo2().sharp_decomposition(x).unwrap();
            assert_eq!(d.sharp_part, x);
            assert!(d.residual.is_empty());
        }
    }

    #[test]
    fn smallest_sharp_above_examples() {
        assert_eq!(chain(4).smallest_sharp_above(1).unwrap(), 4);
        assert_eq!(chain(4).smallest_sharp_above(0).unwrap(), 0);
        assert_eq!(mo2().smallest_sharp_above(1).unwrap(), 1);
        let b3 = b3();
        for atom in [1, 2, 4] {
            assert_eq!(b3.smallest_sharp_above(atom).unwrap(), atom);
        }
    }
}
