//! Single-edit corruptions of valid tables, each breaking a known axiom.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::algebra::{EffectAlgebra, RawTable};
use crate::error::{Axiom, Error};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Sends one defined nonzero sum to a different element: to `1` when it
    /// was not `1`, and away from `1` otherwise.
    RedirectSum,
    /// Removes the sum `a ⊕ a' = 1` for one element `a`.
    DeleteOrthosupplement,
    /// Declares `a ⊕ 1 = 1` for some `a ≠ 0`.
    AddSumWithOne,
    /// Drops one of the two argument orders of a sum.
    BreakSymmetry,
    /// Declares `a ⊕ b = 1` for an undefined pair of middle elements.
    ExtraOrthosupplement,
    /// Makes the unit coincide with the zero.
    CollapseBounds,
    /// Removes `0 ⊕ x = x` for a middle element `x`.
    DropZeroSum,
    /// Turns a defined sum `a ⊕ b` of nonzero elements into `a`.
    AbsorbingSum,
}

impl Mutation {
    pub const ALL: [Mutation; 8] = [
        Mutation::RedirectSum,
        Mutation::DeleteOrthosupplement,
        Mutation::AddSumWithOne,
        Mutation::BreakSymmetry,
        Mutation::ExtraOrthosupplement,
        Mutation::CollapseBounds,
        Mutation::DropZeroSum,
        Mutation::AbsorbingSum,
    ];

    /// Whether `err` is a rejection of the kind this mutation must cause.
    pub fn explains(self, err: &Error) -> bool {
        let axiom = match err {
            Error::AxiomViolation { axiom, .. } => Some(*axiom),
            _ => None,
        };
        match self {
            Mutation::RedirectSum | Mutation::DeleteOrthosupplement | Mutation::ExtraOrthosupplement => {
                axiom == Some(Axiom::Orthosupplement)
            }
            Mutation::AddSumWithOne => axiom == Some(Axiom::ZeroOne),
            Mutation::BreakSymmetry => axiom == Some(Axiom::Commutativity),
            Mutation::CollapseBounds => matches!(err, Error::Degenerate),
            Mutation::DropZeroSum => axiom == Some(Axiom::Associativity),
            Mutation::AbsorbingSum => {
                matches!(axiom, Some(Axiom::Associativity | Axiom::Orthosupplement))
            }
        }
    }
}

impl std::fmt::Display for Mutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

/// Applies `strategy` to the table of `e`, choosing the edited entry with a
/// generator seeded by `seed`. `None` when `e` has nothing to edit (for
/// example no pair of middle elements without a sum).
pub fn mutate_negative(e: &EffectAlgebra, strategy: Mutation, seed: u64) -> Option<RawTable> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut raw = e.to_raw();
    let (zero, one, n) = (e.zero(), e.one(), e.size());
    let middle: Vec<usize> = (0..n).filter(|&x| x != zero && x != one).collect();
    let sums: Vec<(usize, usize, usize)> = e.nonzero_sums().collect();
    match strategy {
        Mutation::RedirectSum => {
            let &(a, b, c) = sums.choose(&mut rng)?;
            let target = if c == one {
                *(0..n).filter(|&d| d != one).collect::<Vec<_>>().choose(&mut rng)?
            } else {
                one
            };
            raw.add_sum(a, b, target);
        }
        Mutation::DeleteOrthosupplement => {
            let a = *middle.choose(&mut rng).unwrap_or(&zero);
            let b = e.orthosupplement(a);
            raw.sums.remove(&(a, b));
            raw.sums.remove(&(b, a));
        }
        Mutation::AddSumWithOne => {
            let candidates: Vec<usize> = (0..n).filter(|&x| x != zero).collect();
            let a = *candidates.choose(&mut rng)?;
            raw.add_sum(a, one, one);
        }
        Mutation::BreakSymmetry => {
            let asymmetric: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| a != b && e.oplus(a, b).is_some())
                .collect();
            let &(a, b) = asymmetric.choose(&mut rng)?;
            raw.sums.remove(&(b, a));
        }
        Mutation::ExtraOrthosupplement => {
            let open: Vec<(usize, usize)> = middle
                .iter()
                .flat_map(|&a| middle.iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| a <= b && e.oplus(a, b).is_none())
                .collect();
            let &(a, b) = open.choose(&mut rng)?;
            raw.add_sum(a, b, one);
        }
        Mutation::CollapseBounds => raw.one = raw.zero,
        Mutation::DropZeroSum => {
            let x = *middle.choose(&mut rng)?;
            raw.sums.remove(&(zero, x));
            raw.sums.remove(&(x, zero));
        }
        Mutation::AbsorbingSum => {
            let &(a, b, _) = sums.choose(&mut rng)?;
            raw.add_sum(a, b, a);
        }
    }
    raw.name = format!("{}~{strategy}", e.name());
    Some(raw)
}
