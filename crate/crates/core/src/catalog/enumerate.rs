//! Exhaustive enumeration of small effect algebras up to isomorphism.
//!
//! Element `0` is the zero and element `n - 1` the unit. The zero row is
//! forced by `0 ⊕ x = x` and the unit row by the zero-one law, so the
//! search only fills the symmetric block of middle elements, cell by cell,
//! rejecting a partial table as soon as it breaks orthosupplement
//! uniqueness or associativity among its determined entries.

use std::collections::BTreeMap;

use super::iso::{canonical_form, CanonicalForm};
use crate::algebra::{EffectAlgebra, RawTable};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cell {
    Unknown,
    Undefined,
    Value(usize),
}

struct Search {
    n: usize,
    table: Vec<Cell>,
    cells: Vec<(usize, usize)>,
    found: BTreeMap<CanonicalForm, EffectAlgebra>,
}

impl Search {
    fn new(n: usize) -> Search {
        let one = n - 1;
        let mut table = vec![Cell::Unknown; n * n];
        for x in 0..n {
            table[x] = Cell::Value(x);
            table[x * n] = Cell::Value(x);
        }
        for x in 1..n {
            table[x * n + one] = Cell::Undefined;
            table[one * n + x] = Cell::Undefined;
        }
        let cells = (1..one).flat_map(|i| (i..one).map(move |j| (i, j))).collect();
        Search {
            n,
            table,
            cells,
            found: BTreeMap::new(),
        }
    }

    fn get(&self, a: usize, b: usize) -> Cell {
        self.table[a * self.n + b]
    }

    fn set(&mut self, a: usize, b: usize, c: Cell) {
        self.table[a * self.n + b] = c;
        self.table[b * self.n + a] = c;
    }

    /// At most one orthosupplement per row, and exactly one once the row
    /// is complete.
    fn row_ok(&self, x: usize) -> bool {
        let one = self.n - 1;
        let mut hits = 0;
        let mut open = false;
        for y in 0..self.n {
            match self.get(x, y) {
                Cell::Value(v) if v == one => hits += 1,
                Cell::Unknown => open = true,
                _ => {}
            }
        }
        hits <= 1 && (open || hits == 1)
    }

    /// `(a ⊕ b) ⊕ c` defined forces `b ⊕ c` and `a ⊕ (b ⊕ c)` to be defined
    /// and equal, wherever the cells involved are already decided.
    fn associative_so_far(&self) -> bool {
        let n = self.n;
        for a in 1..n - 1 {
            for b in 1..n - 1 {
                let Cell::Value(s) = self.get(a, b) else { continue };
                for c in 1..n - 1 {
                    let Cell::Value(t) = self.get(s, c) else { continue };
                    match self.get(b, c) {
                        Cell::Undefined => return false,
                        Cell::Value(u) => match self.get(a, u) {
                            Cell::Undefined => return false,
                            Cell::Value(t2) if t2 != t => return false,
                            _ => {}
                        },
                        Cell::Unknown => {}
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize) {
        let Some(&(i, j)) = self.cells.get(k) else {
            self.record();
            return;
        };
        let options = std::iter::once(Cell::Undefined)
            .chain((1..self.n).filter(|&v| v != i && v != j).map(Cell::Value));
        for c in options.collect::<Vec<_>>() {
            self.set(i, j, c);
            if self.row_ok(i) && self.row_ok(j) && self.associative_so_far() {
                self.run(k + 1);
            }
        }
        self.set(i, j, Cell::Unknown);
    }

    fn record(&mut self) {
        let n = self.n;
        let mut names = vec!["0".to_string()];
        names.extend((1..n - 1).map(|x| format!("x{x}")));
        names.push("1".to_string());
        let mut raw = RawTable::new("", names, 0, n - 1);
        for a in 0..n {
            for b in 0..n {
                if let Cell::Value(c) = self.get(a, b) {
                    raw.sums.insert((a, b), c);
                }
            }
        }
        // The pruning above covers every axiom, so this only fails on a
        // defect in the search itself.
        let e = EffectAlgebra::validate(&raw).expect("complete table satisfies the axioms");
        let form = canonical_form(&e).expect("small instances stay within the relabeling budget");
        self.found.entry(form).or_insert(e);
    }
}

/// One representative of every isomorphism class of effect algebras with
/// exactly `n` elements, ordered by canonical form.
pub fn enumerate_size(n: usize, limits: &Limits) -> Result<Vec<EffectAlgebra>> {
    if n < 2 {
        return Err(Error::InvalidSpec("enumeration needs n >= 2".into()));
    }
    crate::limits::guard(n, limits.enumeration, "effect algebra enumeration")?;
    let mut search = Search::new(n);
    search.run(0);
    Ok(search
        .found
        .into_values()
        .enumerate()
        .map(|(k, e)| e.renamed(format!("e{n}.{}", k + 1)))
        .collect())
}

/// [`enumerate_size`] for every size from 2 to `max_n`.
pub fn enumerate_all(max_n: usize, limits: &Limits) -> Result<Vec<EffectAlgebra>> {
    if max_n < 2 {
        return Err(Error::InvalidSpec("enumeration needs max_n >= 2".into()));
    }
    crate::limits::guard(max_n, limits.enumeration, "effect algebra enumeration")?;
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.extend(enumerate_size(n, limits)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{are_isomorphic, boolean_algebra, horizontal_sum, mv_chain};

    #[test]
    fn forced_small_counts() {
        assert_eq!(enumerate_size(2, &Limits::DEFAULT).unwrap().len(), 1);
        let three = enumerate_size(3, &Limits::DEFAULT).unwrap();
        assert_eq!(three.len(), 1);
        assert!(are_isomorphic(&three[0], &mv_chain(2).unwrap()));
    }

    #[test]
    fn contains_constructed_instances() {
        let c2 = mv_chain(2).unwrap();
        let constructed = [
            mv_chain(3).unwrap(),
            mv_chain(4).unwrap(),
            boolean_algebra(2).unwrap(),
            horizontal_sum(&c2, &c2).unwrap(),
            horizontal_sum(&c2, &mv_chain(3).unwrap()).unwrap(),
        ];
        let all = enumerate_all(5, &Limits::DEFAULT).unwrap();
        for e in &constructed {
            assert_eq!(all.iter().filter(|f| are_isomorphic(e, f)).count(), 1, "{}", e.name());
        }
    }

    #[test]
    fn guards() {
        assert!(enumerate_size(7, &Limits::DEFAULT).unwrap_err().is_size_guard());
        assert!(enumerate_all(1, &Limits::DEFAULT).is_err());
    }

    #[test]
    fn deterministic() {
        let a = enumerate_all(5, &Limits::DEFAULT).unwrap();
        let b = enumerate_all(5, &Limits::DEFAULT).unwrap();
        let names = |v: &[EffectAlgebra]| v.iter().map(|e| e.to_raw()).collect::<Vec<_>>();
        assert_eq!(names(&a), names(&b));
    }
}
