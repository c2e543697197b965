//! L-fuzzy relations and upper approximation.

use std::sync::Arc;

use crate::closure::ClosureSystem;
use crate::error::{Error, Result};
use crate::fuzzyset::{ensure_universe, same_lattice, FuzzySet, Universe};
use crate::lattice::{Elem, Lattice};
use crate::partition::FuzzyPartition;

/// A dense `|X| × |X|` table of lattice values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzyRelation {
    lattice: Arc<Lattice>,
    universe: Arc<Universe>,
    values: Vec<Elem>,
}

impl FuzzyRelation {
    pub fn new(lattice: Arc<Lattice>, universe: Arc<Universe>, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let n = universe.len();
        if rows.len() != n {
            return Err(Error::Arity {
                universe: universe.name().to_string(),
                expected: n,
                found: rows.len(),
            });
        }
        let mut values = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Arity {
                    universe: universe.name().to_string(),
                    expected: n,
                    found: row.len(),
                });
            }
            for v in row {
                values.push(lattice.check(v)?);
            }
        }
        Ok(FuzzyRelation {
            lattice,
            universe,
            values,
        })
    }

    pub fn parse(lattice: Arc<Lattice>, universe: Arc<Universe>, rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|s| lattice.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(lattice, universe, rows)
    }

    pub fn identity(lattice: Arc<Lattice>, universe: Arc<Universe>) -> Self {
        let n = universe.len();
        let values = (0..n * n)
            .map(|i| if i / n == i % n { lattice.top() } else { lattice.bottom() })
            .collect();
        FuzzyRelation {
            lattice,
            universe,
            values,
        }
    }

    pub fn constant(lattice: Arc<Lattice>, universe: Arc<Universe>, a: Elem) -> Result<Self> {
        lattice.check(a)?;
        let n = universe.len();
        Ok(FuzzyRelation {
            lattice,
            universe,
            values: vec![a; n * n],
        })
    }

    pub(crate) fn from_parts(lattice: Arc<Lattice>, universe: Arc<Universe>, values: Vec<Elem>) -> Self {
        FuzzyRelation {
            lattice,
            universe,
            values,
        }
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Elem {
        self.values[x * self.universe.len() + y]
    }

    pub fn row(&self, x: usize) -> &[Elem] {
        let n = self.universe.len();
        &self.values[x * n..(x + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.universe.len()).map(|x| self.row(x))
    }

    pub fn display_rows(&self) -> Vec<Vec<String>> {
        self.rows()
            .map(|r| r.iter().map(|&v| self.lattice.display(v).to_string()).collect())
            .collect()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.universe.len()).all(|x| self.get(x, x) == self.lattice.top())
    }

    /// `x ↦ ⋁_y R(x,y) ⊗ f(y)` on raw values.
    pub(crate) fn upper_values_into(&self, f: &[Elem], out: &mut Vec<Elem>) {
        let t = self.lattice.tables();
        out.clear();
        out.extend(self.rows().map(|row| {
            row.iter()
                .zip(f)
                .fold(t.bottom, |acc, (&r, &v)| t.join(acc, t.tensor(r, v)))
        }));
    }
}

pub fn upper_approx(r: &FuzzyRelation, f: &FuzzySet) -> Result<FuzzySet> {
    ensure_universe(&r.universe, f.universe())?;
    if !same_lattice(&r.lattice, f.lattice()) {
        return Err(Error::LatticeMismatch);
    }
    let mut values = Vec::new();
    r.upper_values_into(f.values(), &mut values);
    Ok(FuzzySet::from_parts(r.lattice.clone(), r.universe.clone(), values))
}

/// `R_P(x, y) = A_{ξ(x)}(y)`.
pub fn relation_from_partition(p: &FuzzyPartition) -> FuzzyRelation {
    let values = p
        .xi_table()
        .iter()
        .flat_map(|&j| p.block(j).values().iter().copied())
        .collect();
    FuzzyRelation::from_parts(p.lattice().clone(), p.universe().clone(), values)
}

/// `R_Υ(x, z) = ⋀_f (Υ(f) → (f(x) → f(z)))` over all of `L^X`.
pub fn relation_from_system(system: &ClosureSystem) -> FuzzyRelation {
    let space = system.space();
    let l = space.lattice();
    let t = l.tables();
    let n = space.dim();
    let mut values = vec![l.top(); n * n];
    for idx in 0..space.len() {
        let u = system.value(idx);
        if u == l.bottom() {
            continue;
        }
        let f = space.values(idx);
        for x in 0..n {
            for z in 0..n {
                let cell = &mut values[x * n + z];
                *cell = t.meet(*cell, t.residuum(u, t.residuum(f[x], f[z])));
            }
        }
    }
    FuzzyRelation::from_parts(l.clone(), space.universe().clone(), values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Arc<Lattice>, Arc<Universe>) {
        (
            Arc::new(Lattice::godel_chain(3).unwrap()),
            Arc::new(Universe::new("X", ["x1", "x2", "x3"]).unwrap()),
        )
    }

    #[test]
    fn w3_relation_rows() {
        let (l, x) = setup();
        let p = FuzzyPartition::parse(l.clone(), x.clone(), &[("A1", &["1", "1/2", "0"]), ("A2", &["1/2", "1", "1"])]).unwrap();
        let r = relation_from_partition(&p);
        assert_eq!(
            r.display_rows(),
            [["1", "1/2", "0"], ["1/2", "1", "1"], ["1/2", "1", "1"]]
        );
        assert!(r.is_reflexive());
        let f = FuzzySet::parse(l, x, &["0", "1/2", "1"]).unwrap();
        assert_eq!(upper_approx(&r, &f).unwrap().display_values(), ["1/2", "1", "1"]);
    }

    #[test]
    fn identity_and_top() {
        let (l, x) = setup();
        let f = FuzzySet::parse(l.clone(), x.clone(), &["0", "1/2", "1"]).unwrap();
        let id = FuzzyRelation::identity(l.clone(), x.clone());
        assert_eq!(upper_approx(&id, &f).unwrap(), f);
        let r = FuzzyRelation::parse(l.clone(), x.clone(), &[&["0", "1/2", "0"], &["0", "0", "0"], &["1", "1", "1"]]).unwrap();
        let top = FuzzySet::constant(l.clone(), x, l.top()).unwrap();
        assert_eq!(upper_approx(&r, &top).unwrap().display_values(), ["1/2", "0", "1"]);
    }

    #[test]
    fn shape_is_checked() {
        let (l, x) = setup();
        assert!(FuzzyRelation::parse(l, x, &[&["1"]]).is_err());
    }
}
