//! The finite function space `L^X`, enumerated lexicographically.
//!
//! Every construction that quantifies over all fuzzy sets on a universe goes
//! through [`SetSpace`]. A fuzzy set is identified with its position in the
//! lexicographic order of value tuples (first universe element most
//! significant), so closure systems and operators can be stored as plain
//! tables indexed by that position.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuzzyset::{FuzzySet, SetMap, Universe};
use crate::lattice::{Elem, Lattice};

pub const DEFAULT_BUDGET: u64 = 4096;

/// Exact `|L|^|X|`, or a marker that it does not fit in 128 bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Cardinality {
    Exact(u128),
    Overflow,
}

impl Cardinality {
    pub fn power(base: usize, exponent: usize) -> Self {
        u32::try_from(exponent)
            .ok()
            .and_then(|e| (base as u128).checked_pow(e))
            .map_or(Cardinality::Overflow, Cardinality::Exact)
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Exact(n) => write!(f, "{n}"),
            Cardinality::Overflow => f.write_str("more than 2^128"),
        }
    }
}

/// Upper bound on the number of fuzzy sets an exhaustive construction may
/// enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub const fn new(limit: u64) -> Self {
        Budget(limit)
    }

    pub fn limit(self) -> u64 {
        self.0
    }

    pub fn admit(self, cardinality: Cardinality) -> Result<()> {
        match cardinality {
            Cardinality::Exact(n) if n <= self.0 as u128 => Ok(()),
            _ => Err(Error::BudgetExceeded {
                cardinality,
                budget: self.0,
            }),
        }
    }
}

/// All fuzzy sets on one universe over one lattice.
#[derive(Debug)]
pub struct SetSpace {
    lattice: Arc<Lattice>,
    universe: Arc<Universe>,
    len: usize,
    weights: Vec<usize>,
    digits: Vec<Elem>,
}

impl SetSpace {
    pub fn new(lattice: Arc<Lattice>, universe: Arc<Universe>, budget: Budget) -> Result<Self> {
        let n = universe.len();
        budget.admit(Cardinality::power(lattice.size(), n))?;
        let base = lattice.size();
        let len = base.pow(n as u32);
        let mut weights = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * base;
        }
        let mut digits = Vec::with_capacity(len * n);
        for idx in 0..len {
            for w in &weights {
                digits.push(Elem::from_index((idx / w) % base));
            }
        }
        Ok(SetSpace {
            lattice,
            universe,
            len,
            weights,
            digits,
        })
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Number of fuzzy sets, `|L|^|X|`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Value tuple of the set at `index`.
    #[inline]
    pub fn values(&self, index: usize) -> &[Elem] {
        let n = self.dim();
        &self.digits[index * n..(index + 1) * n]
    }

    #[inline]
    pub fn value(&self, index: usize, point: usize) -> Elem {
        self.digits[index * self.dim() + point]
    }

    pub fn index_of_values(&self, values: &[Elem]) -> usize {
        values
            .iter()
            .zip(&self.weights)
            .map(|(v, w)| v.index() * w)
            .sum()
    }

    pub fn index_of(&self, set: &FuzzySet) -> Result<usize> {
        self.ensure_member(set)?;
        Ok(self.index_of_values(set.values()))
    }

    pub fn ensure_member(&self, set: &FuzzySet) -> Result<()> {
        if !set.universe().same_as(&self.universe) {
            return Err(Error::UniverseMismatch {
                expected: self.universe.name().to_string(),
                found: set.universe().name().to_string(),
            });
        }
        if !crate::fuzzyset::same_lattice(set.lattice(), &self.lattice) {
            return Err(Error::LatticeMismatch);
        }
        Ok(())
    }

    pub fn set(&self, index: usize) -> FuzzySet {
        FuzzySet::from_parts(
            self.lattice.clone(),
            self.universe.clone(),
            self.values(index).to_vec(),
        )
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = FuzzySet> + '_ {
        (0..self.len).map(|i| self.set(i))
    }

    pub fn constant_index(&self, a: Elem) -> usize {
        self.weights.iter().map(|w| a.index() * w).sum()
    }

    pub fn top_index(&self) -> usize {
        self.constant_index(self.lattice.top())
    }

    /// Index of the pointwise combination of two sets.
    #[inline]
    pub fn combine(&self, f: usize, g: usize, op: impl Fn(Elem, Elem) -> Elem) -> usize {
        let (a, b) = (self.values(f), self.values(g));
        a.iter()
            .zip(b)
            .zip(&self.weights)
            .map(|((&x, &y), w)| op(x, y).index() * w)
            .sum()
    }

    /// Index of `x ↦ op(a, f(x))` for a constant `a`.
    pub fn scale(&self, a: Elem, f: usize, op: impl Fn(Elem, Elem) -> Elem) -> usize {
        self.values(f)
            .iter()
            .zip(&self.weights)
            .map(|(&x, w)| op(a, x).index() * w)
            .sum()
    }

    pub fn leq(&self, f: usize, g: usize) -> bool {
        self.values(f)
            .iter()
            .zip(self.values(g))
            .all(|(&x, &y)| self.lattice.leq(x, y))
    }

    /// For every `g` in the codomain space, the index of `g ∘ φ` here.
    pub fn pullback_table(&self, map: &SetMap, codomain: &SetSpace) -> Result<Vec<usize>> {
        map.ensure_between(&self.universe, codomain.universe())?;
        if !crate::fuzzyset::same_lattice(&self.lattice, codomain.lattice()) {
            return Err(Error::LatticeMismatch);
        }
        Ok((0..codomain.len())
            .map(|g| {
                let gv = codomain.values(g);
                map.image()
                    .iter()
                    .zip(&self.weights)
                    .map(|(&y, w)| gv[y].index() * w)
                    .sum()
            })
            .collect())
    }

    /// For every `f` here, the index of its Zadeh image in the codomain space.
    pub fn pushforward_table(&self, map: &SetMap, codomain: &SetSpace) -> Result<Vec<usize>> {
        map.ensure_between(&self.universe, codomain.universe())?;
        if !crate::fuzzyset::same_lattice(&self.lattice, codomain.lattice()) {
            return Err(Error::LatticeMismatch);
        }
        let l = &self.lattice;
        let mut image = vec![l.bottom(); codomain.dim()];
        Ok((0..self.len)
            .map(|f| {
                image.fill(l.bottom());
                for (x, &v) in self.values(f).iter().enumerate() {
                    let y = map.image()[x];
                    image[y] = l.join(image[y], v);
                }
                codomain.index_of_values(&image)
            })
            .collect())
    }
}

/// Every fuzzy set on `universe`, in lexicographic order of value tuples.
pub fn enumerate_sets(
    lattice: Arc<Lattice>,
    universe: Arc<Universe>,
    budget: Budget,
) -> Result<impl ExactSizeIterator<Item = FuzzySet>> {
    let space = SetSpace::new(lattice, universe, budget)?;
    Ok((0..space.len()).map(move |i| space.set(i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn universe(n: usize) -> Arc<Universe> {
        Arc::new(Universe::new("U", (1..=n).map(|i| format!("u{i}"))).unwrap())
    }

    #[test]
    fn three_by_three_bounds() {
        let l = Arc::new(Lattice::godel_chain(3).unwrap());
        let sets: Vec<_> = enumerate_sets(l.clone(), universe(3), Budget::default())
            .unwrap()
            .collect();
        assert_eq!(sets.len(), 27);
        assert!(sets[0].values().iter().all(|&v| v == l.bottom()));
        assert!(sets[26].values().iter().all(|&v| v == l.top()));
        let distinct: HashSet<Vec<Elem>> = sets.iter().map(|s| s.values().to_vec()).collect();
        assert_eq!(distinct.len(), 27);
    }

    #[test]
    fn two_sets_on_a_point() {
        let l = Arc::new(Lattice::godel_chain(2).unwrap());
        assert_eq!(
            enumerate_sets(l, universe(1), Budget::default()).unwrap().len(),
            2
        );
    }

    #[test]
    fn budget_error_carries_cardinality() {
        let l = Arc::new(Lattice::godel_chain(4).unwrap());
        let err = enumerate_sets(l, universe(10), Budget::new(4096))
            .err()
            .unwrap();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                cardinality: Cardinality::Exact(1_048_576),
                budget: 4096
            }
        );
        assert!(err.to_string().contains("1048576"));
    }

    #[test]
    fn empty_universe_has_one_set() {
        let l = Arc::new(Lattice::godel_chain(3).unwrap());
        let u = Arc::new(Universe::empty("E"));
        let sets: Vec<_> = enumerate_sets(l, u, Budget::default()).unwrap().collect();
        assert_eq!(sets.len(), 1);
        assert!(sets[0].values().is_empty());
    }

    #[test]
    fn index_round_trip() {
        let l = Arc::new(Lattice::lukasiewicz_chain(3).unwrap());
        let space = SetSpace::new(l, universe(3), Budget::default()).unwrap();
        for i in 0..space.len() {
            assert_eq!(space.index_of(&space.set(i)).unwrap(), i);
        }
    }

    #[test]
    fn huge_cardinality_overflows_cleanly() {
        assert_eq!(Cardinality::power(4, 64), Cardinality::Overflow);
        assert_eq!(Cardinality::power(4, 3), Cardinality::Exact(64));
    }
}
