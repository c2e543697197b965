//! Direct upper F-transform.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuzzyset::{ensure_universe, same_lattice, FuzzySet};
use crate::lattice::{ClauseResult, Elem, Lattice, LawReport};
use crate::partition::FuzzyPartition;
use crate::space::{Budget, SetSpace};

/// Component values `F↑_j[f]`, one per block in partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTransformResult {
    pub names: Vec<String>,
    pub values: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentEntry {
    pub block: String,
    pub value: String,
}

impl FTransformResult {
    pub fn get(&self, block: &str) -> Option<Elem> {
        self.names
            .iter()
            .position(|n| n == block)
            .map(|j| self.values[j])
    }

    pub fn display(&self, lattice: &Lattice) -> Vec<ComponentEntry> {
        self.names
            .iter()
            .zip(&self.values)
            .map(|(n, &v)| ComponentEntry {
                block: n.clone(),
                value: lattice.display(v).to_string(),
            })
            .collect()
    }
}

/// `⋁_x A(x) ⊗ f(x)` on raw value slices.
#[inline]
pub(crate) fn component_values(lattice: &Lattice, block: &[Elem], f: &[Elem]) -> Elem {
    let t = lattice.tables();
    block
        .iter()
        .zip(f)
        .fold(t.bottom, |acc, (&a, &v)| t.join(acc, t.tensor(a, v)))
}

fn ensure_input(p: &FuzzyPartition, f: &FuzzySet) -> Result<()> {
    ensure_universe(p.universe(), f.universe())?;
    if !same_lattice(p.lattice(), f.lattice()) {
        return Err(Error::LatticeMismatch);
    }
    Ok(())
}

pub fn ft_component(p: &FuzzyPartition, f: &FuzzySet, block: &str) -> Result<Elem> {
    let j = p.block_index(block)?;
    ensure_input(p, f)?;
    Ok(component_values(p.lattice(), p.block(j).values(), f.values()))
}

pub fn ft_components(p: &FuzzyPartition, f: &FuzzySet) -> Result<FTransformResult> {
    ensure_input(p, f)?;
    Ok(FTransformResult {
        names: p.names().to_vec(),
        values: p
            .blocks()
            .iter()
            .map(|b| component_values(p.lattice(), b.values(), f.values()))
            .collect(),
    })
}

/// The fuzzy set `x ↦ F↑_{ξ(x)}[f]`.
pub fn ft_field(p: &FuzzyPartition, f: &FuzzySet) -> Result<FuzzySet> {
    let components = ft_components(p, f)?;
    let values = p.xi_table().iter().map(|&j| components.values[j]).collect();
    Ok(FuzzySet::from_parts(
        p.lattice().clone(),
        p.universe().clone(),
        values,
    ))
}

/// Field values for the set at `index`, written into `out`.
pub(crate) fn field_values_into(p: &FuzzyPartition, space: &SetSpace, index: usize, out: &mut Vec<Elem>) {
    let f = space.values(index);
    let components: Vec<Elem> = p
        .blocks()
        .iter()
        .map(|b| component_values(p.lattice(), b.values(), f))
        .collect();
    out.clear();
    out.extend(p.xi_table().iter().map(|&j| components[j]));
}

/// Checks the component laws for every block over all `f, g ∈ L^X`:
/// constants are fixed, monotonicity, `a ⊗ ·` scaling, joins preserved and
/// meets sub-preserved.
pub fn ft_law_suite(p: &FuzzyPartition, budget: Budget) -> Result<LawReport> {
    let space = SetSpace::new(p.lattice().clone(), p.universe().clone(), budget)?;
    let l = p.lattice();
    let t = l.tables();
    let n = space.len();
    let comp = |j: usize, f: usize| component_values(l, p.block(j).values(), space.values(f));
    let show = |f: usize| space.set(f).to_string();
    let blocks = 0..p.len();

    let constants = blocks.clone().find_map(|j| {
        l.elements().find_map(|a| {
            let v = comp(j, space.constant_index(a));
            (v != a).then(|| format!("{}: F[{}] = {}", p.name(j), l.display(a), l.display(v)))
        })
    });
    let scaling = blocks.clone().find_map(|j| {
        (0..n).find_map(|f| {
            l.elements().find_map(|a| {
                let lhs = comp(j, space.scale(a, f, |a, x| t.tensor(a, x)));
                let rhs = t.tensor(a, comp(j, f));
                (lhs != rhs).then(|| {
                    format!(
                        "{}: a={}, f={}: F[a⊗f] = {} ≠ a⊗F[f] = {}",
                        p.name(j),
                        l.display(a),
                        show(f),
                        l.display(lhs),
                        l.display(rhs)
                    )
                })
            })
        })
    });
    let pairs = |bad: &dyn Fn(usize, usize, usize) -> Option<String>| {
        blocks
            .clone()
            .find_map(|j| (0..n).find_map(|f| (0..n).find_map(|g| bad(j, f, g))))
    };
    let monotone = pairs(&|j, f, g| {
        (space.leq(f, g) && !l.leq(comp(j, f), comp(j, g))).then(|| {
            format!(
                "{}: f={} ≤ g={} but F[f] = {} ≰ F[g] = {}",
                p.name(j),
                show(f),
                show(g),
                l.display(comp(j, f)),
                l.display(comp(j, g))
            )
        })
    });
    let join = pairs(&|j, f, g| {
        let lhs = comp(j, space.combine(f, g, |a, b| t.join(a, b)));
        let rhs = t.join(comp(j, f), comp(j, g));
        (lhs != rhs).then(|| {
            format!(
                "{}: f={}, g={}: F[f∨g] = {} ≠ {}",
                p.name(j),
                show(f),
                show(g),
                l.display(lhs),
                l.display(rhs)
            )
        })
    });
    let meet = pairs(&|j, f, g| {
        let lhs = comp(j, space.combine(f, g, |a, b| t.meet(a, b)));
        let rhs = t.meet(comp(j, f), comp(j, g));
        (!l.leq(lhs, rhs)).then(|| {
            format!(
                "{}: f={}, g={}: F[f∧g] = {} ≰ {}",
                p.name(j),
                show(f),
                show(g),
                l.display(lhs),
                l.display(rhs)
            )
        })
    });
    Ok(LawReport {
        clauses: vec![
            ClauseResult::new("constants", constants),
            ClauseResult::new("monotone", monotone),
            ClauseResult::new("scaling", scaling),
            ClauseResult::new("join", join),
            ClauseResult::new("meet", meet),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzyset::Universe;
    use std::sync::Arc;

    fn w3() -> FuzzyPartition {
        let l = Arc::new(Lattice::godel_chain(3).unwrap());
        let x = Arc::new(Universe::new("X", ["x1", "x2", "x3"]).unwrap());
        FuzzyPartition::parse(l, x, &[("A1", &["1", "1/2", "0"]), ("A2", &["1/2", "1", "1"])]).unwrap()
    }

    #[test]
    fn w3_components_and_field() {
        let p = w3();
        let f = FuzzySet::parse(p.lattice().clone(), p.universe().clone(), &["0", "1/2", "1"]).unwrap();
        let l = p.lattice();
        assert_eq!(l.display(ft_component(&p, &f, "A1").unwrap()), "1/2");
        assert_eq!(l.display(ft_component(&p, &f, "A2").unwrap()), "1");
        assert_eq!(ft_field(&p, &f).unwrap().display_values(), ["1/2", "1", "1"]);
    }

    #[test]
    fn constants_are_fixed() {
        let p = w3();
        let l = p.lattice().clone();
        for a in l.elements() {
            let f = FuzzySet::constant(l.clone(), p.universe().clone(), a).unwrap();
            assert!(ft_components(&p, &f).unwrap().values.iter().all(|&v| v == a));
            assert_eq!(ft_field(&p, &f).unwrap(), f);
        }
    }

    #[test]
    fn x2_field() {
        let l = Arc::new(Lattice::godel_chain(3).unwrap());
        let x = Arc::new(Universe::new("X2", ["x1", "x2"]).unwrap());
        let p = FuzzyPartition::parse(l.clone(), x.clone(), &[("x1", &["1", "1/2"]), ("x2", &["1/2", "1"])]).unwrap();
        let f = FuzzySet::parse(l, x, &["0", "1"]).unwrap();
        assert_eq!(ft_field(&p, &f).unwrap().display_values(), ["1/2", "1"]);
    }

    #[test]
    fn laws_on_w3() {
        let report = ft_law_suite(&w3(), Budget::default()).unwrap();
        assert_eq!(report.clauses.len(), 5);
        assert!(report.all_hold());
    }

    #[test]
    fn unknown_block() {
        let p = w3();
        let f = FuzzySet::constant(p.lattice().clone(), p.universe().clone(), p.lattice().top()).unwrap();
        assert_eq!(ft_component(&p, &f, "A9"), Err(Error::UnknownBlock("A9".into())));
    }
}
