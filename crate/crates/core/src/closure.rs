//! L-fuzzy closure systems and closure operators, stored extensionally over
//! the enumeration of `L^X`, plus the cross-constructions between them,
//! partitions and relations.

use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuzzyset::{FuzzySet, Universe};
use crate::ftransform::field_values_into;
use crate::lattice::{ClauseResult, Elem, Lattice};
use crate::partition::FuzzyPartition;
use crate::relation::{relation_from_system, FuzzyRelation};
use crate::space::{Budget, SetSpace};

/// Which construction produced a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    FromPartition,
    FromRelation,
    FromOperator,
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemReport {
    pub axiom_i: ClauseResult,
    pub axiom_ii: ClauseResult,
    pub enriched: ClauseResult,
    pub strong: ClauseResult,
}

impl SystemReport {
    /// Axioms (i) and (ii): the table is a closure system.
    pub fn is_closure_system(&self) -> bool {
        self.axiom_i.holds && self.axiom_ii.holds
    }

    pub fn all_hold(&self) -> bool {
        self.is_closure_system() && self.enriched.holds && self.strong.holds
    }
}

/// A degree-valued family `Υ: L^X → L`.
#[derive(Debug)]
pub struct ClosureSystem {
    space: Arc<SetSpace>,
    table: Vec<Elem>,
    provenance: Provenance,
    report: OnceLock<SystemReport>,
}

impl Clone for ClosureSystem {
    fn clone(&self) -> Self {
        ClosureSystem {
            space: self.space.clone(),
            table: self.table.clone(),
            provenance: self.provenance,
            report: self.report.clone(),
        }
    }
}

impl ClosureSystem {
    fn from_table(space: Arc<SetSpace>, table: Vec<Elem>, provenance: Provenance) -> Self {
        ClosureSystem {
            space,
            table,
            provenance,
            report: OnceLock::new(),
        }
    }

    /// A user-supplied table, one value per enumeration index.
    pub fn explicit(space: Arc<SetSpace>, table: Vec<Elem>) -> Result<Self> {
        if table.len() != space.len() {
            return Err(Error::Precondition(format!(
                "closure system table has {} entries, L^X has {}",
                table.len(),
                space.len()
            )));
        }
        for &v in &table {
            space.lattice().check(v)?;
        }
        Ok(Self::from_table(space, table, Provenance::Explicit))
    }

    pub fn space(&self) -> &Arc<SetSpace> {
        &self.space
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        self.space.lattice()
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.space.universe()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    #[inline]
    pub fn value(&self, index: usize) -> Elem {
        self.table[index]
    }

    pub fn get(&self, f: &FuzzySet) -> Result<Elem> {
        Ok(self.table[self.space.index_of(f)?])
    }

    /// Axiom results, computed once.
    pub fn report(&self) -> &SystemReport {
        self.report.get_or_init(|| check_system(self))
    }

    pub fn same_table(&self, other: &ClosureSystem) -> bool {
        self.universe().same_as(other.universe()) && self.table == other.table
    }
}

/// A closure operator candidate `c: L^X → L^X`, as enumeration indices.
#[derive(Clone, Debug)]
pub struct ClosureOperator {
    space: Arc<SetSpace>,
    table: Vec<usize>,
}

impl ClosureOperator {
    pub fn explicit(space: Arc<SetSpace>, table: Vec<usize>) -> Result<Self> {
        if table.len() != space.len() || table.iter().any(|&i| i >= space.len()) {
            return Err(Error::Precondition(
                "operator table must map every index of L^X into L^X".into(),
            ));
        }
        Ok(ClosureOperator { space, table })
    }

    pub fn identity(space: Arc<SetSpace>) -> Self {
        let table = (0..space.len()).collect();
        ClosureOperator { space, table }
    }

    pub fn constant_top(space: Arc<SetSpace>) -> Self {
        let table = vec![space.top_index(); space.len()];
        ClosureOperator { space, table }
    }

    pub fn space(&self) -> &Arc<SetSpace> {
        &self.space
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn value(&self, index: usize) -> usize {
        self.table[index]
    }

    pub fn apply(&self, f: &FuzzySet) -> Result<FuzzySet> {
        Ok(self.space.set(self.table[self.space.index_of(f)?]))
    }

    pub fn same_table(&self, other: &ClosureOperator) -> bool {
        self.space.universe().same_as(other.space.universe()) && self.table == other.table
    }
}

/// `⋀_x (h(x) → f(x))`.
#[inline]
fn subsethood(lattice: &Lattice, h: &[Elem], f: &[Elem]) -> Elem {
    let t = lattice.tables();
    h.iter()
        .zip(f)
        .fold(t.top, |acc, (&a, &b)| t.meet(acc, t.residuum(a, b)))
}

pub fn system_from_partition(p: &FuzzyPartition, budget: Budget) -> Result<ClosureSystem> {
    let space = Arc::new(SetSpace::new(p.lattice().clone(), p.universe().clone(), budget)?);
    Ok(system_from_partition_in(space, p))
}

/// `Υ_P(f) = ⋀_x (F↑_{ξ(x)}[f] → f(x))` over an existing enumeration.
pub fn system_from_partition_in(space: Arc<SetSpace>, p: &FuzzyPartition) -> ClosureSystem {
    let l = space.lattice().clone();
    let table = (0..space.len())
        .into_par_iter()
        .map_init(Vec::new, |field, idx| {
            field_values_into(p, &space, idx, field);
            subsethood(&l, field, space.values(idx))
        })
        .collect();
    ClosureSystem::from_table(space, table, Provenance::FromPartition)
}

pub fn system_from_relation(r: &FuzzyRelation, budget: Budget) -> Result<ClosureSystem> {
    let space = Arc::new(SetSpace::new(r.lattice().clone(), r.universe().clone(), budget)?);
    Ok(system_from_relation_in(space, r))
}

/// `Υ_R(f) = ⋀_x (R̄(f)(x) → f(x))`.
pub fn system_from_relation_in(space: Arc<SetSpace>, r: &FuzzyRelation) -> ClosureSystem {
    let l = space.lattice().clone();
    let table = (0..space.len())
        .into_par_iter()
        .map_init(Vec::new, |upper, idx| {
            r.upper_values_into(space.values(idx), upper);
            subsethood(&l, upper, space.values(idx))
        })
        .collect();
    ClosureSystem::from_table(space, table, Provenance::FromRelation)
}

/// `c(f)(x) = ⋀_g (Υ(g) ⊗ ⋀_z (f(z) → g(z)) → g(x))`.
pub fn operator_from_system(system: &ClosureSystem) -> ClosureOperator {
    let space = system.space.clone();
    let l = space.lattice().clone();
    let t = l.tables();
    let n = space.dim();
    let table = (0..space.len())
        .into_par_iter()
        .map_init(Vec::new, |closure, f| {
            closure.clear();
            closure.resize(n, t.top);
            let fv = space.values(f);
            for g in 0..space.len() {
                let u = system.table[g];
                if u == t.bottom {
                    continue;
                }
                let gv = space.values(g);
                let premise = t.tensor(u, subsethood(&l, fv, gv));
                if premise == t.bottom {
                    continue;
                }
                for (c, &v) in closure.iter_mut().zip(gv) {
                    *c = t.meet(*c, t.residuum(premise, v));
                }
            }
            space.index_of_values(closure)
        })
        .collect();
    ClosureOperator { space, table }
}

/// `Υ_c(f) = ⋀_x (c(f)(x) → f(x))`.
pub fn system_from_operator(c: &ClosureOperator) -> ClosureSystem {
    let space = c.space.clone();
    let l = space.lattice().clone();
    let table = (0..space.len())
        .into_par_iter()
        .map(|f| subsethood(&l, space.values(c.table[f]), space.values(f)))
        .collect();
    ClosureSystem::from_table(space, table, Provenance::FromOperator)
}

fn show(space: &SetSpace, idx: usize) -> String {
    space.set(idx).to_string()
}

/// Scans every pair `(f, g)` in index order and reports the first one failing.
fn first_pair(len: usize, bad: impl Fn(usize, usize) -> Option<String> + Sync) -> Option<String> {
    (0..len)
        .into_par_iter()
        .find_map_first(|f| (0..len).find_map(|g| bad(f, g)))
}

fn first_scaled(
    space: &SetSpace,
    bad: impl Fn(Elem, usize) -> Option<String> + Sync,
) -> Option<String> {
    let constants: Vec<Elem> = space.lattice().elements().collect();
    (0..space.len())
        .into_par_iter()
        .find_map_first(|f| constants.iter().find_map(|&a| bad(a, f)))
}

/// Checks Υ(1_X) = 1, meet-superadditivity on pairs, and stability under
/// `a → ·` and `a ⊗ ·` for every constant `a`.
pub fn check_system(system: &ClosureSystem) -> SystemReport {
    let space = &system.space;
    let l = space.lattice();
    let t = l.tables();
    let u = |i: usize| system.table[i];
    let name = |a: Elem| l.display(a).to_string();

    let top = space.top_index();
    let axiom_i = (u(top) != l.top()).then(|| format!("Υ(1_X) = {}", name(u(top))));

    let axiom_ii = first_pair(space.len(), |f, g| {
        let m = space.combine(f, g, |a, b| t.meet(a, b));
        let rhs = t.meet(u(f), u(g));
        (!t.leq(rhs, u(m))).then(|| {
            format!(
                "f={}, g={}: Υ(f∧g) = {} < Υ(f)∧Υ(g) = {}",
                show(space, f),
                show(space, g),
                name(u(m)),
                name(rhs)
            )
        })
    });

    let enriched = first_scaled(space, |a, f| {
        let h = space.scale(a, f, |a, x| t.residuum(a, x));
        (!t.leq(u(f), u(h))).then(|| {
            format!(
                "a={}, f={}: Υ(a→f) = {} < Υ(f) = {}",
                name(a),
                show(space, f),
                name(u(h)),
                name(u(f))
            )
        })
    });

    let strong = first_scaled(space, |a, f| {
        let h = space.scale(a, f, |a, x| t.tensor(a, x));
        (!t.leq(u(f), u(h))).then(|| {
            format!(
                "a={}, f={}: Υ(a⊗f) = {} < Υ(f) = {}",
                name(a),
                show(space, f),
                name(u(h)),
                name(u(f))
            )
        })
    });

    SystemReport {
        axiom_i: ClauseResult::new("axiom_i", axiom_i),
        axiom_ii: ClauseResult::new("axiom_ii", axiom_ii),
        enriched: ClauseResult::new("enriched", enriched),
        strong: ClauseResult::new("strong", strong),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorReport {
    pub fixes_top: ClauseResult,
    pub inflationary: ClauseResult,
    pub join_preserving: ClauseResult,
    pub idempotent: ClauseResult,
    pub strong: ClauseResult,
}

impl OperatorReport {
    pub fn is_closure_operator(&self) -> bool {
        self.fixes_top.holds && self.inflationary.holds && self.join_preserving.holds && self.idempotent.holds
    }

    pub fn all_hold(&self) -> bool {
        self.is_closure_operator() && self.strong.holds
    }
}

/// Checks the four closure-operator axioms and strength.
pub fn check_operator(c: &ClosureOperator) -> OperatorReport {
    let space = &c.space;
    let t = space.lattice().tables();
    let name = |a: Elem| t.name(a).to_string();

    let top = space.top_index();
    let fixes_top = (c.value(top) != top).then(|| format!("c(1_X) = {}", show(space, c.value(top))));

    let inflationary = (0..space.len())
        .find(|&f| !space.leq(f, c.value(f)))
        .map(|f| format!("f={}: c(f) = {}", show(space, f), show(space, c.value(f))));

    let join_preserving = first_pair(space.len(), |f, g| {
        let lhs = c.value(space.combine(f, g, |a, b| t.join(a, b)));
        let rhs = space.combine(c.value(f), c.value(g), |a, b| t.join(a, b));
        (lhs != rhs).then(|| {
            format!(
                "f={}, g={}: c(f∨g) = {} ≠ c(f)∨c(g) = {}",
                show(space, f),
                show(space, g),
                show(space, lhs),
                show(space, rhs)
            )
        })
    });

    let idempotent = (0..space.len())
        .find(|&f| c.value(c.value(f)) != c.value(f))
        .map(|f| {
            format!(
                "f={}: c(c(f)) = {} ≠ c(f) = {}",
                show(space, f),
                show(space, c.value(c.value(f))),
                show(space, c.value(f))
            )
        });

    let strong = first_scaled(space, |a, f| {
        let lhs = c.value(space.scale(a, f, |a, x| t.tensor(a, x)));
        let rhs = space.scale(a, c.value(f), |a, x| t.tensor(a, x));
        (!space.leq(rhs, lhs)).then(|| {
            format!(
                "a={}, f={}: c(a⊗f) = {} ≱ a⊗c(f) = {}",
                name(a),
                show(space, f),
                show(space, lhs),
                show(space, rhs)
            )
        })
    });

    OperatorReport {
        fixes_top: ClauseResult::new("fixes_top", fixes_top),
        inflationary: ClauseResult::new("inflationary", inflationary),
        join_preserving: ClauseResult::new("join_preserving", join_preserving),
        idempotent: ClauseResult::new("idempotent", idempotent),
        strong: ClauseResult::new("strong", strong),
    }
}

/// One position where a round trip changed a value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub at: String,
    pub before: String,
    pub after: String,
}

/// Outcome of comparing an object with its image under a construction and
/// its claimed inverse. Observational only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTripReport {
    pub equal: bool,
    pub positions: usize,
    pub discrepancies: usize,
    /// Up to [`RoundTripReport::SAMPLE`] discrepancies in index order.
    pub sample: Vec<Discrepancy>,
}

impl RoundTripReport {
    pub const SAMPLE: usize = 8;

    fn collect(positions: usize, diffs: impl Iterator<Item = Discrepancy>) -> Self {
        let mut discrepancies = 0;
        let mut sample = Vec::new();
        for d in diffs {
            discrepancies += 1;
            if sample.len() < Self::SAMPLE {
                sample.push(d);
            }
        }
        RoundTripReport {
            equal: discrepancies == 0,
            positions,
            discrepancies,
            sample,
        }
    }
}

/// Compares `Υ` with `Υ_{c_Υ}`.
pub fn roundtrip_f4(system: &ClosureSystem) -> RoundTripReport {
    let back = system_from_operator(&operator_from_system(system));
    let space = &system.space;
    let l = space.lattice();
    RoundTripReport::collect(
        space.len(),
        (0..space.len())
            .filter(|&i| system.table[i] != back.table[i])
            .map(|i| Discrepancy {
                at: show(space, i),
                before: l.display(system.table[i]).to_string(),
                after: l.display(back.table[i]).to_string(),
            }),
    )
}

/// Compares `R` with `R_{Υ_R}`.
pub fn roundtrip_f2(r: &FuzzyRelation, budget: Budget) -> Result<RoundTripReport> {
    let back = relation_from_system(&system_from_relation(r, budget)?);
    let u = r.universe();
    let l = r.lattice();
    let n = u.len();
    Ok(RoundTripReport::collect(
        n * n,
        (0..n * n)
            .map(|i| (i / n, i % n))
            .filter(|&(x, y)| r.get(x, y) != back.get(x, y))
            .map(|(x, y)| Discrepancy {
                at: format!("({},{})", u.label(x), u.label(y)),
                before: l.display(r.get(x, y)).to_string(),
                after: l.display(back.get(x, y)).to_string(),
            }),
    ))
}
