//! Finite complete residuated lattices.
//!
//! A lattice is stored as total tables for `∧`, `∨`, `⊗` and `→` over a
//! carrier of canonical ordinals. Every carrier is numbered along a linear
//! extension of its order, so `bottom` always has id 0 and `top` the largest
//! id. All law checks are table lookups; nothing here touches floating point.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::{Budget, Cardinality};

/// A carrier element, identified by its ordinal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Elem(u16);

impl Elem {
    pub const fn from_index(index: usize) -> Self {
        Elem(index as u16)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

/// The four binary operations of a residuated lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BinaryOp {
    Meet,
    Join,
    Tensor,
    Residuum,
}

impl fmt::Display for BinaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BinaryOp::Meet => "meet",
            BinaryOp::Join => "join",
            BinaryOp::Tensor => "tensor",
            BinaryOp::Residuum => "residuum",
        })
    }
}

/// Description of a lattice, as found in instance documents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LatticeSpec {
    GodelChain {
        n: usize,
    },
    LukasiewiczChain {
        n: usize,
    },
    Boolean {
        atoms: usize,
    },
    /// Explicit element names, order matrix and row-major tensor table.
    /// The residuum is derived from the tensor when omitted.
    Table {
        elements: Vec<String>,
        leq: Vec<Vec<bool>>,
        tensor: Vec<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        residuum: Option<Vec<Vec<String>>>,
    },
}

/// Raw operation tables. These may be inconsistent; [`Lattice`] wraps a
/// validated copy, while the law checkers accept raw tables so that
/// corrupted instances can be inspected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tables {
    pub names: Vec<String>,
    pub leq: Vec<bool>,
    pub meet: Vec<Elem>,
    pub join: Vec<Elem>,
    pub tensor: Vec<Elem>,
    pub residuum: Vec<Elem>,
    pub bottom: Elem,
    pub top: Elem,
}

impl Tables {
    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.size()).map(Elem::from_index)
    }

    #[inline]
    fn at(&self, a: Elem, b: Elem) -> usize {
        a.index() * self.size() + b.index()
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[self.at(a, b)]
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[self.at(a, b)]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[self.at(a, b)]
    }

    #[inline]
    pub fn tensor(&self, a: Elem, b: Elem) -> Elem {
        self.tensor[self.at(a, b)]
    }

    #[inline]
    pub fn residuum(&self, a: Elem, b: Elem) -> Elem {
        self.residuum[self.at(a, b)]
    }

    #[inline]
    pub fn apply(&self, op: BinaryOp, a: Elem, b: Elem) -> Elem {
        match op {
            BinaryOp::Meet => self.meet(a, b),
            BinaryOp::Join => self.join(a, b),
            BinaryOp::Tensor => self.tensor(a, b),
            BinaryOp::Residuum => self.residuum(a, b),
        }
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a.index()]
    }

    /// Meet of an arbitrary family; the empty meet is `top`.
    pub fn meet_all(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of an arbitrary family; the empty join is `bottom`.
    pub fn join_all(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        items.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }
}

/// A validated finite complete residuated lattice.
#[derive(Clone, Debug)]
pub struct Lattice {
    spec: LatticeSpec,
    tables: Tables,
    by_name: HashMap<String, Elem>,
    zero_divisors: Vec<(Elem, Elem)>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.tables == other.tables
    }
}

impl Eq for Lattice {}

impl Lattice {
    pub fn build(spec: &LatticeSpec) -> Result<Self> {
        let tables = match spec {
            LatticeSpec::GodelChain { n } => godel_tables(*n)?,
            LatticeSpec::LukasiewiczChain { n } => lukasiewicz_tables(*n)?,
            LatticeSpec::Boolean { atoms } => boolean_tables(*atoms)?,
            LatticeSpec::Table {
                elements,
                leq,
                tensor,
                residuum,
            } => table_tables(elements, leq, tensor, residuum.as_deref())?,
        };
        Self::from_tables(spec.clone(), tables)
    }

    pub fn godel_chain(n: usize) -> Result<Self> {
        Self::build(&LatticeSpec::GodelChain { n })
    }

    pub fn lukasiewicz_chain(n: usize) -> Result<Self> {
        Self::build(&LatticeSpec::LukasiewiczChain { n })
    }

    pub fn boolean(atoms: usize) -> Result<Self> {
        Self::build(&LatticeSpec::Boolean { atoms })
    }

    fn from_tables(spec: LatticeSpec, tables: Tables) -> Result<Self> {
        validate_tables(&tables)?;
        let by_name = tables
            .names
            .iter()
            .enumerate()
            .map(|(i, name)| (name.clone(), Elem::from_index(i)))
            .collect();
        let zero_divisors = scan_zero_divisors(&tables);
        Ok(Lattice {
            spec,
            tables,
            by_name,
            zero_divisors,
        })
    }

    pub fn spec(&self) -> &LatticeSpec {
        &self.spec
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    pub fn size(&self) -> usize {
        self.tables.size()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        self.tables.elements()
    }

    pub fn bottom(&self) -> Elem {
        self.tables.bottom
    }

    pub fn top(&self) -> Elem {
        self.tables.top
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.index() < self.size()
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::ElementOutOfRange(a.index()))
        }
    }

    /// Exact table lookup with carrier checks.
    pub fn binary(&self, op: BinaryOp, a: Elem, b: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.tables.apply(op, a, b))
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.tables.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.tables.meet(a, b)
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.tables.join(a, b)
    }

    #[inline]
    pub fn tensor(&self, a: Elem, b: Elem) -> Elem {
        self.tables.tensor(a, b)
    }

    #[inline]
    pub fn residuum(&self, a: Elem, b: Elem) -> Elem {
        self.tables.residuum(a, b)
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        self.tables.meet_all(items)
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        self.tables.join_all(items)
    }

    pub fn display(&self, a: Elem) -> &str {
        self.tables.name(a)
    }

    pub fn parse(&self, text: &str) -> Result<Elem> {
        self.by_name
            .get(text.trim())
            .copied()
            .ok_or_else(|| Error::UnknownElement(text.to_string()))
    }

    pub fn zero_divisors(&self) -> &[(Elem, Elem)] {
        &self.zero_divisors
    }

    pub fn has_zero_divisors(&self) -> bool {
        !self.zero_divisors.is_empty()
    }
}

fn fraction(k: usize, d: usize) -> String {
    if k == 0 {
        return "0".into();
    }
    let g = k.gcd(&d);
    let (num, den) = (k / g, d / g);
    if den == 1 {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

fn chain_tables(
    n: usize,
    tensor: impl Fn(usize, usize) -> usize,
    residuum: impl Fn(usize, usize) -> usize,
) -> Tables {
    let m = n - 1;
    let mut t = Tables {
        names: (0..n).map(|k| fraction(k, m)).collect(),
        leq: Vec::with_capacity(n * n),
        meet: Vec::with_capacity(n * n),
        join: Vec::with_capacity(n * n),
        tensor: Vec::with_capacity(n * n),
        residuum: Vec::with_capacity(n * n),
        bottom: Elem::from_index(0),
        top: Elem::from_index(m),
    };
    for a in 0..n {
        for b in 0..n {
            t.leq.push(a <= b);
            t.meet.push(Elem::from_index(a.min(b)));
            t.join.push(Elem::from_index(a.max(b)));
            t.tensor.push(Elem::from_index(tensor(a, b)));
            t.residuum.push(Elem::from_index(residuum(a, b)));
        }
    }
    t
}

fn godel_tables(n: usize) -> Result<Tables> {
    if n < 2 {
        return Err(Error::LatticeSpec(format!("godel_chain needs n ≥ 2, got {n}")));
    }
    let m = n - 1;
    Ok(chain_tables(n, |a, b| a.min(b), |a, b| if a <= b { m } else { b }))
}

// Values k/(n-1) are handled as numerators over the common denominator n-1,
// so max(0, a+b-1) and min(1, 1-a+b) stay exact integers.
fn lukasiewicz_tables(n: usize) -> Result<Tables> {
    if n < 2 {
        return Err(Error::LatticeSpec(format!(
            "lukasiewicz_chain needs n ≥ 2, got {n}"
        )));
    }
    let m = n - 1;
    Ok(chain_tables(
        n,
        |a, b| (a + b).saturating_sub(m),
        |a, b| (m + b).saturating_sub(a).min(m),
    ))
}

const ATOM_NAMES: [&str; 4] = ["a", "b", "c", "d"];

fn boolean_tables(atoms: usize) -> Result<Tables> {
    if !(1..=4).contains(&atoms) {
        return Err(Error::LatticeSpec(format!(
            "boolean needs 1 ≤ atoms ≤ 4, got {atoms}"
        )));
    }
    let n = 1usize << atoms;
    let full = n - 1;
    let name = |mask: usize| {
        let parts: Vec<&str> = (0..atoms)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| ATOM_NAMES[i])
            .collect();
        format!("{{{}}}", parts.join(","))
    };
    // Numeric order of bitmasks is a linear extension of inclusion.
    let mut t = Tables {
        names: (0..n).map(name).collect(),
        leq: Vec::with_capacity(n * n),
        meet: Vec::with_capacity(n * n),
        join: Vec::with_capacity(n * n),
        tensor: Vec::with_capacity(n * n),
        residuum: Vec::with_capacity(n * n),
        bottom: Elem::from_index(0),
        top: Elem::from_index(full),
    };
    for a in 0..n {
        for b in 0..n {
            t.leq.push(a & b == a);
            t.meet.push(Elem::from_index(a & b));
            t.join.push(Elem::from_index(a | b));
            t.tensor.push(Elem::from_index(a & b));
            t.residuum.push(Elem::from_index((!a | b) & full));
        }
    }
    Ok(t)
}

fn table_tables(
    elements: &[String],
    leq: &[Vec<bool>],
    tensor: &[Vec<String>],
    residuum: Option<&[Vec<String>]>,
) -> Result<Tables> {
    let n = elements.len();
    if n < 2 {
        return Err(Error::LatticeSpec(
            "table lattice needs at least two elements".into(),
        ));
    }
    let mut seen = HashMap::new();
    for (i, e) in elements.iter().enumerate() {
        if e.trim().is_empty() || e.trim() != e {
            return Err(Error::LatticeSpec(format!("bad element name {e:?}")));
        }
        if seen.insert(e.as_str(), i).is_some() {
            return Err(Error::LatticeSpec(format!("duplicate element {e:?}")));
        }
    }
    let square = |rows: usize, cols: &dyn Fn(usize) -> usize, what: &str| -> Result<()> {
        if rows != n || (0..n).any(|i| cols(i) != n) {
            return Err(Error::LatticeSpec(format!("{what} table must be {n}×{n}")));
        }
        Ok(())
    };
    square(leq.len(), &|i| leq[i].len(), "leq")?;
    square(tensor.len(), &|i| tensor[i].len(), "tensor")?;
    if let Some(r) = residuum {
        square(r.len(), &|i| r[i].len(), "residuum")?;
    }

    // Partial order axioms on the user's numbering.
    for a in 0..n {
        if !leq[a][a] {
            return Err(Error::NotPartialOrder(format!("{} ≤ {} fails", elements[a], elements[a])));
        }
        for b in 0..n {
            if a != b && leq[a][b] && leq[b][a] {
                return Err(Error::NotPartialOrder(format!(
                    "{} and {} are distinct but mutually ≤",
                    elements[a], elements[b]
                )));
            }
            for c in 0..n {
                if leq[a][b] && leq[b][c] && !leq[a][c] {
                    return Err(Error::NotPartialOrder(format!(
                        "{} ≤ {} ≤ {} but not {} ≤ {}",
                        elements[a], elements[b], elements[c], elements[a], elements[c]
                    )));
                }
            }
        }
    }

    // Renumber along a stable linear extension: repeatedly take the first
    // remaining element with no remaining strict predecessor.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .find(|&c| !placed[c] && (0..n).all(|p| p == c || placed[p] || !leq[p][c]))
            .expect("finite partial orders have minimal elements");
        placed[next] = true;
        order.push(next);
    }
    let mut new_id = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        new_id[old] = new;
    }

    let names: Vec<String> = order.iter().map(|&o| elements[o].clone()).collect();
    let lookup = |text: &str| -> Result<Elem> {
        seen.get(text.trim())
            .map(|&old| Elem::from_index(new_id[old]))
            .ok_or_else(|| Error::UnknownElement(text.to_string()))
    };
    let mut leq_t = vec![false; n * n];
    let mut tensor_t = vec![Elem::from_index(0); n * n];
    let mut residuum_t = residuum.map(|_| vec![Elem::from_index(0); n * n]);
    for a in 0..n {
        for b in 0..n {
            let at = new_id[a] * n + new_id[b];
            leq_t[at] = leq[a][b];
            tensor_t[at] = lookup(&tensor[a][b])?;
            if let (Some(src), Some(dst)) = (residuum, residuum_t.as_mut()) {
                dst[at] = lookup(&src[a][b])?;
            }
        }
    }
    let le = |a: usize, b: usize| leq_t[a * n + b];

    let bounds = |upper: bool| -> Vec<Option<usize>> {
        let mut out = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let candidates: Vec<usize> = (0..n)
                    .filter(|&c| if upper { le(a, c) && le(b, c) } else { le(c, a) && le(c, b) })
                    .collect();
                let best = candidates.iter().copied().find(|&c| {
                    candidates
                        .iter()
                        .all(|&d| if upper { le(c, d) } else { le(d, c) })
                });
                out.push(best);
            }
        }
        out
    };
    let mut meet = Vec::with_capacity(n * n);
    for (i, m) in bounds(false).into_iter().enumerate() {
        match m {
            Some(m) => meet.push(Elem::from_index(m)),
            None => return Err(Error::LacksMeets(names[i / n].clone(), names[i % n].clone())),
        }
    }
    let mut join = Vec::with_capacity(n * n);
    for (i, j) in bounds(true).into_iter().enumerate() {
        match j {
            Some(j) => join.push(Elem::from_index(j)),
            None => return Err(Error::LacksJoins(names[i / n].clone(), names[i % n].clone())),
        }
    }
    // Pairwise meets and joins plus finiteness give bottom and top.
    let bottom = (0..n).find(|&c| (0..n).all(|d| le(c, d)));
    let top = (0..n).find(|&c| (0..n).all(|d| le(d, c)));
    let (Some(bottom), Some(top)) = (bottom, top) else {
        return Err(Error::NotPartialOrder("order has no least or greatest element".into()));
    };

    let mut tables = Tables {
        names,
        leq: leq_t,
        meet,
        join,
        tensor: tensor_t,
        residuum: Vec::new(),
        bottom: Elem::from_index(bottom),
        top: Elem::from_index(top),
    };
    tables.residuum = match residuum_t {
        Some(r) => r,
        None => derive_residuum(&tables),
    };
    Ok(tables)
}

/// `b → c = ⋁{a : a ⊗ b ≤ c}`.
pub fn derive_residuum(t: &Tables) -> Vec<Elem> {
    let mut out = Vec::with_capacity(t.size() * t.size());
    for b in t.elements() {
        for c in t.elements() {
            out.push(t.join_all(t.elements().filter(|&a| t.leq(t.tensor(a, b), c))));
        }
    }
    out
}

fn validate_tables(t: &Tables) -> Result<()> {
    let name = |a: Elem| t.name(a).to_string();
    for a in t.elements() {
        if t.tensor(a, t.top) != a {
            return Err(Error::TensorUnit(name(a)));
        }
        for b in t.elements() {
            if t.tensor(a, b) != t.tensor(b, a) {
                return Err(Error::TensorNotCommutative(name(a), name(b)));
            }
        }
    }
    for a in t.elements() {
        for b in t.elements() {
            for c in t.elements() {
                if t.tensor(t.tensor(a, b), c) != t.tensor(a, t.tensor(b, c)) {
                    return Err(Error::TensorNotAssociative(name(a), name(b), name(c)));
                }
            }
        }
    }
    if let Some((a, b, c)) = adjointness_violation(t) {
        return Err(Error::Adjointness(name(a), name(b), name(c)));
    }
    Ok(())
}

fn adjointness_violation(t: &Tables) -> Option<(Elem, Elem, Elem)> {
    for a in t.elements() {
        for b in t.elements() {
            for c in t.elements() {
                if t.leq(t.tensor(a, b), c) != t.leq(a, t.residuum(b, c)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn scan_zero_divisors(t: &Tables) -> Vec<(Elem, Elem)> {
    let mut out = Vec::new();
    for a in t.elements().filter(|&a| a != t.bottom) {
        for b in t.elements().filter(|&b| b != t.bottom && b.index() >= a.index()) {
            if t.tensor(a, b) == t.bottom {
                out.push((a, b));
            }
        }
    }
    out
}

/// Outcome of one checked clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub clause: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl ClauseResult {
    pub(crate) fn new(clause: &str, counterexample: Option<String>) -> Self {
        ClauseResult {
            clause: clause.to_string(),
            holds: counterexample.is_none(),
            counterexample,
        }
    }
}

/// The three defining clauses of a complete residuated lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub complete_lattice: ClauseResult,
    pub commutative_monoid: ClauseResult,
    pub adjointness: ClauseResult,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.complete_lattice.holds && self.commutative_monoid.holds && self.adjointness.holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub axioms: AxiomReport,
    /// Every unordered pair `(a, b)`, `a, b ≠ 0`, with `a ⊗ b = 0`.
    pub zero_divisors: Vec<(String, String)>,
}

impl LatticeReport {
    pub fn zero_divisor_free(&self) -> bool {
        self.zero_divisors.is_empty()
    }
}

pub fn check_axioms(t: &Tables) -> AxiomReport {
    let name = |a: Elem| t.name(a);
    let mut lattice_fault = None;
    'outer: for a in t.elements() {
        if !t.leq(t.bottom, a) || !t.leq(a, t.top) {
            lattice_fault = Some(format!("{} is not between bottom and top", name(a)));
            break;
        }
        for b in t.elements() {
            let m = t.meet(a, b);
            let j = t.join(a, b);
            let glb = t.leq(m, a)
                && t.leq(m, b)
                && t.elements().all(|c| !(t.leq(c, a) && t.leq(c, b)) || t.leq(c, m));
            let lub = t.leq(a, j)
                && t.leq(b, j)
                && t.elements().all(|c| !(t.leq(a, c) && t.leq(b, c)) || t.leq(j, c));
            if !glb || !lub {
                lattice_fault = Some(format!(
                    "meet/join table wrong at ({}, {})",
                    name(a),
                    name(b)
                ));
                break 'outer;
            }
        }
    }
    let monoid_fault = validate_monoid(t);
    let adjoint_fault = adjointness_violation(t).map(|(a, b, c)| {
        format!("a={}, b={}, c={}", name(a), name(b), name(c))
    });
    AxiomReport {
        complete_lattice: ClauseResult::new("complete lattice", lattice_fault),
        commutative_monoid: ClauseResult::new("commutative monoid", monoid_fault),
        adjointness: ClauseResult::new("adjointness", adjoint_fault),
    }
}

fn validate_monoid(t: &Tables) -> Option<String> {
    let name = |a: Elem| t.name(a);
    for a in t.elements() {
        if t.tensor(a, t.top) != a {
            return Some(format!("{}⊗1 ≠ {}", name(a), name(a)));
        }
        for b in t.elements() {
            if t.tensor(a, b) != t.tensor(b, a) {
                return Some(format!("{}⊗{} not commutative", name(a), name(b)));
            }
            for c in t.elements() {
                if t.tensor(t.tensor(a, b), c) != t.tensor(a, t.tensor(b, c)) {
                    return Some(format!(
                        "({}⊗{})⊗{} not associative",
                        name(a),
                        name(b),
                        name(c)
                    ));
                }
            }
        }
    }
    None
}

pub fn zero_divisor_scan(lattice: &Lattice) -> LatticeReport {
    let t = lattice.tables();
    LatticeReport {
        axioms: check_axioms(t),
        zero_divisors: lattice
            .zero_divisors()
            .iter()
            .map(|&(a, b)| (t.name(a).to_string(), t.name(b).to_string()))
            .collect(),
    }
}

/// Results for the nine derived-law clauses, in order (i)..(ix).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub clauses: Vec<ClauseResult>,
}

impl LawReport {
    pub fn all_hold(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }

    pub fn clause(&self, label: &str) -> Option<&ClauseResult> {
        self.clauses.iter().find(|c| c.clause == label)
    }
}

/// Number of elementary evaluations the law suite performs on `n` elements.
pub fn law_suite_cost(n: usize) -> Cardinality {
    let triples = (n as u128).checked_pow(3);
    let families = 1u128
        .checked_shl(n as u32)
        .and_then(|s| s.checked_mul(n as u128));
    match (triples, families) {
        (Some(a), Some(b)) => Cardinality::Exact(a.max(b)),
        _ => Cardinality::Overflow,
    }
}

/// Exhaustively checks the derived residuated-lattice laws over all element
/// triples and, for the indexed-family clauses, over every subset of the
/// carrier (the empty family included).
pub fn law_suite(t: &Tables, budget: Budget) -> Result<LawReport> {
    budget.admit(law_suite_cost(t.size()))?;
    let n = t.size();
    let el = |i: usize| Elem::from_index(i);
    let name = |a: Elem| t.name(a);
    let (zero, one) = (t.bottom, t.top);
    let r = |a, b| t.residuum(a, b);
    let x = |a, b| t.tensor(a, b);
    let le = |a, b| t.leq(a, b);

    let first = |f: &dyn Fn(Elem, Elem, Elem) -> Option<String>| -> Option<String> {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if let Some(msg) = f(el(a), el(b), el(c)) {
                        return Some(msg);
                    }
                }
            }
        }
        None
    };
    let subsets: Vec<Vec<Elem>> = (0..(1usize << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).map(el).collect())
        .collect();
    let fam = |s: &[Elem]| {
        let v: Vec<&str> = s.iter().map(|&e| name(e)).collect();
        format!("{{{}}}", v.join(", "))
    };
    let over_families = |f: &dyn Fn(Elem, &[Elem]) -> Option<String>| -> Option<String> {
        for a in 0..n {
            for s in &subsets {
                if let Some(msg) = f(el(a), s) {
                    return Some(msg);
                }
            }
        }
        None
    };

    let mut clauses = Vec::with_capacity(9);
    clauses.push(ClauseResult::new(
        "i",
        first(&|a, _, _| {
            if x(a, zero) != zero {
                Some(format!("a={}: a⊗0 ≠ 0", name(a)))
            } else if x(a, one) != a {
                Some(format!("a={}: a⊗1 ≠ a", name(a)))
            } else {
                None
            }
        }),
    ));
    clauses.push(ClauseResult::new(
        "ii",
        first(&|a, _, _| {
            if r(a, one) != one {
                Some(format!("a={}: a→1 ≠ 1", name(a)))
            } else if r(one, a) != a {
                Some(format!("a={}: 1→a ≠ a", name(a)))
            } else if r(a, a) != one {
                Some(format!("a={}: a→a ≠ 1", name(a)))
            } else {
                None
            }
        }),
    ));
    clauses.push(ClauseResult::new(
        "iii",
        first(&|a, b, c| {
            if !le(a, b) {
                None
            } else if !le(r(c, a), r(c, b)) {
                Some(format!("a={}, b={}, c={}: c→a ≰ c→b", name(a), name(b), name(c)))
            } else if !le(r(b, c), r(a, c)) {
                Some(format!("a={}, b={}, c={}: a→c ≱ b→c", name(a), name(b), name(c)))
            } else {
                None
            }
        }),
    ));
    // Curried form (a⊗b)→c = a→(b→c), plus a⊗(b→c) ≤ (a→b)→c.
    clauses.push(ClauseResult::new(
        "iv",
        first(&|a, b, c| {
            if r(x(a, b), c) != r(a, r(b, c)) {
                Some(format!("a={}, b={}, c={}: (a⊗b)→c ≠ a→(b→c)", name(a), name(b), name(c)))
            } else if !le(x(a, r(b, c)), r(r(a, b), c)) {
                Some(format!("a={}, b={}, c={}: a⊗(b→c) ≰ (a→b)→c", name(a), name(b), name(c)))
            } else {
                None
            }
        }),
    ));
    clauses.push(ClauseResult::new(
        "v",
        first(&|a, b, c| {
            if !le(x(r(a, b), c), r(a, x(b, c))) {
                Some(format!("a={}, b={}, c={}: (a→b)⊗c ≰ a→b⊗c", name(a), name(b), name(c)))
            } else if !le(r(b, c), r(x(a, b), x(a, c))) {
                Some(format!("a={}, b={}, c={}: a⊗b→a⊗c ≱ b→c", name(a), name(b), name(c)))
            } else {
                None
            }
        }),
    ));
    clauses.push(ClauseResult::new(
        "vi",
        first(&|a, b, c| {
            if !le(r(c, a), r(r(a, b), r(c, b))) {
                Some(format!("a={}, b={}, c={}: (a→b)→(c→b) ≱ c→a", name(a), name(b), name(c)))
            } else if !le(r(b, c), r(r(a, b), r(a, c))) {
                Some(format!("a={}, b={}, c={}: (a→b)→(a→c) ≱ b→c", name(a), name(b), name(c)))
            } else {
                None
            }
        }),
    ));
    clauses.push(ClauseResult::new(
        "vii",
        over_families(&|b, s| {
            let joined = x(t.join_all(s.iter().copied()), b);
            let pieces = t.join_all(s.iter().map(|&a| x(a, b)));
            let met = x(t.meet_all(s.iter().copied()), b);
            let met_pieces = t.meet_all(s.iter().map(|&a| x(a, b)));
            if joined != pieces {
                Some(format!("b={}, family {}: ⋁a_j⊗b ≠ ⋁(a_j⊗b)", name(b), fam(s)))
            } else if !le(met, met_pieces) {
                Some(format!("b={}, family {}: ⋀a_j⊗b ≰ ⋀(a_j⊗b)", name(b), fam(s)))
            } else {
                None
            }
        }),
    ));
    clauses.push(ClauseResult::new(
        "viii",
        over_families(&|a, s| {
            if r(a, t.meet_all(s.iter().copied())) != t.meet_all(s.iter().map(|&b| r(a, b))) {
                Some(format!("a={}, family {}: a→⋀b_j ≠ ⋀(a→b_j)", name(a), fam(s)))
            } else if r(t.join_all(s.iter().copied()), a) != t.meet_all(s.iter().map(|&c| r(c, a))) {
                Some(format!("b={}, family {}: ⋁a_j→b ≠ ⋀(a_j→b)", name(a), fam(s)))
            } else {
                None
            }
        }),
    ));
    clauses.push(ClauseResult::new(
        "ix",
        over_families(&|a, s| {
            if !le(t.join_all(s.iter().map(|&b| r(a, b))), r(a, t.join_all(s.iter().copied()))) {
                Some(format!("a={}, family {}: ⋁(a→b_j) ≰ a→⋁b_j", name(a), fam(s)))
            } else {
                None
            }
        }),
    ));
    Ok(LawReport { clauses })
}
