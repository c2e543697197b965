//! Greatest-witness checks for graded morphisms between partitions,
//! approximation spaces, closure system spaces and closure spaces.
//!
//! Each checker returns the greatest `l` for which the graded condition
//! holds, computed as a meet of residua. A candidate is a morphism exactly
//! when that value is not bottom.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::closure::{
    operator_from_system, system_from_operator, system_from_partition_in,
    system_from_relation_in, ClosureOperator, ClosureSystem,
};
use crate::error::{Error, Result};
use crate::ftransform::component_values;
use crate::fuzzyset::{same_lattice, SetMap};
use crate::lattice::{Elem, Lattice};
use crate::partition::{product_partition, FuzzyPartition, IdentityIndexedPartition};
use crate::relation::{relation_from_partition, relation_from_system, FuzzyRelation};
use crate::space::{Budget, SetSpace};

/// The greatest admissible `l`, with the first position where the meet is
/// attained when it is below top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub value: Elem,
    pub admissible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub attained_at: Option<Vec<String>>,
}

impl Witness {
    pub fn top(lattice: &Lattice) -> Self {
        Witness {
            value: lattice.top(),
            admissible: true,
            attained_at: None,
        }
    }

    /// Meet of `term(i)` over `0..count`; `locate` names the attaining index.
    fn meet_of(
        lattice: &Lattice,
        count: usize,
        term: impl Fn(usize) -> Elem,
        locate: impl Fn(usize) -> Vec<String>,
    ) -> Self {
        let t = lattice.tables();
        let value = (0..count).fold(t.top, |acc, i| t.meet(acc, term(i)));
        let attained_at = (value != t.top).then(|| {
            let i = (0..count)
                .find(|&i| term(i) == value)
                .or_else(|| (0..count).find(|&i| term(i) != t.top))
                .expect("a term below top exists");
            locate(i)
        });
        Witness {
            value,
            admissible: value != t.bottom,
            attained_at,
        }
    }
}

/// Data `(φ, ψ, W)` between two partitions.
#[derive(Clone, Debug)]
pub struct FpCandidate {
    source: Arc<FuzzyPartition>,
    target: Arc<FuzzyPartition>,
    phi: SetMap,
    psi: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

impl FpCandidate {
    /// Validates shapes and `dom(W) = P_X`. Pairs are `(source block, target block)`.
    pub fn new(
        source: Arc<FuzzyPartition>,
        target: Arc<FuzzyPartition>,
        phi: SetMap,
        psi: Vec<usize>,
        pairs: Vec<(usize, usize)>,
    ) -> Result<Self> {
        if !same_lattice(source.lattice(), target.lattice()) {
            return Err(Error::LatticeMismatch);
        }
        phi.ensure_between(source.universe(), target.universe())?;
        if psi.len() != source.len() || psi.iter().any(|&k| k >= target.len()) {
            return Err(Error::MapNotTotal("index map must send every source block to a target block".into()));
        }
        let pairs: Vec<(usize, usize)> = pairs.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if let Some(&(j, k)) = pairs.iter().find(|&&(j, k)| j >= source.len() || k >= target.len()) {
            return Err(Error::UnknownBlock(format!("pair index ({j}, {k})")));
        }
        if let Some(j) = (0..source.len()).find(|&j| !pairs.iter().any(|&(a, _)| a == j)) {
            return Err(Error::IncompleteDomain(source.name(j).to_string()));
        }
        Ok(FpCandidate {
            source,
            target,
            phi,
            psi,
            pairs,
        })
    }

    /// `W` equal to the graph of `ψ`.
    pub fn with_graph(
        source: Arc<FuzzyPartition>,
        target: Arc<FuzzyPartition>,
        phi: SetMap,
        psi: Vec<usize>,
    ) -> Result<Self> {
        let pairs = psi.iter().copied().enumerate().collect();
        Self::new(source, target, phi, psi, pairs)
    }

    pub fn identity(p: Arc<FuzzyPartition>) -> Self {
        let phi = SetMap::identity(p.universe().clone());
        let psi: Vec<usize> = (0..p.len()).collect();
        Self::with_graph(p.clone(), p, phi, psi).expect("identity is well formed")
    }

    /// An FPS¹ morphism: `ψ = φ` on identity-indexed partitions.
    pub fn identity_indexed(
        source: &IdentityIndexedPartition,
        target: &IdentityIndexedPartition,
        phi: SetMap,
    ) -> Result<Self> {
        let psi = phi.image().to_vec();
        Self::with_graph(
            Arc::new(source.partition().clone()),
            Arc::new(target.partition().clone()),
            phi,
            psi,
        )
    }

    pub fn source(&self) -> &Arc<FuzzyPartition> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FuzzyPartition> {
        &self.target
    }

    pub fn phi(&self) -> &SetMap {
        &self.phi
    }

    pub fn psi(&self) -> &[usize] {
        &self.psi
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        self.source.lattice()
    }

    /// Source blocks `j` with `(A_j, B_ψ(j)) ∈ W`; only these are constrained.
    pub fn constrained_blocks(&self) -> Vec<usize> {
        (0..self.source.len())
            .filter(|&j| self.pairs.contains(&(j, self.psi[j])))
            .collect()
    }

    /// Pairs in `W` off the graph of `ψ`. They impose no condition.
    pub fn unconstrained_pairs(&self) -> Vec<(String, String)> {
        self.pairs
            .iter()
            .filter(|&&(j, k)| self.psi[j] != k)
            .map(|&(j, k)| (self.source.name(j).to_string(), self.target.name(k).to_string()))
            .collect()
    }

    pub fn contains_graph(&self) -> bool {
        self.constrained_blocks().len() == self.source.len()
    }
}

/// `⋀ A_j(x) → B_ψ(j)(φ(x))` over constrained `j` and all `x`.
pub fn fp_witness(c: &FpCandidate) -> Witness {
    let l = c.lattice();
    let js = c.constrained_blocks();
    let n = c.source.universe().len();
    let term = |i: usize| {
        let (j, x) = (js[i / n], i % n);
        l.residuum(c.source.block(j).at(x), c.target.block(c.psi[j]).at(c.phi.apply(x)))
    };
    Witness::meet_of(l, js.len() * n, term, |i| {
        vec![
            c.source.name(js[i / n]).to_string(),
            c.source.universe().label(i % n).to_string(),
        ]
    })
}

/// Both readings of the graded condition, compared element by element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjointForms {
    /// `l` with `l → B_ψ(j)(φ(x)) ≥ A_j(x)` everywhere.
    pub residual_form: Vec<String>,
    /// `l` with `B_ψ(j)(φ(x)) ≥ A_j(x) ⊗ l` everywhere.
    pub tensor_form: Vec<String>,
    pub agree: bool,
    pub greatest_is_witness: bool,
}

pub fn adjoint_forms(c: &FpCandidate) -> AdjointForms {
    let l = c.lattice();
    let js = c.constrained_blocks();
    let n = c.source.universe().len();
    let cells: Vec<(Elem, Elem)> = js
        .iter()
        .flat_map(|&j| {
            (0..n).map(move |x| (c.source.block(j).at(x), c.target.block(c.psi[j]).at(c.phi.apply(x))))
        })
        .collect();
    let residual: Vec<Elem> = l
        .elements()
        .filter(|&k| cells.iter().all(|&(a, b)| l.leq(a, l.residuum(k, b))))
        .collect();
    let tensor: Vec<Elem> = l
        .elements()
        .filter(|&k| cells.iter().all(|&(a, b)| l.leq(l.tensor(a, k), b)))
        .collect();
    let w = fp_witness(c).value;
    let greatest = |s: &[Elem]| s.contains(&w) && s.iter().all(|&k| l.leq(k, w));
    AdjointForms {
        greatest_is_witness: greatest(&residual) && greatest(&tensor),
        agree: residual == tensor,
        residual_form: residual.iter().map(|&k| l.display(k).to_string()).collect(),
        tensor_form: tensor.iter().map(|&k| l.display(k).to_string()).collect(),
    }
}

/// A composed FP-map with its measured and certified witnesses.
#[derive(Clone, Debug)]
pub struct Composition {
    pub candidate: FpCandidate,
    pub witness: Witness,
    /// `l1 ⊗ l2`.
    pub certified_bound: Elem,
    pub bound_holds: bool,
    pub warning: Option<String>,
}

/// `(φ2∘φ1, ψ2∘ψ1, W2·W1)`.
pub fn compose_fp(m1: &FpCandidate, m2: &FpCandidate) -> Result<Composition> {
    if !(Arc::ptr_eq(&m1.target, &m2.source) || *m1.target == *m2.source) {
        return Err(Error::CompositionMismatch(
            "target partition of the first map is not the source of the second".into(),
        ));
    }
    let (w1, w2) = (fp_witness(m1), fp_witness(m2));
    for (w, which) in [(&w1, "first"), (&w2, "second")] {
        if !w.admissible {
            return Err(Error::NotAdmissible(format!("{which} map has witness 0")));
        }
    }
    let phi = m1.phi.then(&m2.phi)?;
    let psi = m1.psi.iter().map(|&k| m2.psi[k]).collect();
    let pairs = m1
        .pairs
        .iter()
        .flat_map(|&(a, b)| m2.pairs.iter().filter(move |&&(b2, _)| b2 == b).map(move |&(_, c)| (a, c)))
        .collect();
    let candidate = FpCandidate::new(m1.source.clone(), m2.target.clone(), phi, psi, pairs)?;
    let l = candidate.lattice().clone();
    let witness = fp_witness(&candidate);
    let certified_bound = l.tensor(w1.value, w2.value);
    let warning = (l.has_zero_divisors() && certified_bound == l.bottom()).then(|| {
        format!(
            "lattice has zero divisors: {} ⊗ {} = 0, so the certified bound is vacuous",
            l.display(w1.value),
            l.display(w2.value)
        )
    });
    Ok(Composition {
        bound_holds: l.leq(certified_bound, witness.value),
        candidate,
        witness,
        certified_bound,
        warning,
    })
}

fn space_for(p: &FuzzyPartition, budget: Budget) -> Result<SetSpace> {
    SetSpace::new(p.lattice().clone(), p.universe().clone(), budget)
}

/// Greatest `l` with `F↑_ψ(j)[f] ≥ F↑_j[φ←f] ⊗ l` for all `f ∈ L^Y` and
/// constrained `j`.
pub fn ft_inequality_witness(c: &FpCandidate, budget: Budget) -> Result<Witness> {
    let ys = space_for(&c.target, budget)?;
    let l = c.lattice();
    let js = c.constrained_blocks();
    let mut pulled = vec![l.bottom(); c.source.universe().len()];
    let mut terms = Vec::with_capacity(ys.len() * js.len());
    for f in 0..ys.len() {
        let fv = ys.values(f);
        for (x, p) in pulled.iter_mut().enumerate() {
            *p = fv[c.phi.apply(x)];
        }
        for &j in &js {
            let lhs = component_values(l, c.source.block(j).values(), &pulled);
            let rhs = component_values(l, c.target.block(c.psi[j]).values(), fv);
            terms.push(l.residuum(lhs, rhs));
        }
    }
    let k = js.len().max(1);
    Ok(Witness::meet_of(l, terms.len(), |i| terms[i], |i| {
        vec![ys.set(i / k).to_string(), c.source.name(js[i % k]).to_string()]
    }))
}

/// Greatest `l` with `F↑_ψ(j)[φ→f] ≥ F↑_j[f] ⊗ l` for all `f ∈ L^X` and
/// constrained `j`.
pub fn ft_forward_bound(c: &FpCandidate, budget: Budget) -> Result<Witness> {
    let xs = space_for(&c.source, budget)?;
    let l = c.lattice();
    let js = c.constrained_blocks();
    let mut pushed = vec![l.bottom(); c.target.universe().len()];
    let mut terms = Vec::with_capacity(xs.len() * js.len());
    for f in 0..xs.len() {
        let fv = xs.values(f);
        pushed.fill(l.bottom());
        for (x, &v) in fv.iter().enumerate() {
            let y = c.phi.apply(x);
            pushed[y] = l.join(pushed[y], v);
        }
        for &j in &js {
            let lhs = component_values(l, c.source.block(j).values(), fv);
            let rhs = component_values(l, c.target.block(c.psi[j]).values(), &pushed);
            terms.push(l.residuum(lhs, rhs));
        }
    }
    let k = js.len().max(1);
    Ok(Witness::meet_of(l, terms.len(), |i| terms[i], |i| {
        vec![xs.set(i / k).to_string(), c.source.name(js[i % k]).to_string()]
    }))
}

fn ensure_relations(phi: &SetMap, rx: &FuzzyRelation, ry: &FuzzyRelation) -> Result<()> {
    phi.ensure_between(rx.universe(), ry.universe())?;
    if !same_lattice(rx.lattice(), ry.lattice()) {
        return Err(Error::LatticeMismatch);
    }
    Ok(())
}

/// `⋀_{x,y} R_X(x,y) → R_Y(φx, φy)`.
pub fn fas_witness(phi: &SetMap, rx: &FuzzyRelation, ry: &FuzzyRelation) -> Result<Witness> {
    ensure_relations(phi, rx, ry)?;
    let l = rx.lattice();
    let u = rx.universe();
    let n = u.len();
    Ok(Witness::meet_of(
        l,
        n * n,
        |i| l.residuum(rx.get(i / n, i % n), ry.get(phi.apply(i / n), phi.apply(i % n))),
        |i| vec![u.label(i / n).to_string(), u.label(i % n).to_string()],
    ))
}

/// Greatest `l` with `φ←(R̄_Y f) ≥ R̄_X(φ←f) ⊗ l` for all `f ∈ L^Y`.
pub fn fas_operator_witness(
    phi: &SetMap,
    rx: &FuzzyRelation,
    ry: &FuzzyRelation,
    budget: Budget,
) -> Result<Witness> {
    ensure_relations(phi, rx, ry)?;
    let l = rx.lattice();
    let ys = SetSpace::new(l.clone(), ry.universe().clone(), budget)?;
    let n = rx.universe().len();
    let (mut pulled, mut upper_x, mut upper_y) = (vec![l.bottom(); n], Vec::new(), Vec::new());
    let mut terms = Vec::with_capacity(ys.len() * n);
    for f in 0..ys.len() {
        let fv = ys.values(f);
        for (x, p) in pulled.iter_mut().enumerate() {
            *p = fv[phi.apply(x)];
        }
        rx.upper_values_into(&pulled, &mut upper_x);
        ry.upper_values_into(fv, &mut upper_y);
        terms.extend((0..n).map(|x| l.residuum(upper_x[x], upper_y[phi.apply(x)])));
    }
    Ok(Witness::meet_of(l, terms.len(), |i| terms[i], |i| {
        vec![ys.set(i / n).to_string(), rx.universe().label(i % n).to_string()]
    }))
}

/// `⋀_{f ∈ L^Y} Υ_Y(f) → Υ_X(φ←f)`.
pub fn fcss_witness(phi: &SetMap, ux: &ClosureSystem, uy: &ClosureSystem) -> Result<Witness> {
    let pull = ux.space().pullback_table(phi, uy.space())?;
    let l = ux.lattice();
    Ok(Witness::meet_of(
        l,
        pull.len(),
        |g| l.residuum(uy.value(g), ux.value(pull[g])),
        |g| vec![uy.space().set(g).to_string()],
    ))
}

/// `⋀_{f, x} c_X(φ←f)(x) → c_Y(f)(φx)`.
pub fn fcs_witness(phi: &SetMap, cx: &ClosureOperator, cy: &ClosureOperator) -> Result<Witness> {
    let (xs, ys) = (cx.space(), cy.space());
    let pull = xs.pullback_table(phi, ys)?;
    let l = xs.lattice();
    let n = xs.dim();
    Ok(Witness::meet_of(
        l,
        pull.len() * n,
        |i| {
            let (g, x) = (i / n, i % n);
            l.residuum(xs.value(cx.value(pull[g]), x), ys.value(cy.value(g), phi.apply(x)))
        },
        |i| vec![ys.set(i / n).to_string(), xs.universe().label(i % n).to_string()],
    ))
}

/// The binary product of two partitions with its projections.
#[derive(Clone, Debug)]
pub struct FpsProduct {
    pub product: Arc<FuzzyPartition>,
    pub first: FpCandidate,
    pub second: FpCandidate,
}

pub fn fps_product(p: &Arc<FuzzyPartition>, q: &Arc<FuzzyPartition>) -> Result<FpsProduct> {
    let product = Arc::new(product_partition(p, q)?);
    let (nx, ny) = (p.universe().len(), q.universe().len());
    let (jx, jy) = (p.len(), q.len());
    let pu = product.universe().clone();
    let first = FpCandidate::with_graph(
        product.clone(),
        p.clone(),
        SetMap::new(pu.clone(), p.universe().clone(), (0..nx * ny).map(|i| i / ny).collect())?,
        (0..jx * jy).map(|j| j / jy).collect(),
    )?;
    let second = FpCandidate::with_graph(
        product.clone(),
        q.clone(),
        SetMap::new(pu, q.universe().clone(), (0..nx * ny).map(|i| i % ny).collect())?,
        (0..jx * jy).map(|j| j % jy).collect(),
    )?;
    Ok(FpsProduct {
        product,
        first,
        second,
    })
}

/// The tupled map `Z → X × Y` of two maps out of the same partition.
#[derive(Clone, Debug)]
pub struct Pairing {
    pub candidate: FpCandidate,
    pub witness: Witness,
    pub certified_bound: Elem,
    pub bound_holds: bool,
}

impl FpsProduct {
    /// `W = {(C, A×B) : (C, A) ∈ W1, (C, B) ∈ W2}`.
    pub fn pairing(&self, m1: &FpCandidate, m2: &FpCandidate) -> Result<Pairing> {
        let (p, q) = (self.first.target(), self.second.target());
        if *m1.target != **p || *m2.target != **q || *m1.source != *m2.source {
            return Err(Error::CompositionMismatch(
                "pairing needs maps from one partition into the product factors".into(),
            ));
        }
        let (ny, jy) = (q.universe().len(), q.len());
        let z = m1.source.clone();
        let phi = SetMap::new(
            z.universe().clone(),
            self.product.universe().clone(),
            (0..z.universe().len())
                .map(|i| m1.phi.apply(i) * ny + m2.phi.apply(i))
                .collect(),
        )?;
        let psi = (0..z.len()).map(|j| m1.psi[j] * jy + m2.psi[j]).collect();
        let pairs = m1
            .pairs
            .iter()
            .flat_map(|&(c, a)| {
                m2.pairs
                    .iter()
                    .filter(move |&&(c2, _)| c2 == c)
                    .map(move |&(_, b)| (c, a * jy + b))
            })
            .collect();
        let candidate = FpCandidate::new(z, self.product.clone(), phi, psi, pairs)?;
        let l = candidate.lattice().clone();
        let witness = fp_witness(&candidate);
        let certified_bound = l.tensor(fp_witness(m1).value, fp_witness(m2).value);
        Ok(Pairing {
            bound_holds: l.leq(certified_bound, witness.value),
            candidate,
            witness,
            certified_bound,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareViolation {
    pub element: String,
    /// `ξ′(φ(x))`.
    pub via_target: String,
    /// `ψ(ξ(x))`.
    pub via_source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexSquareReport {
    pub holds: bool,
    pub violations: Vec<SquareViolation>,
}

/// Compares `ξ′ ∘ φ` with `ψ ∘ ξ` pointwise. Observational only.
pub fn index_square_diagnostic(c: &FpCandidate) -> IndexSquareReport {
    let violations: Vec<SquareViolation> = (0..c.source.universe().len())
        .filter_map(|x| {
            let via_target = c.target.xi(c.phi.apply(x));
            let via_source = c.psi[c.source.xi(x)];
            (via_target != via_source).then(|| SquareViolation {
                element: c.source.universe().label(x).to_string(),
                via_target: c.target.name(via_target).to_string(),
                via_source: c.target.name(via_source).to_string(),
            })
        })
        .collect();
    IndexSquareReport {
        holds: violations.is_empty(),
        violations,
    }
}

/// One inequality `upper ≥ lower` between witnesses of a functor image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainLink {
    pub functor: String,
    pub lower: Elem,
    pub upper: Elem,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub fp: Elem,
    pub links: Vec<ChainLink>,
}

impl ChainReport {
    pub fn all_hold(&self) -> bool {
        self.links.iter().all(|l| l.holds)
    }

    pub fn link(&self, functor: &str) -> Option<&ChainLink> {
        self.links.iter().find(|l| l.functor == functor)
    }
}

/// Witnesses of the candidate's images along every functor out of the
/// partition category, and the six inequalities between them.
pub fn functor_chain(c: &FpCandidate, budget: Budget) -> Result<ChainReport> {
    let l = c.lattice().clone();
    let phi = &c.phi;
    let xs = Arc::new(space_for(&c.source, budget)?);
    let ys = Arc::new(space_for(&c.target, budget)?);
    let fp = fp_witness(c).value;

    let (rx, ry) = (relation_from_partition(&c.source), relation_from_partition(&c.target));
    let fas_p = fas_witness(phi, &rx, &ry)?.value;
    let (ux, uy) = (
        system_from_partition_in(xs.clone(), &c.source),
        system_from_partition_in(ys.clone(), &c.target),
    );
    let fcss_p = fcss_witness(phi, &ux, &uy)?.value;

    let fcss_r = fcss_witness(
        phi,
        &system_from_relation_in(xs.clone(), &rx),
        &system_from_relation_in(ys.clone(), &ry),
    )?
    .value;
    let fas_u = fas_witness(phi, &relation_from_system(&ux), &relation_from_system(&uy))?.value;
    let (cx, cy) = (operator_from_system(&ux), operator_from_system(&uy));
    let fcs_u = fcs_witness(phi, &cx, &cy)?.value;
    let fcss_c = fcss_witness(phi, &system_from_operator(&cx), &system_from_operator(&cy))?.value;

    let link = |functor: &str, lower: Elem, upper: Elem| ChainLink {
        functor: functor.to_string(),
        lower,
        upper,
        holds: l.leq(lower, upper),
    };
    Ok(ChainReport {
        fp,
        links: vec![
            link("f1", fp, fas_p),
            link("f3", fp, fcss_p),
            link("f2", fas_p, fcss_r),
            link("f2inv", fcss_p, fas_u),
            link("f4", fcss_p, fcs_u),
            link("f4inv", fcs_u, fcss_c),
        ],
    })
}
