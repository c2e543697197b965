//! Command bodies. Each returns a verdict and the `result` part of the report.

use std::sync::Arc;

use fuzzycat_core::algebra::{
    adjunction_check, check_coa_hom, check_dia_hom, coa_to_dia, coalgebra_from_partition, dia_to_coa,
    dialgebra_from_partition, morphism_transfer_check, Direction, TransferStatus,
};
use fuzzycat_core::closure::{
    check_operator, check_system, operator_from_system, roundtrip_f2 as rt_f2, roundtrip_f4 as rt_f4,
    system_from_operator, system_from_partition, system_from_relation, ClosureOperator, ClosureSystem,
    Provenance,
};
use fuzzycat_core::ftransform::{ft_components, ft_field, ft_law_suite};
use fuzzycat_core::lattice::{law_suite, zero_divisor_scan};
use fuzzycat_core::morphism::{
    adjoint_forms, compose_fp, fas_operator_witness, fas_witness, fcs_witness, fcss_witness, fp_witness,
    fps_product, ft_forward_bound, ft_inequality_witness, functor_chain, index_square_diagnostic, FpCandidate,
    Witness,
};
use fuzzycat_core::partition::IdentityIndexedPartition;
use fuzzycat_core::relation::{relation_from_partition, relation_from_system, FuzzyRelation};
use fuzzycat_core::{Budget, Elem, FuzzyPartition, Lattice, SetMap};
use serde_json::{json, Map, Value};

use crate::document::Instance;
use crate::error::CliError;
use crate::{AlgebraMapArgs, DirectionArg, FunctorName, MorphismArgs, SourceArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Fail,
    ProvisoUnmet,
}

impl Verdict {
    fn from_bool(holds: bool) -> Self {
        if holds {
            Verdict::Ok
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Ok => "ok",
            Verdict::Fail => "fail",
            Verdict::ProvisoUnmet => "proviso-unmet",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Ok => 0,
            Verdict::Fail | Verdict::ProvisoUnmet => 1,
        }
    }
}

type Outcome = Result<(Verdict, Value), CliError>;

fn show(l: &Lattice, a: Elem) -> Value {
    json!(l.display(a))
}

fn witness(l: &Lattice, w: &Witness) -> Value {
    let mut m = Map::new();
    m.insert("value".into(), show(l, w.value));
    m.insert("admissible".into(), json!(w.admissible));
    if let Some(at) = &w.attained_at {
        m.insert("attained_at".into(), json!(at));
    }
    Value::Object(m)
}

fn to_value(v: impl serde::Serialize) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

enum Source<'a> {
    Partition(&'a Arc<FuzzyPartition>),
    Relation(&'a FuzzyRelation),
    System(&'a ClosureSystem),
}

fn source<'a>(inst: &'a Instance, s: &SourceArgs) -> Result<Source<'a>, CliError> {
    match (&s.partition, &s.relation, &s.system) {
        (Some(p), None, None) => Ok(Source::Partition(inst.partition(p)?)),
        (None, Some(r), None) => Ok(Source::Relation(inst.relation(r)?)),
        (None, None, Some(u)) => Ok(Source::System(inst.system(u)?)),
        _ => Err(CliError::Input(
            "exactly one of --partition, --relation, --system is required".into(),
        )),
    }
}

/// Looks a structure up by name among partitions, relations and systems.
fn named<'a>(inst: &'a Instance, name: &str) -> Result<Source<'a>, CliError> {
    if let Some(p) = inst.partitions.get(name) {
        Ok(Source::Partition(p))
    } else if let Some(r) = inst.relations.get(name) {
        Ok(Source::Relation(r))
    } else if let Some(u) = inst.systems.get(name) {
        Ok(Source::System(u))
    } else {
        Err(CliError::Input(format!("no partition, relation or closure system named {name:?}")))
    }
}

fn system_of(src: &Source, budget: Budget) -> Result<ClosureSystem, CliError> {
    Ok(match src {
        Source::Partition(p) => system_from_partition(p, budget)?,
        Source::Relation(r) => system_from_relation(r, budget)?,
        Source::System(u) => (*u).clone(),
    })
}

fn relation_of(src: &Source) -> FuzzyRelation {
    match src {
        Source::Partition(p) => relation_from_partition(p),
        Source::Relation(r) => (*r).clone(),
        Source::System(u) => relation_from_system(u),
    }
}

fn provenance(p: Provenance) -> Value {
    json!(match p {
        Provenance::FromPartition => "from_partition",
        Provenance::FromRelation => "from_relation",
        Provenance::FromOperator => "from_operator",
        Provenance::Explicit => "explicit",
    })
}

fn system_value(sys: &ClosureSystem) -> Value {
    let space = sys.space();
    let l = sys.lattice();
    let entries: Map<String, Value> = (0..space.len())
        .map(|i| (space.set(i).to_string(), show(l, sys.value(i))))
        .collect();
    json!({
        "universe": sys.universe().name(),
        "provenance": provenance(sys.provenance()),
        "entries": entries,
        "report": to_value(sys.report()),
    })
}

fn operator_value(c: &ClosureOperator) -> Value {
    let space = c.space();
    let entries: Map<String, Value> = (0..space.len())
        .map(|i| (space.set(i).to_string(), json!(space.set(c.value(i)).to_string())))
        .collect();
    json!({
        "universe": space.universe().name(),
        "entries": entries,
        "report": to_value(check_operator(c)),
    })
}

fn relation_value(r: &FuzzyRelation) -> Value {
    json!({
        "universe": r.universe().name(),
        "labels": r.universe().labels(),
        "rows": r.display_rows(),
        "reflexive": r.is_reflexive(),
    })
}

pub fn validate(inst: &Instance) -> Outcome {
    let l = &inst.lattice;
    let scan = zero_divisor_scan(l);
    let partitions: Map<String, Value> = inst
        .partitions
        .iter()
        .map(|(name, p)| {
            let xi: Map<String, Value> = (0..p.universe().len())
                .map(|x| (p.universe().label(x).to_string(), json!(p.name(p.xi(x)))))
                .collect();
            (
                name.clone(),
                json!({"universe": p.universe().name(), "blocks": p.names(), "xi": xi}),
            )
        })
        .collect();
    let maps: Map<String, Value> = inst
        .maps
        .iter()
        .map(|(name, m)| {
            (
                name.clone(),
                json!({
                    "from": m.domain().name(),
                    "to": m.codomain().name(),
                    "injective": m.is_injective(),
                    "surjective": m.is_surjective(),
                }),
            )
        })
        .collect();
    let candidates: Map<String, Value> = inst
        .candidates
        .iter()
        .map(|(name, c)| {
            (
                name.clone(),
                json!({
                    "pairs": c.pairs().len(),
                    "contains_graph": c.contains_graph(),
                    "unconstrained_pairs": c.unconstrained_pairs(),
                }),
            )
        })
        .collect();
    let systems: Map<String, Value> = inst
        .systems
        .iter()
        .map(|(name, u)| (name.clone(), json!({"closure_system": u.report().is_closure_system()})))
        .collect();
    let result = json!({
        "lattice": {
            "size": l.size(),
            "elements": l.elements().map(|a| l.display(a).to_string()).collect::<Vec<_>>(),
            "zero_divisors": scan.zero_divisors,
        },
        "universes": inst.universes.iter().map(|(n, u)| (n.clone(), json!(u.len()))).collect::<Map<_, _>>(),
        "fuzzy_sets": inst.sets.keys().collect::<Vec<_>>(),
        "partitions": partitions,
        "relations": inst.relations.iter().map(|(n, r)| (n.clone(), json!({"reflexive": r.is_reflexive()}))).collect::<Map<_, _>>(),
        "maps": maps,
        "candidates": candidates,
        "closure_systems": systems,
    });
    Ok((Verdict::Ok, result))
}

pub fn ft(inst: &Instance, partition: &str, set: &str) -> Outcome {
    let p = inst.partition(partition)?;
    let f = inst.set(set)?;
    let comps = ft_components(p, f)?;
    let field = ft_field(p, f)?;
    Ok((
        Verdict::Ok,
        json!({
            "components": to_value(comps.display(p.lattice())),
            "field": field.display_values(),
        }),
    ))
}

pub fn closure(inst: &Instance, s: &SourceArgs, budget: Budget, via_operator: bool) -> Outcome {
    let src = source(inst, s)?;
    let sys = system_of(&src, budget)?;
    let sys = if via_operator {
        system_from_operator(&operator_from_system(&sys))
    } else {
        sys
    };
    Ok((Verdict::Ok, system_value(&sys)))
}

pub fn operator(inst: &Instance, s: &SourceArgs, budget: Budget) -> Outcome {
    let sys = system_of(&source(inst, s)?, budget)?;
    Ok((Verdict::Ok, operator_value(&operator_from_system(&sys))))
}

pub fn relation_from_system_cmd(inst: &Instance, s: &SourceArgs, budget: Budget) -> Outcome {
    let sys = system_of(&source(inst, s)?, budget)?;
    Ok((Verdict::Ok, relation_value(&relation_from_system(&sys))))
}

pub fn relation_from_partition_cmd(inst: &Instance, partition: &str) -> Outcome {
    Ok((Verdict::Ok, relation_value(&relation_from_partition(inst.partition(partition)?))))
}

pub fn check_fp(inst: &Instance, cand: &str, budget: Budget) -> Outcome {
    let c = inst.candidate(cand)?;
    let l = c.lattice();
    let w = fp_witness(c);
    let forms = adjoint_forms(c);
    let ft = ft_inequality_witness(c, budget)?;
    let fwd = ft_forward_bound(c, budget)?;
    Ok((
        Verdict::from_bool(w.admissible),
        json!({
            "witness": witness(l, &w),
            "ft_inequality": witness(l, &ft),
            "ft_forward_bound": witness(l, &fwd),
            "adjoint_forms": to_value(forms),
            "unconstrained_pairs": c.unconstrained_pairs(),
        }),
    ))
}

/// The map and two structures of a morphism check.
fn morphism_parts<'a>(inst: &'a Instance, m: &MorphismArgs) -> Result<(SetMap, Source<'a>, Source<'a>), CliError> {
    match (&m.cand, &m.map, &m.from, &m.to) {
        (Some(c), None, None, None) => {
            let c = inst.candidate(c)?;
            let (p, q) = (
                inst.partitions.values().find(|p| Arc::ptr_eq(p, c.source())),
                inst.partitions.values().find(|p| Arc::ptr_eq(p, c.target())),
            );
            Ok((
                c.phi().clone(),
                Source::Partition(p.expect("candidate partitions come from the document")),
                Source::Partition(q.expect("candidate partitions come from the document")),
            ))
        }
        (None, Some(map), Some(from), Some(to)) => Ok((inst.map(map)?.clone(), named(inst, from)?, named(inst, to)?)),
        _ => Err(CliError::Input("give either --cand or all of --map, --from, --to".into())),
    }
}

pub fn check_fas(inst: &Instance, m: &MorphismArgs, budget: Budget) -> Outcome {
    let (phi, a, b) = morphism_parts(inst, m)?;
    let (rx, ry) = (relation_of(&a), relation_of(&b));
    let l = rx.lattice();
    let w = fas_witness(&phi, &rx, &ry)?;
    let op = fas_operator_witness(&phi, &rx, &ry, budget)?;
    Ok((
        Verdict::from_bool(w.admissible),
        json!({"witness": witness(l, &w), "operator_form": witness(l, &op)}),
    ))
}

pub fn check_fcss(inst: &Instance, m: &MorphismArgs, budget: Budget) -> Outcome {
    let (phi, a, b) = morphism_parts(inst, m)?;
    let (ux, uy) = (system_of(&a, budget)?, system_of(&b, budget)?);
    let w = fcss_witness(&phi, &ux, &uy)?;
    Ok((Verdict::from_bool(w.admissible), json!({"witness": witness(ux.lattice(), &w)})))
}

pub fn check_fcs(inst: &Instance, m: &MorphismArgs, budget: Budget) -> Outcome {
    let (phi, a, b) = morphism_parts(inst, m)?;
    let (ux, uy) = (system_of(&a, budget)?, system_of(&b, budget)?);
    let (cx, cy) = (operator_from_system(&ux), operator_from_system(&uy));
    let w = fcs_witness(&phi, &cx, &cy)?;
    Ok((Verdict::from_bool(w.admissible), json!({"witness": witness(ux.lattice(), &w)})))
}

fn identity_indexed(inst: &Instance, name: &str) -> Result<IdentityIndexedPartition, CliError> {
    Ok(IdentityIndexedPartition::new((**inst.partition(name)?).clone())?)
}

pub fn check_hom(inst: &Instance, a: &AlgebraMapArgs, budget: Budget, dialgebra: bool) -> Outcome {
    let phi = inst.map(&a.map)?;
    let (p, q) = (identity_indexed(inst, &a.from)?, identity_indexed(inst, &a.to)?);
    let (cx, cy) = (coalgebra_from_partition(&p, budget)?, coalgebra_from_partition(&q, budget)?);
    let verdict = if dialgebra {
        check_dia_hom(phi, &coa_to_dia(&cx), &coa_to_dia(&cy))?
    } else {
        check_coa_hom(phi, &cx, &cy)?
    };
    Ok((Verdict::from_bool(verdict.holds), to_value(verdict)))
}

pub fn check_transfer(inst: &Instance, a: &AlgebraMapArgs, direction: DirectionArg, budget: Budget) -> Outcome {
    let phi = inst.map(&a.map)?;
    let (p, q) = (identity_indexed(inst, &a.from)?, identity_indexed(inst, &a.to)?);
    let (cx, cy) = (coalgebra_from_partition(&p, budget)?, coalgebra_from_partition(&q, budget)?);
    let direction = match direction {
        DirectionArg::CoaToDia => Direction::CoaToDia,
        DirectionArg::DiaToCoa => Direction::DiaToCoa,
    };
    let v = morphism_transfer_check(phi, &cx, &cy, direction)?;
    let verdict = match v.status {
        TransferStatus::Transferred => Verdict::Ok,
        TransferStatus::ProvisoUnmet | TransferStatus::SourceNotMorphism => Verdict::ProvisoUnmet,
        TransferStatus::Failed => Verdict::Fail,
    };
    Ok((verdict, to_value(v)))
}

pub fn check_chain(inst: &Instance, cand: &str, budget: Budget) -> Outcome {
    let c = inst.candidate(cand)?;
    let l = c.lattice();
    let chain = functor_chain(c, budget)?;
    let links: Vec<Value> = chain
        .links
        .iter()
        .map(|k| json!({"functor": k.functor, "lower": show(l, k.lower), "upper": show(l, k.upper), "holds": k.holds}))
        .collect();
    Ok((
        Verdict::from_bool(chain.all_hold()),
        json!({
            "fp": show(l, chain.fp),
            "links": links,
            "index_square": to_value(index_square_diagnostic(c)),
        }),
    ))
}

pub fn check_compose(inst: &Instance, first: &str, then: &str) -> Outcome {
    let comp = compose_fp(inst.candidate(first)?, inst.candidate(then)?)?;
    let l = comp.candidate.lattice().clone();
    let mut m = Map::new();
    m.insert("witness".into(), witness(&l, &comp.witness));
    m.insert("certified_bound".into(), show(&l, comp.certified_bound));
    m.insert("bound_holds".into(), json!(comp.bound_holds));
    m.insert("contains_graph".into(), json!(comp.candidate.contains_graph()));
    if let Some(w) = &comp.warning {
        m.insert("warning".into(), json!(w));
    }
    Ok((Verdict::from_bool(comp.witness.admissible), Value::Object(m)))
}

pub fn functor(inst: &Instance, which: FunctorName, s: &SourceArgs, budget: Budget) -> Outcome {
    let src = source(inst, s)?;
    let need = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(CliError::Input(format!("this functor takes {what}")))
        }
    };
    let value = match which {
        FunctorName::F1 => {
            let Source::Partition(p) = src else {
                return Err(CliError::Input("this functor takes --partition".into()));
            };
            relation_value(&relation_from_partition(p))
        }
        FunctorName::F3 => {
            need(matches!(src, Source::Partition(_)), "--partition")?;
            system_value(&system_of(&src, budget)?)
        }
        FunctorName::F2 => {
            need(matches!(src, Source::Relation(_)), "--relation")?;
            system_value(&system_of(&src, budget)?)
        }
        FunctorName::F2inv => {
            need(matches!(src, Source::System(_)), "--system")?;
            relation_value(&relation_of(&src))
        }
        FunctorName::F4 => {
            need(matches!(src, Source::System(_)), "--system")?;
            operator_value(&operator_from_system(&system_of(&src, budget)?))
        }
        FunctorName::F4inv => {
            // Operators are not serialized; the input operator is c_Υ of the given system.
            need(matches!(src, Source::System(_)), "--system")?;
            system_value(&system_from_operator(&operator_from_system(&system_of(&src, budget)?)))
        }
    };
    Ok((Verdict::Ok, value))
}

pub fn roundtrip_f2(inst: &Instance, s: &SourceArgs, budget: Budget) -> Outcome {
    let src = source(inst, s)?;
    if matches!(src, Source::System(_)) {
        return Err(CliError::Input("roundtrip f2 takes --relation or --partition".into()));
    }
    let report = rt_f2(&relation_of(&src), budget)?;
    Ok((Verdict::Ok, to_value(report)))
}

pub fn roundtrip_f4(inst: &Instance, s: &SourceArgs, budget: Budget) -> Outcome {
    let sys = system_of(&source(inst, s)?, budget)?;
    Ok((Verdict::Ok, to_value(rt_f4(&sys))))
}

pub fn roundtrip_coa_dia(inst: &Instance, partition: &str, budget: Budget) -> Outcome {
    let p = identity_indexed(inst, partition)?;
    let c = coalgebra_from_partition(&p, budget)?;
    let d = dialgebra_from_partition(&p, budget)?;
    let coa_dia_coa = dia_to_coa(&coa_to_dia(&c)).same_table(&c);
    let dia_coa_dia = coa_to_dia(&dia_to_coa(&d)).same_table(&d);
    let triangle = coa_to_dia(&c).same_table(&d);
    Ok((
        Verdict::from_bool(coa_dia_coa && dia_coa_dia && triangle),
        json!({"coa_dia_coa": coa_dia_coa, "dia_coa_dia": dia_coa_dia, "triangle": triangle}),
    ))
}

pub fn product(inst: &Instance, left: &str, right: &str, pair: Option<(&str, &str)>) -> Outcome {
    let (p, q) = (inst.partition(left)?, inst.partition(right)?);
    let prod = fps_product(p, q)?;
    let l = p.lattice();
    let blocks: Map<String, Value> = (0..prod.product.len())
        .map(|j| {
            let core = prod.product.block(j).core();
            (prod.product.name(j).to_string(), json!(core.labels()))
        })
        .collect();
    let mut m = Map::new();
    m.insert("universe".into(), json!(prod.product.universe().name()));
    m.insert("size".into(), json!(prod.product.universe().len()));
    m.insert("cores".into(), Value::Object(blocks));
    m.insert("first_projection".into(), witness(l, &fp_witness(&prod.first)));
    m.insert("second_projection".into(), witness(l, &fp_witness(&prod.second)));
    let mut verdict = Verdict::Ok;
    if let Some((a, b)) = pair {
        let pairing = prod.pairing(inst.candidate(a)?, inst.candidate(b)?)?;
        verdict = Verdict::from_bool(pairing.witness.admissible);
        m.insert(
            "pairing".into(),
            json!({
                "witness": witness(l, &pairing.witness),
                "certified_bound": show(l, pairing.certified_bound),
                "bound_holds": pairing.bound_holds,
            }),
        );
    }
    Ok((verdict, Value::Object(m)))
}

pub fn index_square(inst: &Instance, cand: &str) -> Outcome {
    let c: &FpCandidate = inst.candidate(cand)?;
    // Observational: a violation is a finding, not a failure.
    Ok((Verdict::Ok, to_value(index_square_diagnostic(c))))
}

pub fn laws_lattice(inst: &Instance, budget: Budget) -> Outcome {
    let l = &inst.lattice;
    let scan = zero_divisor_scan(l);
    let laws = law_suite(l.tables(), budget)?;
    let holds = scan.axioms.all_hold() && laws.all_hold();
    Ok((
        Verdict::from_bool(holds),
        json!({
            "axioms": to_value(&scan.axioms),
            "zero_divisors": scan.zero_divisors,
            "laws": to_value(&laws),
        }),
    ))
}

pub fn laws_ftransform(inst: &Instance, partition: &str, budget: Budget) -> Outcome {
    let report = ft_law_suite(inst.partition(partition)?, budget)?;
    Ok((Verdict::from_bool(report.all_hold()), to_value(report)))
}

pub fn laws_closure(inst: &Instance, s: &SourceArgs, budget: Budget) -> Outcome {
    let sys = system_of(&source(inst, s)?, budget)?;
    let system = check_system(&sys);
    let op = check_operator(&operator_from_system(&sys));
    Ok((
        Verdict::from_bool(system.all_hold() && op.all_hold()),
        json!({"system": to_value(system), "operator": to_value(op)}),
    ))
}

pub fn algebra_table(inst: &Instance, partition: &str, budget: Budget, dialgebra: bool) -> Outcome {
    let p = identity_indexed(inst, partition)?;
    let c = coalgebra_from_partition(&p, budget)?;
    let space = c.space().clone();
    let l = space.lattice();
    let rows: Map<String, Value> = (0..space.dim())
        .map(|x| {
            let row: Map<String, Value> = (0..space.len())
                .map(|f| (space.set(f).to_string(), show(l, c.alpha(x, f))))
                .collect();
            (space.universe().label(x).to_string(), Value::Object(row))
        })
        .collect();
    let key = if dialgebra { "beta" } else { "alpha" };
    Ok((Verdict::Ok, json!({ "universe": space.universe().name(), key: rows })))
}

pub fn adjunction(inst: &Instance, a: &AlgebraMapArgs, budget: Budget) -> Outcome {
    let phi = inst.map(&a.map)?;
    let (p, q) = (identity_indexed(inst, &a.from)?, identity_indexed(inst, &a.to)?);
    let c = coalgebra_from_partition(&p, budget)?;
    let d = dialgebra_from_partition(&q, budget)?;
    match adjunction_check(&c, &d, phi) {
        Ok(v) => Ok((Verdict::from_bool(v.holds), to_value(v))),
        Err(fuzzycat_core::Error::Precondition(msg)) => {
            Ok((Verdict::ProvisoUnmet, json!({ "precondition": msg })))
        }
        Err(e) => Err(e.into()),
    }
}
