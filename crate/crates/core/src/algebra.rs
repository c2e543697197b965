//! T1-coalgebras `X → L^{L^X}` and (T2, T3)-dialgebras `X × L^X → L`
//! induced by upper F-transforms on identity-indexed partitions.
//!
//! Both structures are stored as the same `|X| × |L^X|` table, row `x`
//! holding the values at every enumerated fuzzy set, so the conversions
//! between them are re-labellings.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ftransform::field_values_into;
use crate::fuzzyset::SetMap;
use crate::lattice::Elem;
use crate::partition::IdentityIndexedPartition;
use crate::space::{Budget, SetSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraProvenance {
    FromPartition,
    Converted,
    Explicit,
}

/// A T1-coalgebra: `alpha(x)` is a map `L^X → L`.
#[derive(Clone, Debug)]
pub struct Coalgebra {
    space: Arc<SetSpace>,
    table: Vec<Elem>,
    provenance: AlgebraProvenance,
}

/// A (T2, T3)-dialgebra: `beta(x, f) ∈ L`.
#[derive(Clone, Debug)]
pub struct Dialgebra {
    space: Arc<SetSpace>,
    table: Vec<Elem>,
    provenance: AlgebraProvenance,
}

fn check_table(space: &SetSpace, table: &[Elem]) -> Result<()> {
    if table.len() != space.dim() * space.len() {
        return Err(Error::Precondition(format!(
            "structure table has {} entries, expected |X|·|L^X| = {}",
            table.len(),
            space.dim() * space.len()
        )));
    }
    for &v in table {
        space.lattice().check(v)?;
    }
    Ok(())
}

macro_rules! structure_accessors {
    ($ty:ident) => {
        impl $ty {
            pub fn explicit(space: Arc<SetSpace>, table: Vec<Elem>) -> Result<Self> {
                check_table(&space, &table)?;
                Ok($ty {
                    space,
                    table,
                    provenance: AlgebraProvenance::Explicit,
                })
            }

            pub fn space(&self) -> &Arc<SetSpace> {
                &self.space
            }

            pub fn provenance(&self) -> AlgebraProvenance {
                self.provenance
            }

            /// Row-major `x · |L^X| + f`.
            pub fn table(&self) -> &[Elem] {
                &self.table
            }

            pub fn row(&self, x: usize) -> &[Elem] {
                let n = self.space.len();
                &self.table[x * n..(x + 1) * n]
            }

            pub fn same_table(&self, other: &$ty) -> bool {
                self.space.universe().same_as(other.space.universe()) && self.table == other.table
            }
        }
    };
}

structure_accessors!(Coalgebra);
structure_accessors!(Dialgebra);

impl Coalgebra {
    #[inline]
    pub fn alpha(&self, x: usize, f: usize) -> Elem {
        self.table[x * self.space.len() + f]
    }
}

impl Dialgebra {
    #[inline]
    pub fn beta(&self, x: usize, f: usize) -> Elem {
        self.table[x * self.space.len() + f]
    }
}

fn field_table(p: &IdentityIndexedPartition, space: &SetSpace) -> Vec<Elem> {
    let n = space.len();
    let mut table = vec![space.lattice().bottom(); space.dim() * n];
    let mut field = Vec::new();
    for f in 0..n {
        field_values_into(p, space, f, &mut field);
        for (x, &v) in field.iter().enumerate() {
            table[x * n + f] = v;
        }
    }
    table
}

fn space_for(p: &IdentityIndexedPartition, budget: Budget) -> Result<Arc<SetSpace>> {
    Ok(Arc::new(SetSpace::new(p.lattice().clone(), p.universe().clone(), budget)?))
}

/// `alpha(x)(f) = F↑_x[f]`.
pub fn coalgebra_from_partition(p: &IdentityIndexedPartition, budget: Budget) -> Result<Coalgebra> {
    let space = space_for(p, budget)?;
    let table = field_table(p, &space);
    Ok(Coalgebra {
        space,
        table,
        provenance: AlgebraProvenance::FromPartition,
    })
}

/// `beta(x, f) = F↑_x[f]`.
pub fn dialgebra_from_partition(p: &IdentityIndexedPartition, budget: Budget) -> Result<Dialgebra> {
    let space = space_for(p, budget)?;
    let table = field_table(p, &space);
    Ok(Dialgebra {
        space,
        table,
        provenance: AlgebraProvenance::FromPartition,
    })
}

pub fn coa_to_dia(c: &Coalgebra) -> Dialgebra {
    Dialgebra {
        space: c.space.clone(),
        table: c.table.clone(),
        provenance: AlgebraProvenance::Converted,
    }
}

pub fn dia_to_coa(d: &Dialgebra) -> Coalgebra {
    Coalgebra {
        space: d.space.clone(),
        table: d.table.clone(),
        provenance: AlgebraProvenance::Converted,
    }
}

/// `T1(φ)(λ)(g) = λ(φ←g)`, with `λ` indexed over `L^X`.
pub fn t1_on_morphism(phi: &SetMap, xs: &SetSpace, ys: &SetSpace, lambda: &[Elem]) -> Result<Vec<Elem>> {
    if lambda.len() != xs.len() {
        return Err(Error::Precondition("λ must have one value per element of L^X".into()));
    }
    Ok(xs.pullback_table(phi, ys)?.into_iter().map(|f| lambda[f]).collect())
}

/// `T2(φ)(x, f) = (φ(x), φ→f)`, as `y · |L^Y| + g` indexed by `x · |L^X| + f`.
pub fn t2_on_morphism(phi: &SetMap, xs: &SetSpace, ys: &SetSpace) -> Result<Vec<usize>> {
    let push = xs.pushforward_table(phi, ys)?;
    Ok((0..xs.dim())
        .flat_map(|x| push.iter().map(move |&g| phi.apply(x) * ys.len() + g))
        .collect())
}

/// `T3(φ) = id_L`.
pub fn t3_on_morphism(_phi: &SetMap, a: Elem) -> Elem {
    a
}

/// Result of a homomorphism check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomVerdict {
    pub holds: bool,
    /// Both sides agree everywhere.
    pub equality: bool,
    /// `[x, f, lhs, rhs]` at the first failing position.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Vec<String>>,
}

fn verdict(
    space: &SetSpace,
    count: usize,
    sides: impl Fn(usize) -> (Elem, Elem),
    locate: impl Fn(usize) -> (String, String),
) -> HomVerdict {
    let l = space.lattice();
    let mut equality = true;
    let mut violation = None;
    for i in 0..count {
        let (lhs, rhs) = sides(i);
        equality &= lhs == rhs;
        if violation.is_none() && !l.leq(lhs, rhs) {
            let (x, f) = locate(i);
            violation = Some(vec![x, f, l.display(lhs).to_string(), l.display(rhs).to_string()]);
        }
    }
    HomVerdict {
        holds: violation.is_none(),
        equality,
        violation,
    }
}

/// `alpha_X(x)(φ←g) ≤ alpha_Y(φx)(g)` for all `x` and `g ∈ L^Y`.
pub fn check_coa_hom(phi: &SetMap, cx: &Coalgebra, cy: &Coalgebra) -> Result<HomVerdict> {
    let (xs, ys) = (&cx.space, &cy.space);
    let pull = xs.pullback_table(phi, ys)?;
    let m = ys.len();
    Ok(verdict(
        xs,
        xs.dim() * m,
        |i| {
            let (x, g) = (i / m, i % m);
            (cx.alpha(x, pull[g]), cy.alpha(phi.apply(x), g))
        },
        |i| (xs.universe().label(i / m).to_string(), ys.set(i % m).to_string()),
    ))
}

/// `beta_X(x, f) ≤ beta_Y(φx, φ→f)` for all `x` and `f ∈ L^X`.
pub fn check_dia_hom(phi: &SetMap, dx: &Dialgebra, dy: &Dialgebra) -> Result<HomVerdict> {
    let (xs, ys) = (&dx.space, &dy.space);
    let push = xs.pushforward_table(phi, ys)?;
    let n = xs.len();
    Ok(verdict(
        xs,
        xs.dim() * n,
        |i| {
            let (x, f) = (i / n, i % n);
            (dx.beta(x, f), dy.beta(phi.apply(x), push[f]))
        },
        |i| (xs.universe().label(i / n).to_string(), xs.set(i % n).to_string()),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    CoaToDia,
    DiaToCoa,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransferStatus {
    /// The map is a morphism on both sides.
    Transferred,
    /// The proviso holds and the source check passes, but the target fails.
    Failed,
    /// The source check fails, so there is nothing to transfer.
    SourceNotMorphism,
    ProvisoUnmet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferVerdict {
    pub direction: Direction,
    pub status: TransferStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<HomVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<HomVerdict>,
}

/// Re-checks a homomorphism after converting both structures.
///
/// The pair is given as dialgebras for `DiaToCoa` and as coalgebras for
/// `CoaToDia`; the conversions are exact so either shape can be supplied
/// through [`coa_to_dia`] / [`dia_to_coa`]. The proviso is decided on `φ`
/// itself: injective for coalgebra to dialgebra, surjective for the reverse.
pub fn morphism_transfer_check(
    phi: &SetMap,
    source: &Coalgebra,
    target: &Coalgebra,
    direction: Direction,
) -> Result<TransferVerdict> {
    let proviso = match direction {
        Direction::CoaToDia => phi.is_injective(),
        Direction::DiaToCoa => phi.is_surjective(),
    };
    if !proviso {
        return Ok(TransferVerdict {
            direction,
            status: TransferStatus::ProvisoUnmet,
            source: None,
            target: None,
        });
    }
    let (before, after) = match direction {
        Direction::CoaToDia => (
            check_coa_hom(phi, source, target)?,
            check_dia_hom(phi, &coa_to_dia(source), &coa_to_dia(target))?,
        ),
        Direction::DiaToCoa => {
            let (dx, dy) = (coa_to_dia(source), coa_to_dia(target));
            (
                check_dia_hom(phi, &dx, &dy)?,
                check_coa_hom(phi, &dia_to_coa(&dx), &dia_to_coa(&dy))?,
            )
        }
    };
    let status = match (before.holds, after.holds) {
        (false, _) => TransferStatus::SourceNotMorphism,
        (true, true) => TransferStatus::Transferred,
        (true, false) => TransferStatus::Failed,
    };
    Ok(TransferVerdict {
        direction,
        status,
        source: Some(before),
        target: Some(after),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjunctionVerdict {
    /// `φ: C → T′(D)` in the coalgebra category.
    pub precondition: HomVerdict,
    /// `ρ = φ: T(C) → D` in the dialgebra category.
    pub rho: HomVerdict,
    /// `T′(ρ) ∘ Ψ = φ` with `Ψ` the identity.
    pub triangle_commutes: bool,
    /// `ρ` is forced to equal `φ` as a map of carriers.
    pub unique: bool,
    pub holds: bool,
}

pub fn adjunction_check(c: &Coalgebra, d: &Dialgebra, phi: &SetMap) -> Result<AdjunctionVerdict> {
    let precondition = check_coa_hom(phi, c, &dia_to_coa(d))?;
    if !precondition.holds {
        return Err(Error::Precondition(format!(
            "φ is not a coalgebra homomorphism into T′(D); first violation {:?}",
            precondition.violation.as_deref().unwrap_or_default()
        )));
    }
    let rho_map = phi.clone();
    let rho = check_dia_hom(&rho_map, &coa_to_dia(c), d)?;
    // T′ is the identity on maps and Ψ is the identity on carriers.
    let triangle_commutes = rho_map.then(&SetMap::identity(phi.codomain().clone()))? == *phi;
    Ok(AdjunctionVerdict {
        holds: rho.holds && triangle_commutes,
        precondition,
        rho,
        triangle_commutes,
        unique: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzyset::Universe;
    use crate::lattice::Lattice;
    use crate::partition::FuzzyPartition;

    fn x2() -> IdentityIndexedPartition {
        let l = Arc::new(Lattice::godel_chain(3).unwrap());
        let x = Arc::new(Universe::new("X2", ["x1", "x2"]).unwrap());
        let p = FuzzyPartition::parse(l, x, &[("x1", &["1", "1/2"]), ("x2", &["1/2", "1"])]).unwrap();
        IdentityIndexedPartition::new(p).unwrap()
    }

    #[test]
    fn x2_structure_values() {
        let p = x2();
        let c = coalgebra_from_partition(&p, Budget::default()).unwrap();
        let space = c.space().clone();
        let l = space.lattice();
        let f = space.index_of_values(&[l.parse("0").unwrap(), l.parse("1").unwrap()]);
        assert_eq!(l.display(c.alpha(0, f)), "1/2");
        let top = space.top_index();
        assert!((0..2).all(|x| c.alpha(x, top) == l.top() && c.alpha(x, 0) == l.bottom()));
        let d = dialgebra_from_partition(&p, Budget::default()).unwrap();
        assert!(coa_to_dia(&c).same_table(&d));
        assert!(dia_to_coa(&coa_to_dia(&c)).same_table(&c));
    }

    #[test]
    fn swap_is_an_automorphism() {
        let p = x2();
        let c = coalgebra_from_partition(&p, Budget::default()).unwrap();
        let swap = SetMap::new(p.universe().clone(), p.universe().clone(), vec![1, 0]).unwrap();
        let v = check_coa_hom(&swap, &c, &c).unwrap();
        assert!(v.holds && v.equality);
        for dir in [Direction::CoaToDia, Direction::DiaToCoa] {
            let t = morphism_transfer_check(&swap, &c, &c, dir).unwrap();
            assert_eq!(t.status, TransferStatus::Transferred);
        }
        let adj = adjunction_check(&c, &coa_to_dia(&c), &swap).unwrap();
        assert!(adj.holds);
    }

    #[test]
    fn collapse_to_a_point() {
        let p = x2();
        let l = p.lattice().clone();
        let s = Arc::new(Universe::new("S", ["s"]).unwrap());
        let one = IdentityIndexedPartition::new(FuzzyPartition::parse(l, s.clone(), &[("s", &["1"])]).unwrap()).unwrap();
        let cx = coalgebra_from_partition(&p, Budget::default()).unwrap();
        let cy = coalgebra_from_partition(&one, Budget::default()).unwrap();
        let collapse = SetMap::new(p.universe().clone(), s, vec![0, 0]).unwrap();
        assert!(check_dia_hom(&collapse, &coa_to_dia(&cx), &coa_to_dia(&cy)).unwrap().holds);
        let t = morphism_transfer_check(&collapse, &cx, &cy, Direction::CoaToDia).unwrap();
        assert_eq!(t.status, TransferStatus::ProvisoUnmet);
    }

    #[test]
    fn functor_laws_on_t1_and_t2() {
        let p = x2();
        let xs = SetSpace::new(p.lattice().clone(), p.universe().clone(), Budget::default()).unwrap();
        let id = SetMap::identity(p.universe().clone());
        let lambda: Vec<Elem> = (0..xs.len()).map(|i| xs.value(i, 0)).collect();
        assert_eq!(t1_on_morphism(&id, &xs, &xs, &lambda).unwrap(), lambda);
        let t2 = t2_on_morphism(&id, &xs, &xs).unwrap();
        assert!(t2.iter().enumerate().all(|(i, &j)| i == j));
    }

    #[test]
    fn adjunction_precondition() {
        let p = x2();
        let c = coalgebra_from_partition(&p, Budget::default()).unwrap();
        let mut table = c.table().to_vec();
        table.iter_mut().for_each(|v| *v = p.lattice().bottom());
        let zero = Dialgebra::explicit(c.space().clone(), table).unwrap();
        let id = SetMap::identity(p.universe().clone());
        assert!(matches!(adjunction_check(&c, &zero, &id), Err(Error::Precondition(_))));
    }
}
