//! Small hand-checkable instances shared by tests, the CLI corpus and the
//! acceptance suite.

use std::sync::Arc;

use crate::fuzzyset::{SetMap, Universe};
use crate::lattice::{Lattice, LatticeSpec};
use crate::morphism::FpCandidate;
use crate::partition::{product_partition, FuzzyPartition, IdentityIndexedPartition};

pub fn godel3() -> Arc<Lattice> {
    Arc::new(Lattice::godel_chain(3).expect("valid"))
}

fn universe(name: &str, labels: &[&str]) -> Arc<Universe> {
    Arc::new(Universe::new(name, labels.iter().copied()).expect("valid"))
}

/// Gödel L3 on `{x1, x2, x3}`: `A1 = (1, 1/2, 0)`, `A2 = (1/2, 1, 1)`.
pub fn w3() -> Arc<FuzzyPartition> {
    let x = universe("X", &["x1", "x2", "x3"]);
    Arc::new(
        FuzzyPartition::parse(godel3(), x, &[("A1", &["1", "1/2", "0"]), ("A2", &["1/2", "1", "1"])])
            .expect("valid"),
    )
}

/// Gödel L3 on `{x1, x2}`: `A_x1 = (1, 1/2)`, `A_x2 = (1/2, 1)`.
pub fn x2() -> IdentityIndexedPartition {
    x2_over(godel3())
}

pub fn x2_over(lattice: Arc<Lattice>) -> IdentityIndexedPartition {
    let x = universe("X2", &["x1", "x2"]);
    let p = FuzzyPartition::parse(lattice, x, &[("x1", &["1", "1/2"]), ("x2", &["1/2", "1"])]).expect("valid");
    IdentityIndexedPartition::new(p).expect("identity-indexed")
}

/// The swap `x1 ↔ x2` on [`x2`].
pub fn x2_swap(p: &IdentityIndexedPartition) -> SetMap {
    SetMap::new(p.universe().clone(), p.universe().clone(), vec![1, 0]).expect("valid")
}

/// The one-point universe with its only partition.
pub fn singleton(lattice: Arc<Lattice>) -> IdentityIndexedPartition {
    let s = universe("S", &["s"]);
    IdentityIndexedPartition::new(FuzzyPartition::parse(lattice, s, &[("s", &["1"])]).expect("valid"))
        .expect("identity-indexed")
}

/// Source of [`m_half`]: `A1 = (1, 1, 0)`, `A2 = (1/2, 1/2, 1)`.
pub fn m_half_source() -> Arc<FuzzyPartition> {
    let x = universe("X", &["x1", "x2", "x3"]);
    Arc::new(
        FuzzyPartition::parse(godel3(), x, &[("A1", &["1", "1", "0"]), ("A2", &["1/2", "1/2", "1"])])
            .expect("valid"),
    )
}

/// Target of [`m_half`]: `B1 = (1, 1/2)`, `B2 = (1/2, 1)`.
pub fn m_half_target() -> Arc<FuzzyPartition> {
    m_half_target_with(["1", "1/2"])
}

fn m_half_target_with(b1: [&str; 2]) -> Arc<FuzzyPartition> {
    let y = universe("Y", &["y1", "y2"]);
    Arc::new(FuzzyPartition::parse(godel3(), y, &[("B1", &b1), ("B2", &["1/2", "1"])]).expect("valid"))
}

fn m_half_with(target: Arc<FuzzyPartition>) -> FpCandidate {
    let source = m_half_source();
    let phi = SetMap::new(source.universe().clone(), target.universe().clone(), vec![0, 1, 1]).expect("valid");
    FpCandidate::with_graph(source, target, phi, vec![0, 1]).expect("valid")
}

/// `φ = (x1↦y1, x2↦y2, x3↦y2)`, `ψ = (A1↦B1, A2↦B2)`, `W` the graph of `ψ`.
/// Its greatest witness is 1/2.
pub fn m_half() -> FpCandidate {
    m_half_with(m_half_target())
}

/// [`m_half`] with `B1 = (1, 0)`; the witness drops to 0.
pub fn m_half_broken() -> FpCandidate {
    m_half_with(m_half_target_with(["1", "0"]))
}

/// The chain `0 < 0.2 < 0.4 < 1` with `⊗ = ∧`, holding every value used by
/// the parity partitions.
pub fn parity_lattice() -> Arc<Lattice> {
    let names = ["0", "0.2", "0.4", "1"];
    let leq = (0..4).map(|i| (0..4).map(|j| i <= j).collect()).collect();
    let tensor = (0..4)
        .map(|i| (0..4).map(|j| names[i.min(j)].to_string()).collect())
        .collect();
    let spec = LatticeSpec::Table {
        elements: names.iter().map(|s| s.to_string()).collect(),
        leq,
        tensor,
        residuum: None,
    };
    Arc::new(Lattice::build(&spec).expect("valid"))
}

fn parity_partition(
    lattice: &Arc<Lattice>,
    name: &str,
    points: impl Iterator<Item = i64>,
    blocks: [&str; 2],
    odd_in_even: &str,
    even_in_odd: &str,
) -> FuzzyPartition {
    let points: Vec<i64> = points.collect();
    let u = Arc::new(Universe::new(name, points.iter().map(|n| n.to_string())).expect("valid"));
    let even: Vec<&str> = points.iter().map(|n| if n % 2 == 0 { "1" } else { odd_in_even }).collect();
    let odd: Vec<&str> = points.iter().map(|n| if n % 2 == 0 { even_in_odd } else { "1" }).collect();
    FuzzyPartition::parse(lattice.clone(), u, &[(blocks[0], &even), (blocks[1], &odd)]).expect("valid")
}

/// Parity partitions of the naturals and integers restricted to finite
/// windows, and their product.
///
/// `A1` is 1 on evens and 0.4 on odds, `A2` is 0.2 on evens and 1 on odds;
/// `B1` is 1 on evens and 0.4 on odds, `B2` is 0.4 on evens and 1 on odds.
pub fn parity_product(
    naturals: std::ops::Range<i64>,
    integers: std::ops::Range<i64>,
) -> (FuzzyPartition, FuzzyPartition, FuzzyPartition) {
    let l = parity_lattice();
    let p = parity_partition(&l, "N", naturals, ["A1", "A2"], "0.4", "0.2");
    let q = parity_partition(&l, "Z", integers, ["B1", "B2"], "0.4", "0.4");
    let pq = product_partition(&p, &q).expect("same lattice");
    (p, q, pq)
}

/// Window used for the partition-level checks: `{0..7} × {−4..3}`.
pub const PARITY_WINDOW: (std::ops::Range<i64>, std::ops::Range<i64>) = (0..8, -4..4);

/// Window small enough for exhaustive closure-system checks:
/// `{0, 1, 2} × {−1, 0}`, giving `4^6 = 4096` fuzzy sets.
pub const PARITY_CLOSURE_WINDOW: (std::ops::Range<i64>, std::ops::Range<i64>) = (0..3, -1..1);
