//! L-fuzzy partitions: normal blocks whose cores split the universe.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fuzzyset::{ensure_universe, same_lattice, FuzzySet, Universe};
use crate::lattice::Lattice;

/// A validated fuzzy partition together with its index map `ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzyPartition {
    lattice: Arc<Lattice>,
    universe: Arc<Universe>,
    names: Vec<String>,
    blocks: Vec<FuzzySet>,
    xi: Vec<usize>,
}

/// Checks the blocks and derives `ξ`.
///
/// Faults are reported in a fixed order: duplicate names, foreign blocks,
/// non-normal blocks, overlapping cores (first element in universe order),
/// uncovered elements.
pub fn validate_partition(
    lattice: Arc<Lattice>,
    universe: Arc<Universe>,
    blocks: Vec<(String, FuzzySet)>,
) -> Result<FuzzyPartition> {
    let mut seen = HashSet::new();
    for (name, _) in &blocks {
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateBlock(name.clone()));
        }
    }
    for (_, block) in &blocks {
        ensure_universe(&universe, block.universe())?;
        if !same_lattice(&lattice, block.lattice()) {
            return Err(Error::LatticeMismatch);
        }
    }
    if let Some((name, _)) = blocks.iter().find(|(_, b)| !b.is_normal()) {
        return Err(Error::BlockNotNormal(name.clone()));
    }
    let mut xi: Vec<Option<usize>> = vec![None; universe.len()];
    for x in 0..universe.len() {
        for (j, (_, block)) in blocks.iter().enumerate() {
            if block.at(x) != lattice.top() {
                continue;
            }
            if let Some(first) = xi[x] {
                return Err(Error::CoreOverlap {
                    element: universe.label(x).to_string(),
                    first: blocks[first].0.clone(),
                    second: blocks[j].0.clone(),
                });
            }
            xi[x] = Some(j);
        }
    }
    let xi = xi
        .into_iter()
        .enumerate()
        .map(|(x, j)| j.ok_or_else(|| Error::Uncovered(universe.label(x).to_string())))
        .collect::<Result<Vec<_>>>()?;
    let (names, blocks) = blocks.into_iter().unzip();
    Ok(FuzzyPartition {
        lattice,
        universe,
        names,
        blocks,
        xi,
    })
}

impl FuzzyPartition {
    /// Convenience constructor from display strings.
    pub fn parse(
        lattice: Arc<Lattice>,
        universe: Arc<Universe>,
        blocks: &[(&str, &[&str])],
    ) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|(name, values)| {
                FuzzySet::parse(lattice.clone(), universe.clone(), values)
                    .map(|set| (name.to_string(), set))
            })
            .collect::<Result<Vec<_>>>()?;
        validate_partition(lattice, universe, blocks)
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Number of blocks, `|J|`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, j: usize) -> &str {
        &self.names[j]
    }

    pub fn block(&self, j: usize) -> &FuzzySet {
        &self.blocks[j]
    }

    pub fn blocks(&self) -> &[FuzzySet] {
        &self.blocks
    }

    pub fn block_index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownBlock(name.to_string()))
    }

    /// Block index of the unique core containing `x`.
    pub fn xi(&self, x: usize) -> usize {
        self.xi[x]
    }

    pub fn xi_table(&self) -> &[usize] {
        &self.xi
    }

    /// Verifies a declared index function against the computed one.
    pub fn check_declared_xi(&self, declared: &[(String, String)]) -> Result<()> {
        let mut covered = vec![false; self.universe.len()];
        for (label, block) in declared {
            let x = self.universe.position(label)?;
            let j = self.block_index(block)?;
            if j != self.xi[x] {
                return Err(Error::IndexMismatch {
                    element: label.clone(),
                    declared: block.clone(),
                    computed: self.names[self.xi[x]].clone(),
                });
            }
            covered[x] = true;
        }
        match covered.iter().position(|c| !c) {
            Some(x) => Err(Error::MapNotTotal(format!(
                "declared index function has no entry for {}",
                self.universe.label(x)
            ))),
            None => Ok(()),
        }
    }
}

/// Blocks `(A_j × B_k)(x, y) = A_j(x) ∧ B_k(y)`, indexed `j·|J2| + k` over the
/// product universe.
pub fn product_partition(p: &FuzzyPartition, q: &FuzzyPartition) -> Result<FuzzyPartition> {
    if !same_lattice(&p.lattice, &q.lattice) {
        return Err(Error::LatticeMismatch);
    }
    let l = &p.lattice;
    let universe = Arc::new(p.universe.product(&q.universe));
    let mut blocks = Vec::with_capacity(p.len() * q.len());
    for (a_name, a) in p.names.iter().zip(&p.blocks) {
        for (b_name, b) in q.names.iter().zip(&q.blocks) {
            let values = a
                .values()
                .iter()
                .flat_map(|&u| b.values().iter().map(move |&v| l.meet(u, v)))
                .collect();
            let set = FuzzySet::from_parts(l.clone(), universe.clone(), values);
            blocks.push((format!("{a_name}×{b_name}"), set));
        }
    }
    validate_partition(l.clone(), universe, blocks)
}

/// True when every core is a singleton and each block is named after its
/// core element.
pub fn is_identity_indexed(p: &FuzzyPartition) -> bool {
    p.len() == p.universe.len()
        && (0..p.universe.len()).all(|x| p.names[p.xi[x]] == p.universe.label(x))
}

/// A partition with `J = X` and `ξ = id`; block `x` is stored at position `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityIndexedPartition(FuzzyPartition);

impl IdentityIndexedPartition {
    pub fn new(p: FuzzyPartition) -> Result<Self> {
        if !is_identity_indexed(&p) {
            let reason = (0..p.universe.len())
                .find(|&x| p.names[p.xi[x]] != p.universe.label(x))
                .map(|x| {
                    format!(
                        "{} lies in the core of {}",
                        p.universe.label(x),
                        p.names[p.xi[x]]
                    )
                })
                .unwrap_or_else(|| "block count differs from universe size".into());
            return Err(Error::NotIdentityIndexed(reason));
        }
        let order = p.xi.clone();
        let names = order.iter().map(|&j| p.names[j].clone()).collect();
        let blocks = order.iter().map(|&j| p.blocks[j].clone()).collect();
        Ok(IdentityIndexedPartition(FuzzyPartition {
            xi: (0..order.len()).collect(),
            names,
            blocks,
            ..p
        }))
    }

    pub fn partition(&self) -> &FuzzyPartition {
        &self.0
    }
}

impl std::ops::Deref for IdentityIndexedPartition {
    type Target = FuzzyPartition;

    fn deref(&self) -> &FuzzyPartition {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn godel3() -> Arc<Lattice> {
        Arc::new(Lattice::godel_chain(3).unwrap())
    }

    fn x3() -> Arc<Universe> {
        Arc::new(Universe::new("X", ["x1", "x2", "x3"]).unwrap())
    }

    #[test]
    fn w3_index_map() {
        let p = FuzzyPartition::parse(
            godel3(),
            x3(),
            &[("A1", &["1", "1/2", "0"]), ("A2", &["1/2", "1", "1"])],
        )
        .unwrap();
        let xi: Vec<&str> = (0..3).map(|x| p.name(p.xi(x))).collect();
        assert_eq!(xi, ["A1", "A2", "A2"]);
        assert!(!is_identity_indexed(&p));
    }

    #[test]
    fn overlap_names_the_element() {
        let err = FuzzyPartition::parse(
            godel3(),
            x3(),
            &[("A1", &["1", "1", "0"]), ("A2", &["1/2", "1", "1"])],
        )
        .unwrap_err();
        assert!(err.to_string().starts_with("core overlap at x2"), "{err}");
    }

    #[test]
    fn non_normal_block() {
        let err = FuzzyPartition::parse(godel3(), x3(), &[("A1", &["1/2", "1/2", "1/2"])])
            .unwrap_err();
        assert!(err.to_string().contains("block not normal"));
    }

    #[test]
    fn uncovered_element() {
        let err = FuzzyPartition::parse(godel3(), x3(), &[("A1", &["1", "1/2", "1"])]).unwrap_err();
        assert_eq!(err, Error::Uncovered("x2".into()));
    }

    #[test]
    fn declared_xi_is_verified() {
        let p = FuzzyPartition::parse(
            godel3(),
            x3(),
            &[("A1", &["1", "1/2", "0"]), ("A2", &["1/2", "1", "1"])],
        )
        .unwrap();
        let good: Vec<(String, String)> = [("x1", "A1"), ("x2", "A2"), ("x3", "A2")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        p.check_declared_xi(&good).unwrap();
        let mut bad = good.clone();
        bad[2].1 = "A1".into();
        assert!(matches!(
            p.check_declared_xi(&bad),
            Err(Error::IndexMismatch { .. })
        ));
    }

    #[test]
    fn product_with_w3() {
        let l = godel3();
        let p = FuzzyPartition::parse(
            l.clone(),
            x3(),
            &[("A1", &["1", "1/2", "0"]), ("A2", &["1/2", "1", "1"])],
        )
        .unwrap();
        let y = Arc::new(Universe::new("Y", ["y1", "y2"]).unwrap());
        let q = FuzzyPartition::parse(l, y, &[("B1", &["1", "1/2"]), ("B2", &["1/2", "1"])]).unwrap();
        let pq = product_partition(&p, &q).unwrap();
        assert_eq!(pq.len(), 4);
        assert_eq!(pq.name(0), "A1×B1");
        assert_eq!(pq.block(0).core().labels(), vec!["(x1,y1)"]);
    }

    #[test]
    fn product_with_singleton_keeps_shape() {
        let l = godel3();
        let p = FuzzyPartition::parse(
            l.clone(),
            x3(),
            &[("A1", &["1", "1/2", "0"]), ("A2", &["1/2", "1", "1"])],
        )
        .unwrap();
        let s = Arc::new(Universe::new("S", ["s"]).unwrap());
        let one = FuzzyPartition::parse(l, s, &[("S", &["1"])]).unwrap();
        let pq = product_partition(&p, &one).unwrap();
        for j in 0..p.len() {
            assert_eq!(pq.block(j).values(), p.block(j).values());
        }
        assert_eq!(pq.xi_table(), p.xi_table());
    }

    #[test]
    fn identity_indexed_reorders_blocks() {
        let l = godel3();
        let x = Arc::new(Universe::new("X2", ["x1", "x2"]).unwrap());
        let p = FuzzyPartition::parse(l, x, &[("x2", &["1/2", "1"]), ("x1", &["1", "1/2"])]).unwrap();
        assert!(is_identity_indexed(&p));
        let q = IdentityIndexedPartition::new(p).unwrap();
        assert_eq!(q.names(), ["x1", "x2"]);
        assert_eq!(q.xi_table(), [0, 1]);
    }
}
