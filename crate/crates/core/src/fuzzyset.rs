//! L-fuzzy sets over named finite universes.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{BinaryOp, Elem, Lattice};

/// A named finite set of labelled points.
#[derive(Clone, Debug)]
pub struct Universe {
    name: String,
    labels: Vec<String>,
    positions: HashMap<String, usize>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.labels == other.labels
    }
}

impl Eq for Universe {}

impl Universe {
    /// Builds a non-empty universe with unique labels.
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let name = name.into();
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidUniverse {
                name,
                reason: "no elements (use Universe::empty for the empty universe)".into(),
            });
        }
        Self::with_labels(name, labels)
    }

    pub fn empty(name: impl Into<String>) -> Self {
        Universe {
            name: name.into(),
            labels: Vec::new(),
            positions: HashMap::new(),
        }
    }

    fn with_labels(name: String, labels: Vec<String>) -> Result<Self> {
        let mut positions = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if positions.insert(label.clone(), i).is_some() {
                return Err(Error::InvalidUniverse {
                    name,
                    reason: format!("duplicate label {label:?}"),
                });
            }
        }
        Ok(Universe {
            name,
            labels,
            positions,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.positions
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel {
                universe: self.name.clone(),
                label: label.to_string(),
            })
    }

    pub fn same_as(&self, other: &Universe) -> bool {
        std::ptr::eq(self, other) || self == other
    }

    /// Cartesian product with labels `(x,y)`, first component most significant.
    pub fn product(&self, other: &Universe) -> Universe {
        let labels = self
            .labels
            .iter()
            .flat_map(|x| other.labels.iter().map(move |y| format!("({x},{y})")))
            .collect();
        Universe::with_labels(format!("{}×{}", self.name, other.name), labels)
            .expect("pairs of unique labels are unique")
    }
}

pub(crate) fn same_lattice(a: &Arc<Lattice>, b: &Arc<Lattice>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn ensure_universe(expected: &Universe, found: &Universe) -> Result<()> {
    if expected.same_as(found) {
        Ok(())
    } else {
        Err(Error::UniverseMismatch {
            expected: expected.name().to_string(),
            found: found.name().to_string(),
        })
    }
}

/// A total map from a universe into a lattice carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzySet {
    lattice: Arc<Lattice>,
    universe: Arc<Universe>,
    values: Vec<Elem>,
}

impl FuzzySet {
    pub fn new(lattice: Arc<Lattice>, universe: Arc<Universe>, values: Vec<Elem>) -> Result<Self> {
        if values.len() != universe.len() {
            return Err(Error::Arity {
                universe: universe.name().to_string(),
                expected: universe.len(),
                found: values.len(),
            });
        }
        for &v in &values {
            lattice.check(v)?;
        }
        Ok(FuzzySet {
            lattice,
            universe,
            values,
        })
    }

    pub(crate) fn from_parts(lattice: Arc<Lattice>, universe: Arc<Universe>, values: Vec<Elem>) -> Self {
        debug_assert_eq!(values.len(), universe.len());
        FuzzySet {
            lattice,
            universe,
            values,
        }
    }

    /// Parses display strings, one per universe element in order.
    pub fn parse(lattice: Arc<Lattice>, universe: Arc<Universe>, values: &[&str]) -> Result<Self> {
        let values = values
            .iter()
            .map(|s| lattice.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(lattice, universe, values)
    }

    pub fn constant(lattice: Arc<Lattice>, universe: Arc<Universe>, a: Elem) -> Result<Self> {
        lattice.check(a)?;
        let values = vec![a; universe.len()];
        Ok(FuzzySet {
            lattice,
            universe,
            values,
        })
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn get(&self, label: &str) -> Result<Elem> {
        Ok(self.values[self.universe.position(label)?])
    }

    pub fn at(&self, i: usize) -> Elem {
        self.values[i]
    }

    /// Display strings of the values, in universe order.
    pub fn display_values(&self) -> Vec<String> {
        self.values
            .iter()
            .map(|&v| self.lattice.display(v).to_string())
            .collect()
    }

    pub fn core(&self) -> CrispSubset {
        CrispSubset {
            universe: self.universe.clone(),
            members: self.values.iter().map(|&v| v == self.lattice.top()).collect(),
        }
    }

    pub fn is_normal(&self) -> bool {
        self.values.contains(&self.lattice.top())
    }

    /// Pointwise order `f ≤ g`.
    pub fn leq(&self, other: &FuzzySet) -> Result<bool> {
        self.compatible(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| self.lattice.leq(a, b)))
    }

    fn compatible(&self, other: &FuzzySet) -> Result<()> {
        ensure_universe(&self.universe, &other.universe)?;
        if !same_lattice(&self.lattice, &other.lattice) {
            return Err(Error::LatticeMismatch);
        }
        Ok(())
    }
}

impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.display_values().join(","))
    }
}

/// Elementwise application of a lattice operation.
pub fn pointwise(op: BinaryOp, f: &FuzzySet, g: &FuzzySet) -> Result<FuzzySet> {
    f.compatible(g)?;
    let t = f.lattice.tables();
    let values = f
        .values
        .iter()
        .zip(&g.values)
        .map(|(&a, &b)| t.apply(op, a, b))
        .collect();
    Ok(FuzzySet::from_parts(f.lattice.clone(), f.universe.clone(), values))
}

/// A crisp subset of a universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrispSubset {
    universe: Arc<Universe>,
    members: Vec<bool>,
}

impl CrispSubset {
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members[i]
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.indices().map(|i| self.universe.label(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A total function between two universes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetMap {
    domain: Arc<Universe>,
    codomain: Arc<Universe>,
    image: Vec<usize>,
}

impl SetMap {
    pub fn new(domain: Arc<Universe>, codomain: Arc<Universe>, image: Vec<usize>) -> Result<Self> {
        if image.len() != domain.len() {
            return Err(Error::MapNotTotal(format!(
                "{} images for {} domain points",
                image.len(),
                domain.len()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&y| y >= codomain.len()) {
            return Err(Error::MapNotTotal(format!(
                "image index {bad} outside {}",
                codomain.name()
            )));
        }
        Ok(SetMap {
            domain,
            codomain,
            image,
        })
    }

    /// Builds from `(x, y)` label pairs; every domain point must appear once.
    pub fn from_pairs(
        domain: Arc<Universe>,
        codomain: Arc<Universe>,
        pairs: &[(&str, &str)],
    ) -> Result<Self> {
        let mut image = vec![None; domain.len()];
        for &(x, y) in pairs {
            let xi = domain.position(x)?;
            let yi = codomain.position(y)?;
            if image[xi].replace(yi).is_some() {
                return Err(Error::MapNotTotal(format!("{x} mapped twice")));
            }
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(i, y)| y.ok_or_else(|| Error::MapNotTotal(format!("no image for {}", domain.label(i)))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, image)
    }

    pub fn identity(universe: Arc<Universe>) -> Self {
        let image = (0..universe.len()).collect();
        SetMap {
            domain: universe.clone(),
            codomain: universe,
            image,
        }
    }

    pub fn domain(&self) -> &Arc<Universe> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Universe> {
        &self.codomain
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SetMap) -> Result<SetMap> {
        if !self.codomain.same_as(&other.domain) {
            return Err(Error::CompositionMismatch(format!(
                "codomain {} is not domain {}",
                self.codomain.name(),
                other.domain.name()
            )));
        }
        Ok(SetMap {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            image: self.image.iter().map(|&y| other.image[y]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.len()];
        self.image.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.len()];
        for &y in &self.image {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub(crate) fn ensure_between(&self, domain: &Universe, codomain: &Universe) -> Result<()> {
        ensure_universe(domain, &self.domain)?;
        ensure_universe(codomain, &self.codomain)
    }

    /// `(x, φ(x))` label pairs.
    pub fn label_pairs(&self) -> Vec<(String, String)> {
        self.image
            .iter()
            .enumerate()
            .map(|(x, &y)| (self.domain.label(x).to_string(), self.codomain.label(y).to_string()))
            .collect()
    }
}

/// Zadeh forward image: the join over each fiber, bottom on empty fibers.
pub fn forward_image(map: &SetMap, f: &FuzzySet) -> Result<FuzzySet> {
    ensure_universe(&map.domain, &f.universe)?;
    let l = &f.lattice;
    let mut values = vec![l.bottom(); map.codomain.len()];
    for (x, &v) in f.values.iter().enumerate() {
        let y = map.image[x];
        values[y] = l.join(values[y], v);
    }
    Ok(FuzzySet::from_parts(l.clone(), map.codomain.clone(), values))
}

/// Backward image `g ∘ φ`.
pub fn backward_image(map: &SetMap, g: &FuzzySet) -> Result<FuzzySet> {
    ensure_universe(&map.codomain, &g.universe)?;
    let values = map.image.iter().map(|&y| g.values[y]).collect();
    Ok(FuzzySet::from_parts(g.lattice.clone(), map.domain.clone(), values))
}
