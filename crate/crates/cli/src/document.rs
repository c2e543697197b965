//! Instance documents: one JSON file naming every object a command may use.

use std::path::Path;
use std::sync::Arc;

use fuzzycat_core::closure::ClosureSystem;
use fuzzycat_core::morphism::FpCandidate;
use fuzzycat_core::partition::validate_partition;
use fuzzycat_core::relation::FuzzyRelation;
use fuzzycat_core::{Budget, FuzzyPartition, FuzzySet, Lattice, LatticeSpec, SetMap, SetSpace, Universe};
use indexmap::IndexMap;
use serde::Deserialize;

use crate::error::CliError;

/// Label → display string.
pub type ValueMap = IndexMap<String, String>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub lattice: LatticeSpec,
    #[serde(default)]
    pub universes: IndexMap<String, Vec<String>>,
    #[serde(default)]
    pub fuzzy_sets: IndexMap<String, SetDoc>,
    #[serde(default)]
    pub partitions: IndexMap<String, PartitionDoc>,
    #[serde(default)]
    pub relations: IndexMap<String, RelationDoc>,
    #[serde(default)]
    pub maps: IndexMap<String, MapDoc>,
    #[serde(default)]
    pub index_maps: IndexMap<String, IndexMapDoc>,
    #[serde(default)]
    pub pairings: IndexMap<String, Vec<(String, String)>>,
    #[serde(default)]
    pub candidates: IndexMap<String, CandidateDoc>,
    #[serde(default)]
    pub closure_systems: IndexMap<String, SystemDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetDoc {
    pub universe: String,
    pub values: ValueMap,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionDoc {
    pub universe: String,
    pub blocks: IndexMap<String, ValueMap>,
    /// Optional declared index function, element → block.
    #[serde(default)]
    pub xi: Option<IndexMap<String, String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub universe: String,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub from: String,
    pub to: String,
    pub image: IndexMap<String, String>,
}

/// Block-name to block-name, between two named partitions.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndexMapDoc {
    pub from: String,
    pub to: String,
    pub image: IndexMap<String, String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidateDoc {
    pub map: String,
    pub index_map: String,
    /// Defaults to the graph of the index map.
    #[serde(default)]
    pub pairing: Option<String>,
}

/// Explicit closure system: every fuzzy set on the universe with its degree.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDoc {
    pub universe: String,
    pub entries: Vec<(Vec<String>, String)>,
}

/// A fully resolved document.
pub struct Instance {
    pub lattice: Arc<Lattice>,
    pub universes: IndexMap<String, Arc<Universe>>,
    pub sets: IndexMap<String, FuzzySet>,
    pub partitions: IndexMap<String, Arc<FuzzyPartition>>,
    pub relations: IndexMap<String, FuzzyRelation>,
    pub maps: IndexMap<String, SetMap>,
    pub candidates: IndexMap<String, FpCandidate>,
    pub systems: IndexMap<String, ClosureSystem>,
}

fn lookup<'a, T>(table: &'a IndexMap<String, T>, kind: &str, name: &str) -> Result<&'a T, CliError> {
    table
        .get(name)
        .ok_or_else(|| CliError::Input(format!("unknown {kind} {name:?}")))
}

impl Instance {
    pub fn load(path: &Path, budget: Budget) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        let doc: Document = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("malformed document {}: {e}", path.display())))?;
        Self::resolve(doc, budget)
    }

    pub fn resolve(doc: Document, budget: Budget) -> Result<Self, CliError> {
        let lattice = Arc::new(Lattice::build(&doc.lattice)?);
        let mut universes = IndexMap::new();
        for (name, labels) in doc.universes {
            let u = Universe::new(name.clone(), labels)?;
            universes.insert(name, Arc::new(u));
        }

        let set_on = |universe: &Arc<Universe>, values: &ValueMap, what: &str| -> Result<FuzzySet, CliError> {
            let mut out = vec![None; universe.len()];
            for (label, v) in values {
                let x = universe.position(label)?;
                out[x] = Some(lattice.parse(v)?);
            }
            let out = out
                .into_iter()
                .enumerate()
                .map(|(x, v)| {
                    v.ok_or_else(|| CliError::Input(format!("{what} has no value for {}", universe.label(x))))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(FuzzySet::new(lattice.clone(), universe.clone(), out)?)
        };

        let mut sets = IndexMap::new();
        for (name, s) in &doc.fuzzy_sets {
            let u = lookup(&universes, "universe", &s.universe)?;
            sets.insert(name.clone(), set_on(u, &s.values, &format!("fuzzy set {name}"))?);
        }

        let mut partitions = IndexMap::new();
        for (name, p) in &doc.partitions {
            let u = lookup(&universes, "universe", &p.universe)?;
            let blocks = p
                .blocks
                .iter()
                .map(|(b, values)| Ok((b.clone(), set_on(u, values, &format!("block {b} of {name}"))?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            let part = validate_partition(lattice.clone(), u.clone(), blocks)
                .map_err(|e| CliError::Input(format!("partition {name}: {e}")))?;
            if let Some(xi) = &p.xi {
                let declared: Vec<(String, String)> = xi.iter().map(|(a, b)| (a.clone(), b.clone())).collect();
                part.check_declared_xi(&declared)
                    .map_err(|e| CliError::Input(format!("partition {name}: {e}")))?;
            }
            partitions.insert(name.clone(), Arc::new(part));
        }

        let mut relations = IndexMap::new();
        for (name, r) in &doc.relations {
            let u = lookup(&universes, "universe", &r.universe)?;
            let rows: Vec<Vec<&str>> = r.rows.iter().map(|row| row.iter().map(String::as_str).collect()).collect();
            let rows: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
            let rel = FuzzyRelation::parse(lattice.clone(), u.clone(), &rows)
                .map_err(|e| CliError::Input(format!("relation {name}: {e}")))?;
            relations.insert(name.clone(), rel);
        }

        let mut maps = IndexMap::new();
        for (name, m) in &doc.maps {
            let from = lookup(&universes, "universe", &m.from)?;
            let to = lookup(&universes, "universe", &m.to)?;
            let pairs: Vec<(&str, &str)> = m.image.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let map = SetMap::from_pairs(from.clone(), to.clone(), &pairs)
                .map_err(|e| CliError::Input(format!("map {name}: {e}")))?;
            maps.insert(name.clone(), map);
        }

        let mut candidates = IndexMap::new();
        for (name, c) in &doc.candidates {
            let phi = lookup(&maps, "map", &c.map)?.clone();
            let im = lookup(&doc.index_maps, "index map", &c.index_map)?;
            let source = lookup(&partitions, "partition", &im.from)?.clone();
            let target = lookup(&partitions, "partition", &im.to)?.clone();
            let block = |p: &FuzzyPartition, b: &str| {
                p.block_index(b).map_err(|e| CliError::Input(format!("candidate {name}: {e}")))
            };
            let mut psi = vec![None; source.len()];
            for (a, b) in &im.image {
                psi[block(&source, a)?] = Some(block(&target, b)?);
            }
            let psi = psi
                .into_iter()
                .enumerate()
                .map(|(j, k)| {
                    k.ok_or_else(|| {
                        CliError::Input(format!("index map {} has no image for {}", c.index_map, source.name(j)))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let pairs = match &c.pairing {
                None => psi.iter().copied().enumerate().collect(),
                Some(w) => lookup(&doc.pairings, "pairing", w)?
                    .iter()
                    .map(|(a, b)| Ok((block(&source, a)?, block(&target, b)?)))
                    .collect::<Result<Vec<_>, CliError>>()?,
            };
            let cand = FpCandidate::new(source, target, phi, psi, pairs)
                .map_err(|e| CliError::Input(format!("candidate {name}: {e}")))?;
            candidates.insert(name.clone(), cand);
        }

        let mut systems = IndexMap::new();
        for (name, s) in &doc.closure_systems {
            let u = lookup(&universes, "universe", &s.universe)?;
            let space = Arc::new(SetSpace::new(lattice.clone(), u.clone(), budget)?);
            let mut table = vec![None; space.len()];
            for (values, degree) in &s.entries {
                let refs: Vec<&str> = values.iter().map(String::as_str).collect();
                let f = FuzzySet::parse(lattice.clone(), u.clone(), &refs)
                    .map_err(|e| CliError::Input(format!("closure system {name}: {e}")))?;
                let idx = space.index_of(&f)?;
                if table[idx].replace(lattice.parse(degree)?).is_some() {
                    return Err(CliError::Input(format!("closure system {name} lists {f} twice")));
                }
            }
            let table = table
                .into_iter()
                .enumerate()
                .map(|(i, v)| {
                    v.ok_or_else(|| CliError::Input(format!("closure system {name} has no entry for {}", space.set(i))))
                })
                .collect::<Result<Vec<_>, _>>()?;
            systems.insert(name.clone(), ClosureSystem::explicit(space, table)?);
        }

        Ok(Instance {
            lattice,
            universes,
            sets,
            partitions,
            relations,
            maps,
            candidates,
            systems,
        })
    }

    pub fn set(&self, name: &str) -> Result<&FuzzySet, CliError> {
        lookup(&self.sets, "fuzzy set", name)
    }

    pub fn partition(&self, name: &str) -> Result<&Arc<FuzzyPartition>, CliError> {
        lookup(&self.partitions, "partition", name)
    }

    pub fn relation(&self, name: &str) -> Result<&FuzzyRelation, CliError> {
        lookup(&self.relations, "relation", name)
    }

    pub fn map(&self, name: &str) -> Result<&SetMap, CliError> {
        lookup(&self.maps, "map", name)
    }

    pub fn candidate(&self, name: &str) -> Result<&FpCandidate, CliError> {
        lookup(&self.candidates, "candidate", name)
    }

    pub fn system(&self, name: &str) -> Result<&ClosureSystem, CliError> {
        lookup(&self.systems, "closure system", name)
    }
}
