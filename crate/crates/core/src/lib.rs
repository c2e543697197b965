//! Finite residuated-lattice workbench: fuzzy partitions, upper F-transforms,
//! closure systems and operators, graded morphism witnesses, and the
//! coalgebra/dialgebra views built on them.

pub mod algebra;
pub mod closure;
pub mod corpus;
pub mod error;
pub mod fixtures;
pub mod ftransform;
pub mod fuzzyset;
pub mod lattice;
pub mod morphism;
pub mod partition;
pub mod relation;
pub mod space;

pub use error::{Error, Result};
pub use fuzzyset::{FuzzySet, SetMap, Universe};
pub use lattice::{BinaryOp, Elem, Lattice, LatticeSpec};
pub use partition::FuzzyPartition;
pub use space::{Budget, SetSpace};
