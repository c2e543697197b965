//! Seeded random FP-map candidates on small carriers.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fuzzyset::{FuzzySet, SetMap, Universe};
use crate::lattice::{Elem, Lattice};
use crate::morphism::FpCandidate;
use crate::partition::{validate_partition, FuzzyPartition};

/// Upper bounds on the generated shapes.
#[derive(Clone, Copy, Debug)]
pub struct CorpusShape {
    pub max_source: usize,
    pub max_target: usize,
    /// Probability of adding each off-graph pair to `W`.
    pub extra_pair: f64,
}

impl Default for CorpusShape {
    fn default() -> Self {
        CorpusShape {
            max_source: 3,
            max_target: 2,
            extra_pair: 0.25,
        }
    }
}

/// All lattices with at most four elements offered by the builders.
pub fn small_lattices() -> Vec<Arc<Lattice>> {
    [
        Lattice::godel_chain(2),
        Lattice::godel_chain(3),
        Lattice::godel_chain(4),
        Lattice::lukasiewicz_chain(3),
        Lattice::lukasiewicz_chain(4),
        Lattice::boolean(1),
        Lattice::boolean(2),
    ]
    .into_iter()
    .map(|l| Arc::new(l.expect("builder parameters are valid")))
    .collect()
}

pub fn random_partition(
    rng: &mut impl Rng,
    lattice: &Arc<Lattice>,
    universe: Arc<Universe>,
    prefix: &str,
) -> FuzzyPartition {
    let n = universe.len();
    let k = rng.gen_range(1..=n);
    let mut xi: Vec<usize> = (0..n).map(|x| if x < k { x } else { rng.gen_range(0..k) }).collect();
    xi.shuffle(rng);
    let below_top: Vec<Elem> = lattice.elements().filter(|&a| a != lattice.top()).collect();
    let blocks = (0..k)
        .map(|j| {
            let values = (0..n)
                .map(|x| {
                    if xi[x] == j {
                        lattice.top()
                    } else {
                        *below_top.choose(rng).expect("|L| ≥ 2")
                    }
                })
                .collect();
            let set = FuzzySet::new(lattice.clone(), universe.clone(), values).expect("in range");
            (format!("{prefix}{}", j + 1), set)
        })
        .collect();
    validate_partition(lattice.clone(), universe, blocks).expect("cores are disjoint by construction")
}

pub fn random_candidate(rng: &mut impl Rng, lattices: &[Arc<Lattice>], shape: CorpusShape) -> FpCandidate {
    let l = lattices.choose(rng).expect("non-empty").clone();
    let nx = rng.gen_range(1..=shape.max_source);
    let ny = rng.gen_range(1..=shape.max_target);
    let x = Arc::new(Universe::new("X", (1..=nx).map(|i| format!("x{i}"))).expect("valid"));
    let y = Arc::new(Universe::new("Y", (1..=ny).map(|i| format!("y{i}"))).expect("valid"));
    let p = Arc::new(random_partition(rng, &l, x.clone(), "A"));
    let q = Arc::new(random_partition(rng, &l, y.clone(), "B"));
    let phi = SetMap::new(x, y, (0..nx).map(|_| rng.gen_range(0..ny)).collect()).expect("valid");
    let psi: Vec<usize> = (0..p.len()).map(|_| rng.gen_range(0..q.len())).collect();
    let mut pairs: Vec<(usize, usize)> = psi.iter().copied().enumerate().collect();
    for j in 0..p.len() {
        for k in 0..q.len() {
            if k != psi[j] && rng.gen_bool(shape.extra_pair) {
                pairs.push((j, k));
            }
        }
    }
    FpCandidate::new(p, q, phi, psi, pairs).expect("well formed")
}

/// `count` candidates from a fixed seed.
pub fn candidate_corpus(seed: u64, count: usize) -> Vec<FpCandidate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lattices = small_lattices();
    (0..count)
        .map(|_| random_candidate(&mut rng, &lattices, CorpusShape::default()))
        .collect()
}
