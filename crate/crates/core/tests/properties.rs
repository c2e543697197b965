//! Invariants checked on seeded random inputs.

use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fuzzycat_core::algebra::{
    check_coa_hom, check_dia_hom, coa_to_dia, coalgebra_from_partition, dia_to_coa, t2_on_morphism,
};
use fuzzycat_core::closure::{
    check_operator, operator_from_system, roundtrip_f4, system_from_operator, system_from_partition,
    system_from_relation,
};
use fuzzycat_core::corpus::{random_candidate, random_partition, small_lattices, CorpusShape};
use fuzzycat_core::ftransform::{ft_components, ft_field};
use fuzzycat_core::fuzzyset::{backward_image, forward_image, pointwise};
use fuzzycat_core::morphism::{
    adjoint_forms, compose_fp, fas_operator_witness, fas_witness, fp_witness, ft_forward_bound,
    ft_inequality_witness, functor_chain, index_square_diagnostic, FpCandidate,
};
use fuzzycat_core::partition::{product_partition, validate_partition, IdentityIndexedPartition};
use fuzzycat_core::relation::{relation_from_partition, relation_from_system, upper_approx};
use fuzzycat_core::{BinaryOp, Budget, FuzzySet, Lattice, SetMap, Universe};

const OPS: [BinaryOp; 4] = [BinaryOp::Meet, BinaryOp::Join, BinaryOp::Tensor, BinaryOp::Residuum];

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pick_lattice(r: &mut ChaCha8Rng) -> Arc<Lattice> {
    let ls = small_lattices();
    ls[r.gen_range(0..ls.len())].clone()
}

fn universe(name: &str, n: usize) -> Arc<Universe> {
    Arc::new(Universe::new(name, (1..=n).map(|i| format!("{}{i}", name.to_lowercase()))).unwrap())
}

fn random_set(r: &mut ChaCha8Rng, l: &Arc<Lattice>, u: &Arc<Universe>) -> FuzzySet {
    let values = (0..u.len()).map(|_| l.elements().nth(r.gen_range(0..l.size())).unwrap()).collect();
    FuzzySet::new(l.clone(), u.clone(), values).unwrap()
}

fn random_map(r: &mut ChaCha8Rng, x: &Arc<Universe>, y: &Arc<Universe>) -> SetMap {
    SetMap::new(x.clone(), y.clone(), (0..x.len()).map(|_| r.gen_range(0..y.len())).collect()).unwrap()
}

fn candidate(seed: u64) -> FpCandidate {
    random_candidate(&mut rng(seed), &small_lattices(), CorpusShape::default())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn adjointness(seed in any::<u64>()) {
        let l = pick_lattice(&mut rng(seed));
        for a in l.elements() {
            for b in l.elements() {
                for c in l.elements() {
                    prop_assert_eq!(l.leq(l.tensor(a, b), c), l.leq(a, l.residuum(b, c)));
                }
                prop_assert_eq!(l.residuum(a, b) == l.top(), l.leq(a, b));
            }
        }
    }

    #[test]
    fn images_are_monotone_and_adjoint(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = pick_lattice(&mut r);
        let (x, y) = (universe("X", r.gen_range(1..5)), universe("Y", r.gen_range(1..5)));
        let phi = random_map(&mut r, &x, &y);
        let (f, f2) = (random_set(&mut r, &l, &x), random_set(&mut r, &l, &x));
        let g = random_set(&mut r, &l, &y);
        let lo = pointwise(BinaryOp::Meet, &f, &f2).unwrap();
        prop_assert!(forward_image(&phi, &lo).unwrap().leq(&forward_image(&phi, &f).unwrap()).unwrap());
        // φ→f ≤ g iff f ≤ φ←g
        prop_assert_eq!(
            forward_image(&phi, &f).unwrap().leq(&g).unwrap(),
            f.leq(&backward_image(&phi, &g).unwrap()).unwrap()
        );
        prop_assert!(f.leq(&backward_image(&phi, &forward_image(&phi, &f).unwrap()).unwrap()).unwrap());
        if phi.is_injective() {
            prop_assert_eq!(backward_image(&phi, &forward_image(&phi, &f).unwrap()).unwrap(), f.clone());
        }
        if phi.is_surjective() {
            prop_assert_eq!(forward_image(&phi, &backward_image(&phi, &g).unwrap()).unwrap(), g.clone());
        }
    }

    #[test]
    fn backward_image_preserves_operations(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = pick_lattice(&mut r);
        let (x, y) = (universe("X", r.gen_range(1..5)), universe("Y", r.gen_range(1..5)));
        let phi = random_map(&mut r, &x, &y);
        let (g, h) = (random_set(&mut r, &l, &y), random_set(&mut r, &l, &y));
        for op in OPS {
            prop_assert_eq!(
                backward_image(&phi, &pointwise(op, &g, &h).unwrap()).unwrap(),
                pointwise(op, &backward_image(&phi, &g).unwrap(), &backward_image(&phi, &h).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn ftransform_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = pick_lattice(&mut r);
        let x = universe("X", r.gen_range(1..5));
        let p = random_partition(&mut r, &l, x.clone(), "A");
        let (f, g) = (random_set(&mut r, &l, &x), random_set(&mut r, &l, &x));
        let field = ft_field(&p, &f).unwrap();
        prop_assert!(f.leq(&field).unwrap());
        prop_assert_eq!(&field, &upper_approx(&relation_from_partition(&p), &f).unwrap());
        let join = pointwise(BinaryOp::Join, &f, &g).unwrap();
        prop_assert_eq!(
            ft_field(&p, &join).unwrap(),
            pointwise(BinaryOp::Join, &field, &ft_field(&p, &g).unwrap()).unwrap()
        );
        for a in l.elements() {
            let c = FuzzySet::constant(l.clone(), x.clone(), a).unwrap();
            let scaled = pointwise(BinaryOp::Tensor, &c, &f).unwrap();
            prop_assert_eq!(
                ft_field(&p, &scaled).unwrap(),
                pointwise(BinaryOp::Tensor, &c, &field).unwrap()
            );
        }
        let comps = ft_components(&p, &f).unwrap();
        for (j, block) in p.blocks().iter().enumerate() {
            for x0 in block.core().indices() {
                prop_assert!(l.leq(f.at(x0), comps.values[j]));
            }
        }
    }

    #[test]
    fn partition_relation_and_products(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = pick_lattice(&mut r);
        let (nx, ny) = (r.gen_range(1..4), r.gen_range(1..4));
        let p = random_partition(&mut r, &l, universe("X", nx), "A");
        let q = random_partition(&mut r, &l, universe("Y", ny), "B");
        prop_assert!(relation_from_partition(&p).is_reflexive());
        let pq = product_partition(&p, &q).unwrap();
        prop_assert_eq!(pq.len(), p.len() * q.len());
        let ny = q.universe().len();
        for (x, &j) in p.xi_table().iter().enumerate() {
            for (y, &k) in q.xi_table().iter().enumerate() {
                prop_assert_eq!(pq.xi(x * ny + y), j * q.len() + k);
            }
        }
        for j in 0..p.len() {
            for k in 0..q.len() {
                let core: Vec<usize> = pq.block(j * q.len() + k).core().indices().collect();
                let qcore: Vec<usize> = q.block(k).core().indices().collect();
                let expected: Vec<usize> = p.block(j).core().indices()
                    .flat_map(|x| qcore.iter().map(move |&y| x * ny + y))
                    .collect();
                prop_assert_eq!(core, expected);
            }
        }
    }

    #[test]
    fn closure_constructions(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = pick_lattice(&mut r);
        let x = universe("X", r.gen_range(1..4));
        let p = random_partition(&mut r, &l, x, "A");
        let budget = Budget::default();
        let sys = system_from_partition(&p, budget).unwrap();
        prop_assert!(sys.report().all_hold());
        prop_assert!(sys.same_table(&system_from_relation(&relation_from_partition(&p), budget).unwrap()));
        let c = operator_from_system(&sys);
        let report = check_operator(&c);
        prop_assert!(report.fixes_top.holds && report.inflationary.holds && report.strong.holds);
        // Idempotence and join preservation need an idempotent tensor.
        if l.elements().all(|a| l.tensor(a, a) == a) {
            prop_assert!(report.all_hold());
        }
        prop_assert!(roundtrip_f4(&sys).equal);
        prop_assert!(system_from_operator(&c).report().all_hold());
        let rel = relation_from_system(&sys);
        prop_assert!(rel.is_reflexive());
        // R_P(z, x) ≤ R_{Υ_P}(x, z); the converse direction can fail.
        let rp = relation_from_partition(&p);
        let n = p.universe().len();
        for x0 in 0..n {
            for z in 0..n {
                prop_assert!(l.leq(rp.get(z, x0), rel.get(x0, z)));
            }
        }
    }

    #[test]
    fn witness_forms_agree(seed in any::<u64>()) {
        let c = candidate(seed);
        let l = c.lattice().clone();
        let budget = Budget::default();
        let w = fp_witness(&c);
        prop_assert_eq!(w.admissible, w.value != l.bottom());
        prop_assert_eq!(ft_inequality_witness(&c, budget).unwrap().value, w.value);
        prop_assert!(l.leq(w.value, ft_forward_bound(&c, budget).unwrap().value));
        let forms = adjoint_forms(&c);
        prop_assert!(forms.agree && forms.greatest_is_witness);
        let (rx, ry) = (relation_from_partition(c.source()), relation_from_partition(c.target()));
        prop_assert_eq!(
            fas_witness(c.phi(), &rx, &ry).unwrap().value,
            fas_operator_witness(c.phi(), &rx, &ry, budget).unwrap().value
        );
    }

    #[test]
    fn functor_chain_links(seed in any::<u64>()) {
        let c = candidate(seed);
        let chain = functor_chain(&c, Budget::default()).unwrap();
        for name in ["f2", "f2inv", "f4", "f4inv"] {
            prop_assert!(chain.link(name).unwrap().holds, "{} fails", name);
        }
        if index_square_diagnostic(&c).holds && c.contains_graph() {
            prop_assert!(chain.all_hold());
        }
        if fp_witness(&c).value == c.lattice().top() {
            prop_assert!(index_square_diagnostic(&c).holds);
        }
    }

    #[test]
    fn composition_bound_with_graph(seed in any::<u64>()) {
        let mut r = rng(seed);
        let first = candidate(r.gen());
        let lattices = [first.lattice().clone()];
        let shape = CorpusShape { max_source: 2, max_target: 2, extra_pair: 0.25 };
        let tail = random_candidate(&mut r, &lattices, shape);
        let q = first.target().clone();
        let phi = random_map(&mut r, q.universe(), tail.target().universe());
        let psi: Vec<usize> = (0..q.len()).map(|_| r.gen_range(0..tail.target().len())).collect();
        let second = FpCandidate::with_graph(q, tail.target().clone(), phi, psi).unwrap();
        match compose_fp(&first, &second) {
            Ok(comp) => prop_assert!(comp.bound_holds),
            Err(_) => prop_assert!(!fp_witness(&first).admissible || !fp_witness(&second).admissible),
        }
    }

    #[test]
    fn t2_is_functorial(seed in any::<u64>()) {
        use fuzzycat_core::SetSpace;
        let mut r = rng(seed);
        let l = pick_lattice(&mut r);
        let (x, y, z) = (universe("X", r.gen_range(1..3)), universe("Y", r.gen_range(1..3)), universe("Z", r.gen_range(1..3)));
        let (phi, chi) = (random_map(&mut r, &x, &y), random_map(&mut r, &y, &z));
        let b = Budget::default();
        let (xs, ys, zs) = (
            SetSpace::new(l.clone(), x.clone(), b).unwrap(),
            SetSpace::new(l.clone(), y, b).unwrap(),
            SetSpace::new(l, z, b).unwrap(),
        );
        let (t1, t2) = (t2_on_morphism(&phi, &xs, &ys).unwrap(), t2_on_morphism(&chi, &ys, &zs).unwrap());
        let composed = t2_on_morphism(&phi.then(&chi).unwrap(), &xs, &zs).unwrap();
        prop_assert_eq!(composed, t1.iter().map(|&i| t2[i]).collect::<Vec<_>>());
        prop_assert_eq!(
            t2_on_morphism(&SetMap::identity(x), &xs, &xs).unwrap(),
            (0..xs.dim() * xs.len()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn coalgebra_identity_and_conversions(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = pick_lattice(&mut r);
        let x = universe("X", r.gen_range(1..4));
        let blocks = (0..x.len())
            .map(|i| {
                let mut b = random_set(&mut r, &l, &x).values().to_vec();
                for (k, v) in b.iter_mut().enumerate() {
                    if k == i {
                        *v = l.top();
                    } else if *v == l.top() {
                        *v = l.bottom();
                    }
                }
                (x.label(i).to_string(), FuzzySet::new(l.clone(), x.clone(), b).unwrap())
            })
            .collect();
        let p = validate_partition(l.clone(), x.clone(), blocks).unwrap();
        let c = coalgebra_from_partition(&IdentityIndexedPartition::new(p).unwrap(), Budget::default()).unwrap();
        let id = SetMap::identity(x);
        prop_assert!(check_coa_hom(&id, &c, &c).unwrap().equality);
        let d = coa_to_dia(&c);
        prop_assert!(check_dia_hom(&id, &d, &d).unwrap().equality);
        prop_assert!(dia_to_coa(&d).same_table(&c));
    }
}
