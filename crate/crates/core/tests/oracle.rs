//! Brute-force oracles for the hand-checkable fixtures.
//!
//! Everything here is recomputed from scratch on the three-element Gödel
//! chain encoded as halves (0, 1, 2 for 0, 1/2, 1), with its own loops and no
//! library tables, then compared with the library.

use std::sync::Arc;

use fuzzycat_core::closure::{operator_from_system, system_from_operator, system_from_partition};
use fuzzycat_core::fixtures;
use fuzzycat_core::ftransform::ft_field;
use fuzzycat_core::fuzzyset::{backward_image, forward_image};
use fuzzycat_core::lattice::{law_suite, zero_divisor_scan};
use fuzzycat_core::morphism::{fp_witness, ft_inequality_witness};
use fuzzycat_core::relation::relation_from_system;
use fuzzycat_core::{Budget, FuzzySet, Lattice, SetMap};

type H = u8;

fn min(a: H, b: H) -> H {
    a.min(b)
}

fn imp(a: H, b: H) -> H {
    if a <= b {
        2
    } else {
        b
    }
}

fn name(a: H) -> &'static str {
    ["0", "1/2", "1"][a as usize]
}

const A1: [H; 3] = [2, 1, 0];
const A2: [H; 3] = [1, 2, 2];
const XI: [usize; 3] = [0, 1, 1];

fn all_sets() -> Vec<[H; 3]> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn component(block: [H; 3], f: [H; 3]) -> H {
    (0..3).map(|x| min(block[x], f[x])).max().unwrap()
}

fn field(f: [H; 3]) -> [H; 3] {
    let comps = [component(A1, f), component(A2, f)];
    [comps[XI[0]], comps[XI[1]], comps[XI[2]]]
}

fn upsilon(f: [H; 3]) -> H {
    let fld = field(f);
    (0..3).map(|x| imp(fld[x], f[x])).min().unwrap()
}

fn closure(f: [H; 3]) -> [H; 3] {
    let mut out = [2; 3];
    for g in all_sets() {
        let incl = (0..3).map(|z| imp(f[z], g[z])).min().unwrap();
        let premise = min(upsilon(g), incl);
        for x in 0..3 {
            out[x] = out[x].min(imp(premise, g[x]));
        }
    }
    out
}

fn relation(x: usize, z: usize) -> H {
    all_sets()
        .into_iter()
        .map(|f| imp(upsilon(f), imp(f[x], f[z])))
        .min()
        .unwrap()
}

fn lib_set(values: [H; 3]) -> FuzzySet {
    let p = fixtures::w3();
    let names: Vec<&str> = values.iter().map(|&v| name(v)).collect();
    FuzzySet::parse(p.lattice().clone(), p.universe().clone(), &names).unwrap()
}

#[test]
fn oracle_pins() {
    assert_eq!(upsilon([0, 1, 2]), 0);
    assert_eq!(upsilon([2, 1, 1]), 2);
    assert_eq!(closure([2, 0, 0]), [2, 1, 1]);
    assert_eq!(relation(0, 1), 1);
    assert_eq!(field([0, 1, 2]), [1, 2, 2]);
}

#[test]
fn w3_system_matches_oracle_everywhere() {
    let p = fixtures::w3();
    let sys = system_from_partition(&p, Budget::default()).unwrap();
    let l = p.lattice();
    for f in all_sets() {
        assert_eq!(l.display(sys.get(&lib_set(f)).unwrap()), name(upsilon(f)), "Υ at {f:?}");
        assert_eq!(
            ft_field(&p, &lib_set(f)).unwrap().display_values(),
            field(f).map(name),
            "field at {f:?}"
        );
    }
}

#[test]
fn w3_operator_matches_oracle_everywhere() {
    let p = fixtures::w3();
    let sys = system_from_partition(&p, Budget::default()).unwrap();
    let c = operator_from_system(&sys);
    let back = system_from_operator(&c);
    let l = p.lattice();
    for f in all_sets() {
        let expected = closure(f);
        assert_eq!(c.apply(&lib_set(f)).unwrap().display_values(), expected.map(name));
        let round = (0..3).map(|x| imp(expected[x], f[x])).min().unwrap();
        assert_eq!(l.display(back.get(&lib_set(f)).unwrap()), name(round));
    }
}

#[test]
fn w3_relation_matches_oracle() {
    let p = fixtures::w3();
    let r = relation_from_system(&system_from_partition(&p, Budget::default()).unwrap());
    for x in 0..3 {
        for z in 0..3 {
            assert_eq!(p.lattice().display(r.get(x, z)), name(relation(x, z)), "R({x},{z})");
        }
    }
}

#[test]
fn m_half_witness_matches_oracle() {
    // Source blocks, target blocks, φ and ψ of the fixture, in halves.
    let a = [[2, 2, 0], [1, 1, 2]];
    let b = [[2, 1], [1, 2]];
    let phi = [0, 1, 1];
    let expected = (0..2)
        .flat_map(|j| (0..3).map(move |x| imp(a[j][x], b[j][phi[x]])))
        .min()
        .unwrap();
    assert_eq!(expected, 1);
    let c = fixtures::m_half();
    assert_eq!(c.lattice().display(fp_witness(&c).value), name(expected));

    // F-transform form over all nine sets on Y.
    let mut ft = 2;
    for g0 in 0..3 {
        for g1 in 0..3 {
            let g = [g0, g1];
            for j in 0..2 {
                let pulled = (0..3).map(|x| min(a[j][x], g[phi[x]])).max().unwrap();
                let direct = (0..2).map(|y| min(b[j][y], g[y])).max().unwrap();
                ft = ft.min(imp(pulled, direct));
            }
        }
    }
    assert_eq!(ft, expected);
    assert_eq!(c.lattice().display(ft_inequality_witness(&c, Budget::default()).unwrap().value), name(ft));
}

#[test]
fn images_match_hand_values() {
    let p = fixtures::w3();
    let y = Arc::new(fuzzycat_core::Universe::new("Y", ["y1", "y2"]).unwrap());
    let phi = SetMap::new(p.universe().clone(), y.clone(), vec![0, 1, 1]).unwrap();
    let f = lib_set([0, 1, 2]);
    assert_eq!(forward_image(&phi, &f).unwrap().display_values(), ["0", "1"]);
    let g = FuzzySet::parse(p.lattice().clone(), y, &["1/2", "1"]).unwrap();
    assert_eq!(backward_image(&phi, &g).unwrap().display_values(), ["1/2", "1", "1"]);
}

/// Łukasiewicz five-chain in quarters: `a ⊗ b = max(0, a + b − 4)`.
#[test]
fn lukasiewicz_zero_divisors_match_arithmetic() {
    let l = Lattice::lukasiewicz_chain(5).unwrap();
    let quarter = ["0", "1/4", "1/2", "3/4", "1"];
    let mut expected = Vec::new();
    for a in 1..5usize {
        for b in a..5 {
            if a + b <= 4 {
                expected.push((quarter[a].to_string(), quarter[b].to_string()));
            }
        }
    }
    let found = zero_divisor_scan(&l).zero_divisors;
    assert_eq!(found, expected);
    assert!(found.contains(&("1/4".into(), "1/2".into())));
    let r = |a: &str, b: &str| l.display(l.residuum(l.parse(a).unwrap(), l.parse(b).unwrap())).to_string();
    assert_eq!(r("3/4", "1/2"), "3/4");
    for a in 0..5usize {
        for b in 0..5usize {
            assert_eq!(r(quarter[a], quarter[b]), quarter[(4 - a + b).min(4)]);
        }
    }
}

#[test]
fn builder_law_suites() {
    for l in [Lattice::godel_chain(4).unwrap(), Lattice::lukasiewicz_chain(5).unwrap()] {
        assert!(zero_divisor_scan(&l).axioms.all_hold());
        assert!(law_suite(l.tables(), Budget::default()).unwrap().all_hold());
    }
    for n in 2..7 {
        assert!(zero_divisor_scan(&Lattice::godel_chain(n).unwrap()).zero_divisor_free());
    }
    for n in 3..7 {
        assert!(!zero_divisor_scan(&Lattice::lukasiewicz_chain(n).unwrap()).zero_divisor_free());
    }
}
