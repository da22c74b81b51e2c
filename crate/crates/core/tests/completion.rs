mod common;

use std::sync::Arc;

use kringoid::additive::{
    complete, find_isomorphism, iso_class_table, map_completion, AdditiveView, MatMorphism, ObjSum, DEFAULT_CEILING,
};
use kringoid::catalog;
use kringoid::{validate, FiniteRingoid};
use proptest::prelude::*;

fn ringoids() -> Vec<Arc<FiniteRingoid>> {
    vec![
        Arc::new(catalog::cyclic_ring(4)),
        Arc::new(common::triangular()),
        Arc::new(common::diagonal()),
        Arc::new(common::indiscrete()),
    ]
}

fn pick(view: &AdditiveView, a: &ObjSum, b: &ObjSum, k: usize) -> MatMorphism {
    let all: Vec<MatMorphism> = view.morphisms(a, b).collect();
    all[k % all.len()].clone()
}

fn sum(n: usize, max_len: usize) -> impl Strategy<Value = ObjSum> {
    prop::collection::vec(0..n, 0..=max_len).prop_map(ObjSum)
}

#[test]
fn helper_ringoids_are_valid() {
    for r in ringoids() {
        assert!(validate(&r).is_clean(), "{}", r.name());
    }
}

#[test]
fn oplus_is_commutative_on_classes() {
    for r in ringoids() {
        let view = complete(r.clone()).unwrap();
        let t = iso_class_table(&view, 3, DEFAULT_CEILING).unwrap();
        assert!(t.is_decided());
        for (a, _) in &t.members {
            for (b, _) in t.members.iter().filter(|(b, _)| a.len() + b.len() <= 3) {
                assert_eq!(
                    t.class_of(&a.concat(b)),
                    t.class_of(&b.concat(a)),
                    "{} {a:?} {b:?}",
                    r.name()
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn isomorphism_search_is_symmetric(which in 0usize..4, a in sum(2, 2), b in sum(2, 2)) {
        let r = ringoids()[which].clone();
        let n = r.num_objects();
        let clamp = |s: ObjSum| ObjSum(s.0.into_iter().map(|x| x % n).collect());
        let (a, b) = (clamp(a), clamp(b));
        let view = complete(r).unwrap();
        let ab = find_isomorphism(&view, &a, &b, DEFAULT_CEILING);
        let ba = find_isomorphism(&view, &b, &a, DEFAULT_CEILING);
        prop_assert!(!ab.is_undecided() && !ba.is_undecided());
        prop_assert_eq!(ab.is_found(), ba.is_found());
    }

    #[test]
    fn matrix_composition_is_associative_and_bilinear(
        which in 0usize..4,
        sums in prop::array::uniform4(sum(2, 2)),
        picks in prop::array::uniform4(any::<usize>()),
    ) {
        let r = ringoids()[which].clone();
        let n = r.num_objects();
        let [a, b, c, d] = sums.map(|s| ObjSum(s.0.into_iter().map(|x| x % n).collect()));
        let view = complete(r).unwrap();
        let f = pick(&view, &a, &b, picks[0]);
        let f2 = pick(&view, &a, &b, picks[3]);
        let g = pick(&view, &b, &c, picks[1]);
        let h = pick(&view, &c, &d, picks[2]);

        let left = view.compose(&h, &view.compose(&g, &f).unwrap()).unwrap();
        let right = view.compose(&view.compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert!(left == right);

        let sum_then = view.compose(&g, &view.add(&f, &f2).unwrap()).unwrap();
        let then_sum = view.add(&view.compose(&g, &f).unwrap(), &view.compose(&g, &f2).unwrap()).unwrap();
        prop_assert!(sum_then == then_sum);
    }

    #[test]
    fn biproduct_equations_hold(which in 0usize..4, a in sum(2, 2), b in sum(2, 1)) {
        let r = ringoids()[which].clone();
        let n = r.num_objects();
        let clamp = |s: ObjSum| ObjSum(s.0.into_iter().map(|x| x % n).collect());
        let view = complete(r).unwrap();
        let bp = view.biproduct(&clamp(a), &clamp(b)).unwrap();
        prop_assert_eq!(view.check_biproduct(&bp).unwrap(), [true; 3]);
    }

    /// Reducing `ℤ/12 → ℤ/6 → ℤ/3` in two steps or in one gives the same matrix.
    #[test]
    fn reductions_act_functorially(rows in 1usize..=3, cols in 1usize..=3, entries in prop::collection::vec(0u64..12, 9)) {
        let [z12, z6, z3] = [12, 6, 3].map(|n| Arc::new(catalog::cyclic_ring(n)));
        let f = catalog::reduction(&z12, &z6);
        let g = catalog::reduction(&z6, &z3);
        let view = complete(z12.clone()).unwrap();
        let m = view
            .morphism(ObjSum::repeat(0, cols), ObjSum::repeat(0, rows), entries[..rows * cols].iter().map(|&x| vec![x]).collect())
            .unwrap();
        let stepwise = map_completion(&g).apply(&map_completion(&f).apply(&m));
        let direct = map_completion(&g).after(&map_completion(&f)).unwrap().apply(&m);
        prop_assert!(stepwise == direct);
        let expected: Vec<Vec<u64>> = entries[..rows * cols].iter().map(|&x| vec![x % 3]).collect();
        prop_assert_eq!(direct.entries().to_vec(), expected);
    }
}
