mod common;

use kringoid::additive::{complete, DEFAULT_CEILING};
use kringoid::nerve::{check_simplicial_identities, k0_via_nerve, oracle_compare, GroupPresentation, Word};
use proptest::prelude::*;

const C: u64 = DEFAULT_CEILING;

fn word(gens: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, prop::bool::ANY), 1..=6)
        .prop_map(|w| w.into_iter().map(|(g, pos)| (g, if pos { 1 } else { -1 })).collect())
}

fn presentation() -> impl Strategy<Value = GroupPresentation> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(word(n), 0..=4)
            .prop_map(move |rels| GroupPresentation::new((0..n).map(|i| format!("x{i}")).collect(), rels))
    })
}

#[test]
fn simplicial_identities_on_desk_ringoids() {
    for r in common::desk() {
        let view = complete(r.clone()).unwrap();
        let rep = check_simplicial_identities(&view, 3, 2).unwrap();
        assert!(rep.holds(), "{}: {:?}", r.name(), rep.failures.first());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn nerve_presentation_matches_bounded_k0(which in 0usize..8, bound in 1usize..=3) {
        let r = common::desk()[which].clone();
        let rep = oracle_compare(&r, bound, C).unwrap();
        prop_assert!(rep.is_decided());
        prop_assert!(rep.matches(), "{} at {}: {} vs {}", r.name(), bound, rep.bounded.group, rep.nerve.group);
    }

    /// Every relator at bound `L` is still a relator at `L+1`, with generators matched by sum.
    #[test]
    fn nerve_relators_grow_with_the_bound(which in 0usize..8, bound in 1usize..=2) {
        let r = common::desk()[which].clone();
        let small = k0_via_nerve(&r, bound, C).unwrap().relators_by_sum();
        let big = k0_via_nerve(&r, bound + 1, C).unwrap().relators_by_sum();
        for rel in &small {
            prop_assert!(big.contains(rel), "{} lost {:?}", r.name(), rel);
        }
    }

    #[test]
    fn simplification_preserves_the_abelianization(p in presentation()) {
        let (q, _) = p.simplify();
        prop_assert!(q.num_generators() <= p.num_generators());
        prop_assert_eq!(q.abelianization(), p.abelianization());
    }
}
