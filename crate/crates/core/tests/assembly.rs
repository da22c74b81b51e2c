#![allow(clippy::needless_range_loop)]

use std::sync::Arc;

use kringoid::additive::DEFAULT_CEILING;
use kringoid::assembly::{assembly_zero, equivariant_assembly_zero, naturality_check};
use kringoid::catalog;
use kringoid::constructions::{FinGroupoid, GMap, GSet};
use kringoid::FinGroup;
use proptest::prelude::*;

const C: u64 = DEFAULT_CEILING;

/// `G/⟨gen⟩`.
fn orbit(g: &Arc<FinGroup>, gen: usize) -> GSet {
    GSet::cosets("X", g.clone(), &g.subgroup_closure(&[gen % g.order()]))
}

fn free(g: &Arc<FinGroup>) -> GSet {
    orbit(g, g.identity())
}

/// `x₀·k ↦ t·k` from a union of free orbits, one chosen target point per orbit.
fn from_free_orbits(g: &Arc<FinGroup>, copies: usize, target: &Arc<GSet>, points: &[usize]) -> GMap {
    let mut src = free(g);
    for _ in 1..copies {
        src = src.disjoint_union(&free(g));
    }
    let k = g.order();
    let mut map = vec![0; copies * k];
    for c in 0..copies {
        let x0 = c * k;
        for e in 0..k {
            map[src.act(x0, e)] = target.act(points[c] % target.points().len(), e);
        }
    }
    GMap::new(Arc::new(src), target.clone(), map).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// Every single orbit `G/H` assembles isomorphically.
    #[test]
    fn single_orbits_assemble_isomorphically(n in 1usize..=3, gen in 0usize..3, p in prop::sample::select(vec![2u64, 3])) {
        let g = Arc::new(FinGroup::cyclic(n));
        let x = orbit(&g, gen);
        let r = Arc::new(catalog::prime_field(p));
        let a = equivariant_assembly_zero(&x, &r, 2, C).unwrap();
        prop_assert!(a.is_decided());
        prop_assert!(a.is_well_defined());
        prop_assert!(a.is_isomorphism(), "C{} / <{}> over F{}", n, gen % n, p);
    }

    /// The naturality square commutes for maps out of free orbits.
    #[test]
    fn gmaps_are_natural(
        n in 2usize..=3,
        copies in 1usize..=2,
        target_gen in 0usize..3,
        mixed in any::<bool>(),
        points in prop::array::uniform2(0usize..6),
    ) {
        let g = Arc::new(FinGroup::cyclic(n));
        let mut y = orbit(&g, target_gen);
        if mixed {
            y = y.disjoint_union(&orbit(&g, 1));
        }
        let f = from_free_orbits(&g, copies, &Arc::new(y), &points);
        let r = Arc::new(catalog::prime_field(2));
        let rep = naturality_check(&f, &r, 2, C).unwrap();
        prop_assert!(rep.is_decided());
        prop_assert!(rep.commutes);
    }
}

#[test]
fn groups_with_local_or_semisimple_group_rings() {
    for (n, p) in [(1, 2), (2, 2), (4, 2), (1, 3), (2, 3)] {
        let pi = Arc::new(FinGroupoid::from_group("G", &FinGroup::cyclic(n)));
        let a = assembly_zero(&pi, &Arc::new(catalog::prime_field(p)), 2, C).unwrap();
        assert!(a.is_isomorphism(), "C{n} over F{p}");
    }
}
