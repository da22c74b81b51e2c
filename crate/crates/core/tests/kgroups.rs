mod common;

use std::sync::Arc;

use kringoid::additive::{complete, ObjSum, DEFAULT_CEILING};
use kringoid::constructions::Ideal;
use kringoid::ktheory::{determinant_surjective, fibration_check, gl, k0_bounded, k0_induced, k1_bounded};
use kringoid::{catalog, validate_hom, FiniteRingoid, RingoidHom};
use proptest::prelude::*;

const C: u64 = DEFAULT_CEILING;

/// Sends `p ↦ objects[0]`, `q ↦ objects[1]` and each one-generator hom to the matching one.
fn from_two_objects(src: &Arc<FiniteRingoid>, tgt: &Arc<FiniteRingoid>, objects: [usize; 2]) -> RingoidHom {
    RingoidHom::from_fn(src.clone(), tgt.clone(), objects.to_vec(), |a, b, _| {
        let h = tgt.hom(objects[a], objects[b]);
        let mut v = h.zero();
        if !v.is_empty() {
            v[0] = 1;
        }
        v
    })
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// More room only adds relations: the bound `L+1` group is a quotient of the bound `L` group.
    #[test]
    fn k0_relations_grow_with_the_bound(which in 0usize..8, bound in 1usize..=2) {
        let r = common::desk()[which].clone();
        let small = k0_bounded(&r, bound, C).unwrap();
        let big = k0_bounded(&r, bound + 1, C).unwrap();
        prop_assert!(big.relations().contains_lattice(small.relations()));
        prop_assert_eq!(big.stabilized, big.relations() == small.relations());
    }

    /// The matrix of `g ∘ f` is the product of the two matrices.
    #[test]
    fn induced_maps_compose(swap in any::<bool>(), bound in 1usize..=3) {
        let d = Arc::new(common::diagonal());
        let f2 = Arc::new(catalog::prime_field(2));
        let f = from_two_objects(&d, &d, if swap { [1, 0] } else { [0, 1] });
        let g = from_two_objects(&d, &f2, [0, 0]);
        prop_assert!(validate_hom(&f).is_clean() && validate_hom(&g).is_clean());
        let (kd, kf) = (k0_bounded(&d, bound, C).unwrap(), k0_bounded(&f2, bound, C).unwrap());
        let mf = k0_induced(&f, &kd, &kd).unwrap();
        let mg = k0_induced(&g, &kd, &kf).unwrap();
        let mgf = k0_induced(&g.after(&f).unwrap(), &kd, &kf).unwrap();
        prop_assert_eq!(mgf.matrix, mf.compose(&mg).matrix);
    }

    /// `K₀(J) → K₀(M) → K₀(M/J)` composes to zero at every bound, not only after stabilization.
    #[test]
    fn fibration_composite_vanishes(case in 0usize..5, bound in 1usize..=3) {
        let (n, d) = [(4, 2), (6, 2), (6, 3), (2, 0), (4, 4)][case];
        let ring = Arc::new(catalog::cyclic_ring(n));
        let m = Arc::new(catalog::over_itself(&ring));
        let j = Ideal::new(m, vec![vec![vec![d % n]]]).unwrap();
        let rep = fibration_check(&j, bound, C).unwrap();
        prop_assert!(rep.composite_zero);
    }
}

#[test]
fn stabilization_embeddings_are_injective() {
    for (r, n_max) in [
        (catalog::prime_field(2), 3),
        (catalog::prime_field(3), 2),
        (catalog::cyclic_ring(4), 2),
    ] {
        let name = r.name().to_string();
        let k = k1_bounded(&Arc::new(r), n_max, C).unwrap();
        assert!(k.embeddings_injective, "{name}");
    }
}

#[test]
fn determinant_reaches_every_unit() {
    for r in [
        catalog::prime_field(2),
        catalog::prime_field(3),
        catalog::prime_field(5),
        catalog::cyclic_ring(4),
    ] {
        let r = Arc::new(r);
        let view = complete(r.clone()).unwrap();
        for n in 1..=2 {
            let g = gl(&view, &ObjSum::repeat(0, n), C).unwrap();
            assert!(determinant_surjective(&r, &g), "{} n={n}", r.name());
        }
    }
}
