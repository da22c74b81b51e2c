#![allow(dead_code, clippy::needless_range_loop)]

use std::sync::Arc;

use kringoid::{catalog, FiniteRingoid, RingoidBuilder};

/// Unital F2-ringoid on objects p, q with `Hom(a,b) = F2` exactly where `arrows[a][b]`,
/// every composable pair of generators composing to the generator.
pub fn two_object_f2(name: &str, arrows: [[bool; 2]; 2]) -> FiniteRingoid {
    let mut b = RingoidBuilder::new(name);
    b.object("p");
    b.object("q");
    for x in 0..2 {
        for y in 0..2 {
            if arrows[x][y] {
                b.hom(x, y, vec![2]);
            }
        }
    }
    for x in 0..2 {
        for y in 0..2 {
            for z in 0..2 {
                if arrows[x][y] && arrows[y][z] {
                    assert!(arrows[x][z], "arrow set not closed under composition");
                    b.compose(x, y, z, 0, 0, vec![1]);
                }
            }
        }
        b.identity(x, vec![1]);
    }
    b.build().unwrap()
}

/// Upper triangular 2×2 matrices over F2, split into its two idempotents.
pub fn triangular() -> FiniteRingoid {
    two_object_f2("T", [[true, true], [false, true]])
}

/// F2 × F2 with the factors as separate objects.
pub fn diagonal() -> FiniteRingoid {
    two_object_f2("D", [[true, false], [false, true]])
}

/// M2(F2) with its two rank-one idempotents as objects; p and q are isomorphic.
pub fn indiscrete() -> FiniteRingoid {
    two_object_f2("I", [[true; 2]; 2])
}

/// Small unital ringoids whose bounded K-theory is cheap up to length 3.
pub fn desk() -> Vec<Arc<FiniteRingoid>> {
    vec![
        Arc::new(catalog::prime_field(2)),
        Arc::new(catalog::prime_field(3)),
        Arc::new(catalog::cyclic_ring(4)),
        Arc::new(catalog::zero_ring()),
        Arc::new(catalog::f2_times_f2()),
        Arc::new(triangular()),
        Arc::new(diagonal()),
        Arc::new(indiscrete()),
    ]
}
