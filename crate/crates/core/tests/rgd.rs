use std::sync::Arc;

use kringoid::rgd::{load, parse_rgd, ringoid_document};
use kringoid::{catalog, FiniteRingoid, RingoidBuilder};
use proptest::prelude::*;

#[derive(Clone, Debug)]
struct Shape {
    objects: usize,
    moduli: Vec<Vec<u64>>,
    seed: Vec<u64>,
    unital: bool,
    scalars: bool,
}

fn shape() -> impl Strategy<Value = Shape> {
    (1usize..=2).prop_flat_map(|n| {
        (
            prop::collection::vec(prop::collection::vec(1u64..=5, 0..=2), n * n),
            prop::collection::vec(any::<u64>(), 64),
            any::<bool>(),
            any::<bool>(),
        )
            .prop_map(move |(moduli, seed, unital, scalars)| Shape {
                objects: n,
                moduli,
                seed,
                unital,
                scalars,
            })
    })
}

/// Arbitrary, not necessarily valid, structure data; the format has to carry it either way.
fn build(s: &Shape) -> FiniteRingoid {
    let n = s.objects;
    let mut next = s.seed.iter().cycle();
    let mut coords = |m: &[u64]| m.iter().map(|&d| next.next().unwrap() % d).collect::<Vec<_>>();
    let mut b = RingoidBuilder::new("R");
    for i in 0..n {
        b.object(&format!("x{i}"));
    }
    for a in 0..n {
        for c in 0..n {
            b.hom(a, c, s.moduli[a * n + c].clone());
        }
    }
    for a in 0..n {
        for bb in 0..n {
            for c in 0..n {
                for j in 0..s.moduli[a * n + bb].len() {
                    for i in 0..s.moduli[bb * n + c].len() {
                        b.compose(a, bb, c, j, i, coords(&s.moduli[a * n + c]));
                    }
                }
            }
        }
    }
    if s.unital {
        for a in 0..n {
            b.identity(a, coords(&s.moduli[a * n + a]));
        }
    }
    if s.scalars {
        b.scalar(Arc::new(catalog::cyclic_ring(6)));
        for a in 0..n {
            for c in 0..n {
                for g in 0..s.moduli[a * n + c].len() {
                    b.action(a, c, 0, g, coords(&s.moduli[a * n + c]));
                }
            }
        }
    }
    b.build().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printed_ringoids_reload(s in shape()) {
        let r = build(&s);
        let text = ringoid_document(&r).to_string();
        let model = load(&text).unwrap();
        prop_assert_eq!(model.ringoid("R").map(|x| x.as_ref()), Some(&r));
    }

    #[test]
    fn printing_is_a_normal_form(s in shape(), pad in 0usize..4) {
        let text = ringoid_document(&build(&s)).to_string();
        let noisy: String = text
            .lines()
            .map(|l| format!("{}{}   # note\n", " ".repeat(pad), l.split_whitespace().collect::<Vec<_>>().join(&" ".repeat(pad + 1))))
            .collect();
        let doc = parse_rgd(&noisy).unwrap();
        prop_assert_eq!(doc.to_string(), text);
    }
}
