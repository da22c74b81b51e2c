//! Small rings used throughout the tests and the command line.

use std::sync::Arc;

use crate::algebra::Coords;
use crate::ringoid::{FiniteRingoid, RingoidBuilder, RingoidHom};

/// One-object ringoid on `ℤ/d₁ × … × ℤ/d_k` with `mul(y, x)` giving `g_y ∘ g_x`.
pub fn one_object_ring(
    name: &str,
    moduli: Vec<u64>,
    mul: impl Fn(usize, usize) -> Coords,
    one: Option<Coords>,
) -> FiniteRingoid {
    let k = moduli.len();
    let mut b = RingoidBuilder::new(name);
    let o = b.object("o");
    b.hom(o, o, moduli);
    for x in 0..k {
        for y in 0..k {
            b.compose(o, o, o, x, y, mul(y, x));
        }
    }
    if let Some(e) = one {
        b.identity(o, e);
    }
    b.build().expect("catalog ring is well formed")
}

/// `ℤ/n`; for prime `n` this is the field `F_n`.
pub fn cyclic_ring(n: u64) -> FiniteRingoid {
    one_object_ring(&format!("Z/{n}"), vec![n], |_, _| vec![1 % n], Some(vec![1 % n]))
}

pub fn prime_field(p: u64) -> FiniteRingoid {
    cyclic_ring(p).with_name(format!("F{p}"))
}

/// The zero ring: trivial hom-group, unital with `1 = 0`.
pub fn zero_ring() -> FiniteRingoid {
    let mut b = RingoidBuilder::new("zero");
    let o = b.object("o");
    b.identity(o, vec![]);
    b.build().expect("zero ring")
}

/// `M₂(F₂)` on the matrix units `E11, E12, E21, E22`.
pub fn matrix_ring_f2() -> FiniteRingoid {
    let unit = |i: usize| (i / 2, i % 2);
    one_object_ring(
        "M2(F2)",
        vec![2; 4],
        |y, x| {
            let ((p, q), (r, s)) = (unit(y), unit(x));
            let mut out = vec![0; 4];
            if q == r {
                out[2 * p + s] = 1;
            }
            out
        },
        Some(vec![1, 0, 0, 1]),
    )
}

/// `F₂[C₂]` on the basis `e, g`.
pub fn f2_c2() -> FiniteRingoid {
    one_object_ring(
        "F2[C2]",
        vec![2, 2],
        |y, x| {
            let mut out = vec![0; 2];
            out[y ^ x] = 1;
            out
        },
        Some(vec![1, 0]),
    )
}

/// `F₂ × F₂` on the orthogonal idempotents `e₁, e₂`.
pub fn f2_times_f2() -> FiniteRingoid {
    one_object_ring(
        "F2xF2",
        vec![2, 2],
        |y, x| {
            let mut out = vec![0; 2];
            if x == y {
                out[x] = 1;
            }
            out
        },
        Some(vec![1, 1]),
    )
}

/// A one-object commutative ring viewed as a moduloid over itself.
pub fn over_itself(ring: &Arc<FiniteRingoid>) -> FiniteRingoid {
    let mut b = ring.to_builder();
    b.scalar(ring.clone());
    let h = ring.ring_group();
    for r in 0..h.ngens() {
        for g in 0..h.ngens() {
            b.action(0, 0, r, g, ring.ring_mul(&h.generator(r), &h.generator(g)));
        }
    }
    b.build().expect("ring over itself")
}

/// Reduction `ℤ/m → ℤ/n` for `n | m`.
pub fn reduction(source: &Arc<FiniteRingoid>, target: &Arc<FiniteRingoid>) -> RingoidHom {
    RingoidHom::new(
        source.clone(),
        target.clone(),
        vec![0],
        vec![vec![target.ring_one().unwrap().clone()]],
    )
    .expect("reduction")
}

/// The ideal `(2) ⊂ ℤ/4` as a non-unital `ℤ/4`-moduloid: `ℤ/2` with zero product.
pub fn two_z4() -> FiniteRingoid {
    let z4 = Arc::new(cyclic_ring(4));
    let mut b = RingoidBuilder::new("2Z/4");
    let o = b.object("o");
    b.hom(o, o, vec![2]);
    b.compose(o, o, o, 0, 0, vec![0]);
    b.scalar(z4);
    b.action(o, o, 0, 0, vec![1]);
    b.build().expect("2Z/4")
}

/// `ℤ/n` as a moduloid over `ℤ/m`, for `n | m`.
pub fn cyclic_over(n: u64, m: u64) -> FiniteRingoid {
    assert!(m.is_multiple_of(n), "cyclic_over needs n | m");
    let mut b = cyclic_ring(n).to_builder();
    b.scalar(Arc::new(cyclic_ring(m)));
    b.action(0, 0, 0, 0, vec![1 % n]);
    b.build().expect("cyclic ring over a larger cyclic ring")
}
