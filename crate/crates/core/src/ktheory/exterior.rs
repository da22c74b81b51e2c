use num_bigint::BigInt;
use num_traits::Zero;

use super::k0::KZeroResult;
use crate::constructions::TensorProduct;
use crate::error::{Error, Result};

/// The pairing `K₀(M) × K₀(N) → K₀(M ⊗ N)` with `[a]·[b] = [a ⊗ b]`.
#[derive(Clone, Debug)]
pub struct ExteriorProduct {
    left: usize,
    right: usize,
    target: KZeroResult,
    // image of each generator pair, row a * right + b
    images: Vec<Vec<BigInt>>,
}

impl ExteriorProduct {
    pub fn target(&self) -> &KZeroResult {
        &self.target
    }

    /// `x·y` for vectors over the generators of the two factors.
    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.target.generators.len()];
        for (a, xa) in x.iter().enumerate().take(self.left) {
            for (b, yb) in y.iter().enumerate().take(self.right) {
                let c = xa * yb;
                if c.is_zero() {
                    continue;
                }
                for (o, v) in out.iter_mut().zip(&self.images[a * self.right + b]) {
                    *o += &c * v;
                }
            }
        }
        out
    }

    /// The pairing in normal-form coordinates of the target group.
    pub fn pair_normal(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        self.target.group.normal_coords(&self.pair(x, y))
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|v| self.target.group.is_zero_class(v))
    }
}

/// Builds the pairing and checks it kills the relations of both factors.
pub fn exterior_product(
    m: &KZeroResult,
    n: &KZeroResult,
    t: &TensorProduct,
    target: KZeroResult,
) -> Result<ExteriorProduct> {
    let (p, q) = (m.generators.len(), n.generators.len());
    let k = target.generators.len();
    let images = (0..p)
        .flat_map(|a| (0..q).map(move |b| (a, b)))
        .map(|(a, b)| {
            let mut v = vec![BigInt::zero(); k];
            v[t.object(a, b)] = BigInt::from(1);
            v
        })
        .collect();
    let e = ExteriorProduct {
        left: p,
        right: q,
        target,
        images,
    };
    let unit = |len: usize, i: usize| {
        let mut v = vec![BigInt::zero(); len];
        v[i] = BigInt::from(1);
        v
    };
    for rel in m.relations().basis().row_iter() {
        for b in 0..q {
            if !e.target.group.is_zero_class(&e.pair(rel, &unit(q, b))) {
                return Err(Error::InconsistentAtBound(format!(
                    "left relation {rel:?} survives against generator {b}"
                )));
            }
        }
    }
    for rel in n.relations().basis().row_iter() {
        for a in 0..p {
            if !e.target.group.is_zero_class(&e.pair(&unit(p, a), rel)) {
                return Err(Error::InconsistentAtBound(format!(
                    "right relation {rel:?} survives against generator {a}"
                )));
            }
        }
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::additive::DEFAULT_CEILING;
    use crate::catalog;
    use crate::constructions::tensor;
    use crate::ktheory::k0_bounded;

    #[test]
    fn f2_pairing_is_multiplication() {
        let f2 = Arc::new(catalog::prime_field(2));
        let t = tensor(f2.clone(), f2.clone()).unwrap();
        let k = k0_bounded(&f2, 2, DEFAULT_CEILING).unwrap();
        let kt = k0_bounded(t.ringoid(), 2, DEFAULT_CEILING).unwrap();
        let e = exterior_product(&k, &k, &t, kt).unwrap();
        for x in -3i32..=3 {
            for y in -3i32..=3 {
                let out = e.pair_normal(&[BigInt::from(x)], &[BigInt::from(y)]);
                assert_eq!(out, vec![BigInt::from(x * y)]);
            }
        }
    }

    #[test]
    fn coprime_tensor_pairs_to_zero() {
        let a = Arc::new(catalog::cyclic_ring(2));
        let b = Arc::new(catalog::cyclic_ring(3));
        let t = tensor(a.clone(), b.clone()).unwrap();
        let ka = k0_bounded(&a, 2, DEFAULT_CEILING).unwrap();
        let kb = k0_bounded(&b, 2, DEFAULT_CEILING).unwrap();
        let kt = k0_bounded(t.ringoid(), 2, DEFAULT_CEILING).unwrap();
        assert_eq!(kt.group.to_string(), "0");
        assert!(exterior_product(&ka, &kb, &t, kt).unwrap().is_zero());
    }
}
