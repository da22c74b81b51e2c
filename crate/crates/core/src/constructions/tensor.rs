use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;

use super::FiniteQuotient;
use crate::algebra::{Coords, Lattice};
use crate::error::{Error, Result};
use crate::ringoid::{FiniteRingoid, RingoidBuilder};

/// `M ⊗ N` with objects the pairs `(a, b)` and the coordinate map on pure tensors.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    ringoid: Arc<FiniteRingoid>,
    left: Arc<FiniteRingoid>,
    right: Arc<FiniteRingoid>,
    // indexed by object pair (s, t) of the product
    quotients: Vec<FiniteQuotient>,
}

impl TensorProduct {
    pub fn ringoid(&self) -> &Arc<FiniteRingoid> {
        &self.ringoid
    }

    pub fn left(&self) -> &Arc<FiniteRingoid> {
        &self.left
    }

    pub fn right(&self) -> &Arc<FiniteRingoid> {
        &self.right
    }

    pub fn object(&self, a: usize, b: usize) -> usize {
        a * self.right.num_objects() + b
    }

    /// `x ⊗ y` for `x ∈ Hom_M(a, a')` and `y ∈ Hom_N(b, b')`.
    pub fn pure(&self, (a, a2): (usize, usize), (b, b2): (usize, usize), x: &[u64], y: &[u64]) -> Coords {
        let s = self.object(a, b);
        let t = self.object(a2, b2);
        self.quotients[s * self.ringoid.num_objects() + t].project(&outer(x, y))
    }
}

fn outer(x: &[u64], y: &[u64]) -> Vec<i128> {
    let q = y.len();
    let mut v = vec![0i128; x.len() * q];
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            v[i * q + j] = xi as i128 * yj as i128;
        }
    }
    v
}

fn same_scalars(m: &FiniteRingoid, n: &FiniteRingoid) -> Result<Option<Arc<FiniteRingoid>>> {
    match (m.scalar_ring(), n.scalar_ring()) {
        (None, None) => Ok(None),
        (Some(r), Some(s)) if Arc::ptr_eq(r, s) || r == s => Ok(Some(r.clone())),
        _ => Err(Error::Unsupported(format!(
            "tensor needs a common scalar ring for {} and {}",
            m.name(),
            n.name()
        ))),
    }
}

/// Tensor product over the common scalar ring, or over `ℤ` when neither side has one.
pub fn tensor(m: Arc<FiniteRingoid>, n: Arc<FiniteRingoid>) -> Result<TensorProduct> {
    let ring = same_scalars(&m, &n)?;
    let (nm, nn) = (m.num_objects(), n.num_objects());
    let no = nm * nn;
    let split = |s: usize| (s / nn, s % nn);
    let mut quotients = Vec::with_capacity(no * no);
    for s in 0..no {
        for t in 0..no {
            let ((a, b), (a2, b2)) = (split(s), split(t));
            let (hm, hn) = (m.hom(a, a2), n.hom(b, b2));
            let (p, q) = (hm.ngens(), hn.ngens());
            let mut rows: Vec<Vec<BigInt>> = Vec::new();
            for i in 0..p {
                for j in 0..q {
                    let mut r = vec![BigInt::from(0); p * q];
                    r[i * q + j] = BigInt::from(hm.moduli()[i].gcd(&hn.moduli()[j]));
                    rows.push(r);
                }
            }
            if let Some(ring) = &ring {
                let rg = ring.ring_group();
                for rr in 0..rg.ngens() {
                    let r = rg.generator(rr);
                    for i in 0..p {
                        let rx = m.act(a, a2, &r, &hm.generator(i))?;
                        for j in 0..q {
                            let ry = n.act(b, b2, &r, &hn.generator(j))?;
                            let mut row = vec![BigInt::from(0); p * q];
                            for (k, &c) in rx.iter().enumerate() {
                                row[k * q + j] += BigInt::from(c);
                            }
                            for (l, &c) in ry.iter().enumerate() {
                                row[i * q + l] -= BigInt::from(c);
                            }
                            rows.push(row);
                        }
                    }
                }
            }
            quotients.push(FiniteQuotient::new(Lattice::from_vectors(p * q, rows))?);
        }
    }
    let qt = |s: usize, t: usize| &quotients[s * no + t];
    let name = |s: usize| {
        let (a, b) = split(s);
        format!("{}.{}", m.object_name(a), n.object_name(b))
    };
    let mut bld = RingoidBuilder::new(&format!("{}*{}", m.name(), n.name()));
    for s in 0..no {
        bld.object(&name(s));
    }
    for s in 0..no {
        for t in 0..no {
            bld.hom(s, t, qt(s, t).group().moduli().to_vec());
        }
    }
    for s in 0..no {
        for t in 0..no {
            for u in 0..no {
                let ((a, b), (a2, b2), (a3, b3)) = (split(s), split(t), split(u));
                let q1 = n.hom(b, b2).ngens();
                let q2 = n.hom(b2, b3).ngens();
                let q3 = n.hom(b, b3).ngens();
                let p3 = m.hom(a, a3).ngens();
                for jj in 0..qt(s, t).group().ngens() {
                    let c1 = qt(s, t).lift(jj);
                    for ii in 0..qt(t, u).group().ngens() {
                        let c2 = qt(t, u).lift(ii);
                        let mut acc = vec![0i128; p3 * q3];
                        for (e1, &k1) in c1.iter().enumerate() {
                            if k1 == 0 {
                                continue;
                            }
                            let (i1, j1) = (e1 / q1, e1 % q1);
                            for (e2, &k2) in c2.iter().enumerate() {
                                if k2 == 0 {
                                    continue;
                                }
                                let (i2, j2) = (e2 / q2, e2 % q2);
                                let xm = m.constant(a, a2, a3, i1, i2);
                                let yn = n.constant(b, b2, b3, j1, j2);
                                for (k, &xk) in xm.iter().enumerate() {
                                    if xk == 0 {
                                        continue;
                                    }
                                    for (l, &yl) in yn.iter().enumerate() {
                                        acc[k * q3 + l] += k1 * k2 * xk as i128 * yl as i128;
                                    }
                                }
                            }
                        }
                        let v = qt(s, u).project(&acc);
                        if v.iter().any(|&x| x != 0) {
                            bld.compose(s, t, u, jj, ii, v);
                        }
                    }
                }
            }
        }
    }
    if m.is_unital() && n.is_unital() {
        for s in 0..no {
            let (a, b) = split(s);
            let e = qt(s, s).project(&outer(m.identity(a).unwrap(), n.identity(b).unwrap()));
            bld.identity(s, e);
        }
    }
    if let Some(ring) = ring {
        bld.scalar(ring.clone());
        let rg = ring.ring_group();
        for s in 0..no {
            for t in 0..no {
                let ((a, b), (a2, b2)) = (split(s), split(t));
                let q = n.hom(b, b2).ngens();
                for r in 0..rg.ngens() {
                    for g in 0..qt(s, t).group().ngens() {
                        let c = qt(s, t).lift(g);
                        let mut acc = vec![0i128; c.len()];
                        for (e, &k) in c.iter().enumerate() {
                            if k == 0 {
                                continue;
                            }
                            let rx = m.act(a, a2, &rg.generator(r), &m.hom(a, a2).generator(e / q))?;
                            for (kk, &xk) in rx.iter().enumerate() {
                                acc[kk * q + e % q] += k * xk as i128;
                            }
                        }
                        let v = qt(s, t).project(&acc);
                        if v.iter().any(|&x| x != 0) {
                            bld.action(s, t, r, g, v);
                        }
                    }
                }
            }
        }
    }
    let ringoid = Arc::new(bld.build()?);
    Ok(TensorProduct {
        ringoid,
        left: m,
        right: n,
        quotients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ringoid::validate;

    #[test]
    fn z4_tensor_z2_is_z2() {
        let t = tensor(Arc::new(catalog::cyclic_ring(4)), Arc::new(catalog::cyclic_ring(2))).unwrap();
        let r = t.ringoid();
        assert_eq!(r.hom(0, 0).order(), 2);
        assert!(validate(r).is_clean());
        assert_eq!(t.pure((0, 0), (0, 0), &[3], &[1]), vec![1]);
    }

    #[test]
    fn matrix_ring_tensor_dimension() {
        let m = Arc::new(catalog::matrix_ring_f2());
        let t = tensor(m.clone(), Arc::new(catalog::f2_c2())).unwrap();
        assert_eq!(t.ringoid().hom(0, 0).order(), 1 << 8);
        assert!(validate(t.ringoid()).is_clean());
    }

    #[test]
    fn over_common_scalars() {
        let f2 = Arc::new(catalog::prime_field(2));
        let m = Arc::new(catalog::over_itself(&f2));
        let t = tensor(m.clone(), m).unwrap();
        assert_eq!(t.ringoid().hom(0, 0).order(), 2);
        assert!(validate(t.ringoid()).is_clean());
    }

    #[test]
    fn mismatched_scalars_rejected() {
        let f2 = Arc::new(catalog::prime_field(2));
        let m = Arc::new(catalog::over_itself(&f2));
        assert!(tensor(m, Arc::new(catalog::cyclic_ring(2))).is_err());
    }
}
