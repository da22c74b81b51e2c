use std::sync::Arc;

use crate::algebra::Coords;
use crate::error::{Error, Result};
use crate::ringoid::{validate_hom, FiniteRingoid, RingoidBuilder, RingoidHom};

fn scalars_of(m: &FiniteRingoid) -> Result<Arc<FiniteRingoid>> {
    m.scalar_ring()
        .cloned()
        .ok_or_else(|| Error::Unsupported(format!("{} has no scalar ring", m.name())))
}

/// Hom-groups `Hom(a,b)_m ⊕ (R if a = b)`, shared by `M⁺` and `M ⊕ R_M`.
struct Augmented<'a> {
    m: &'a FiniteRingoid,
    ring: Arc<FiniteRingoid>,
}

impl<'a> Augmented<'a> {
    fn moduli(&self, a: usize, b: usize) -> Vec<u64> {
        let mut v = self.m.hom(a, b).moduli().to_vec();
        if a == b {
            v.extend(self.ring.ring_group().moduli());
        }
        v
    }

    fn split<'x>(&self, a: usize, b: usize, x: &'x [u64]) -> (&'x [u64], Option<&'x [u64]>) {
        let k = self.m.hom(a, b).ngens();
        if a == b {
            (&x[..k], Some(&x[k..]))
        } else {
            (x, None)
        }
    }

    fn join(&self, a: usize, b: usize, x: Coords, lambda: Option<Coords>) -> Coords {
        let mut out = x;
        if a == b {
            out.extend(lambda.unwrap_or_else(|| self.ring.ring_group().zero()));
        }
        out
    }

    fn act(&self, a: usize, b: usize, r: &[u64], x: &[u64]) -> Coords {
        self.m.act(a, b, r, x).expect("scalar ring present")
    }

    /// Builder with objects, hom-groups and the componentwise scalar action.
    fn builder(&self, name: String) -> RingoidBuilder {
        let n = self.m.num_objects();
        let mut b = RingoidBuilder::new(&name);
        for o in self.m.objects() {
            b.object(o);
        }
        for a in 0..n {
            for c in 0..n {
                b.hom(a, c, self.moduli(a, c));
            }
        }
        b.scalar(self.ring.clone());
        let rg = self.ring.ring_group();
        for a in 0..n {
            for c in 0..n {
                let k = self.moduli(a, c).len();
                for r in 0..rg.ngens() {
                    let gr = rg.generator(r);
                    for g in 0..k {
                        let mut e = vec![0; k];
                        e[g] = 1;
                        let (x, lambda) = self.split(a, c, &e);
                        let image = self.join(a, c, self.act(a, c, &gr, x), lambda.map(|l| self.ring.ring_mul(&gr, l)));
                        b.action(a, c, r, g, image);
                    }
                }
            }
        }
        b
    }

    fn fill_compose(&self, b: &mut RingoidBuilder, op: impl Fn(usize, usize, usize, &[u64], &[u64]) -> Coords) {
        let n = self.m.num_objects();
        for a in 0..n {
            for bb in 0..n {
                for c in 0..n {
                    let (kx, ky) = (self.moduli(a, bb).len(), self.moduli(bb, c).len());
                    for j in 0..kx {
                        let mut x = vec![0; kx];
                        x[j] = 1;
                        for i in 0..ky {
                            let mut y = vec![0; ky];
                            y[i] = 1;
                            let v = op(a, bb, c, &y, &x);
                            if v.iter().any(|&t| t != 0) {
                                b.compose(a, bb, c, j, i, v);
                            }
                        }
                    }
                }
            }
        }
    }
}

/// `M⁺`: adjoins `R` to every endomorphism group, with
/// `(y + μ)(x + λ) = yx + μ·x + λ·y + λμ` and identity `0 + 1`.
pub fn unitize(m: &FiniteRingoid) -> Result<FiniteRingoid> {
    let ring = scalars_of(m)?;
    let aug = Augmented { m, ring: ring.clone() };
    let mut b = aug.builder(format!("{}+", m.name()));
    aug.fill_compose(&mut b, |a, bb, c, y, x| {
        let (xm, lambda) = aug.split(a, bb, x);
        let (ym, mu) = aug.split(bb, c, y);
        let h = m.hom(a, c);
        let mut out = m.compose(a, bb, c, ym, xm);
        if let Some(mu) = mu {
            h.add_assign(&mut out, &aug.act(a, bb, mu, xm));
        }
        if let Some(lambda) = lambda {
            h.add_assign(&mut out, &aug.act(bb, c, lambda, ym));
        }
        let scalar = match (lambda, mu) {
            (Some(l), Some(u)) => Some(ring.ring_mul(u, l)),
            _ => None,
        };
        aug.join(a, c, out, scalar)
    });
    let one = ring
        .ring_one()
        .ok_or_else(|| Error::Unsupported("scalar ring has no unit".into()))?;
    for a in 0..m.num_objects() {
        b.identity(a, aug.join(a, a, m.hom(a, a).zero(), Some(one.clone())));
    }
    b.build()
}

/// `R_M`: `R` on the diagonal, zero elsewhere.
pub fn scalar_ringoid(objects: &[String], ring: Arc<FiniteRingoid>) -> Result<FiniteRingoid> {
    let one = ring
        .ring_one()
        .ok_or_else(|| Error::Unsupported("scalar ring has no unit".into()))?
        .clone();
    let rg = ring.ring_group().clone();
    let mut b = RingoidBuilder::new(&format!("R_M({})", ring.name()));
    for o in objects {
        b.object(o);
    }
    b.scalar(ring.clone());
    for a in 0..objects.len() {
        b.hom(a, a, rg.moduli().to_vec());
        for j in 0..rg.ngens() {
            for i in 0..rg.ngens() {
                let v = ring.ring_mul(&rg.generator(i), &rg.generator(j));
                if v.iter().any(|&t| t != 0) {
                    b.compose(a, a, a, j, i, v.clone());
                }
                let w = ring.ring_mul(&rg.generator(j), &rg.generator(i));
                if w.iter().any(|&t| t != 0) {
                    b.action(a, a, j, i, w);
                }
            }
        }
        b.identity(a, one.clone());
    }
    b.build()
}

/// `M ⊕ R_M` with componentwise composition; needs `m` unital.
pub fn direct_sum_with_scalars(m: &FiniteRingoid) -> Result<FiniteRingoid> {
    let ring = scalars_of(m)?;
    if !m.is_unital() {
        return Err(Error::Unsupported(format!("{} is not unital", m.name())));
    }
    let aug = Augmented { m, ring: ring.clone() };
    let mut b = aug.builder(format!("{}+R", m.name()));
    aug.fill_compose(&mut b, |a, bb, c, y, x| {
        let (xm, lambda) = aug.split(a, bb, x);
        let (ym, mu) = aug.split(bb, c, y);
        let scalar = match (lambda, mu) {
            (Some(l), Some(u)) => Some(ring.ring_mul(u, l)),
            _ => None,
        };
        aug.join(a, c, m.compose(a, bb, c, ym, xm), scalar)
    });
    let one = ring.ring_one().unwrap();
    for a in 0..m.num_objects() {
        b.identity(a, aug.join(a, a, m.identity(a).unwrap().clone(), Some(one.clone())));
    }
    b.build()
}

fn identity_objects(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Projection `x + λ ↦ λ` from an augmented ringoid onto `R_M`.
fn scalar_part(source: Arc<FiniteRingoid>, target: Arc<FiniteRingoid>, m: &FiniteRingoid) -> Result<RingoidHom> {
    let n = m.num_objects();
    RingoidHom::from_fn(source.clone(), target.clone(), identity_objects(n), |a, b, g| {
        let k = m.hom(a, b).ngens();
        if a == b && g >= k {
            target.hom(a, a).generator(g - k)
        } else {
            target.hom(a, b).zero()
        }
    })
}

/// `π: M⁺ → R_M`, `x + λ ↦ λ`.
pub fn unitization_projection(m: &FiniteRingoid) -> Result<RingoidHom> {
    let plus = Arc::new(unitize(m)?);
    let rm = Arc::new(scalar_ringoid(m.objects(), scalars_of(m)?)?);
    scalar_part(plus, rm, m)
}

/// `π': M ⊕ R_M → R_M`.
pub fn split_projection(m: &FiniteRingoid) -> Result<RingoidHom> {
    let sum = Arc::new(direct_sum_with_scalars(m)?);
    let rm = Arc::new(scalar_ringoid(m.objects(), scalars_of(m)?)?);
    scalar_part(sum, rm, m)
}

/// The isomorphism `α: M ⊕ R_M → M⁺` with its inverse and both projections.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub alpha: RingoidHom,
    pub alpha_inv: RingoidHom,
    pub pi: RingoidHom,
    pub pi_prime: RingoidHom,
}

impl Splitting {
    /// Both composites are identities, both maps are homomorphisms and `π ∘ α = π'`.
    pub fn certify(&self) -> bool {
        let id_src = RingoidHom::identity(self.alpha.source().clone());
        let id_tgt = RingoidHom::identity(self.alpha.target().clone());
        validate_hom(&self.alpha).is_clean()
            && validate_hom(&self.alpha_inv).is_clean()
            && self.alpha_inv.after(&self.alpha).ok().as_ref() == Some(&id_src)
            && self.alpha.after(&self.alpha_inv).ok().as_ref() == Some(&id_tgt)
            && self.pi.after(&self.alpha).ok().as_ref() == Some(&self.pi_prime)
    }
}

/// `α(x, λ) = x − λe_a + λ` and `α⁻¹(y + μ) = (y + μe_a, μ)`.
pub fn unitization_splitting(m: &FiniteRingoid) -> Result<Splitting> {
    let ring = scalars_of(m)?;
    let sum = Arc::new(direct_sum_with_scalars(m)?);
    let plus = Arc::new(unitize(m)?);
    let rm = Arc::new(scalar_ringoid(m.objects(), ring.clone())?);
    let n = m.num_objects();
    let aug = Augmented { m, ring: ring.clone() };
    let (ring, aug) = (&ring, &aug);
    let image = |sign: i128| {
        move |a: usize, b: usize, g: usize| -> Coords {
            let k = m.hom(a, b).ngens();
            if a == b && g >= k {
                let rho = ring.ring_group().generator(g - k);
                let e = m.identity(a).unwrap();
                let h = m.hom(a, a);
                let shifted = h.scale(sign, &m.act(a, a, &rho, e).unwrap());
                aug.join(a, a, shifted, Some(rho))
            } else {
                let mut x = m.hom(a, b).generator(g);
                if a == b {
                    x.extend(ring.ring_group().zero());
                }
                x
            }
        }
    };
    let alpha = RingoidHom::from_fn(sum.clone(), plus.clone(), identity_objects(n), image(-1))?;
    let alpha_inv = RingoidHom::from_fn(plus.clone(), sum.clone(), identity_objects(n), image(1))?;
    Ok(Splitting {
        alpha,
        alpha_inv,
        pi: scalar_part(plus, rm.clone(), m)?,
        pi_prime: scalar_part(sum, rm, m)?,
    })
}

fn lift_augmented(f: &RingoidHom, source: FiniteRingoid, target: FiniteRingoid) -> Result<RingoidHom> {
    let (m, m2) = (f.source().clone(), f.target().clone());
    let ring = scalars_of(&m)?;
    if m2.scalar_ring().map(|r| r.as_ref()) != Some(ring.as_ref()) {
        return Err(Error::Structure("homomorphism changes the scalar ring".into()));
    }
    let target = Arc::new(target);
    let objects = f.object_map().to_vec();
    RingoidHom::from_fn(Arc::new(source), target.clone(), objects, |a, b, g| {
        let k = m.hom(a, b).ngens();
        let (fa, fb) = (f.object(a), f.object(b));
        let k2 = m2.hom(fa, fb).ngens();
        let h = target.hom(fa, fb);
        let mut out = vec![0; h.ngens()];
        if a == b && g >= k {
            out[k2 + g - k] = 1 % h.moduli()[k2 + g - k];
        } else {
            out[..k2].copy_from_slice(f.generator_image(a, b, g));
        }
        out
    })
}

/// `f⁺: M⁺ → M'⁺`, `x + λ ↦ f(x) + λ`.
pub fn unitize_hom(f: &RingoidHom) -> Result<RingoidHom> {
    lift_augmented(f, unitize(f.source())?, unitize(f.target())?)
}

/// `f ⊕ id: M ⊕ R_M → M' ⊕ R_M'`.
pub fn with_scalars_hom(f: &RingoidHom) -> Result<RingoidHom> {
    lift_augmented(
        f,
        direct_sum_with_scalars(f.source())?,
        direct_sum_with_scalars(f.target())?,
    )
}
