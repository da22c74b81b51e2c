use std::sync::Arc;

use super::groupoid::{FinGroupoid, GroupoidFunctor};
use super::tensor::tensor;
use crate::catalog::cyclic_ring;
use crate::error::{Error, Result};
use crate::ringoid::{validate, validate_hom, FiniteRingoid, RingoidBuilder, RingoidHom};

/// A finite commutative unital ring at each object and a ring isomorphism per arrow, functorially.
#[derive(Clone, Debug)]
pub struct PiRing {
    groupoid: Arc<FinGroupoid>,
    rings: Vec<Arc<FiniteRingoid>>,
    // twists[f]: R_source(f) → R_target(f)
    twists: Vec<RingoidHom>,
}

fn check_ring(r: &FiniteRingoid) -> Result<()> {
    if r.num_objects() != 1 || !r.is_unital() {
        return Err(Error::Unsupported(format!(
            "{} is not a one-object unital ring",
            r.name()
        )));
    }
    let report = validate(r);
    if !report.is_clean() {
        return Err(Error::Axiom(format!("{}: {report}", r.name())));
    }
    let h = r.ring_group();
    for i in 0..h.ngens() {
        for j in 0..i {
            let (x, y) = (h.generator(i), h.generator(j));
            if r.ring_mul(&x, &y) != r.ring_mul(&y, &x) {
                return Err(Error::Axiom(format!("{}: g{i}·g{j} ≠ g{j}·g{i}", r.name())));
            }
        }
    }
    Ok(())
}

impl PiRing {
    pub fn new(groupoid: Arc<FinGroupoid>, rings: Vec<Arc<FiniteRingoid>>, twists: Vec<RingoidHom>) -> Result<Self> {
        if rings.len() != groupoid.num_objects() || twists.len() != groupoid.num_arrows() {
            return Err(Error::Structure(
                "π-ring needs a ring per object and a twist per arrow".into(),
            ));
        }
        for r in &rings {
            check_ring(r)?;
        }
        for (f, t) in twists.iter().enumerate() {
            let arr = groupoid.arrow(f);
            if t.source().as_ref() != rings[arr.source].as_ref() || t.target().as_ref() != rings[arr.target].as_ref() {
                return Err(Error::Structure(format!("twist of {} has the wrong rings", arr.name)));
            }
            let report = validate_hom(t);
            if !report.is_clean() {
                return Err(Error::Axiom(format!("twist of {}: {report}", arr.name)));
            }
            if !t.is_bijective_on_homs() {
                return Err(Error::Axiom(format!("twist of {} is not bijective", arr.name)));
            }
        }
        let pr = PiRing {
            groupoid,
            rings,
            twists,
        };
        pr.check_functorial()?;
        Ok(pr)
    }

    /// Every object gets `ring` and every arrow acts trivially.
    pub fn trivial(groupoid: Arc<FinGroupoid>, ring: Arc<FiniteRingoid>) -> Result<Self> {
        let rings = vec![ring.clone(); groupoid.num_objects()];
        let twists = vec![RingoidHom::identity(ring); groupoid.num_arrows()];
        PiRing::new(groupoid, rings, twists)
    }

    fn check_functorial(&self) -> Result<()> {
        let g = &self.groupoid;
        for a in 0..g.num_objects() {
            let id = g.identity(a);
            if self.twists[id] != RingoidHom::identity(self.rings[a].clone()) {
                return Err(Error::Axiom(format!("identity {} acts nontrivially", g.arrow(id).name)));
            }
        }
        for f in 0..g.num_arrows() {
            for h in 0..g.num_arrows() {
                let Some(fh) = g.then(f, h) else { continue };
                let r = self.rings[g.arrow(f).source].ring_group();
                for k in 0..r.ngens() {
                    let direct = self.twists[fh].generator_image(0, 0, k);
                    let stepwise = self.twists[h].apply(0, 0, self.twists[f].generator_image(0, 0, k));
                    if direct != &stepwise {
                        return Err(Error::Axiom(format!(
                            "non-functorial action: {} then {} disagrees with {} on g{k}",
                            g.arrow(f).name,
                            g.arrow(h).name,
                            g.arrow(fh).name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn groupoid(&self) -> &Arc<FinGroupoid> {
        &self.groupoid
    }

    pub fn ring(&self, a: usize) -> &Arc<FiniteRingoid> {
        &self.rings[a]
    }

    pub fn twist(&self, f: usize) -> &RingoidHom {
        &self.twists[f]
    }

    /// One ring everywhere and identity twists.
    pub fn is_trivial(&self) -> bool {
        let r0 = &self.rings[0];
        self.rings.iter().all(|r| r == r0) && self.twists.iter().all(|t| *t == RingoidHom::identity(r0.clone()))
    }
}

/// Offset of arrow `f` in the listing of `Hom(a, b)`.
fn position(g: &FinGroupoid, a: usize, b: usize, f: usize) -> usize {
    g.hom(a, b).iter().position(|&h| h == f).expect("arrow in hom-set")
}

/// `Rπ` for a π-ring: `Hom(a,b)` is free over `R_b` on the arrows `a → b`.
///
/// With `x = ρ·h` in `Hom(a,b)` and `y = σ·g` in `Hom(b,c)`, `y∘x = σ g(ρ)·(h then g)`.
pub fn twisted_group_ringoid(pr: &PiRing) -> Result<FiniteRingoid> {
    let g = &pr.groupoid;
    let n = g.num_objects();
    let mut bld = RingoidBuilder::new(&format!("{}[{}]", pr.rings[0].name(), g.name()));
    for o in g.objects() {
        bld.object(o);
    }
    for a in 0..n {
        for b in 0..n {
            let rb = pr.rings[b].ring_group();
            bld.hom(a, b, rb.moduli().repeat(g.hom(a, b).len()));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (kb, kc) = (pr.rings[b].ring_group().ngens(), pr.rings[c].ring_group().ngens());
                let hom_ac = g.hom(a, c).len();
                for (ph, &h) in g.hom(a, b).iter().enumerate() {
                    for (pg, &gg) in g.hom(b, c).iter().enumerate() {
                        let hg = g.then(h, gg).expect("composable");
                        let at = position(g, a, c, hg);
                        for rho in 0..kb {
                            let twisted = pr.twists[gg].generator_image(0, 0, rho);
                            for sigma in 0..kc {
                                let coeff = pr.rings[c].ring_mul(&pr.rings[c].ring_group().generator(sigma), twisted);
                                let mut v = vec![0; hom_ac * kc];
                                v[at * kc..(at + 1) * kc].copy_from_slice(&coeff);
                                if coeff.iter().any(|&t| t != 0) {
                                    bld.compose(a, b, c, ph * kb + rho, pg * kc + sigma, v);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    for a in 0..n {
        let ka = pr.rings[a].ring_group().ngens();
        let mut e = vec![0; g.hom(a, a).len() * ka];
        let at = position(g, a, a, g.identity(a));
        e[at * ka..(at + 1) * ka].copy_from_slice(pr.rings[a].ring_one().unwrap());
        bld.identity(a, e);
    }
    if pr.is_trivial() {
        let ring = pr.rings[0].clone();
        let rg = ring.ring_group();
        let k = rg.ngens();
        bld.scalar(ring.clone());
        for a in 0..n {
            for b in 0..n {
                let m = g.hom(a, b).len();
                for r in 0..k {
                    for p in 0..m {
                        for rho in 0..k {
                            let coeff = ring.ring_mul(&rg.generator(r), &rg.generator(rho));
                            if coeff.iter().all(|&t| t == 0) {
                                continue;
                            }
                            let mut v = vec![0; m * k];
                            v[p * k..(p + 1) * k].copy_from_slice(&coeff);
                            bld.action(a, b, r, p * k + rho, v);
                        }
                    }
                }
            }
        }
    }
    bld.build()
}

/// `Rπ` for a commutative unital ring `R`, as an `R`-moduloid.
pub fn group_ringoid(pi: Arc<FinGroupoid>, ring: Arc<FiniteRingoid>) -> Result<FiniteRingoid> {
    twisted_group_ringoid(&PiRing::trivial(pi, ring)?)
}

/// `Rπ → Rπ'` induced by a functor, sending `ρ·h` to `ρ·F(h)`.
pub fn linearize(f: &GroupoidFunctor, ring: &Arc<FiniteRingoid>) -> Result<RingoidHom> {
    let src = Arc::new(group_ringoid(f.source.clone(), ring.clone())?);
    let tgt = Arc::new(group_ringoid(f.target.clone(), ring.clone())?);
    let (gs, gt) = (&f.source, &f.target);
    let k = ring.ring_group().ngens();
    RingoidHom::from_fn(src.clone(), tgt.clone(), f.objects.clone(), |a, b, gen| {
        let h = gs.hom(a, b)[gen / k];
        let (fa, fb) = (f.objects[a], f.objects[b]);
        let at = position(gt, fa, fb, f.arrows[h]);
        let mut v = tgt.hom(fa, fb).zero();
        v[at * k + gen % k] = 1;
        v
    })
}

/// `θ: Rπ → (ℤ/N)π ⊗ R` with `N` the additive exponent of `R`, sending `ρ·h` to `h ⊗ ρ`.
///
/// Over a finite `R` the integral group ringoid can be replaced by its reduction
/// mod `N`, since `ℤπ ⊗ R = (ℤ/N)π ⊗ R`.
pub fn group_ringoid_tensor_iso(pi: Arc<FinGroupoid>, ring: Arc<FiniteRingoid>) -> Result<RingoidHom> {
    let n = ring.ring_group().exponent();
    let zn = Arc::new(cyclic_ring(n));
    let zpi = Arc::new(group_ringoid(pi.clone(), zn)?.forget_scalars());
    let t = tensor(zpi.clone(), Arc::new(ring.forget_scalars()))?;
    let src = Arc::new(group_ringoid(pi.clone(), ring.clone())?);
    let k = ring.ring_group().ngens();
    let objects = (0..pi.num_objects()).map(|a| t.object(a, 0)).collect();
    RingoidHom::from_fn(src, t.ringoid().clone(), objects, |a, b, gen| {
        let mut x = zpi.hom(a, b).zero();
        x[gen / k] = 1;
        t.pure((a, b), (0, 0), &x, &ring.ring_group().generator(gen % k))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FinGroup;
    use crate::catalog;

    fn c2() -> Arc<FinGroupoid> {
        Arc::new(FinGroupoid::from_group("C2", &FinGroup::cyclic(2)))
    }

    #[test]
    fn f2_c2_has_four_elements() {
        let f2 = Arc::new(catalog::prime_field(2));
        let r = group_ringoid(c2(), f2).unwrap();
        assert_eq!(r.hom(0, 0).order(), 4);
        assert!(validate(&r).is_clean());
        // (1·g)(1·g) = 1·e
        assert_eq!(r.compose(0, 0, 0, &[0, 1], &[0, 1]), vec![1, 0]);
    }

    #[test]
    fn theta_is_certified() {
        let f2 = Arc::new(catalog::prime_field(2));
        let theta = group_ringoid_tensor_iso(c2(), f2).unwrap();
        assert!(validate_hom(&theta).is_clean());
        assert!(theta.is_bijective_on_homs());
    }

    #[test]
    fn swap_twist() {
        let r = Arc::new(catalog::f2_times_f2());
        let swap = RingoidHom::new(r.clone(), r.clone(), vec![0], vec![vec![vec![0, 1], vec![1, 0]]]).unwrap();
        let pi = c2();
        let twists = (0..2)
            .map(|f| {
                if f == pi.identity(0) {
                    RingoidHom::identity(r.clone())
                } else {
                    swap.clone()
                }
            })
            .collect();
        let pr = PiRing::new(pi.clone(), vec![r.clone(); 1], twists).unwrap();
        let tw = twisted_group_ringoid(&pr).unwrap();
        assert!(validate(&tw).is_clean());
        assert!(tw.scalar().is_none());
        let plain = group_ringoid(pi, r).unwrap();
        assert_ne!(tw.hom(0, 0).moduli(), &[] as &[u64]);
        assert_eq!(tw.hom(0, 0).order(), plain.hom(0, 0).order());
    }

    #[test]
    fn non_functorial_twist_rejected() {
        let r = Arc::new(catalog::f2_times_f2());
        let swap = RingoidHom::new(r.clone(), r.clone(), vec![0], vec![vec![vec![0, 1], vec![1, 0]]]).unwrap();
        let pi = c2();
        let err = PiRing::new(pi, vec![r; 1], vec![swap.clone(), swap]);
        assert!(matches!(err, Err(Error::Axiom(_))));
    }
}
