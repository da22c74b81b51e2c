use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::FiniteQuotient;
use crate::algebra::{subquotient, Coords, FinAbGroup, Lattice, Presentation};
use crate::error::{Error, Result};
use crate::ringoid::{FiniteRingoid, RingoidBuilder, RingoidHom};

/// Two-sided ideal, given by subgroup generators in each hom-group.
#[derive(Clone, Debug)]
pub struct Ideal {
    parent: Arc<FiniteRingoid>,
    // per pair (a, b)
    gens: Vec<Vec<Coords>>,
}

impl Ideal {
    pub fn new(parent: Arc<FiniteRingoid>, gens: Vec<Vec<Coords>>) -> Result<Self> {
        let n = parent.num_objects();
        if gens.len() != n * n {
            return Err(Error::Structure("ideal needs generators for every pair".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if let Some(bad) = gens[a * n + b].iter().find(|x| !parent.hom(a, b).contains(x)) {
                    return Err(Error::Structure(format!("ideal generator {bad:?} out of range")));
                }
            }
        }
        Ok(Ideal { parent, gens })
    }

    pub fn zero(parent: Arc<FiniteRingoid>) -> Self {
        let n = parent.num_objects();
        Ideal {
            parent,
            gens: vec![Vec::new(); n * n],
        }
    }

    pub fn improper(parent: Arc<FiniteRingoid>) -> Self {
        let n = parent.num_objects();
        let gens = (0..n * n)
            .map(|p| {
                let h = parent.hom(p / n, p % n);
                (0..h.ngens()).map(|g| h.generator(g)).collect()
            })
            .collect();
        Ideal { parent, gens }
    }

    pub fn parent(&self) -> &Arc<FiniteRingoid> {
        &self.parent
    }

    pub fn generators(&self, a: usize, b: usize) -> &[Coords] {
        &self.gens[a * self.parent.num_objects() + b]
    }

    pub fn contains(&self, a: usize, b: usize, x: &[u64]) -> bool {
        self.parent.hom(a, b).in_subgroup(self.generators(a, b), x)
    }

    /// The ideal as a non-unital moduloid in its own right, with its inclusion.
    pub fn as_moduloid(&self) -> Result<(FiniteRingoid, RingoidHom)> {
        let m = &self.parent;
        let n = m.num_objects();
        let subs: Vec<Subgroup> = (0..n * n)
            .map(|p| Subgroup::new(m.hom(p / n, p % n), self.generators(p / n, p % n)))
            .collect::<Result<_>>()?;
        let sub = |a: usize, b: usize| &subs[a * n + b];
        let mut bld = RingoidBuilder::new(&format!("{}.ideal", m.name()));
        for o in m.objects() {
            bld.object(o);
        }
        for a in 0..n {
            for b in 0..n {
                bld.hom(a, b, sub(a, b).group.moduli().to_vec());
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for j in 0..sub(a, b).group.ngens() {
                        for i in 0..sub(b, c).group.ngens() {
                            let v = m.compose(a, b, c, &sub(b, c).elements[i], &sub(a, b).elements[j]);
                            let v = sub(a, c).coords(&v).expect("ideal absorbs composition");
                            if v.iter().any(|&t| t != 0) {
                                bld.compose(a, b, c, j, i, v);
                            }
                        }
                    }
                }
            }
        }
        if let Some(ring) = m.scalar_ring() {
            bld.scalar(ring.clone());
            let rg = ring.ring_group();
            for a in 0..n {
                for b in 0..n {
                    for r in 0..rg.ngens() {
                        for g in 0..sub(a, b).group.ngens() {
                            let v = m.act(a, b, &rg.generator(r), &sub(a, b).elements[g])?;
                            let v = sub(a, b).coords(&v).expect("ideal closed under scalars");
                            if v.iter().any(|&t| t != 0) {
                                bld.action(a, b, r, g, v);
                            }
                        }
                    }
                }
            }
        }
        let j = Arc::new(bld.build()?);
        let inclusion = RingoidHom::from_fn(j.clone(), m.clone(), (0..n).collect(), |a, b, g| {
            sub(a, b).elements[g].clone()
        })?;
        Ok((j.as_ref().clone(), inclusion))
    }
}

/// Subgroup of a finite group, presented on its own cyclic generators.
struct Subgroup {
    lattice: Lattice<BigInt>,
    pres: Presentation<BigInt>,
    group: FinAbGroup,
    // each new generator as an element of the ambient group
    elements: Vec<Coords>,
}

impl Subgroup {
    fn new(h: &FinAbGroup, gens: &[Coords]) -> Result<Self> {
        let lattice = h.subgroup_lattice(gens);
        let (pres, basis) = subquotient(&lattice, &h.subgroup_lattice(&[]));
        let moduli: Vec<u64> = pres.normal_moduli().iter().map(|d| d.to_u64().unwrap()).collect();
        let group = FinAbGroup::new(moduli);
        let elements = (0..group.ngens())
            .map(|k| {
                let coeffs = pres.lift(k);
                let v = basis.left_apply(&coeffs);
                let v: Vec<i128> = v.iter().map(|c| c.to_i128().unwrap()).collect();
                h.reduce(&v)
            })
            .collect();
        Ok(Subgroup {
            lattice,
            pres,
            group,
            elements,
        })
    }

    /// Coordinates of an ambient element lying in the subgroup.
    fn coords(&self, x: &[u64]) -> Option<Coords> {
        let v: Vec<BigInt> = x.iter().map(|&a| BigInt::from(a)).collect();
        let c = self.lattice.coordinates(&v)?;
        Some(
            self.pres
                .normal_coords(&c)
                .iter()
                .map(|t| t.to_u64().unwrap())
                .collect(),
        )
    }
}

/// Checks that the ideal absorbs composition on both sides and is closed under scalars.
pub fn validate_ideal(j: &Ideal) -> Result<()> {
    let m = &j.parent;
    let n = m.num_objects();
    let name = |a: usize| m.object_name(a);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for x in j.generators(a, b) {
                    for g in 0..m.hom(b, c).ngens() {
                        let y = m.hom(b, c).generator(g);
                        if !j.contains(a, c, &m.compose(a, b, c, &y, x)) {
                            return Err(Error::Axiom(format!(
                                "ideal: g{g} of Hom({},{}) after {x:?} in Hom({},{}) leaves the ideal",
                                name(b),
                                name(c),
                                name(a),
                                name(b)
                            )));
                        }
                    }
                }
                for y in j.generators(b, c) {
                    for g in 0..m.hom(a, b).ngens() {
                        let x = m.hom(a, b).generator(g);
                        if !j.contains(a, c, &m.compose(a, b, c, y, &x)) {
                            return Err(Error::Axiom(format!(
                                "ideal: {y:?} in Hom({},{}) after g{g} of Hom({},{}) leaves the ideal",
                                name(b),
                                name(c),
                                name(a),
                                name(b)
                            )));
                        }
                    }
                }
            }
            if let Some(ring) = m.scalar_ring() {
                let rg = ring.ring_group();
                for x in j.generators(a, b) {
                    for r in 0..rg.ngens() {
                        if !j.contains(a, b, &m.act(a, b, &rg.generator(r), x)?) {
                            return Err(Error::Axiom(format!(
                                "ideal: r{r}·{x:?} in Hom({},{}) leaves the ideal",
                                name(a),
                                name(b)
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// `M/J` with the quotient homomorphism `M → M/J`.
pub fn quotient(j: &Ideal) -> Result<(FiniteRingoid, RingoidHom)> {
    validate_ideal(j)?;
    let m = &j.parent;
    let n = m.num_objects();
    let qs: Vec<FiniteQuotient> = (0..n * n)
        .map(|p| FiniteQuotient::of_subgroup(m.hom(p / n, p % n), j.generators(p / n, p % n)))
        .collect::<Result<_>>()?;
    let q = |a: usize, b: usize| &qs[a * n + b];
    let lift = |a: usize, b: usize, k: usize| q(a, b).lift_in(k, m.hom(a, b));
    let mut bld = RingoidBuilder::new(&format!("{}/J", m.name()));
    for o in m.objects() {
        bld.object(o);
    }
    for a in 0..n {
        for b in 0..n {
            bld.hom(a, b, q(a, b).group().moduli().to_vec());
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for jj in 0..q(a, b).group().ngens() {
                    for i in 0..q(b, c).group().ngens() {
                        let v = m.compose(a, b, c, &lift(b, c, i), &lift(a, b, jj));
                        let v = q(a, c).project_u64(&v);
                        if v.iter().any(|&t| t != 0) {
                            bld.compose(a, b, c, jj, i, v);
                        }
                    }
                }
            }
        }
    }
    if m.is_unital() {
        for a in 0..n {
            bld.identity(a, q(a, a).project_u64(m.identity(a).unwrap()));
        }
    }
    if let Some(ring) = m.scalar_ring() {
        bld.scalar(ring.clone());
        let rg = ring.ring_group();
        for a in 0..n {
            for b in 0..n {
                for r in 0..rg.ngens() {
                    for g in 0..q(a, b).group().ngens() {
                        let v = m.act(a, b, &rg.generator(r), &lift(a, b, g))?;
                        let v = q(a, b).project_u64(&v);
                        if v.iter().any(|&t| t != 0) {
                            bld.action(a, b, r, g, v);
                        }
                    }
                }
            }
        }
    }
    let quo = Arc::new(bld.build()?);
    let map = RingoidHom::from_fn(m.clone(), quo.clone(), (0..n).collect(), |a, b, g| {
        q(a, b).project_u64(&m.hom(a, b).generator(g))
    })?;
    Ok((quo.as_ref().clone(), map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ringoid::{validate, validate_hom};

    #[test]
    fn z4_mod_two_is_f2() {
        let z4 = Arc::new(catalog::cyclic_ring(4));
        let j = Ideal::new(z4.clone(), vec![vec![vec![2]]]).unwrap();
        let (q, map) = quotient(&j).unwrap();
        assert_eq!(q.hom(0, 0).order(), 2);
        assert!(validate(&q).is_clean());
        assert!(validate_hom(&map).is_clean());
        assert_eq!(map.apply(0, 0, &[3]), vec![1]);
        let (sub, inc) = j.as_moduloid().unwrap();
        assert_eq!(sub.hom(0, 0).order(), 2);
        assert!(validate(&sub).is_clean());
        assert!(validate_hom(&inc).is_clean());
        assert_eq!(inc.apply(0, 0, &[1]), vec![2]);
    }

    #[test]
    fn zero_and_improper_ideals() {
        let m = Arc::new(catalog::matrix_ring_f2());
        let (q, _) = quotient(&Ideal::zero(m.clone())).unwrap();
        assert_eq!(q.hom(0, 0).order(), 16);
        let (q, _) = quotient(&Ideal::improper(m.clone())).unwrap();
        assert!(q.hom(0, 0).is_trivial());
        assert!(validate(&q).is_clean());
    }

    #[test]
    fn one_sided_ideal_rejected() {
        // matrices with zero second column form a left ideal only
        let m = Arc::new(catalog::matrix_ring_f2());
        let j = Ideal::new(m, vec![vec![vec![1, 0, 0, 0], vec![0, 0, 1, 0]]]).unwrap();
        assert!(matches!(validate_ideal(&j), Err(Error::Axiom(_))));
    }
}
