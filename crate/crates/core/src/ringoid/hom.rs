use std::sync::Arc;

use super::FiniteRingoid;
use crate::algebra::Coords;
use crate::error::{Error, Result};

/// Homomorphism of ringoids, given by an object map and generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingoidHom {
    source: Arc<FiniteRingoid>,
    target: Arc<FiniteRingoid>,
    object_map: Vec<usize>,
    // per source pair (a, b): image of each generator of Hom(a,b)
    images: Vec<Vec<Coords>>,
}

impl RingoidHom {
    /// `images[a * n + b][g]` is the image of generator `g` of `Hom(a,b)`.
    pub fn new(
        source: Arc<FiniteRingoid>,
        target: Arc<FiniteRingoid>,
        object_map: Vec<usize>,
        images: Vec<Vec<Coords>>,
    ) -> Result<Self> {
        let n = source.num_objects();
        if object_map.len() != n {
            return Err(Error::Structure("object map has the wrong length".into()));
        }
        if let Some(&bad) = object_map.iter().find(|&&o| o >= target.num_objects()) {
            return Err(Error::Structure(format!(
                "object map hits {bad}, which is not an object of {}",
                target.name()
            )));
        }
        if images.len() != n * n {
            return Err(Error::Structure("wrong number of hom-set images".into()));
        }
        for a in 0..n {
            for b in 0..n {
                let th = target.hom(object_map[a], object_map[b]);
                let imgs = &images[a * n + b];
                if imgs.len() != source.hom(a, b).ngens() {
                    return Err(Error::Structure(format!(
                        "Hom({}, {}): expected {} generator images",
                        source.object_name(a),
                        source.object_name(b),
                        source.hom(a, b).ngens()
                    )));
                }
                if let Some(bad) = imgs.iter().find(|x| !th.contains(x)) {
                    return Err(Error::Structure(format!("image {bad:?} out of range")));
                }
            }
        }
        Ok(RingoidHom {
            source,
            target,
            object_map,
            images,
        })
    }

    /// Builds the homomorphism from a function on generators.
    pub fn from_fn(
        source: Arc<FiniteRingoid>,
        target: Arc<FiniteRingoid>,
        object_map: Vec<usize>,
        mut image: impl FnMut(usize, usize, usize) -> Coords,
    ) -> Result<Self> {
        let n = source.num_objects();
        let mut images = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                images.push((0..source.hom(a, b).ngens()).map(|g| image(a, b, g)).collect());
            }
        }
        Self::new(source, target, object_map, images)
    }

    pub fn identity(r: Arc<FiniteRingoid>) -> Self {
        let n = r.num_objects();
        Self::from_fn(r.clone(), r.clone(), (0..n).collect(), |a, b, g| {
            r.hom(a, b).generator(g)
        })
        .expect("identity homomorphism")
    }

    pub fn source(&self) -> &Arc<FiniteRingoid> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRingoid> {
        &self.target
    }

    pub fn object(&self, a: usize) -> usize {
        self.object_map[a]
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn generator_image(&self, a: usize, b: usize, g: usize) -> &Coords {
        &self.images[a * self.source.num_objects() + b][g]
    }

    /// Image of `x ∈ Hom(a,b)` in `Hom(F a, F b)`.
    pub fn apply(&self, a: usize, b: usize, x: &[u64]) -> Coords {
        let th = self.target.hom(self.object(a), self.object(b));
        let mut acc = th.zero();
        for (g, &v) in x.iter().enumerate() {
            if v != 0 {
                th.add_assign(&mut acc, &th.scale(v as i128, self.generator_image(a, b, g)));
            }
        }
        acc
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &RingoidHom) -> Result<RingoidHom> {
        if first.target.as_ref() != self.source.as_ref() {
            return Err(Error::Structure("homomorphisms are not composable".into()));
        }
        let object_map = first.object_map.iter().map(|&o| self.object(o)).collect();
        RingoidHom::from_fn(first.source.clone(), self.target.clone(), object_map, |a, b, g| {
            self.apply(first.object(a), first.object(b), first.generator_image(a, b, g))
        })
    }

    /// Whether every hom-set map is a bijection.
    pub fn is_bijective_on_homs(&self) -> bool {
        let n = self.source.num_objects();
        let mut seen_pairs = std::collections::HashSet::new();
        for a in 0..n {
            for b in 0..n {
                let (h, th) = (self.source.hom(a, b), self.target.hom(self.object(a), self.object(b)));
                if h.order() != th.order() {
                    return false;
                }
                let images: std::collections::HashSet<Coords> = h.elements().map(|x| self.apply(a, b, &x)).collect();
                if images.len() as u128 != th.order() {
                    return false;
                }
                seen_pairs.insert((self.object(a), self.object(b)));
            }
        }
        let m = self.target.num_objects();
        seen_pairs.len() == m * m && n == m
    }
}
