//! Finite discrete ringoids and R-moduloids, encoded by structure constants.
//!
//! Every hom-set is a [`FinAbGroup`]. Composition `Hom(b,c) × Hom(a,b) → Hom(a,c)`
//! is the bilinear extension of its values on generator pairs, so all axioms
//! reduce to finite checks on generators.

mod hom;
mod tables;
mod validate;

use std::sync::Arc;

pub use hom::RingoidHom;
pub use tables::{ElementTables, TABLE_CEILING};
pub use validate::{validate, validate_hom, Side, ValidationReport, Violation};

use crate::algebra::{Coords, FinAbGroup};
use crate::error::{Error, Result};

/// Scalar ring together with its action on every hom-group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarAction {
    ring: Arc<FiniteRingoid>,
    // per pair (a, b): [r * ngens(a,b) + g] = r·g in Hom(a,b)
    action: Vec<Vec<Coords>>,
}

impl ScalarAction {
    pub fn ring(&self) -> &Arc<FiniteRingoid> {
        &self.ring
    }
}

/// Finite ringoid, possibly non-unital, possibly carrying a scalar ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRingoid {
    name: String,
    objects: Vec<String>,
    homs: Vec<FinAbGroup>,
    // per triple (a, b, c): [j * ngens(b,c) + i] = g_i ∘ g_j for g_j ∈ Hom(a,b), g_i ∈ Hom(b,c)
    compose: Vec<Vec<Coords>>,
    identities: Option<Vec<Coords>>,
    scalar: Option<ScalarAction>,
}

impl FiniteRingoid {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, a: usize) -> &str {
        &self.objects[a]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    fn pair(&self, a: usize, b: usize) -> usize {
        a * self.objects.len() + b
    }

    fn triple(&self, a: usize, b: usize, c: usize) -> usize {
        let n = self.objects.len();
        (a * n + b) * n + c
    }

    pub fn hom(&self, a: usize, b: usize) -> &FinAbGroup {
        &self.homs[self.pair(a, b)]
    }

    pub fn is_unital(&self) -> bool {
        self.identities.is_some()
    }

    pub fn identities(&self) -> Option<&[Coords]> {
        self.identities.as_deref()
    }

    pub fn identity(&self, a: usize) -> Option<&Coords> {
        self.identities.as_ref().map(|ids| &ids[a])
    }

    pub fn scalar(&self) -> Option<&ScalarAction> {
        self.scalar.as_ref()
    }

    pub fn scalar_ring(&self) -> Option<&Arc<FiniteRingoid>> {
        self.scalar.as_ref().map(|s| &s.ring)
    }

    /// Structure constant `g_i ∘ g_j` with `g_j` a generator of `Hom(a,b)` and
    /// `g_i` a generator of `Hom(b,c)`.
    pub fn constant(&self, a: usize, b: usize, c: usize, j: usize, i: usize) -> &Coords {
        let right = self.hom(b, c).ngens();
        &self.compose[self.triple(a, b, c)][j * right + i]
    }

    /// `y ∘ x` for `x ∈ Hom(a,b)`, `y ∈ Hom(b,c)`.
    pub fn compose(&self, a: usize, b: usize, c: usize, y: &[u64], x: &[u64]) -> Coords {
        let target = self.hom(a, c);
        let hab = self.hom(a, b);
        let hbc = self.hom(b, c);
        let mut acc = target.zero();
        let consts = &self.compose[self.triple(a, b, c)];
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for (i, &yi) in y.iter().enumerate() {
                if yi == 0 {
                    continue;
                }
                let k = xj as i128 * yi as i128;
                let term = target.scale(k, &consts[j * hbc.ngens() + i]);
                target.add_assign(&mut acc, &term);
            }
        }
        debug_assert_eq!(x.len(), hab.ngens());
        acc
    }

    /// `r · x` for `r` in the scalar ring and `x ∈ Hom(a,b)`.
    pub fn act(&self, a: usize, b: usize, r: &[u64], x: &[u64]) -> Result<Coords> {
        let s = self
            .scalar
            .as_ref()
            .ok_or_else(|| Error::Unsupported(format!("{} has no scalar ring", self.name)))?;
        let h = self.hom(a, b);
        let table = &s.action[self.pair(a, b)];
        let mut acc = h.zero();
        for (ri, &rv) in r.iter().enumerate() {
            if rv == 0 {
                continue;
            }
            for (g, &xv) in x.iter().enumerate() {
                if xv == 0 {
                    continue;
                }
                let term = h.scale(rv as i128 * xv as i128, &table[ri * h.ngens() + g]);
                h.add_assign(&mut acc, &term);
            }
        }
        Ok(acc)
    }

    /// Action constant `r_gen · g_gen` in `Hom(a,b)`.
    pub fn action_constant(&self, a: usize, b: usize, r: usize, g: usize) -> Option<&Coords> {
        let s = self.scalar.as_ref()?;
        Some(&s.action[self.pair(a, b)][r * self.hom(a, b).ngens() + g])
    }

    /// Multiplication in a one-object ringoid.
    pub fn ring_mul(&self, y: &[u64], x: &[u64]) -> Coords {
        debug_assert_eq!(self.num_objects(), 1);
        self.compose(0, 0, 0, y, x)
    }

    /// The additive group of a one-object ringoid.
    pub fn ring_group(&self) -> &FinAbGroup {
        self.hom(0, 0)
    }

    /// Unit of a one-object unital ringoid.
    pub fn ring_one(&self) -> Option<&Coords> {
        self.identity(0)
    }

    /// Drops identities, keeping everything else.
    pub fn forget_unit(&self) -> FiniteRingoid {
        FiniteRingoid {
            identities: None,
            ..self.clone()
        }
    }

    /// Drops the scalar ring, keeping the underlying ringoid.
    pub fn forget_scalars(&self) -> FiniteRingoid {
        FiniteRingoid {
            scalar: None,
            ..self.clone()
        }
    }

    /// Builder seeded with this ringoid's data.
    pub fn to_builder(&self) -> RingoidBuilder {
        let n = self.num_objects();
        let mut b = RingoidBuilder::new(&self.name);
        for o in &self.objects {
            b.object(o);
        }
        for a in 0..n {
            for c in 0..n {
                b.hom(a, c, self.hom(a, c).moduli().to_vec());
            }
        }
        for a in 0..n {
            for bb in 0..n {
                for c in 0..n {
                    for j in 0..self.hom(a, bb).ngens() {
                        for i in 0..self.hom(bb, c).ngens() {
                            let k = self.constant(a, bb, c, j, i);
                            if k.iter().any(|&v| v != 0) {
                                b.compose(a, bb, c, j, i, k.clone());
                            }
                        }
                    }
                }
            }
        }
        if let Some(ids) = &self.identities {
            for (a, e) in ids.iter().enumerate() {
                b.identity(a, e.clone());
            }
        }
        if let Some(s) = &self.scalar {
            b.scalar(s.ring.clone());
            for a in 0..n {
                for c in 0..n {
                    let h = self.hom(a, c);
                    for r in 0..s.ring.ring_group().ngens() {
                        for g in 0..h.ngens() {
                            let v = &s.action[self.pair(a, c)][r * h.ngens() + g];
                            if v.iter().any(|&x| x != 0) {
                                b.action(a, c, r, g, v.clone());
                            }
                        }
                    }
                }
            }
        }
        b
    }
}

/// Incremental construction with structural checks deferred to [`RingoidBuilder::build`].
/// `(a, b, c, j, i)`: generator `j` of `Hom(a,b)` followed by generator `i` of `Hom(b,c)`.
type ComposeKey = (usize, usize, usize, usize, usize);

#[derive(Clone, Debug, Default)]
pub struct RingoidBuilder {
    name: String,
    objects: Vec<String>,
    homs: Vec<((usize, usize), Vec<u64>)>,
    compose: Vec<(ComposeKey, Coords)>,
    identities: Vec<(usize, Coords)>,
    scalar: Option<Arc<FiniteRingoid>>,
    action: Vec<((usize, usize, usize, usize), Coords)>,
}

impl RingoidBuilder {
    pub fn new(name: &str) -> Self {
        RingoidBuilder {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn object(&mut self, name: &str) -> usize {
        self.objects.push(name.to_string());
        self.objects.len() - 1
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    /// Declares `Hom(a,b)`; undeclared pairs are trivial.
    pub fn hom(&mut self, a: usize, b: usize, moduli: Vec<u64>) -> &mut Self {
        self.homs.push(((a, b), moduli));
        self
    }

    /// `g_i ∘ g_j = value` for generator `j` of `Hom(a,b)` and `i` of `Hom(b,c)`.
    pub fn compose(&mut self, a: usize, b: usize, c: usize, j: usize, i: usize, value: Coords) -> &mut Self {
        self.compose.push(((a, b, c, j, i), value));
        self
    }

    pub fn identity(&mut self, a: usize, e: Coords) -> &mut Self {
        self.identities.push((a, e));
        self
    }

    pub fn scalar(&mut self, ring: Arc<FiniteRingoid>) -> &mut Self {
        self.scalar = Some(ring);
        self
    }

    /// `r_gen · g_gen = value` in `Hom(a,b)`.
    pub fn action(&mut self, a: usize, b: usize, r: usize, g: usize, value: Coords) -> &mut Self {
        self.action.push(((a, b, r, g), value));
        self
    }

    pub fn build(&self) -> Result<FiniteRingoid> {
        let n = self.objects.len();
        for (i, o) in self.objects.iter().enumerate() {
            if self.objects[..i].contains(o) {
                return Err(Error::Structure(format!("duplicate object {o}")));
            }
        }
        let obj = |x: usize| -> Result<()> {
            if x < n {
                Ok(())
            } else {
                Err(Error::Structure(format!("object index {x} out of range")))
            }
        };
        let mut homs = vec![FinAbGroup::trivial(); n * n];
        let mut declared = vec![false; n * n];
        for ((a, b), moduli) in &self.homs {
            obj(*a)?;
            obj(*b)?;
            if moduli.contains(&0) {
                return Err(Error::Structure(format!(
                    "Hom({}, {}): modulus must be at least 1",
                    self.objects[*a], self.objects[*b]
                )));
            }
            if declared[a * n + b] {
                return Err(Error::Structure(format!(
                    "Hom({}, {}) declared twice",
                    self.objects[*a], self.objects[*b]
                )));
            }
            declared[a * n + b] = true;
            homs[a * n + b] = FinAbGroup::new(moduli.clone());
        }
        let check_elem = |h: &FinAbGroup, v: &Coords, what: &str| -> Result<()> {
            if h.contains(v) {
                Ok(())
            } else {
                Err(Error::Structure(format!(
                    "{what}: coordinates {v:?} out of range for moduli {:?}",
                    h.moduli()
                )))
            }
        };

        let mut compose = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let len = homs[a * n + b].ngens() * homs[b * n + c].ngens();
                    compose.push(vec![homs[a * n + c].zero(); len]);
                }
            }
        }
        for ((a, b, c, j, i), v) in &self.compose {
            obj(*a)?;
            obj(*b)?;
            obj(*c)?;
            let (hab, hbc, hac) = (&homs[a * n + b], &homs[b * n + c], &homs[a * n + c]);
            if *j >= hab.ngens() || *i >= hbc.ngens() {
                return Err(Error::Structure(format!(
                    "compose {} {} {}: generator index out of range",
                    self.objects[*a], self.objects[*b], self.objects[*c]
                )));
            }
            check_elem(hac, v, "compose")?;
            compose[(a * n + b) * n + c][j * hbc.ngens() + i] = v.clone();
        }

        let identities = if self.identities.is_empty() {
            None
        } else {
            let mut ids: Vec<Option<Coords>> = vec![None; n];
            for (a, e) in &self.identities {
                obj(*a)?;
                check_elem(&homs[a * n + a], e, "identity")?;
                ids[*a] = Some(e.clone());
            }
            if let Some(a) = ids.iter().position(|e| e.is_none()) {
                return Err(Error::Structure(format!(
                    "identity given for some objects but not for {}",
                    self.objects[a]
                )));
            }
            Some(ids.into_iter().map(Option::unwrap).collect())
        };

        let scalar = match &self.scalar {
            None => {
                if !self.action.is_empty() {
                    return Err(Error::Structure("scalar action without a scalar ring".into()));
                }
                None
            }
            Some(ring) => {
                if ring.num_objects() != 1 {
                    return Err(Error::Structure("scalar ring must have exactly one object".into()));
                }
                let rg = ring.ring_group().ngens();
                let mut action: Vec<Vec<Coords>> = homs.iter().map(|h| vec![h.zero(); rg * h.ngens()]).collect();
                for ((a, b, r, g), v) in &self.action {
                    obj(*a)?;
                    obj(*b)?;
                    let h = &homs[a * n + b];
                    if *r >= rg || *g >= h.ngens() {
                        return Err(Error::Structure("action generator index out of range".into()));
                    }
                    check_elem(h, v, "action")?;
                    action[a * n + b][r * h.ngens() + g] = v.clone();
                }
                Some(ScalarAction {
                    ring: ring.clone(),
                    action,
                })
            }
        };

        Ok(FiniteRingoid {
            name: self.name.clone(),
            objects: self.objects.clone(),
            homs,
            compose,
            identities,
            scalar,
        })
    }
}

/// Non-unital moduloid on `objects` with every hom-group trivial.
pub fn zero_moduloid(objects: &[&str], ring: Arc<FiniteRingoid>) -> FiniteRingoid {
    let mut b = RingoidBuilder::new("zero");
    for o in objects {
        b.object(o);
    }
    b.scalar(ring);
    b.build().expect("zero moduloid is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn zero_moduloid_is_trivial() {
        let r = Arc::new(catalog::prime_field(2));
        let z = zero_moduloid(&["a"], r.clone());
        assert!(z.hom(0, 0).is_trivial());
        assert!(!z.is_unital());
        let z = zero_moduloid(&["a", "b"], Arc::new(catalog::cyclic_ring(4)));
        for a in 0..2 {
            for b in 0..2 {
                assert!(z.hom(a, b).is_trivial());
            }
        }
        assert!(validate(&z).is_clean());
    }

    #[test]
    fn builder_rejects_bad_structure() {
        let mut b = RingoidBuilder::new("bad");
        let a = b.object("a");
        b.hom(a, a, vec![2]);
        b.compose(a, a, a, 0, 0, vec![2]);
        assert!(matches!(b.build(), Err(Error::Structure(_))));
        let mut b = RingoidBuilder::new("bad");
        let a = b.object("a");
        b.hom(a, a, vec![2]);
        b.compose(a, a, a, 1, 0, vec![1]);
        assert!(matches!(b.build(), Err(Error::Structure(_))));
        let mut b = RingoidBuilder::new("bad");
        b.object("a");
        b.hom(0, 3, vec![2]);
        assert!(matches!(b.build(), Err(Error::Structure(_))));
    }

    #[test]
    fn composition_is_bilinear_extension() {
        let z4 = catalog::cyclic_ring(4);
        assert_eq!(z4.ring_mul(&[3], &[3]), vec![1]);
        assert_eq!(z4.ring_mul(&[2], &[2]), vec![0]);
        let round = z4.to_builder().build().unwrap();
        assert_eq!(round, z4);
    }
}
