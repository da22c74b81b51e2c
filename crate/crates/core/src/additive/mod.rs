//! The additive completion: formal sums of objects with matrix morphisms.

mod classes;
mod iso;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::Serialize;

pub use classes::{iso_class_table, IsoClassTable};
pub use iso::{find_isomorphism, IsoOutcome, DEFAULT_CEILING};

use crate::algebra::Coords;
use crate::error::{Error, Result};
use crate::ringoid::{validate, ElementTables, FiniteRingoid, RingoidHom};

/// Formal sum `a₁ ⊕ … ⊕ a_n` of base objects; empty is the zero object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ObjSum(pub Vec<usize>);

impl ObjSum {
    pub fn zero() -> Self {
        ObjSum(Vec::new())
    }

    pub fn single(a: usize) -> Self {
        ObjSum(vec![a])
    }

    pub fn repeat(a: usize, n: usize) -> Self {
        ObjSum(vec![a; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &ObjSum) -> ObjSum {
        let mut v = self.0.clone();
        v.extend(&other.0);
        ObjSum(v)
    }

    /// Occurrence count of each base object.
    pub fn counts(&self, num_objects: usize) -> Vec<usize> {
        let mut c = vec![0; num_objects];
        for &a in &self.0 {
            c[a] += 1;
        }
        c
    }

    /// Length first, then lexicographic.
    pub fn shortlex_cmp(&self, other: &ObjSum) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }

    /// Every sum of length at most `max_len` over `n` objects, in shortlex order.
    pub fn enumerate(n: usize, max_len: usize) -> Vec<ObjSum> {
        let mut out = vec![ObjSum::zero()];
        let mut layer = vec![ObjSum::zero()];
        for _ in 0..max_len {
            if n == 0 {
                break;
            }
            let mut next = Vec::with_capacity(layer.len() * n);
            for s in &layer {
                for a in 0..n {
                    let mut v = s.0.clone();
                    v.push(a);
                    next.push(ObjSum(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    pub fn display(&self, r: &FiniteRingoid) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        let names: Vec<&str> = self.0.iter().map(|&a| r.object_name(a)).collect();
        format!("({})", names.join(","))
    }
}

/// Matrix morphism `source → target`; entry `(i, j)` lies in `Hom(source_j, target_i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatMorphism {
    source: ObjSum,
    target: ObjSum,
    entries: Vec<Coords>,
}

impl MatMorphism {
    pub fn source(&self) -> &ObjSum {
        &self.source
    }

    pub fn target(&self) -> &ObjSum {
        &self.target
    }

    pub fn entry(&self, i: usize, j: usize) -> &Coords {
        &self.entries[i * self.source.len() + j]
    }

    pub fn entries(&self) -> &[Coords] {
        &self.entries
    }
}

impl fmt::Debug for MatMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} [", self.source.0, self.target.0)?;
        for i in 0..self.target.len() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.source.len() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.entry(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Injections and projections of `a ⊕ b`, realized as concatenation.
#[derive(Clone, Debug)]
pub struct Biproduct {
    pub sum: ObjSum,
    pub i_a: MatMorphism,
    pub i_b: MatMorphism,
    pub p_a: MatMorphism,
    pub p_b: MatMorphism,
}

/// The additive completion of a validated ringoid, with hom-sets generated on demand.
#[derive(Clone, Debug)]
pub struct AdditiveView {
    ringoid: Arc<FiniteRingoid>,
    tables: Option<Arc<ElementTables>>,
}

/// Builds the completion after checking the axioms.
pub fn complete(r: Arc<FiniteRingoid>) -> Result<AdditiveView> {
    let report = validate(&r);
    if !report.is_clean() {
        return Err(Error::Axiom(report.to_string()));
    }
    Ok(AdditiveView::new_unchecked(r))
}

impl AdditiveView {
    /// Skips validation; callers must know the ringoid satisfies the axioms.
    pub fn new_unchecked(r: Arc<FiniteRingoid>) -> Self {
        let tables = ElementTables::new(&r).ok().map(Arc::new);
        AdditiveView { ringoid: r, tables }
    }

    pub fn ringoid(&self) -> &Arc<FiniteRingoid> {
        &self.ringoid
    }

    pub fn tables(&self) -> Option<&ElementTables> {
        self.tables.as_deref()
    }

    pub fn is_unital(&self) -> bool {
        self.ringoid.is_unital()
    }

    /// `|Hom(a, b)|` in the completion.
    pub fn hom_order(&self, a: &ObjSum, b: &ObjSum) -> BigUint {
        let mut n = BigUint::from(1u32);
        for &bi in b.entries() {
            for &aj in a.entries() {
                n *= BigUint::from(self.ringoid.hom(aj, bi).order());
            }
        }
        n
    }

    pub fn morphism(&self, source: ObjSum, target: ObjSum, entries: Vec<Coords>) -> Result<MatMorphism> {
        if entries.len() != source.len() * target.len() {
            return Err(Error::Structure("matrix has the wrong number of entries".into()));
        }
        let n = self.ringoid.num_objects();
        if source.entries().iter().chain(target.entries()).any(|&o| o >= n) {
            return Err(Error::Structure("object sum names a non-object".into()));
        }
        for i in 0..target.len() {
            for j in 0..source.len() {
                let h = self.ringoid.hom(source.0[j], target.0[i]);
                if !h.contains(&entries[i * source.len() + j]) {
                    return Err(Error::Structure(format!("entry ({i},{j}) out of range")));
                }
            }
        }
        Ok(MatMorphism {
            source,
            target,
            entries,
        })
    }

    pub fn zero_morphism(&self, source: &ObjSum, target: &ObjSum) -> MatMorphism {
        let mut entries = Vec::with_capacity(source.len() * target.len());
        for &bi in target.entries() {
            for &aj in source.entries() {
                entries.push(self.ringoid.hom(aj, bi).zero());
            }
        }
        MatMorphism {
            source: source.clone(),
            target: target.clone(),
            entries,
        }
    }

    pub fn identity(&self, a: &ObjSum) -> Result<MatMorphism> {
        if !self.is_unital() {
            return Err(Error::Unsupported(format!(
                "{} has no identities, so the completion has no identity morphisms",
                self.ringoid.name()
            )));
        }
        let mut m = self.zero_morphism(a, a);
        for (k, &o) in a.entries().iter().enumerate() {
            m.entries[k * a.len() + k] = self.ringoid.identity(o).unwrap().clone();
        }
        Ok(m)
    }

    /// `g ∘ f` by matrix multiplication over the base composition.
    pub fn compose(&self, g: &MatMorphism, f: &MatMorphism) -> Result<MatMorphism> {
        if g.source != f.target {
            return Err(Error::Structure("morphisms are not composable".into()));
        }
        let (a, b, c) = (&f.source, &f.target, &g.target);
        let mut out = self.zero_morphism(a, c);
        for i in 0..c.len() {
            for j in 0..a.len() {
                let h = self.ringoid.hom(a.0[j], c.0[i]);
                let mut acc = h.zero();
                for k in 0..b.len() {
                    let term = self
                        .ringoid
                        .compose(a.0[j], b.0[k], c.0[i], g.entry(i, k), f.entry(k, j));
                    h.add_assign(&mut acc, &term);
                }
                out.entries[i * a.len() + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn add(&self, f: &MatMorphism, g: &MatMorphism) -> Result<MatMorphism> {
        if f.source != g.source || f.target != g.target {
            return Err(Error::Structure("morphisms have different shapes".into()));
        }
        let mut out = f.clone();
        for i in 0..f.target.len() {
            for j in 0..f.source.len() {
                let h = self.ringoid.hom(f.source.0[j], f.target.0[i]);
                let k = i * f.source.len() + j;
                out.entries[k] = h.add(&f.entries[k], &g.entries[k]);
            }
        }
        Ok(out)
    }

    /// Block diagonal `f ⊕ g`.
    pub fn direct_sum(&self, f: &MatMorphism, g: &MatMorphism) -> MatMorphism {
        let source = f.source.concat(&g.source);
        let target = f.target.concat(&g.target);
        let mut out = self.zero_morphism(&source, &target);
        let m = source.len();
        for i in 0..f.target.len() {
            for j in 0..f.source.len() {
                out.entries[i * m + j] = f.entry(i, j).clone();
            }
        }
        for i in 0..g.target.len() {
            for j in 0..g.source.len() {
                out.entries[(f.target.len() + i) * m + f.source.len() + j] = g.entry(i, j).clone();
            }
        }
        out
    }

    /// Canonical structure morphisms of `a ⊕ b`.
    pub fn biproduct(&self, a: &ObjSum, b: &ObjSum) -> Result<Biproduct> {
        let sum = a.concat(b);
        let ia = self.identity(a)?;
        let ib = self.identity(b)?;
        let zab = self.zero_morphism(b, a);
        let zba = self.zero_morphism(a, b);
        // i_a = [1; 0], p_a = [1 0]
        let i_a = self.stack_rows(&ia, &zba);
        let i_b = self.stack_rows(&zab, &ib);
        let p_a = self.stack_cols(&ia, &zab);
        let p_b = self.stack_cols(&zba, &ib);
        Ok(Biproduct {
            sum,
            i_a,
            i_b,
            p_a,
            p_b,
        })
    }

    fn stack_rows(&self, top: &MatMorphism, bottom: &MatMorphism) -> MatMorphism {
        let mut entries = top.entries.clone();
        entries.extend(bottom.entries.iter().cloned());
        MatMorphism {
            source: top.source.clone(),
            target: top.target.concat(&bottom.target),
            entries,
        }
    }

    fn stack_cols(&self, left: &MatMorphism, right: &MatMorphism) -> MatMorphism {
        let mut entries = Vec::new();
        for i in 0..left.target.len() {
            for j in 0..left.source.len() {
                entries.push(left.entry(i, j).clone());
            }
            for j in 0..right.source.len() {
                entries.push(right.entry(i, j).clone());
            }
        }
        MatMorphism {
            source: left.source.concat(&right.source),
            target: left.target.clone(),
            entries,
        }
    }

    /// `p_a i_a = 1_a`, `p_b i_b = 1_b` and `i_a p_a + i_b p_b = 1`.
    pub fn check_biproduct(&self, bp: &Biproduct) -> Result<[bool; 3]> {
        let a = bp.i_a.source.clone();
        let b = bp.i_b.source.clone();
        let first = self.compose(&bp.p_a, &bp.i_a)? == self.identity(&a)?;
        let second = self.compose(&bp.p_b, &bp.i_b)? == self.identity(&b)?;
        let sum = self.add(&self.compose(&bp.i_a, &bp.p_a)?, &self.compose(&bp.i_b, &bp.p_b)?)?;
        let third = sum == self.identity(&bp.sum)?;
        Ok([first, second, third])
    }

    /// Every morphism `a → b`, in lexicographic order of entry coordinates.
    pub fn morphisms<'a>(&'a self, a: &ObjSum, b: &ObjSum) -> impl Iterator<Item = MatMorphism> + 'a {
        let shape: Vec<crate::algebra::FinAbGroup> = b
            .entries()
            .iter()
            .flat_map(|&bi| a.entries().iter().map(move |&aj| (aj, bi)))
            .map(|(aj, bi)| self.ringoid.hom(aj, bi).clone())
            .collect();
        let total: u128 = shape.iter().map(|h| h.order()).product();
        let (a, b) = (a.clone(), b.clone());
        (0..total).map(move |mut idx| {
            let mut entries = vec![Vec::new(); shape.len()];
            for (e, h) in shape.iter().enumerate().rev() {
                let s = h.order();
                entries[e] = h.decode((idx % s) as u64);
                idx /= s;
            }
            MatMorphism {
                source: a.clone(),
                target: b.clone(),
                entries,
            }
        })
    }
}

/// The additive functor induced on completions by a ringoid homomorphism.
#[derive(Clone, Debug)]
pub struct CompletedFunctor {
    hom: RingoidHom,
}

pub fn map_completion(f: &RingoidHom) -> CompletedFunctor {
    CompletedFunctor { hom: f.clone() }
}

impl CompletedFunctor {
    pub fn hom(&self) -> &RingoidHom {
        &self.hom
    }

    pub fn object(&self, a: &ObjSum) -> ObjSum {
        ObjSum(a.entries().iter().map(|&o| self.hom.object(o)).collect())
    }

    /// Entrywise image of a matrix.
    pub fn apply(&self, m: &MatMorphism) -> MatMorphism {
        let (a, b) = (m.source(), m.target());
        let mut entries = Vec::with_capacity(m.entries.len());
        for i in 0..b.len() {
            for j in 0..a.len() {
                entries.push(self.hom.apply(a.0[j], b.0[i], m.entry(i, j)));
            }
        }
        MatMorphism {
            source: self.object(a),
            target: self.object(b),
            entries,
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &CompletedFunctor) -> Result<CompletedFunctor> {
        Ok(CompletedFunctor {
            hom: self.hom.after(&first.hom)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn f2() -> AdditiveView {
        complete(Arc::new(catalog::prime_field(2))).unwrap()
    }

    #[test]
    fn hom_set_sizes() {
        let v = f2();
        assert_eq!(v.morphisms(&ObjSum::single(0), &ObjSum::single(0)).count(), 2);
        assert_eq!(v.morphisms(&ObjSum::repeat(0, 2), &ObjSum::repeat(0, 2)).count(), 16);
        assert_eq!(
            v.hom_order(&ObjSum::repeat(0, 2), &ObjSum::repeat(0, 2)),
            BigUint::from(16u32)
        );
        assert_eq!(v.morphisms(&ObjSum::zero(), &ObjSum::repeat(0, 2)).count(), 1);
    }

    #[test]
    fn biproduct_of_two_copies() {
        let v = f2();
        let a = ObjSum::single(0);
        let bp = v.biproduct(&a, &a).unwrap();
        assert_eq!(v.check_biproduct(&bp).unwrap(), [true; 3]);
    }

    #[test]
    fn shortlex_enumeration() {
        let all = ObjSum::enumerate(2, 2);
        let shown: Vec<Vec<usize>> = all.iter().map(|s| s.0.clone()).collect();
        assert_eq!(
            shown,
            vec![vec![], vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
    }

    #[test]
    fn non_unital_view_has_no_identities() {
        let r = Arc::new(catalog::prime_field(2).forget_unit());
        let v = complete(r).unwrap();
        assert!(v.identity(&ObjSum::single(0)).is_err());
    }

    #[test]
    fn reduction_acts_entrywise() {
        let z4 = Arc::new(catalog::cyclic_ring(4));
        let f2 = Arc::new(catalog::prime_field(2));
        let view = complete(z4.clone()).unwrap();
        let fun = map_completion(&catalog::reduction(&z4, &f2));
        let a = ObjSum::repeat(0, 2);
        let m = view
            .morphism(a.clone(), a.clone(), vec![vec![3], vec![2], vec![1], vec![0]])
            .unwrap();
        let img = fun.apply(&m);
        assert_eq!(img.entries(), &[vec![1], vec![0], vec![1], vec![0]]);
    }
}
