use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::additive::{complete, AdditiveView, MatMorphism, ObjSum};
use crate::algebra::{Coords, FinGroup, Matrix, Presentation, PresentationMap, PresentationSummary};
use crate::error::{Error, Result};
use crate::ringoid::FiniteRingoid;

/// Invertible endomorphisms of a sum, with their multiplication table.
#[derive(Clone, Debug)]
pub struct GeneralLinear {
    pub object: ObjSum,
    /// Elements in lexicographic order of entries.
    pub elements: Vec<MatMorphism>,
    /// `mul(i, j)` is `elements[i] ∘ elements[j]`.
    pub group: FinGroup,
    index: HashMap<Vec<Coords>, usize>,
}

impl GeneralLinear {
    pub fn index_of(&self, m: &MatMorphism) -> Option<usize> {
        self.index.get(m.entries()).copied()
    }
}

/// `GL(a)` by exhausting `Hom(a, a)`.
pub fn gl(view: &AdditiveView, a: &ObjSum, ceiling: u64) -> Result<GeneralLinear> {
    let size = view.hom_order(a, a);
    if size.to_u64().is_none_or(|s| s > ceiling) {
        return Err(Error::Undecided(format!(
            "Hom({a:?}, {a:?}) has {size} elements > {ceiling}"
        )));
    }
    let one = view.identity(a)?;
    let all: Vec<MatMorphism> = view.morphisms(a, a).collect();
    // u is invertible when some v has v∘u = 1; then v is also a right inverse
    let mut invertible = vec![false; all.len()];
    for (i, u) in all.iter().enumerate() {
        if invertible[i] {
            continue;
        }
        for (j, v) in all.iter().enumerate() {
            if view.compose(v, u)? == one {
                invertible[i] = true;
                invertible[j] = true;
                break;
            }
        }
    }
    let elements: Vec<MatMorphism> = all
        .iter()
        .zip(&invertible)
        .filter(|(_, &k)| k)
        .map(|(m, _)| m.clone())
        .collect();
    let index: HashMap<Vec<Coords>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, m)| (m.entries().to_vec(), i))
        .collect();
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for x in &elements {
        for y in &elements {
            let p = view.compose(x, y)?;
            table.push(index[p.entries()] as u32);
        }
    }
    let group = FinGroup::from_table_unchecked(n, table, index[one.entries()])?;
    Ok(GeneralLinear {
        object: a.clone(),
        elements,
        group,
        index,
    })
}

/// `j(x) = i_a x p_a + i_b p_b`: block-diagonal `x ⊕ 1_b`.
pub fn stabilize(view: &AdditiveView, x: &MatMorphism, b: &ObjSum) -> Result<MatMorphism> {
    Ok(view.direct_sum(x, &view.identity(b)?))
}

/// Per-rank abelianizations of `GL_n` over a one-object ring and the maps between them.
#[derive(Clone, Debug)]
pub struct KOneResult {
    pub n_max: usize,
    pub orders: Vec<usize>,
    pub abelianizations: Vec<Presentation<BigInt>>,
    /// `maps[n]`: `GL_n^ab → GL_{n+1}^ab` induced by `x ↦ x ⊕ 1`.
    pub maps: Vec<PresentationMap<BigInt>>,
    /// Every stabilization embedding was an injective homomorphism.
    pub embeddings_injective: bool,
    /// The last map is an isomorphism.
    pub stabilized: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KOneSummary {
    pub n_max: usize,
    pub orders: Vec<usize>,
    pub abelianizations: Vec<PresentationSummary>,
    pub maps: Vec<StabilizationSummary>,
    pub stabilized: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilizationSummary {
    pub from: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl KOneResult {
    pub fn summary(&self) -> KOneSummary {
        KOneSummary {
            n_max: self.n_max,
            orders: self.orders.clone(),
            abelianizations: self.abelianizations.iter().map(|p| p.summary()).collect(),
            maps: self
                .maps
                .iter()
                .enumerate()
                .map(|(n, m)| StabilizationSummary {
                    from: n,
                    injective: m.is_injective(),
                    surjective: m.is_surjective(),
                })
                .collect(),
            stabilized: self.stabilized,
        }
    }
}

/// `GL_n^ab` for `n ≤ n_max` with the stabilization maps.
pub fn k1_bounded(r: &Arc<FiniteRingoid>, n_max: usize, ceiling: u64) -> Result<KOneResult> {
    if r.num_objects() != 1 {
        return Err(Error::Unsupported("K₁ is computed for one-object rings".into()));
    }
    let view = complete(r.clone())?;
    let groups: Vec<GeneralLinear> = (0..=n_max)
        .map(|n| gl(&view, &ObjSum::repeat(0, n), ceiling))
        .collect::<Result<_>>()?;
    let abs: Vec<(Presentation<BigInt>, Vec<Vec<BigInt>>)> =
        groups.iter().map(|g| g.group.abelianization_map()).collect();
    let one = ObjSum::single(0);
    let mut maps = Vec::new();
    let mut embeddings_injective = true;
    for n in 0..n_max {
        let (small, big) = (&groups[n], &groups[n + 1]);
        let images: Vec<usize> = small
            .elements
            .iter()
            .map(|x| {
                let y = stabilize(&view, x, &one)?;
                big.index_of(&y)
                    .ok_or_else(|| Error::Axiom("stabilized matrix is not invertible".into()))
            })
            .collect::<Result<_>>()?;
        let g = &small.group;
        let hom =
            (0..g.order()).all(|a| (0..g.order()).all(|b| images[g.mul(a, b)] == big.group.mul(images[a], images[b])));
        let mut seen = images.clone();
        seen.sort_unstable();
        seen.dedup();
        embeddings_injective &= hom && seen.len() == images.len();
        // rows: each abelianization generator, lifted to an element of GL_n
        let (ps, words) = &abs[n];
        let (pt, twords) = &abs[n + 1];
        let k = ps.generators();
        let mut rows = Vec::with_capacity(k);
        for gen in 0..k {
            let target: Vec<BigInt> = (0..k).map(|i| BigInt::from((i == gen) as i32)).collect();
            let x = words
                .iter()
                .position(|w| ps.same_class(w, &target))
                .expect("every generator class has an element");
            rows.push(twords[images[x]].clone());
        }
        maps.push(PresentationMap::new(
            ps.clone(),
            pt.clone(),
            Matrix::from_rows(pt.generators(), rows),
        ));
    }
    let stabilized = maps.last().is_some_and(|m| m.is_isomorphism());
    Ok(KOneResult {
        n_max,
        orders: groups.iter().map(|g| g.group.order()).collect(),
        abelianizations: abs.into_iter().map(|(p, _)| p).collect(),
        maps,
        embeddings_injective,
        stabilized,
    })
}

/// Determinant of a square matrix over a commutative one-object ring, by cofactor expansion.
pub fn determinant(r: &FiniteRingoid, m: &MatMorphism) -> Coords {
    let n = m.source().len();
    assert_eq!(n, m.target().len(), "determinant needs a square matrix");
    let h = r.ring_group();
    fn rec(r: &FiniteRingoid, m: &MatMorphism, rows: &[usize], cols: &mut Vec<usize>) -> Coords {
        let h = r.ring_group();
        if rows.is_empty() {
            return r.ring_one().cloned().unwrap_or_else(|| h.zero());
        }
        let mut acc = h.zero();
        for k in 0..cols.len() {
            let c = cols.remove(k);
            let minor = rec(r, m, &rows[1..], cols);
            let term = r.ring_mul(m.entry(rows[0], c), &minor);
            acc = if k % 2 == 0 {
                h.add(&acc, &term)
            } else {
                h.sub(&acc, &term)
            };
            cols.insert(k, c);
        }
        acc
    }
    let rows: Vec<usize> = (0..n).collect();
    let out = rec(r, m, &rows, &mut (0..n).collect());
    debug_assert!(h.contains(&out));
    out
}

/// Whether the determinant hits every unit of the ring on `GL_n`.
pub fn determinant_surjective(r: &FiniteRingoid, g: &GeneralLinear) -> bool {
    let h = r.ring_group();
    let one = match r.ring_one() {
        Some(e) => e.clone(),
        None => return false,
    };
    let units: Vec<Coords> = h
        .elements()
        .filter(|x| h.elements().any(|y| r.ring_mul(x, &y) == one))
        .collect();
    let dets: Vec<Coords> = g.elements.iter().map(|m| determinant(r, m)).collect();
    units.iter().all(|u| dets.contains(u))
}
