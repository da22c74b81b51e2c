use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{AdditiveView, MatMorphism, ObjSum};
use crate::ringoid::ElementTables;

/// Default bound on the number of candidate matrices `a → b`.
pub const DEFAULT_CEILING: u64 = 1 << 20;

/// Result of an exhaustive isomorphism search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `u: a → b` and `v: b → a` with both composites verified to be identities.
    Found {
        u: MatMorphism,
        v: MatMorphism,
    },
    NotIsomorphic,
    Undecided {
        reason: String,
    },
}

impl IsoOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, IsoOutcome::Found { .. })
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, IsoOutcome::Undecided { .. })
    }
}

/// Hom-cardinalities against every base object; isomorphic sums agree here.
pub(crate) fn cardinality_profile(view: &AdditiveView, s: &ObjSum) -> Vec<BigUint> {
    let n = view.ringoid().num_objects();
    let mut out = Vec::with_capacity(2 * n);
    for c in 0..n {
        let c = ObjSum::single(c);
        out.push(view.hom_order(&c, s));
        out.push(view.hom_order(s, &c));
    }
    out
}

/// Searches `Hom(a, b)` in lexicographic order for an isomorphism.
///
/// For each candidate `u` a left inverse is solved row by row; a left inverse
/// of an invertible `u` is its inverse, so the first one found decides `u`.
pub fn find_isomorphism(view: &AdditiveView, a: &ObjSum, b: &ObjSum, ceiling: u64) -> IsoOutcome {
    if !view.is_unital() {
        return IsoOutcome::Undecided {
            reason: "isomorphisms need identities".into(),
        };
    }
    if cardinality_profile(view, a) != cardinality_profile(view, b) {
        return IsoOutcome::NotIsomorphic;
    }
    let Some(tables) = view.tables() else {
        return IsoOutcome::Undecided {
            reason: "hom-sets too large to tabulate".into(),
        };
    };
    let space = view.hom_order(a, b);
    let total = match space.to_u64() {
        Some(t) if t <= ceiling => t,
        _ => {
            return IsoOutcome::Undecided {
                reason: format!("bound exceeded: {space} candidates > {ceiling}"),
            }
        }
    };
    let search = Search::new(tables, a, b);
    for i in 0..a.len() {
        let row_space: u128 = (0..b.len()).map(|k| tables.size(b.0[k], a.0[i]) as u128).product();
        if row_space > ceiling as u128 {
            return IsoOutcome::Undecided {
                reason: format!("bound exceeded: inverse rows have {row_space} candidates > {ceiling}"),
            };
        }
    }
    let hit = (0..total as usize)
        .into_par_iter()
        .find_first(|&idx| search.try_candidate(idx as u64).is_some());
    match hit {
        None => IsoOutcome::NotIsomorphic,
        Some(idx) => {
            let (u, v) = search.try_candidate(idx as u64).unwrap();
            let u = search.to_morphism(view, a, b, &u);
            let v = search.to_morphism(view, b, a, &v);
            // certify with coordinate arithmetic, independent of the tables
            let ok = view.compose(&v, &u).ok() == view.identity(a).ok()
                && view.compose(&u, &v).ok() == view.identity(b).ok();
            assert!(ok, "table search produced an uncertified witness");
            IsoOutcome::Found { u, v }
        }
    }
}

struct Search<'t> {
    t: &'t ElementTables,
    a: Vec<usize>,
    b: Vec<usize>,
    // entry sizes of u, row-major n×m
    u_sizes: Vec<u32>,
}

impl<'t> Search<'t> {
    fn new(t: &'t ElementTables, a: &ObjSum, b: &ObjSum) -> Self {
        let (a, b) = (a.0.clone(), b.0.clone());
        let mut u_sizes = Vec::with_capacity(a.len() * b.len());
        for &bi in &b {
            for &aj in &a {
                u_sizes.push(t.size(aj, bi));
            }
        }
        Search { t, a, b, u_sizes }
    }

    fn decode(sizes: &[u32], mut idx: u64) -> Vec<u32> {
        let mut out = vec![0; sizes.len()];
        for (slot, &s) in out.iter_mut().zip(sizes).rev() {
            *slot = (idx % s as u64) as u32;
            idx /= s as u64;
        }
        out
    }

    fn delta(&self, obj: usize, on_diagonal: bool) -> u32 {
        if on_diagonal {
            self.t.identity(obj).unwrap()
        } else {
            0
        }
    }

    /// Returns `(u, v)` when candidate `idx` is invertible.
    fn try_candidate(&self, idx: u64) -> Option<(Vec<u32>, Vec<u32>)> {
        let t = self.t;
        let (m, n) = (self.a.len(), self.b.len());
        let u = Self::decode(&self.u_sizes, idx);
        let mut v = vec![0u32; m * n];
        for i in 0..m {
            let ai = self.a[i];
            let sizes: Vec<u32> = self.b.iter().map(|&bk| t.size(bk, ai)).collect();
            let count: u64 = sizes.iter().map(|&s| s as u64).product();
            let mut found = None;
            'rows: for r in 0..count {
                let row = Self::decode(&sizes, r);
                for j in 0..m {
                    let aj = self.a[j];
                    let mut acc = 0;
                    for k in 0..n {
                        let p = t.mul(aj, self.b[k], ai, row[k], u[k * m + j]);
                        acc = t.add(aj, ai, acc, p);
                    }
                    if acc != self.delta(ai, i == j) {
                        continue 'rows;
                    }
                }
                found = Some(row);
                break;
            }
            v[i * n..(i + 1) * n].copy_from_slice(&found?);
        }
        for i in 0..n {
            let bi = self.b[i];
            for k in 0..n {
                let bk = self.b[k];
                let mut acc = 0;
                for j in 0..m {
                    let p = t.mul(bk, self.a[j], bi, u[i * m + j], v[j * n + k]);
                    acc = t.add(bk, bi, acc, p);
                }
                if acc != self.delta(bi, i == k) {
                    return None;
                }
            }
        }
        Some((u, v))
    }

    fn to_morphism(&self, view: &AdditiveView, src: &ObjSum, tgt: &ObjSum, idx: &[u32]) -> MatMorphism {
        let r = view.ringoid();
        let mut entries = Vec::with_capacity(idx.len());
        for (i, &ti) in tgt.entries().iter().enumerate() {
            for (j, &sj) in src.entries().iter().enumerate() {
                entries.push(r.hom(sj, ti).decode(idx[i * src.len() + j] as u64));
            }
        }
        view.morphism(src.clone(), tgt.clone(), entries)
            .expect("decoded witness")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additive::complete;
    use crate::catalog;
    use std::sync::Arc;

    #[test]
    fn identity_found_over_f2() {
        let v = complete(Arc::new(catalog::prime_field(2))).unwrap();
        let a = ObjSum::single(0);
        match find_isomorphism(&v, &a, &a, DEFAULT_CEILING) {
            IsoOutcome::Found { u, .. } => assert_eq!(u, v.identity(&a).unwrap()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rank_one_not_rank_two() {
        let v = complete(Arc::new(catalog::prime_field(2))).unwrap();
        let out = find_isomorphism(&v, &ObjSum::single(0), &ObjSum::repeat(0, 2), DEFAULT_CEILING);
        assert_eq!(out, IsoOutcome::NotIsomorphic);
    }

    #[test]
    fn least_witness_is_the_swap() {
        let v = complete(Arc::new(catalog::prime_field(2))).unwrap();
        let a = ObjSum::repeat(0, 2);
        match find_isomorphism(&v, &a, &a, DEFAULT_CEILING) {
            IsoOutcome::Found { u, .. } => {
                assert_eq!(u.entries(), &[vec![0], vec![1], vec![1], vec![0]]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ceiling_gives_undecided() {
        let v = complete(Arc::new(catalog::prime_field(2))).unwrap();
        let a = ObjSum::repeat(0, 3);
        assert!(find_isomorphism(&v, &a, &a, 100).is_undecided());
    }
}
