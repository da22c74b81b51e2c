use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::iso::cardinality_profile;
use super::{find_isomorphism, AdditiveView, IsoOutcome, ObjSum};
use crate::error::{Error, Result};

/// Isomorphism classes of all sums of length at most `bound`.
#[derive(Clone, Debug, Serialize)]
pub struct IsoClassTable {
    pub bound: usize,
    /// Shortlex-least member of each class, in order of discovery.
    pub representatives: Vec<ObjSum>,
    /// Every enumerated sum with its class, in shortlex order.
    pub members: Vec<(ObjSum, usize)>,
    /// `oplus[i][j]` is the class of `rep_i ⊕ rep_j` when that sum is within the bound.
    pub oplus: Vec<Vec<Option<usize>>>,
    /// Pairs whose search hit the ceiling; they were treated as non-isomorphic.
    pub undecided: Vec<(ObjSum, ObjSum)>,
}

impl IsoClassTable {
    pub fn num_classes(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_of(&self, s: &ObjSum) -> Option<usize> {
        self.members.iter().find(|(m, _)| m == s).map(|(_, c)| *c)
    }

    pub fn is_decided(&self) -> bool {
        self.undecided.is_empty()
    }

    /// The table obtained by keeping only sums of length at most `bound`.
    pub fn restrict(&self, bound: usize) -> IsoClassTable {
        assert!(bound <= self.bound);
        let mut remap = vec![None; self.representatives.len()];
        let mut representatives = Vec::new();
        for (c, r) in self.representatives.iter().enumerate() {
            if r.len() <= bound {
                remap[c] = Some(representatives.len());
                representatives.push(r.clone());
            }
        }
        let members: Vec<(ObjSum, usize)> = self
            .members
            .iter()
            .filter(|(m, _)| m.len() <= bound)
            .map(|(m, c)| (m.clone(), remap[*c].expect("representative is shortlex-least")))
            .collect();
        let undecided = self
            .undecided
            .iter()
            .filter(|(x, y)| x.len() <= bound && y.len() <= bound)
            .cloned()
            .collect();
        let oplus = oplus_table(&representatives, &members, bound);
        IsoClassTable {
            bound,
            representatives,
            members,
            oplus,
            undecided,
        }
    }
}

fn oplus_table(reps: &[ObjSum], members: &[(ObjSum, usize)], bound: usize) -> Vec<Vec<Option<usize>>> {
    let index: HashMap<&ObjSum, usize> = members.iter().map(|(m, c)| (m, *c)).collect();
    reps.iter()
        .map(|x| {
            reps.iter()
                .map(|y| {
                    let s = x.concat(y);
                    (s.len() <= bound).then(|| index[&s])
                })
                .collect()
        })
        .collect()
}

/// Classifies every sum of length at most `bound` up to isomorphism.
pub fn iso_class_table(view: &AdditiveView, bound: usize, ceiling: u64) -> Result<IsoClassTable> {
    if !view.is_unital() {
        return Err(Error::Unsupported("iso classes need a unital ringoid".into()));
    }
    let n = view.ringoid().num_objects();
    let sums = ObjSum::enumerate(n, bound);
    let mut representatives: Vec<ObjSum> = Vec::new();
    let mut profiles: Vec<Vec<BigUint>> = Vec::new();
    let mut members = Vec::with_capacity(sums.len());
    let mut undecided = Vec::new();
    for s in sums {
        let profile = cardinality_profile(view, &s);
        let counts = s.counts(n);
        let outcomes: Vec<IsoOutcome> = representatives
            .par_iter()
            .zip(profiles.par_iter())
            .map(|(rep, p)| {
                if p != &profile {
                    IsoOutcome::NotIsomorphic
                } else if rep.counts(n) == counts {
                    permutation_iso(view, rep, &s)
                } else {
                    find_isomorphism(view, rep, &s, ceiling)
                }
            })
            .collect();
        match outcomes.iter().position(IsoOutcome::is_found) {
            Some(c) => members.push((s, c)),
            None => {
                for (rep, o) in representatives.iter().zip(&outcomes) {
                    if o.is_undecided() {
                        undecided.push((rep.clone(), s.clone()));
                    }
                }
                members.push((s.clone(), representatives.len()));
                representatives.push(s);
                profiles.push(profile);
            }
        }
    }
    let oplus = oplus_table(&representatives, &members, bound);
    Ok(IsoClassTable {
        bound,
        representatives,
        members,
        oplus,
        undecided,
    })
}

/// Permutation matrix between rearrangements of the same objects, certified by multiplication.
fn permutation_iso(view: &AdditiveView, a: &ObjSum, b: &ObjSum) -> IsoOutcome {
    let r = view.ringoid();
    let mut used = vec![false; a.len()];
    let mut entries = view.zero_morphism(a, b).entries().to_vec();
    let mut ventries = view.zero_morphism(b, a).entries().to_vec();
    for (i, &bi) in b.entries().iter().enumerate() {
        let j = (0..a.len()).find(|&j| !used[j] && a.0[j] == bi).expect("same multiset");
        used[j] = true;
        let e = r.identity(bi).unwrap();
        entries[i * a.len() + j] = e.clone();
        ventries[j * b.len() + i] = e.clone();
    }
    let u = view.morphism(a.clone(), b.clone(), entries).unwrap();
    let v = view.morphism(b.clone(), a.clone(), ventries).unwrap();
    let certified =
        view.compose(&v, &u).ok() == view.identity(a).ok() && view.compose(&u, &v).ok() == view.identity(b).ok();
    if certified {
        IsoOutcome::Found { u, v }
    } else {
        IsoOutcome::Undecided {
            reason: "permutation witness failed certification".into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additive::{complete, DEFAULT_CEILING};
    use crate::catalog;
    use std::sync::Arc;

    #[test]
    fn f2_classes_are_ranks() {
        let v = complete(Arc::new(catalog::prime_field(2))).unwrap();
        let t = iso_class_table(&v, 3, DEFAULT_CEILING).unwrap();
        assert_eq!(t.num_classes(), 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(t.oplus[i][j], (i + j <= 3).then_some(i + j));
            }
        }
    }

    #[test]
    fn zero_ring_has_one_class() {
        let v = complete(Arc::new(catalog::zero_ring())).unwrap();
        let t = iso_class_table(&v, 2, DEFAULT_CEILING).unwrap();
        assert_eq!(t.num_classes(), 1);
    }

    #[test]
    fn restriction_matches_smaller_bound() {
        let v = complete(Arc::new(catalog::f2_times_f2())).unwrap();
        let big = iso_class_table(&v, 3, DEFAULT_CEILING).unwrap();
        let small = iso_class_table(&v, 2, DEFAULT_CEILING).unwrap();
        let r = big.restrict(2);
        assert_eq!(r.representatives, small.representatives);
        assert_eq!(r.members, small.members);
        assert_eq!(r.oplus, small.oplus);
        assert_eq!(small.num_classes(), 3);
    }
}
