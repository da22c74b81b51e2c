use serde::Serialize;

use crate::additive::{AdditiveView, MatMorphism, ObjSum};
use crate::error::{Error, Result};

/// Highest level that can be enumerated.
pub const MAX_LEVEL: usize = 4;
/// Tuples enumerated per level before the enumeration is cut off.
pub const LEVEL_CEILING: usize = 1 << 20;

/// Level `n` of the nerve: `n`-tuples of sums with total length at most `bound`.
///
/// The biproduct chosen for a run of entries is their concatenation.
#[derive(Clone, Debug)]
pub struct NerveLevel {
    pub n: usize,
    pub bound: usize,
    pub objects: Vec<Vec<ObjSum>>,
    /// The enumeration stopped at `LEVEL_CEILING`.
    pub partial: bool,
}

/// Every `n`-tuple over `num_objects` base objects with total length at most `bound`.
pub fn nerve_level(num_objects: usize, n: usize, bound: usize) -> Result<NerveLevel> {
    if n > MAX_LEVEL {
        return Err(Error::Unsupported(format!(
            "nerve levels above {MAX_LEVEL} are not enumerated"
        )));
    }
    let sums = ObjSum::enumerate(num_objects, bound);
    let mut objects: Vec<Vec<ObjSum>> = vec![Vec::new()];
    let mut partial = false;
    for _ in 0..n {
        let mut next = Vec::new();
        'outer: for t in &objects {
            let used: usize = t.iter().map(ObjSum::len).sum();
            for s in sums.iter().filter(|s| used + s.len() <= bound) {
                if next.len() >= LEVEL_CEILING {
                    partial = true;
                    break 'outer;
                }
                let mut u = t.clone();
                u.push(s.clone());
                next.push(u);
            }
        }
        objects = next;
    }
    Ok(NerveLevel {
        n,
        bound,
        objects,
        partial,
    })
}

/// `σ_i`: `σ_0` drops the first entry, `σ_n` the last, and `σ_i` merges entries `i` and `i+1`.
pub fn face<T: Clone>(i: usize, t: &[T], merge: impl Fn(&T, &T) -> T) -> Vec<T> {
    let n = t.len();
    assert!(n >= 1 && i <= n, "face σ_{i} undefined on a {n}-tuple");
    if i == 0 {
        return t[1..].to_vec();
    }
    if i == n {
        return t[..n - 1].to_vec();
    }
    let mut out = t[..i - 1].to_vec();
    out.push(merge(&t[i - 1], &t[i]));
    out.extend_from_slice(&t[i + 1..]);
    out
}

/// `τ_i`: inserts `zero` after the first `i` entries.
pub fn degeneracy<T: Clone>(i: usize, t: &[T], zero: T) -> Vec<T> {
    assert!(i <= t.len(), "degeneracy τ_{i} undefined on a {}-tuple", t.len());
    let mut out = t[..i].to_vec();
    out.push(zero);
    out.extend_from_slice(&t[i..]);
    out
}

pub fn object_face(i: usize, t: &[ObjSum]) -> Vec<ObjSum> {
    face(i, t, |a, b| a.concat(b))
}

pub fn object_degeneracy(i: usize, t: &[ObjSum]) -> Vec<ObjSum> {
    degeneracy(i, t, ObjSum::zero())
}

pub fn morphism_face(view: &AdditiveView, i: usize, t: &[MatMorphism]) -> Vec<MatMorphism> {
    face(i, t, |f, g| view.direct_sum(f, g))
}

pub fn morphism_degeneracy(view: &AdditiveView, i: usize, t: &[MatMorphism]) -> Vec<MatMorphism> {
    degeneracy(i, t, view.zero_morphism(&ObjSum::zero(), &ObjSum::zero()))
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SimplicialReport {
    pub max_level: usize,
    pub bound: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SimplicialReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks one identity on objects and on a componentwise morphism.
struct Checker<'v> {
    view: &'v AdditiveView,
    report: SimplicialReport,
}

impl Checker<'_> {
    fn same(
        &mut self,
        name: &str,
        t: &[ObjSum],
        lhs: Vec<ObjSum>,
        rhs: Vec<ObjSum>,
        fl: Vec<MatMorphism>,
        fr: Vec<MatMorphism>,
    ) {
        self.report.checked += 1;
        if lhs != rhs || fl != fr {
            self.report.failures.push(format!(
                "{name} fails on {:?}",
                t.iter().map(|s| &s.0).collect::<Vec<_>>()
            ));
        }
    }
}

/// A deterministic non-identity endomorphism per entry: the last element of each hom-group.
fn sample_morphism(view: &AdditiveView, s: &ObjSum) -> MatMorphism {
    let r = view.ringoid();
    let mut entries = Vec::with_capacity(s.len() * s.len());
    for &bi in s.entries() {
        for &aj in s.entries() {
            let h = r.hom(aj, bi);
            entries.push(h.moduli().iter().map(|d| d - 1).collect());
        }
    }
    view.morphism(s.clone(), s.clone(), entries).expect("in range")
}

/// All face and degeneracy identities on levels `≤ max_level` with total length `≤ bound`.
pub fn check_simplicial_identities(view: &AdditiveView, max_level: usize, bound: usize) -> Result<SimplicialReport> {
    let n_obj = view.ringoid().num_objects();
    let mut c = Checker {
        view,
        report: SimplicialReport {
            max_level,
            bound,
            ..Default::default()
        },
    };
    for n in 0..=max_level {
        let level = nerve_level(n_obj, n, bound)?;
        if level.partial {
            c.report
                .failures
                .push(format!("level {n} enumeration cut off at {LEVEL_CEILING}"));
        }
        for t in &level.objects {
            let m: Vec<MatMorphism> = t.iter().map(|s| sample_morphism(view, s)).collect();
            let v = c.view;
            // σ_i σ_j = σ_{j-1} σ_i for i < j
            if n >= 2 {
                for j in 0..=n {
                    for i in 0..j {
                        let l = object_face(i, &object_face(j, t));
                        let r = object_face(j - 1, &object_face(i, t));
                        let fl = morphism_face(v, i, &morphism_face(v, j, &m));
                        let fr = morphism_face(v, j - 1, &morphism_face(v, i, &m));
                        c.same(&format!("σ{i}σ{j} = σ{}σ{i}", j - 1), t, l, r, fl, fr);
                    }
                }
            }
            // τ_i τ_j = τ_{j+1} τ_i for i ≤ j
            for j in 0..=n {
                for i in 0..=j {
                    let l = object_degeneracy(i, &object_degeneracy(j, t));
                    let r = object_degeneracy(j + 1, &object_degeneracy(i, t));
                    let fl = morphism_degeneracy(v, i, &morphism_degeneracy(v, j, &m));
                    let fr = morphism_degeneracy(v, j + 1, &morphism_degeneracy(v, i, &m));
                    c.same(&format!("τ{i}τ{j} = τ{}τ{i}", j + 1), t, l, r, fl, fr);
                }
            }
            // mixed identities, τ_j from level n to n+1
            for j in 0..=n {
                let st = object_degeneracy(j, t);
                let sm = morphism_degeneracy(v, j, &m);
                for i in 0..=n + 1 {
                    let l = object_face(i, &st);
                    let fl = morphism_face(v, i, &sm);
                    let (name, r, fr) = if i < j {
                        (
                            format!("σ{i}τ{j} = τ{}σ{i}", j - 1),
                            object_degeneracy(j - 1, &object_face(i, t)),
                            morphism_degeneracy(v, j - 1, &morphism_face(v, i, &m)),
                        )
                    } else if i == j || i == j + 1 {
                        (format!("σ{i}τ{j} = id"), t.clone(), m.clone())
                    } else {
                        (
                            format!("σ{i}τ{j} = τ{j}σ{}", i - 1),
                            object_degeneracy(j, &object_face(i - 1, t)),
                            morphism_degeneracy(v, j, &morphism_face(v, i - 1, &m)),
                        )
                    };
                    c.same(&name, t, l, r, fl, fr);
                }
            }
        }
    }
    Ok(c.report)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::additive::complete;
    use crate::catalog;

    fn s(v: &[usize]) -> ObjSum {
        ObjSum(v.to_vec())
    }

    #[test]
    fn faces_and_degeneracies() {
        let (a, b) = (s(&[0]), s(&[1]));
        let t = vec![a.clone(), b.clone()];
        assert_eq!(object_face(1, &t), vec![s(&[0, 1])]);
        assert_eq!(object_face(0, &t), vec![b.clone()]);
        assert_eq!(object_face(2, &t), vec![a.clone()]);
        assert_eq!(object_degeneracy(0, &[]), vec![ObjSum::zero()]);
    }

    #[test]
    fn identities_hold_over_f2() {
        let view = complete(Arc::new(catalog::prime_field(2))).unwrap();
        let rep = check_simplicial_identities(&view, 3, 3).unwrap();
        assert!(rep.holds(), "{:?}", rep.failures);
        assert!(rep.checked > 100);
    }

    #[test]
    fn level_sizes() {
        // compositions of at most 2 into 2 parts, each part any length
        let l = nerve_level(1, 2, 2).unwrap();
        assert_eq!(l.objects.len(), 6);
    }
}
