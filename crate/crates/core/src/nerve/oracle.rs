use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use super::presentation::{GroupPresentation, Word};
use crate::additive::{complete, iso_class_table, ObjSum};
use crate::algebra::{Matrix, Presentation, PresentationMap, PresentationSummary};
use crate::error::{Error, Result};
use crate::ktheory::{k0_bounded, KZeroResult};
use crate::ringoid::FiniteRingoid;

/// `π₁` of the 2-truncated realization of the isomorphism nerve, within a bound.
#[derive(Clone, Debug)]
pub struct NerveKZero {
    pub bound: usize,
    /// One generator per sum of length at most `bound`, in shortlex order.
    pub generators: Vec<ObjSum>,
    /// Unreduced presentation: a 2-cell per pair and per isomorphism.
    pub raw: GroupPresentation,
    pub simplified: GroupPresentation,
    /// Abelianization of the simplified presentation.
    pub group: Presentation<BigInt>,
    /// Abelianization of the raw presentation, kept for the comparison map.
    pub full: Presentation<BigInt>,
    /// Isomorphism searches that hit the ceiling; those 2-cells are missing.
    pub undecided: usize,
}

impl NerveKZero {
    pub fn is_decided(&self) -> bool {
        self.undecided == 0
    }

    pub fn generator_index(&self, s: &ObjSum) -> Option<usize> {
        self.generators.iter().position(|g| g == s)
    }

    /// Raw relators with generators spelled as sums, for comparing bounds.
    pub fn relators_by_sum(&self) -> Vec<Vec<(ObjSum, i8)>> {
        self.raw
            .relators
            .iter()
            .map(|w| w.iter().map(|&(g, e)| (self.generators[g].clone(), e)).collect())
            .collect()
    }
}

fn sum_name(s: &ObjSum) -> String {
    if s.is_empty() {
        "g()".into()
    } else {
        let parts: Vec<String> = s.entries().iter().map(usize::to_string).collect();
        format!("g({})", parts.join(","))
    }
}

/// Builds the presentation from the iso classes of sums of length at most `bound`.
pub fn k0_via_nerve(r: &Arc<FiniteRingoid>, bound: usize, ceiling: u64) -> Result<NerveKZero> {
    if !r.is_unital() {
        return Err(Error::Unsupported(format!("{} is not unital", r.name())));
    }
    let view = complete(r.clone())?;
    let table = iso_class_table(&view, bound, ceiling)?;
    let generators = ObjSum::enumerate(r.num_objects(), bound);
    let index: HashMap<&ObjSum, usize> = generators.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut relators: Vec<Word> = Vec::new();
    // 2-cells from N₂: (a)(b) = (a ⊕ b)
    for a in &generators {
        for b in generators.iter().filter(|b| a.len() + b.len() <= bound) {
            relators.push(vec![(index[a], 1), (index[b], 1), (index[&a.concat(b)], -1)]);
        }
    }
    // 2-cells from isomorphisms; a spanning tree of each class suffices
    for (m, c) in &table.members {
        let rep = &table.representatives[*c];
        if m != rep {
            relators.push(vec![(index[m], 1), (index[rep], -1)]);
        }
    }
    let raw = GroupPresentation::new(generators.iter().map(sum_name).collect(), relators);
    let full = raw.abelianization();
    let (simplified, _) = raw.simplify();
    let group = simplified.abelianization();
    Ok(NerveKZero {
        bound,
        generators,
        raw,
        simplified,
        group,
        full,
        undecided: table.undecided.len(),
    })
}

/// Comparison of the Grothendieck completion with the nerve presentation.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub bound: usize,
    pub bounded: KZeroResult,
    pub nerve: NerveKZero,
    /// `[o] ↦ (o)` on base objects.
    pub comparison: PresentationMap<BigInt>,
    pub invariants_equal: bool,
    pub comparison_iso: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSummary {
    pub bound: usize,
    pub bounded: PresentationSummary,
    pub nerve: PresentationSummary,
    pub simplified: String,
    pub invariants_equal: bool,
    pub comparison_iso: bool,
    pub decided: bool,
}

impl OracleReport {
    pub fn matches(&self) -> bool {
        self.invariants_equal && self.comparison_iso
    }

    pub fn is_decided(&self) -> bool {
        self.bounded.is_decided() && self.nerve.is_decided()
    }

    pub fn summary(&self) -> OracleSummary {
        OracleSummary {
            bound: self.bound,
            bounded: self.bounded.group.summary(),
            nerve: self.nerve.group.summary(),
            simplified: self.nerve.simplified.to_string(),
            invariants_equal: self.invariants_equal,
            comparison_iso: self.comparison_iso,
            decided: self.is_decided(),
        }
    }
}

pub fn oracle_compare(r: &Arc<FiniteRingoid>, bound: usize, ceiling: u64) -> Result<OracleReport> {
    let bounded = k0_bounded(r, bound, ceiling)?;
    let nerve = k0_via_nerve(r, bound, ceiling)?;
    let n = nerve.generators.len();
    let rows = bounded
        .generators
        .iter()
        .map(|o| {
            let mut v = vec![BigInt::from(0); n];
            if let Some(i) = nerve.generator_index(o) {
                v[i] = BigInt::from(1);
            }
            v
        })
        .collect();
    let comparison = PresentationMap::new(bounded.group.clone(), nerve.full.clone(), Matrix::from_rows(n, rows));
    let invariants_equal = bounded.group == nerve.group;
    let comparison_iso = comparison.is_well_defined() && comparison.is_isomorphism();
    Ok(OracleReport {
        bound,
        bounded,
        nerve,
        comparison,
        invariants_equal,
        comparison_iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additive::DEFAULT_CEILING;
    use crate::catalog;

    #[test]
    fn f2_reduces_to_one_generator() {
        let r = Arc::new(catalog::prime_field(2));
        let k = k0_via_nerve(&r, 3, DEFAULT_CEILING).unwrap();
        assert_eq!(k.generators.len(), 4);
        assert_eq!(k.simplified.num_generators(), 1);
        assert!(k.simplified.relators.is_empty());
        assert_eq!(k.group.to_string(), "Z");
    }

    #[test]
    fn zero_ring_is_trivial() {
        let r = Arc::new(catalog::zero_ring());
        let k = k0_via_nerve(&r, 2, DEFAULT_CEILING).unwrap();
        assert_eq!(k.group.to_string(), "0");
    }

    #[test]
    fn z4_matches() {
        let r = Arc::new(catalog::cyclic_ring(4));
        let rep = oracle_compare(&r, 3, DEFAULT_CEILING).unwrap();
        assert!(rep.matches());
        assert_eq!(rep.nerve.group.to_string(), "Z");
    }
}
