use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::additive::{complete, iso_class_table, IsoClassTable, ObjSum};
use crate::algebra::{Lattice, Matrix, Presentation, PresentationMap, PresentationSummary};
use crate::constructions::{scalar_ringoid, unitization_projection, unitize};
use crate::error::{Error, Result};
use crate::ringoid::{validate_hom, FiniteRingoid, RingoidHom};

/// Bounded `K₀`: the free abelian group on base objects modulo every isomorphism
/// found among sums of length at most `bound`.
///
/// The true group is a quotient of this one; relations that only appear
/// beyond the bound are missing.
#[derive(Clone, Debug)]
pub struct KZeroResult {
    pub bound: usize,
    pub group: Presentation<BigInt>,
    /// Generator `i` is the class of the one-term sum `(i)`.
    pub generators: Vec<ObjSum>,
    pub table: IsoClassTable,
    /// The relation lattice is the same at `bound - 1`.
    pub stabilized: bool,
    /// Least `L ≥ 2` from which the relation lattice no longer changes up to `bound`.
    pub stabilized_at: Option<usize>,
}

impl KZeroResult {
    pub fn is_decided(&self) -> bool {
        self.table.is_decided()
    }

    pub fn relations(&self) -> &Lattice<BigInt> {
        self.group.relations()
    }

    /// Class of a sum as a vector over the generators.
    pub fn class_vector(&self, s: &ObjSum) -> Vec<BigInt> {
        counts_vector(s, self.generators.len())
    }

    pub fn summary(&self) -> KZeroSummary {
        KZeroSummary {
            bound: self.bound,
            group: self.group.summary(),
            generators: self.generators.iter().map(|g| g.0.clone()).collect(),
            classes: self.table.num_classes(),
            stabilized: self.stabilized,
            stabilized_at: self.stabilized_at,
            undecided: self.table.undecided.len(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KZeroSummary {
    pub bound: usize,
    pub group: PresentationSummary,
    pub generators: Vec<Vec<usize>>,
    pub classes: usize,
    pub stabilized: bool,
    pub stabilized_at: Option<usize>,
    pub undecided: usize,
}

pub(crate) fn counts_vector(s: &ObjSum, n: usize) -> Vec<BigInt> {
    s.counts(n).into_iter().map(BigInt::from).collect()
}

/// One relation `vec(member) - vec(rep)` per classified sum.
pub(crate) fn relation_lattice(table: &IsoClassTable, n: usize) -> Lattice<BigInt> {
    let mut rows = Vec::new();
    for (m, c) in &table.members {
        let rep = &table.representatives[*c];
        if m != rep {
            let v: Vec<BigInt> = counts_vector(m, n)
                .into_iter()
                .zip(counts_vector(rep, n))
                .map(|(a, b)| a - b)
                .collect();
            if v.iter().any(|x| x != &BigInt::from(0)) {
                rows.push(v);
            }
        }
    }
    Lattice::from_vectors(n, rows)
}

/// `K₀` of a validated unital ringoid from sums of length at most `bound`.
pub fn k0_bounded(r: &Arc<FiniteRingoid>, bound: usize, ceiling: u64) -> Result<KZeroResult> {
    if !r.is_unital() {
        return Err(Error::Unsupported(format!(
            "{} is not unital; use the relative group",
            r.name()
        )));
    }
    let view = complete(r.clone())?;
    let table = iso_class_table(&view, bound, ceiling)?;
    Ok(k0_from_table(table, r.num_objects()))
}

pub(crate) fn k0_from_table(table: IsoClassTable, n: usize) -> KZeroResult {
    let bound = table.bound;
    let lattices: Vec<Lattice<BigInt>> = (0..=bound).map(|l| relation_lattice(&table.restrict(l), n)).collect();
    let top = &lattices[bound];
    let stabilized = bound >= 2 && &lattices[bound - 1] == top;
    let stabilized_at = if stabilized {
        let mut at = bound;
        while at > 2 && &lattices[at - 2] == top {
            at -= 1;
        }
        Some(at)
    } else {
        None
    };
    KZeroResult {
        bound,
        group: Presentation::from_lattice(top.clone()),
        generators: (0..n).map(ObjSum::single).collect(),
        table,
        stabilized,
        stabilized_at,
    }
}

/// `[a] ↦ [F a]` on generators, checked against both relation lattices.
pub fn k0_induced(f: &RingoidHom, source: &KZeroResult, target: &KZeroResult) -> Result<PresentationMap<BigInt>> {
    let n = source.generators.len();
    let m = target.generators.len();
    let rows = (0..n)
        .map(|a| {
            let mut v = vec![BigInt::from(0); m];
            v[f.object(a)] = BigInt::from(1);
            v
        })
        .collect();
    let map = PresentationMap::new(source.group.clone(), target.group.clone(), Matrix::from_rows(m, rows));
    let bad = map.violated_relations();
    if let Some(rel) = bad.first() {
        return Err(Error::InconsistentAtBound(format!(
            "relation {rel:?} of {} is not preserved in {} at bound {}",
            f.source().name(),
            f.target().name(),
            source.bound
        )));
    }
    Ok(map)
}

/// Degree-zero relative group: the kernel of `K₀(M⁺) → K₀(R_M)`.
#[derive(Clone, Debug)]
pub struct RelativeKZero {
    pub bound: usize,
    pub group: Presentation<BigInt>,
    /// Kernel generators as vectors over the generators of `K₀(M⁺)`.
    pub basis: Matrix<BigInt>,
    pub unitized: KZeroResult,
    pub scalars: KZeroResult,
    pub projection: PresentationMap<BigInt>,
}

impl RelativeKZero {
    pub fn is_decided(&self) -> bool {
        self.unitized.is_decided() && self.scalars.is_decided()
    }

    /// The kernel lattice inside `ℤ^{objects}`, relations of `K₀(M⁺)` included.
    pub fn kernel_lattice(&self) -> Lattice<BigInt> {
        self.projection.kernel_lattice()
    }
}

/// `K₀` of a moduloid with scalars through its unitization; the unit, if any, is ignored.
pub fn k0_relative(m: &FiniteRingoid, bound: usize, ceiling: u64) -> Result<RelativeKZero> {
    let ring = m
        .scalar_ring()
        .cloned()
        .ok_or_else(|| Error::Unsupported(format!("{} has no scalar ring", m.name())))?;
    let plus = Arc::new(unitize(m)?);
    let rm = Arc::new(scalar_ringoid(m.objects(), ring)?);
    let pi = unitization_projection(m)?;
    let report = validate_hom(&pi);
    if !report.is_clean() {
        return Err(Error::Axiom(report.to_string()));
    }
    let unitized = k0_bounded(&plus, bound, ceiling)?;
    let scalars = k0_bounded(&rm, bound, ceiling)?;
    let projection = k0_induced(&pi, &unitized, &scalars)?;
    let (group, basis) = projection.kernel();
    Ok(RelativeKZero {
        bound,
        group,
        basis,
        unitized,
        scalars,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additive::DEFAULT_CEILING;
    use crate::catalog;

    #[test]
    fn f2_is_z_and_stabilizes_at_two() {
        let k = k0_bounded(&Arc::new(catalog::prime_field(2)), 3, DEFAULT_CEILING).unwrap();
        assert_eq!(k.group.to_string(), "Z");
        assert!(k.stabilized);
        assert_eq!(k.stabilized_at, Some(2));
    }

    #[test]
    fn zero_ring_is_trivial() {
        let k = k0_bounded(&Arc::new(catalog::zero_ring()), 2, DEFAULT_CEILING).unwrap();
        assert_eq!(k.group.to_string(), "0");
    }

    #[test]
    fn ideal_two_in_z4_has_trivial_relative_group() {
        let r = k0_relative(&catalog::two_z4(), 2, DEFAULT_CEILING).unwrap();
        assert_eq!(r.unitized.group.to_string(), "Z");
        assert_eq!(r.group.to_string(), "0");
    }

    #[test]
    fn reduction_induces_identity() {
        let z4 = Arc::new(catalog::cyclic_ring(4));
        let z2 = Arc::new(catalog::cyclic_ring(2));
        let f = catalog::reduction(&z4, &z2);
        let a = k0_bounded(&z4, 2, DEFAULT_CEILING).unwrap();
        let b = k0_bounded(&z2, 2, DEFAULT_CEILING).unwrap();
        let map = k0_induced(&f, &a, &b).unwrap();
        assert!(map.is_isomorphism());
    }
}
