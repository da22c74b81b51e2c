//! Degree-zero assembly maps: component bookkeeping for group ringoids and the
//! orbitwise map for transport groupoids of finite G-sets.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{Lattice, Matrix, Presentation, PresentationMap, PresentationSummary};
use crate::constructions::{
    group_ringoid, linearize, orbit_skeleton, transport_groupoid, FinGroupoid, GMap, GSet, GroupoidFunctor,
};
use crate::error::{Error, Result};
use crate::ktheory::{k0_bounded, k0_induced, KZeroResult};
use crate::ringoid::FiniteRingoid;

/// `⊕_c K₀(source_c) → K₀(target)` on generators.
#[derive(Clone, Debug)]
pub struct AssemblyZeroMap {
    pub bound: usize,
    /// Objects of each component (or orbit), with the chosen one first.
    pub components: Vec<Vec<usize>>,
    pub chosen: Vec<usize>,
    /// `K₀` of the ring attached to each component.
    pub parts: Vec<KZeroResult>,
    pub target: KZeroResult,
    pub map: PresentationMap<BigInt>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AssemblySummary {
    pub bound: usize,
    pub components: Vec<Vec<usize>>,
    pub source: PresentationSummary,
    pub target: PresentationSummary,
    pub matrix: Vec<Vec<String>>,
    pub well_defined: bool,
    pub isomorphism: bool,
    pub decided: bool,
}

impl AssemblyZeroMap {
    pub fn is_well_defined(&self) -> bool {
        self.map.is_well_defined()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_well_defined() && self.map.is_isomorphism()
    }

    pub fn is_decided(&self) -> bool {
        self.target.is_decided() && self.parts.iter().all(KZeroResult::is_decided)
    }

    /// First source generator of component `c`.
    fn offset(&self, c: usize) -> usize {
        self.parts[..c].iter().map(|p| p.generators.len()).sum()
    }

    pub fn summary(&self) -> AssemblySummary {
        AssemblySummary {
            bound: self.bound,
            components: self.components.clone(),
            source: self.map.source.summary(),
            target: self.map.target.summary(),
            matrix: self
                .map
                .matrix
                .row_iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
            well_defined: self.is_well_defined(),
            isomorphism: self.is_isomorphism(),
            decided: self.is_decided(),
        }
    }
}

/// Block-diagonal sum of presentations.
fn direct_sum(parts: &[&Presentation<BigInt>]) -> Presentation<BigInt> {
    let total: usize = parts.iter().map(|p| p.generators()).sum();
    let mut rows = Vec::new();
    let mut at = 0;
    for p in parts {
        for r in p.relations().basis().row_iter() {
            let mut v = vec![BigInt::from(0); total];
            v[at..at + r.len()].clone_from_slice(r);
            rows.push(v);
        }
        at += p.generators();
    }
    Presentation::from_lattice(Lattice::from_vectors(total, rows))
}

fn assemble(
    bound: usize,
    components: Vec<Vec<usize>>,
    chosen: Vec<usize>,
    parts: Vec<KZeroResult>,
    blocks: Vec<Matrix<BigInt>>,
    target: KZeroResult,
) -> AssemblyZeroMap {
    let source = direct_sum(&parts.iter().map(|p| &p.group).collect::<Vec<_>>());
    let cols = target.generators.len();
    let rows = blocks
        .iter()
        .flat_map(|b| b.row_iter().map(<[BigInt]>::to_vec))
        .collect();
    let map = PresentationMap::new(source, target.group.clone(), Matrix::from_rows(cols, rows));
    AssemblyZeroMap {
        bound,
        components,
        chosen,
        parts,
        target,
        map,
    }
}

fn one_object(r: &FiniteRingoid) -> Result<()> {
    if r.num_objects() != 1 {
        return Err(Error::Unsupported("assembly is computed over one-object rings".into()));
    }
    Ok(())
}

/// `H₀(Bπ) ⊗ K₀(R) → K₀(Rπ)`: the unit at component `c` goes to the chosen object of `c`.
pub fn assembly_zero(
    pi: &Arc<FinGroupoid>,
    r: &Arc<FiniteRingoid>,
    bound: usize,
    ceiling: u64,
) -> Result<AssemblyZeroMap> {
    one_object(r)?;
    let kr = k0_bounded(r, bound, ceiling)?;
    let rpi = Arc::new(group_ringoid(pi.clone(), r.clone())?);
    let target = k0_bounded(&rpi, bound, ceiling)?;
    let skel = orbit_skeleton(pi);
    let cols = target.generators.len();
    let blocks = skel
        .chosen
        .iter()
        .map(|&a| {
            let mut v = vec![BigInt::from(0); cols];
            v[a] = BigInt::from(1);
            Matrix::from_rows(cols, vec![v])
        })
        .collect();
    let parts = vec![kr; skel.chosen.len()];
    Ok(assemble(bound, skel.components, skel.chosen, parts, blocks, target))
}

/// `⊕_orbits K₀(R[H]) → K₀(R X̄)`, induced by the vertex-group inclusions.
pub fn equivariant_assembly_zero(
    x: &GSet,
    r: &Arc<FiniteRingoid>,
    bound: usize,
    ceiling: u64,
) -> Result<AssemblyZeroMap> {
    one_object(r)?;
    let t = Arc::new(transport_groupoid(x));
    let skel = orbit_skeleton(&t);
    let rx = Arc::new(group_ringoid(t.clone(), r.clone())?);
    let target = k0_bounded(&rx, bound, ceiling)?;
    let mut parts = Vec::new();
    let mut blocks = Vec::new();
    for &a in &skel.chosen {
        let (_, incl) = GroupoidFunctor::vertex_inclusion(t.clone(), a)?;
        let hom = linearize(&incl, r)?;
        let kh = k0_bounded(hom.source(), bound, ceiling)?;
        let m = k0_induced(&hom, &kh, &target)?;
        blocks.push(m.matrix);
        parts.push(kh);
    }
    Ok(assemble(bound, skel.components, skel.chosen, parts, blocks, target))
}

/// The degree-zero naturality square for an equivariant map.
#[derive(Clone, Debug)]
pub struct NaturalityReport {
    pub source: AssemblyZeroMap,
    pub target: AssemblyZeroMap,
    /// Orbit `c` of the source lands in orbit `orbit_map[c]` of the target.
    pub orbit_map: Vec<usize>,
    pub source_map: PresentationMap<BigInt>,
    pub target_map: PresentationMap<BigInt>,
    /// The two composites have equal integer matrices.
    pub matrices_equal: bool,
    /// The two composites agree in `K₀(R Ȳ)`.
    pub commutes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NaturalitySummary {
    pub orbit_map: Vec<usize>,
    pub matrices_equal: bool,
    pub commutes: bool,
    pub decided: bool,
}

impl NaturalityReport {
    pub fn is_decided(&self) -> bool {
        self.source.is_decided() && self.target.is_decided()
    }

    pub fn summary(&self) -> NaturalitySummary {
        NaturalitySummary {
            orbit_map: self.orbit_map.clone(),
            matrices_equal: self.matrices_equal,
            commutes: self.commutes,
            decided: self.is_decided(),
        }
    }
}

pub fn naturality_check(f: &GMap, r: &Arc<FiniteRingoid>, bound: usize, ceiling: u64) -> Result<NaturalityReport> {
    let ax = equivariant_assembly_zero(&f.source, r, bound, ceiling)?;
    let ay = equivariant_assembly_zero(&f.target, r, bound, ceiling)?;
    let tx = Arc::new(transport_groupoid(&f.source));
    let ty = Arc::new(transport_groupoid(&f.target));
    let functor = GroupoidFunctor::of_gmap(f, tx, ty)?;
    let lin = linearize(&functor, r)?;
    let target_map = k0_induced(&lin, &ax.target, &ay.target)?;
    // each orbit goes to the orbit containing the image of its chosen point
    let orbit_map: Vec<usize> = ax
        .chosen
        .iter()
        .map(|&a| {
            let y = f.map[a];
            ay.components
                .iter()
                .position(|c| c.contains(&y))
                .expect("components cover")
        })
        .collect();
    let rows_total = ay.map.matrix.rows();
    let mut rows = Vec::with_capacity(ax.map.matrix.rows());
    for (c, &d) in orbit_map.iter().enumerate() {
        for i in 0..ax.parts[c].generators.len() {
            let mut v = vec![BigInt::from(0); rows_total];
            v[ay.offset(d) + i] = BigInt::from(1);
            rows.push(v);
        }
    }
    let source_map = PresentationMap::new(
        ax.map.source.clone(),
        ay.map.source.clone(),
        Matrix::from_rows(rows_total, rows),
    );
    if !source_map.is_well_defined() {
        return Err(Error::InconsistentAtBound(
            "orbit map does not respect source relations".into(),
        ));
    }
    let down_right = ax.map.compose(&target_map);
    let right_down = source_map.compose(&ay.map);
    let matrices_equal = down_right.matrix == right_down.matrix;
    let commutes = down_right.agrees_with(&right_down);
    Ok(NaturalityReport {
        source: ax,
        target: ay,
        orbit_map,
        source_map,
        target_map,
        matrices_equal,
        commutes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additive::DEFAULT_CEILING;
    use crate::algebra::FinGroup;
    use crate::catalog;

    #[test]
    fn trivial_group_is_identity() {
        let pi = Arc::new(FinGroupoid::from_group("e", &FinGroup::cyclic(1)));
        let a = assembly_zero(&pi, &Arc::new(catalog::prime_field(2)), 3, DEFAULT_CEILING).unwrap();
        assert!(a.is_isomorphism());
        assert_eq!(a.map.matrix, Matrix::identity(1));
    }

    #[test]
    fn two_components() {
        let pi = Arc::new(FinGroupoid::discrete("pts", &["p", "q"]));
        let a = assembly_zero(&pi, &Arc::new(catalog::prime_field(2)), 2, DEFAULT_CEILING).unwrap();
        assert_eq!(a.map.source.to_string(), "Z^2");
        assert!(a.is_isomorphism());
    }

    #[test]
    fn free_orbit() {
        let c2 = Arc::new(FinGroup::cyclic(2));
        let free = GSet::cosets("C2/e", c2, &[true, false]);
        let a = equivariant_assembly_zero(&free, &Arc::new(catalog::prime_field(2)), 2, DEFAULT_CEILING).unwrap();
        assert_eq!(a.target.group.to_string(), "Z");
        assert!(a.is_isomorphism());
    }
}
