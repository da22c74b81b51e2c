use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use super::k0::{counts_vector, k0_bounded, k0_induced, k0_relative, KZeroResult, RelativeKZero};
use crate::additive::ObjSum;
use crate::algebra::{subquotient, Lattice, Presentation, PresentationMap};
use crate::constructions::{quotient, unitize, Ideal};
use crate::error::{Error, Result};
use crate::ringoid::{validate_hom, FiniteRingoid, RingoidHom};

/// Comparison of `K₀` of the sums of length `≥ 2` (with `0`) against `K₀` of everything.
#[derive(Clone, Debug)]
pub struct CofinalityReport {
    pub bound: usize,
    /// Every sum within `bound - 2` lands in the subcategory after adding one of its objects.
    pub strictly_cofinal: bool,
    pub full: KZeroResult,
    pub sub: Presentation<BigInt>,
    pub map: PresentationMap<BigInt>,
    pub injective: bool,
    pub surjective: bool,
}

impl CofinalityReport {
    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective
    }

    pub fn summary(&self) -> CheckSummary {
        CheckSummary {
            bound: self.bound,
            groups: vec![self.sub.to_string(), self.full.group.to_string()],
            holds: self.strictly_cofinal && self.is_isomorphism(),
            decided: self.full.is_decided(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub bound: usize,
    pub groups: Vec<String>,
    pub holds: bool,
    pub decided: bool,
}

fn in_sub(s: &ObjSum) -> bool {
    s.is_empty() || s.len() >= 2
}

/// `K₀` of the full subcategory on sums of length `0` or `≥ 2`, compared with `K₀(R)`.
///
/// The subcategory's group is presented inside `ℤ^{objects}`: generated by the
/// vectors of its objects, modulo the isomorphisms between its own objects.
pub fn cofinality_check(r: &Arc<FiniteRingoid>, bound: usize, ceiling: u64) -> Result<CofinalityReport> {
    let full = k0_bounded(r, bound, ceiling)?;
    let n = r.num_objects();
    let t = &full.table;
    let strictly_cofinal = t.members.iter().all(|(b, _)| {
        if in_sub(b) {
            return true;
        }
        let pad = ObjSum::repeat(0, 2);
        b.len() + pad.len() > bound || in_sub(&b.concat(&pad))
    }) && bound >= 3;
    let span = Lattice::from_vectors(
        n,
        t.members
            .iter()
            .filter(|(s, _)| in_sub(s))
            .map(|(s, _)| counts_vector(s, n))
            .collect(),
    );
    let mut anchors: Vec<Option<&ObjSum>> = vec![None; t.num_classes()];
    let mut rels = Vec::new();
    for (s, c) in t.members.iter().filter(|(s, _)| in_sub(s)) {
        match anchors[*c] {
            None => anchors[*c] = Some(s),
            Some(a) => rels.push(
                counts_vector(s, n)
                    .into_iter()
                    .zip(counts_vector(a, n))
                    .map(|(x, y)| x - y)
                    .collect(),
            ),
        }
    }
    let internal = Lattice::from_vectors(n, rels);
    let (sub, basis) = subquotient(&span, &internal);
    let map = PresentationMap::new(sub.clone(), full.group.clone(), basis);
    debug_assert!(map.is_well_defined());
    let injective = map.is_injective();
    let surjective = map.is_surjective();
    Ok(CofinalityReport {
        bound,
        strictly_cofinal,
        full,
        sub,
        map,
        injective,
        surjective,
    })
}

/// Degree-zero check of `K₀(J) → K₀(M) → K₀(M/J)`.
#[derive(Clone, Debug)]
pub struct FibrationReport {
    pub bound: usize,
    pub ideal: RelativeKZero,
    pub middle: KZeroResult,
    pub quotient: KZeroResult,
    pub first: PresentationMap<BigInt>,
    pub second: PresentationMap<BigInt>,
    pub composite_zero: bool,
    /// Image of the first map equals the kernel of the second.
    pub exact: bool,
}

impl FibrationReport {
    pub fn is_decided(&self) -> bool {
        self.ideal.is_decided() && self.middle.is_decided() && self.quotient.is_decided()
    }

    pub fn summary(&self) -> CheckSummary {
        CheckSummary {
            bound: self.bound,
            groups: vec![
                self.ideal.group.to_string(),
                self.middle.group.to_string(),
                self.quotient.group.to_string(),
            ],
            holds: self.composite_zero && self.exact,
            decided: self.is_decided(),
        }
    }
}

/// `J⁺ → M`, `x + λ ↦ x + λ·1`.
fn unitized_inclusion(j: &FiniteRingoid, inc: &RingoidHom) -> Result<RingoidHom> {
    let m = inc.target().clone();
    let ring = m.scalar_ring().cloned().expect("checked by caller");
    let jp = Arc::new(unitize(j)?);
    let n = j.num_objects();
    let f = RingoidHom::from_fn(jp, m.clone(), (0..n).collect(), |a, b, g| {
        let k = j.hom(a, b).ngens();
        if a == b && g >= k {
            let rho = ring.ring_group().generator(g - k);
            m.act(a, a, &rho, m.identity(a).unwrap()).expect("scalar ring present")
        } else {
            inc.generator_image(a, b, g).clone()
        }
    })?;
    let report = validate_hom(&f);
    if !report.is_clean() {
        return Err(Error::Axiom(format!("J⁺ → M: {report}")));
    }
    Ok(f)
}

/// Computes the three groups and both maps at `bound` and tests exactness at `K₀(M)`.
pub fn fibration_check(j: &Ideal, bound: usize, ceiling: u64) -> Result<FibrationReport> {
    let m = j.parent().clone();
    if !m.is_unital() || m.scalar_ring().is_none() {
        return Err(Error::Unsupported(format!(
            "{} must be unital with a scalar ring",
            m.name()
        )));
    }
    let (jm, inc) = j.as_moduloid()?;
    let (q, qmap) = quotient(j)?;
    let ideal = k0_relative(&jm, bound, ceiling)?;
    let middle = k0_bounded(&m, bound, ceiling)?;
    let quotient_k = k0_bounded(&Arc::new(q), bound, ceiling)?;
    let phi = unitized_inclusion(&jm, &inc)?;
    let into_m = k0_induced(&phi, &ideal.unitized, &middle)?;
    let first = PresentationMap::new(
        ideal.group.clone(),
        middle.group.clone(),
        ideal.basis.mul(&into_m.matrix),
    );
    let second = k0_induced(&qmap, &middle, &quotient_k)?;
    let composite_zero = first.compose(&second).is_zero();
    let exact = first.image_lattice() == second.kernel_lattice();
    Ok(FibrationReport {
        bound,
        ideal,
        middle,
        quotient: quotient_k,
        first,
        second,
        composite_zero,
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additive::DEFAULT_CEILING;
    use crate::catalog;

    #[test]
    fn cofinality_over_f2() {
        let r = cofinality_check(&Arc::new(catalog::prime_field(2)), 4, DEFAULT_CEILING).unwrap();
        assert!(r.strictly_cofinal);
        assert!(r.is_isomorphism());
        assert_eq!(r.sub.to_string(), "Z");
    }

    #[test]
    fn fibration_for_two_in_z4() {
        let z4 = Arc::new(catalog::cyclic_ring(4));
        let m = Arc::new(catalog::over_itself(&z4));
        let j = Ideal::new(m, vec![vec![vec![2]]]).unwrap();
        let rep = fibration_check(&j, 2, DEFAULT_CEILING).unwrap();
        assert_eq!(rep.ideal.group.to_string(), "0");
        assert_eq!(rep.middle.group.to_string(), "Z");
        assert_eq!(rep.quotient.group.to_string(), "Z");
        assert!(rep.composite_zero);
        assert!(rep.exact);
        assert!(rep.second.is_injective());
    }
}
