//! Unitization, ideals and quotients, tensor products, group ringoids and transport groupoids.

mod group_ring;
mod groupoid;
mod ideal;
mod tensor;
mod unitize;

pub use group_ring::{group_ringoid, group_ringoid_tensor_iso, linearize, twisted_group_ringoid, PiRing};
pub use groupoid::{
    orbit_skeleton, transport_groupoid, Arrow, FinGroupoid, GMap, GSet, GroupoidBuilder, GroupoidFunctor, Skeleton,
};
pub use ideal::{quotient, validate_ideal, Ideal};
pub use tensor::{tensor, TensorProduct};
pub use unitize::{
    direct_sum_with_scalars, scalar_ringoid, split_projection, unitization_projection, unitization_splitting, unitize,
    unitize_hom, with_scalars_hom, Splitting,
};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::algebra::{Coords, FinAbGroup, Lattice, Presentation};
use crate::error::{Error, Result};

/// A finite quotient `ℤ^g / L` with chosen cyclic coordinates.
#[derive(Clone, Debug)]
pub(crate) struct FiniteQuotient {
    pres: Presentation<BigInt>,
    group: FinAbGroup,
}

impl FiniteQuotient {
    pub(crate) fn new(relations: Lattice<BigInt>) -> Result<Self> {
        let pres = Presentation::from_lattice(relations);
        if pres.rank() > 0 {
            return Err(Error::Unsupported("quotient group is infinite".into()));
        }
        let moduli = pres
            .normal_moduli()
            .iter()
            .map(|d| d.to_u64().ok_or_else(|| Error::Unsupported("modulus too large".into())))
            .collect::<Result<Vec<u64>>>()?;
        Ok(FiniteQuotient {
            pres,
            group: FinAbGroup::new(moduli),
        })
    }

    /// Quotient of a finite group by the subgroup spanned by `gens`.
    pub(crate) fn of_subgroup(h: &FinAbGroup, gens: &[Coords]) -> Result<Self> {
        Self::new(h.subgroup_lattice(gens))
    }

    pub(crate) fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub(crate) fn project(&self, x: &[i128]) -> Coords {
        let v: Vec<BigInt> = x.iter().map(|&a| BigInt::from(a)).collect();
        self.pres
            .normal_coords(&v)
            .iter()
            .map(|c| c.to_u64().expect("reduced coordinate"))
            .collect()
    }

    pub(crate) fn project_u64(&self, x: &[u64]) -> Coords {
        let v: Vec<i128> = x.iter().map(|&a| a as i128).collect();
        self.project(&v)
    }

    /// Lift of new generator `k` to the old coordinates.
    pub(crate) fn lift(&self, k: usize) -> Vec<i128> {
        self.pres
            .lift(k)
            .iter()
            .map(|c| c.to_i128().expect("lift fits in i128"))
            .collect()
    }

    pub(crate) fn lift_in(&self, k: usize, old: &FinAbGroup) -> Coords {
        old.reduce(&self.lift(k))
    }
}
