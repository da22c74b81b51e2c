//! Exact integer linear algebra and finite group machinery.

mod abgroup;
mod fingroup;
mod lattice;
mod matrix;
mod presentation;
mod scalar;
mod smith;

pub use abgroup::{Coords, FinAbGroup};
pub use fingroup::{FinGroup, GROUP_ORDER_CEILING};
pub use lattice::Lattice;
pub use matrix::Matrix;
pub use presentation::{subquotient, Presentation, PresentationMap, PresentationSummary};
pub use scalar::{rem_euclid, IntScalar};
pub use smith::{hermite_rows, left_kernel, smith_normal_form, SmithDecomposition};

use num_bigint::BigInt;

/// Presentation of `ℤ^cols / rowspan(m)`.
pub fn cokernel<T: IntScalar>(m: &Matrix<T>) -> Presentation<T> {
    Presentation::cokernel(m)
}

/// `G / [G, G]` for a finite group table.
pub fn abelianization(g: &FinGroup) -> Presentation<BigInt> {
    g.abelianization()
}
