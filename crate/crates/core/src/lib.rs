//! Finite ringoids, their additive completions and bounded K-theory.

pub mod additive;
pub mod algebra;
pub mod assembly;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod ktheory;
pub mod nerve;
pub mod rgd;
pub mod ringoid;

use num_bigint::BigInt;

pub use algebra::{FinAbGroup, FinGroup, Lattice, Matrix, Presentation, PresentationMap};
pub use error::{Error, Result};
pub use ringoid::{validate, validate_hom, FiniteRingoid, RingoidBuilder, RingoidHom, ValidationReport};

/// Exact integer matrix.
pub type IntMatrix = Matrix<BigInt>;
/// Finitely presented abelian group over exact integers.
pub type AbPresentation = Presentation<BigInt>;
/// Homomorphism of finitely presented abelian groups.
pub type AbMap = PresentationMap<BigInt>;
/// Machine-word matrices for small fixtures.
pub type SmallMatrix = Matrix<i64>;
