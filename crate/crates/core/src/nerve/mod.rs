//! The nerve of the additive completion: levels, faces and degeneracies, and a
//! second route to K₀ through the fundamental group of its 2-truncation.

mod levels;
mod oracle;
mod presentation;

pub use levels::{
    check_simplicial_identities, degeneracy, face, morphism_degeneracy, morphism_face, nerve_level, object_degeneracy,
    object_face, NerveLevel, SimplicialReport, LEVEL_CEILING, MAX_LEVEL,
};
pub use oracle::{k0_via_nerve, oracle_compare, NerveKZero, OracleReport, OracleSummary};
pub use presentation::{GroupPresentation, Letter, Word};
