//! Bounded K₀ and K₁, relative K₀, and the degree-zero exactness and cofinality checks.

mod checks;
mod exterior;
mod k0;
mod k1;

pub use checks::{cofinality_check, fibration_check, CheckSummary, CofinalityReport, FibrationReport};
pub use exterior::{exterior_product, ExteriorProduct};
pub use k0::{k0_bounded, k0_induced, k0_relative, KZeroResult, KZeroSummary, RelativeKZero};
pub use k1::{
    determinant, determinant_surjective, gl, k1_bounded, stabilize, GeneralLinear, KOneResult, KOneSummary,
    StabilizationSummary,
};
