//! Weyl groups, their character tables and fake degrees.

mod chartab;
mod fake;
mod group;
mod subgroup;

#[cfg(test)]
mod tests;

pub use chartab::{burnside_rows, character_table, tensor_sign, CharTable};
pub use fake::{
    det_one_minus_qw, fake_degree, fake_degrees, molien_over, molien_series, reflection_degrees, series_valuation,
    BInvariant, BInvariantTable,
};
pub use group::{ConjugacyClass, MatrixGroup, WeylGroup, DEFAULT_BOUND};
pub use subgroup::{j_induction, j_induction_constituents, ReflectionSubgroup};
