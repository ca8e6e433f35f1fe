//! Root data, lattice operations on them, and prime conditions.

mod cartan;
mod catalog;
mod datum;
mod primes;

pub use cartan::{cartan_matrix, cartan_type, classify_cartan, CartanType, Component, Family};
pub use catalog::{datum_from_toml, named, Catalog, CatalogEntry, BUILTIN_CATALOG};
pub use datum::RootDatum;
pub use primes::{classify_prime, is_gl_shaped, is_pretty_good, is_prime, proximate_cover, PrimeReport, TriState};

use crate::error::Result;
use crate::intmat::IntMatrix;

/// Simply connected datum of an irreducible type.
pub fn simply_connected(family: Family, rank: usize) -> Result<RootDatum> {
    let a = cartan_matrix(family, rank)?;
    let roots = a.transpose().to_rows();
    let coroots = IntMatrix::identity(rank).to_rows();
    RootDatum::new(format!("{family}{rank}_sc"), rank, IntMatrix::identity(rank), roots, coroots)
}

/// Adjoint datum of an irreducible type.
pub fn adjoint(family: Family, rank: usize) -> Result<RootDatum> {
    let a = cartan_matrix(family, rank)?;
    let roots = IntMatrix::identity(rank).to_rows();
    let coroots = a.to_rows();
    RootDatum::new(format!("{family}{rank}_ad"), rank, IntMatrix::identity(rank), roots, coroots)
}

/// `GL_n` with roots and coroots `e_i - e_{i+1}`.
pub fn general_linear(n: usize) -> Result<RootDatum> {
    let simple: Vec<Vec<i64>> = (0..n.saturating_sub(1))
        .map(|i| (0..n).map(|k| if k == i { 1 } else if k == i + 1 { -1 } else { 0 }).collect())
        .collect();
    RootDatum::new(format!("GL{n}"), n, IntMatrix::identity(n), simple.clone(), simple)
}
