//! Exact computations for root data, Weyl groups, nilpotent orbits, Green
//! polynomials, generalised Gelfand–Graev representations and wave front
//! sets of finite reductive groups in the split case.

pub mod cells;
pub mod error;
pub mod gggr;
pub mod green;
pub mod intmat;
pub mod linalg;
pub mod orbits;
pub mod partition;
pub mod poly;
pub mod ratfunc;
pub mod rootdata;
pub mod weyl;

pub use error::{Error, Result};
