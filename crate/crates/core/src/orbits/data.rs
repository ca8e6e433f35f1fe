use serde::Deserialize;

use crate::error::{Error, Result};

/// Embedded orbit and Springer tables.
pub const ORBIT_DATA: &str = include_str!("../../data/orbits.toml");

#[derive(Clone, Debug, Deserialize)]
pub struct OrbitFile {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub types: Vec<TypeData>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct TypeData {
    pub name: String,
    /// Covering relations `[upper, lower]` of the closure order.
    #[serde(default)]
    pub hasse: Vec<[String; 2]>,
    #[serde(rename = "orbit")]
    pub orbits: Vec<OrbitData>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct OrbitData {
    pub label: String,
    pub diagram: Vec<u8>,
    pub dim: usize,
    pub component_group_adjoint: usize,
    pub component_group_sc: usize,
    /// `[local system, character]` pairs in the principal block.
    #[serde(default)]
    pub springer: Vec<[String; 2]>,
}

pub fn parse(text: &str) -> Result<OrbitFile> {
    let f: OrbitFile = toml::from_str(text).map_err(|e| Error::invalid(format!("orbit data: {e}")))?;
    if f.schema_version != 1 {
        return Err(Error::invalid(format!("unknown orbit data schema {}", f.schema_version)));
    }
    Ok(f)
}

pub fn builtin() -> OrbitFile {
    parse(ORBIT_DATA).expect("embedded orbit data parses")
}

pub fn type_data(name: &str) -> Option<TypeData> {
    builtin().types.into_iter().find(|t| t.name == name)
}
