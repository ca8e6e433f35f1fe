use serde::Deserialize;

use crate::error::{Error, Result};
use crate::intmat::IntMatrix;

use super::RootDatum;

/// Text of the built-in catalog.
pub const BUILTIN_CATALOG: &str = include_str!("../../data/catalog.toml");

#[derive(Clone, Debug, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    #[serde(default)]
    pub pairing: Option<Vec<Vec<i64>>>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<RootDatum> {
        let pairing = match &self.pairing {
            None => IntMatrix::identity(self.rank),
            Some(rows) => {
                if rows.len() != self.rank || rows.iter().any(|r| r.len() != self.rank) {
                    return Err(Error::invalid(format!("{}: pairing must be {}x{}", self.name, self.rank, self.rank)));
                }
                IntMatrix::from_rows(rows, self.rank)
            }
        };
        RootDatum::new(
            self.name.clone(),
            self.rank,
            pairing,
            self.simple_roots.clone(),
            self.simple_coroots.clone(),
        )
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct Catalog {
    #[serde(rename = "datum", default)]
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog> {
        let cat: Catalog = toml::from_str(text).map_err(|e| Error::invalid(format!("catalog: {e}")))?;
        let mut names: Vec<String> = cat.entries.iter().map(|e| e.name.to_lowercase()).collect();
        names.sort();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("catalog: duplicate datum names"));
        }
        Ok(cat)
    }

    pub fn builtin() -> Catalog {
        Catalog::parse(BUILTIN_CATALOG).expect("built-in catalog parses")
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }

    /// Looks up a datum by name, ignoring case.
    pub fn get(&self, name: &str) -> Result<RootDatum> {
        self.entries
            .iter()
            .find(|e| e.name.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::invalid(format!("unknown datum {name:?}")))?
            .build()
    }

    /// Every datum in the catalog.
    pub fn all(&self) -> Result<Vec<RootDatum>> {
        self.entries.iter().map(|e| e.build()).collect()
    }
}

/// Reads a single datum from catalog-formatted text with exactly one entry.
pub fn datum_from_toml(text: &str) -> Result<RootDatum> {
    let cat = Catalog::parse(text)?;
    match cat.entries.as_slice() {
        [e] => e.build(),
        _ => Err(Error::invalid(format!("expected exactly one [[datum]] entry, found {}", cat.entries.len()))),
    }
}

/// Looks up a datum in the built-in catalog.
pub fn named(name: &str) -> Result<RootDatum> {
    Catalog::builtin().get(name)
}
