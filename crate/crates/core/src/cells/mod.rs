//! Two-sided cells, families, special characters, the dagger involution and
//! the map from cells to unipotent classes.

#[cfg(test)]
mod tests;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{find_orbit, orbits_of, springer, NilOrbit};
use crate::partition::{cycle_type, mn_character, partitions, permutations, rsk_shape, Partition};
use crate::poly::{rat, Rational};
use crate::rootdata::Family;
use crate::weyl::{j_induction, tensor_sign, CharTable, ReflectionSubgroup, WeylGroup};

/// Embedded family tables.
pub const FAMILY_DATA: &str = include_str!("../../data/families.toml");

#[derive(Clone, Debug, Serialize)]
pub struct Cell {
    /// Elements, as indices into the group (or into `permutations(n)` for
    /// [`rsk_cells`]).
    pub elements: Vec<usize>,
    pub family: Vec<String>,
    pub special: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellPartition {
    pub cells: Vec<Cell>,
}

impl CellPartition {
    pub fn cell_of_character(&self, label: &str) -> Option<usize> {
        self.cells.iter().position(|c| c.family.iter().any(|f| f == label))
    }
}

/// Two-sided cells of `S_n` as fibres of the Robinson–Schensted shape, in the
/// order of `partitions(n)`. Elements index `permutations(n)`.
pub fn rsk_cells(n: usize) -> Result<CellPartition> {
    if n > 7 {
        return Err(Error::unsupported("RSK cells are limited to n <= 7"));
    }
    let perms = permutations(n);
    Ok(cells_from_shapes(n, perms.iter().map(|p| rsk_shape(p)).collect()))
}

fn cells_from_shapes(n: usize, shapes: Vec<Partition>) -> CellPartition {
    let cells = partitions(n)
        .into_iter()
        .map(|lambda| Cell {
            elements: (0..shapes.len()).filter(|&i| shapes[i] == lambda).collect(),
            family: vec![lambda.label()],
            special: lambda.label(),
        })
        .collect();
    CellPartition { cells }
}

#[derive(Deserialize)]
struct FamilyFile {
    schema_version: u32,
    #[serde(rename = "type")]
    types: Vec<FamilyType>,
}

#[derive(Deserialize)]
struct FamilyType {
    name: String,
    #[serde(rename = "family")]
    families: Vec<FamilyEntry>,
}

#[derive(Deserialize)]
struct FamilyEntry {
    cell: String,
    special: String,
    characters: Vec<String>,
}

fn family_data(name: &str) -> Result<FamilyType> {
    let f: FamilyFile =
        toml::from_str(FAMILY_DATA).map_err(|e| Error::invalid(format!("family data: {e}")))?;
    if f.schema_version != 1 {
        return Err(Error::invalid("unknown family data schema"));
    }
    f.types
        .into_iter()
        .find(|t| t.name == name)
        .ok_or_else(|| Error::unsupported(format!("no family data for {name}")))
}

/// Cells of a Weyl group of type A (computed) or B2/G2 (embedded).
pub fn cells_of(w: &WeylGroup, table: &CharTable) -> Result<CellPartition> {
    if let Some(n) = w.type_a_degree() {
        let shapes = (0..w.order()).map(|x| rsk_shape(w.permutation(x).unwrap())).collect();
        return Ok(cells_from_shapes(n, shapes));
    }
    let ct = w.cartan_type();
    let comp = match ct.irreducible() {
        Some(c) if matches!((c.family, c.rank), (Family::B, 2) | (Family::G, 2)) => c,
        _ => return Err(Error::unsupported(format!("cells of type {}", ct.label()))),
    };
    let data = family_data(&comp.label())?;
    let w0 = w.longest();
    let mut cells = Vec::new();
    for f in data.families {
        let elements: Vec<usize> = match f.cell.as_str() {
            "identity" => vec![0],
            "longest" => vec![w0],
            "other" => (0..w.order()).filter(|&x| x != 0 && x != w0).collect(),
            other => return Err(Error::invalid(format!("unknown cell kind {other}"))),
        };
        for c in &f.characters {
            if table.index_of(c).is_none() {
                return Err(Error::assertion(format!("family character {c} is not in the table")));
            }
        }
        if !f.characters.contains(&f.special) {
            return Err(Error::assertion("special character outside its family"));
        }
        cells.push(Cell { elements, family: f.characters, special: f.special });
    }
    let total: usize = cells.iter().map(|c| c.family.len()).sum();
    if total != table.len() {
        return Err(Error::assertion("families do not cover the irreducible characters"));
    }
    Ok(CellPartition { cells })
}

/// The cell whose family is the sign twist of the given one.
pub fn dagger(cp: &CellPartition, cell: usize, w: &WeylGroup, table: &CharTable) -> Result<usize> {
    let mut image: Vec<String> =
        cp.cells[cell].family.iter().map(|e| tensor_sign(w, table, e)).collect::<Result<_>>()?;
    image.sort();
    cp.cells
        .iter()
        .position(|c| {
            let mut f = c.family.clone();
            f.sort();
            f == image
        })
        .ok_or_else(|| Error::assertion("sign-twisted family not found"))
}

/// Values on the elements of a Young subgroup of `Π χ_{ν_i}`, one partition
/// per block of consecutive letters.
pub fn young_character(w: &WeylGroup, h: &ReflectionSubgroup, blocks: &[Partition]) -> Result<Vec<Rational>> {
    let mut start = Vec::with_capacity(blocks.len());
    let mut s = 0;
    for b in blocks {
        start.push(s);
        s += b.size();
    }
    if w.type_a_degree() != Some(s) {
        return Err(Error::invalid("block sizes do not add up to n"));
    }
    h.elements
        .iter()
        .map(|&x| {
            let perm = w.permutation(x).unwrap();
            let mut v = 1i64;
            for (b, nu) in blocks.iter().enumerate() {
                let range = start[b]..start[b] + nu.size();
                if perm[range.clone()].iter().any(|p| !range.contains(p)) {
                    return Err(Error::invalid("element does not preserve the blocks"));
                }
                let local: Vec<usize> = perm[range.clone()].iter().map(|p| p - start[b]).collect();
                v *= mn_character(nu, &cycle_type(&local));
            }
            Ok(rat(v))
        })
        .collect()
}

/// Orbit attached to a cell of `H°` with special character `special` (values
/// on the elements of `H°`): the Springer orbit of `j_{H°}^W(special)`.
pub fn cell_to_orbit(w: &WeylGroup, table: &CharTable, h: &ReflectionSubgroup, special: &[Rational]) -> Result<NilOrbit> {
    let j = j_induction(w, table, h, special)?;
    let label = &table.labels[j];
    let map = springer(w.datum(), table)?;
    let pair = map
        .pair_of_character(label)
        .ok_or_else(|| Error::assertion(format!("{label} is not a Springer character")))?;
    if !pair.is_trivial() {
        return Err(Error::assertion(format!("{label} corresponds to a nontrivial local system")));
    }
    let orbits = orbits_of(w.datum())?;
    find_orbit(&orbits, &pair.orbit).cloned()
}

/// Orbit attached to a cell of `W` itself.
pub fn cell_to_orbit_full(w: &WeylGroup, table: &CharTable, cp: &CellPartition, cell: usize) -> Result<NilOrbit> {
    let h = ReflectionSubgroup::from_roots(w, &(0..w.datum().num_roots()).collect::<Vec<_>>());
    let i = table.index_of(&cp.cells[cell].special).expect("special in table");
    let values: Vec<Rational> = h.elements.iter().map(|&x| rat(table.values[i][w.class_of(x)])).collect();
    cell_to_orbit(w, table, &h, &values)
}
