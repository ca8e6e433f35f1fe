use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rootdata::{cartan_type, Family, RootDatum};
use crate::weyl::CharTable;

use super::{data, orbit_dimension, orbits_of, NilOrbit};

/// An orbit with a local system, and the irreducible character attached to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpringerPair {
    pub orbit: String,
    pub local_system: String,
    pub character: String,
}

impl SpringerPair {
    pub fn is_trivial(&self) -> bool {
        self.local_system == "1"
    }

    pub fn label(&self) -> String {
        if self.is_trivial() {
            self.orbit.clone()
        } else {
            format!("{}[{}]", self.orbit, self.local_system)
        }
    }
}

/// Springer correspondence restricted to the principal block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpringerMap {
    pub pairs: Vec<SpringerPair>,
}

impl SpringerMap {
    /// Pair attached to a character.
    pub fn pair_of_character(&self, character: &str) -> Option<&SpringerPair> {
        self.pairs.iter().find(|p| p.character == character)
    }

    /// Character attached to an orbit with trivial local system.
    pub fn character_of_orbit(&self, orbit: &str) -> Option<&str> {
        self.pairs.iter().find(|p| p.orbit == orbit && p.is_trivial()).map(|p| p.character.as_str())
    }
}

/// Springer correspondence. Type A: Jordan type `λ` with `χ_λ`. B2 and G2 come
/// from embedded tables.
pub fn springer(datum: &RootDatum, table: &CharTable) -> Result<SpringerMap> {
    let ct = cartan_type(datum)?;
    let pairs: Vec<SpringerPair> = match ct.components.as_slice() {
        [] => vec![SpringerPair { orbit: "(1)".into(), local_system: "1".into(), character: "(1)".into() }],
        [c] if c.family == Family::A => orbits_of(datum)?
            .into_iter()
            .map(|o| SpringerPair { character: o.label.clone(), orbit: o.label, local_system: "1".into() })
            .collect(),
        [c] if matches!((c.family, c.rank), (Family::B, 2) | (Family::G, 2)) => {
            let td = data::type_data(&c.label()).expect("embedded data");
            td.orbits
                .iter()
                .flat_map(|o| {
                    o.springer.iter().map(|[ls, ch]| SpringerPair {
                        orbit: o.label.clone(),
                        local_system: ls.clone(),
                        character: ch.clone(),
                    })
                })
                .collect()
        }
        _ => return Err(Error::unsupported(format!("Springer correspondence for {}", ct.label()))),
    };
    for p in &pairs {
        if table.index_of(&p.character).is_none() {
            return Err(Error::assertion(format!("Springer character {} is not in the table", p.character)));
        }
    }
    let mut chars: Vec<&str> = pairs.iter().map(|p| p.character.as_str()).collect();
    chars.sort_unstable();
    chars.dedup();
    if chars.len() != pairs.len() {
        return Err(Error::assertion("Springer correspondence is not injective"));
    }
    Ok(SpringerMap { pairs })
}

/// Jordan type of the orbit induced from `λ^(1) × ... × λ^(k)` on a Levi
/// `GL_{n_1} × ... × GL_{n_k}`: the row-wise sum of the partitions.
pub fn induced_partition(parts: &[Partition]) -> Partition {
    let len = parts.iter().map(|p| p.len()).max().unwrap_or(0);
    Partition::new((0..len).map(|i| parts.iter().map(|p| p.part(i)).sum()).collect())
}

/// Induced orbit in a type-A datum. `levi_nodes` are positions in the
/// Dynkin chain (Bourbaki order); `levi_orbits` gives one partition per block
/// of consecutive letters.
pub fn induced_orbit(datum: &RootDatum, levi_nodes: &[usize], levi_orbits: &[Partition]) -> Result<NilOrbit> {
    let ct = cartan_type(datum)?;
    let n = match ct.components.as_slice() {
        [] => 1,
        [c] if c.family == Family::A => c.rank + 1,
        _ => return Err(Error::unsupported("induced orbits are implemented for type A")),
    };
    let mut blocks = vec![1usize];
    for k in 0..n - 1 {
        if levi_nodes.contains(&k) {
            *blocks.last_mut().unwrap() += 1;
        } else {
            blocks.push(1);
        }
    }
    if blocks.len() != levi_orbits.len() {
        return Err(Error::invalid(format!("Levi has {} blocks, got {} orbits", blocks.len(), levi_orbits.len())));
    }
    for (b, p) in blocks.iter().zip(levi_orbits) {
        if p.size() != *b {
            return Err(Error::invalid(format!("{p} is not a partition of the block size {b}")));
        }
    }
    let target = induced_partition(levi_orbits).label();
    let orbits = orbits_of(datum)?;
    let o = orbits.into_iter().find(|o| o.label == target).expect("type-A orbit exists");
    // dim Ind = dim G - dim L + dim O_L
    let dim_l: usize = datum.rank() + blocks.iter().map(|b| b * (b - 1)).sum::<usize>();
    let dim_ol: usize = levi_orbits.iter().map(|p| p.size() * p.size() - p.transpose().sum_of_squares()).sum();
    if o.dim_orbit != datum.dim_group() - dim_l + dim_ol {
        return Err(Error::assertion("induced orbit dimension identity fails"));
    }
    debug_assert_eq!(o.dim_orbit, orbit_dimension(datum, &o.weighted_diagram));
    Ok(o)
}
