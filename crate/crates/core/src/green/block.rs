use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbits::{closure_leq, orbits_of, springer};
use crate::weyl::{CharTable, WeylGroup};

/// One pair `ι = (orbit, local system)` of the principal block.
#[derive(Clone, Debug, Serialize)]
pub struct BlockPair {
    pub label: String,
    pub orbit: String,
    pub local_system: String,
    pub character: String,
    pub char_index: usize,
    pub dim_orbit: usize,
    /// `-dim O - dim Z°(L)` with `L` the maximal torus.
    pub a: i64,
    /// `dim G - dim O - rank`.
    pub b: i64,
}

impl BlockPair {
    pub fn is_trivial(&self) -> bool {
        self.local_system == "1"
    }
}

/// The principal block, ordered by decreasing orbit dimension with ties
/// broken by label.
#[derive(Clone, Debug, Serialize)]
pub struct BlockData {
    pub pairs: Vec<BlockPair>,
    /// `closure[i][j]`: orbit of pair `i` lies in the closure of that of `j`.
    pub closure: Vec<Vec<bool>>,
    pub z_dim: usize,
}

impl BlockData {
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.pairs.iter().position(|p| p.label == label)
    }

    /// Reorders pairs: the new pair `k` is old pair `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> BlockData {
        BlockData {
            pairs: perm.iter().map(|&i| self.pairs[i].clone()).collect(),
            closure: perm.iter().map(|&i| perm.iter().map(|&j| self.closure[i][j]).collect()).collect(),
            z_dim: self.z_dim,
        }
    }
}

pub fn principal_block(w: &WeylGroup, table: &CharTable) -> Result<BlockData> {
    let datum = w.datum();
    let orbits = orbits_of(datum)?;
    let map = springer(datum, table)?;
    let rank = datum.rank() as i64;
    let dim_g = datum.dim_group() as i64;
    let mut pairs = Vec::new();
    for o in &orbits {
        for sp in map.pairs.iter().filter(|sp| sp.orbit == o.label) {
            let dim = o.dim_orbit as i64;
            pairs.push(BlockPair {
                label: sp.label(),
                orbit: o.label.clone(),
                local_system: sp.local_system.clone(),
                character: sp.character.clone(),
                char_index: table.index_of(&sp.character).expect("checked by springer"),
                dim_orbit: o.dim_orbit,
                a: -dim - rank,
                b: dim_g - dim - rank,
            });
        }
    }
    if pairs.len() != map.pairs.len() {
        return Err(Error::assertion("Springer pair refers to an unknown orbit"));
    }
    pairs.sort_by(|x, y| y.dim_orbit.cmp(&x.dim_orbit).then(x.label.cmp(&y.label)));
    let find = |label: &str| orbits.iter().find(|o| o.label == label).unwrap();
    let mut closure = vec![vec![false; pairs.len()]; pairs.len()];
    for (i, x) in pairs.iter().enumerate() {
        for (j, y) in pairs.iter().enumerate() {
            closure[i][j] = closure_leq(datum, find(&x.orbit), find(&y.orbit))?;
        }
    }
    Ok(BlockData { pairs, closure, z_dim: datum.rank() })
}
