//! Nilpotent orbits: weighted Dynkin diagrams, weight spaces, dimensions,
//! closure order, the Springer correspondence and induced orbits in type A.

pub mod data;
mod springer;


use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::rootdata::{cartan_type, CartanType, Family, RootDatum};

pub use springer::{induced_orbit, induced_partition, springer, SpringerMap, SpringerPair};

/// A nilpotent orbit of a reductive group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilOrbit {
    pub label: String,
    /// Jordan type for classical groups.
    pub partition: Option<Partition>,
    /// Weights on the simple roots, in the order of the datum.
    pub weighted_diagram: Vec<u8>,
    pub dim_orbit: usize,
    pub dim_centralizer: usize,
    /// `|A(u)|` for this isogeny type, when known.
    pub component_group_order: Option<usize>,
}

/// `dim g(λ, i)` for each `i` with nonzero dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSpaces(pub BTreeMap<i64, usize>);

impl WeightSpaces {
    pub fn dim(&self, i: i64) -> usize {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }
}

/// `dim g(λ_d, i)` for a weighted diagram given in datum order.
pub fn weight_spaces_of_diagram(datum: &RootDatum, diagram: &[u8]) -> WeightSpaces {
    let mut m = BTreeMap::new();
    if datum.rank() > 0 {
        m.insert(0, datum.rank());
    }
    for i in 0..datum.num_roots() {
        let h: i64 = datum.root_coords(i).iter().zip(diagram).map(|(c, &d)| c * i64::from(d)).sum();
        *m.entry(h).or_insert(0) += 1;
    }
    WeightSpaces(m)
}

pub fn weight_spaces(datum: &RootDatum, orbit: &NilOrbit) -> WeightSpaces {
    weight_spaces_of_diagram(datum, &orbit.weighted_diagram)
}

/// `dim G - dim g(λ,0) - dim g(λ,1)`.
pub fn orbit_dimension(datum: &RootDatum, diagram: &[u8]) -> usize {
    let ws = weight_spaces_of_diagram(datum, diagram);
    datum.dim_group() - ws.dim(0) - ws.dim(1)
}

/// Weights `h_1 >= h_2 >= ...` of the partition's `sl_2` on the natural module.
fn jordan_weights(lambda: &Partition) -> Vec<i64> {
    let mut h: Vec<i64> = Vec::with_capacity(lambda.size());
    for &p in lambda.parts() {
        let p = p as i64;
        let mut k = p - 1;
        while k >= 1 - p {
            h.push(k);
            k -= 2;
        }
    }
    h.sort_unstable_by(|a, b| b.cmp(a));
    h
}

/// Weighted diagram (Bourbaki order) of a classical orbit with Jordan type `λ`.
pub fn classical_diagram(family: Family, rank: usize, lambda: &Partition) -> Result<Vec<u8>> {
    let h = jordan_weights(lambda);
    let diff = |i: usize| h[i] - h[i + 1];
    let d: Vec<i64> = match family {
        Family::A => (0..rank).map(diff).collect(),
        Family::B => (0..rank).map(|i| if i + 1 < rank { diff(i) } else { h[i] }).collect(),
        Family::C => (0..rank).map(|i| if i + 1 < rank { diff(i) } else { 2 * h[i] }).collect(),
        _ => return Err(Error::unsupported(format!("partition diagrams for type {family}"))),
    };
    if d.iter().any(|&x| !(0..=2).contains(&x)) {
        return Err(Error::assertion(format!("weighted diagram of {lambda} has weights outside 0..2")));
    }
    Ok(d.into_iter().map(|x| x as u8).collect())
}

/// Partitions labelling nilpotent orbits of a classical type.
pub fn classical_partitions(family: Family, rank: usize) -> Result<Vec<Partition>> {
    let ok_mult = |p: &Partition, parity: usize| p.multiplicities().iter().all(|(&k, &m)| k % 2 != parity || m % 2 == 0);
    Ok(match family {
        Family::A => partitions(rank + 1),
        Family::B => partitions(2 * rank + 1).into_iter().filter(|p| ok_mult(p, 0)).collect(),
        Family::C => partitions(2 * rank).into_iter().filter(|p| ok_mult(p, 1)).collect(),
        _ => return Err(Error::unsupported(format!("nilpotent orbits of type {family}"))),
    })
}

fn count_distinct(p: &Partition, parity: usize) -> u32 {
    p.multiplicities().keys().filter(|&&k| k % 2 == parity).count() as u32
}

fn classical_component_group(datum: &RootDatum, family: Family, lambda: &Partition) -> Option<usize> {
    let adjoint = datum.center_torsion().is_empty() && datum.central_rank() == 0;
    let sc = datum.fundamental_group_torsion().is_empty() && datum.central_rank() == 0;
    match family {
        Family::A => {
            let g = lambda.parts().iter().fold(0usize, |a, &b| a.gcd(&b));
            let t: i64 = datum.center_torsion().iter().product();
            Some(g.gcd(&(t as usize)))
        }
        Family::B if adjoint => Some(1 << count_distinct(lambda, 1).saturating_sub(1)),
        Family::C if sc => Some(1 << count_distinct(lambda, 0)),
        Family::C if adjoint => {
            let b = count_distinct(lambda, 0);
            let central = lambda.multiplicities().iter().any(|(&k, &m)| k % 2 == 0 && m % 2 == 1);
            Some(1 << if central { b - 1 } else { b })
        }
        _ => None,
    }
}

fn to_datum_order(ct: &CartanType, datum: &RootDatum, bourbaki: &[u8]) -> Vec<u8> {
    let mut d = vec![0u8; datum.semisimple_rank()];
    if let Some(c) = ct.irreducible() {
        for (k, &node) in c.nodes.iter().enumerate() {
            d[node] = bourbaki[k];
        }
    }
    d
}

fn finish(datum: &RootDatum, mut orbits: Vec<NilOrbit>) -> Vec<NilOrbit> {
    orbits.sort_by(|a, b| b.dim_orbit.cmp(&a.dim_orbit).then(a.label.cmp(&b.label)));
    for o in &mut orbits {
        o.dim_centralizer = datum.dim_group() - o.dim_orbit;
    }
    orbits
}

/// Nilpotent orbits of a datum whose semisimple part is irreducible of type
/// A, B, C, G2 or F4 (or trivial), in decreasing dimension.
pub fn orbits_of(datum: &RootDatum) -> Result<Vec<NilOrbit>> {
    let ct = cartan_type(datum)?;
    let comp = match ct.components.as_slice() {
        [] => {
            let o = NilOrbit {
                label: "(1)".into(),
                partition: Some(Partition::new(vec![1])),
                weighted_diagram: vec![],
                dim_orbit: 0,
                dim_centralizer: datum.dim_group(),
                component_group_order: Some(1),
            };
            return Ok(vec![o]);
        }
        [c] => c.clone(),
        _ => return Err(Error::unsupported(format!("nilpotent orbits of reducible type {}", ct.label()))),
    };
    let from_data = matches!((comp.family, comp.rank), (Family::B, 2) | (Family::G, 2) | (Family::F, 4));
    let mut out = Vec::new();
    if from_data {
        let td = data::type_data(&comp.label())
            .ok_or_else(|| Error::unsupported(format!("no orbit data for {}", comp.label())))?;
        let adjoint = datum.center_torsion().is_empty() && datum.central_rank() == 0;
        let sc = datum.fundamental_group_torsion().is_empty() && datum.central_rank() == 0;
        for o in td.orbits {
            let diagram = to_datum_order(&ct, datum, &o.diagram);
            let dim = orbit_dimension(datum, &diagram);
            if dim != o.dim {
                return Err(Error::assertion(format!("orbit {} has dimension {dim}, table says {}", o.label, o.dim)));
            }
            let partition = if comp.family == Family::B { Partition::parse(&o.label) } else { None };
            let a = if adjoint {
                Some(o.component_group_adjoint)
            } else if sc {
                Some(o.component_group_sc)
            } else {
                None
            };
            out.push(NilOrbit {
                label: o.label,
                partition,
                weighted_diagram: diagram,
                dim_orbit: dim,
                dim_centralizer: 0,
                component_group_order: a,
            });
        }
    } else {
        for p in classical_partitions(comp.family, comp.rank)? {
            let bourbaki = classical_diagram(comp.family, comp.rank, &p)?;
            let diagram = to_datum_order(&ct, datum, &bourbaki);
            let dim = orbit_dimension(datum, &diagram);
            out.push(NilOrbit {
                label: p.label(),
                component_group_order: classical_component_group(datum, comp.family, &p),
                partition: Some(p),
                weighted_diagram: diagram,
                dim_orbit: dim,
                dim_centralizer: 0,
            });
        }
    }
    Ok(finish(datum, out))
}

pub fn find_orbit<'a>(orbits: &'a [NilOrbit], label: &str) -> Result<&'a NilOrbit> {
    orbits
        .iter()
        .find(|o| o.label == label)
        .ok_or_else(|| Error::invalid(format!("unknown orbit {label}")))
}

/// `a ⊆ closure(b)`.
pub fn closure_leq(datum: &RootDatum, a: &NilOrbit, b: &NilOrbit) -> Result<bool> {
    if a.label == b.label {
        return Ok(true);
    }
    let ct = cartan_type(datum)?;
    let comp = match ct.components.as_slice() {
        [] => return Ok(true),
        [c] => c,
        _ => return Err(Error::unsupported("closure order of reducible types")),
    };
    match (comp.family, comp.rank) {
        (Family::G, 2) | (Family::B, 2) => {
            let td = data::type_data(&comp.label()).expect("embedded data");
            // Reflexive-transitive closure of the covering relation.
            let mut reach = vec![b.label.clone()];
            let mut k = 0;
            while k < reach.len() {
                for [hi, lo] in &td.hasse {
                    if *hi == reach[k] && !reach.contains(lo) {
                        reach.push(lo.clone());
                    }
                }
                k += 1;
            }
            Ok(reach.contains(&a.label))
        }
        (Family::A | Family::B | Family::C, _) => match (&a.partition, &b.partition) {
            (Some(pa), Some(pb)) => Ok(pb.dominates(pa)),
            _ => Err(Error::invalid("classical orbits need partitions")),
        },
        _ => Err(Error::unsupported(format!("closure order for type {}", comp.label()))),
    }
}
