use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::intmat::{self, IntMatrix};

use super::cartan::{cartan_type, Family};
use super::RootDatum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::Unknown => "unknown",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    pub p: u64,
    pub good: bool,
    pub very_good: bool,
    pub pretty_good: bool,
    pub proximate: bool,
    pub acceptable: TriState,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn has_p_torsion(rank: usize, gens: &[Vec<i64>], p: u64) -> bool {
    intmat::quotient_torsion(rank, gens).iter().any(|&d| d as u64 % p == 0)
}

pub fn classify_prime(datum: &RootDatum, p: u64) -> Result<PrimeReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let ct = cartan_type(datum)?;
    let good = !ct.bad_primes().contains(&p);
    let very_good = good
        && ct
            .components
            .iter()
            .all(|c| c.family != Family::A || (c.rank as u64 + 1) % p != 0);
    let pretty_good = is_pretty_good(datum, p);
    let proximate = !has_p_torsion(datum.rank(), datum.coroots(), p);
    let acceptable = if very_good || is_gl_shaped(datum)? {
        TriState::Yes
    } else if !pretty_good {
        TriState::No
    } else {
        TriState::Unknown
    };
    if (very_good && !pretty_good) || (pretty_good && !good) {
        return Err(Error::assertion(format!(
            "{}: prime conditions out of order at p = {p} (good {good}, pretty good {pretty_good}, very good {very_good})",
            datum.name()
        )));
    }
    Ok(PrimeReport { p, good, very_good, pretty_good, proximate, acceptable })
}

/// A datum with an irreducible type-A derived part (or none), one more
/// dimension of centre, and torsion-free `X/ZΦ` and `Y/ZΦ̌`.
pub fn is_gl_shaped(datum: &RootDatum) -> Result<bool> {
    let ct = cartan_type(datum)?;
    let type_a = match ct.components.as_slice() {
        [] => true,
        [c] => c.family == Family::A,
        _ => false,
    };
    Ok(type_a
        && datum.rank() == datum.semisimple_rank() + 1
        && datum.center_torsion().is_empty()
        && datum.fundamental_group_torsion().is_empty())
}

/// `X/ZΨ` and `Y/ZΨ̌` have no `p`-torsion for every subset `Ψ ⊆ Φ`.
///
/// Every subset of `Φ` spans the same pair of lattices as some subset of
/// `Φ⁺`, so the search walks the distinct pairs `(ZΨ, ZΨ̌)` reachable by
/// adding one positive root at a time. This visits the lattices of every
/// subset exactly.
pub fn is_pretty_good(datum: &RootDatum, p: u64) -> bool {
    let n = datum.rank();
    let pos = datum.num_positive_roots();
    let key = |rows: &[Vec<i64>]| -> Vec<Vec<i64>> {
        if rows.is_empty() {
            Vec::new()
        } else {
            intmat::hermite_normal_form(&IntMatrix::from_rows(rows, n)).to_rows()
        }
    };
    let mut seen: HashSet<(Vec<Vec<i64>>, Vec<Vec<i64>>)> = HashSet::new();
    let mut queue = vec![(Vec::new(), Vec::new())];
    seen.insert((Vec::new(), Vec::new()));
    while let Some((x, y)) = queue.pop() {
        if has_p_torsion(n, &x, p) || has_p_torsion(n, &y, p) {
            return false;
        }
        for i in 0..pos {
            let mut nx = x.clone();
            nx.push(datum.roots()[i].clone());
            let mut ny = y.clone();
            ny.push(datum.coroots()[i].clone());
            let state = (key(&nx), key(&ny));
            if seen.insert(state.clone()) {
                queue.push(state);
            }
        }
    }
    true
}

/// Proximate cover at `p`: the datum coinduced by `Ȳ`, where `Ȳ ⊇ ZΦ̌` and
/// `Y/Ȳ` is the `p`-primary part of the torsion of `Y/ZΦ̌`. Returns the datum
/// and the inclusion `Ȳ -> Y` (rows are the basis of `Ȳ` in `Y`).
pub fn proximate_cover(datum: &RootDatum, p: u64) -> Result<(RootDatum, IntMatrix)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = datum.rank();
    let basis = if datum.coroots().is_empty() {
        IntMatrix::identity(n)
    } else {
        let s = intmat::smith_normal_form(&datum.coroot_matrix());
        let diag = s.diagonal();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let d = diag.get(i).copied().unwrap_or(0);
                let scale = if d == 0 { 1 } else { p_part(d, p) };
                s.v_inv.row(i).into_iter().map(|x| scale * x).collect()
            })
            .collect();
        intmat::lattice_basis(&IntMatrix::from_rows(&rows, n))
    };
    let cover = datum.coinduced(&basis)?.with_name(format!("{}_prox{p}", datum.name()));
    Ok((cover, basis))
}

fn p_part(d: i64, p: u64) -> i64 {
    let p = p as i64;
    let mut d = d.abs();
    let mut out = 1;
    while d % p == 0 {
        d /= p;
        out *= p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(12, 2), 4);
        assert_eq!(p_part(12, 3), 3);
        assert_eq!(p_part(12, 5), 1);
    }
}
