use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::intmat::IntMatrix;

use super::RootDatum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// One irreducible component of a Cartan matrix. `nodes` lists indices of
/// simple roots of the datum in the standard (Bourbaki) numbering. Rank-two
/// double bonds are always reported as `B2`, with the long root first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
    pub nodes: Vec<usize>,
}

impl Component {
    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Cartan type of a root datum: irreducible components plus central rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanType {
    pub components: Vec<Component>,
    pub central_rank: usize,
}

impl CartanType {
    pub fn label(&self) -> String {
        let mut parts: Vec<String> = self.components.iter().map(|c| c.label()).collect();
        if self.central_rank > 0 {
            parts.push(format!("T{}", self.central_rank));
        }
        if parts.is_empty() {
            "T0".to_string()
        } else {
            parts.join("+")
        }
    }

    /// The single component, if the semisimple part is irreducible.
    pub fn irreducible(&self) -> Option<&Component> {
        match self.components.as_slice() {
            [c] => Some(c),
            _ => None,
        }
    }

    /// Standard bad primes of the components.
    pub fn bad_primes(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .components
            .iter()
            .flat_map(|c| match (c.family, c.rank) {
                (Family::A, _) => vec![],
                (Family::B | Family::C | Family::D, _) => vec![2],
                (Family::G, _) | (Family::F, _) => vec![2, 3],
                (Family::E, 8) => vec![2, 3, 5],
                (Family::E, _) => vec![2, 3],
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

pub fn cartan_type(datum: &RootDatum) -> Result<CartanType> {
    let components = classify_cartan(datum.cartan_matrix())?;
    Ok(CartanType { components, central_rank: datum.central_rank() })
}

/// Decomposes a Cartan matrix `a_ij = <alpha_j, coroot_i>` into irreducible
/// components of finite type.
pub fn classify_cartan(a: &IntMatrix) -> Result<Vec<Component>> {
    let l = a.rows();
    let mut comp_of = vec![usize::MAX; l];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..l {
        if comp_of[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![s];
        let mut members = Vec::new();
        comp_of[s] = id;
        while let Some(x) = stack.pop() {
            members.push(x);
            for y in 0..l {
                if y != x && a[(x, y)] != 0 && comp_of[y] == usize::MAX {
                    comp_of[y] = id;
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    comps.iter().map(|m| classify_irreducible(a, m)).collect()
}

fn classify_irreducible(a: &IntMatrix, nodes: &[usize]) -> Result<Component> {
    let n = nodes.len();
    let err = || Error::unsupported(format!("Cartan matrix component {nodes:?} is not of finite type"));
    let neighbours = |x: usize| -> Vec<usize> {
        nodes.iter().copied().filter(|&y| y != x && a[(x, y)] != 0).collect()
    };
    // bond multiplicity a_xy * a_yx
    let bond = |x: usize, y: usize| a[(x, y)] * a[(y, x)];
    // x shorter than y when |a_xy| > |a_yx|
    let shorter = |x: usize, y: usize| a[(x, y)].abs() > a[(y, x)].abs();

    if n == 1 {
        return Ok(Component { family: Family::A, rank: 1, nodes: nodes.to_vec() });
    }
    let mut edges = 0;
    for (i, &x) in nodes.iter().enumerate() {
        for &y in &nodes[i + 1..] {
            if a[(x, y)] != 0 {
                edges += 1;
                if !(1..=3).contains(&bond(x, y)) {
                    return Err(err());
                }
            }
        }
    }
    if edges != n - 1 {
        return Err(err());
    }
    let degrees: Vec<usize> = nodes.iter().map(|&x| neighbours(x).len()).collect();
    let max_deg = *degrees.iter().max().unwrap();
    let multi: Vec<(usize, usize)> = nodes
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| nodes[i + 1..].iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| a[(x, y)] != 0 && bond(x, y) > 1)
        .collect();

    // Walks a chain from an endpoint.
    let chain_from = |start: usize| -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next: Vec<usize> = neighbours(cur).into_iter().filter(|&y| y != prev).collect();
            match next.as_slice() {
                [] => break,
                [y] => {
                    prev = cur;
                    cur = *y;
                    order.push(cur);
                }
                _ => unreachable!("chain has a branch"),
            }
        }
        order
    };

    if max_deg <= 2 {
        let ends: Vec<usize> =
            nodes.iter().copied().zip(&degrees).filter(|(_, &d)| d == 1).map(|(x, _)| x).collect();
        match multi.as_slice() {
            [] => {
                return Ok(Component { family: Family::A, rank: n, nodes: chain_from(ends[0]) });
            }
            [(x, y)] => {
                let (x, y) = (*x, *y);
                let b = bond(x, y);
                if b == 3 {
                    if n != 2 {
                        return Err(err());
                    }
                    // G2: short root first.
                    let (s, l) = if shorter(x, y) { (x, y) } else { (y, x) };
                    return Ok(Component { family: Family::G, rank: 2, nodes: vec![s, l] });
                }
                if n == 2 {
                    let (lg, s) = if shorter(x, y) { (y, x) } else { (x, y) };
                    return Ok(Component { family: Family::B, rank: 2, nodes: vec![lg, s] });
                }
                let x_end = degrees[nodes.iter().position(|&z| z == x).unwrap()] == 1;
                let y_end = degrees[nodes.iter().position(|&z| z == y).unwrap()] == 1;
                if x_end || y_end {
                    // B_n / C_n: the double bond sits at the end of the chain.
                    let end = if x_end { x } else { y };
                    let other = if x_end { y } else { x };
                    let start = *ends.iter().find(|&&e| e != end).unwrap();
                    let order = chain_from(start);
                    let family = if shorter(end, other) { Family::B } else { Family::C };
                    return Ok(Component { family, rank: n, nodes: order });
                }
                if n == 4 {
                    // F4: long roots first.
                    let mut order = chain_from(ends[0]);
                    if shorter(order[0], order[1]) || shorter(order[1], order[2]) {
                        order.reverse();
                    }
                    return Ok(Component { family: Family::F, rank: 4, nodes: order });
                }
                return Err(err());
            }
            _ => return Err(err()),
        }
    }
    if max_deg != 3 || !multi.is_empty() {
        return Err(err());
    }
    let centre = nodes[degrees.iter().position(|&d| d == 3).unwrap()];
    let mut arms: Vec<Vec<usize>> = neighbours(centre)
        .into_iter()
        .map(|start| {
            let mut arm = vec![start];
            let mut prev = centre;
            let mut cur = start;
            loop {
                let next: Vec<usize> = neighbours(cur).into_iter().filter(|&y| y != prev).collect();
                match next.as_slice() {
                    [] => break,
                    [y] => {
                        prev = cur;
                        cur = *y;
                        arm.push(cur);
                    }
                    _ => break,
                }
            }
            arm
        })
        .collect();
    if arms.iter().map(|a| a.len()).sum::<usize>() + 1 != n {
        return Err(err());
    }
    arms.sort_by_key(|a| a.len());
    let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
    match lens.as_slice() {
        [1, 1, _] => {
            // D_n: long arm reversed, centre, then the two leaves.
            let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
            order.push(centre);
            order.push(arms[0][0]);
            order.push(arms[1][0]);
            Ok(Component { family: Family::D, rank: n, nodes: order })
        }
        [1, 2, k] if (2..=4).contains(k) => {
            // E_n: alpha1, alpha2 (short arm), alpha3, alpha4 (centre), ...
            let mut order = vec![arms[1][1], arms[0][0], arms[1][0], centre];
            order.extend(arms[2].iter().copied());
            Ok(Component { family: Family::E, rank: n, nodes: order })
        }
        _ => Err(err()),
    }
}

/// Cartan matrix of an irreducible type in the standard numbering, with
/// `a_ij = <alpha_j, coroot_i>`.
pub fn cartan_matrix(family: Family, rank: usize) -> Result<IntMatrix> {
    let n = rank;
    let bad = || Error::unsupported(format!("no type {family}{rank}"));
    let mut a = IntMatrix::identity(n);
    for i in 0..n {
        a[(i, i)] = 2;
    }
    let link = |a: &mut IntMatrix, i: usize, j: usize| {
        a[(i, j)] = -1;
        a[(j, i)] = -1;
    };
    match family {
        Family::A => {
            if n == 0 {
                return Err(bad());
            }
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
        }
        Family::B | Family::C => {
            if n < 2 {
                return Err(bad());
            }
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            // B: alpha_n short, so its row carries the -2.
            if family == Family::B {
                a[(n - 1, n - 2)] = -2;
            } else {
                a[(n - 2, n - 1)] = -2;
            }
        }
        Family::D => {
            if n < 4 {
                return Err(bad());
            }
            for i in 0..n - 2 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, n - 3, n - 1);
        }
        Family::E => {
            if !(6..=8).contains(&n) {
                return Err(bad());
            }
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            for i in 2..n - 1 {
                link(&mut a, i, i + 1);
            }
        }
        Family::F => {
            if n != 4 {
                return Err(bad());
            }
            link(&mut a, 0, 1);
            link(&mut a, 1, 2);
            link(&mut a, 2, 3);
            a[(2, 1)] = -2;
        }
        Family::G => {
            if n != 2 {
                return Err(bad());
            }
            a[(0, 1)] = -3;
            a[(1, 0)] = -1;
        }
    }
    Ok(a)
}
