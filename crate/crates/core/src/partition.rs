//! Integer partitions and the symmetric-group combinatorics built on them.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A partition, stored with parts in weakly decreasing order and no zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let n = self.part(0);
        Partition((0..n).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// `self ⊵ other` in dominance order (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicities `m_i` keyed by part size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn sum_of_squares(&self) -> usize {
        self.0.iter().map(|p| p * p).sum()
    }

    /// Dimension of the irreducible `S_n`-module, by the hook length formula.
    pub fn hook_dimension(&self) -> u64 {
        let t = self.transpose();
        let mut num: u128 = (1..=self.size() as u128).product();
        let mut den: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                den *= (row - j + t.part(j) - i - 1) as u128;
            }
        }
        num /= den;
        num as u64
    }

    /// Label such as `(2,1,1)`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        format!("({})", parts.join(","))
    }

    /// Parses `(2,1,1)`, `2,1,1`, `2 1 1` or `211` (single digits only in the
    /// last form).
    pub fn parse(s: &str) -> Option<Partition> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let t = t.trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Some(Partition::new(Vec::new()));
        }
        let pieces: Vec<&str> = if t.contains(',') {
            t.split(',').collect()
        } else if t.contains(char::is_whitespace) {
            t.split_whitespace().collect()
        } else {
            return t
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<Vec<_>>>()
                .map(Partition::new);
        };
        pieces
            .iter()
            .map(|p| p.trim().parse::<usize>().ok())
            .collect::<Option<Vec<_>>>()
            .map(Partition::new)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first and
/// `(1^n)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Character value `χ^λ(μ)` of the symmetric group by the
/// Murnaghan–Nakayama rule, with `χ^(n)` the trivial character.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size(), "partition sizes differ");
    // Beta-set with enough beads.
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    mn_rec(&beta, mu.parts())
}

fn mn_rec(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // Sign is (-1)^(number of beads strictly between b - r and b).
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut nb = beta.to_vec();
        nb[idx] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&nb, rest);
    }
    total
}

/// Cycle type of a permutation of `0..n`.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

/// Shape of the Robinson–Schensted insertion tableau of the word
/// `perm[0], perm[1], ...`.
pub fn rsk_shape(perm: &[usize]) -> Partition {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in perm {
        let mut x = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&y| y > x) {
                Some(pos) => x = std::mem::replace(&mut row[pos], x),
                None => {
                    row.push(x);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![x]);
        }
    }
    Partition::new(rows.iter().map(|r| r.len()).collect())
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}
