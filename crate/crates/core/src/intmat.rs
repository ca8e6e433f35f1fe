//! Integer matrices, Smith and Hermite normal forms, and the lattice
//! operations built on them.
//!
//! Lattices are always given by generators stored as the *rows* of a matrix.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed for the zero-row case.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let mut m = IntMatrix::zeros(entries.len(), entries.len());
        for (i, &d) in entries.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<i64> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.rows, v.len());
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| v[i] * self[(i, j)]).sum())
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)] == 0))
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> i64 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i128>> =
            (0..n).map(|i| self.row(i).into_iter().map(i128::from).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&i| a[i][k] != 0) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        (sign * a[n - 1][n - 1]) as i64
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs() == 1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: i64) {
        if c == 0 {
            return;
        }
        for j in 0..self.cols {
            let v = self[(src, j)];
            self[(dst, j)] += c * v;
        }
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: i64) {
        if c == 0 {
            return;
        }
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] += c * v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// `u * m * v == d` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `v`.
    pub v_inv: IntMatrix,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)]).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut v_inv = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if a[(i, j)] != 0
                        && best.map_or(true, |(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(a, u, v, v_inv);
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let p = a[(t, t)];
            let mut clean = true;
            for i in t + 1..r {
                let q = a[(i, t)].div_euclid(p);
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if a[(i, t)] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..c {
                let q = a[(t, j)].div_euclid(p);
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
                v_inv.add_row(t, j, q);
                if a[(t, j)] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| a[(i, j)] % p != 0));
            match bad {
                Some(i) => {
                    a.add_row(t, i, 1);
                    u.add_row(t, i, 1);
                }
                None => break,
            }
        }
        if a[(t, t)] < 0 {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(a, u, v, v_inv)
}

fn finish(mut a: IntMatrix, mut u: IntMatrix, v: IntMatrix, v_inv: IntMatrix) -> Smith {
    for t in 0..a.rows.min(a.cols) {
        if a[(t, t)] < 0 {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    Smith { u, d: a, v, v_inv }
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `gens`:
/// positive pivots, entries above each pivot reduced into `[0, pivot)`, zero
/// rows dropped. Two generator sets span the same lattice exactly when their
/// Hermite forms agree.
pub fn hermite_normal_form(gens: &IntMatrix) -> IntMatrix {
    let mut a = gens.clone();
    let (r, c) = (a.rows, a.cols);
    let mut row = 0;
    for col in 0..c {
        if row == r {
            break;
        }
        loop {
            let piv = (row..r)
                .filter(|&i| a[(i, col)] != 0)
                .min_by_key(|&i| a[(i, col)].abs());
            let Some(pi) = piv else { break };
            a.swap_rows(row, pi);
            let p = a[(row, col)];
            let mut done = true;
            for i in row + 1..r {
                let q = a[(i, col)].div_euclid(p);
                a.add_row(i, row, -q);
                if a[(i, col)] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[(row, col)] == 0 {
            continue;
        }
        if a[(row, col)] < 0 {
            a.negate_row(row);
        }
        let p = a[(row, col)];
        for i in 0..row {
            let q = a[(i, col)].div_euclid(p);
            a.add_row(i, row, -q);
        }
        row += 1;
    }
    IntMatrix::from_rows(&a.to_rows()[..row], c)
}

/// A basis (as rows) of the lattice generated by the rows of `gens`.
pub fn lattice_basis(gens: &IntMatrix) -> IntMatrix {
    hermite_normal_form(gens)
}

/// A basis of the saturation `{y : n*y in L for some n != 0}` of the lattice
/// generated by the rows of `gens`.
pub fn saturation(gens: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(gens);
    let rank = s.rank();
    let rows: Vec<Vec<i64>> = (0..rank).map(|i| s.v_inv.row(i)).collect();
    hermite_normal_form(&IntMatrix::from_rows(&rows, gens.cols))
}

/// Invariant factors greater than one of the torsion subgroup of
/// `Z^ambient / <gens>`.
pub fn quotient_torsion(ambient_rank: usize, gens: &[Vec<i64>]) -> Vec<i64> {
    if gens.is_empty() {
        return Vec::new();
    }
    let m = IntMatrix::from_rows(gens, ambient_rank);
    smith_normal_form(&m).diagonal().into_iter().filter(|&d| d > 1).collect()
}

/// Integer basis (as rows) of the right kernel `{x : m x = 0}`.
pub fn kernel(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let rank = s.rank();
    let rows: Vec<Vec<i64>> = (rank..m.cols).map(|j| s.v.col(j)).collect();
    hermite_normal_form(&IntMatrix::from_rows(&rows, m.cols))
}

/// Solves `coeffs * basis = v` for an integer row vector `coeffs`, if one
/// exists. `basis` must have linearly independent rows.
pub fn coordinates(basis: &IntMatrix, v: &[i64]) -> Option<Vec<i64>> {
    // basis^T x = v
    let bt = basis.transpose();
    let s = smith_normal_form(&bt);
    let uv = s.u.mul_vec(v);
    let mut y = vec![0i64; bt.cols];
    for (i, &target) in uv.iter().enumerate() {
        let d = if i < bt.cols { s.d[(i, i)] } else { 0 };
        if d == 0 {
            if target != 0 {
                return None;
            }
        } else {
            if target % d != 0 {
                return None;
            }
            y[i] = target / d;
        }
    }
    Some(s.v.mul_vec(&y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_smith(m: &IntMatrix) -> Vec<i64> {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(m.cols()));
        assert!(s.d.is_diagonal());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if w[1] != 0 {
                assert!(w[0] != 0 && w[1] % w[0] == 0, "{diag:?}");
            }
        }
        diag
    }

    #[test]
    fn smith_examples() {
        assert_eq!(check_smith(&IntMatrix::from_rows(&[vec![2]], 1)), vec![2]);
        assert_eq!(check_smith(&IntMatrix::identity(2)), vec![1, 1]);
        // d1 = gcd of entries, d1 * d2 = |det|.
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![0, 6]], 2);
        assert_eq!(check_smith(&m), vec![2, 6]);
    }

    #[test]
    fn torsion_and_saturation() {
        assert_eq!(quotient_torsion(1, &[vec![2]]), vec![2]);
        assert_eq!(quotient_torsion(1, &[vec![1]]), Vec::<i64>::new());
        assert_eq!(quotient_torsion(2, &[]), Vec::<i64>::new());
        let sat = saturation(&IntMatrix::from_rows(&[vec![2, 2]], 2));
        assert_eq!(sat.to_rows(), vec![vec![1, 1]]);
        let k = kernel(&IntMatrix::from_rows(&[vec![1, 1]], 2));
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0)[0] + k.row(0)[1], 0);
    }

    #[test]
    fn coordinates_in_basis() {
        let b = IntMatrix::from_rows(&[vec![1, 1], vec![0, 2]], 2);
        assert_eq!(coordinates(&b, &[3, 5]), Some(vec![3, 1]));
        assert_eq!(coordinates(&b, &[0, 1]), None);
    }

    proptest! {
        #[test]
        fn smith_invariants(entries in prop::collection::vec(-9i64..10, 6)) {
            let m = IntMatrix::from_rows(&[entries[..3].to_vec(), entries[3..].to_vec()], 3);
            check_smith(&m);
            check_smith(&m.transpose());
        }

        #[test]
        fn hermite_is_a_lattice_invariant(entries in prop::collection::vec(-6i64..7, 4), k in -3i64..4) {
            let m = IntMatrix::from_rows(&[entries[..2].to_vec(), entries[2..].to_vec()], 2);
            let mut rows = m.to_rows();
            let r0 = rows[0].clone();
            rows[1] = rows[1].iter().zip(&r0).map(|(a, b)| a + k * b).collect();
            rows.swap(0, 1);
            let m2 = IntMatrix::from_rows(&rows, 2);
            prop_assert_eq!(hermite_normal_form(&m), hermite_normal_form(&m2));
        }
    }
}
