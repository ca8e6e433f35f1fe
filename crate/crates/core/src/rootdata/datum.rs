use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::intmat::{self, IntMatrix};

/// Upper bound on the number of positive roots accepted while closing up a
/// root system; larger means the Cartan matrix is not of finite type.
const MAX_POSITIVE_ROOTS: usize = 512;

/// A root datum `(X, Φ, Y, Φ̌)` with `X = Y = Z^rank` and pairing
/// `<x, y> = x^T P y`.
///
/// Roots are listed positive first (by height), then their negatives in the
/// same order. `coroots[i]` is the coroot of `roots[i]`.
#[derive(Clone, Debug, Serialize)]
pub struct RootDatum {
    name: String,
    rank: usize,
    pairing: IntMatrix,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    /// Coefficients of each root in the simple roots.
    root_coords: Vec<Vec<i64>>,
    cartan: IntMatrix,
}

impl RootDatum {
    /// Builds a datum from a base of simple roots and their coroots, closing
    /// up under the simple reflections.
    pub fn new(
        name: impl Into<String>,
        rank: usize,
        pairing: IntMatrix,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let name = name.into();
        if pairing.rows() != rank || pairing.cols() != rank {
            return Err(Error::invalid(format!("{name}: pairing must be {rank}x{rank}")));
        }
        if !pairing.is_unimodular() {
            return Err(Error::invalid(format!("{name}: pairing is not perfect")));
        }
        if simple_roots.len() != simple_coroots.len() {
            return Err(Error::invalid(format!(
                "{name}: {} simple roots but {} simple coroots",
                simple_roots.len(),
                simple_coroots.len()
            )));
        }
        if simple_roots.iter().chain(&simple_coroots).any(|v| v.len() != rank) {
            return Err(Error::invalid(format!("{name}: vector length differs from rank {rank}")));
        }
        let l = simple_roots.len();
        let pair = |x: &[i64], y: &[i64]| dot(&pairing.vec_mul(x), y);
        // a_ij = <alpha_j, coroot_i>
        let mut cartan = IntMatrix::zeros(l, l);
        for i in 0..l {
            for j in 0..l {
                cartan[(i, j)] = pair(&simple_roots[j], &simple_coroots[i]);
            }
        }
        for i in 0..l {
            if cartan[(i, i)] != 2 {
                return Err(Error::invalid(format!(
                    "{name}: <alpha_{}, coroot_{}> = {} instead of 2",
                    i + 1,
                    i + 1,
                    cartan[(i, i)]
                )));
            }
            for j in 0..l {
                if i != j && (cartan[(i, j)] > 0 || (cartan[(i, j)] == 0) != (cartan[(j, i)] == 0)) {
                    return Err(Error::invalid(format!("{name}: not a Cartan matrix: {cartan}")));
                }
            }
        }
        let sr = IntMatrix::from_rows(&simple_roots, rank);
        let sc = IntMatrix::from_rows(&simple_coroots, rank);
        if intmat::smith_normal_form(&sr).rank() != l || intmat::smith_normal_form(&sc).rank() != l {
            return Err(Error::invalid(format!("{name}: simple roots are linearly dependent")));
        }

        let (pos_root_coords, pos_coroot_coords) = positive_roots(&cartan)
            .ok_or_else(|| Error::invalid(format!("{name}: Cartan matrix is not of finite type")))?;
        let combine = |coords: &[i64], basis: &[Vec<i64>]| -> Vec<i64> {
            (0..rank).map(|k| coords.iter().zip(basis).map(|(c, b)| c * b[k]).sum()).collect()
        };
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        let mut root_coords = Vec::new();
        for sign in [1i64, -1] {
            for (rc, cc) in pos_root_coords.iter().zip(&pos_coroot_coords) {
                let rc: Vec<i64> = rc.iter().map(|c| sign * c).collect();
                let cc: Vec<i64> = cc.iter().map(|c| sign * c).collect();
                roots.push(combine(&rc, &simple_roots));
                coroots.push(combine(&cc, &simple_coroots));
                root_coords.push(rc);
            }
        }
        let datum = RootDatum {
            name,
            rank,
            pairing,
            simple_roots,
            simple_coroots,
            roots,
            coroots,
            root_coords,
            cartan,
        };
        datum.validate()?;
        Ok(datum)
    }

    /// Re-checks the root datum axioms on the closed-up root system.
    fn validate(&self) -> Result<()> {
        let root_set: HashMap<&Vec<i64>, usize> =
            self.roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
        if root_set.len() != self.roots.len() {
            return Err(Error::invalid(format!("{}: repeated roots", self.name)));
        }
        for (a, ac) in self.roots.iter().zip(&self.coroots) {
            if self.pair(a, ac) != 2 {
                return Err(Error::invalid(format!("{}: <alpha, coroot> != 2", self.name)));
            }
            let double: Vec<i64> = a.iter().map(|x| 2 * x).collect();
            if root_set.contains_key(&double) {
                return Err(Error::invalid(format!("{}: root system is not reduced", self.name)));
            }
            for (b, bc) in self.roots.iter().zip(&self.coroots) {
                let k = self.pair(b, ac);
                let img: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - k * y).collect();
                let Some(&idx) = root_set.get(&img) else {
                    return Err(Error::invalid(format!("{}: reflections do not permute roots", self.name)));
                };
                let kc = self.pair(a, bc);
                let cimg: Vec<i64> = bc.iter().zip(ac).map(|(x, y)| x - kc * y).collect();
                if self.coroots[idx] != cimg {
                    return Err(Error::invalid(format!("{}: reflections do not permute coroots", self.name)));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    /// Rank of the central torus.
    pub fn central_rank(&self) -> usize {
        self.rank - self.semisimple_rank()
    }

    pub fn pairing(&self) -> &IntMatrix {
        &self.pairing
    }

    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        dot(&self.pairing.vec_mul(x), y)
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.num_positive_roots()]
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.coroots[..self.num_positive_roots()]
    }

    /// Coefficients of root `i` in the simple roots.
    pub fn root_coords(&self, i: usize) -> &[i64] {
        &self.root_coords[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len() / 2
    }

    /// `dim G = |Φ| + rank`.
    pub fn dim_group(&self) -> usize {
        self.roots.len() + self.rank
    }

    /// `a_ij = <alpha_j, coroot_i>`.
    pub fn cartan_matrix(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn is_semisimple(&self) -> bool {
        self.central_rank() == 0
    }

    /// Matrix of the reflection in root `i` acting on `Y` (columns are images
    /// of basis vectors): `s(y) = y - <alpha, y> coroot`.
    pub fn reflection_on_y(&self, i: usize) -> IntMatrix {
        let a = &self.roots[i];
        let ac = &self.coroots[i];
        let mut m = IntMatrix::identity(self.rank);
        for col in 0..self.rank {
            let mut e = vec![0; self.rank];
            e[col] = 1;
            let k = self.pair(a, &e);
            for row in 0..self.rank {
                m[(row, col)] -= k * ac[row];
            }
        }
        m
    }

    pub fn simple_reflection_on_y(&self, i: usize) -> IntMatrix {
        let idx = self.root_index(&self.simple_roots[i]).expect("simple root present");
        self.reflection_on_y(idx)
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == root)
    }

    pub fn coroot_index(&self, coroot: &[i64]) -> Option<usize> {
        self.coroots.iter().position(|r| r == coroot)
    }

    /// Index of the negative of root `i`.
    pub fn negative(&self, i: usize) -> usize {
        let n = self.num_positive_roots();
        if i < n {
            i + n
        } else {
            i - n
        }
    }

    pub fn root_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.roots, self.rank)
    }

    pub fn coroot_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.coroots, self.rank)
    }

    /// `B⊥ ⊆ X` and the saturation `B⊤ ⊆ Y` of a finite subset of `Y`, each
    /// as a basis of row vectors.
    pub fn perp_and_saturation(&self, b: &[Vec<i64>]) -> (IntMatrix, IntMatrix) {
        if b.is_empty() {
            return (IntMatrix::identity(self.rank), IntMatrix::zeros(0, self.rank));
        }
        // <x, y> = (P y) . x
        let py: Vec<Vec<i64>> = b.iter().map(|y| self.pairing.mul_vec(y)).collect();
        let perp = intmat::kernel(&IntMatrix::from_rows(&py, self.rank));
        let sat = intmat::saturation(&IntMatrix::from_rows(b, self.rank));
        (perp, sat)
    }

    /// The datum `(B*, ι̌Φ, B, Φ̌)` coinduced by a sublattice `B ⊆ Y`
    /// (given by generators) containing every coroot.
    pub fn coinduced(&self, b: &IntMatrix) -> Result<RootDatum> {
        let basis = intmat::lattice_basis(b);
        let k = basis.rows();
        let mut new_coroots = Vec::with_capacity(self.simple_coroots.len());
        for c in &self.coroots {
            if intmat::coordinates(&basis, c).is_none() {
                return Err(Error::invalid(format!(
                    "{}: sublattice does not contain the coroot {c:?}",
                    self.name
                )));
            }
        }
        for c in &self.simple_coroots {
            new_coroots.push(intmat::coordinates(&basis, c).expect("checked above"));
        }
        let new_roots: Vec<Vec<i64>> = self
            .simple_roots
            .iter()
            .map(|a| (0..k).map(|j| self.pair(a, &basis.row(j))).collect())
            .collect();
        RootDatum::new(self.name.clone(), k, IntMatrix::identity(k), new_roots, new_coroots)
    }

    /// `(X/Φ̌⊥, Φ, Φ̌⊤, Φ̌)`.
    pub fn derived(&self) -> Result<RootDatum> {
        let (_, sat) = self.perp_and_saturation(&self.coroots);
        self.coinduced(&sat).map(|d| d.with_name(format!("{}_der", self.name)))
    }

    /// `(Λ, Φ, ZΦ̌, Φ̌)` with `Λ` the weight lattice.
    pub fn simply_connected_cover(&self) -> Result<RootDatum> {
        let gens = if self.coroots.is_empty() {
            IntMatrix::zeros(0, self.rank)
        } else {
            self.coroot_matrix()
        };
        self.coinduced(&gens).map(|d| d.with_name(format!("{}_sc", self.name)))
    }

    /// Torsion invariants of `Y / ZΦ̌`.
    pub fn fundamental_group_torsion(&self) -> Vec<i64> {
        intmat::quotient_torsion(self.rank, &self.coroots)
    }

    /// Torsion invariants of `X / ZΦ`.
    pub fn center_torsion(&self) -> Vec<i64> {
        intmat::quotient_torsion(self.rank, &self.roots)
    }

    /// Decides isomorphism of root data: an isomorphism `Y -> Y'` carrying
    /// simple coroots to simple coroots and dual to a map carrying roots to
    /// roots. Central parts of rank at most two are searched with entries in
    /// `[-2, 2]`.
    pub fn is_isomorphic(&self, other: &RootDatum) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// Matrix `g` on `Y` coordinates (columns are images) realizing an
    /// isomorphism, if one is found.
    pub fn find_isomorphism(&self, other: &RootDatum) -> Option<IntMatrix> {
        use crate::linalg::QMatrix;

        if self.rank != other.rank
            || self.semisimple_rank() != other.semisimple_rank()
            || self.roots.len() != other.roots.len()
        {
            return None;
        }
        let l = self.semisimple_rank();
        let n = self.rank;
        let r = n - l;
        let radical = |d: &RootDatum| -> Vec<Vec<i64>> {
            // {y : <alpha, y> = 0 for all simple alpha}
            if d.simple_roots.is_empty() {
                return IntMatrix::identity(d.rank).to_rows();
            }
            let rows: Vec<Vec<i64>> = d.simple_roots.iter().map(|a| d.pairing.vec_mul(a)).collect();
            intmat::kernel(&IntMatrix::from_rows(&rows, d.rank)).to_rows()
        };
        let rad1 = radical(self);
        let rad2 = radical(other);
        if r > 2 {
            return None;
        }
        let mut src: Vec<Vec<i64>> = self.simple_coroots.clone();
        src.extend(rad1.iter().cloned());
        let src_q = QMatrix::from_int(&IntMatrix::from_rows(&src, n).transpose());
        let src_inv = src_q.inverse()?;

        let candidates_a: Vec<IntMatrix> = small_gl(r);
        for perm in permutations_of(l) {
            if (0..l).any(|i| {
                (0..l).any(|j| self.cartan[(i, j)] != other.cartan[(perm[i], perm[j])])
            }) {
                continue;
            }
            for a in &candidates_a {
                let mut dst: Vec<Vec<i64>> = perm.iter().map(|&p| other.simple_coroots[p].clone()).collect();
                for col in 0..r {
                    let v: Vec<i64> = (0..n)
                        .map(|k| (0..r).map(|m| a[(m, col)] * rad2[m][k]).sum())
                        .collect();
                    dst.push(v);
                }
                let dst_q = QMatrix::from_int(&IntMatrix::from_rows(&dst, n).transpose());
                let g = dst_q.mul(&src_inv);
                let mut gi = IntMatrix::zeros(n, n);
                let mut integral = true;
                for i in 0..n {
                    for j in 0..n {
                        if !g[(i, j)].is_integer() {
                            integral = false;
                        } else {
                            gi[(i, j)] = num_traits::ToPrimitive::to_i64(&g[(i, j)].to_integer()).unwrap();
                        }
                    }
                }
                if !integral || gi.det().abs() != 1 {
                    continue;
                }
                // Roots: <alpha'_{perm i}, g y> = <alpha_i, y> for all y.
                let ok = (0..l).all(|i| {
                    (0..n).all(|c| {
                        let mut e = vec![0; n];
                        e[c] = 1;
                        other.pair(&other.simple_roots[perm[i]], &gi.mul_vec(&e))
                            == self.pair(&self.simple_roots[i], &e)
                    })
                });
                if ok {
                    return Some(gi);
                }
            }
        }
        None
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Positive roots and coroots in simple coordinates, sorted by height.
fn positive_roots(cartan: &IntMatrix) -> Option<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let l = cartan.rows();
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut coroots: Vec<Vec<i64>> = Vec::new();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..l {
        let mut e = vec![0; l];
        e[i] = 1;
        seen.insert(e.clone());
        roots.push(e.clone());
        coroots.push(e);
    }
    let mut k = 0;
    while k < roots.len() {
        for i in 0..l {
            let (b, bc) = (roots[k].clone(), coroots[k].clone());
            // <beta, coroot_i> = sum_j c_j a_ij ; <alpha_i, betacheck> = sum_j d_j a_ji
            let p: i64 = (0..l).map(|j| b[j] * cartan[(i, j)]).sum();
            let pc: i64 = (0..l).map(|j| bc[j] * cartan[(j, i)]).sum();
            let mut nb = b.clone();
            nb[i] -= p;
            let mut nbc = bc.clone();
            nbc[i] -= pc;
            if nb.iter().all(|&c| c >= 0) && nb.iter().any(|&c| c > 0) && seen.insert(nb.clone()) {
                roots.push(nb);
                coroots.push(nbc);
                if roots.len() > MAX_POSITIVE_ROOTS {
                    return None;
                }
            }
        }
        k += 1;
    }
    let mut idx: Vec<usize> = (0..roots.len()).collect();
    idx.sort_by_key(|&i| (roots[i].iter().sum::<i64>(), std::cmp::Reverse(roots[i].clone())));
    Some((
        idx.iter().map(|&i| roots[i].clone()).collect(),
        idx.iter().map(|&i| coroots[i].clone()).collect(),
    ))
}

pub(crate) fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    crate::partition::permutations(n)
}

/// Elements of `GL_r(Z)` with entries in `[-2, 2]`.
fn small_gl(r: usize) -> Vec<IntMatrix> {
    let mut out = Vec::new();
    let cells = r * r;
    let total = 5usize.pow(cells as u32);
    for code in 0..total {
        let mut m = IntMatrix::zeros(r, r);
        let mut c = code;
        for k in 0..cells {
            m[(k / r, k % r)] = (c % 5) as i64 - 2;
            c /= 5;
        }
        if m.det().abs() == 1 {
            out.push(m);
        }
    }
    out
}
