//! Lusztig's algorithm for the principal block: the matrix Ω, the solution
//! `PᵀΛP = Ω`, and Green functions.

mod block;


use crate::error::{Error, Result};
use crate::linalg::RMatrix;
use crate::poly::{rat, Poly, Rational};
use crate::ratfunc::RatFunc;
use crate::weyl::{reflection_degrees, CharTable, WeylGroup};

pub use block::{principal_block, BlockData, BlockPair};

/// `|G^F| = q^N Π (q^{d_i} - 1)` over the degrees on `Y` (a `1` for each
/// central dimension).
pub fn group_order_poly(w: &WeylGroup) -> Result<Poly> {
    let mut p = Poly::monomial(rat(1), w.datum().num_positive_roots());
    for d in reflection_degrees(w)? {
        p = p * Poly::q_pow_minus_one(d);
    }
    Ok(p)
}

/// `|T_w^F| = det(q - w)` on `Y`.
pub fn torus_order_poly(w: &WeylGroup, elem: usize) -> Poly {
    w.torus_order(elem)
}

/// `(1/|W|) Σ_c |c| χ_i(c) χ_j(c) h(c)`.
fn class_sum(w: &WeylGroup, table: &CharTable, i: usize, j: usize, per_class: &[Poly]) -> Poly {
    let mut s = Poly::zero();
    for c in 0..w.num_classes() {
        let coeff = table.values[i][c] * table.values[j][c] * w.class_size(c) as i64;
        if coeff != 0 {
            s = s + per_class[c].scale(&rat(coeff));
        }
    }
    s.scale(&(Rational::from_integer(1.into()) / rat(w.order() as i64)))
}

/// `|G^F| / |T_w^F|` for each class of `W`.
pub fn torus_index_polys(w: &WeylGroup) -> Result<Vec<Poly>> {
    let g = group_order_poly(w)?;
    (0..w.num_classes())
        .map(|c| {
            g.div_exact(&w.torus_order(w.class_rep(c)))
                .ok_or_else(|| Error::assertion("|T_w| does not divide |G|"))
        })
        .collect()
}

/// `ω_{ι,ι'} = q^{-dim G - (a_ι + a_ι')/2} (1/|W|) Σ_w χ_ι(w) χ_ι'(w) |G^F|/|T_w^F|`.
pub fn build_omega(w: &WeylGroup, table: &CharTable, block: &BlockData) -> Result<RMatrix> {
    let index = torus_index_polys(w)?;
    let dim_g = w.datum().dim_group() as i64;
    let n = block.pairs.len();
    let mut out = RMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let (pi, pj) = (&block.pairs[i], &block.pairs[j]);
            let a_sum = pi.a + pj.a;
            if a_sum % 2 != 0 {
                return Err(Error::assertion("a-values have odd sum"));
            }
            let s = class_sum(w, table, pi.char_index, pj.char_index, &index);
            let v = RatFunc::q_pow(-dim_g - a_sum / 2) * RatFunc::from_poly(s);
            if !v.is_polynomial() {
                return Err(Error::assertion(format!("ω entry ({}, {}) is not a polynomial", pi.label, pj.label)));
            }
            out[(i, j)] = v.clone();
            out[(j, i)] = v;
        }
    }
    Ok(out)
}

/// Solution of Lusztig's system, indexed like the block.
#[derive(Clone, Debug)]
pub struct GreenTables {
    pub labels: Vec<String>,
    pub omega: RMatrix,
    /// `P[ι'][ι]`, nonzero only if `O_ι' ⊆ closure(O_ι)`.
    pub p: RMatrix,
    pub lambda: RMatrix,
    /// `P⁻¹`.
    pub q: RMatrix,
    /// `Ω⁻¹`.
    pub omega_tilde: RMatrix,
}

impl GreenTables {
    /// Every entry of `P` is a polynomial with nonnegative integer coefficients.
    pub fn p_is_positive(&self) -> bool {
        self.p
            .to_rows()
            .iter()
            .flatten()
            .all(|e| e.to_poly().is_some_and(|p| p.is_integral() && p.has_nonnegative_coeffs()))
    }
}

fn orbit_groups(block: &BlockData) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, p) in block.pairs.iter().enumerate() {
        match groups.iter_mut().find(|g| block.pairs[g[0]].orbit == p.orbit) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    groups
}

fn get_block(m: &RMatrix, rows: &[usize], cols: &[usize]) -> RMatrix {
    m.select(rows, cols)
}

fn set_block(m: &mut RMatrix, rows: &[usize], cols: &[usize], b: &RMatrix) {
    for (r, &i) in rows.iter().enumerate() {
        for (c, &j) in cols.iter().enumerate() {
            m[(i, j)] = b[(r, c)].clone();
        }
    }
}

/// `Σ_k P_kaᵀ Λ_k P_kb` over the eliminated groups `k`.
fn contribution(p: &RMatrix, lambda: &RMatrix, done: &[Vec<usize>], a: &[usize], b: &[usize]) -> RMatrix {
    let mut s = RMatrix::zeros(a.len(), b.len());
    for k in done {
        let pka = get_block(p, k, a);
        let pkb = get_block(p, k, b);
        s = s.add(&pka.transpose().mul(&get_block(lambda, k, k)).mul(&pkb));
    }
    s
}

/// Solves `PᵀΛP = Ω` with `P` block unitriangular, supported on the closure
/// order, and `Λ` block diagonal by orbit. Orbits are eliminated in
/// increasing dimension; ties are taken in reverse block order.
pub fn lusztig_solve(omega: &RMatrix, block: &BlockData) -> Result<GreenTables> {
    let n = block.pairs.len();
    let mut groups = orbit_groups(block);
    groups.reverse();
    groups.sort_by_key(|g| block.pairs[g[0]].dim_orbit);
    let mut p = RMatrix::identity(n);
    let mut lambda = RMatrix::zeros(n, n);
    for (ga, a) in groups.iter().enumerate() {
        let done = &groups[..ga];
        let la = get_block(omega, a, a).sub(&contribution(&p, &lambda, done, a, a));
        let la_inv = la.inverse().ok_or_else(|| {
            Error::assertion(format!("singular Λ block at orbit {}", block.pairs[a[0]].orbit))
        })?;
        set_block(&mut lambda, a, a, &la);
        for b in &groups[ga + 1..] {
            let pab = la_inv.mul(&get_block(omega, a, b).sub(&contribution(&p, &lambda, done, a, b)));
            set_block(&mut p, a, b, &pab);
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !p[(i, j)].is_zero() && !block.closure[i][j] {
                return Err(Error::assertion(format!(
                    "P entry ({}, {}) is nonzero outside the closure order",
                    block.pairs[i].label, block.pairs[j].label
                )));
            }
        }
    }
    if p.transpose().mul(&lambda).mul(&p) != *omega {
        return Err(Error::assertion("PᵀΛP differs from Ω"));
    }
    let q = p.inverse().ok_or_else(|| Error::assertion("P is singular"))?;
    let omega_tilde = omega.inverse().ok_or_else(|| Error::assertion("Ω is singular"))?;
    Ok(GreenTables { labels: block.pairs.iter().map(|x| x.label.clone()).collect(), omega: omega.clone(), p, lambda, q, omega_tilde })
}

/// Entrywise `q ↦ q^{-1}`.
pub fn p_star(m: &RMatrix) -> RMatrix {
    m.map(|e| e.invert_q())
}

/// Green tables of the principal block of a datum.
pub fn green_tables(w: &WeylGroup, table: &CharTable) -> Result<(BlockData, GreenTables)> {
    let block = principal_block(w, table)?;
    let omega = build_omega(w, table, &block)?;
    let tables = lusztig_solve(&omega, &block)?;
    Ok((block, tables))
}

/// `Q_{T_w}(u_ι') = Σ_ι q^{b_ι/2} χ_ι(w) P_{ι',ι}` for each orbit `ι'` of the
/// block, in block order. Needs every pair to carry the trivial local system.
pub fn green_values(w: &WeylGroup, table: &CharTable, block: &BlockData, tables: &GreenTables, elem: usize) -> Result<Vec<Poly>> {
    if block.pairs.iter().any(|p| !p.is_trivial()) {
        return Err(Error::unsupported("Green functions with nontrivial local systems"));
    }
    let c = w.class_of(elem);
    let n = block.pairs.len();
    (0..n)
        .map(|row| {
            let mut s = Poly::zero();
            for (col, pair) in block.pairs.iter().enumerate() {
                let chi = table.values[pair.char_index][c];
                if chi == 0 || tables.p[(row, col)].is_zero() {
                    continue;
                }
                let entry = tables.p[(row, col)].to_poly().ok_or_else(|| Error::assertion("P entry is not a polynomial"))?;
                s = s + entry.shift(pair.b as usize / 2).scale(&rat(chi));
            }
            Ok(s)
        })
        .collect()
}
