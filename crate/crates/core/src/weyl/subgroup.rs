use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{rat, Rational};

use super::chartab::CharTable;
use super::fake::{molien_over, molien_series, series_valuation};
use super::group::WeylGroup;

/// A reflection subgroup of `W`, stored as the list of its elements (indices
/// into `W`).
#[derive(Clone, Debug)]
pub struct ReflectionSubgroup {
    pub roots: Vec<usize>,
    pub elements: Vec<usize>,
}

impl ReflectionSubgroup {
    /// Subgroup generated by the reflections in the given roots.
    pub fn from_roots(w: &WeylGroup, roots: &[usize]) -> ReflectionSubgroup {
        let g = w.group();
        let gens: Vec<usize> = roots.iter().map(|&r| w.reflection(r)).collect();
        let mut elements = vec![0usize];
        let mut seen = vec![false; w.order()];
        seen[0] = true;
        let mut k = 0;
        while k < elements.len() {
            for &s in &gens {
                let x = g.mul(s, elements[k]);
                if !seen[x] {
                    seen[x] = true;
                    elements.push(x);
                }
            }
            k += 1;
        }
        elements.sort_unstable();
        ReflectionSubgroup { roots: roots.to_vec(), elements }
    }

    /// Young subgroup `S_λ` of a type-A Weyl group: blocks of consecutive
    /// letters of sizes `λ_1, λ_2, ...`.
    pub fn young(w: &WeylGroup, shape: &Partition) -> Result<ReflectionSubgroup> {
        let n = w.type_a_degree().ok_or_else(|| Error::unsupported("Young subgroups need type A"))?;
        if shape.size() != n {
            return Err(Error::invalid(format!("{shape} is not a partition of {n}")));
        }
        let mut block = Vec::with_capacity(n);
        for (b, &len) in shape.parts().iter().enumerate() {
            block.extend(std::iter::repeat(b).take(len));
        }
        let mut roots = Vec::new();
        for r in 0..w.datum().num_roots() {
            let p = w.permutation(w.reflection(r)).unwrap();
            let moved: Vec<usize> = (0..n).filter(|&i| p[i] != i).collect();
            if moved.len() == 2 && block[moved[0]] == block[moved[1]] {
                roots.push(r);
            }
        }
        Ok(ReflectionSubgroup::from_roots(w, &roots))
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Number of positive roots of the subgroup.
    pub fn num_positive_roots(&self) -> usize {
        self.roots.len() / 2
    }

    /// Sign character values on the elements.
    pub fn sign_values(&self, w: &WeylGroup) -> Vec<Rational> {
        self.elements.iter().map(|&x| rat(w.sign(x))).collect()
    }

    /// Lowest degree in which a class function of the subgroup (values on
    /// `elements`) occurs in the symmetric algebra of `Y`.
    pub fn b_value(&self, w: &WeylGroup, values: &[Rational]) -> Option<usize> {
        let mats: Vec<_> = self.elements.iter().map(|&x| w.element(x)).collect();
        series_valuation(&molien_over(&mats, values))
    }

    /// Induced class function on `W`, as values on the classes of `W`.
    pub fn induce(&self, w: &WeylGroup, values: &[Rational]) -> Vec<Rational> {
        let mut on_w = vec![None; w.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            on_w[x] = Some(values[i].clone());
        }
        let g = w.group();
        let mut out = Vec::with_capacity(w.num_classes());
        for c in 0..w.num_classes() {
            let rep = w.class_rep(c);
            let mut s = Rational::zero();
            for x in 0..w.order() {
                let y = g.mul(g.mul(x, rep), g.inv(x));
                if let Some(v) = &on_w[y] {
                    s += v;
                }
            }
            out.push(s / rat(self.order() as i64));
        }
        out
    }
}

/// Constituents of `Ind(E)` with the same `b`-value as `E`, with multiplicities.
pub fn j_induction_constituents(
    w: &WeylGroup,
    table: &CharTable,
    h: &ReflectionSubgroup,
    values: &[Rational],
) -> Result<Vec<(usize, i64)>> {
    let b_e = h.b_value(w, values).ok_or_else(|| Error::invalid("zero class function"))?;
    let ind = h.induce(w, values);
    let mult = table.decompose(&ind);
    let mut out = Vec::new();
    for (i, m) in mult.iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        if !m.is_integer() {
            return Err(Error::assertion("induced character has non-integral multiplicity"));
        }
        let b_full = series_valuation(&molien_series(w, &table.row_rational(i)))
            .ok_or_else(|| Error::assertion("constituent has no b-value"))?;
        if b_full == b_e {
            out.push((i, num_traits::ToPrimitive::to_i64(&m.to_integer()).unwrap()));
        }
        if b_full < b_e {
            return Err(Error::assertion("induced character has a constituent below the b-value of E"));
        }
    }
    Ok(out)
}

/// `j_H^W(E)`, which must be a single irreducible with multiplicity one.
pub fn j_induction(w: &WeylGroup, table: &CharTable, h: &ReflectionSubgroup, values: &[Rational]) -> Result<usize> {
    match j_induction_constituents(w, table, h, values)?.as_slice() {
        [(i, 1)] => Ok(*i),
        other => Err(Error::assertion(format!("j-induction is not irreducible: {other:?}"))),
    }
}
