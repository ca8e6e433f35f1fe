use serde::Serialize;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{char_poly, QMatrix};
use crate::partition::{cycle_type, mn_character, partitions, Partition};
use crate::poly::{rat, Rational};

use super::fake::{molien_series, series_valuation};
use super::group::WeylGroup;

/// Character table with rows indexed by irreducible characters and columns by
/// conjugacy classes in the order of [`WeylGroup::classes`].
#[derive(Clone, Debug, Serialize)]
pub struct CharTable {
    pub labels: Vec<String>,
    /// Partition labels when the group is of type A.
    pub partitions: Option<Vec<Partition>>,
    pub class_sizes: Vec<usize>,
    pub class_reps: Vec<usize>,
    pub values: Vec<Vec<i64>>,
    pub group_order: usize,
}

impl CharTable {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.values[i][0]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn index_of_partition(&self, p: &Partition) -> Option<usize> {
        self.partitions.as_ref()?.iter().position(|q| q == p)
    }

    pub fn trivial(&self) -> usize {
        self.values.iter().position(|r| r.iter().all(|&v| v == 1)).expect("trivial character present")
    }

    /// Row of `E ⊗ sgn`, given the sign values on classes.
    pub fn tensor_sign_index(&self, i: usize, sign: &[i64]) -> Option<usize> {
        let target: Vec<i64> = self.values[i].iter().zip(sign).map(|(a, b)| a * b).collect();
        self.values.iter().position(|r| *r == target)
    }

    /// `<f, g>` for class functions given by values on classes (real valued).
    pub fn inner_product(&self, f: &[Rational], g: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for c in 0..self.class_sizes.len() {
            s += &f[c] * &g[c] * rat(self.class_sizes[c] as i64);
        }
        s / rat(self.group_order as i64)
    }

    pub fn row_rational(&self, i: usize) -> Vec<Rational> {
        self.values[i].iter().map(|&v| rat(v)).collect()
    }

    /// Multiplicities of each irreducible in a class function.
    pub fn decompose(&self, f: &[Rational]) -> Vec<Rational> {
        (0..self.len()).map(|i| self.inner_product(f, &self.row_rational(i))).collect()
    }
}

/// Computes the irreducible characters by the Burnside–Dixon method: common
/// eigenvectors of the class multiplication matrices.
pub fn burnside_rows(w: &WeylGroup) -> Result<Vec<Vec<i64>>> {
    let g = w.group();
    let m = w.num_classes();
    let order = w.order();
    // c[j][i][k] = #{x in C_i : x^{-1} g_k in C_j}
    let mut c = vec![vec![vec![0i64; m]; m]; m];
    for k in 0..m {
        let gk = w.class_rep(k);
        for x in 0..order {
            let i = w.class_of(x);
            let j = w.class_of(g.mul(g.inv(x), gk));
            c[j][i][k] += 1;
        }
    }
    let mut spaces: Vec<Vec<Vec<Rational>>> = vec![(0..m)
        .map(|i| (0..m).map(|k| if i == k { rat(1) } else { rat(0) }).collect())
        .collect()];
    for j in 1..m {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mj = QMatrix::from_fn(m, m, |i, k| rat(c[j][i][k]));
        let bound = w.class_size(j) as i64;
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let d = basis.len();
            let b = QMatrix::from_fn(m, d, |r, s| basis[s][r].clone());
            let r = b
                .solve(&mj.mul(&b))
                .ok_or_else(|| Error::assertion("class algebra subspace is not invariant"))?;
            let cp = char_poly(&r);
            let mut found = 0;
            for lam in -bound..=bound {
                if !cp.eval(&rat(lam)).is_zero() {
                    continue;
                }
                let shifted = r.sub(&QMatrix::identity(d).scale(&rat(lam)));
                let kernel = shifted.nullspace();
                found += kernel.len();
                let vecs: Vec<Vec<Rational>> = kernel
                    .iter()
                    .map(|z| {
                        (0..m)
                            .map(|row| (0..d).map(|s| &b[(row, s)] * &z[s]).sum())
                            .collect()
                    })
                    .collect();
                next.push(vecs);
            }
            if found != d {
                return Err(Error::assertion("class matrix eigenvalues are not integers"));
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) || spaces.len() != m {
        return Err(Error::assertion("class algebra did not split into characters"));
    }
    let mut rows = Vec::with_capacity(m);
    for s in spaces {
        let v = &s[0];
        let omega: Vec<Rational> = v.iter().map(|x| x / &v[0]).collect();
        let mut denom = Rational::zero();
        for (j, om) in omega.iter().enumerate() {
            denom += om * om / rat(w.class_size(j) as i64);
        }
        let deg_sq = rat(order as i64) / denom;
        if !deg_sq.is_integer() {
            return Err(Error::assertion("squared degree is not an integer"));
        }
        let dsq = deg_sq.to_integer().to_i64().unwrap();
        let deg = (dsq as f64).sqrt().round() as i64;
        if deg * deg != dsq {
            return Err(Error::assertion("degree is not an integer"));
        }
        let mut row = Vec::with_capacity(m);
        for (j, om) in omega.iter().enumerate() {
            let val = om * rat(deg) / rat(w.class_size(j) as i64);
            if !val.is_integer() {
                return Err(Error::assertion("character value is not a rational integer"));
            }
            row.push(val.to_integer().to_i64().unwrap());
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Character table of `W`. Type A rows are labelled by partitions with `(n)`
/// the trivial character; other irreducible types use `phi{d},{b}` labels,
/// with primes ordered by decreasing value on the first simple reflection;
/// any other group uses `chi{k}` labels.
pub fn character_table(w: &WeylGroup) -> Result<CharTable> {
    let rows = burnside_rows(w)?;
    let class_sizes: Vec<usize> = (0..w.num_classes()).map(|c| w.class_size(c)).collect();
    let class_reps: Vec<usize> = (0..w.num_classes()).map(|c| w.class_rep(c)).collect();

    if let Some(n) = w.type_a_degree() {
        let parts = partitions(n);
        let cycle_types: Vec<Partition> =
            class_reps.iter().map(|&r| cycle_type(w.permutation(r).unwrap())).collect();
        let mut values = Vec::with_capacity(parts.len());
        for p in &parts {
            let expect: Vec<i64> = cycle_types.iter().map(|mu| mn_character(p, mu)).collect();
            if !rows.contains(&expect) {
                return Err(Error::assertion(format!(
                    "Murnaghan–Nakayama character {p} not found among computed characters"
                )));
            }
            values.push(expect);
        }
        if rows.len() != parts.len() {
            return Err(Error::assertion("number of characters differs from number of partitions"));
        }
        return Ok(CharTable {
            labels: parts.iter().map(|p| p.label()).collect(),
            partitions: Some(parts),
            class_sizes,
            class_reps,
            values,
            group_order: w.order(),
        });
    }

    let b: Vec<usize> = rows
        .iter()
        .map(|r| {
            let vals: Vec<Rational> = r.iter().map(|&v| rat(v)).collect();
            series_valuation(&molien_series(w, &vals)).unwrap_or(0)
        })
        .collect();
    let s1_class = if w.datum().semisimple_rank() > 0 {
        let node = w.cartan_type().components.first().map_or(0, |c| c.nodes[0]);
        Some(w.class_of(w.simple_reflection(node)))
    } else {
        None
    };
    let s1 = |i: usize| s1_class.map_or(0, |c| rows[i][c]);
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by(|&x, &y| {
        (rows[x][0], b[x])
            .cmp(&(rows[y][0], b[y]))
            .then(s1(y).cmp(&s1(x)))
            .then(rows[y].cmp(&rows[x]))
    });
    let irreducible = w.cartan_type().components.len() == 1;
    let mut labels = Vec::with_capacity(rows.len());
    for (pos, &i) in order.iter().enumerate() {
        if irreducible {
            let same: Vec<usize> =
                order.iter().copied().filter(|&k| rows[k][0] == rows[i][0] && b[k] == b[i]).collect();
            let primes = if same.len() > 1 {
                "'".repeat(same.iter().position(|&k| k == i).unwrap() + 1)
            } else {
                String::new()
            };
            labels.push(format!("phi{},{}{}", rows[i][0], b[i], primes));
        } else {
            labels.push(format!("chi{pos}"));
        }
    }
    Ok(CharTable {
        labels,
        partitions: None,
        class_sizes,
        class_reps,
        values: order.iter().map(|&i| rows[i].clone()).collect(),
        group_order: w.order(),
    })
}

/// Label of `E ⊗ sgn`.
pub fn tensor_sign(w: &WeylGroup, table: &CharTable, label: &str) -> Result<String> {
    let i = table.index_of(label).ok_or_else(|| Error::invalid(format!("unknown character {label}")))?;
    let sign: Vec<i64> = table.class_reps.iter().map(|&r| w.sign(r)).collect();
    let j = table
        .tensor_sign_index(i, &sign)
        .ok_or_else(|| Error::assertion("sign twist of an irreducible is not irreducible"))?;
    Ok(table.labels[j].clone())
}
