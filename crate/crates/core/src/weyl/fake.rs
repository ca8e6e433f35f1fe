use serde::Serialize;

use crate::error::{Error, Result};
use crate::intmat::IntMatrix;
use crate::linalg::char_poly_int;
use crate::poly::{rat, Poly, Rational};
use crate::ratfunc::RatFunc;

use super::chartab::CharTable;
use super::group::WeylGroup;

/// `det(1 - q w)`.
pub fn det_one_minus_qw(m: &IntMatrix) -> Poly {
    // det(1 - q w) = q^n det(q^{-1} - w) is the reversal of det(q - w);
    // the constant term det(-w) = ±1 keeps the degree at n.
    char_poly_int(m).reversed()
}

/// Molien series `(1/|G|) Σ χ(g) / det(1 - q g)` over a list of matrices with
/// the character values on each.
pub fn molien_over(elements: &[&IntMatrix], values: &[Rational]) -> RatFunc {
    assert_eq!(elements.len(), values.len());
    let mut total = RatFunc::zero();
    for (m, v) in elements.iter().zip(values) {
        if num_traits::Zero::is_zero(v) {
            continue;
        }
        let term = RatFunc::new(Poly::constant(v.clone()), det_one_minus_qw(m));
        total = total + term;
    }
    total * RatFunc::from_rational(rat(1) / rat(elements.len() as i64))
}

/// Molien series of a class function of `W` given by its values on classes,
/// for the action on `Y`.
pub fn molien_series(w: &WeylGroup, class_values: &[Rational]) -> RatFunc {
    let mut total = RatFunc::zero();
    for c in 0..w.num_classes() {
        let v = &class_values[c];
        if num_traits::Zero::is_zero(v) {
            continue;
        }
        let weight = v * rat(w.class_size(c) as i64);
        let term = RatFunc::new(Poly::constant(weight), det_one_minus_qw(w.element(w.class_rep(c))));
        total = total + term;
    }
    total * RatFunc::from_rational(rat(1) / rat(w.order() as i64))
}

/// Lowest exponent of a power series `num/den` with `den(0) != 0`.
pub fn series_valuation(f: &RatFunc) -> Option<usize> {
    f.numer().valuation()
}

/// Degrees of the basic invariants of `W` acting on `Y`, including a `1` for
/// each dimension of the central part, in increasing order.
pub fn reflection_degrees(w: &WeylGroup) -> Result<Vec<usize>> {
    let ones = vec![rat(1); w.num_classes()];
    let m = molien_series(w, &ones);
    // 1/M = Π (1 - q^d)
    let inv = m.inverse().and_then(|x| x.to_poly()).ok_or_else(|| {
        Error::assertion("invariant ring is not polynomial: Molien series of the trivial character is not 1/Π(1-q^d)")
    })?;
    let mut p = inv;
    let mut degrees = Vec::new();
    while !p.is_one() {
        let d = p
            .sparse()
            .into_iter()
            .find(|(e, _)| *e > 0)
            .map(|(e, _)| e)
            .ok_or_else(|| Error::assertion("could not extract reflection degrees"))?;
        let mut factor = vec![0i64; d + 1];
        factor[0] = 1;
        factor[d] = -1;
        p = p
            .div_exact(&Poly::from_i64s(&factor))
            .ok_or_else(|| Error::assertion("could not extract reflection degrees"))?;
        degrees.push(d);
        if degrees.len() > w.datum().rank() {
            return Err(Error::assertion("too many reflection degrees"));
        }
    }
    if degrees.len() != w.datum().rank() {
        return Err(Error::assertion("number of reflection degrees differs from the rank"));
    }
    Ok(degrees)
}

#[derive(Clone, Debug, Serialize)]
pub struct BInvariant {
    pub label: String,
    pub b: usize,
    /// Fake degree as exponent/coefficient pairs.
    #[serde(serialize_with = "serialize_poly")]
    pub fake_degree: Poly,
}

fn serialize_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct BInvariantTable {
    pub degrees: Vec<usize>,
    pub rows: Vec<BInvariant>,
}

impl BInvariantTable {
    pub fn b(&self, label: &str) -> Option<usize> {
        self.rows.iter().find(|r| r.label == label).map(|r| r.b)
    }
}

/// Fake degree of a class function: its Molien series times `Π(1 - q^{d_i})`.
pub fn fake_degree(w: &WeylGroup, degrees: &[usize], class_values: &[Rational]) -> Result<Poly> {
    let m = molien_series(w, class_values);
    let mut prod = Poly::one();
    for &d in degrees {
        let mut f = vec![0i64; d + 1];
        f[0] = 1;
        f[d] = -1;
        prod = prod * Poly::from_i64s(&f);
    }
    (m * RatFunc::from_poly(prod))
        .to_poly()
        .ok_or_else(|| Error::assertion("fake degree is not a polynomial"))
}

pub fn fake_degrees(w: &WeylGroup, table: &CharTable) -> Result<BInvariantTable> {
    let degrees = reflection_degrees(w)?;
    let mut rows = Vec::new();
    for (i, label) in table.labels.iter().enumerate() {
        let vals: Vec<Rational> = table.values[i].iter().map(|&v| rat(v)).collect();
        let fd = fake_degree(w, &degrees, &vals)?;
        let b = fd.valuation().ok_or_else(|| Error::assertion("zero fake degree"))?;
        if fd.eval(&rat(1)) != rat(table.degree(i)) {
            return Err(Error::assertion(format!("fake degree of {label} does not specialise to its degree")));
        }
        rows.push(BInvariant { label: label.clone(), b, fake_degree: fd });
    }
    Ok(BInvariantTable { degrees, rows })
}
