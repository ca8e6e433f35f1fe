//! Generalised Gelfand–Graev characters in the principal block of split type-A
//! groups: decomposition in the `X` basis, unipotent character values,
//! multiplicities, wave-front sets and unipotent supports.


use serde::Serialize;

use crate::cells::{cell_to_orbit, cells_of, dagger, young_character};
use crate::error::{Error, Result};
use crate::green::{green_tables, green_values, group_order_poly, p_star, BlockData, GreenTables};
use crate::orbits::{orbits_of, NilOrbit};
use crate::partition::Partition;
use crate::poly::{rat, Poly, Rational};
use crate::ratfunc::RatFunc;
use crate::rootdata::{cartan_type, general_linear, Family, RootDatum};
use crate::weyl::{character_table, CharTable, ReflectionSubgroup, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Basis {
    /// Coefficients of the characteristic functions `X_ι`.
    X,
    /// Values on the classes; equal to the `Y` basis since every component
    /// group is trivial.
    Pointwise,
}

/// A unipotently supported class function, indexed like the principal block.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFnUni {
    pub labels: Vec<String>,
    pub basis: Basis,
    pub values: Vec<RatFunc>,
}

impl ClassFnUni {
    /// `f(u_ι') = Σ_ι P_{ι',ι} c_ι`.
    pub fn to_pointwise(&self, tables: &GreenTables) -> ClassFnUni {
        match self.basis {
            Basis::Pointwise => self.clone(),
            Basis::X => self.apply(&tables.p, Basis::Pointwise),
        }
    }

    pub fn to_x_basis(&self, tables: &GreenTables) -> ClassFnUni {
        match self.basis {
            Basis::X => self.clone(),
            Basis::Pointwise => self.apply(&tables.q, Basis::X),
        }
    }

    fn apply(&self, m: &crate::linalg::RMatrix, basis: Basis) -> ClassFnUni {
        let n = self.values.len();
        let values = (0..n)
            .map(|i| (0..n).fold(RatFunc::zero(), |s, j| s + &m[(i, j)] * &self.values[j]))
            .collect();
        ClassFnUni { labels: self.labels.clone(), basis, values }
    }

    pub fn eval(&self, q: i64) -> Option<Vec<Rational>> {
        self.values.iter().map(|v| v.eval(&rat(q))).collect()
    }
}

/// `Γ_u` in the `X` basis.
#[derive(Clone, Debug)]
pub struct GammaCoeffs {
    /// Orbit of `u` (the pair `ι*`).
    pub source: String,
    pub coeffs: ClassFnUni,
}

/// `|C_{GL_n}(u_μ)^F| = q^{Σ μ'_i²} Π_i Π_{k=1}^{m_i} (1 - q^{-k})`.
pub fn centralizer_order_poly(mu: &Partition) -> Poly {
    let exp: usize = mu.transpose().sum_of_squares();
    let mut num = Poly::one();
    let mut drop = 0usize;
    for &m in mu.multiplicities().values() {
        for k in 1..=m {
            num = num * Poly::q_pow_minus_one(k);
            drop += k;
        }
    }
    num.shift(exp - drop)
}

/// Principal-block data of a split type-A group with connected centralizers.
pub struct Gggr {
    pub w: WeylGroup,
    pub table: CharTable,
    pub block: BlockData,
    pub tables: GreenTables,
    pub orbits: Vec<NilOrbit>,
    pub group_order: Poly,
    /// `|O^F|` in block order.
    pub class_sizes: Vec<Poly>,
}

impl Gggr {
    pub fn new(datum: &RootDatum) -> Result<Gggr> {
        let ct = cartan_type(datum)?;
        let n = match ct.components.as_slice() {
            [] => 1,
            [c] if c.family == Family::A => c.rank + 1,
            _ => return Err(Error::unsupported(format!("GGGRs are implemented for type A, not {}", ct.label()))),
        };
        let orbits = orbits_of(datum)?;
        if orbits.iter().any(|o| o.component_group_order != Some(1)) {
            return Err(Error::unsupported("GGGRs need connected centralizers"));
        }
        let w = WeylGroup::generate(datum)?;
        let table = character_table(&w)?;
        let (block, tables) = green_tables(&w, &table)?;
        if block.pairs.iter().any(|p| !p.is_trivial()) {
            return Err(Error::unsupported("GGGRs with nontrivial local systems"));
        }
        let gl = general_linear(n)?;
        let gl_order = group_order_poly(&WeylGroup::generate(&gl)?)?;
        let class_sizes = block
            .pairs
            .iter()
            .map(|p| {
                let mu = Partition::parse(&p.orbit).ok_or_else(|| Error::assertion("type-A orbit without partition"))?;
                gl_order.div_exact(&centralizer_order_poly(&mu)).ok_or_else(|| Error::assertion("centralizer order does not divide"))
            })
            .collect::<Result<_>>()?;
        let group_order = group_order_poly(&w)?;
        Ok(Gggr { w, table, block, tables, orbits, group_order, class_sizes })
    }

    pub fn labels(&self) -> Vec<String> {
        self.block.pairs.iter().map(|p| p.label.clone()).collect()
    }

    fn index(&self, orbit: &str) -> Result<usize> {
        self.block.index_of(orbit).ok_or_else(|| Error::invalid(format!("unknown orbit {orbit}")))
    }

    /// `(1/|W|) Σ_w χ_i(w) χ_j(w) sgn(w) |T_w^F|`.
    fn twisted_torus_sum(&self, i: usize, j: usize) -> Poly {
        let w = &self.w;
        let mut s = Poly::zero();
        for c in 0..w.num_classes() {
            let rep = w.class_rep(c);
            let k = self.table.values[i][c] * self.table.values[j][c] * w.sign(rep) * w.class_size(c) as i64;
            if k != 0 {
                s = s + w.torus_order(rep).scale(&rat(k));
            }
        }
        s.scale(&(rat(1) / rat(w.order() as i64)))
    }

    /// Coefficient of `X_{ι₁}` in `Γ_u`:
    /// `Σ_ι q^{f'(ι,ι₁)} (1/|W|) Σ_w χ_ι(w) (χ_{ι₁}⊗sgn)(w) |T_w^F| P★_{ι*,ι}` with
    /// `f' = (dim G - rank + dim O_ι - dim O_ι₁ - dim O_u)/2`.
    pub fn gamma_coeffs(&self, u_orbit: &str) -> Result<GammaCoeffs> {
        let star = self.index(u_orbit)?;
        let pstar = p_star(&self.tables.p);
        let datum = self.w.datum();
        let base = (datum.dim_group() - datum.rank()) as i64 - self.block.pairs[star].dim_orbit as i64;
        let pairs = &self.block.pairs;
        let values = pairs
            .iter()
            .map(|p1| {
                let mut c = RatFunc::zero();
                for (i, p) in pairs.iter().enumerate() {
                    if pstar[(star, i)].is_zero() {
                        continue;
                    }
                    let f2 = base + p.dim_orbit as i64 - p1.dim_orbit as i64;
                    if f2 % 2 != 0 {
                        return Err(Error::assertion("non-integral exponent f'"));
                    }
                    let s = self.twisted_torus_sum(p.char_index, p1.char_index);
                    c = c + RatFunc::q_pow(f2 / 2) * RatFunc::from_poly(s) * &pstar[(star, i)];
                }
                Ok(c)
            })
            .collect::<Result<_>>()?;
        Ok(GammaCoeffs {
            source: u_orbit.to_string(),
            coeffs: ClassFnUni { labels: self.labels(), basis: Basis::X, values },
        })
    }

    /// Values of `Γ_u` on the unipotent classes.
    pub fn gamma_values(&self, u_orbit: &str) -> Result<ClassFnUni> {
        Ok(self.gamma_coeffs(u_orbit)?.coeffs.to_pointwise(&self.tables))
    }

    /// `χ_λ|_U = (1/|W|) Σ_w χ^λ(w) Q_{T_w}`; `λ` labels a character of `W`.
    pub fn unipotent_character_values(&self, lambda: &str) -> Result<ClassFnUni> {
        let i = self.table.index_of(lambda).ok_or_else(|| Error::invalid(format!("unknown character {lambda}")))?;
        let n = self.block.pairs.len();
        let mut acc = vec![Poly::zero(); n];
        for c in 0..self.w.num_classes() {
            let k = self.table.values[i][c] * self.w.class_size(c) as i64;
            if k == 0 {
                continue;
            }
            let q = green_values(&self.w, &self.table, &self.block, &self.tables, self.w.class_rep(c))?;
            for (a, v) in acc.iter_mut().zip(q) {
                *a = &*a + &v.scale(&rat(k));
            }
        }
        let inv = rat(1) / rat(self.w.order() as i64);
        let values = acc.into_iter().map(|p| RatFunc::from_poly(p.scale(&inv))).collect();
        Ok(ClassFnUni { labels: self.labels(), basis: Basis::Pointwise, values })
    }

    /// `(1/|G^F|) Σ_ι |O_ι^F| f(u_ι) g(u_ι)` for class functions supported on
    /// unipotent elements.
    pub fn inner_product(&self, f: &ClassFnUni, g: &ClassFnUni) -> RatFunc {
        let f = f.to_pointwise(&self.tables);
        let g = g.to_pointwise(&self.tables);
        let mut s = RatFunc::zero();
        for k in 0..f.values.len() {
            s = s + RatFunc::from_poly(self.class_sizes[k].clone()) * &f.values[k] * &g.values[k];
        }
        s / RatFunc::from_poly(self.group_order.clone())
    }

    /// `⟨Γ_u, χ_λ⟩`, checked to be a polynomial with nonnegative integer
    /// coefficients.
    pub fn multiplicity(&self, u_orbit: &str, lambda: &str) -> Result<Poly> {
        let gamma = self.gamma_values(u_orbit)?;
        let chi = self.unipotent_character_values(lambda)?;
        let m = self.inner_product(&gamma, &chi);
        m.to_poly()
            .filter(|p| p.is_integral() && p.has_nonnegative_coeffs())
            .ok_or_else(|| Error::assertion(format!("<Γ_{u_orbit}, χ_{lambda}> = {m} is not a multiplicity")))
    }

    /// Rows indexed by orbits, columns by characters, both in block order.
    pub fn multiplicity_matrix(&self) -> Result<MultiplicityMatrix> {
        let orbits = self.labels();
        let characters: Vec<String> = self.block.pairs.iter().map(|p| p.character.clone()).collect();
        let chis = characters.iter().map(|c| self.unipotent_character_values(c)).collect::<Result<Vec<_>>>()?;
        let mut entries = Vec::with_capacity(orbits.len());
        for o in &orbits {
            let gamma = self.gamma_values(o)?;
            let row = chis
                .iter()
                .zip(&characters)
                .map(|(chi, c)| {
                    let m = self.inner_product(&gamma, chi);
                    m.to_poly()
                        .filter(|p| p.is_integral() && p.has_nonnegative_coeffs())
                        .ok_or_else(|| Error::assertion(format!("<Γ_{o}, χ_{c}> = {m} is not a multiplicity")))
                })
                .collect::<Result<Vec<_>>>()?;
            entries.push(row);
        }
        Ok(MultiplicityMatrix { orbits, characters, entries })
    }
}

#[derive(Clone, Debug)]
pub struct MultiplicityMatrix {
    pub orbits: Vec<String>,
    pub characters: Vec<String>,
    pub entries: Vec<Vec<Poly>>,
}

/// A cell of a Young subgroup `S_{n_1} × ... × S_{n_k}` of `S_n`, given by the
/// special character `χ_{ν_1} ⊠ ... ⊠ χ_{ν_k}`. Unipotent characters use a
/// single block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub blocks: Vec<Partition>,
}

impl Series {
    /// Blocks are sorted by decreasing size.
    pub fn new(mut blocks: Vec<Partition>) -> Series {
        blocks.sort_by(|a, b| b.size().cmp(&a.size()).then(b.cmp(a)));
        Series { blocks }
    }

    pub fn unipotent(lambda: Partition) -> Series {
        Series { blocks: vec![lambda] }
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(|b| b.size()).sum()
    }

    fn shape(&self) -> Partition {
        Partition::new(self.blocks.iter().map(|b| b.size()).collect())
    }

    /// Dagger on each factor, computed from the cells of `S_{n_i}`.
    pub fn dagger(&self) -> Result<Series> {
        let blocks = self
            .blocks
            .iter()
            .map(|nu| {
                let w = WeylGroup::generate(&general_linear(nu.size())?)?;
                let t = character_table(&w)?;
                let cp = cells_of(&w, &t)?;
                let c = cp.cell_of_character(&nu.label()).ok_or_else(|| Error::invalid(format!("no cell for {nu}")))?;
                let special = &cp.cells[dagger(&cp, c, &w, &t)?].special;
                Partition::parse(special).ok_or_else(|| Error::assertion("type-A special is not a partition"))
            })
            .collect::<Result<_>>()?;
        Ok(Series { blocks })
    }
}

fn series_orbit(datum: &RootDatum, series: &Series) -> Result<NilOrbit> {
    let w = WeylGroup::generate(datum)?;
    if w.type_a_degree() != Some(series.size()) {
        return Err(Error::invalid(format!("series of S_{} does not fit the datum", series.size())));
    }
    let table = character_table(&w)?;
    let h = ReflectionSubgroup::young(&w, &series.shape())?;
    let values = young_character(&w, &h, &series.blocks)?;
    cell_to_orbit(&w, &table, &h, &values)
}

/// `O*_ρ`: the orbit of the daggered cell.
pub fn wave_front(datum: &RootDatum, series: &Series) -> Result<NilOrbit> {
    series_orbit(datum, &series.dagger()?)
}

/// `O_ρ`: the wave-front set of the Alvis–Curtis dual, i.e. the orbit of the
/// cell itself.
pub fn unipotent_support(datum: &RootDatum, series: &Series) -> Result<NilOrbit> {
    series_orbit(datum, series)
}
