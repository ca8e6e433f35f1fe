use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::intmat::IntMatrix;
use crate::linalg::char_poly_int;
use crate::poly::Poly;
use crate::rootdata::{cartan_type, CartanType, Family, RootDatum};

/// Default bound on the order of a generated group.
pub const DEFAULT_BOUND: usize = 2000;

/// A finite group of integer matrices, enumerated in breadth-first order from
/// the identity using the generators.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    dim: usize,
    elements: Vec<IntMatrix>,
    index: HashMap<IntMatrix, usize>,
    inverse: Vec<usize>,
    word_length: Vec<usize>,
    generators: Vec<usize>,
}

impl MatrixGroup {
    pub fn generate(dim: usize, gens: &[IntMatrix], bound: usize) -> Result<MatrixGroup> {
        let id = IntMatrix::identity(dim);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut word_length = vec![0];
        let mut k = 0;
        while k < elements.len() {
            for g in gens {
                let next = g.mul(&elements[k]);
                if !index.contains_key(&next) {
                    if elements.len() == bound {
                        return Err(Error::BoundExceeded(bound));
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    word_length.push(word_length[k] + 1);
                }
            }
            k += 1;
        }
        let inverse = elements
            .iter()
            .map(|e| {
                let mut x = e.clone();
                // e has finite order; the inverse is the last power before the identity.
                let mut prev = IntMatrix::identity(dim);
                while x != IntMatrix::identity(dim) {
                    prev = x.clone();
                    x = x.mul(e);
                }
                if *e == IntMatrix::identity(dim) {
                    0
                } else {
                    index[&prev]
                }
            })
            .collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(MatrixGroup { dim, elements, index, inverse, word_length, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &IntMatrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn word_length(&self, a: usize) -> usize {
        self.word_length[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Conjugacy classes, each listed with its elements; the identity class
    /// comes first and classes are ordered by their first element.
    pub fn conjugacy_classes(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if class_of[s] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![s];
            class_of[s] = id;
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                for &g in &self.generators {
                    let y = self.mul(self.mul(g, x), self.inv(g));
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        (classes, class_of)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub size: usize,
}

/// The Weyl group of a root datum acting on `Y`.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    datum: RootDatum,
    cartan: CartanType,
    group: MatrixGroup,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    /// For a type-A group, the permutation of `{0..n}` of each element.
    permutations: Option<Vec<Vec<usize>>>,
}

impl WeylGroup {
    pub fn generate(datum: &RootDatum) -> Result<WeylGroup> {
        WeylGroup::generate_bounded(datum, DEFAULT_BOUND)
    }

    pub fn generate_bounded(datum: &RootDatum, bound: usize) -> Result<WeylGroup> {
        let cartan = cartan_type(datum)?;
        let gens: Vec<IntMatrix> =
            (0..datum.semisimple_rank()).map(|i| datum.simple_reflection_on_y(i)).collect();
        let group = MatrixGroup::generate(datum.rank(), &gens, bound)?;
        let (classes, class_of) = group.conjugacy_classes();
        let mut w = WeylGroup { datum: datum.clone(), cartan, group, classes, class_of, permutations: None };
        w.permutations = w.compute_permutations();
        Ok(w)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan
    }

    pub fn group(&self) -> &MatrixGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn element(&self, i: usize) -> &IntMatrix {
        self.group.element(i)
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_elements(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn classes(&self) -> Vec<ConjugacyClass> {
        self.classes
            .iter()
            .map(|c| ConjugacyClass { representative: c[0], size: c.len() })
            .collect()
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn class_of(&self, w: usize) -> usize {
        self.class_of[w]
    }

    /// Index of the simple reflection `s_i`.
    pub fn simple_reflection(&self, i: usize) -> usize {
        self.group.generators()[i]
    }

    pub fn reflection(&self, root: usize) -> usize {
        self.group.index_of(&self.datum.reflection_on_y(root)).expect("reflection lies in W")
    }

    /// `det(q I - w)` on `Y`.
    pub fn char_poly(&self, w: usize) -> Poly {
        char_poly_int(self.element(w))
    }

    /// `|T_w^F|` as a polynomial in `q`: `det(q I - w)` on `Y`, which is monic.
    pub fn torus_order(&self, w: usize) -> Poly {
        self.char_poly(w)
    }

    /// `det(w)` on `Y`, which is the sign character.
    pub fn sign(&self, w: usize) -> i64 {
        self.element(w).det()
    }

    /// The longest element.
    pub fn longest(&self) -> usize {
        (0..self.order()).max_by_key(|&w| self.group.word_length(w)).unwrap_or(0)
    }

    /// Product of the simple reflections in index order.
    pub fn coxeter_element(&self) -> usize {
        let mut w = 0;
        for i in 0..self.datum.semisimple_rank() {
            w = self.group.mul(w, self.simple_reflection(i));
        }
        w
    }

    /// `n` such that this is the Weyl group of a datum of type `A_{n-1}`
    /// (including `n = 1` for a torus).
    pub fn type_a_degree(&self) -> Option<usize> {
        match self.cartan.components.as_slice() {
            [] => Some(1),
            [c] if c.family == Family::A => Some(c.rank + 1),
            _ => None,
        }
    }

    /// Permutation of `w` when the group is of type A.
    pub fn permutation(&self, w: usize) -> Option<&[usize]> {
        self.permutations.as_ref().map(|p| p[w].as_slice())
    }

    fn compute_permutations(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.type_a_degree()?;
        if n == 1 {
            return Some(vec![vec![0]; self.order()]);
        }
        let nodes = &self.cartan.components[0].nodes;
        let rank = self.datum.rank();
        // v(i, j) = coroot of e_i - e_j in chain coordinates
        let simple = self.datum.simple_coroots();
        let mut lookup: HashMap<Vec<i64>, (usize, usize)> = HashMap::new();
        let mut v = HashMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut s = vec![0i64; rank];
                for k in i..j {
                    for (x, y) in s.iter_mut().zip(&simple[nodes[k]]) {
                        *x += y;
                    }
                }
                let neg: Vec<i64> = s.iter().map(|x| -x).collect();
                lookup.insert(s.clone(), (i, j));
                lookup.insert(neg.clone(), (j, i));
                v.insert((i, j), s);
                v.insert((j, i), neg);
            }
        }
        let perms = (0..self.order())
            .map(|w| {
                let m = self.element(w);
                (0..n)
                    .map(|i| {
                        let j = if i == 0 { 1 } else { 0 };
                        let img = m.mul_vec(&v[&(i, j)]);
                        lookup[&img].0
                    })
                    .collect()
            })
            .collect();
        Some(perms)
    }
}
