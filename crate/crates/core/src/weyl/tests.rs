use super::*;
use crate::partition::{partitions, Partition};
use crate::poly::{rat, Poly};
use crate::rootdata::named;

fn weyl(name: &str) -> WeylGroup {
    WeylGroup::generate(&named(name).unwrap()).unwrap()
}

fn check_orthogonality(w: &WeylGroup, t: &CharTable) {
    assert_eq!(t.len(), w.num_classes());
    for i in 0..t.len() {
        for j in 0..t.len() {
            let ip = t.inner_product(&t.row_rational(i), &t.row_rational(j));
            assert_eq!(ip, rat(i64::from(i == j)), "{} rows {i} {j}", w.datum().name());
        }
    }
    let sum_sq: i64 = (0..t.len()).map(|i| t.degree(i) * t.degree(i)).sum();
    assert_eq!(sum_sq as usize, w.order());
}

#[test]
fn orders() {
    assert_eq!(weyl("GL1").order(), 1);
    assert_eq!(weyl("SL2").order(), 2);
    assert_eq!(weyl("GL4").order(), 24);
    assert_eq!(weyl("SL5").order(), 120);
    assert_eq!(weyl("Sp4").order(), 8);
    assert_eq!(weyl("G2").order(), 12);
}

#[test]
fn bound_is_enforced() {
    let d = named("GL5").unwrap();
    assert!(matches!(WeylGroup::generate_bounded(&d, 50), Err(crate::Error::BoundExceeded(50))));
}

#[test]
fn character_tables_are_orthogonal() {
    for name in ["GL1", "SL2", "SL3", "GL4", "SL5", "Spin5", "SO5", "G2", "GL3"] {
        let w = weyl(name);
        let t = character_table(&w).unwrap();
        check_orthogonality(&w, &t);
    }
}

#[test]
fn type_a_labels_follow_partitions() {
    let w = weyl("SL3");
    let t = character_table(&w).unwrap();
    assert_eq!(t.labels, vec!["(3)", "(2,1)", "(1,1,1)"]);
    assert_eq!(t.values[t.trivial()][0], 1);
    assert_eq!(t.index_of("(3)"), Some(t.trivial()));
    let sign = t.index_of("(1,1,1)").unwrap();
    for c in 0..w.num_classes() {
        assert_eq!(t.values[sign][c], w.sign(w.class_rep(c)));
    }
}

#[test]
fn b2_and_g2_labels() {
    let t = character_table(&weyl("SO5")).unwrap();
    assert_eq!(t.labels, vec!["phi1,0", "phi1,2'", "phi1,2''", "phi1,4", "phi2,1"]);
    let t = character_table(&weyl("G2")).unwrap();
    assert_eq!(t.labels, vec!["phi1,0", "phi1,3'", "phi1,3''", "phi1,6", "phi2,1", "phi2,2"]);
}

#[test]
fn prime_labels_depend_on_first_node() {
    // phi1,2' is the character that is 1 on the first simple reflection.
    for name in ["SO5", "Spin5"] {
        let w = weyl(name);
        let t = character_table(&w).unwrap();
        let node = w.cartan_type().components[0].nodes[0];
        let c = w.class_of(w.simple_reflection(node));
        assert_eq!(t.values[t.index_of("phi1,2'").unwrap()][c], 1);
        assert_eq!(t.values[t.index_of("phi1,2''").unwrap()][c], -1);
    }
}

#[test]
fn tensor_sign_pairs() {
    let w = weyl("G2");
    let t = character_table(&w).unwrap();
    assert_eq!(tensor_sign(&w, &t, "phi1,0").unwrap(), "phi1,6");
    assert_eq!(tensor_sign(&w, &t, "phi2,1").unwrap(), "phi2,1");
    assert_eq!(tensor_sign(&w, &t, "phi1,3'").unwrap(), "phi1,3''");
    let w = weyl("SL4");
    let t = character_table(&w).unwrap();
    assert_eq!(tensor_sign(&w, &t, "(3,1)").unwrap(), "(2,1,1)");
}

#[test]
fn char_poly_examples() {
    let w = weyl("Sp4");
    let cox = w.coxeter_element();
    assert_eq!(w.char_poly(cox), Poly::from_i64s(&[1, 0, 1]));
    let w = weyl("GL2");
    let s = w.simple_reflection(0);
    assert_eq!(w.torus_order(s), Poly::from_i64s(&[-1, 0, 1]));
    assert_eq!(w.torus_order(0), Poly::from_i64s(&[1, -2, 1]));
    let w = weyl("G2");
    assert_eq!(w.char_poly(w.coxeter_element()), Poly::from_i64s(&[1, -1, 1]));
}

#[test]
fn reflection_degrees_examples() {
    assert_eq!(reflection_degrees(&weyl("SL4")).unwrap(), vec![2, 3, 4]);
    assert_eq!(reflection_degrees(&weyl("GL3")).unwrap(), vec![1, 2, 3]);
    assert_eq!(reflection_degrees(&weyl("Sp4")).unwrap(), vec![2, 4]);
    assert_eq!(reflection_degrees(&weyl("G2")).unwrap(), vec![2, 6]);
    assert_eq!(reflection_degrees(&weyl("GL1")).unwrap(), vec![1]);
}

#[test]
fn b_values_of_trivial_and_sign() {
    for name in ["SL2", "GL3", "SL4", "SO5", "G2", "SL5"] {
        let w = weyl(name);
        let t = character_table(&w).unwrap();
        let b = fake_degrees(&w, &t).unwrap();
        let triv = &t.labels[t.trivial()];
        assert_eq!(b.b(triv), Some(0));
        let sign_vals: Vec<i64> = t.class_reps.iter().map(|&r| w.sign(r)).collect();
        let sign = t.values.iter().position(|r| *r == sign_vals).unwrap();
        assert_eq!(b.b(&t.labels[sign]), Some(w.datum().num_positive_roots()), "{name}");
    }
}

#[test]
fn type_a_b_values_match_n_statistic() {
    // b_λ = n(λ) with λ ↔ χ_λ and (n) trivial.
    for n in 2..=5 {
        let w = weyl(&format!("GL{n}"));
        let t = character_table(&w).unwrap();
        let b = fake_degrees(&w, &t).unwrap();
        for p in partitions(n) {
            assert_eq!(b.b(&p.label()), Some(p.n_stat()), "{p}");
        }
    }
}

#[test]
fn fake_degrees_sum_to_regular_character() {
    // Σ deg(E) fake(E) = Π (1 - q^d) / (1 - q)^rank, the Poincaré series of the coinvariants.
    for name in ["SL3", "SO5", "G2"] {
        let w = weyl(name);
        let t = character_table(&w).unwrap();
        let b = fake_degrees(&w, &t).unwrap();
        let mut total = Poly::zero();
        for (i, row) in b.rows.iter().enumerate() {
            total = total + row.fake_degree.scale(&rat(t.degree(i)));
        }
        let mut expect = Poly::one();
        for &d in &b.degrees {
            expect = expect * Poly::from_i64s(&vec![1; d]);
        }
        assert_eq!(total, expect, "{name}");
    }
}

#[test]
fn j_induction_of_sign_from_young_subgroups() {
    for n in 1..=4 {
        let w = weyl(&format!("GL{n}"));
        let t = character_table(&w).unwrap();
        for lambda in partitions(n) {
            let h = ReflectionSubgroup::young(&w, &lambda).unwrap();
            let j = j_induction(&w, &t, &h, &h.sign_values(&w)).unwrap();
            assert_eq!(t.partitions.as_ref().unwrap()[j], lambda.transpose(), "{lambda}");
        }
    }
}

#[test]
fn young_subgroup_orders() {
    let w = weyl("GL4");
    let h = ReflectionSubgroup::young(&w, &Partition::new(vec![2, 2])).unwrap();
    assert_eq!(h.order(), 4);
    assert_eq!(h.num_positive_roots(), 2);
}
