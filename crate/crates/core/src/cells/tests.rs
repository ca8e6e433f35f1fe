use super::*;
use crate::rootdata::{general_linear, named};
use crate::weyl::character_table;

fn setup(name: &str) -> (WeylGroup, CharTable) {
    let w = WeylGroup::generate(&named(name).unwrap()).unwrap();
    let t = character_table(&w).unwrap();
    (w, t)
}

#[test]
fn rsk_cell_sizes() {
    let sizes = |n| rsk_cells(n).unwrap().cells.iter().map(|c| c.elements.len()).collect::<Vec<_>>();
    assert_eq!(sizes(1), vec![1]);
    assert_eq!(sizes(3), vec![1, 4, 1]);
    let s4 = sizes(4);
    assert_eq!(s4.len(), 5);
    assert_eq!(s4.iter().sum::<usize>(), 24);
    // Cell of shape λ has (dim χ_λ)^2 elements.
    for n in 1..=6 {
        for (cell, lambda) in rsk_cells(n).unwrap().cells.iter().zip(partitions(n)) {
            assert_eq!(cell.elements.len() as u64, lambda.hook_dimension().pow(2));
        }
    }
    assert!(rsk_cells(8).is_err());
}

#[test]
fn cells_partition_the_group() {
    for name in ["GL1", "SL3", "GL4", "SO5", "G2"] {
        let (w, t) = setup(name);
        let cp = cells_of(&w, &t).unwrap();
        let mut all: Vec<usize> = cp.cells.iter().flat_map(|c| c.elements.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, (0..w.order()).collect::<Vec<_>>(), "{name}");
        assert_eq!(cp.cells.iter().map(|c| c.family.len()).sum::<usize>(), t.len());
        for c in &cp.cells {
            assert!(c.family.contains(&c.special));
        }
    }
}

#[test]
fn identity_and_longest_cells() {
    for name in ["SL4", "SO5", "G2"] {
        let (w, t) = setup(name);
        let cp = cells_of(&w, &t).unwrap();
        let c1 = cp.cells.iter().position(|c| c.elements == vec![0]).unwrap();
        assert_eq!(cp.cells[c1].special, t.labels[t.trivial()]);
        let c0 = cp.cells.iter().position(|c| c.elements == vec![w.longest()]).unwrap();
        assert_eq!(dagger(&cp, c1, &w, &t).unwrap(), c0);
    }
}

#[test]
fn b2_and_g2_families() {
    let (w, t) = setup("SO5");
    let cp = cells_of(&w, &t).unwrap();
    assert_eq!(cp.cells.len(), 3);
    let big = cp.cell_of_character("phi2,1").unwrap();
    assert_eq!(cp.cells[big].family.len(), 3);
    assert_eq!(dagger(&cp, big, &w, &t).unwrap(), big);
    let (w, t) = setup("G2");
    let cp = cells_of(&w, &t).unwrap();
    assert_eq!(cp.cells.len(), 3);
    let big = cp.cell_of_character("phi2,2").unwrap();
    assert_eq!(cp.cells[big].family.len(), 4);
    assert_eq!(cp.cells[big].elements.len(), 10);
    assert_eq!(dagger(&cp, big, &w, &t).unwrap(), big);
}

#[test]
fn dagger_is_transpose_in_type_a() {
    for n in 1..=5 {
        let w = WeylGroup::generate(&general_linear(n).unwrap()).unwrap();
        let t = character_table(&w).unwrap();
        let cp = cells_of(&w, &t).unwrap();
        for (i, lambda) in partitions(n).iter().enumerate() {
            let j = dagger(&cp, i, &w, &t).unwrap();
            assert_eq!(cp.cells[j].special, lambda.transpose().label());
            assert_eq!(dagger(&cp, j, &w, &t).unwrap(), i);
        }
    }
}

#[test]
fn type_a_cells_match_rsk_cells() {
    // Elements of W correspond to permutations; cell sizes agree.
    let w = WeylGroup::generate(&general_linear(4).unwrap()).unwrap();
    let t = character_table(&w).unwrap();
    let a = cells_of(&w, &t).unwrap();
    let b = rsk_cells(4).unwrap();
    for (x, y) in a.cells.iter().zip(&b.cells) {
        assert_eq!(x.elements.len(), y.elements.len());
        assert_eq!(x.special, y.special);
    }
}

#[test]
fn cell_to_orbit_full_group() {
    for n in 1..=5 {
        let d = general_linear(n).unwrap();
        let w = WeylGroup::generate(&d).unwrap();
        let t = character_table(&w).unwrap();
        let cp = cells_of(&w, &t).unwrap();
        for (i, lambda) in partitions(n).iter().enumerate() {
            let o = cell_to_orbit_full(&w, &t, &cp, i).unwrap();
            assert_eq!(o.partition.as_ref(), Some(lambda));
            assert_eq!(o.dim_orbit, n * n - lambda.transpose().sum_of_squares());
        }
    }
}

#[test]
fn cell_to_orbit_young_subgroups() {
    for n in 1..=5 {
        let d = general_linear(n).unwrap();
        let w = WeylGroup::generate(&d).unwrap();
        let t = character_table(&w).unwrap();
        for lambda in partitions(n) {
            let h = ReflectionSubgroup::young(&w, &lambda).unwrap();
            let blocks: Vec<Partition> = lambda.parts().iter().map(|&k| Partition::new(vec![1; k])).collect();
            let sign = young_character(&w, &h, &blocks).unwrap();
            assert_eq!(sign, h.sign_values(&w));
            let o = cell_to_orbit(&w, &t, &h, &sign).unwrap();
            assert_eq!(o.partition.unwrap(), lambda.transpose(), "{lambda}");
        }
    }
}

#[test]
fn trivial_subgroup_gives_regular_orbit() {
    let d = general_linear(4).unwrap();
    let w = WeylGroup::generate(&d).unwrap();
    let t = character_table(&w).unwrap();
    let h = ReflectionSubgroup::from_roots(&w, &[]);
    let o = cell_to_orbit(&w, &t, &h, &[rat(1)]).unwrap();
    assert_eq!(o.label, "(4)");
}

#[test]
fn b2_g2_cells_to_orbits() {
    let (w, t) = setup("G2");
    let cp = cells_of(&w, &t).unwrap();
    let big = cp.cell_of_character("phi2,1").unwrap();
    assert_eq!(cell_to_orbit_full(&w, &t, &cp, big).unwrap().label, "G2(a1)");
    let (w, t) = setup("SO5");
    let cp = cells_of(&w, &t).unwrap();
    let big = cp.cell_of_character("phi2,1").unwrap();
    assert_eq!(cell_to_orbit_full(&w, &t, &cp, big).unwrap().label, "(3,1,1)");
}

#[test]
fn family_data_checksum() {
    use sha2::{Digest, Sha256};
    let digest = Sha256::digest(FAMILY_DATA.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    assert_eq!(hex, include_str!("../../data/families.toml.sha256").trim());
}

#[test]
fn unsupported_cells() {
    let d = crate::rootdata::simply_connected(Family::F, 4).unwrap();
    let w = WeylGroup::generate(&d).unwrap();
    let t = character_table(&w).unwrap();
    assert!(matches!(cells_of(&w, &t), Err(Error::Unsupported(_))));
}
