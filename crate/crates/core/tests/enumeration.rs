use ideal_forge::{
    all_ideals, builtin_ring, direct_product, is_ideal, is_modular, lattice_of_ideals, FiniteRing, CATALOG,
    DEFAULT_IDEAL_CAP,
};

/// Catalog rings plus every product of two catalog rings with at most
/// `limit` elements.
fn rings_up_to(limit: usize) -> Vec<(String, FiniteRing)> {
    let mut out: Vec<(String, FiniteRing)> = CATALOG
        .iter()
        .map(|n| (n.to_string(), builtin_ring(n).unwrap()))
        .filter(|(_, r)| r.order() <= limit)
        .collect();
    for n1 in CATALOG {
        for n2 in CATALOG {
            let (r1, r2) = (builtin_ring(n1).unwrap(), builtin_ring(n2).unwrap());
            if r1.order() * r2.order() <= limit {
                out.push((format!("{n1}x{n2}"), direct_product(&r1, &r2).into_carrier()));
            }
        }
    }
    out
}

fn power_set_ideals(r: &FiniteRing) -> Vec<Vec<usize>> {
    let n = r.order();
    let mut found: Vec<Vec<usize>> = (0u64..1 << n)
        .map(|mask| (0..n).filter(|&x| mask >> x & 1 == 1).collect::<Vec<_>>())
        .filter(|s| is_ideal(r, s).unwrap())
        .collect();
    found.sort();
    found
}

#[test]
fn bfs_enumeration_matches_power_set() {
    for (name, r) in rings_up_to(16) {
        let mut bfs: Vec<Vec<usize>> = all_ideals(&r, DEFAULT_IDEAL_CAP)
            .unwrap()
            .iter()
            .map(|i| i.iter().collect())
            .collect();
        bfs.sort();
        assert_eq!(bfs, power_set_ideals(&r), "{name}");
    }
}

#[test]
fn known_counts() {
    let count = |name: &str| all_ideals(&builtin_ring(name).unwrap(), DEFAULT_IDEAL_CAP).unwrap().len();
    assert_eq!(count("z8"), 4);
    assert_eq!(count("z6"), 4);
    assert_eq!(count("gf4"), 2);
    // zero ring: additive subgroups of Z4
    assert_eq!(count("zero4"), 3);
    // {0}, {00, 01}, everything
    assert_eq!(count("nc4"), 3);

    let k = builtin_ring("kleinian-zero").unwrap();
    let kk = direct_product(&k, &k);
    // subspaces of GF(2)^4: 1 + 15 + 35 + 15 + 1
    assert_eq!(all_ideals(kk.carrier(), DEFAULT_IDEAL_CAP).unwrap().len(), 67);
}

#[test]
fn every_lattice_is_modular() {
    for (name, r) in rings_up_to(64) {
        let l = lattice_of_ideals(&r, DEFAULT_IDEAL_CAP).unwrap();
        assert!(is_modular(&l), "{name}");
    }
}
