mod common;

use proptest::prelude::*;

use groupcover::iso::find_isomorphism;
use groupcover::subgroups::is_normal;
use groupcover::union_max::mu_k;
use groupcover::{all_subgroups, are_isomorphic, make, scan_catalog, Group, Permutation};

fn perm(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<usize>>()).prop_shuffle()
}

/// Subgroups of S_d generated by one to three random permutations, d ≤ 5.
fn random_group() -> impl Strategy<Value = Group> {
    (2usize..=5)
        .prop_flat_map(|d| proptest::collection::vec(perm(d), 1..=3))
        .prop_map(|gens| {
            let perms: Vec<Permutation> = gens.into_iter().map(|g| Permutation::new(g).unwrap()).collect();
            Group::from_permutations("random", &perms).unwrap()
        })
}

/// `g` with its non-identity elements relabelled by `shuffle`.
fn relabel(g: &Group, shuffle: &[usize]) -> Group {
    let n = g.order();
    let mut to = vec![0; n];
    for (i, &s) in shuffle.iter().enumerate() {
        to[i + 1] = s + 1;
    }
    let mut from = vec![0; n];
    for x in 0..n {
        from[to[x]] = x;
    }
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| to[g.mul(from[a], from[b])]).collect())
        .collect();
    Group::from_cayley_table("relabelled", &rows).unwrap()
}

fn is_homomorphic_bijection(g: &Group, h: &Group, map: &[usize]) -> bool {
    let mut seen = vec![false; h.order()];
    map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        && (0..g.order()).all(|a| (0..g.order()).all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lagrange_holds_for_elements_and_subgroups(g in random_group()) {
        let lattice = all_subgroups(&g).unwrap();
        for x in 0..g.order() {
            prop_assert_eq!(g.order() % g.element_order(x), 0);
        }
        for h in lattice.subgroups() {
            prop_assert_eq!(g.order() % h.order(), 0);
        }
    }

    #[test]
    fn cayley_round_trip_preserves_table(g in random_group()) {
        let back = Group::from_cayley_table("copy", &g.table_rows()).unwrap();
        prop_assert_eq!(back.table_rows(), g.table_rows());
    }

    #[test]
    fn relabelled_groups_are_isomorphic(g in random_group(), seed in any::<u64>()) {
        let mut shuffle: Vec<usize> = (0..g.order() - 1).collect();
        let mut state = seed;
        for i in (1..shuffle.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffle.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &shuffle);
        let map = find_isomorphism(&g, &h);
        prop_assert!(map.is_some());
        prop_assert!(is_homomorphic_bijection(&g, &h, &map.unwrap()));
        prop_assert!(are_isomorphic(&h, &g));
    }

    #[test]
    fn trivial_factor_and_swapped_products(g in random_group()) {
        let trivial = make("C1").unwrap();
        prop_assert!(are_isomorphic(&g.direct_product(&trivial).unwrap(), &g));
        let c2 = make("C2").unwrap();
        prop_assert!(are_isomorphic(&g.direct_product(&c2).unwrap(), &c2.direct_product(&g).unwrap()));
    }

    #[test]
    fn lattice_flags_match_definitions(g in random_group()) {
        let lattice = all_subgroups(&g).unwrap();
        let subs = lattice.subgroups();
        for (i, h) in subs.iter().enumerate() {
            let maximal = h.is_proper()
                && !subs.iter().any(|k| k.is_proper() && k.order() > h.order() && h.members().is_subset(k.members()));
            prop_assert_eq!(lattice.is_maximal(i), maximal);
            let normal = (0..g.order()).all(|x| h.elements().iter().all(|&y| h.contains(g.conjugate(x, y))));
            prop_assert_eq!(lattice.is_normal(i), normal);
            prop_assert_eq!(is_normal(&g, h.members()), normal);
            for k in subs {
                prop_assert!(lattice.id_of(&h.members().intersection(k.members())).is_some());
            }
        }
    }

    #[test]
    fn mu_is_monotone_in_k(g in random_group()) {
        let lattice = all_subgroups(&g).unwrap();
        let sizes: Vec<usize> = (1..=6).map(|k| mu_k(&g, &lattice, k).union_size).collect();
        prop_assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_small_groups() {
    let specs = ["C6", "C2xC3", "S3", "D3", "C4", "C2xC2", "D4", "Q8", "C8", "C2xC4"];
    let groups: Vec<Group> = specs.iter().map(|s| make(s).unwrap()).collect();
    for a in &groups {
        assert!(are_isomorphic(a, a));
        for b in &groups {
            assert_eq!(are_isomorphic(a, b), are_isomorphic(b, a));
            for c in &groups {
                if are_isomorphic(a, b) && are_isomorphic(b, c) {
                    assert!(are_isomorphic(a, c));
                }
            }
        }
    }
}

#[test]
fn catalog_has_no_isomorphic_duplicates() {
    let entries = scan_catalog(48);
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if a.group.order() == b.group.order() {
                assert!(!are_isomorphic(&a.group, &b.group), "{} and {}", a.name, b.name);
            }
        }
    }
}

#[test]
fn catalog_orders_match_brute_force_subgroup_counts_for_tiny_groups() {
    for p in common::catalog_up_to(12) {
        assert_eq!(
            p.lattice.len(),
            common::brute_force_subgroups(&p.group).len(),
            "{}",
            p.name
        );
    }
}
