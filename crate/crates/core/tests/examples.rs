//! Worked examples, each checked against a brute-force oracle before the library.

mod common;

use common::*;
use groupcover::subgroups::{has_quotient_isomorphic, quotient};
use groupcover::union_max::{mu_k, star_bound};
use groupcover::{all_subgroups, are_isomorphic, fraction, make, ratio, Group, Permutation, Sigma, SubgroupLattice};

fn lattice(spec: &str) -> (Group, SubgroupLattice) {
    let g = make(spec).unwrap();
    let l = all_subgroups(&g).unwrap();
    (g, l)
}

#[test]
fn small_lattices_match_subset_enumeration() {
    for (spec, count) in [("C2xC2", 5), ("S3", 6), ("Q8", 6), ("A4", 10), ("D4", 10)] {
        let (g, l) = lattice(spec);
        assert_eq!(brute_force_subgroups(&g).len(), count, "{spec} oracle");
        assert_eq!(l.len(), count, "{spec}");
    }
}

#[test]
fn a4_has_five_maximal_subgroups() {
    let (g, l) = lattice("A4");
    let sets = brute_force_subgroups(&g);
    let proper: Vec<&Vec<usize>> = sets.iter().filter(|s| s.len() < 12).collect();
    let oracle: Vec<usize> = proper
        .iter()
        .filter(|h| {
            !proper
                .iter()
                .any(|k| k.len() > h.len() && h.iter().all(|x| k.contains(x)))
        })
        .map(|h| h.len())
        .collect();
    let mut got: Vec<usize> = l.maximal_ids().iter().map(|&i| l.get(i).order()).collect();
    got.sort();
    let mut want = oracle.clone();
    want.sort();
    assert_eq!(want, vec![3, 3, 3, 3, 4]);
    assert_eq!(got, want);
}

#[test]
fn mu_values_on_named_groups() {
    for (spec, k, mu) in [
        ("S3", 3, 5),
        ("C2xC2", 2, 3),
        ("Q8", 2, 6),
        ("A4", 4, 10),
        ("C3xC3", 3, 7),
        ("C5xC5", 3, 13),
    ] {
        let (g, l) = lattice(spec);
        let oracle = brute_mu(&member_arrays(&g, &l, &l.proper_ids()), k);
        assert_eq!(oracle, mu, "{spec} oracle");
        let w = mu_k(&g, &l, k);
        assert_eq!(w.union_size, mu, "{spec}");
        assert_eq!(w.ratio, ratio(mu, g.order()));
    }
}

#[test]
fn mu_pads_with_non_maximal_subgroups() {
    let (g, l) = lattice("C4");
    let w = mu_k(&g, &l, 2);
    assert_eq!(w.union_size, 2);
    assert_eq!(w.subgroup_ids.len(), 2);
    assert!(!w.covers());
}

#[test]
fn sigma_certificates_cover_the_group() {
    for spec in ["C2xC2", "S3", "A4", "F20", "D5"] {
        let (g, l) = lattice(spec);
        let cover = groupcover::sigma_exact(&g, &l);
        let sets = member_arrays(&g, &l, &cover.certificate);
        assert_eq!(union_count(&sets.iter().collect::<Vec<_>>()), g.order(), "{spec}");
        assert_eq!(cover.sigma, Sigma::Value(cover.certificate.len()));
        assert_eq!(
            brute_sigma(&proper_sets_of(&g, &l), g.order()),
            Some(cover.certificate.len())
        );
    }
}

fn proper_sets_of(g: &Group, l: &SubgroupLattice) -> Vec<Vec<bool>> {
    member_arrays(g, l, &l.proper_ids())
}

#[test]
fn quotients_and_isomorphisms() {
    let (g, l) = lattice("A4");
    let v4 = l.subgroups().iter().find(|h| h.order() == 4).unwrap();
    let q = quotient(&g, v4).unwrap();
    assert_eq!(q.order(), 3);
    assert!(are_isomorphic(&q, &make("C3").unwrap()));
    assert!(has_quotient_isomorphic(&g, &l, &make("C3").unwrap()));
    assert!(!has_quotient_isomorphic(&g, &l, &make("C2").unwrap()));
    let c3 = l.subgroups().iter().find(|h| h.order() == 3).unwrap();
    assert!(matches!(quotient(&g, c3), Err(groupcover::Error::NotNormal)));

    assert!(!are_isomorphic(&make("C4").unwrap(), &make("C2xC2").unwrap()));
    assert!(are_isomorphic(&make("C6").unwrap(), &make("C2xC3").unwrap()));
    assert!(are_isomorphic(&make("S3").unwrap(), &make("D3").unwrap()));
}

#[test]
fn s3_is_generated_by_a_transposition_and_a_three_cycle() {
    let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
    let c = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
    assert_eq!(Group::from_permutations("S3", &[t, c]).unwrap().order(), 6);
}

#[test]
fn star_bound_examples() {
    let half = ratio(1, 2);
    assert_eq!(fraction(&star_bound(&[half, half]).value), "3/4");
    let third = ratio(1, 3);
    assert_eq!(fraction(&star_bound(&[third, third, half]).value), "5/6");
    assert_eq!(fraction(&star_bound(&[third, third, third]).value), "7/9");
}
