//! Brute-force oracles shared by the integration tests. They work on plain
//! `Vec<bool>` membership arrays and never call the library's search code.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use groupcover::profile::{profile_all, GroupProfile};
use groupcover::{scan_catalog, Group, SubgroupLattice};

/// Profiles of the scan catalog up to order 100, built once per test binary.
pub fn catalog_100() -> &'static [GroupProfile] {
    static CELL: OnceLock<Vec<GroupProfile>> = OnceLock::new();
    CELL.get_or_init(|| profile_all(&scan_catalog(100)).expect("catalog profiles"))
}

pub fn catalog_up_to(max_order: usize) -> impl Iterator<Item = &'static GroupProfile> {
    catalog_100().iter().filter(move |p| p.group.order() <= max_order)
}

/// Every subset containing the identity that is closed under products, as
/// sorted element lists. Feasible for orders up to 16.
pub fn brute_force_subgroups(g: &Group) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16, "subset enumeration is limited to order 16");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << (n - 1)) {
        let members: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|&x| mask >> (x - 1) & 1 == 1))
            .collect();
        if !n.is_multiple_of(members.len()) {
            continue;
        }
        let mut inside = vec![false; n];
        for &x in &members {
            inside[x] = true;
        }
        let closed = members.iter().all(|&a| members.iter().all(|&b| inside[g.mul(a, b)]));
        if closed {
            out.insert(members);
        }
    }
    out
}

/// Proper subgroups of a lattice as membership arrays.
pub fn proper_sets(p: &GroupProfile) -> Vec<Vec<bool>> {
    member_arrays(&p.group, &p.lattice, &p.lattice.proper_ids())
}

pub fn member_arrays(g: &Group, lattice: &SubgroupLattice, ids: &[usize]) -> Vec<Vec<bool>> {
    ids.iter()
        .map(|&i| {
            let mut v = vec![false; g.order()];
            for x in lattice.get(i).elements() {
                v[x] = true;
            }
            v
        })
        .collect()
}

pub fn union_count(sets: &[&Vec<bool>]) -> usize {
    let n = sets.first().map_or(0, |s| s.len());
    (0..n).filter(|&x| sets.iter().any(|s| s[x])).count()
}

/// Calls `visit` on every `k`-combination of `0..m`.
pub fn combinations(m: usize, k: usize, visit: &mut impl FnMut(&[usize]) -> bool) {
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for i in start..m {
            cur.push(i);
            if !rec(m, k, i + 1, cur, visit) {
                return false;
            }
            cur.pop();
        }
        true
    }
    rec(m, k, 0, &mut Vec::new(), visit);
}

/// Least number of `sets` covering everything, by increasing combination size.
pub fn brute_sigma(sets: &[Vec<bool>], n: usize) -> Option<usize> {
    if n <= 1 || (0..n).any(|x| sets.iter().all(|s| !s[x])) {
        return None;
    }
    for size in 1..=sets.len() {
        let mut found = false;
        combinations(sets.len(), size, &mut |c| {
            let chosen: Vec<&Vec<bool>> = c.iter().map(|&i| &sets[i]).collect();
            found = union_count(&chosen) == n;
            !found
        });
        if found {
            return Some(size);
        }
    }
    None
}

/// Largest union of `min(k, sets.len())` distinct `sets`.
pub fn brute_mu(sets: &[Vec<bool>], k: usize) -> usize {
    let k = k.min(sets.len());
    let mut best = 0;
    combinations(sets.len(), k, &mut |c| {
        let chosen: Vec<&Vec<bool>> = c.iter().map(|&i| &sets[i]).collect();
        best = best.max(union_count(&chosen));
        true
    });
    best
}

/// Prints one pass/fail line for an acceptance criterion.
pub fn verdict(id: &str, title: &str, pass: bool, detail: &str) {
    println!("{id} {} {title}: {detail}", if pass { "PASS" } else { "FAIL" });
}
