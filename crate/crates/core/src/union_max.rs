//! Largest unions of `k` proper subgroups.
//!
//! `μ_k(G)` is searched over maximal subgroups only: replacing a proper subgroup
//! by a maximal subgroup containing it never shrinks a union. Ratios are exact.

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::covering::{sigma_exact, Sigma};
use crate::elements::ElementSet;
use crate::error::Result;
use crate::group::Group;
use crate::profile::{profile_all, GroupProfile};
use crate::ratio;
use crate::subgroups::{setwise_product_size, subgroups_of_index, SubgroupLattice};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionWitness {
    pub k: usize,
    /// Distinct lattice ids, ascending.
    pub subgroup_ids: Vec<usize>,
    pub union_size: usize,
    pub ratio: Rational,
    /// `|H_i| / |G|` for the chosen subgroups, ascending.
    pub ratios: Vec<Rational>,
}

impl UnionWitness {
    fn new(g: &Group, lattice: &SubgroupLattice, k: usize, mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        let union_size = union_size(g, lattice, &ids);
        let mut ratios: Vec<Rational> = ids.iter().map(|&i| ratio(lattice.get(i).order(), g.order())).collect();
        ratios.sort();
        UnionWitness {
            k,
            ratio: ratio(union_size, g.order()),
            subgroup_ids: ids,
            union_size,
            ratios,
        }
    }

    pub fn covers(&self) -> bool {
        self.ratio == Rational::from_integer(1)
    }

    pub fn element_lists(&self, lattice: &SubgroupLattice) -> Vec<Vec<usize>> {
        self.subgroup_ids.iter().map(|&i| lattice.get(i).elements()).collect()
    }
}

pub fn union_size(g: &Group, lattice: &SubgroupLattice, ids: &[usize]) -> usize {
    let mut union = ElementSet::empty(g.order());
    for &i in ids {
        union.union_with(lattice.get(i).members());
    }
    union.len()
}

pub fn union_ratio(g: &Group, lattice: &SubgroupLattice, ids: &[usize]) -> Rational {
    ratio(union_size(g, lattice, ids), g.order())
}

/// `μ_k(G)` with the lexicographically least optimal id list.
///
/// Uses `min(k, m)` distinct subgroups where `m` is the number of proper
/// subgroups. When `k` exceeds the number of maximal subgroups, all of them are
/// taken and the list is padded with the lowest-id non-maximal proper subgroups.
pub fn mu_k(g: &Group, lattice: &SubgroupLattice, k: usize) -> UnionWitness {
    let proper = lattice.proper_ids();
    let maximal = lattice.maximal_ids();
    let target = k.min(proper.len());
    let ids = if maximal.len() >= target {
        let sets: Vec<&ElementSet> = maximal.iter().map(|&i| lattice.get(i).members()).collect();
        let (_, positions) = max_union(g.order(), &sets, target);
        positions.into_iter().map(|p| maximal[p]).collect()
    } else {
        let mut ids = maximal.clone();
        ids.extend(
            proper
                .iter()
                .filter(|&&i| !lattice.is_maximal(i))
                .take(target - maximal.len()),
        );
        ids
    };
    UnionWitness::new(g, lattice, k, ids)
}

/// Same search over every proper subgroup.
pub fn mu_k_over_proper(g: &Group, lattice: &SubgroupLattice, k: usize) -> UnionWitness {
    let proper = lattice.proper_ids();
    let sets: Vec<&ElementSet> = proper.iter().map(|&i| lattice.get(i).members()).collect();
    let (_, positions) = max_union(g.order(), &sets, k.min(proper.len()));
    UnionWitness::new(g, lattice, k, positions.into_iter().map(|p| proper[p]).collect())
}

/// Largest union of exactly `k` distinct `sets` (`k ≤ sets.len()`), with the
/// lexicographically least optimal position list.
///
/// A first pass walks the sets by size descending and prunes when the current
/// union plus the sizes of the next `k − chosen` sets cannot beat the best
/// value. A second pass walks positions in ascending order and stops at the
/// first selection reaching that value.
pub fn max_union(width: usize, sets: &[&ElementSet], k: usize) -> (usize, Vec<usize>) {
    assert!(k <= sets.len(), "k = {k} exceeds {} sets", sets.len());
    if k == 0 {
        return (0, Vec::new());
    }
    let mut by_size: Vec<usize> = (0..sets.len()).collect();
    by_size.sort_by(|&a, &b| sets[b].len().cmp(&sets[a].len()).then(a.cmp(&b)));
    let mut best = 0;
    best_value(width, sets, &by_size, k, 0, &ElementSet::empty(width), &mut best);

    let top = suffix_top_sums(sets, k);
    let mut chosen = Vec::with_capacity(k);
    let found = first_reaching(sets, &top, k, 0, &ElementSet::empty(width), best, &mut chosen);
    debug_assert!(found);
    (best, chosen)
}

fn best_value(
    width: usize,
    sets: &[&ElementSet],
    by_size: &[usize],
    remaining: usize,
    start: usize,
    union: &ElementSet,
    best: &mut usize,
) {
    if remaining == 0 {
        *best = (*best).max(union.len());
        return;
    }
    for i in start..=by_size.len() - remaining {
        if *best == width {
            return;
        }
        let bound: usize = union.len() + by_size[i..i + remaining].iter().map(|&p| sets[p].len()).sum::<usize>();
        if bound <= *best {
            // sizes only decrease further along
            return;
        }
        let next = union.union(sets[by_size[i]]);
        best_value(width, sets, by_size, remaining - 1, i + 1, &next, best);
    }
}

/// `top[p][r]` = sum of the `r` largest sizes among `sets[p..]`.
fn suffix_top_sums(sets: &[&ElementSet], k: usize) -> Vec<Vec<usize>> {
    let m = sets.len();
    let mut top = vec![vec![0; k + 1]; m + 1];
    let mut sizes: Vec<usize> = Vec::new();
    for p in (0..m).rev() {
        let at = sizes.partition_point(|&s| s > sets[p].len());
        sizes.insert(at, sets[p].len());
        let mut acc = 0;
        for (r, slot) in top[p].iter_mut().enumerate().skip(1) {
            acc += sizes.get(r - 1).copied().unwrap_or(0);
            *slot = acc;
        }
    }
    top
}

fn first_reaching(
    sets: &[&ElementSet],
    top: &[Vec<usize>],
    remaining: usize,
    start: usize,
    union: &ElementSet,
    target: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if remaining == 0 {
        return union.len() >= target;
    }
    for p in start..=sets.len() - remaining {
        if union.len() + top[p][remaining] < target {
            return false;
        }
        chosen.push(p);
        let next = union.union(sets[p]);
        if first_reaching(sets, top, remaining - 1, p + 1, &next, target, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Every `k`-selection of `sets` whose union has exactly `target` elements.
pub fn selections_reaching(sets: &[&ElementSet], k: usize, target: usize) -> Vec<Vec<usize>> {
    #[allow(clippy::too_many_arguments)]
    fn walk(
        sets: &[&ElementSet],
        top: &[Vec<usize>],
        remaining: usize,
        start: usize,
        union: &ElementSet,
        target: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            if union.len() == target {
                out.push(chosen.clone());
            }
            return;
        }
        for p in start..=sets.len() - remaining {
            if union.len() + top[p][remaining] < target {
                return;
            }
            chosen.push(p);
            walk(
                sets,
                top,
                remaining - 1,
                p + 1,
                &union.union(sets[p]),
                target,
                chosen,
                out,
            );
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    if k > sets.len() || sets.is_empty() {
        return out;
    }
    let width = sets[0].width();
    let top = suffix_top_sums(sets, k);
    walk(
        sets,
        &top,
        k,
        0,
        &ElementSet::empty(width),
        target,
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Right-hand side of `|∪ H_i| / |G| ≤ Σ n_i − n_k · Σ_{i<k} n_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarBound {
    pub value: Rational,
}

/// Bound with the last (largest) ratio as the designated `n_k`.
pub fn star_bound(ratios: &[Rational]) -> StarBound {
    assert!(!ratios.is_empty(), "star bound needs at least one ratio");
    StarBound {
        value: star_bound_designated(ratios, ratios.len() - 1),
    }
}

/// Bound with `ratios[designated]` peeled off instead of the last entry.
pub fn star_bound_designated(ratios: &[Rational], designated: usize) -> Rational {
    let total: Rational = ratios.iter().sum();
    let others = total - ratios[designated];
    total - ratios[designated] * others
}

fn sorted_ratios(g: &Group, lattice: &SubgroupLattice, ids: &[usize]) -> Vec<Rational> {
    let mut ratios: Vec<Rational> = ids.iter().map(|&i| ratio(lattice.get(i).order(), g.order())).collect();
    ratios.sort();
    ratios
}

/// Union ratio of `ids` against the bound with the largest ratio designated.
pub fn check_star_inequality(g: &Group, lattice: &SubgroupLattice, ids: &[usize]) -> bool {
    union_ratio(g, lattice, ids) <= star_bound(&sorted_ratios(g, lattice, ids)).value
}

/// As [`check_star_inequality`] but for every choice of designated subgroup.
pub fn check_star_all_designations(g: &Group, lattice: &SubgroupLattice, ids: &[usize]) -> bool {
    let union = union_ratio(g, lattice, ids);
    let ratios = sorted_ratios(g, lattice, ids);
    (0..ratios.len()).all(|d| union <= star_bound_designated(&ratios, d))
}

/// Which bound a [`Verification`] checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    C2,
    C3,
    C3Odd,
}

impl Suite {
    pub fn k(self) -> usize {
        match self {
            Suite::C2 => 2,
            Suite::C3 | Suite::C3Odd => 3,
        }
    }

    pub fn bound(self) -> Rational {
        match self {
            Suite::C2 => Rational::new(3, 4),
            Suite::C3 => Rational::new(5, 6),
            Suite::C3Odd => Rational::new(7, 9),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EqualityFlags {
    pub mu2_equality: bool,
    pub mu3_equality: bool,
    pub mu3_odd_equality: bool,
    /// Indices `[G:H_i]` of the witness, ascending.
    pub index_multiset: Vec<usize>,
    /// `H1H2 = G` (pairs) or `H1H3 = H2H3 = G` (triples), with `H3` the largest.
    pub products_full: bool,
    /// `H1 ∩ H2 ⊆ H3` (triples only; `true` for pairs).
    pub intersection_contained: bool,
    /// The exact equality condition on the witness.
    pub proof_predicate: bool,
    /// The statement-level condition on the witness (distinct maximal subgroups of the stated indices).
    pub headline_predicate: bool,
    /// When the bound is attained, whether every optimal witness satisfies `proof_predicate`.
    pub all_optimal_satisfy: bool,
    /// `G` has at least two distinct subgroups of index 2.
    pub two_index_two_subgroups: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub suite: Suite,
    pub applicable: bool,
    pub sigma: Sigma,
    pub bound: Rational,
    pub bound_holds: bool,
    pub witness: UnionWitness,
    pub flags: EqualityFlags,
}

impl Verification {
    pub fn equality(&self) -> bool {
        match self.suite {
            Suite::C2 => self.flags.mu2_equality,
            Suite::C3 => self.flags.mu3_equality,
            Suite::C3Odd => self.flags.mu3_odd_equality,
        }
    }

    /// Whether every assertion of the suite holds on this group.
    pub fn holds(&self) -> bool {
        if !self.applicable {
            return true;
        }
        let eq = self.equality();
        let mut ok = self.bound_holds && eq == self.flags.proof_predicate && (!eq || self.flags.all_optimal_satisfy);
        if self.suite == Suite::C2 {
            ok &=
                self.flags.proof_predicate == self.flags.headline_predicate && eq == self.flags.two_index_two_subgroups;
        }
        ok
    }
}

/// `n1 = n2 = 1/2` and `H1H2 = G`.
pub fn pair_predicate(g: &Group, lattice: &SubgroupLattice, ids: &[usize]) -> bool {
    let [a, b] = ids else { return false };
    let half = |i: usize| lattice.get(i).order() * 2 == g.order();
    a != b && half(*a) && half(*b) && setwise_product_size(g, lattice.get(*a), lattice.get(*b)) == g.order()
}

/// Orders a triple by `(|H|, id)` so the last entry plays the role of `H3`.
fn sort_triple(lattice: &SubgroupLattice, ids: &[usize]) -> Option<[usize; 3]> {
    let mut t: [usize; 3] = ids.try_into().ok()?;
    t.sort_by_key(|&i| (lattice.get(i).order(), i));
    (t[0] != t[1] && t[1] != t[2]).then_some(t)
}

fn triple_structure(g: &Group, lattice: &SubgroupLattice, t: [usize; 3]) -> (bool, bool) {
    let [h1, h2, h3] = t.map(|i| lattice.get(i));
    let products_full = setwise_product_size(g, h1, h3) == g.order() && setwise_product_size(g, h2, h3) == g.order();
    let contained = h1.members().intersection(h2.members()).is_subset(h3.members());
    (products_full, contained)
}

/// `n1 = n2 = 1/3`, `n3 = 1/2`, `H1H3 = H2H3 = G` and `H1 ∩ H2 ⊆ H3`.
pub fn triple_predicate(g: &Group, lattice: &SubgroupLattice, ids: &[usize]) -> bool {
    let Some(t) = sort_triple(lattice, ids) else {
        return false;
    };
    let n = g.order();
    let orders = t.map(|i| lattice.get(i).order());
    if orders[0] * 3 != n || orders[1] * 3 != n || orders[2] * 2 != n {
        return false;
    }
    let (products_full, contained) = triple_structure(g, lattice, t);
    products_full && contained
}

/// `n1 = n2 = n3 = 1/3`, `H1H3 = H2H3 = G` and `H1 ∩ H2 ⊆ H3`.
pub fn odd_triple_predicate(g: &Group, lattice: &SubgroupLattice, ids: &[usize]) -> bool {
    let Some(t) = sort_triple(lattice, ids) else {
        return false;
    };
    if t.iter().any(|&i| lattice.get(i).order() * 3 != g.order()) {
        return false;
    }
    let (products_full, contained) = triple_structure(g, lattice, t);
    products_full && contained
}

fn index_multiset(g: &Group, lattice: &SubgroupLattice, ids: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = ids.iter().map(|&i| g.order() / lattice.get(i).order()).collect();
    idx.sort_unstable();
    idx
}

fn distinct_maximal(lattice: &SubgroupLattice, ids: &[usize]) -> bool {
    let mut sorted = ids.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == ids.len() && ids.iter().all(|&i| lattice.is_maximal(i))
}

fn verify(g: &Group, lattice: &SubgroupLattice, suite: Suite) -> Verification {
    let sigma = if g.order() > 1 {
        sigma_exact(g, lattice).sigma
    } else {
        Sigma::Uncoverable
    };
    let applicable = match suite {
        Suite::C2 => true,
        Suite::C3 => sigma != Sigma::Value(3),
        Suite::C3Odd => g.order() % 2 == 1 && sigma != Sigma::Value(3),
    };
    let witness = mu_k(g, lattice, suite.k());
    let bound = suite.bound();
    let ids = &witness.subgroup_ids;
    let equality = witness.ratio == bound;

    let predicate = |ids: &[usize]| match suite {
        Suite::C2 => pair_predicate(g, lattice, ids),
        Suite::C3 => triple_predicate(g, lattice, ids),
        Suite::C3Odd => odd_triple_predicate(g, lattice, ids),
    };
    let (products_full, intersection_contained) = match suite {
        Suite::C2 => {
            let full = ids.len() == 2 && setwise_product_size(g, lattice.get(ids[0]), lattice.get(ids[1])) == g.order();
            (full, true)
        }
        _ => sort_triple(lattice, ids).map_or((false, false), |t| triple_structure(g, lattice, t)),
    };
    let indices = index_multiset(g, lattice, ids);
    let headline = distinct_maximal(lattice, ids)
        && match suite {
            Suite::C2 => indices == [2, 2],
            Suite::C3 => indices == [2, 3, 3],
            Suite::C3Odd => indices == [3, 3, 3],
        };
    let all_optimal_satisfy = if equality {
        let maximal = lattice.maximal_ids();
        let sets: Vec<&ElementSet> = maximal.iter().map(|&i| lattice.get(i).members()).collect();
        selections_reaching(&sets, ids.len(), witness.union_size)
            .into_iter()
            .all(|sel| predicate(&sel.into_iter().map(|p| maximal[p]).collect::<Vec<_>>()))
    } else {
        true
    };

    let flags = EqualityFlags {
        mu2_equality: suite == Suite::C2 && equality,
        mu3_equality: suite == Suite::C3 && equality,
        mu3_odd_equality: suite == Suite::C3Odd && equality,
        index_multiset: indices,
        products_full,
        intersection_contained,
        proof_predicate: predicate(ids),
        headline_predicate: headline,
        all_optimal_satisfy,
        two_index_two_subgroups: subgroups_of_index(g, lattice, 2).len() >= 2,
    };
    Verification {
        suite,
        applicable,
        sigma,
        bound,
        bound_holds: witness.ratio <= bound,
        witness,
        flags,
    }
}

/// `μ_2(G) ≤ 3/4 |G|`, with equality exactly for two distinct maximal subgroups of index 2.
pub fn verify_c2(g: &Group, lattice: &SubgroupLattice) -> Verification {
    verify(g, lattice, Suite::C2)
}

/// For `σ(G) ≠ 3`: `μ_3(G) ≤ 5/6 |G|`, with equality exactly for the triple predicate.
pub fn verify_c3(g: &Group, lattice: &SubgroupLattice) -> Verification {
    verify(g, lattice, Suite::C3)
}

/// For odd `|G|` and `σ(G) ≠ 3`: `μ_3(G) ≤ 7/9 |G|`.
pub fn verify_c3_odd(g: &Group, lattice: &SubgroupLattice) -> Verification {
    verify(g, lattice, Suite::C3Odd)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub group: String,
    pub k: usize,
    pub sigma: Sigma,
    pub witness: UnionWitness,
    pub sigma_is_k_plus_1: bool,
    /// Lowest-id maximal subgroup `M` with `G = M ∪ (∪ H_i)` and `|M| ≤ min |H_i|`.
    pub cover_completer: Option<usize>,
    pub conjecture_satisfied: bool,
}

/// Reports whether the `μ_k` witness is completed to a cover by a maximal
/// subgroup no larger than any of its members. Never asserts.
pub fn conjecture_probe(g: &Group, lattice: &SubgroupLattice, k: usize) -> ConjectureReport {
    let sigma = if g.order() > 1 {
        sigma_exact(g, lattice).sigma
    } else {
        Sigma::Uncoverable
    };
    conjecture_probe_with_sigma(g, lattice, k, sigma)
}

fn conjecture_probe_with_sigma(g: &Group, lattice: &SubgroupLattice, k: usize, sigma: Sigma) -> ConjectureReport {
    let witness = mu_k(g, lattice, k);
    let mut union = ElementSet::empty(g.order());
    for &i in &witness.subgroup_ids {
        union.union_with(lattice.get(i).members());
    }
    let smallest = witness.subgroup_ids.iter().map(|&i| lattice.get(i).order()).min();
    let cover_completer = smallest.and_then(|smallest| {
        lattice.maximal_ids().into_iter().find(|&m| {
            let h = lattice.get(m);
            h.order() <= smallest && union.union_len(h.members()) == g.order()
        })
    });
    let sigma_is_k_plus_1 = sigma == Sigma::Value(k + 1);
    ConjectureReport {
        group: g.name().to_string(),
        k,
        sigma,
        witness,
        sigma_is_k_plus_1,
        conjecture_satisfied: sigma_is_k_plus_1 && cover_completer.is_some(),
        cover_completer,
    }
}

pub fn conjecture_probe_profile(profile: &GroupProfile, k: usize) -> ConjectureReport {
    let mut report = conjecture_probe_with_sigma(&profile.group, &profile.lattice, k, profile.cover.sigma);
    report.group = profile.name.clone();
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CkRow {
    pub group: String,
    pub order: usize,
    pub sigma: Sigma,
    pub witness: UnionWitness,
    pub witness_elements: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CkScan {
    pub k: usize,
    /// Index into `rows` of the first row (by group name) attaining the maximum ratio.
    pub max_row: Option<usize>,
    /// Groups with `σ(G) > k`, sorted by name.
    pub rows: Vec<CkRow>,
}

impl CkScan {
    pub fn max_ratio(&self) -> Option<Rational> {
        self.max_row.map(|i| self.rows[i].witness.ratio)
    }
}

/// Largest `μ_k` ratio over catalog groups with `σ(G) > k` (uncoverable included).
pub fn empirical_ck_scan(entries: &[CatalogEntry], k: usize) -> Result<CkScan> {
    Ok(ck_scan_profiles(&profile_all(entries)?, k))
}

pub fn ck_scan_profiles(profiles: &[GroupProfile], k: usize) -> CkScan {
    let mut rows: Vec<CkRow> = profiles
        .par_iter()
        .filter(|p| p.group.order() > 1 && p.cover.sigma.exceeds(k))
        .map(|p| {
            let witness = mu_k(&p.group, &p.lattice, k);
            CkRow {
                group: p.name.clone(),
                order: p.group.order(),
                sigma: p.cover.sigma,
                witness_elements: witness.element_lists(&p.lattice),
                witness,
            }
        })
        .collect();
    rows.sort_by(|a, b| a.group.cmp(&b.group));
    let mut max_row: Option<usize> = None;
    for (i, row) in rows.iter().enumerate() {
        if max_row.is_none_or(|m| row.witness.ratio > rows[m].witness.ratio) {
            max_row = Some(i);
        }
    }
    CkScan { k, max_row, rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::make;
    use crate::subgroups::all_subgroups;

    fn setup(spec: &str) -> (Group, SubgroupLattice) {
        let g = make(spec).unwrap();
        let lat = all_subgroups(&g).unwrap();
        (g, lat)
    }

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn mu_examples() {
        let (g, lat) = setup("C2xC2");
        assert_eq!(mu_k(&g, &lat, 1).union_size, 2);
        let w = mu_k(&g, &lat, 2);
        assert_eq!((w.union_size, w.ratio), (3, r(3, 4)));
        let (g, lat) = setup("S3");
        let w = mu_k(&g, &lat, 3);
        assert_eq!((w.union_size, w.ratio), (5, r(5, 6)));
        assert_eq!(w.ratios, vec![r(1, 3), r(1, 3), r(1, 2)]);
        let (g, lat) = setup("C3xC3");
        assert_eq!(mu_k(&g, &lat, 3).union_size, 7);
        let (g, lat) = setup("A4");
        let w = mu_k(&g, &lat, 4);
        assert_eq!((w.union_size, w.ratio), (10, r(5, 6)));
        for p in [2, 3, 5, 7, 11] {
            let (g, lat) = setup(&format!("C{p}"));
            for k in 1..4 {
                let w = mu_k(&g, &lat, k);
                assert_eq!(w.union_size, 1);
                assert_eq!(w.subgroup_ids, vec![0]);
            }
        }
    }

    #[test]
    fn padding_when_few_maximal_subgroups() {
        let (g, lat) = setup("C9");
        let w = mu_k(&g, &lat, 4);
        assert_eq!(w.subgroup_ids.len(), 2);
        assert_eq!(w.union_size, 3);
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let (g, lat) = setup("A4");
        let w = mu_k(&g, &lat, 4);
        let c3: Vec<usize> = (0..lat.len()).filter(|&i| lat.get(i).order() == 3).collect();
        let v4 = (0..lat.len()).find(|&i| lat.get(i).order() == 4).unwrap();
        assert_eq!(w.subgroup_ids, vec![c3[0], c3[1], c3[2], v4]);
    }

    #[test]
    fn star_bound_values() {
        assert_eq!(star_bound(&[r(1, 2), r(1, 2)]).value, r(3, 4));
        assert_eq!(star_bound(&[r(1, 3), r(1, 3), r(1, 2)]).value, r(5, 6));
        assert_eq!(star_bound(&[r(1, 3), r(1, 3), r(1, 3)]).value, r(7, 9));
        assert_eq!(star_bound(&[r(2, 7)]).value, r(2, 7));
    }

    #[test]
    fn star_checks() {
        let (g, lat) = setup("C2xC2");
        assert!(check_star_inequality(&g, &lat, &[1, 2]));
        assert_eq!(union_ratio(&g, &lat, &[1, 2]), r(3, 4));
        let (g, lat) = setup("S3");
        assert!(check_star_inequality(&g, &lat, &[1, 2, 4]));
        assert_eq!(union_ratio(&g, &lat, &[1, 2, 4]), r(5, 6));
        for id in lat.proper_ids() {
            assert!(check_star_inequality(&g, &lat, &[id]));
        }
    }

    #[test]
    fn c2_examples() {
        let (g, lat) = setup("C2xC2");
        let v = verify_c2(&g, &lat);
        assert!(v.bound_holds && v.flags.mu2_equality && v.holds());
        let (g, lat) = setup("Q8");
        let v = verify_c2(&g, &lat);
        assert_eq!(v.witness.union_size, 6);
        assert!(v.flags.mu2_equality && v.holds());
        let (g, lat) = setup("C9");
        let v = verify_c2(&g, &lat);
        assert!(!v.flags.mu2_equality && v.holds());
        assert_eq!(v.witness.union_size, 3);
    }

    #[test]
    fn c3_examples() {
        let (g, lat) = setup("S3");
        let v = verify_c3(&g, &lat);
        assert!(v.applicable && v.bound_holds && v.flags.mu3_equality);
        assert!(v.flags.proof_predicate && v.flags.headline_predicate && v.holds());
        assert_eq!(v.flags.index_multiset, vec![2, 3, 3]);
        let (g, lat) = setup("C2xC2");
        assert!(!verify_c3(&g, &lat).applicable);
        let (g, lat) = setup("A4");
        let v = verify_c3(&g, &lat);
        assert!(v.applicable && v.bound_holds && !v.flags.mu3_equality && v.holds());
        assert!(v.witness.union_size < 10);
    }

    #[test]
    fn c3_odd_examples() {
        let (g, lat) = setup("C3xC3");
        let v = verify_c3_odd(&g, &lat);
        assert!(v.applicable && v.bound_holds && v.flags.mu3_odd_equality && v.holds());
        assert_eq!(v.witness.ratio, r(7, 9));
        let (g, lat) = setup("C5xC5");
        let v = verify_c3_odd(&g, &lat);
        assert!(v.applicable && !v.flags.mu3_odd_equality);
        assert_eq!(v.witness.union_size, 13);
        let (g, lat) = setup("C2xC2");
        assert!(!verify_c3_odd(&g, &lat).applicable);
    }

    #[test]
    fn conjecture_examples() {
        for (spec, k) in [("S3", 3), ("C2xC2", 2), ("A4", 4)] {
            let (g, lat) = setup(spec);
            let rep = conjecture_probe(&g, &lat, k);
            assert!(rep.sigma_is_k_plus_1, "{spec}");
            let m = rep.cover_completer.expect("completer");
            assert!(!rep.witness.subgroup_ids.contains(&m));
            assert!(rep.conjecture_satisfied, "{spec}");
        }
        let (g, lat) = setup("C7xC7");
        let rep = conjecture_probe(&g, &lat, 3);
        assert!(!rep.sigma_is_k_plus_1 && !rep.conjecture_satisfied);
    }

    #[test]
    fn selections_and_max_union_agree() {
        let (g, lat) = setup("C2xC2xC2");
        let maximal = lat.maximal_ids();
        let sets: Vec<&ElementSet> = maximal.iter().map(|&i| lat.get(i).members()).collect();
        let (best, first) = max_union(g.order(), &sets, 2);
        let all = selections_reaching(&sets, 2, best);
        assert_eq!(all[0], first);
        assert_eq!(all.len(), 21);
    }
}
