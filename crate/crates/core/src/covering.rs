//! Covering numbers.
//!
//! Any cover of `G` by proper subgroups can be replaced by a cover of no greater
//! size using maximal subgroups (every proper subgroup sits inside a maximal
//! one), so the exact search runs over maximal subgroups only.

use std::fmt;
use std::sync::OnceLock;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::catalog::make;
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::subgroups::{has_quotient_isomorphic, subgroups_of_index, SubgroupLattice};

/// `σ(G)`, or `Uncoverable` for cyclic groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sigma {
    Uncoverable,
    Value(usize),
}

impl Sigma {
    pub fn value(self) -> Option<usize> {
        match self {
            Sigma::Value(m) => Some(m),
            Sigma::Uncoverable => None,
        }
    }

    /// `σ > k`, counting `Uncoverable` as larger than every `k`.
    pub fn exceeds(self, k: usize) -> bool {
        self.value().is_none_or(|m| m > k)
    }
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sigma::Uncoverable => f.write_str("uncoverable"),
            Sigma::Value(m) => write!(f, "{m}"),
        }
    }
}

impl Serialize for Sigma {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Sigma::Uncoverable => serializer.serialize_str("uncoverable"),
            Sigma::Value(m) => serializer.serialize_u64(*m as u64),
        }
    }
}

impl<'de> Deserialize<'de> for Sigma {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct SigmaVisitor;
        impl Visitor<'_> for SigmaVisitor {
            type Value = Sigma;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a positive integer or \"uncoverable\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Sigma, E> {
                Ok(Sigma::Value(v as usize))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Sigma, E> {
                if v == "uncoverable" {
                    Ok(Sigma::Uncoverable)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }
        deserializer.deserialize_any(SigmaVisitor)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    pub sigma: Sigma,
    /// Lattice ids of the covering maximal subgroups, ascending; empty when uncoverable.
    pub certificate: Vec<usize>,
}

pub fn sigma_exact(g: &Group, lattice: &SubgroupLattice) -> CoverResult {
    solve(g, lattice, &lattice.maximal_ids())
}

/// Same search over every proper subgroup instead of the maximal ones.
pub fn sigma_over_proper(g: &Group, lattice: &SubgroupLattice) -> CoverResult {
    solve(g, lattice, &lattice.proper_ids())
}

fn solve(g: &Group, lattice: &SubgroupLattice, ids: &[usize]) -> CoverResult {
    let uncoverable = CoverResult {
        sigma: Sigma::Uncoverable,
        certificate: Vec::new(),
    };
    let sets: Vec<&ElementSet> = ids.iter().map(|&i| lattice.get(i).members()).collect();
    let mut reach = ElementSet::empty(g.order());
    for s in &sets {
        reach.union_with(s);
    }
    if g.order() <= 1 || !reach.is_full() {
        return uncoverable;
    }
    match min_cover(g.order(), &sets) {
        Some(positions) => {
            let mut certificate: Vec<usize> = positions.into_iter().map(|p| ids[p]).collect();
            certificate.sort_unstable();
            CoverResult {
                sigma: Sigma::Value(certificate.len()),
                certificate,
            }
        }
        None => uncoverable,
    }
}

/// Minimum number of `sets` whose union is `0..width`, as positions into `sets`.
///
/// Branches on the uncovered element lying in the fewest sets (lowest index on
/// ties), trying its sets largest first.
pub fn min_cover(width: usize, sets: &[&ElementSet]) -> Option<Vec<usize>> {
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); width];
    for (p, s) in sets.iter().enumerate() {
        for x in s.iter() {
            containing[x].push(p);
        }
    }
    for list in &mut containing {
        list.sort_by(|&a, &b| sets[b].len().cmp(&sets[a].len()).then(a.cmp(&b)));
    }
    let mut search = CoverSearch {
        sets,
        containing,
        max_size: sets.iter().map(|s| s.len()).max().unwrap_or(0),
        best: None,
    };
    let mut chosen = Vec::new();
    search.descend(&ElementSet::empty(width), &mut chosen);
    search.best
}

struct CoverSearch<'a> {
    sets: &'a [&'a ElementSet],
    containing: Vec<Vec<usize>>,
    max_size: usize,
    best: Option<Vec<usize>>,
}

impl CoverSearch<'_> {
    fn descend(&mut self, covered: &ElementSet, chosen: &mut Vec<usize>) {
        if covered.is_full() {
            if self.best.as_ref().is_none_or(|b| chosen.len() < b.len()) {
                self.best = Some(chosen.clone());
            }
            return;
        }
        let best_len = self.best.as_ref().map_or(usize::MAX, Vec::len);
        if chosen.len() + 1 >= best_len {
            return;
        }
        let uncovered = covered.width() - covered.len();
        if self.max_size == 0 || chosen.len() + uncovered.div_ceil(self.max_size) >= best_len {
            return;
        }
        let pivot = (0..covered.width())
            .filter(|&x| !covered.contains(x))
            .min_by_key(|&x| (self.containing[x].len(), x))
            .expect("an uncovered element exists");
        let branches = self.containing[pivot].clone();
        for p in branches {
            chosen.push(p);
            let next = covered.union(self.sets[p]);
            self.descend(&next, chosen);
            chosen.pop();
        }
    }
}

/// Value assigned by the quotient/index classifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaValue {
    Three,
    Four,
    Five,
    Six,
    OtherOrUnknown,
    Uncoverable,
}

impl SigmaValue {
    pub fn as_number(self) -> Option<usize> {
        match self {
            SigmaValue::Three => Some(3),
            SigmaValue::Four => Some(4),
            SigmaValue::Five => Some(5),
            SigmaValue::Six => Some(6),
            SigmaValue::OtherOrUnknown | SigmaValue::Uncoverable => None,
        }
    }
}

/// One classifier clause with both of its equivalent forms evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseCheck {
    pub clause: &'static str,
    /// Index-counting form; `None` for the clause that only has a quotient form.
    pub index_form: Option<bool>,
    pub quotient_form: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaClass {
    pub value: SigmaValue,
    /// The clause that fired, or `"none"`.
    pub reason: &'static str,
    pub checks: Vec<ClauseCheck>,
}

struct Fingerprints {
    klein: Group,
    four: [Group; 2],
    a4: Group,
    six: [Group; 3],
}

fn fingerprints() -> &'static Fingerprints {
    static CELL: OnceLock<Fingerprints> = OnceLock::new();
    CELL.get_or_init(|| {
        let m = |s: &str| make(s).expect("fingerprint group");
        Fingerprints {
            klein: m("C2xC2"),
            four: [m("C3xC3"), m("S3")],
            a4: m("A4"),
            six: [m("C5xC5"), m("D5"), m("F20")],
        }
    })
}

/// Applies the classification clauses in order:
///
/// * cyclic ⇒ uncoverable;
/// * σ = 3 ⇔ at least two subgroups of index 2 ⇔ a quotient `C2×C2`;
/// * σ = 4 ⇔ (σ ≠ 3 and) at least two subgroups of index 3 ⇔ a quotient `C3×C3` or `S3`;
/// * σ = 5 ⇔ (σ ∉ {3, 4} and) a maximal subgroup of index 4 ⇔ a quotient `A4`;
/// * σ = 6 ⇔ (σ ∉ {3, 4, 5} and) a quotient `C5×C5`, `D5` or `F20`.
///
/// Fails with [`Error::ClauseMismatch`] when the index and quotient forms disagree.
pub fn sigma_classifier(g: &Group, lattice: &SubgroupLattice) -> Result<SigmaClass> {
    let fp = fingerprints();
    let mut checks = Vec::new();
    let done = |value, reason, checks| Ok(SigmaClass { value, reason, checks });

    if g.is_cyclic() {
        return done(SigmaValue::Uncoverable, "cyclic", checks);
    }

    let quotient_any = |targets: &[Group]| targets.iter().any(|t| has_quotient_isomorphic(g, lattice, t));
    let index_two = || subgroups_of_index(g, lattice, 2).len() >= 2;
    let index_three = || subgroups_of_index(g, lattice, 3).len() >= 2;
    let maximal_index_four = || {
        subgroups_of_index(g, lattice, 4)
            .iter()
            .any(|h| lattice.is_maximal(lattice.id_of(h.members()).expect("subgroup in lattice")))
    };
    type Form<'a> = &'a dyn Fn() -> bool;
    let clauses: [(&'static str, SigmaValue, Form, Form); 3] = [
        ("three", SigmaValue::Three, &index_two, &|| {
            quotient_any(std::slice::from_ref(&fp.klein))
        }),
        ("four", SigmaValue::Four, &index_three, &|| quotient_any(&fp.four)),
        ("five", SigmaValue::Five, &maximal_index_four, &|| {
            quotient_any(std::slice::from_ref(&fp.a4))
        }),
    ];
    for (clause, value, index_form, quotient_form) in clauses {
        let (index_form, quotient_form) = (index_form(), quotient_form());
        checks.push(ClauseCheck {
            clause,
            index_form: Some(index_form),
            quotient_form,
        });
        if index_form != quotient_form {
            return Err(Error::ClauseMismatch {
                group: g.name().to_string(),
                clause,
                index_form,
                quotient_form,
            });
        }
        if quotient_form {
            return done(value, clause, checks);
        }
    }

    let six = quotient_any(&fp.six);
    checks.push(ClauseCheck {
        clause: "six",
        index_form: None,
        quotient_form: six,
    });
    if six {
        return done(SigmaValue::Six, "six", checks);
    }
    done(SigmaValue::OtherOrUnknown, "none", checks)
}

/// Whether the exact search and the classifier agree.
pub fn sigma_cross_check(g: &Group, lattice: &SubgroupLattice) -> bool {
    let exact = sigma_exact(g, lattice).sigma;
    let Ok(class) = sigma_classifier(g, lattice) else {
        return false;
    };
    agrees(exact, class.value)
}

pub fn agrees(exact: Sigma, class: SigmaValue) -> bool {
    match (class, exact) {
        (SigmaValue::Uncoverable, s) => s == Sigma::Uncoverable,
        (SigmaValue::OtherOrUnknown, Sigma::Uncoverable) => false,
        (SigmaValue::OtherOrUnknown, Sigma::Value(m)) => !(3..=6).contains(&m),
        (c, s) => s.value() == c.as_number(),
    }
}
