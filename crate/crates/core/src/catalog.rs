//! Named groups and the scan catalog.
//!
//! Group-spec grammar (case-insensitive), factors joined with `x`:
//!
//! | factor      | group                                    |
//! |-------------|------------------------------------------|
//! | `Cn`        | cyclic of order n                        |
//! | `Dn`        | dihedral of order 2n                     |
//! | `Sn`, `An`  | symmetric / alternating on n ≤ 6 points  |
//! | `Q8`        | quaternion group                         |
//! | `F20`       | ⟨a, b │ a⁵ = b⁴ = 1, ba = a²b⟩           |
//! | `Ep^q`      | elementary abelian of order p^q          |
//!
//! `Epq` without the caret is read with `q` as the final digit.

use std::collections::HashMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{Group, DEFAULT_ORDER_CAP};
use crate::io::load_groups_dir;
use crate::iso::are_isomorphic;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: Group,
    pub provenance: String,
}

/// Builds the group named by `spec`.
pub fn make(spec: &str) -> Result<Group> {
    let factors: Vec<&str> = spec.split(['x', 'X']).map(str::trim).collect();
    let mut names = Vec::with_capacity(factors.len());
    let mut product: Option<Group> = None;
    for factor in &factors {
        let (name, group) = make_factor(factor).ok_or_else(|| Error::UnknownSpec(spec.to_string()))??;
        names.push(name);
        product = Some(match product {
            None => group,
            Some(acc) => acc.direct_product(&group)?,
        });
    }
    let group = product.ok_or_else(|| Error::UnknownSpec(spec.to_string()))?;
    Ok(group.renamed(names.join("x")))
}

/// `None` when the factor does not parse; `Some(Err)` when it parses but cannot be built.
fn make_factor(factor: &str) -> Option<Result<(String, Group)>> {
    let upper = factor.to_ascii_uppercase();
    let (letter, rest) = upper.split_at_checked(1)?;
    if letter == "E" {
        let (p, q) = match rest.split_once('^') {
            Some((p, q)) => (p.parse::<usize>().ok()?, q.parse::<u32>().ok()?),
            None if rest.len() >= 2 && rest.is_ascii() => {
                let (p, q) = rest.split_at(rest.len() - 1);
                (p.parse().ok()?, q.parse().ok()?)
            }
            None => return None,
        };
        if !is_prime(p) || q == 0 {
            return None;
        }
        return Some(elementary_abelian(p, q).map(|g| (format!("E{p}^{q}"), g)));
    }
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: usize = rest.parse().ok()?;
    let name = format!("{letter}{n}");
    let built = match letter {
        "C" if n >= 1 => cyclic(n),
        "D" if n >= 1 => dihedral(n),
        "S" if (1..=6).contains(&n) => symmetric(n),
        "A" if (1..=6).contains(&n) => alternating(n),
        "Q" if n == 8 => Ok(quaternion()),
        "F" if n == 20 => frobenius20(),
        _ => return None,
    };
    Some(built.map(|g| (name, g)))
}

fn check_order(order: usize) -> Result<()> {
    if order > DEFAULT_ORDER_CAP {
        return Err(Error::ClosureExceedsLimit {
            limit: DEFAULT_ORDER_CAP,
        });
    }
    Ok(())
}

pub fn cyclic(n: usize) -> Result<Group> {
    check_order(n)?;
    Ok(Group::from_fn(format!("C{n}"), n, |a, b| (a + b) % n))
}

/// Dihedral group of order `2n`; element `i + n·j` is `r^i s^j`.
pub fn dihedral(n: usize) -> Result<Group> {
    check_order(2 * n)?;
    Ok(Group::from_fn(format!("D{n}"), 2 * n, |x, y| {
        let (a, b) = (x % n, x / n);
        let (c, d) = (y % n, y / n);
        let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
        rot + n * ((b + d) % 2)
    }))
}

pub fn symmetric(n: usize) -> Result<Group> {
    let name = format!("S{n}");
    match n {
        1 => Ok(cyclic(1)?.renamed(name)),
        2 => Group::from_permutations(name, &[Permutation::from_cycles(2, &[&[0, 1]])?]),
        _ => {
            let long: Vec<usize> = (0..n).collect();
            let gens = [
                Permutation::from_cycles(n, &[&[0, 1]])?,
                Permutation::from_cycles(n, &[&long])?,
            ];
            Group::from_permutations(name, &gens)
        }
    }
}

pub fn alternating(n: usize) -> Result<Group> {
    let name = format!("A{n}");
    if n <= 2 {
        return Ok(cyclic(1)?.renamed(name));
    }
    let gens = (2..n)
        .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
        .collect::<Result<Vec<_>>>()?;
    Group::from_permutations(name, &gens)
}

/// Quaternion group; element `4·s + u` is `(-1)^s · u` with `u ∈ {1, i, j, k}`.
pub fn quaternion() -> Group {
    // UNITS[u][v] = (sign, unit) of u·v
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    Group::from_fn("Q8", 8, |x, y| {
        let (s, t) = UNITS[x % 4][y % 4];
        4 * ((x / 4 + y / 4 + s) % 2) + t
    })
}

/// Frobenius group of order 20 from `a = (0 1 2 3 4)` and `b = (1 2 4 3)`.
pub fn frobenius20() -> Result<Group> {
    let a = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]])?;
    let b = Permutation::from_cycles(5, &[&[1, 2, 4, 3]])?;
    let relations_hold = a.pow(5).is_identity() && b.pow(4).is_identity() && b.compose(&a) == a.pow(2).compose(&b);
    if !relations_hold {
        return Err(Error::InvalidPermutation(
            "F20 generators violate a⁵ = b⁴ = 1, ba = a²b".into(),
        ));
    }
    Group::from_permutations("F20", &[a, b])
}

pub fn elementary_abelian(p: usize, q: u32) -> Result<Group> {
    check_order(p.checked_pow(q).unwrap_or(usize::MAX))?;
    let cp = cyclic(p)?;
    let mut g = cp.clone();
    for _ in 1..q {
        g = g.direct_product(&cp)?;
    }
    Ok(g.renamed(format!("E{p}^{q}")))
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The curated scan catalog up to `max_order`, deduplicated by isomorphism.
pub fn scan_catalog(max_order: usize) -> Vec<CatalogEntry> {
    build_catalog(max_order, Vec::new())
}

/// [`scan_catalog`] plus every group file in `groups_dir` of order at most `max_order`.
pub fn scan_catalog_with_dir(max_order: usize, groups_dir: Option<&Path>) -> Result<Vec<CatalogEntry>> {
    let extra = match groups_dir {
        Some(dir) => load_groups_dir(dir)?
            .into_iter()
            .filter(|(_, g)| g.order() <= max_order)
            .map(|(path, g)| CatalogEntry {
                name: g.name().to_string(),
                provenance: format!("file({})", path.display()),
                group: g,
            })
            .collect(),
        None => Vec::new(),
    };
    Ok(build_catalog(max_order, extra))
}

fn build_catalog(max_order: usize, extra: Vec<CatalogEntry>) -> Vec<CatalogEntry> {
    let max_order = max_order.min(DEFAULT_ORDER_CAP);
    let mut base: Vec<CatalogEntry> = Vec::new();
    let mut push = |name: &str, provenance: String| {
        if let Ok(group) = make(name) {
            if group.order() <= max_order {
                base.push(CatalogEntry {
                    name: name.to_string(),
                    group,
                    provenance,
                });
            }
        }
    };

    for n in 1..=max_order {
        push(&format!("C{n}"), format!("cyclic(n={n})"));
    }
    for name in ["S3", "S4", "A4", "A5", "Q8", "F20"] {
        push(name, format!("named({name})"));
    }
    for p in [2, 3, 5, 7] {
        push(&format!("C{p}xC{p}"), format!("elementary_abelian(p={p}, q=2)"));
    }
    for n in 3..=max_order / 2 {
        push(&format!("D{n}"), format!("dihedral(n={n})"));
    }

    let mut products = Vec::new();
    for i in 0..base.len() {
        if base[i].group.order() == 1 {
            continue;
        }
        for j in i..base.len() {
            let (a, b) = (&base[i], &base[j]);
            if b.group.order() == 1 || a.group.order() * b.group.order() > max_order {
                continue;
            }
            let group = a.group.direct_product(&b.group).expect("order within cap");
            let name = format!("{}x{}", a.name, b.name);
            products.push(CatalogEntry {
                group: group.renamed(name.clone()),
                name,
                provenance: format!("direct_product({}, {})", a.name, b.name),
            });
        }
    }

    let mut kept: Vec<CatalogEntry> = Vec::new();
    let mut by_order: HashMap<usize, Vec<usize>> = HashMap::new();
    for entry in base.into_iter().chain(products).chain(extra) {
        let same_order = by_order.entry(entry.group.order()).or_default();
        if same_order.iter().any(|&k| are_isomorphic(&kept[k].group, &entry.group)) {
            continue;
        }
        same_order.push(kept.len());
        kept.push(entry);
    }
    kept.sort_by_key(|e| e.group.order());
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exponent(g: &Group) -> usize {
        g.element_orders().into_iter().fold(1, |acc, m| acc * m / gcd(acc, m))
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn named_specs() {
        let v4 = make("C2xC2").unwrap();
        assert_eq!((v4.order(), exponent(&v4)), (4, 2));
        assert_eq!(make("D5").unwrap().order(), 10);
        assert_eq!(make("F20").unwrap().order(), 20);
        assert_eq!(make("s4").unwrap().order(), 24);
        assert_eq!(make("A5").unwrap().order(), 60);
        assert_eq!(make("A3").unwrap().order(), 3);
        assert_eq!(make("S2").unwrap().order(), 2);
        assert_eq!(make("Q8").unwrap().order(), 8);
        assert_eq!(make("E2^3").unwrap().order(), 8);
        assert_eq!(make("E52").unwrap().order(), 25);
        assert_eq!(make("S3xC2").unwrap().name(), "S3xC2");
        assert_eq!(make("c3xc3").unwrap().name(), "C3xC3");
    }

    #[test]
    fn q8_structure() {
        let q8 = make("Q8").unwrap();
        let mut orders = q8.element_orders();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert!(!q8.is_abelian());
        // valid table
        assert!(Group::from_cayley_table("Q8", &q8.table_rows()).is_ok());
    }

    #[test]
    fn family_tables_validate() {
        for spec in ["D1", "D2", "D7", "C9", "F20", "A4"] {
            let g = make(spec).unwrap();
            assert!(Group::from_cayley_table(spec, &g.table_rows()).is_ok(), "{spec}");
        }
    }

    #[test]
    fn unknown_specs() {
        for spec in ["", "Z4", "S7", "A9", "Q16", "F21", "C0", "E4^2", "E2^0", "C3xx", "Cabc"] {
            assert!(matches!(make(spec), Err(Error::UnknownSpec(_))), "{spec}");
        }
        assert!(matches!(make("C6000"), Err(Error::ClosureExceedsLimit { .. })));
    }

    #[test]
    fn make_is_deterministic() {
        for spec in ["F20", "S4xC2", "A5"] {
            assert_eq!(make(spec).unwrap(), make(spec).unwrap());
        }
    }

    #[test]
    fn small_catalog() {
        let cat = scan_catalog(6);
        let names: Vec<&str> = cat.iter().map(|e| e.name.as_str()).collect();
        for expected in ["C1", "C2", "C3", "C4", "C5", "C6", "S3", "C2xC2"] {
            assert!(names.contains(&expected), "{expected} missing from {names:?}");
        }
        assert!(!names.contains(&"C2xC3"));
        assert!(!names.contains(&"D3"));
        assert_eq!(cat.len(), 8);
    }

    #[test]
    fn catalog_contents() {
        let cat = scan_catalog(12);
        assert!(cat.iter().any(|e| e.name == "A4"));
        let cat = scan_catalog(30);
        for name in ["D5", "F20", "C5xC5", "Q8", "S4"] {
            assert!(cat.iter().any(|e| e.name == name), "{name}");
        }
        for e in &cat {
            assert!(are_isomorphic(&make(&e.name).unwrap(), &e.group), "{}", e.name);
        }
    }
}
