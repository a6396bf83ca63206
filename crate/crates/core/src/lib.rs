//! Subgroup lattices, covering numbers `σ(G)` and maximal unions of `k` proper
//! subgroups `μ_k(G)` for small finite groups given as Cayley tables.

pub mod catalog;
pub mod cli;
pub mod covering;
pub mod elements;
pub mod error;
pub mod group;
pub mod io;
pub mod iso;
pub mod perm;
pub mod profile;
pub mod report;
pub mod subgroups;
pub mod union_max;

pub use catalog::{make, scan_catalog, scan_catalog_with_dir, CatalogEntry};
pub use covering::{sigma_classifier, sigma_cross_check, sigma_exact, CoverResult, Sigma, SigmaClass, SigmaValue};
pub use elements::ElementSet;
pub use error::{Axiom, Error, Result};
pub use group::Group;
pub use iso::are_isomorphic;
pub use perm::Permutation;
pub use profile::GroupProfile;
pub use subgroups::{all_subgroups, Subgroup, SubgroupLattice};
pub use union_max::{mu_k, star_bound, UnionWitness};

/// Exact rational used for all ratios and bounds.
pub type Rational = num_rational::Ratio<i64>;

/// `p/q` in lowest terms, including `1/1` and `0/1`.
pub fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(num as i64, den as i64)
}
