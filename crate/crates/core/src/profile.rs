use rayon::prelude::*;

use crate::catalog::CatalogEntry;
use crate::covering::{sigma_exact, CoverResult};
use crate::error::Result;
use crate::group::Group;
use crate::subgroups::{all_subgroups, SubgroupLattice};

/// A group together with its lattice and exact cover, computed once and shared by scans.
#[derive(Clone, Debug)]
pub struct GroupProfile {
    pub name: String,
    pub group: Group,
    pub lattice: SubgroupLattice,
    pub cover: CoverResult,
}

impl GroupProfile {
    pub fn build(name: impl Into<String>, group: Group) -> Result<Self> {
        let lattice = all_subgroups(&group)?;
        let cover = sigma_exact(&group, &lattice);
        Ok(GroupProfile {
            name: name.into(),
            group,
            lattice,
            cover,
        })
    }

    pub fn from_entry(entry: &CatalogEntry) -> Result<Self> {
        GroupProfile::build(entry.name.clone(), entry.group.clone())
    }
}

/// Profiles every entry in parallel; the output keeps the input order.
pub fn profile_all(entries: &[CatalogEntry]) -> Result<Vec<GroupProfile>> {
    entries.par_iter().map(GroupProfile::from_entry).collect()
}
