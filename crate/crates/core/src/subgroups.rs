//! Subgroup lattices, quotients and setwise products.

use std::collections::HashMap;

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::{Group, IDENTITY};
use crate::iso::are_isomorphic;

/// Default cap on the number of subgroups in a lattice.
pub const DEFAULT_LATTICE_CAP: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: ElementSet,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// `[G:H]` for the ambient group the subgroup was built in.
    pub fn index(&self) -> usize {
        self.members.width() / self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// A generating set, not necessarily minimal.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_proper(&self) -> bool {
        !self.members.is_full()
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.to_vec()
    }
}

/// Smallest subgroup containing `seed`.
pub fn generated_subgroup(g: &Group, seed: &ElementSet) -> Subgroup {
    let generators: Vec<usize> = seed.iter().filter(|&x| x != IDENTITY).collect();
    Subgroup {
        members: closure(g, &generators),
        generators,
    }
}

/// Closes `{1}` under right multiplication by `generators`; finiteness makes this a subgroup.
fn closure(g: &Group, generators: &[usize]) -> ElementSet {
    let mut members = ElementSet::empty(g.order());
    members.insert(IDENTITY);
    let mut queue = vec![IDENTITY];
    while let Some(x) = queue.pop() {
        for &s in generators {
            let y = g.mul(x, s);
            if members.insert(y) {
                queue.push(y);
            }
        }
    }
    members
}

/// Every subgroup of a group, sorted by `(order, members)`, with maximal and normal flags.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    maximal: Vec<bool>,
    normal: Vec<bool>,
}

impl SubgroupLattice {
    pub fn build(g: &Group) -> Result<Self> {
        all_subgroups_capped(g, DEFAULT_LATTICE_CAP)
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, id: usize) -> &Subgroup {
        &self.subgroups[id]
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn trivial_id(&self) -> usize {
        0
    }

    pub fn whole_id(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn is_maximal(&self, id: usize) -> bool {
        self.maximal[id]
    }

    pub fn is_normal(&self, id: usize) -> bool {
        self.normal[id]
    }

    pub fn maximal_ids(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.maximal[i]).collect()
    }

    pub fn normal_ids(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.normal[i]).collect()
    }

    pub fn proper_ids(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.subgroups[i].is_proper()).collect()
    }

    /// Whether subgroup `a` is contained in subgroup `b`.
    pub fn is_contained(&self, a: usize, b: usize) -> bool {
        self.subgroups[a].members.is_subset(&self.subgroups[b].members)
    }

    pub fn id_of(&self, members: &ElementSet) -> Option<usize> {
        let order = members.len();
        let start = self.subgroups.partition_point(|h| h.order() < order);
        self.subgroups[start..]
            .iter()
            .take_while(|h| h.order() == order)
            .position(|h| &h.members == members)
            .map(|p| start + p)
    }
}

pub fn all_subgroups(g: &Group) -> Result<SubgroupLattice> {
    all_subgroups_capped(g, DEFAULT_LATTICE_CAP)
}

/// Seeds with every cyclic subgroup, then closes under joins with cyclic subgroups
/// until no new subgroup appears. Every subgroup is a join of cyclic subgroups,
/// so this reaches the whole lattice.
pub fn all_subgroups_capped(g: &Group, cap: usize) -> Result<SubgroupLattice> {
    let n = g.order();
    let mut found: Vec<Subgroup> = Vec::new();
    let mut seen: HashMap<ElementSet, usize> = HashMap::new();

    let trivial = closure(g, &[]);
    seen.insert(trivial.clone(), 0);
    found.push(Subgroup {
        members: trivial,
        generators: Vec::new(),
    });

    let mut cyclic: Vec<(usize, usize)> = Vec::new(); // (generator, id)
    for x in 1..n {
        let members = closure(g, &[x]);
        if seen.contains_key(&members) {
            continue;
        }
        let id = found.len();
        seen.insert(members.clone(), id);
        found.push(Subgroup {
            members,
            generators: vec![x],
        });
        cyclic.push((x, id));
        if found.len() > cap {
            return Err(Error::LatticeExceedsLimit { limit: cap });
        }
    }

    let mut next = 1;
    while next < found.len() {
        for &(c, _) in &cyclic {
            if found[next].members.contains(c) {
                continue;
            }
            let mut generators = found[next].generators.clone();
            generators.push(c);
            let members = closure(g, &generators);
            if seen.contains_key(&members) {
                continue;
            }
            seen.insert(members.clone(), found.len());
            found.push(Subgroup { members, generators });
            if found.len() > cap {
                return Err(Error::LatticeExceedsLimit { limit: cap });
            }
        }
        next += 1;
    }

    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));

    let count = found.len();
    let mut maximal = vec![false; count];
    for i in 0..count {
        let h = &found[i];
        if !h.is_proper() {
            continue;
        }
        maximal[i] = !found[i + 1..]
            .iter()
            .any(|k| k.is_proper() && k.order() > h.order() && h.members.is_subset(&k.members));
    }
    let normal = found.iter().map(|h| normal_by_generators(g, h)).collect();

    Ok(SubgroupLattice {
        subgroups: found,
        maximal,
        normal,
    })
}

fn normal_by_generators(g: &Group, h: &Subgroup) -> bool {
    (0..g.order()).all(|x| h.generators.iter().all(|&s| h.members.contains(g.conjugate(x, s))))
}

/// Conjugates every member of `members` by every group element.
pub fn is_normal(g: &Group, members: &ElementSet) -> bool {
    (0..g.order()).all(|x| members.iter().all(|y| members.contains(g.conjugate(x, y))))
}

/// The quotient `G/N` on cosets of `n`; the coset of the identity is index 0.
pub fn quotient(g: &Group, n: &Subgroup) -> Result<Group> {
    if !is_normal(g, &n.members) {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for h in n.members.iter() {
            coset_of[g.mul(x, h)] = id;
        }
    }
    let name = format!("{}/N{}", g.name(), n.order());
    Ok(Group::from_fn(name, reps.len(), |a, b| {
        coset_of[g.mul(reps[a], reps[b])]
    }))
}

/// True iff some normal subgroup `N` of `g` has `G/N ≅ target`.
pub fn has_quotient_isomorphic(g: &Group, lattice: &SubgroupLattice, target: &Group) -> bool {
    lattice.normal_ids().into_iter().any(|id| {
        let n = lattice.get(id);
        n.order() * target.order() == g.order() && are_isomorphic(&quotient(g, n).expect("flagged normal"), target)
    })
}

pub fn subgroups_of_index<'a>(g: &Group, lattice: &'a SubgroupLattice, d: usize) -> Vec<&'a Subgroup> {
    if d == 0 || !g.order().is_multiple_of(d) {
        return Vec::new();
    }
    let order = g.order() / d;
    lattice.subgroups().iter().filter(|h| h.order() == order).collect()
}

/// `|{x·y : x ∈ a, y ∈ b}|`, counted directly.
pub fn setwise_product_size(g: &Group, a: &Subgroup, b: &Subgroup) -> usize {
    let mut product = ElementSet::empty(g.order());
    for x in a.members.iter() {
        for y in b.members.iter() {
            product.insert(g.mul(x, y));
        }
    }
    product.len()
}
