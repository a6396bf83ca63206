//! Finite groups stored as Cayley tables.
//!
//! Elements are the indices `0..order`, and the identity is always index 0.
//! Every constructor either validates the group axioms or builds the table
//! from a structure that already satisfies them (permutation closure, direct
//! products, quotients, and the closed-form family tables).

use std::collections::HashMap;
use std::fmt;

use crate::error::{Axiom, Error, Result};
use crate::perm::Permutation;

/// Default cap on the order of any constructed group.
pub const DEFAULT_ORDER_CAP: usize = 5040;

/// Index of the identity element in every [`Group`].
pub const IDENTITY: usize = 0;

#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
}

impl Group {
    /// Validates `rows` as a Cayley table and relabels so that the identity is index 0.
    pub fn from_cayley_table(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(not_a_group(Axiom::Shape, "table is empty".into()));
        }
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(not_a_group(
                    Axiom::Shape,
                    format!("row {a} has length {} but the table has {n} rows", row.len()),
                ));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(not_a_group(
                    Axiom::Shape,
                    format!("row {a} contains out-of-range entry {x}"),
                ));
            }
        }

        let mut seen = vec![usize::MAX; n];
        for (a, row) in rows.iter().enumerate() {
            for (b, &x) in row.iter().enumerate() {
                if seen[x] == a {
                    return Err(not_a_group(
                        Axiom::LatinSquare,
                        format!("row {a} repeats entry {x} (column {b})"),
                    ));
                }
                seen[x] = a;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for b in 0..n {
            for (a, row) in rows.iter().enumerate() {
                let x = row[b];
                if seen[x] == b {
                    return Err(not_a_group(
                        Axiom::LatinSquare,
                        format!("column {b} repeats entry {x} (row {a})"),
                    ));
                }
                seen[x] = b;
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| rows[e][a] == a && rows[a][e] == a))
            .ok_or_else(|| not_a_group(Axiom::Identity, "no two-sided identity element".into()))?;

        for (a, row) in rows.iter().enumerate() {
            let has_inverse = (0..n).any(|b| row[b] == identity && rows[b][a] == identity);
            if !has_inverse {
                return Err(not_a_group(
                    Axiom::Inverse,
                    format!("element {a} has no two-sided inverse"),
                ));
            }
        }

        for a in 0..n {
            for b in 0..n {
                let ab = rows[a][b];
                for c in 0..n {
                    if rows[ab][c] != rows[a][rows[b][c]] {
                        return Err(not_a_group(
                            Axiom::Associativity,
                            format!("(a·b)·c ≠ a·(b·c) for (a, b, c) = ({a}, {b}, {c})"),
                        ));
                    }
                }
            }
        }

        // swap labels 0 and `identity`
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(rows[a][b]) as u32;
            }
        }
        Ok(Group::from_flat_table(name.into(), n, table))
    }

    /// The permutation group generated by `generators`, with the default order cap.
    pub fn from_permutations(name: impl Into<String>, generators: &[Permutation]) -> Result<Self> {
        Group::from_permutations_capped(name, generators, DEFAULT_ORDER_CAP)
    }

    /// Breadth-first closure of `generators` under composition.
    ///
    /// Element `i` of the result is the `i`-th permutation discovered; the product is
    /// function composition, so `mul(a, b)` applies `b` first.
    pub fn from_permutations_capped(name: impl Into<String>, generators: &[Permutation], cap: usize) -> Result<Self> {
        Ok(Group::close_permutations(generators, cap)?.0.renamed(name))
    }

    /// Like [`Group::from_permutations_capped`] but also returns the permutation of each element.
    pub fn close_permutations(generators: &[Permutation], cap: usize) -> Result<(Group, Vec<Permutation>)> {
        let degree = generators
            .first()
            .ok_or_else(|| Error::InvalidPermutation("generator list is empty".into()))?
            .degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation(format!(
                "generator {g:?} has degree {} but expected {degree}",
                g.degree()
            )));
        }

        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        // right_gen[x * gens + j] = index of elements[x] ∘ generators[j]
        let mut right_gen: Vec<usize> = Vec::new();
        // spanning tree of the right Cayley graph: elements[x] = elements[parent] ∘ gen
        let mut tree: Vec<(usize, usize)> = vec![(0, 0)];
        let mut head = 0;
        while head < elements.len() {
            for (j, gen) in generators.iter().enumerate() {
                let next = elements[head].compose(gen);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = elements.len();
                        if id >= cap {
                            return Err(Error::ClosureExceedsLimit { limit: cap });
                        }
                        index.insert(next.clone(), id);
                        elements.push(next);
                        tree.push((head, j));
                        id
                    }
                };
                right_gen.push(id);
            }
            head += 1;
        }

        let n = elements.len();
        let gens = generators.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as u32;
            // a·x = a·(parent·gen) = (a·parent)·gen, and parents precede children
            for x in 1..n {
                let (parent, j) = tree[x];
                row[x] = right_gen[row[parent] as usize * gens + j] as u32;
            }
        }
        Ok((Group::from_flat_table(String::new(), n, table), elements))
    }

    /// Direct product on lexicographically ordered pairs, with the default order cap.
    pub fn direct_product(&self, other: &Group) -> Result<Self> {
        self.direct_product_capped(other, DEFAULT_ORDER_CAP)
    }

    pub fn direct_product_capped(&self, other: &Group, cap: usize) -> Result<Self> {
        let (n, m) = (self.order, other.order);
        let order = n * m;
        if order > cap {
            return Err(Error::ClosureExceedsLimit { limit: cap });
        }
        let mut table = vec![0u32; order * order];
        for a1 in 0..n {
            for b1 in 0..m {
                let row = (a1 * m + b1) * order;
                for a2 in 0..n {
                    let a = self.mul(a1, a2) * m;
                    for b2 in 0..m {
                        table[row + a2 * m + b2] = (a + other.mul(b1, b2)) as u32;
                    }
                }
            }
        }
        let name = format!("{}x{}", self.name, other.name);
        Ok(Group::from_flat_table(name, order, table))
    }

    /// Builds a group from a product function that is known to satisfy the axioms
    /// with identity 0. Only checked in debug builds.
    pub(crate) fn from_fn(name: impl Into<String>, order: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                table[a * order + b] = mul(a, b) as u32;
            }
        }
        Group::from_flat_table(name.into(), order, table)
    }

    fn from_flat_table(name: String, order: usize, table: Vec<u32>) -> Self {
        let mut inverses = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            let inv = row.iter().position(|&x| x == 0).expect("latin row contains identity");
            inverses[a] = inv as u32;
        }
        let group = Group {
            name,
            order,
            table,
            inverses,
        };
        debug_assert!((0..order).all(|a| group.mul(0, a) == a && group.mul(a, 0) == a));
        group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `x · y · x⁻¹`
    #[inline]
    pub fn conjugate(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.inv(x))
    }

    pub fn pow(&self, x: usize, exp: usize) -> usize {
        (0..exp).fold(IDENTITY, |acc, _| self.mul(acc, x))
    }

    /// Least `m ≥ 1` with `x^m = 1`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut m = 1;
        let mut y = x;
        while y != IDENTITY {
            y = self.mul(y, x);
            m += 1;
        }
        m
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|x| self.element_order(x)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|x| self.element_order(x) == self.order)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

fn not_a_group(axiom: Axiom, detail: String) -> Error {
    Error::NotAGroup { axiom, detail }
}
