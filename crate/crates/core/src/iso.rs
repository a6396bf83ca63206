//! Isomorphism testing for small groups.
//!
//! Groups are first compared on cheap invariants (order and the multiset of
//! per-element `(order, centralizer size)` pairs). Survivors go to a
//! backtracking search that maps a greedy generating sequence of `g` onto
//! candidate images in `h`, extending the partial map along the right Cayley
//! graph and rejecting on the first inconsistency or collision.

use crate::group::{Group, IDENTITY};

pub fn are_isomorphic(g: &Group, h: &Group) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Returns `phi` with `phi[x]` the image of `x`, when an isomorphism exists.
pub fn find_isomorphism(g: &Group, h: &Group) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let inv_g = element_invariants(g);
    let inv_h = element_invariants(h);
    let mut sorted_g = inv_g.clone();
    let mut sorted_h = inv_h.clone();
    sorted_g.sort_unstable();
    sorted_h.sort_unstable();
    if sorted_g != sorted_h {
        return None;
    }

    let generators = greedy_generators(g);
    let candidates: Vec<Vec<usize>> = generators
        .iter()
        .map(|&s| (0..h.order()).filter(|&y| inv_h[y] == inv_g[s]).collect())
        .collect();

    let mut phi = vec![None; g.order()];
    phi[IDENTITY] = Some(IDENTITY);
    let mut used = vec![false; h.order()];
    used[IDENTITY] = true;
    let mut search = Search {
        g,
        h,
        generators: &generators,
        candidates: &candidates,
        images: Vec::with_capacity(generators.len()),
    };
    if search.extend(&mut phi, &mut used) {
        Some(phi.into_iter().map(|x| x.expect("total map")).collect())
    } else {
        None
    }
}

/// `(element order, centralizer size)` per element.
fn element_invariants(g: &Group) -> Vec<(usize, usize)> {
    (0..g.order())
        .map(|x| {
            let centralizer = (0..g.order()).filter(|&y| g.mul(x, y) == g.mul(y, x)).count();
            (g.element_order(x), centralizer)
        })
        .collect()
}

/// Repeatedly adds the highest-order element outside the current span.
pub(crate) fn greedy_generators(g: &Group) -> Vec<usize> {
    let orders = g.element_orders();
    let mut by_order: Vec<usize> = (1..g.order()).collect();
    by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));

    let mut span = vec![false; g.order()];
    span[IDENTITY] = true;
    let mut span_list = vec![IDENTITY];
    let mut generators = Vec::new();
    for &x in &by_order {
        if span[x] {
            continue;
        }
        generators.push(x);
        // re-close under right multiplication by all generators
        let mut queue = span_list.clone();
        while let Some(y) = queue.pop() {
            for &s in &generators {
                let z = g.mul(y, s);
                if !span[z] {
                    span[z] = true;
                    span_list.push(z);
                    queue.push(z);
                }
            }
        }
        if span_list.len() == g.order() {
            break;
        }
    }
    generators
}

struct Search<'a> {
    g: &'a Group,
    h: &'a Group,
    generators: &'a [usize],
    candidates: &'a [Vec<usize>],
    images: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, phi: &mut Vec<Option<usize>>, used: &mut Vec<bool>) -> bool {
        let depth = self.images.len();
        if depth == self.generators.len() {
            return phi.iter().all(Option::is_some);
        }
        for &t in &self.candidates[depth] {
            self.images.push(t);
            let mut next_phi = phi.clone();
            let mut next_used = used.clone();
            if self.propagate(&mut next_phi, &mut next_used) && self.extend(&mut next_phi, &mut next_used) {
                *phi = next_phi;
                *used = next_used;
                return true;
            }
            self.images.pop();
        }
        false
    }

    /// Extends `phi` to the span of the generators chosen so far, requiring
    /// `phi(x·s) = phi(x)·phi(s)` on every edge.
    fn propagate(&self, phi: &mut [Option<usize>], used: &mut [bool]) -> bool {
        let mut queue: Vec<usize> = (0..phi.len()).filter(|&x| phi[x].is_some()).collect();
        while let Some(x) = queue.pop() {
            let fx = phi[x].expect("queued elements are mapped");
            for (&s, &t) in self.generators.iter().zip(&self.images) {
                let y = self.g.mul(x, s);
                let fy = self.h.mul(fx, t);
                match phi[y] {
                    Some(existing) if existing != fy => return false,
                    Some(_) => {}
                    None => {
                        if used[fy] {
                            return false;
                        }
                        used[fy] = true;
                        phi[y] = Some(fy);
                        queue.push(y);
                    }
                }
            }
        }
        true
    }
}
