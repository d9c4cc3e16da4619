//! Minor containment by branch-set backtracking.

use crate::graph::Graph;
use crate::vset::{VSet, Vertex};

/// Default backtracking budget, in search nodes.
pub const DEFAULT_MINOR_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorResult {
    /// Branch sets of `g`, one per vertex of `h` (paired with that vertex).
    Minor(Vec<(Vertex, VSet)>),
    NotMinor,
    /// The budget ran out before the search finished.
    Indeterminate,
}

impl MinorResult {
    pub fn is_minor(&self) -> bool {
        matches!(self, MinorResult::Minor(_))
    }
}

/// Whether `h` is a minor of `g`, with a branch-set certificate when it is.
pub fn is_minor(h: &Graph, g: &Graph, budget: u64) -> MinorResult {
    if h.n() > g.n() || h.m() > g.m() {
        return MinorResult::NotMinor;
    }
    if h.n() == 0 {
        return MinorResult::Minor(Vec::new());
    }
    // Order h's vertices so each one after the first (per component) has an earlier neighbour.
    let mut order: Vec<Vertex> = Vec::new();
    let mut placed = VSet::EMPTY;
    while placed != h.vertices() {
        let rest = h.vertices() - placed;
        let start = rest.iter().max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v))).unwrap();
        order.push(start);
        placed.insert(start);
        loop {
            let frontier = h.nbrs_of_set(placed) & (rest - placed);
            let Some(next) = frontier.iter().max_by_key(|&v| ((h.nbrs(v) & placed).len(), h.degree(v), std::cmp::Reverse(v))) else {
                break;
            };
            order.push(next);
            placed.insert(next);
        }
    }
    let mut s = MinorSearch { h, g, order, branch: vec![VSet::EMPTY; 64], nodes: 0, budget, out_of_budget: false };
    if s.place(0, VSet::EMPTY) {
        let mut cert: Vec<(Vertex, VSet)> = s.order.iter().map(|&v| (v, s.branch[v])).collect();
        cert.sort();
        MinorResult::Minor(cert)
    } else if s.out_of_budget {
        MinorResult::Indeterminate
    } else {
        MinorResult::NotMinor
    }
}

/// Checks a certificate: disjoint connected branch sets with every edge of `h` realised.
pub fn verify_minor_certificate(h: &Graph, g: &Graph, cert: &[(Vertex, VSet)]) -> bool {
    let mut used = VSet::EMPTY;
    let mut bs = vec![VSet::EMPTY; 64];
    for &(v, b) in cert {
        if !g.is_connected_set(b) || b.intersects(used) || !h.has_vertex(v) {
            return false;
        }
        used |= b;
        bs[v] = b;
    }
    cert.len() == h.n() && h.edges().iter().all(|e| g.nbrs_of_set(bs[e.0]).intersects(bs[e.1]))
}

struct MinorSearch<'a> {
    h: &'a Graph,
    g: &'a Graph,
    order: Vec<Vertex>,
    branch: Vec<VSet>,
    nodes: u64,
    budget: u64,
    out_of_budget: bool,
}

impl MinorSearch<'_> {
    fn place(&mut self, i: usize, used: VSet) -> bool {
        if i == self.order.len() {
            return true;
        }
        let free = self.g.vertices() - used;
        let remaining = self.order.len() - i - 1;
        if free.len() < remaining + 1 {
            return false;
        }
        let x = self.order[i];
        let earlier: Vec<Vertex> = self.order[..i].iter().copied().filter(|&y| self.h.has_edge(x, y)).collect();
        // A valid branch set meets the neighbourhood of the first earlier neighbour's branch set.
        let roots = match earlier.first() {
            Some(&y) => self.g.nbrs_of_set(self.branch[y]) & free,
            None => free,
        };
        let mut banned = VSet::EMPTY;
        for r in roots {
            let mut found = false;
            self.connected_sets(VSet::single(r), banned, free, &mut |this, set| {
                if earlier.iter().any(|&y| !this.g.nbrs_of_set(this.branch[y]).intersects(set)) {
                    return false;
                }
                if (free - set).len() < remaining {
                    return false;
                }
                this.branch[x] = set;
                if this.place(i + 1, used | set) {
                    found = true;
                    return true;
                }
                this.branch[x] = VSet::EMPTY;
                this.out_of_budget
            });
            if found {
                return true;
            }
            if self.out_of_budget {
                return false;
            }
            banned.insert(r);
        }
        false
    }

    /// Enumerates each connected superset of `set` inside `allowed` avoiding `banned` once.
    /// The callback returns `true` to stop.
    fn connected_sets(
        &mut self,
        set: VSet,
        banned: VSet,
        allowed: VSet,
        f: &mut dyn FnMut(&mut Self, VSet) -> bool,
    ) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.out_of_budget = true;
            return true;
        }
        if f(self, set) {
            return true;
        }
        let ext = self.g.nbrs_of_set(set) & (allowed - banned);
        let mut b = banned;
        for v in ext {
            if self.connected_sets(set.with(v), b, allowed, f) {
                return true;
            }
            b.insert(v);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::with_vertices(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    fn cycle(n: usize) -> Graph {
        let mut g = Graph::with_vertices(n).unwrap();
        for i in 0..n {
            g.add_edge(i, (i + 1) % n).unwrap();
        }
        g
    }

    #[test]
    fn triangle_in_cycle() {
        let r = is_minor(&complete(3), &cycle(6), DEFAULT_MINOR_BUDGET);
        match r {
            MinorResult::Minor(c) => assert!(verify_minor_certificate(&complete(3), &cycle(6), &c)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn k4_not_in_cycle() {
        assert_eq!(is_minor(&complete(4), &cycle(6), DEFAULT_MINOR_BUDGET), MinorResult::NotMinor);
    }

    #[test]
    fn tiny_budget_is_indeterminate() {
        let mut g = cycle(8);
        g.add_edge(0, 4).unwrap();
        assert_eq!(is_minor(&complete(4), &g, 3), MinorResult::Indeterminate);
    }
}
