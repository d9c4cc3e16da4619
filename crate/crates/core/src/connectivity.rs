//! Disjoint paths and k-connectivity via unit-capacity vertex-split max-flow.

use crate::graph::{Edge, Graph};
use crate::vset::{VSet, Vertex, MAX_VERTICES};
use std::collections::VecDeque;

/// Internally disjoint `u`–`v` paths of maximum number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPaths {
    pub count: usize,
    pub paths: Vec<Vec<Vertex>>,
}

const NODES: usize = 2 * MAX_VERTICES;

struct Flow {
    cap: Vec<[i8; NODES]>,
}

impl Flow {
    fn augment(&mut self, s: usize, t: usize, active: &[bool; NODES]) -> bool {
        let mut prev = [usize::MAX; NODES];
        prev[s] = s;
        let mut q = VecDeque::new();
        q.push_back(s);
        while let Some(x) = q.pop_front() {
            if x == t {
                break;
            }
            for y in 0..NODES {
                if active[y] && prev[y] == usize::MAX && self.cap[x][y] > 0 {
                    prev[y] = x;
                    q.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            return false;
        }
        let mut y = t;
        while y != s {
            let x = prev[y];
            self.cap[x][y] -= 1;
            self.cap[y][x] += 1;
            y = x;
        }
        true
    }
}

/// Maximum number of `u`–`v` paths that pairwise share only their ends, avoiding the forbidden
/// vertices and edges. An edge `uv` counts as one path unless forbidden.
pub fn internally_disjoint_paths(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    forbidden_vertices: VSet,
    forbidden_edges: &[Edge],
) -> DisjointPaths {
    assert!(u != v, "endpoints must differ");
    assert!(!forbidden_vertices.contains(u) && !forbidden_vertices.contains(v));
    let live = g.vertices() - forbidden_vertices;
    let inn = |x: Vertex| 2 * x;
    let out = |x: Vertex| 2 * x + 1;
    let mut f = Flow { cap: vec![[0i8; NODES]; NODES] };
    let mut active = [false; NODES];
    for x in live {
        active[inn(x)] = true;
        active[out(x)] = true;
        f.cap[inn(x)][out(x)] = if x == u || x == v { 64 } else { 1 };
    }
    for e in g.edges() {
        if !live.contains(e.0) || !live.contains(e.1) || forbidden_edges.contains(&e) {
            continue;
        }
        f.cap[out(e.0)][inn(e.1)] = 1;
        f.cap[out(e.1)][inn(e.0)] = 1;
    }
    let original = f.cap.clone();
    let (s, t) = (out(u), inn(v));
    let mut count = 0;
    while f.augment(s, t, &active) {
        count += 1;
    }
    // Read paths off the saturated edge arcs.
    let mut used = vec![[false; NODES]; NODES];
    for x in 0..NODES {
        for y in 0..NODES {
            if x % 2 == 1 && y % 2 == 0 && original[x][y] > 0 && f.cap[x][y] < original[x][y] {
                used[x][y] = true;
            }
        }
    }
    let mut paths = Vec::with_capacity(count);
    for _ in 0..count {
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            let next = (0..MAX_VERTICES).find(|&w| used[out(cur)][inn(w)]).expect("flow decomposes");
            used[out(cur)][inn(next)] = false;
            path.push(next);
            cur = next;
        }
        paths.push(path);
    }
    DisjointPaths { count, paths }
}

/// Local vertex connectivity between `u` and `v`.
pub fn local_connectivity(g: &Graph, u: Vertex, v: Vertex) -> usize {
    internally_disjoint_paths(g, u, v, VSet::EMPTY, &[]).count
}

/// `|V| > k` and deleting fewer than `k` vertices never disconnects `g`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    assert!(k >= 1);
    if g.n() <= k || !g.is_connected() {
        return false;
    }
    if k == 1 {
        return true;
    }
    // Fast path: delete every set of fewer than k vertices when that is cheap.
    if k <= 3 {
        return no_small_cut(g, k);
    }
    let vs = g.vertices().to_vec();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if !g.has_edge(a, b) && local_connectivity(g, a, b) < k {
                return false;
            }
        }
    }
    true
}

fn no_small_cut(g: &Graph, k: usize) -> bool {
    let all = g.vertices();
    let vs = all.to_vec();
    for (i, &a) in vs.iter().enumerate() {
        if !g.is_connected_set(all.without(a)) {
            return false;
        }
        if k == 3 {
            for &b in &vs[i + 1..] {
                if !g.is_connected_set(all.without(a).without(b)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Menger-only variant of [`is_k_connected`], kept for cross-checking the fast path.
pub fn is_k_connected_menger(g: &Graph, k: usize) -> bool {
    if g.n() <= k || !g.is_connected() {
        return false;
    }
    let vs = g.vertices().to_vec();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if !g.has_edge(a, b) && local_connectivity(g, a, b) < k {
                return false;
            }
        }
    }
    true
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

    #[test]
    fn k4_paths() {
        let g = complete(4);
        let p = internally_disjoint_paths(&g, 0, 1, VSet::EMPTY, &[]);
        assert_eq!(p.count, 3);
        for path in &p.paths {
            assert_eq!(path.first(), Some(&0));
            assert_eq!(path.last(), Some(&1));
        }
        assert!(is_k_connected(&g, 3));
        assert!(!is_k_connected(&g, 4));
    }

    #[test]
    fn forbidden_edge_drops_direct_path() {
        let g = complete(4);
        let p = internally_disjoint_paths(&g, 0, 1, VSet::EMPTY, &[Edge(0, 1)]);
        assert_eq!(p.count, 2);
        let p = internally_disjoint_paths(&g, 0, 1, VSet::single(2), &[]);
        assert_eq!(p.count, 2);
    }
}
