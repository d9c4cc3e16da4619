//! Simple undirected graphs on at most 64 vertices, with edits and contraction bookkeeping.

use crate::error::{Error, Result};
use crate::vset::{VSet, Vertex, MAX_VERTICES};
use std::fmt;

/// An undirected edge, normalised so that `0 < 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Edge {
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn ends(self) -> VSet {
        VSet::single(self.0).with(self.1)
    }

    pub fn has_end(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(self, v: Vertex) -> Vertex {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }

    pub fn map(self, f: impl Fn(Vertex) -> Vertex) -> Edge {
        Edge::new(f(self.0), f(self.1))
    }
}

/// Simple graph. Vertex ids are small integers below 64; adjacency is stored as bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    verts: VSet,
    adj: Vec<VSet>,
}

impl Default for Graph {
    fn default() -> Self {
        Graph::new()
    }
}

impl Graph {
    pub fn new() -> Graph {
        Graph { verts: VSet::EMPTY, adj: vec![VSet::EMPTY; MAX_VERTICES] }
    }

    /// Edgeless graph on `0..n`.
    pub fn with_vertices(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::VertexOutOfRange(n - 1));
        }
        let mut g = Graph::new();
        g.verts = VSet::range(n);
        Ok(g)
    }

    /// Graph on `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut g = Graph::with_vertices(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) -> Result<()> {
        if v >= MAX_VERTICES {
            return Err(Error::VertexOutOfRange(v));
        }
        self.verts.insert(v);
        Ok(())
    }

    /// Adds the edge `uv`, declaring missing endpoints. Parallel edges are ignored.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::Loop(u));
        }
        self.add_vertex(u)?;
        self.add_vertex(v)?;
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> Result<()> {
        if !self.verts.contains(v) {
            return Err(Error::MissingVertex(v));
        }
        for w in self.adj[v] {
            self.adj[w].remove(v);
        }
        self.adj[v] = VSet::EMPTY;
        self.verts.remove(v);
        Ok(())
    }

    /// Smallest id not in use.
    pub fn fresh_vertex(&self) -> Result<Vertex> {
        (!self.verts).min().filter(|&v| v < MAX_VERTICES).ok_or(Error::VertexOutOfRange(MAX_VERTICES))
    }

    pub fn vertices(&self) -> VSet {
        self.verts
    }

    pub fn n(&self) -> usize {
        self.verts.len()
    }

    pub fn m(&self) -> usize {
        self.verts.iter().map(|v| self.adj[v].len()).sum::<usize>() / 2
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.verts.contains(v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < MAX_VERTICES && self.adj[u].contains(v)
    }

    pub fn nbrs(&self, v: Vertex) -> VSet {
        self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Neighbourhood of a set, excluding the set itself.
    pub fn nbrs_of_set(&self, s: VSet) -> VSet {
        let mut out = VSet::EMPTY;
        for v in s {
            out |= self.adj[v];
        }
        out - s
    }

    /// All edges, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for u in self.verts {
            for v in self.adj[u] {
                if u < v {
                    out.push(Edge(u, v));
                }
            }
        }
        out
    }

    /// Edges with both ends in `s`, sorted.
    pub fn edges_within(&self, s: VSet) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in s {
            for v in self.adj[u] & s {
                if u < v {
                    out.push(Edge(u, v));
                }
            }
        }
        out
    }

    pub fn count_edges_within(&self, s: VSet) -> usize {
        s.iter().map(|u| (self.adj[u] & s).len()).sum::<usize>() / 2
    }

    /// Edges with one end in `x` and the other in `y` (for disjoint `x`, `y`), sorted.
    pub fn edges_between(&self, x: VSet, y: VSet) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in x {
            for v in self.adj[u] & y {
                out.push(Edge::new(u, v));
            }
        }
        out.sort();
        out
    }

    pub fn induced(&self, s: VSet) -> Graph {
        let mut g = Graph::new();
        g.verts = s & self.verts;
        for v in g.verts {
            g.adj[v] = self.adj[v] & s;
        }
        g
    }

    /// Vertices reachable from `start` inside `allowed`.
    pub fn reach(&self, start: Vertex, allowed: VSet) -> VSet {
        let mut seen = VSet::single(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next & (allowed - seen);
            seen |= frontier;
        }
        seen
    }

    /// Whether `G[s]` is connected and nonempty.
    pub fn is_connected_set(&self, s: VSet) -> bool {
        match s.min() {
            None => false,
            Some(v) => self.reach(v, s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.verts)
    }

    /// Components of `G[s]`, sorted by minimum vertex.
    pub fn components_within(&self, s: VSet) -> Vec<VSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.reach(v, rest);
            rest -= c;
            out.push(c);
        }
        out
    }

    /// Components after deleting some vertices and edges, sorted by minimum vertex.
    pub fn components(&self, removed_vertices: VSet, removed_edges: &[Edge]) -> Vec<VSet> {
        if removed_edges.is_empty() {
            return self.components_within(self.verts - removed_vertices);
        }
        let mut h = self.clone();
        for e in removed_edges {
            h.adj[e.0].remove(e.1);
            h.adj[e.1].remove(e.0);
        }
        h.components_within(self.verts - removed_vertices)
    }

    /// Whether `G[s]` contains a cycle.
    pub fn has_cycle_within(&self, s: VSet) -> bool {
        let c = self.components_within(s).len();
        self.count_edges_within(s) + c > s.len()
    }

    /// Connected, 2-regular, at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3 && self.verts.iter().all(|v| self.degree(v) == 2) && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.verts.iter().all(|v| self.degree(v) + 1 == n)
    }

    /// Relabels vertices through an injective map.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Graph> {
        let mut g = Graph::new();
        for v in self.verts {
            g.add_vertex(f(v))?;
        }
        for e in self.edges() {
            g.add_edge(f(e.0), f(e.1))?;
        }
        Ok(g)
    }

    /// Relabels vertices to `0..n` preserving order; returns the graph and the old ids by new id.
    pub fn compacted(&self) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = self.verts.to_vec();
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            pos[v] = i;
        }
        let g = self.relabel(|v| pos[v]).expect("compaction stays in range");
        (g, old)
    }

    /// Applies one edit.
    pub fn edit(&self, action: EditAction) -> Result<(Graph, MergeMap)> {
        let mut g = self.clone();
        let mut merge = MergeMap::identity();
        match action {
            EditAction::DeleteEdge(e) => g.remove_edge(e.0, e.1)?,
            EditAction::DeleteVertex(v) => g.remove_vertex(v)?,
            EditAction::ContractEdge(e) => {
                if !self.has_edge(e.0, e.1) {
                    return Err(Error::MissingEdge(e.0, e.1));
                }
                g.contract_into(e.1, e.0);
                merge.merge(e.1, e.0);
            }
            EditAction::SubdivideEdge(e) => {
                g.remove_edge(e.0, e.1)?;
                let w = g.fresh_vertex()?;
                g.add_edge(e.0, w)?;
                g.add_edge(w, e.1)?;
            }
        }
        Ok((g, merge))
    }

    /// Identifies `from` with `into` (which must both exist), dropping loops and parallel edges.
    pub fn contract_into(&mut self, from: Vertex, into: Vertex) {
        debug_assert!(from != into);
        let nb = self.adj[from];
        for w in nb {
            self.adj[w].remove(from);
            if w != into {
                self.adj[w].insert(into);
                self.adj[into].insert(w);
            }
        }
        self.adj[from] = VSet::EMPTY;
        self.verts.remove(from);
    }

    /// Contracts every vertex set of `merge` onto its representative.
    pub fn contract_by(&self, merge: &MergeMap) -> Graph {
        let mut g = Graph::new();
        for v in self.verts {
            g.verts.insert(merge.resolve(v));
        }
        for e in self.edges() {
            let (a, b) = (merge.resolve(e.0), merge.resolve(e.1));
            if a != b {
                g.adj[a].insert(b);
                g.adj[b].insert(a);
            }
        }
        g
    }

    /// Makes `s` a clique.
    pub fn add_clique(&mut self, s: VSet) {
        for v in s {
            self.adj[v] |= s.without(v);
        }
    }

    /// Edge list text, one `u v` per line, isolated vertices on lines of their own.
    pub fn to_edgelist(&self) -> String {
        let mut out = String::new();
        for v in self.verts {
            if self.adj[v].is_empty() {
                out.push_str(&format!("{v}\n"));
            }
        }
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", e.0, e.1));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={:?}, E=[", self.verts)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.0, e.1)?;
        }
        write!(f, "])")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EditAction {
    DeleteEdge(Edge),
    ContractEdge(Edge),
    SubdivideEdge(Edge),
    DeleteVertex(Vertex),
}

/// Records which surviving vertex each original vertex was merged into.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MergeMap {
    to: Vec<Vertex>,
}

impl Default for MergeMap {
    fn default() -> Self {
        MergeMap::identity()
    }
}

impl MergeMap {
    pub fn identity() -> MergeMap {
        MergeMap { to: (0..MAX_VERTICES).collect() }
    }

    pub fn resolve(&self, v: Vertex) -> Vertex {
        let mut x = v;
        while self.to[x] != x {
            x = self.to[x];
        }
        x
    }

    /// Sends everything currently resolving to `from` onto the representative of `into`.
    pub fn merge(&mut self, from: Vertex, into: Vertex) {
        let (a, b) = (self.resolve(from), self.resolve(into));
        if a != b {
            self.to[a] = b;
        }
        self.flatten();
    }

    fn flatten(&mut self) {
        for v in 0..MAX_VERTICES {
            let r = self.resolve(v);
            self.to[v] = r;
        }
    }

    /// Vertices of `domain` mapped onto `w`.
    pub fn branch_set(&self, w: Vertex, domain: VSet) -> VSet {
        domain.iter().filter(|&v| self.resolve(v) == w).collect()
    }

    /// Apply `self`, then `later`.
    pub fn then(&self, later: &MergeMap) -> MergeMap {
        MergeMap { to: (0..MAX_VERTICES).map(|v| later.resolve(self.resolve(v))).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut g = Graph::with_vertices(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn contract_k4_gives_k3() {
        let (h, mm) = k(4).edit(EditAction::ContractEdge(Edge(0, 1))).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
        assert_eq!(mm.resolve(1), 0);
    }

    #[test]
    fn subdivide_makes_path() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let (h, _) = g.edit(EditAction::SubdivideEdge(Edge(0, 1))).unwrap();
        assert_eq!(h.degree(2), 2);
        assert!(!h.has_edge(0, 1));
        assert!(h.has_edge(0, 2) && h.has_edge(2, 1));
    }

    #[test]
    fn missing_targets_error() {
        let g = k(3);
        assert!(g.edit(EditAction::DeleteEdge(Edge(0, 5))).is_err());
        assert!(g.edit(EditAction::DeleteVertex(9)).is_err());
        assert_eq!(Graph::new().add_edge(2, 2), Err(Error::Loop(2)));
    }

    #[test]
    fn components_of_k33_minus_class() {
        let mut g = Graph::with_vertices(6).unwrap();
        for u in 0..3 {
            for v in 3..6 {
                g.add_edge(u, v).unwrap();
            }
        }
        let comps = g.components(VSet::range(3), &[]);
        assert_eq!(comps, vec![VSet::single(3), VSet::single(4), VSet::single(5)]);
        assert_eq!(k(4).components(VSet::single(2), &[]).len(), 1);
    }

    #[test]
    fn merge_map_is_idempotent() {
        let mut m = MergeMap::identity();
        m.merge(3, 2);
        m.merge(2, 1);
        assert_eq!(m.resolve(3), 1);
        assert_eq!(m.resolve(m.resolve(3)), 1);
        assert_eq!(m.branch_set(1, VSet::range(5)).to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn cycles_within() {
        let g = k(4);
        assert!(g.has_cycle_within(VSet::range(3)));
        assert!(!g.has_cycle_within(VSet::range(2)));
    }
}
