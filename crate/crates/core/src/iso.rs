//! Canonical labelling and automorphism groups by individualisation-refinement with
//! automorphism pruning.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::Vertex;

/// Adjacency matrix of the canonically relabelled graph, one bitmask row per position.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl CanonicalCode {
    pub fn to_hex(&self) -> String {
        let mut s = format!("{:02x}", self.n);
        for r in &self.rows {
            s.push_str(&format!("{r:016x}"));
        }
        s
    }
}

/// Result of the symmetry search.
#[derive(Clone, Debug)]
pub struct Symmetry {
    pub code: CanonicalCode,
    /// `position[v]` is the canonical position of vertex `v` (indexed by original id).
    pub position: Vec<Option<usize>>,
    /// Generators as maps on original ids (`None` for ids not in the graph).
    pub generators: Vec<Vec<Option<Vertex>>>,
    pub order: u128,
    /// Orbits of the full group, sorted.
    pub orbits: Vec<Vec<Vertex>>,
}

impl Symmetry {
    pub fn is_vertex_transitive(&self) -> bool {
        self.orbits.len() <= 1
    }
}

/// Default bound on the number of vertices for [`automorphism_group`].
pub const DEFAULT_AUT_BOUND: usize = 12;

/// Automorphism group generators, group order and canonical code; refuses graphs above `bound` vertices.
pub fn automorphism_group(g: &Graph, bound: usize) -> Result<Symmetry> {
    if g.n() > bound {
        return Err(Error::BoundExceeded(g.n(), bound));
    }
    Ok(symmetry(g))
}

/// Canonical code only; no vertex bound.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    symmetry(g).code
}

/// Full symmetry search without a size bound.
pub fn symmetry(g: &Graph) -> Symmetry {
    let (h, old) = g.compacted();
    let n = h.n();
    let adj: Vec<u64> = (0..n).map(|v| h.nbrs(v).0).collect();
    let mut s = Search { n, adj, first: None, best: None, gens: Vec::new(), first_path: Vec::new(), level_cells: Vec::new() };
    let root = if n == 0 { Vec::new() } else { vec![mask(n)] };
    let mut cells = root;
    refine(&s.adj, &mut cells);
    let mut path = Vec::new();
    s.search(cells, &mut path);

    let (code, best_order) = s.best.clone().unwrap_or((CanonicalCode { n: 0, rows: vec![] }, vec![]));
    let mut position = vec![None; 64];
    for (p, &v) in best_order.iter().enumerate() {
        position[old[v]] = Some(p);
    }
    let mut order: u128 = 1;
    for (lvl, &(cell, v)) in s.level_cells.iter().enumerate() {
        let prefix = &s.first_path[..lvl];
        let uf = orbits_fixing(&s.gens, n, prefix);
        let rep = uf.find(v);
        let size = bits(cell).filter(|&w| uf.find(w) == rep).count() as u128;
        order = order.saturating_mul(size);
    }
    let uf = orbits_fixing(&s.gens, n, &[]);
    let mut orbit_map: std::collections::BTreeMap<usize, Vec<Vertex>> = Default::default();
    for v in 0..n {
        orbit_map.entry(uf.find(v)).or_default().push(old[v]);
    }
    let mut orbits: Vec<Vec<Vertex>> = orbit_map.into_values().collect();
    orbits.sort();
    let generators = s
        .gens
        .iter()
        .map(|p| {
            let mut m = vec![None; 64];
            for v in 0..n {
                m[old[v]] = Some(old[p[v]]);
            }
            m
        })
        .collect();
    Symmetry { code, position, generators, order, orbits }
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let v = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(v)
        }
    })
}

/// Equitable refinement; deterministic in the cell structure only.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let mut s = 0;
    while s < cells.len() {
        let splitter = cells[s];
        let mut next = Vec::with_capacity(cells.len());
        let mut split_any = false;
        for &c in cells.iter() {
            if c.count_ones() == 1 {
                next.push(c);
                continue;
            }
            let mut groups: Vec<(u32, u64)> = Vec::new();
            for v in bits(c) {
                let k = (adj[v] & splitter).count_ones();
                match groups.iter_mut().find(|(kk, _)| *kk == k) {
                    Some((_, m)) => *m |= 1u64 << v,
                    None => groups.push((k, 1u64 << v)),
                }
            }
            if groups.len() > 1 {
                split_any = true;
            }
            groups.sort_by_key(|&(k, _)| k);
            next.extend(groups.into_iter().map(|(_, m)| m));
        }
        *cells = next;
        // After a split, earlier cells may split further; restart.
        s = if split_any { 0 } else { s + 1 };
    }
}

struct Uf {
    p: Vec<usize>,
}

impl Uf {
    fn new(n: usize) -> Uf {
        Uf { p: (0..n).collect() }
    }
    fn find(&self, mut x: usize) -> usize {
        while self.p[x] != x {
            x = self.p[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.p[hi] = lo;
        }
    }
}

fn orbits_fixing(gens: &[Vec<usize>], n: usize, prefix: &[usize]) -> Uf {
    let mut uf = Uf::new(n);
    for p in gens {
        if prefix.iter().all(|&x| p[x] == x) {
            for v in 0..n {
                uf.union(v, p[v]);
            }
        }
    }
    uf
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    first: Option<(CanonicalCode, Vec<usize>)>,
    best: Option<(CanonicalCode, Vec<usize>)>,
    gens: Vec<Vec<usize>>,
    first_path: Vec<usize>,
    /// Target cell and chosen vertex at each level of the first path.
    level_cells: Vec<(u64, usize)>,
}

impl Search {
    fn leaf(&self, cells: &[u64]) -> (CanonicalCode, Vec<usize>) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| bits(self.adj[v]).fold(0u64, |acc, w| acc | 1u64 << pos[w]))
            .collect();
        (CanonicalCode { n: self.n, rows }, order)
    }

    fn automorphism(&self, from: &[usize], to: &[usize]) -> Vec<usize> {
        let mut p = vec![0; self.n];
        for (i, &v) in from.iter().enumerate() {
            p[v] = to[i];
        }
        p
    }

    /// Returns `Some(level)` to unwind to the node at depth `level`.
    fn search(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let Some(ti) = cells.iter().position(|c| c.count_ones() > 1) else {
            let (code, order) = self.leaf(&cells);
            match &self.first {
                None => {
                    self.first = Some((code.clone(), order.clone()));
                    self.first_path = path.clone();
                    self.best = Some((code, order));
                    return None;
                }
                Some((fc, fo)) => {
                    if *fc == code {
                        let g = self.automorphism(fo, &order);
                        self.gens.push(g);
                        let common = path.iter().zip(&self.first_path).take_while(|(a, b)| a == b).count();
                        return Some(common);
                    }
                }
            }
            let (bc, bo) = self.best.as_ref().unwrap();
            if code == *bc {
                let g = self.automorphism(bo, &order);
                self.gens.push(g);
            } else if code < *bc {
                self.best = Some((code, order));
            }
            return None;
        };
        let target = cells[ti];
        let depth = path.len();
        let on_first_path = self.first.is_none();
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(target) {
            if !explored.is_empty() {
                let uf = orbits_fixing(&self.gens, self.n, path);
                let rv = uf.find(v);
                if explored.iter().any(|&w| uf.find(w) == rv) {
                    continue;
                }
            }
            explored.push(v);
            if on_first_path && explored.len() == 1 {
                self.level_cells.push((target, v));
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            refine(&self.adj, &mut child);
            path.push(v);
            let r = self.search(child, path);
            path.pop();
            if let Some(level) = r {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut g = Graph::with_vertices(n).unwrap();
        for i in 0..n {
            g.add_edge(i, (i + 1) % n).unwrap();
        }
        g
    }

    #[test]
    fn c5_group() {
        let s = automorphism_group(&cycle(5), 12).unwrap();
        assert_eq!(s.order, 10);
        assert!(s.is_vertex_transitive());
    }

    #[test]
    fn complete_group_order() {
        let mut g = Graph::with_vertices(7).unwrap();
        for u in 0..7 {
            for v in u + 1..7 {
                g.add_edge(u, v).unwrap();
            }
        }
        assert_eq!(symmetry(&g).order, 5040);
    }

    #[test]
    fn path_is_not_transitive() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let s = symmetry(&g);
        assert_eq!(s.order, 2);
        assert!(!s.is_vertex_transitive());
    }

    #[test]
    fn bound_is_enforced() {
        assert!(automorphism_group(&cycle(13), 12).is_err());
    }
}
