//! Tri-separations: flags, reduction, strengthening, external tri-connectivity, the crossing
//! dichotomy and the set `N` of totally-nested nontrivial tri-separations.

use crate::connectivity::{internally_disjoint_paths, is_k_connected};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::separation::{corner_diagram, enumerate_mixed_separations, CornerDiagram, MixedSeparation, Side};
use crate::vset::{VSet, Vertex};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Hash)]
pub struct TriFlags {
    pub is_tri: bool,
    pub is_trivial: bool,
    pub is_nontrivial: bool,
    pub is_strong: bool,
    pub is_half_connected: bool,
}

impl TriFlags {
    pub fn strong_nontrivial_tri(self) -> bool {
        self.is_tri && self.is_strong && self.is_nontrivial
    }
}

/// Every separator vertex has two neighbours in `G[A]` and two in `G[B]`, and the order is 3.
pub fn is_tri(g: &Graph, s: MixedSeparation) -> bool {
    s.order(g) == 3
        && s.inter().iter().all(|v| (g.nbrs(v) & s.a).len() >= 2 && (g.nbrs(v) & s.b).len() >= 2)
}

/// Both `G[A]` and `G[B]` contain a cycle.
pub fn is_nontrivial(g: &Graph, s: MixedSeparation) -> bool {
    g.has_cycle_within(s.a) && g.has_cycle_within(s.b)
}

/// Every separator vertex has degree at least four.
pub fn is_strong(g: &Graph, s: MixedSeparation) -> bool {
    s.inter().iter().all(|v| g.degree(v) >= 4)
}

pub fn is_half_connected(g: &Graph, s: MixedSeparation) -> bool {
    g.is_connected_set(s.strict_a()) || g.is_connected_set(s.strict_b())
}

/// Flags without the connectivity precondition check.
pub fn flags_of(g: &Graph, s: MixedSeparation) -> TriFlags {
    let nontrivial = is_nontrivial(g, s);
    TriFlags {
        is_tri: is_tri(g, s),
        is_trivial: !nontrivial,
        is_nontrivial: nontrivial,
        is_strong: is_strong(g, s),
        is_half_connected: is_half_connected(g, s),
    }
}

/// Flags of a mixed 3-separation of a 3-connected graph.
pub fn tri_flags(g: &Graph, s: MixedSeparation) -> Result<TriFlags> {
    if !is_k_connected(g, 3) {
        return Err(Error::NotConnected(3));
    }
    s.validate(g)?;
    if s.order(g) != 3 {
        return Err(Error::InvalidSeparation(format!("order {} is not 3", s.order(g))));
    }
    Ok(flags_of(g, s))
}

/// `(A,B)` is `({v}, V - v)` or `(V - v, {v})` for a vertex `v` of degree three.
pub fn is_atomic_cut(g: &Graph, s: MixedSeparation) -> bool {
    let one_side = |x: VSet, y: VSet| x.len() == 1 && (x & y).is_empty() && g.degree(x.min().unwrap()) == 3;
    one_side(s.a, s.b) || one_side(s.b, s.a)
}

/// Removes every separator vertex from the side where it has fewer than two neighbours.
pub fn reduction(g: &Graph, s: MixedSeparation) -> Result<MixedSeparation> {
    let (mut a, mut b) = (s.a, s.b);
    for v in s.inter() {
        let na = (g.nbrs(v) & s.a).len();
        let nb = (g.nbrs(v) & s.b).len();
        match (na < 2, nb < 2) {
            (true, true) => {
                return Err(Error::Precondition(format!("vertex {v} has fewer than two neighbours on both sides")))
            }
            (true, false) => a.remove(v),
            (false, true) => b.remove(v),
            (false, false) => {}
        }
    }
    Ok(MixedSeparation::new(a, b))
}

/// Strengthening: degree-3 separator vertices with a neighbour in the separator leave side `A`,
/// then the result is reduced. With `keep_edge = uv`, both `u` and `v` end up in `B'`.
pub fn strengthening(g: &Graph, s: MixedSeparation, keep_edge: Option<Edge>) -> Result<MixedSeparation> {
    let inter = s.inter();
    if let Some(e) = keep_edge {
        if !e.ends().is_subset(inter) || !g.has_edge(e.0, e.1) {
            return Err(Error::Precondition(format!("keep edge {}-{} is not an edge inside the separator", e.0, e.1)));
        }
    }
    let mut a = s.a;
    for v in inter {
        if g.degree(v) == 3 && g.nbrs(v).intersects(inter) {
            a.remove(v);
        }
    }
    let out = reduction(g, MixedSeparation::new(a, s.b))?;
    if let Some(e) = keep_edge {
        debug_assert!(e.ends().is_subset(out.b));
    }
    Ok(out)
}

/// Which criterion certified external tri-connectivity around a separator vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Criterion {
    /// Two other vertices: adjacent, or three internally disjoint paths avoiding `x_i`.
    Colon,
    /// One vertex and one edge with an `x_i`-free end joined by two paths.
    DotMinus,
    /// Two edges with `x_i`-free ends joined by two paths.
    Equals,
    Failed,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AroundReport {
    pub vertex: Vertex,
    pub criterion: Criterion,
    pub witness: Vec<Vec<Vertex>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExternalTriConnReport {
    pub around: Vec<AroundReport>,
    pub externally_tri_connected: bool,
}

/// `w` is `v`-free if it is not adjacent to `v` or has degree at most three.
pub fn is_free(g: &Graph, w: Vertex, v: Vertex) -> bool {
    !g.has_edge(w, v) || g.degree(w) <= 3
}

/// Evaluates the three path criteria around every separator vertex.
pub fn externally_tri_connected(g: &Graph, s: MixedSeparation) -> ExternalTriConnReport {
    let sep = s.separator(g);
    let verts = sep.vertices.to_vec();
    let mut around = Vec::new();
    for &x in &verts {
        let others: Vec<Vertex> = verts.iter().copied().filter(|&y| y != x).collect();
        let xi = VSet::single(x);
        let (criterion, witness) = match (others.len(), sep.edges.len()) {
            (2, 0) => {
                let (p, q) = (others[0], others[1]);
                if g.has_edge(p, q) {
                    (Criterion::Colon, vec![vec![p, q]])
                } else {
                    let r = internally_disjoint_paths(g, p, q, xi, &[]);
                    if r.count >= 3 {
                        (Criterion::Colon, r.paths)
                    } else {
                        (Criterion::Failed, vec![])
                    }
                }
            }
            (1, 1) => {
                let y0 = others[0];
                let e = sep.edges[0];
                let mut res = (Criterion::Failed, vec![]);
                for y in [e.0, e.1] {
                    if y == y0 || y == x || !is_free(g, y, x) {
                        continue;
                    }
                    let r = internally_disjoint_paths(g, y0, y, xi, &[e]);
                    if r.count >= 2 {
                        res = (Criterion::DotMinus, r.paths);
                        break;
                    }
                }
                res
            }
            (0, 2) => {
                let (e, f) = (sep.edges[0], sep.edges[1]);
                let mut res = (Criterion::Failed, vec![]);
                'outer: for y1 in [e.0, e.1] {
                    for y2 in [f.0, f.1] {
                        if y1 == y2 || y1 == x || y2 == x || !is_free(g, y1, x) || !is_free(g, y2, x) {
                            continue;
                        }
                        let r = internally_disjoint_paths(g, y1, y2, xi, &[e, f]);
                        if r.count >= 2 {
                            res = (Criterion::Equals, r.paths);
                            break 'outer;
                        }
                    }
                }
                res
            }
            _ => (Criterion::Failed, vec![]),
        };
        around.push(AroundReport { vertex: x, criterion, witness });
    }
    let ok = around.iter().all(|r| r.criterion != Criterion::Failed);
    ExternalTriConnReport { around, externally_tri_connected: ok }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum CrossingCase {
    /// All four links have size one and the centre is a single vertex.
    LinksOneCentreOne,
    /// All links are empty and the centre consists of three vertices.
    LinksEmptyCentreThree,
    /// `G = K_4`.
    K4Exception,
    /// Neither shape; would contradict the dichotomy.
    Neither,
}

/// Shape of the corner diagram of two crossing tri-separations.
pub fn crossing_case(g: &Graph, s1: MixedSeparation, s2: MixedSeparation) -> Result<(CrossingCase, CornerDiagram)> {
    if s1.nested_with(s2) {
        return Err(Error::Precondition("the separations are nested".into()));
    }
    let d = corner_diagram(g, s1, s2);
    let is_k4 = g.n() == 4 && g.is_complete();
    let links: Vec<usize> = Side::ALL.iter().map(|&x| d.link(x).size()).collect();
    let case = if is_k4 {
        CrossingCase::K4Exception
    } else if links.iter().all(|&l| l == 1) && d.centre_vertices.len() == 1 && d.diagonal_edges.is_empty() {
        CrossingCase::LinksOneCentreOne
    } else if links.iter().all(|&l| l == 0) && d.centre_vertices.len() == 3 && d.diagonal_edges.is_empty() {
        CrossingCase::LinksEmptyCentreThree
    } else {
        CrossingCase::Neither
    };
    Ok((case, d))
}

/// All tri-separations of a 3-connected graph with their flags, and the totally-nested
/// nontrivial ones.
#[derive(Clone, Debug)]
pub struct TriAnalysis {
    pub all_tri: Vec<MixedSeparation>,
    pub flags: Vec<TriFlags>,
    /// Indices into `all_tri` of the totally-nested nontrivial tri-separations.
    pub n_indices: Vec<usize>,
}

impl TriAnalysis {
    pub fn n(&self) -> Vec<MixedSeparation> {
        self.n_indices.iter().map(|&i| self.all_tri[i]).collect()
    }

    pub fn strong_nontrivial(&self) -> Vec<MixedSeparation> {
        self.all_tri.iter().zip(&self.flags).filter(|(_, f)| f.is_strong && f.is_nontrivial).map(|(s, _)| *s).collect()
    }

    pub fn nontrivial(&self) -> Vec<MixedSeparation> {
        self.all_tri.iter().zip(&self.flags).filter(|(_, f)| f.is_nontrivial).map(|(s, _)| *s).collect()
    }

    pub fn is_totally_nested(&self, s: MixedSeparation) -> bool {
        self.all_tri.iter().all(|&t| s.nested_with(t))
    }
}

/// Enumerates every tri-separation and decides total nestedness against the full list.
pub fn compute_total_nested(g: &Graph) -> Result<TriAnalysis> {
    if !is_k_connected(g, 3) {
        return Err(Error::NotConnected(3));
    }
    analyse_unchecked(g)
}

/// [`compute_total_nested`] without the 3-connectivity check.
pub fn analyse_unchecked(g: &Graph) -> Result<TriAnalysis> {
    let all_tri: Vec<MixedSeparation> =
        enumerate_mixed_separations(g, 3)?.into_iter().filter(|&s| is_tri(g, s)).collect();
    let flags: Vec<TriFlags> = all_tri.iter().map(|&s| flags_of(g, s)).collect();
    let n_indices = (0..all_tri.len())
        .filter(|&i| flags[i].is_nontrivial && all_tri.iter().all(|&t| all_tri[i].nested_with(t)))
        .collect();
    Ok(TriAnalysis { all_tri, flags, n_indices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, wheel};

    #[test]
    fn wheel_has_empty_n() {
        for rim in 4..=6 {
            let t = compute_total_nested(&wheel(rim).unwrap()).unwrap();
            assert!(t.n_indices.is_empty());
            assert!(!t.all_tri.is_empty());
        }
    }

    #[test]
    fn k4_crossing_pair_has_jumping_edges() {
        let g = complete(4).unwrap();
        let t = compute_total_nested(&g).unwrap();
        let nt = t.nontrivial();
        let mut seen = false;
        for &x in &nt {
            for &y in &nt {
                if !x.nested_with(y) {
                    let (case, d) = crossing_case(&g, x, y).unwrap();
                    assert_eq!(case, CrossingCase::K4Exception);
                    if d.jumping_edges.len() == 2 {
                        seen = true;
                    }
                }
            }
        }
        assert!(seen);
    }

    #[test]
    fn reduction_of_tri_is_identity() {
        let g = wheel(5).unwrap();
        let t = compute_total_nested(&g).unwrap();
        for &s in &t.all_tri {
            assert_eq!(reduction(&g, s).unwrap(), s);
        }
    }
}
