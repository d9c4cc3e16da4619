//! Recognisers for the torso shapes and the 4-connectivity grades.

use crate::connectivity::is_k_connected;
use crate::graph::{Edge, Graph};
use crate::separation::MixedSeparation;
use crate::tri::TriAnalysis;
use crate::vset::{VSet, Vertex};

/// Vertex order around the cycle induced by `s`, starting at its smallest vertex.
pub fn cycle_order(g: &Graph, s: VSet) -> Option<Vec<Vertex>> {
    if s.len() < 3 || s.iter().any(|v| (g.nbrs(v) & s).len() != 2) || !g.is_connected_set(s) {
        return None;
    }
    let start = s.min()?;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = (g.nbrs(start) & s).min()?;
    while cur != start {
        order.push(cur);
        let next = (g.nbrs(cur) & s).without(prev).min()?;
        prev = cur;
        cur = next;
    }
    Some(order)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WheelWitness {
    pub hub: Vertex,
    pub rim: Vec<Vertex>,
}

/// A vertex adjacent to all others whose deletion leaves a cycle. The smallest such hub is reported.
pub fn wheel_witness(g: &Graph) -> Option<WheelWitness> {
    if g.n() < 4 {
        return None;
    }
    g.vertices().iter().find_map(|v| {
        let rest = g.vertices().without(v);
        if g.nbrs(v) != rest {
            return None;
        }
        cycle_order(g, rest).map(|rim| WheelWitness { hub: v, rim })
    })
}

pub fn is_wheel(g: &Graph) -> bool {
    wheel_witness(g).is_some()
}

/// `K_{3,m}` as (class of size three, m). For `K_{3,3}` the class containing the smallest vertex.
pub fn k3m_witness(g: &Graph) -> Option<(VSet, usize)> {
    let n = g.n();
    if n < 4 {
        return None;
    }
    let v0 = g.vertices().min()?;
    // One class is the neighbourhood of v0, the other its complement.
    let other = g.nbrs(v0);
    let own = g.vertices() - other;
    let complete_bipartite = |x: VSet, y: VSet| x.iter().all(|v| g.nbrs(v) == y) && y.iter().all(|v| g.nbrs(v) == x);
    if !complete_bipartite(own, other) {
        return None;
    }
    if own.len() == 3 {
        Some((own, other.len()))
    } else if other.len() == 3 {
        Some((other, own.len()))
    } else {
        None
    }
}

/// A triangle `T` such that every other vertex is adjacent to exactly the three vertices of `T`.
/// Returns `(T, m)`; `K_3` gives `m = 0` and `K_4` gives `m = 1`.
pub fn thickened_k3m_witness(g: &Graph) -> Option<(VSet, usize)> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let verts = g.vertices();
    if n == 3 {
        return g.is_complete().then_some((verts, 0));
    }
    // Vertices outside T have degree 3; vertices of T have degree n - 1.
    let t: VSet = verts.iter().filter(|&v| g.degree(v) == n - 1).collect();
    let t = if n == 4 { t.iter().take(3).collect() } else { t };
    if t.len() != 3 {
        return None;
    }
    let ok = verts.iter().all(|v| if t.contains(v) { g.nbrs(v) == verts.without(v) } else { g.nbrs(v) == t });
    ok.then_some((t, n - 3))
}

/// A concrete generalised wheel: centre, rim in cycle order, spoke ends, and Y-graph centres with
/// the rim edge they sit on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralisedWheel {
    pub centre: Vertex,
    pub rim: Vec<Vertex>,
    pub spokes: VSet,
    pub ys: Vec<(Vertex, Edge)>,
}

/// Recognises a concrete generalised wheel: a centre `v`, a set `Y` of degree-3 vertices each
/// joined to `v` and to the ends of a distinct rim edge, `G - v - Y` a cycle, minimum degree 3.
pub fn generalised_wheel(g: &Graph) -> Option<GeneralisedWheel> {
    if g.n() < 4 || g.vertices().iter().any(|v| g.degree(v) < 3) {
        return None;
    }
    for v in g.vertices() {
        let candidates: Vec<Vertex> = g
            .nbrs(v)
            .iter()
            .filter(|&y| {
                let rest = g.nbrs(y).without(v);
                g.degree(y) == 3 && rest.len() == 2 && g.has_edge(rest.min().unwrap(), rest.max().unwrap())
            })
            .collect();
        if let Some(w) = try_ys(g, v, candidates.iter().collect()) {
            return Some(w);
        }
        // A candidate can stay on the rim only when the rim is a triangle, so graphs are small.
        if g.n() <= 7 && candidates.len() <= 12 {
            for mask in 0u32..(1 << candidates.len()) {
                let ys: VSet = candidates.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &y)| y).collect();
                if let Some(w) = try_ys(g, v, ys) {
                    return Some(w);
                }
            }
        }
    }
    None
}

fn try_ys(g: &Graph, v: Vertex, ys: VSet) -> Option<GeneralisedWheel> {
    let rim_set = g.vertices().without(v) - ys;
    let rim = cycle_order(g, rim_set)?;
    let mut used = Vec::new();
    for y in ys {
        let rest = g.nbrs(y).without(v);
        if !g.has_edge(v, y) || rest.len() != 2 || !rest.is_subset(rim_set) {
            return None;
        }
        let e = Edge::new(rest.min().unwrap(), rest.max().unwrap());
        if !g.has_edge(e.0, e.1) || used.iter().any(|&(_, f)| f == e) {
            return None;
        }
        used.push((y, e));
    }
    Some(GeneralisedWheel { centre: v, rim, spokes: g.nbrs(v) & rim_set, ys: used })
}

/// Separator and components of `G - X` for every 3-vertex separator `X`.
pub fn vertex_three_separators(g: &Graph) -> Vec<(VSet, Vec<VSet>)> {
    let verts = g.vertices().to_vec();
    let mut out = Vec::new();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            for k in j + 1..verts.len() {
                let x: VSet = [verts[i], verts[j], verts[k]].iter().collect();
                let comps = g.components_within(g.vertices() - x);
                if comps.len() >= 2 {
                    out.push((x, comps));
                }
            }
        }
    }
    out
}

/// Every split of the components into two nonempty groups has a group of at most one vertex.
fn every_split_has_singleton(comps: &[VSet]) -> bool {
    match comps.len() {
        0 | 1 => true,
        2 => comps.iter().any(|c| c.len() == 1),
        3 => comps.iter().all(|c| c.len() == 1),
        // Four components split two against two, both groups with two vertices at least.
        _ => false,
    }
}

/// 3-connected, more than four vertices, every 3-separation has a side of at most four vertices.
pub fn is_quasi_4_connected(g: &Graph) -> bool {
    g.n() > 4
        && is_k_connected(g, 3)
        && vertex_three_separators(g).iter().all(|(_, comps)| every_split_has_singleton(comps))
}

pub fn is_k4(g: &Graph) -> bool {
    g.n() == 4 && g.is_complete()
}

pub fn is_k33(g: &Graph) -> bool {
    matches!(k3m_witness(g), Some((_, 3)))
}

/// 3-connected, every 3-separation has a side inducing a claw, and not `K_4` or `K_{3,3}`.
pub fn is_internally_4_connected(g: &Graph) -> bool {
    if !is_k_connected(g, 3) || is_k4(g) || is_k33(g) {
        return false;
    }
    vertex_three_separators(g)
        .iter()
        .all(|(x, comps)| g.count_edges_within(*x) == 0 && every_split_has_singleton(comps))
}

/// 3-connected, every strong nontrivial tri-separation is a 3-edge-cut with a triangle side, and
/// not `K_4`. `K_{3,3}` counts as essentially 4-connected: its strong tri-separations are all trivial.
pub fn is_essentially_4_connected(g: &Graph, t: &TriAnalysis) -> bool {
    if !is_k_connected(g, 3) || is_k4(g) {
        return false;
    }
    let triangle = |s: VSet| s.len() == 3 && g.count_edges_within(s) == 3;
    t.strong_nontrivial().iter().all(|s| s.inter().is_empty() && (triangle(s.a) || triangle(s.b)))
}

/// All 3-separations with vertex-only separators, by exhausting component bipartitions.
pub fn vertex_three_separations(g: &Graph) -> Vec<MixedSeparation> {
    let mut out = Vec::new();
    for (x, comps) in vertex_three_separators(g) {
        let k = comps.len();
        assert!(k < 32, "too many components to list separations");
        for mask in 1u32..(1 << k) - 1 {
            let a = comps.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(x, |acc, (_, &c)| acc | c);
            let b = (g.vertices() - a) | x;
            out.push(MixedSeparation::new(a, b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, genwheel, k3m, thickened_k3m, wheel};

    #[test]
    fn wheels_and_k3m() {
        let w = wheel(5).unwrap();
        let ww = wheel_witness(&w).unwrap();
        assert_eq!(ww.hub, 0);
        assert_eq!(ww.rim.len(), 5);
        assert_eq!(k3m_witness(&k3m(4).unwrap()).unwrap().1, 4);
        assert_eq!(thickened_k3m_witness(&thickened_k3m(3).unwrap()).unwrap().1, 3);
        assert_eq!(thickened_k3m_witness(&complete(4).unwrap()).unwrap().1, 1);
        assert!(k3m_witness(&w).is_none());
    }

    #[test]
    fn generalised_wheel_with_ys() {
        let g = genwheel(5, 0b11001, 0b00110).unwrap();
        let w = generalised_wheel(&g).unwrap();
        assert_eq!(w.rim.len(), 5);
        assert_eq!(w.ys.len(), 2);
        assert!(generalised_wheel(&wheel(6).unwrap()).is_some());
        assert!(generalised_wheel(&k3m(3).unwrap()).is_none());
    }

    #[test]
    fn grades_of_small_graphs() {
        assert!(is_internally_4_connected(&complete(5).unwrap()));
        assert!(!is_internally_4_connected(&k3m(3).unwrap()));
        assert!(!is_quasi_4_connected(&complete(4).unwrap()));
        assert!(!is_quasi_4_connected(&wheel(6).unwrap()));
    }
}
