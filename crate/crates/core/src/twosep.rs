//! 2-separations of 2-connected graphs: crossing shapes, external 2-connectivity, the
//! tree-decomposition induced by the totally-nested ones, and apex-decompositions built from
//! crossing tri-separations together with their tri-stars.

use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::separation::{corner_diagram, enumerate_mixed_separations, sort_separations, MixedSeparation, Side};
use crate::star::{splitting_stars, torso_of, NestedFamily, OrientedStar};
use crate::vset::{VSet, Vertex};

/// All 2-separations (vertex separators of size two) of `g`.
pub fn two_separations(g: &Graph) -> Result<Vec<MixedSeparation>> {
    let mut out: Vec<MixedSeparation> = enumerate_mixed_separations(g, 2)?
        .into_iter()
        .filter(|s| s.inter().len() == 2 && s.separator_edges(g).is_empty())
        .collect();
    sort_separations(g, &mut out);
    Ok(out)
}

/// Mixed 2-separations of order exactly two.
pub fn mixed_two_separations(g: &Graph) -> Result<Vec<MixedSeparation>> {
    Ok(enumerate_mixed_separations(g, 2)?.into_iter().filter(|s| s.order(g) == 2).collect())
}

/// Nested with every 2-separation of `all`.
pub fn is_totally_nested_among(s: MixedSeparation, all: &[MixedSeparation]) -> bool {
    all.iter().all(|&t| s.nested_with(t))
}

/// One side induces a 2-connected graph and one strict side induces a connected graph.
pub fn externally_2_connected(g: &Graph, s: MixedSeparation) -> bool {
    (is_k_connected(&g.induced(s.a), 2) || is_k_connected(&g.induced(s.b), 2))
        && (g.is_connected_set(s.strict_a()) || g.is_connected_set(s.strict_b()))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum TwoSepCrossing {
    /// Each separates the two separator vertices of the other.
    LikeInACycle,
    /// Same separator and four components, one in each corner.
    FourFlip,
}

fn separates(s: MixedSeparation, x: VSet) -> bool {
    let (Some(p), Some(q)) = (x.min(), x.max()) else { return false };
    (s.strict_a().contains(p) && s.strict_b().contains(q)) || (s.strict_a().contains(q) && s.strict_b().contains(p))
}

/// How two crossing 2-separations cross.
pub fn classify_2sep_crossing(g: &Graph, s1: MixedSeparation, s2: MixedSeparation) -> Result<TwoSepCrossing> {
    if s1.nested_with(s2) {
        return Err(Error::Precondition("the 2-separations are nested".into()));
    }
    let cycle_like = separates(s1, s2.inter()) && separates(s2, s1.inter());
    let four_flip = s1.inter() == s2.inter() && {
        let comps = g.components_within(g.vertices() - s1.inter());
        let quadrants = [
            s1.strict_a() & s2.strict_a(),
            s1.strict_a() & s2.strict_b(),
            s1.strict_b() & s2.strict_a(),
            s1.strict_b() & s2.strict_b(),
        ];
        quadrants.iter().all(|&q| comps.iter().any(|c| c.is_subset(q)))
    };
    match (cycle_like, four_flip) {
        (true, false) => Ok(TwoSepCrossing::LikeInACycle),
        (false, true) => Ok(TwoSepCrossing::FourFlip),
        _ => Err(Error::Classification(format!(
            "crossing 2-separations {s1:?} and {s2:?} match {} shapes",
            if cycle_like { "both" } else { "neither of the" }
        ))),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum TwoSepTorso {
    ThreeConnected,
    Cycle,
    K2,
}

impl TwoSepTorso {
    pub fn as_str(self) -> &'static str {
        match self {
            TwoSepTorso::ThreeConnected => "3-connected",
            TwoSepTorso::Cycle => "cycle",
            TwoSepTorso::K2 => "K2",
        }
    }
}

/// The tree-decomposition whose nodes are the splitting stars of the totally-nested 2-separations.
#[derive(Clone, Debug)]
pub struct TreeDecomposition {
    pub nodes: Vec<OrientedStar>,
    pub bags: Vec<VSet>,
    /// `(t1, t2, (A,B))` with `(A,B)` in `t1` and `(B,A)` in `t2`.
    pub edges: Vec<(usize, usize, MixedSeparation)>,
    pub torsos: Vec<Graph>,
    pub torso_kinds: Vec<TwoSepTorso>,
    /// The totally-nested 2-separations.
    pub n: Vec<MixedSeparation>,
}

impl TreeDecomposition {
    pub fn adhesion(&self, e: usize) -> VSet {
        let (t1, t2, _) = self.edges[e];
        self.bags[t1] & self.bags[t2]
    }

    fn neighbours(&self, t: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b, _)| {
            if a == t {
                Some(b)
            } else if b == t {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Nodes reachable from `start` without using tree edge `skip`.
    fn side(&self, start: usize, skip: usize) -> Vec<usize> {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(t) = stack.pop() {
            for (i, &(a, b, _)) in self.edges.iter().enumerate() {
                if i == skip {
                    continue;
                }
                let other = if a == t {
                    b
                } else if b == t {
                    a
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        (0..self.nodes.len()).filter(|&t| seen[t]).collect()
    }

    /// Checks tree shape, (T1), (T2), and that the induced separations are exactly `n`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let k = self.nodes.len();
        if k == 0 || self.edges.len() + 1 != k || self.side(0, usize::MAX).len() != k {
            return Err("decomposition graph is not a tree".into());
        }
        let mut covered = Graph::new();
        for &b in &self.bags {
            for v in b {
                covered.add_vertex(v).map_err(|e| e.to_string())?;
            }
            for e in g.edges_within(b) {
                covered.add_edge(e.0, e.1).map_err(|e| e.to_string())?;
            }
        }
        if covered != *g {
            return Err("bags do not cover the graph".into());
        }
        for v in g.vertices() {
            let holding: Vec<usize> = (0..k).filter(|&t| self.bags[t].contains(v)).collect();
            let connected = {
                let mut seen = vec![holding[0]];
                let mut i = 0;
                while i < seen.len() {
                    let t = seen[i];
                    for u in self.neighbours(t) {
                        if holding.contains(&u) && !seen.contains(&u) {
                            seen.push(u);
                        }
                    }
                    i += 1;
                }
                seen.len() == holding.len()
            };
            if !connected {
                return Err(format!("bags containing vertex {v} are not connected in the tree"));
            }
        }
        let mut induced = Vec::new();
        for (i, &(t1, t2, s)) in self.edges.iter().enumerate() {
            let side_of = |t: usize| self.side(t, i).iter().fold(VSet::EMPTY, |acc, &u| acc | self.bags[u]);
            let (x1, x2) = (side_of(t1), side_of(t2));
            if (x2, x1) != (s.a, s.b) {
                return Err(format!("tree edge {t1}-{t2} induces ({x1:?},{x2:?}), expected {s:?}"));
            }
            induced.push(s);
            induced.push(s.flip());
        }
        let mut expected = self.n.clone();
        expected.sort_by_key(|s| (s.a, s.b));
        induced.sort_by_key(|s| (s.a, s.b));
        if induced != expected {
            return Err("induced separations differ from the totally-nested 2-separations".into());
        }
        Ok(())
    }
}

/// Builds the tree-decomposition of a 2-connected graph and classifies its torsos.
pub fn two_sep_decomposition(g: &Graph) -> Result<TreeDecomposition> {
    if !is_k_connected(g, 2) {
        return Err(Error::NotConnected(2));
    }
    let all = two_separations(g)?;
    let n: Vec<MixedSeparation> = all.iter().copied().filter(|&s| is_totally_nested_among(s, &all)).collect();
    let family = NestedFamily::new(n.clone())?;
    let nodes = splitting_stars(&family);
    let bags: Vec<VSet> = nodes.iter().map(|t| t.bag(g)).collect();
    let mut edges = Vec::new();
    for (i, t1) in nodes.iter().enumerate() {
        for &s in t1.members() {
            if let Some(j) = nodes.iter().position(|t2| t2.contains(s.flip())) {
                if i < j {
                    edges.push((i, j, s));
                }
            }
        }
    }
    let mut torsos = Vec::new();
    let mut torso_kinds = Vec::new();
    for t in &nodes {
        let (_, x) = torso_of(g, t.members());
        let kind = if x.n() == 2 && x.m() == 1 {
            TwoSepTorso::K2
        } else if x.n() >= 3 && x.is_cycle() {
            TwoSepTorso::Cycle
        } else if is_k_connected(&x, 3) {
            TwoSepTorso::ThreeConnected
        } else {
            return Err(Error::Classification(format!("torso is not 3-connected, a cycle or K2: {x:?}")));
        };
        torsos.push(x);
        torso_kinds.push(kind);
    }
    Ok(TreeDecomposition { nodes, bags, edges, torsos, torso_kinds, n })
}

/// An element of a cycle: a vertex or an edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum RimElement {
    Vertex(Vertex),
    Edge(Edge),
}

/// Position of an element around the cycle `o`: vertex `i` at `2i`, edge `o[i]o[i+1]` at `2i+1`.
fn rim_position(o: &[Vertex], x: RimElement) -> Option<usize> {
    let k = o.len();
    match x {
        RimElement::Vertex(v) => o.iter().position(|&w| w == v).map(|i| 2 * i),
        RimElement::Edge(e) => (0..k).find(|&i| Edge::new(o[i], o[(i + 1) % k]) == e).map(|i| 2 * i + 1),
    }
}

/// Vertices and edges of a separator as cycle elements.
pub fn separator_elements(g: &Graph, s: MixedSeparation) -> Vec<RimElement> {
    let mut v: Vec<RimElement> = s.inter().iter().map(RimElement::Vertex).collect();
    v.extend(s.separator_edges(g).into_iter().map(RimElement::Edge));
    v
}

/// Both element pairs lie on the cycle `o` and alternate around it.
pub fn alternates(o: &[Vertex], x: &[RimElement], y: &[RimElement]) -> bool {
    if x.len() != 2 || y.len() != 2 {
        return false;
    }
    let mut pos = Vec::new();
    for (label, set) in [(0, x), (1, y)] {
        for &e in set {
            match rim_position(o, e) {
                Some(p) => pos.push((p, label)),
                None => return false,
            }
        }
    }
    pos.sort();
    pos.windows(2).all(|w| w[0].0 != w[1].0 && w[0].1 != w[1].1)
}

/// Nodes whose torso is a cycle alternating between the separators of two mixed 2-separations.
pub fn alternating_cycle_nodes(td: &TreeDecomposition, g: &Graph, s1: MixedSeparation, s2: MixedSeparation) -> Vec<usize> {
    let (x, y) = (separator_elements(g, s1), separator_elements(g, s2));
    (0..td.nodes.len())
        .filter(|&t| td.torso_kinds[t] == TwoSepTorso::Cycle)
        .filter(|&t| {
            let o = crate::recognize::cycle_order(&td.torsos[t], td.torsos[t].vertices()).expect("cycle torso");
            alternates(&o, &x, &y)
        })
        .collect()
}

/// A star-decomposition of `G - v` of adhesion two whose central torso is a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexDecomposition {
    pub centre: Vertex,
    pub central_bag: VSet,
    /// The central torso-cycle in cycle order.
    pub rim: Vec<Vertex>,
    /// Leaf-bags and their adhesion sets.
    pub leaves: Vec<(VSet, VSet)>,
    pub bold: Vec<Edge>,
    pub timid: Vec<Edge>,
}

impl ApexDecomposition {
    pub fn rim_edges(&self) -> Vec<Edge> {
        let k = self.rim.len();
        (0..k).map(|i| Edge::new(self.rim[i], self.rim[(i + 1) % k])).collect()
    }

    pub fn is_bold(&self, e: Edge) -> bool {
        self.bold.contains(&e)
    }

    /// Bold/timid letters around the rim starting at its first edge.
    pub fn type_word(&self) -> String {
        self.rim_edges().iter().map(|&e| if self.is_bold(e) { 'b' } else { 't' }).collect()
    }

    /// All leaf-bags induce 2-connected subgraphs.
    pub fn is_two_connected(&self, g: &Graph) -> bool {
        self.leaves.iter().all(|&(b, _)| is_k_connected(&g.induced(b), 2))
    }

    /// Type `btbt` with a timid edge neither of whose ends is adjacent to the centre.
    pub fn is_btbt_minus(&self, g: &Graph) -> bool {
        let w = self.type_word();
        (w == "btbt" || w == "tbtb")
            && self
                .timid
                .iter()
                .any(|e| !g.has_edge(self.centre, e.0) && !g.has_edge(self.centre, e.1))
    }

    /// Adjacent to the centre, or incident with two bold rim edges.
    pub fn is_red_vertex(&self, g: &Graph, x: Vertex) -> bool {
        g.has_edge(self.centre, x) || self.rim_edges().iter().filter(|e| e.has_end(x) && self.is_bold(**e)).count() == 2
    }

    /// A mixed 2-separator of the rim, or the ends of a bold edge.
    pub fn is_separator_on_rim(&self, x: &[RimElement]) -> bool {
        if x.len() != 2 {
            return false;
        }
        if let [RimElement::Vertex(a), RimElement::Vertex(b)] = x {
            if self.is_bold(Edge::new(*a, *b)) {
                return true;
            }
        }
        let Some(mut pos) = x.iter().map(|&e| rim_position(&self.rim, e)).collect::<Option<Vec<usize>>>() else {
            return false;
        };
        pos.sort();
        let len = 2 * self.rim.len();
        // Both arcs between the two elements must contain a vertex.
        let inner = pos[1] - pos[0];
        let outer = len - inner;
        let arc_has_vertex = |gap: usize, from: usize| (1..gap).any(|d| (from + d) % 2 == 0);
        arc_has_vertex(inner, pos[0]) && arc_has_vertex(outer, pos[1])
    }

    /// A rim separator whose edges are timid and whose vertices are red.
    pub fn is_red_separator(&self, g: &Graph, x: &[RimElement]) -> bool {
        self.is_separator_on_rim(x)
            && x.iter().all(|&e| match e {
                RimElement::Vertex(v) => self.is_red_vertex(g, v),
                RimElement::Edge(f) => !self.is_bold(f),
            })
    }

    /// `S(C,D)` restricted to rim vertices and rim edges.
    pub fn separator_on_rim(&self, g: &Graph, s: MixedSeparation) -> Vec<RimElement> {
        separator_elements(g, s).into_iter().filter(|&e| rim_position(&self.rim, e).is_some()).collect()
    }
}

/// Builds the apex-decomposition from two tri-separations crossing with all links of size one and
/// separators meeting exactly in one vertex.
pub fn apex_from_crossing(g: &Graph, s1: MixedSeparation, s2: MixedSeparation) -> Result<ApexDecomposition> {
    if s1.nested_with(s2) {
        return Err(Error::Precondition("the tri-separations are nested".into()));
    }
    let d = corner_diagram(g, s1, s2);
    if Side::ALL.iter().any(|&x| d.link(x).size() != 1) || d.centre_vertices.len() != 1 || !d.diagonal_edges.is_empty() {
        return Err(Error::Precondition("crossing shape needs four links of size one and a single centre vertex".into()));
    }
    let v = d.centre_vertices.min().unwrap();
    let mut h = g.clone();
    h.remove_vertex(v)?;
    let td = two_sep_decomposition(&h)?;
    let drop_v = |s: MixedSeparation| MixedSeparation::new(s.a.without(v), s.b.without(v));
    let (r1, r2) = (drop_v(s1), drop_v(s2));
    let nodes = alternating_cycle_nodes(&td, &h, r1, r2);
    let [t] = nodes.as_slice() else {
        return Err(Error::Classification(format!("{} cycle torsos alternate between the separators", nodes.len())));
    };
    let star = &td.nodes[*t];
    let central_bag = td.bags[*t];
    let rim = crate::recognize::cycle_order(&td.torsos[*t], td.torsos[*t].vertices()).expect("cycle torso");
    let leaves: Vec<(VSet, VSet)> = star.members().iter().map(|s| (s.a, s.inter())).collect();
    let k = rim.len();
    let mut bold = Vec::new();
    let mut timid = Vec::new();
    for i in 0..k {
        let e = Edge::new(rim[i], rim[(i + 1) % k]);
        if leaves.iter().any(|&(_, adh)| adh == e.ends()) {
            bold.push(e);
        } else {
            timid.push(e);
        }
    }
    Ok(ApexDecomposition { centre: v, central_bag, rim, leaves, bold, timid })
}

/// Neighbours of `u` outside `b` number exactly one.
fn is_edgy(g: &Graph, u: Vertex, b: VSet) -> bool {
    (g.nbrs(u) - b).len() == 1
}

/// The pseudo-reductions of the leaf separations, one per leaf-bag.
pub fn apex_tri_star(a: &ApexDecomposition, g: &Graph) -> Result<OrientedStar> {
    let v = a.centre;
    let rest = g.vertices().without(v);
    let mut members = Vec::new();
    for &(bag, adh) in &a.leaves {
        let x_l = bag;
        let y_l = (rest - bag) | adh;
        let x = if (g.nbrs(v) & x_l).len() <= 1 { x_l } else { x_l.with(v) };
        let edgy: VSet = adh.iter().filter(|&u| is_edgy(g, u, bag)).collect();
        let y = y_l.with(v) - edgy;
        members.push(MixedSeparation::new(x, y));
    }
    OrientedStar::new(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, wheel};

    #[test]
    fn k4_minus_edge_has_two_triangles() {
        let mut g = complete(4).unwrap();
        g.remove_edge(0, 1).unwrap();
        let td = two_sep_decomposition(&g).unwrap();
        td.validate(&g).unwrap();
        assert_eq!(td.nodes.len(), 2);
        assert!(td.torso_kinds.iter().all(|&k| k == TwoSepTorso::Cycle));
        assert_eq!(td.adhesion(0), [2usize, 3].iter().collect());
    }

    #[test]
    fn cycle_has_no_totally_nested() {
        let g = cycle(5).unwrap();
        let td = two_sep_decomposition(&g).unwrap();
        assert!(td.n.is_empty());
        assert_eq!(td.torso_kinds, vec![TwoSepTorso::Cycle]);
        let all = two_separations(&g).unwrap();
        assert!(all.iter().all(|&s| !externally_2_connected(&g, s)));
    }

    #[test]
    fn wheel_crossing_pair_gives_bare_cycle() {
        let g = wheel(4).unwrap();
        let set = |xs: &[usize]| xs.iter().collect::<VSet>();
        let s1 = MixedSeparation::new(set(&[0, 1, 2]), set(&[0, 3, 4]));
        let s2 = MixedSeparation::new(set(&[0, 2, 3]), set(&[0, 4, 1]));
        let a = apex_from_crossing(&g, s1, s2).unwrap();
        assert_eq!(a.rim.len(), 4);
        assert!(a.leaves.is_empty());
        assert_eq!(a.type_word(), "tttt");
        assert!(apex_tri_star(&a, &g).unwrap().is_empty());
    }
}
