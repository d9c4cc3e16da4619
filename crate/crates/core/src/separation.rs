//! Mixed-separations: separators, the partial order, nestedness, corner diagrams and exhaustive
//! enumeration of all mixed k-separations for small k.

use crate::budget;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::vset::{VSet, Vertex};
use std::cmp::Ordering;

/// An oriented pair of sides `(A, B)` with `A ∪ B = V`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MixedSeparation {
    pub a: VSet,
    pub b: VSet,
}

impl MixedSeparation {
    pub fn new(a: VSet, b: VSet) -> MixedSeparation {
        MixedSeparation { a, b }
    }

    pub fn flip(self) -> MixedSeparation {
        MixedSeparation { a: self.b, b: self.a }
    }

    /// `A ∖ B`.
    pub fn strict_a(self) -> VSet {
        self.a - self.b
    }

    /// `B ∖ A`.
    pub fn strict_b(self) -> VSet {
        self.b - self.a
    }

    /// `A ∩ B`.
    pub fn inter(self) -> VSet {
        self.a & self.b
    }

    /// `(A,B) ≤ (C,D)`: `A ⊆ C` and `B ⊇ D`.
    pub fn le(self, other: MixedSeparation) -> bool {
        self.a.is_subset(other.a) && other.b.is_subset(self.b)
    }

    pub fn lt(self, other: MixedSeparation) -> bool {
        self != other && self.le(other)
    }

    pub fn nested_with(self, other: MixedSeparation) -> bool {
        self.le(other) || self.le(other.flip()) || self.flip().le(other) || self.flip().le(other.flip())
    }

    pub fn relate(self, other: MixedSeparation) -> Relation {
        let nested = self.nested_with(other);
        Relation { le: self.le(other), ge: other.le(self), nested, crosses: !nested }
    }

    /// Edges of the separator: `E(A∖B, B∖A)`.
    pub fn separator_edges(self, g: &Graph) -> Vec<Edge> {
        g.edges_between(self.strict_a(), self.strict_b())
    }

    pub fn separator(self, g: &Graph) -> Separator {
        Separator { vertices: self.inter(), edges: self.separator_edges(g) }
    }

    pub fn order(self, g: &Graph) -> usize {
        let sa = self.strict_a();
        let sb = self.strict_b();
        self.inter().len() + sa.iter().map(|v| (g.nbrs(v) & sb).len()).sum::<usize>()
    }

    /// Checks `A ∪ B = V` and nonempty strict sides.
    pub fn validate(self, g: &Graph) -> Result<()> {
        self.validate_plus(g)?;
        if self.strict_a().is_empty() || self.strict_b().is_empty() {
            return Err(Error::InvalidSeparation("a strict side is empty".into()));
        }
        Ok(())
    }

    /// The relaxed validity used for torsos: sides cover `V` and separator edges are disjoint.
    pub fn validate_plus(self, g: &Graph) -> Result<()> {
        if self.a | self.b != g.vertices() {
            return Err(Error::InvalidSeparation("sides do not cover exactly the vertex set".into()));
        }
        let mut seen = VSet::EMPTY;
        for e in self.separator_edges(g) {
            if seen.intersects(e.ends()) {
                return Err(Error::InvalidSeparation("separator edges share an endvertex".into()));
            }
            seen |= e.ends();
        }
        Ok(())
    }

    pub fn map(self, f: impl Fn(Vertex) -> Vertex + Copy) -> MixedSeparation {
        MixedSeparation { a: self.a.map(f), b: self.b.map(f) }
    }

    /// Deterministic sort key: separator encoding first, then side `A`.
    pub fn sort_key(self, g: &Graph) -> (Vec<Vertex>, Vec<Edge>, Vec<Vertex>) {
        (self.inter().to_vec(), self.separator_edges(g), self.a.to_vec())
    }
}

/// Sorts separations by separator encoding, then by side `A`.
pub fn sort_separations(g: &Graph, seps: &mut [MixedSeparation]) {
    seps.sort_by_cached_key(|s| s.sort_key(g));
}

pub fn cmp_separations(g: &Graph, x: MixedSeparation, y: MixedSeparation) -> Ordering {
    x.sort_key(g).cmp(&y.sort_key(g))
}

/// Vertex and edge part of a separator.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Separator {
    pub vertices: VSet,
    pub edges: Vec<Edge>,
}

impl Separator {
    pub fn order(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    /// Separator edges pairwise disjoint.
    pub fn edges_form_matching(&self) -> bool {
        let mut seen = VSet::EMPTY;
        for e in &self.edges {
            if seen.intersects(e.ends()) {
                return false;
            }
            seen |= e.ends();
        }
        true
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }
}

/// The separator of a validated separation.
pub fn separator_of(g: &Graph, s: MixedSeparation) -> Result<Separator> {
    s.validate(g)?;
    Ok(s.separator(g))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Relation {
    pub le: bool,
    pub ge: bool,
    pub nested: bool,
    pub crosses: bool,
}

/// A set of vertices and edges; links and corner-separators take this form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Link {
    pub vertices: VSet,
    pub edges: Vec<Edge>,
}

impl Link {
    pub fn size(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    fn union(&self, other: &Link) -> Link {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().copied());
        edges.sort();
        edges.dedup();
        Link { vertices: self.vertices | other.vertices, edges }
    }
}

/// Corners of the diagram, named by the pair of sides they lie in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Corner {
    AC,
    AD,
    BC,
    BD,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::AC, Corner::AD, Corner::BC, Corner::BD];

    /// The two sides adjacent to this corner.
    pub fn sides(self) -> (Side, Side) {
        match self {
            Corner::AC => (Side::A, Side::C),
            Corner::AD => (Side::A, Side::D),
            Corner::BC => (Side::B, Side::C),
            Corner::BD => (Side::B, Side::D),
        }
    }

    pub fn opposite(self) -> Corner {
        match self {
            Corner::AC => Corner::BD,
            Corner::AD => Corner::BC,
            Corner::BC => Corner::AD,
            Corner::BD => Corner::AC,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
    C,
    D,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::A, Side::B, Side::C, Side::D];

    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
            Side::C => Side::D,
            Side::D => Side::C,
        }
    }

    fn idx(self) -> usize {
        self as usize
    }
}

/// Corners, links, centre, jumping edges and corner-separators of a pair `(A,B)`, `(C,D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerDiagram {
    corners: [VSet; 4],
    links: [Link; 4],
    pub centre_vertices: VSet,
    pub diagonal_edges: Vec<Edge>,
    pub jumping_edges: Vec<Edge>,
    corner_separators: [Link; 4],
}

impl CornerDiagram {
    pub fn corner(&self, c: Corner) -> VSet {
        self.corners[c as usize]
    }

    pub fn link(&self, s: Side) -> &Link {
        &self.links[s.idx()]
    }

    /// `L(X, Y)` for the corner `{X, Y}`.
    pub fn corner_separator(&self, c: Corner) -> &Link {
        &self.corner_separators[c as usize]
    }

    pub fn centre_size(&self) -> usize {
        self.centre_vertices.len() + self.diagonal_edges.len()
    }

    /// Some corner and both links next to it are empty.
    pub fn nested(&self) -> bool {
        Corner::ALL.iter().any(|&c| {
            let (x, y) = c.sides();
            self.corner(c).is_empty() && self.link(x).is_empty() && self.link(y).is_empty()
        })
    }
}

/// Builds the corner diagram of `s1 = (A,B)` and `s2 = (C,D)`.
pub fn corner_diagram(g: &Graph, s1: MixedSeparation, s2: MixedSeparation) -> CornerDiagram {
    let (sa, sb, sc, sd) = (s1.strict_a(), s1.strict_b(), s2.strict_a(), s2.strict_b());
    let corners = [sa & sc, sa & sd, sb & sc, sb & sd];
    let [ac, ad, bc, bd] = corners;
    let e1 = s1.separator_edges(g);
    let e2 = s2.separator_edges(g);
    let touches = |e: &Edge, set: VSet| e.ends().intersects(set);
    let is_diag = |e: &Edge| {
        let ends = e.ends();
        (ends.intersects(ac) && ends.intersects(bd)) || (ends.intersects(ad) && ends.intersects(bc))
    };
    let diagonal_edges: Vec<Edge> = e1.iter().copied().filter(|e| is_diag(e)).collect();
    let edge_link = |edges: &[Edge], x: VSet, y: VSet| -> Vec<Edge> {
        edges.iter().copied().filter(|e| !is_diag(e) && (touches(e, x) || touches(e, y))).collect()
    };
    let (i1, i2) = (s1.inter(), s2.inter());
    let links = [
        Link { vertices: i2 - s1.b, edges: edge_link(&e2, ac, ad) },
        Link { vertices: i2 - s1.a, edges: edge_link(&e2, bc, bd) },
        Link { vertices: i1 - s2.b, edges: edge_link(&e1, ac, bc) },
        Link { vertices: i1 - s2.a, edges: edge_link(&e1, ad, bd) },
    ];
    let centre_vertices = i1 & i2;
    let mut in_links: Vec<Edge> = links.iter().flat_map(|l| l.edges.iter().copied()).collect();
    in_links.extend(diagonal_edges.iter().copied());
    let mut jumping_edges: Vec<Edge> =
        e1.iter().chain(e2.iter()).copied().filter(|e| !in_links.contains(e)).collect();
    jumping_edges.sort();
    jumping_edges.dedup();
    let centre = Link { vertices: centre_vertices, edges: diagonal_edges.clone() };
    let corner_separators = Corner::ALL.map(|c| {
        let (x, y) = c.sides();
        let corner = corners[c as usize];
        let mut l = links[x.idx()].union(&links[y.idx()]).union(&centre);
        l.edges.retain(|e| !diagonal_edges.contains(e) || touches(e, corner));
        l
    });
    CornerDiagram { corners, links, centre_vertices, diagonal_edges, jumping_edges, corner_separators }
}

/// Every mixed `k`-separation of `g` (both orientations), sorted.
pub fn enumerate_mixed_separations(g: &Graph, k: usize) -> Result<Vec<MixedSeparation>> {
    enumerate_with_budget(g, k, budget::enumeration_budget())
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Number of separator candidates examined for order `k`.
pub fn candidate_count(g: &Graph, k: usize) -> u128 {
    (0..=k).map(|j| binom(g.n(), j) * binom(g.m(), k - j)).sum()
}

pub fn enumerate_with_budget(g: &Graph, k: usize, budget: u128) -> Result<Vec<MixedSeparation>> {
    let needed = candidate_count(g, k);
    if needed > budget {
        return Err(Error::Budget { needed, budget });
    }
    let vs = g.vertices().to_vec();
    let es = g.edges();
    let mut out = Vec::new();
    let mut xs: Vec<Vertex> = Vec::with_capacity(k);
    for j in 0..=k {
        for_each_combination(&vs, j, &mut xs, &mut |x| {
            let xset: VSet = x.iter().collect();
            let avail: Vec<Edge> = es.iter().copied().filter(|e| !e.ends().intersects(xset)).collect();
            let mut fs: Vec<Edge> = Vec::with_capacity(k);
            for_each_combination(&avail, k - j, &mut fs, &mut |f| {
                colourings(g, xset, f, &mut out);
            });
        });
    }
    if out.len() > (1 << 26) {
        return Err(Error::Budget { needed: out.len() as u128, budget });
    }
    sort_separations(g, &mut out);
    Ok(out)
}

fn for_each_combination<T: Copy>(items: &[T], k: usize, buf: &mut Vec<T>, f: &mut dyn FnMut(&[T])) {
    fn rec<T: Copy>(items: &[T], start: usize, k: usize, buf: &mut Vec<T>, f: &mut dyn FnMut(&[T])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        let need = k - buf.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            buf.push(items[i]);
            rec(items, i + 1, k, buf, f);
            buf.pop();
        }
    }
    buf.clear();
    if k <= items.len() {
        rec(items, 0, k, buf, f);
    }
}

/// Emits every separation with vertex part `x` and edge part `f`.
fn colourings(g: &Graph, x: VSet, f: &[Edge], out: &mut Vec<MixedSeparation>) {
    let rest = g.vertices() - x;
    if rest.len() < 2 {
        return;
    }
    let cut_nbrs = |v: Vertex| -> VSet {
        let mut nb = g.nbrs(v);
        for e in f {
            if e.0 == v {
                nb.remove(e.1);
            } else if e.1 == v {
                nb.remove(e.0);
            }
        }
        nb
    };
    // Components of G - x - f.
    let mut comps: Vec<VSet> = Vec::new();
    let mut left = rest;
    while let Some(s) = left.min() {
        let mut seen = VSet::single(s);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VSet::EMPTY;
            for v in frontier {
                next |= cut_nbrs(v);
            }
            frontier = next & (rest - seen);
            seen |= frontier;
        }
        left -= seen;
        comps.push(seen);
    }
    if comps.len() < 2 {
        return;
    }
    let comp_of = |v: Vertex| comps.iter().position(|c| c.contains(v)).unwrap();
    // Each separator edge forces its ends' components to opposite colours.
    let r = comps.len();
    let mut adj = vec![Vec::new(); r];
    for e in f {
        let (p, q) = (comp_of(e.0), comp_of(e.1));
        if p == q {
            return;
        }
        adj[p].push(q);
        adj[q].push(p);
    }
    let mut parity = vec![u8::MAX; r];
    let mut group = vec![0usize; r];
    let mut groups = 0;
    for start in 0..r {
        if parity[start] != u8::MAX {
            continue;
        }
        parity[start] = 0;
        group[start] = groups;
        let mut stack = vec![start];
        while let Some(p) = stack.pop() {
            for &q in &adj[p] {
                if parity[q] == u8::MAX {
                    parity[q] = parity[p] ^ 1;
                    group[q] = groups;
                    stack.push(q);
                } else if parity[q] == parity[p] {
                    return;
                }
            }
        }
        groups += 1;
    }
    assert!(groups <= 30, "too many components to colour");
    for mask in 0u64..(1u64 << groups) {
        let mut a = x;
        let mut b = x;
        for i in 0..r {
            if (parity[i] as u64 ^ (mask >> group[i] & 1)) == 0 {
                a |= comps[i];
            } else {
                b |= comps[i];
            }
        }
        if a == x || b == x {
            continue;
        }
        let s = MixedSeparation { a, b };
        debug_assert_eq!(s.separator_edges(g), {
            let mut v = f.to_vec();
            v.sort();
            v
        });
        out.push(s);
    }
}

/// Test oracle: every `(A, B)` with `A ∪ B = V`, nonempty strict sides and order `k`.
pub fn enumerate_by_bipartitions(g: &Graph, k: usize) -> Vec<MixedSeparation> {
    let vs = g.vertices().to_vec();
    let n = vs.len();
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let (mut a, mut b) = (VSet::EMPTY, VSet::EMPTY);
        for &v in &vs {
            match c % 3 {
                0 => a.insert(v),
                1 => b.insert(v),
                _ => {
                    a.insert(v);
                    b.insert(v);
                }
            }
            c /= 3;
        }
        let s = MixedSeparation { a, b };
        if !s.strict_a().is_empty() && !s.strict_b().is_empty() && s.order(g) == k {
            out.push(s);
        }
    }
    sort_separations(g, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, k3m};

    #[test]
    fn c5_order_two_matches_oracle() {
        let g = cycle(5).unwrap();
        let fast = enumerate_mixed_separations(&g, 2).unwrap();
        assert_eq!(fast, enumerate_by_bipartitions(&g, 2));
        assert!(!fast.is_empty());
    }

    #[test]
    fn k4_nontrivial_seps_have_two_vertices_and_an_edge() {
        let g = complete(4).unwrap();
        let seps = enumerate_mixed_separations(&g, 3).unwrap();
        assert_eq!(seps, enumerate_by_bipartitions(&g, 3));
        for s in seps {
            if g.has_cycle_within(s.a) && g.has_cycle_within(s.b) {
                let sep = s.separator(&g);
                assert_eq!((sep.vertices.len(), sep.edges.len()), (2, 1));
            }
        }
    }

    #[test]
    fn k33_three_separations() {
        let g = k3m(3).unwrap();
        for s in enumerate_mixed_separations(&g, 3).unwrap() {
            assert!(!(g.has_cycle_within(s.a) && g.has_cycle_within(s.b)));
        }
    }

    #[test]
    fn relate_reflexive() {
        let s = MixedSeparation::new(VSet::range(3), VSet::range(5) - VSet::single(0));
        let r = s.relate(s);
        assert!(r.le && r.nested && !r.crosses);
    }

    #[test]
    fn budget_error() {
        let g = complete(8).unwrap();
        assert!(matches!(enumerate_with_budget(&g, 3, 10), Err(Error::Budget { .. })));
    }
}
