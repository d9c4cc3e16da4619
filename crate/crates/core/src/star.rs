//! Stars of separations, splitting stars of nested families, interlacing, torsos (expanded,
//! compressed and via the subdivided graph), principal stars at a vertex triple, and hyper-lifts.

use crate::connectivity::internally_disjoint_paths;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MergeMap};
use crate::separation::MixedSeparation;
use crate::tri::{flags_of, reduction};
use crate::vset::{VSet, Vertex};
use std::collections::BTreeMap;

/// A set of oriented separations `(A_i, B_i)` with `(A_i,B_i) ≤ (B_j,A_j)` for `i ≠ j`.
/// The `A_i` are the leaves.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct OrientedStar {
    members: Vec<MixedSeparation>,
}

/// Whether the given separations pairwise satisfy the star condition.
pub fn is_star(members: &[MixedSeparation]) -> bool {
    members.iter().enumerate().all(|(i, &x)| {
        members.iter().enumerate().all(|(j, &y)| i == j || x.le(y.flip()))
    })
}

impl OrientedStar {
    pub fn new(mut members: Vec<MixedSeparation>) -> Result<OrientedStar> {
        members.sort_by_key(|s| (s.a, s.b));
        members.dedup();
        if !is_star(&members) {
            return Err(Error::InvalidSeparation("separations do not form a star".into()));
        }
        Ok(OrientedStar { members })
    }

    pub fn empty() -> OrientedStar {
        OrientedStar::default()
    }

    pub fn members(&self) -> &[MixedSeparation] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: MixedSeparation) -> bool {
        self.members.contains(&s)
    }

    /// Intersection of all non-leaf sides; the whole vertex set for the empty star.
    pub fn bag(&self, g: &Graph) -> VSet {
        self.members.iter().fold(g.vertices(), |acc, s| acc & s.b)
    }
}

/// A symmetric, pairwise nested set of separations.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NestedFamily {
    members: Vec<MixedSeparation>,
}

impl NestedFamily {
    pub fn new(members: Vec<MixedSeparation>) -> Result<NestedFamily> {
        let mut members = members;
        members.sort_by_key(|s| (s.a, s.b));
        members.dedup();
        for &s in &members {
            if members.binary_search_by_key(&(s.b, s.a), |t| (t.a, t.b)).is_err() {
                return Err(Error::InvalidSeparation("family is not closed under flipping".into()));
            }
        }
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                if !x.nested_with(y) {
                    return Err(Error::InvalidSeparation("family contains a crossing pair".into()));
                }
            }
        }
        Ok(NestedFamily { members })
    }

    pub fn members(&self) -> &[MixedSeparation] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// One orientation of each flip-pair, the smaller under the internal order.
    pub fn pairs(&self) -> Vec<MixedSeparation> {
        self.members.iter().copied().filter(|s| (s.a, s.b) < (s.b, s.a)).collect()
    }
}

/// Every element of the family lies below some orientation of some member.
pub fn is_splitting(star: &[MixedSeparation], family: &NestedFamily) -> bool {
    family.members().iter().all(|&x| star.iter().any(|&y| x.le(y) || x.flip().le(y)))
}

/// A proper splitting star: a star inside the family, containing no separation together with its
/// flip, that is splitting.
pub fn is_splitting_star(star: &[MixedSeparation], family: &NestedFamily) -> bool {
    star.iter().all(|s| family.members().contains(s))
        && star.iter().all(|s| !star.contains(&s.flip()))
        && is_star(star)
        && is_splitting(star, family)
}

/// All splitting stars, as the maximal elements of the consistent orientations of the family.
pub fn splitting_stars(family: &NestedFamily) -> Vec<OrientedStar> {
    let pairs = family.pairs();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(pairs.len());
    orient(&pairs, &mut chosen, &mut out);
    let mut stars: Vec<OrientedStar> = out
        .into_iter()
        .map(|o: Vec<MixedSeparation>| {
            let max: Vec<MixedSeparation> = o.iter().copied().filter(|&x| !o.iter().any(|&y| x.lt(y))).collect();
            assert!(is_splitting_star(&max, family), "maximal elements of a consistent orientation are not a splitting star");
            OrientedStar::new(max).expect("checked star")
        })
        .collect();
    stars.sort_by(|x, y| x.members.iter().map(|s| (s.a, s.b)).cmp(y.members.iter().map(|s| (s.a, s.b))));
    stars.dedup();
    stars
}

fn orient(pairs: &[MixedSeparation], chosen: &mut Vec<MixedSeparation>, out: &mut Vec<Vec<MixedSeparation>>) {
    let i = chosen.len();
    if i == pairs.len() {
        out.push(chosen.clone());
        return;
    }
    for x in [pairs[i], pairs[i].flip()] {
        // Two separations pointing away from each other make an orientation inconsistent.
        if chosen.iter().all(|&y| !x.flip().le(y) && !y.flip().le(x)) {
            chosen.push(x);
            orient(pairs, chosen, out);
            chosen.pop();
        }
    }
}

/// Reference implementation: every subset of the family checked against the definition.
pub fn splitting_stars_by_definition(family: &NestedFamily) -> Vec<OrientedStar> {
    fn grow(
        items: &[MixedSeparation],
        start: usize,
        cur: &mut Vec<MixedSeparation>,
        family: &NestedFamily,
        out: &mut Vec<OrientedStar>,
    ) {
        if is_splitting_star(cur, family) {
            out.push(OrientedStar::new(cur.clone()).expect("checked star"));
        }
        for i in start..items.len() {
            let x = items[i];
            if cur.iter().all(|&y| y != x.flip() && x.le(y.flip()) && y.le(x.flip())) {
                cur.push(x);
                grow(items, i + 1, cur, family, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(family.members(), 0, &mut Vec::new(), family, &mut out);
    out.sort_by(|x, y| x.members.iter().map(|s| (s.a, s.b)).cmp(y.members.iter().map(|s| (s.a, s.b))));
    out
}

/// `s` interlaces the star: every member lies strictly below `s` or strictly below its flip.
pub fn interlaces(s: MixedSeparation, star: &OrientedStar) -> bool {
    star.members.iter().all(|&x| x.lt(s) || x.lt(s.flip()))
}

/// Like [`interlaces`] with `≤` in place of `<`.
pub fn almost_interlaces(s: MixedSeparation, star: &OrientedStar) -> bool {
    star.members.iter().all(|&x| x.le(s) || x.le(s.flip()))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum InterlaceKind {
    None,
    /// A strong nontrivial tri-separation with both strict sides disconnected.
    Light,
    /// A strong nontrivial tri-separation with a connected strict side.
    Heavy,
    /// Interlaces, but is not a strong nontrivial tri-separation.
    NotApplicable,
}

pub fn interlace_kind(g: &Graph, s: MixedSeparation, star: &OrientedStar) -> InterlaceKind {
    if !interlaces(s, star) {
        return InterlaceKind::None;
    }
    let f = flags_of(g, s);
    if !f.strong_nontrivial_tri() {
        return InterlaceKind::NotApplicable;
    }
    if g.components_within(s.strict_a()).len() >= 2 && g.components_within(s.strict_b()).len() >= 2 {
        InterlaceKind::Light
    } else {
        InterlaceKind::Heavy
    }
}

/// `G[bag]` plus a clique on every separator vertex set `A_i ∩ B_i`.
pub fn torso_of(g: &Graph, members: &[MixedSeparation]) -> (VSet, Graph) {
    let bag = members.iter().fold(g.vertices(), |acc, s| acc & s.b);
    let mut t = g.induced(bag);
    for s in members {
        t.add_clique(s.inter() & bag);
    }
    (bag, t)
}

/// Torsos of a star.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsoBundle {
    pub star: OrientedStar,
    pub bag: VSet,
    /// The graph with every edge subdivided that lies in two separators of the star.
    pub dot_graph: Graph,
    /// Subdivided edge and its subdivision vertex.
    pub subdivisions: Vec<(Edge, Vertex)>,
    /// The star carried over to the subdivided graph, in member order.
    pub dot_star: Vec<MixedSeparation>,
    /// Compressed-torso vertex and its image in the subdivided graph.
    pub iota: Vec<(Vertex, Vertex)>,
    pub expanded_bag: VSet,
    pub expanded: Graph,
    pub compressed: Graph,
    /// Contraction of all separator edges; compressed-torso vertices are representatives.
    pub merge: MergeMap,
}

impl TorsoBundle {
    pub fn iota(&self, v: Vertex) -> Option<Vertex> {
        self.iota.iter().find(|&&(x, _)| x == v).map(|&(_, y)| y)
    }

    /// Branch set in the input graph of a compressed-torso vertex.
    pub fn branch_set(&self, g: &Graph, v: Vertex) -> VSet {
        self.merge.branch_set(v, g.vertices())
    }
}

/// Builds all torsos of `star`. Fails if an edge lies in three separators or a contracted branch
/// set meets the bag in more than one vertex, or misses it without being a single edge.
pub fn torsos(g: &Graph, star: &OrientedStar) -> Result<TorsoBundle> {
    let members = star.members();
    let mut multiplicity: BTreeMap<Edge, usize> = BTreeMap::new();
    for s in members {
        s.validate_plus(g)?;
        for e in s.separator_edges(g) {
            *multiplicity.entry(e).or_default() += 1;
        }
    }
    if let Some((e, _)) = multiplicity.iter().find(|(_, &k)| k >= 3) {
        return Err(Error::Precondition(format!("edge {}-{} lies in three separators", e.0, e.1)));
    }
    let bag = star.bag(g);

    // Subdivided graph and the carried-over star.
    let mut dot_graph = g.clone();
    let mut subdivisions = Vec::new();
    for (&e, &k) in &multiplicity {
        if k == 2 {
            dot_graph.remove_edge(e.0, e.1)?;
            let w = dot_graph.fresh_vertex()?;
            dot_graph.add_edge(e.0, w)?;
            dot_graph.add_edge(w, e.1)?;
            subdivisions.push((e, w));
        }
    }
    let subdivision = |e: Edge| subdivisions.iter().find(|&&(f, _)| f == e).map(|&(_, w)| w);
    let dot_star: Vec<MixedSeparation> = members
        .iter()
        .map(|s| {
            let (mut a, mut b) = (s.a, s.b);
            let own = s.separator_edges(g);
            // Subdivisions of edges this separation does not cut join the side holding the edge.
            for &(e, w) in subdivisions.iter().filter(|(e, _)| !own.contains(e)) {
                if s.a.contains(e.0) && s.a.contains(e.1) {
                    a.insert(w);
                }
                if s.b.contains(e.0) && s.b.contains(e.1) {
                    b.insert(w);
                }
            }
            for e in own {
                match subdivision(e) {
                    Some(w) => {
                        a.insert(w);
                        b.insert(w);
                    }
                    None => a.insert(if s.b.contains(e.0) { e.0 } else { e.1 }),
                }
            }
            MixedSeparation::new(a, b)
        })
        .collect();

    // Expanded torso.
    let expanded_members: Vec<MixedSeparation> = members
        .iter()
        .map(|s| {
            let ends = s.separator_edges(g).iter().fold(VSet::EMPTY, |acc, e| acc | e.ends());
            MixedSeparation::new(s.a, s.b | ends)
        })
        .collect();
    let (expanded_bag, expanded) = torso_of(g, &expanded_members);

    // Contraction of all separator edges, each class onto its bag vertex or its smallest vertex.
    let mut classes = MergeMap::identity();
    for &e in multiplicity.keys() {
        classes.merge(e.1, e.0);
    }
    let mut merge = MergeMap::identity();
    let mut iota = Vec::new();
    let mut done = VSet::EMPTY;
    for v in g.vertices() {
        if done.contains(v) {
            continue;
        }
        let class = classes.branch_set(classes.resolve(v), g.vertices());
        done |= class;
        let in_bag = class & bag;
        let rep = match (class.len(), in_bag.len()) {
            (1, _) => v,
            (_, 1) => in_bag.min().unwrap(),
            (2, 0) => class.min().unwrap(),
            _ => {
                return Err(Error::Precondition(format!("separator edges form a branch set {class:?} with neither one bag vertex nor a single edge")));
            }
        };
        for x in class.without(rep) {
            merge.merge(x, rep);
        }
        let image = if class.len() == 2 && in_bag.is_empty() {
            let e = Edge::new(class.min().unwrap(), class.max().unwrap());
            match subdivision(e) {
                Some(w) => w,
                None => rep,
            }
        } else {
            rep
        };
        iota.push((rep, image));
    }
    let contracted = g.contract_by(&merge);
    let compressed_members: Vec<MixedSeparation> =
        members.iter().map(|s| s.map(|v| merge.resolve(v))).collect();
    let (compressed_bag, compressed) = torso_of(&contracted, &compressed_members);
    iota.retain(|&(x, _)| compressed_bag.contains(x));

    if expanded.contract_by(&merge) != compressed {
        return Err(Error::Precondition("compressed torso differs from the contracted expanded torso".into()));
    }
    Ok(TorsoBundle {
        star: star.clone(),
        bag,
        dot_graph,
        subdivisions,
        dot_star,
        iota,
        expanded_bag,
        expanded,
        compressed,
        merge,
    })
}

/// Whether `iota` maps the compressed torso isomorphically onto the torso of the carried-over star.
pub fn dot_torso_matches(bundle: &TorsoBundle) -> bool {
    let (dot_bag, dot_torso) = torso_of(&bundle.dot_graph, &bundle.dot_star);
    let images: VSet = bundle.iota.iter().map(|&(_, y)| y).collect();
    if images != dot_bag || images.len() != bundle.iota.len() || bundle.compressed.vertices().len() != images.len() {
        return false;
    }
    bundle.compressed.edges().iter().all(|e| {
        let (a, b) = (bundle.iota(e.0).unwrap(), bundle.iota(e.1).unwrap());
        dot_torso.has_edge(a, b)
    }) && bundle.compressed.m() == dot_torso.m()
}

/// The separations `(K ∪ U, V ∖ K)` for the components `K` of `G − U`, their reductions, and the
/// nontrivial reductions.
#[derive(Clone, Debug)]
pub struct PrincipalStar {
    pub u: VSet,
    pub principal: OrientedStar,
    pub reduced: OrientedStar,
    pub nontrivial_reduced: OrientedStar,
    /// Pairs `(component, reduction)` in component order.
    pub per_component: Vec<(VSet, MixedSeparation)>,
    /// At least four components and four internally disjoint paths between any two vertices of `U`.
    pub four_linked: bool,
}

pub fn principal_tri_star(g: &Graph, u: VSet) -> Result<PrincipalStar> {
    if u.len() != 3 || !u.is_subset(g.vertices()) {
        return Err(Error::Precondition("U must be three vertices of the graph".into()));
    }
    let comps = g.components_within(g.vertices() - u);
    if comps.len() < 3 {
        return Err(Error::Precondition(format!("G - U has {} components, need at least 3", comps.len())));
    }
    let principal: Vec<MixedSeparation> =
        comps.iter().map(|&k| MixedSeparation::new(k | u, g.vertices() - k)).collect();
    let mut per_component = Vec::new();
    for (&k, &s) in comps.iter().zip(&principal) {
        per_component.push((k, reduction(g, s)?));
    }
    let reduced: Vec<MixedSeparation> = per_component.iter().map(|&(_, s)| s).collect();
    let nontrivial: Vec<MixedSeparation> = reduced.iter().copied().filter(|&s| flags_of(g, s).is_nontrivial).collect();
    let uv = u.to_vec();
    let four_linked = comps.len() >= 4
        && (0..3).all(|i| {
            (i + 1..3).all(|j| internally_disjoint_paths(g, uv[i], uv[j], VSet::EMPTY, &[]).count >= 4)
        });
    Ok(PrincipalStar {
        u,
        principal: OrientedStar::new(principal)?,
        reduced: OrientedStar::new(reduced)?,
        nontrivial_reduced: OrientedStar::new(nontrivial)?,
        per_component,
        four_linked,
    })
}

/// Checks that `t` is a separation of `x` without separator edges.
fn check_torso_separation(x: &Graph, t: MixedSeparation) -> Result<()> {
    t.validate(x)?;
    if !t.separator_edges(x).is_empty() {
        return Err(Error::InvalidSeparation("torso separation has edges between its strict sides".into()));
    }
    Ok(())
}

/// A hyper-lift and the lift in the subdivided graph it comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HyperLift {
    pub separation: MixedSeparation,
    pub dot_lift: MixedSeparation,
}

/// Lifts a separation `t = (C,D)` of the compressed torso to a mixed-separation of `g`.
pub fn hyper_lift(g: &Graph, bundle: &TorsoBundle, t: MixedSeparation) -> Result<HyperLift> {
    check_torso_separation(&bundle.compressed, t)?;
    let image = |s: VSet| -> VSet { s.iter().map(|v| bundle.iota(v).expect("torso vertex")).collect() };
    let (c1, d1) = (image(t.a), image(t.b));
    let (mut c2, mut d2) = (c1, d1);
    for s in &bundle.dot_star {
        if s.inter().is_subset(c1) {
            c2 |= s.strict_a();
        } else {
            d2 |= s.strict_a();
        }
    }
    let v = g.vertices();
    Ok(HyperLift { separation: MixedSeparation::new(c2 & v, d2 & v), dot_lift: MixedSeparation::new(c2, d2) })
}

/// The four guarantees of a hyper-lift `(Ĉ,D̂)` of `(C,D)`:
/// order at most that of `(C,D)`; almost interlacing the star; `|Ĉ∖D̂| ≥ |C∖D|`;
/// and `|(Ĉ∖D̂) ∩ B| ≥ |C∖D|` for every member `(A,B)`.
pub fn hyper_lift_properties(g: &Graph, bundle: &TorsoBundle, t: MixedSeparation, lift: MixedSeparation) -> [bool; 4] {
    let strict = t.strict_a().len();
    [
        lift.order(g) <= t.order(&bundle.compressed),
        almost_interlaces(lift, &bundle.star),
        lift.strict_a().len() >= strict,
        bundle.star.members().iter().all(|s| (lift.strict_a() & s.b).len() >= strict),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{grid3k, wheel};
    use crate::tri::compute_total_nested;

    #[test]
    fn empty_family_has_one_empty_star() {
        let f = NestedFamily::new(vec![]).unwrap();
        assert_eq!(splitting_stars(&f), vec![OrientedStar::empty()]);
    }

    #[test]
    fn single_pair_gives_two_stars() {
        let a = [0usize, 1, 2].iter().collect::<VSet>();
        let b = [2usize, 3, 4, 5].iter().collect::<VSet>();
        let s = MixedSeparation::new(a, b);
        let f = NestedFamily::new(vec![s, s.flip()]).unwrap();
        let stars = splitting_stars(&f);
        assert_eq!(stars.len(), 2);
        assert!(stars.iter().all(|x| x.len() == 1));
        assert_eq!(stars, splitting_stars_by_definition(&f));
    }

    #[test]
    fn empty_star_torsos_are_the_graph() {
        let g = wheel(5).unwrap();
        let b = torsos(&g, &OrientedStar::empty()).unwrap();
        assert_eq!(b.expanded, g);
        assert_eq!(b.compressed, g);
        assert!(dot_torso_matches(&b));
    }

    #[test]
    fn grid_stars_count_parts() {
        let g = grid3k(5).unwrap();
        let t = compute_total_nested(&g).unwrap();
        let f = NestedFamily::new(t.n()).unwrap();
        let stars = splitting_stars(&f);
        assert_eq!(stars, splitting_stars_by_definition(&f));
        assert_eq!(stars.len(), f.len() / 2 + 1);
        for s in &stars {
            let b = torsos(&g, s).unwrap();
            assert!(dot_torso_matches(&b));
        }
    }
}
