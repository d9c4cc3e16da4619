//! Edge types and minimal 3-connectivity, the 4-connectivity grades, exhaustive small-graph
//! corpora, and the batch verification suites.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::connectivity::is_k_connected;
use crate::decompose::{angry_classify, canonical_digest, decompose, DecompositionResult, StarInterlace, TorsoTag};
use crate::error::{Error, Result};
use crate::generate::generate;
use crate::graph::{EditAction, Edge, Graph};
use crate::iso::{symmetry, CanonicalCode};
use crate::minor::{is_minor, verify_minor_certificate, MinorResult};
use crate::recognize::{
    generalised_wheel, is_essentially_4_connected, is_internally_4_connected, is_k33, is_k4, is_quasi_4_connected,
    is_wheel, vertex_three_separations, vertex_three_separators,
};
use crate::separation::{corner_diagram, enumerate_by_bipartitions, enumerate_mixed_separations, MixedSeparation, Side};
use crate::star::{
    almost_interlaces, hyper_lift, hyper_lift_properties, interlaces, splitting_stars, splitting_stars_by_definition,
    NestedFamily,
};
use crate::tri::{
    analyse_unchecked, compute_total_nested, crossing_case, externally_tri_connected, is_atomic_cut,
    is_half_connected, is_nontrivial, CrossingCase, TriAnalysis,
};
use crate::twosep::{
    alternating_cycle_nodes, apex_from_crossing, apex_tri_star, classify_2sep_crossing, externally_2_connected,
    is_totally_nested_among, mixed_two_separations, separator_elements, two_sep_decomposition, two_separations,
    RimElement, TwoSepTorso,
};
use crate::vset::{VSet, Vertex};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EdgeType {
    pub edge: Edge,
    pub type_c: bool,
    pub type_d: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeTypeReport {
    pub edges: Vec<EdgeType>,
    pub minimally_3_connected: bool,
    /// Flagged edges whose contraction (type c) or deletion (type d) broke 3-connectivity.
    pub unsound: Vec<Edge>,
}

fn contract(g: &Graph, e: Edge) -> Graph {
    g.edit(EditAction::ContractEdge(e)).expect("edge of the graph").0
}

/// `G/e` is 3-connected; contracting an edge of a triangle creates a parallel edge, which counts
/// as failing.
fn contraction_3_connected(g: &Graph, e: Edge) -> bool {
    (g.nbrs(e.0) & g.nbrs(e.1)).is_empty() && is_k_connected(&contract(g, e), 3)
}

fn delete(g: &Graph, e: Edge) -> Graph {
    g.edit(EditAction::DeleteEdge(e)).expect("edge of the graph").0
}

/// Type-c and type-d flags of every edge of a 3-connected graph, each flag rechecked by performing
/// the operation it licenses.
pub fn edge_types(g: &Graph) -> Result<EdgeTypeReport> {
    if !is_k_connected(g, 3) {
        return Err(Error::NotConnected(3));
    }
    let seps3: Vec<VSet> = vertex_three_separators(g).into_iter().map(|(x, _)| x).collect();
    let mixed: Vec<MixedSeparation> =
        enumerate_mixed_separations(g, 3)?.into_iter().filter(|s| s.order(g) == 3).collect();
    let mut in_separator: HashSet<Edge> = HashSet::new();
    for s in &mixed {
        in_separator.extend(s.separator_edges(g));
    }
    let mut edges = Vec::new();
    let mut unsound = Vec::new();
    for e in g.edges() {
        let in_triangle = !(g.nbrs(e.0) & g.nbrs(e.1)).is_empty();
        let type_c = !in_triangle && !seps3.iter().any(|x| e.ends().is_subset(*x));
        let type_d = !in_separator.contains(&e);
        if (type_c && !contraction_3_connected(g, e)) || (type_d && !is_k_connected(&delete(g, e), 3)) {
            unsound.push(e);
        }
        edges.push(EdgeType { edge: e, type_c, type_d });
    }
    Ok(EdgeTypeReport { edges, minimally_3_connected: is_minimally_3_connected(g), unsound })
}

/// 3-connected, and for every edge neither deleting nor contracting it keeps 3-connectivity.
pub fn is_minimally_3_connected(g: &Graph) -> bool {
    is_k_connected(g, 3)
        && g.edges().iter().all(|&e| !is_k_connected(&delete(g, e), 3) && !contraction_3_connected(g, e))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ConnectivityGrades {
    pub internally_4: bool,
    pub quasi_4: bool,
    pub essentially_4: bool,
}

/// All three grades; every grade is false for graphs that are not 3-connected.
pub fn connectivity_grades(g: &Graph) -> Result<ConnectivityGrades> {
    if !is_k_connected(g, 3) {
        return Ok(ConnectivityGrades::default());
    }
    let t = analyse_unchecked(g)?;
    Ok(ConnectivityGrades {
        internally_4: is_internally_4_connected(g),
        quasi_4: is_quasi_4_connected(g),
        essentially_4: is_essentially_4_connected(g, &t),
    })
}

/// Relabels `g` onto `0..n` in canonical order.
pub fn canonical_form(g: &Graph) -> Graph {
    let sym = symmetry(g);
    g.relabel(|v| sym.position[v].expect("vertex of the graph")).expect("canonical positions stay in range")
}

/// Every graph on `n` vertices up to isomorphism, in canonical form, sorted by canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::new()];
    for k in 0..n {
        let candidates: Vec<(CanonicalCode, Graph)> = level
            .par_iter()
            .flat_map_iter(|h| {
                (0u64..1 << k).map(move |mask| {
                    let mut g = h.clone();
                    g.add_vertex(k).expect("vertex in range");
                    for u in VSet(mask) {
                        g.add_edge(u, k).expect("new edge");
                    }
                    let sym = symmetry(&g);
                    let c = g.relabel(|v| sym.position[v].expect("vertex")).expect("in range");
                    (sym.code, c)
                })
            })
            .collect();
        let mut seen = HashSet::new();
        let mut next: Vec<(CanonicalCode, Graph)> =
            candidates.into_iter().filter(|(c, _)| seen.insert(c.clone())).collect();
        next.sort_by(|x, y| x.0.cmp(&y.0));
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    level
}

/// All graphs with between one and `max_n` vertices.
pub fn corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).collect()
}

pub fn three_connected(graphs: &[Graph]) -> Vec<Graph> {
    graphs.iter().filter(|g| is_k_connected(g, 3)).cloned().collect()
}

pub fn two_connected(graphs: &[Graph]) -> Vec<Graph> {
    graphs.iter().filter(|g| is_k_connected(g, 2)).cloned().collect()
}

/// Largest order covered by [`vertex_transitive_corpus`].
pub const VERTEX_TRANSITIVE_MAX_N: usize = 10;

/// Cayley graph on a group given by its multiplication table.
fn cayley(table: &[Vec<usize>], gens: &[usize]) -> Graph {
    let n = table.len();
    let mut g = Graph::with_vertices(n).expect("small group");
    for x in 0..n {
        for &s in gens {
            let y = table[x][s];
            if y != x && !g.has_edge(x, y) {
                g.add_edge(x, y).expect("in range");
            }
        }
    }
    g
}

/// Inverse-closed generating sets without the identity, as unions of `{s, s^-1}` classes.
fn cayley_family(table: &[Vec<usize>]) -> Vec<Graph> {
    let n = table.len();
    let inverse = |s: usize| (0..n).find(|&t| table[s][t] == 0).expect("group element has an inverse");
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for s in 1..n {
        if !classes.iter().any(|c| c.contains(&s)) {
            let t = inverse(s);
            classes.push(if t == s { vec![s] } else { vec![s, t] });
        }
    }
    (1u64..1 << classes.len())
        .map(|mask| {
            let gens: Vec<usize> =
                classes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).flat_map(|(_, c)| c.clone()).collect();
            cayley(table, &gens)
        })
        .collect()
}

/// `Z_3 x Z_3` with `(a,b) -> 3a + b`.
fn z3z3() -> Vec<Vec<usize>> {
    (0..9).map(|x| (0..9).map(|y| 3 * ((x / 3 + y / 3) % 3) + (x % 3 + y % 3) % 3).collect()).collect()
}

/// Dihedral group of order 10: `r^i` is `i`, `r^i s` is `5 + i`.
fn d5() -> Vec<Vec<usize>> {
    let mul = |x: usize, y: usize| -> usize {
        let (i, a) = (x % 5, x >= 5);
        let (j, b) = (y % 5, y >= 5);
        // r^i s^a r^j s^b = r^(i ± j) s^(a xor b)
        let k = if a { (i + 5 - j) % 5 } else { (i + j) % 5 };
        if a != b {
            5 + k
        } else {
            k
        }
    };
    (0..10).map(|x| (0..10).map(|y| mul(x, y)).collect()).collect()
}

/// Every connected vertex-transitive graph on at most `max_n <= 10` vertices: the exhaustive
/// corpus filtered by transitivity up to eight vertices, and circulants, Cayley graphs of
/// `Z_3 x Z_3` and `D_5`, the Petersen graph and its complement above that.
pub fn vertex_transitive_corpus(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > VERTEX_TRANSITIVE_MAX_N {
        return Err(Error::BoundExceeded(max_n, VERTEX_TRANSITIVE_MAX_N));
    }
    let mut candidates: Vec<Graph> = Vec::new();
    for n in 1..=max_n.min(8) {
        candidates.extend(all_graphs(n));
    }
    for n in 9..=max_n {
        let half = n / 2;
        for mask in 1u64..1 << half {
            let jumps: Vec<usize> = (1..=half).filter(|j| mask >> (j - 1) & 1 == 1).collect();
            candidates.push(crate::generate::circulant(n, &jumps)?);
        }
    }
    if max_n >= 9 {
        candidates.extend(cayley_family(&z3z3()));
    }
    if max_n >= 10 {
        candidates.extend(cayley_family(&d5()));
        let p = crate::generate::petersen();
        let mut comp = Graph::with_vertices(10)?;
        for u in 0..10 {
            for v in u + 1..10 {
                if !p.has_edge(u, v) {
                    comp.add_edge(u, v)?;
                }
            }
        }
        candidates.push(p);
        candidates.push(comp);
    }
    let mut seen = HashSet::new();
    let mut out: Vec<(CanonicalCode, Graph)> = candidates
        .into_iter()
        .filter(|g| g.is_connected())
        .filter_map(|g| {
            let sym = symmetry(&g);
            if !sym.is_vertex_transitive() || !seen.insert(sym.code.clone()) {
                return None;
            }
            let c = g.relabel(|v| sym.position[v].expect("vertex")).expect("in range");
            Some((sym.code, c))
        })
        .collect();
    out.sort_by(|x, y| (x.1.n(), &x.0).cmp(&(y.1.n(), &y.0)));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// One violated assertion on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub graph: Graph,
    pub detail: String,
}

/// Failures and counters accumulated over graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub failures: Vec<Failure>,
    pub stats: BTreeMap<String, usize>,
    /// Graphs skipped because a search budget ran out.
    pub incomplete: usize,
}

impl Tally {
    pub fn fail(&mut self, check: &str, g: &Graph, detail: impl Into<String>) {
        self.failures.push(Failure { check: check.to_string(), graph: g.clone(), detail: detail.into() });
    }

    pub fn count(&mut self, key: &str, by: usize) {
        *self.stats.entry(key.to_string()).or_insert(0) += by;
    }

    pub fn stat(&self, key: &str) -> usize {
        self.stats.get(key).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: Tally) {
        self.failures.extend(other.failures);
        for (k, v) in other.stats {
            *self.stats.entry(k).or_insert(0) += v;
        }
        self.incomplete += other.incomplete;
    }

    fn budget(&mut self, g: &Graph, e: Error) {
        if matches!(e, Error::Budget { .. }) {
            self.incomplete += 1;
        } else {
            self.fail("error", g, e.to_string());
        }
    }
}

/// Runs `check` on every graph in parallel and merges the tallies in corpus order.
pub fn run_checks(graphs: &[Graph], check: impl Fn(&Graph) -> Tally + Sync + Send) -> Tally {
    let parts: Vec<Tally> = graphs.par_iter().map(check).collect();
    let mut out = Tally::default();
    for p in parts {
        out.merge(p);
    }
    out
}

/// Exactly one outcome of the trichotomy.
pub fn check_angry(g: &Graph) -> Tally {
    let mut t = Tally::default();
    match angry_classify(g) {
        Ok((o, _)) => t.count(o.as_str(), 1),
        Err(Error::Classification(msg)) => t.fail("angry", g, msg),
        Err(e) => t.budget(g, e),
    }
    t
}

/// Tags allowed for a given interlacing kind.
fn allowed_tags(kind: StarInterlace) -> &'static [TorsoTag] {
    match kind {
        StarInterlace::None => &[TorsoTag::Quasi4Connected, TorsoTag::K4, TorsoTag::K3],
        StarInterlace::Light => &[TorsoTag::ThickenedK3m, TorsoTag::WholeGraphK3m],
        StarInterlace::Heavy => &[TorsoTag::Wheel, TorsoTag::K4],
        StarInterlace::LightAndHeavy => &[TorsoTag::K4],
    }
}

/// Classification of every compressed torso, the interlacing table, and minor certificates.
pub fn check_main(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let d = match decompose(g) {
        Ok(d) => d,
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    check_decomposition(g, &d, &mut t);
    t
}

fn check_decomposition(g: &Graph, d: &DecompositionResult, t: &mut Tally) {
    t.count("stars", d.stars.len());
    for s in &d.stars {
        let class = &s.class;
        t.count(&format!("torso/{}", class.tag.as_str()), 1);
        t.count(&format!("interlace/{}", class.interlace.as_str()), 1);
        if let Some(msg) = &class.table_violation {
            t.fail("main/table", g, msg.clone());
        } else if !allowed_tags(class.interlace).contains(&class.tag) {
            t.fail("main/table", g, format!("{} torso with {} interlacing", class.tag.as_str(), class.interlace.as_str()));
        }
        let x = &s.bundle.compressed;
        let shape_ok = match class.tag {
            TorsoTag::Quasi4Connected => is_quasi_4_connected(x),
            TorsoTag::K4 => is_k4(x),
            TorsoTag::K3 => x.n() == 3 && x.is_complete(),
            TorsoTag::Wheel => is_wheel(x),
            TorsoTag::ThickenedK3m => crate::recognize::thickened_k3m_witness(x).is_some(),
            TorsoTag::WholeGraphK3m => s.star.is_empty() && crate::recognize::k3m_witness(g).is_some(),
            TorsoTag::Other => true,
        };
        if !shape_ok {
            t.fail("main/shape", g, format!("compressed torso is not {}: {x:?}", class.tag.as_str()));
        }
        if matches!(class.interlace, StarInterlace::Heavy | StarInterlace::LightAndHeavy)
            && generalised_wheel(&s.bundle.expanded).is_none()
        {
            t.fail("main/expanded", g, "heavily interlaced star without a generalised-wheel expanded torso");
        }
        if !crate::star::dot_torso_matches(&s.bundle) {
            t.fail("main/dot", g, "torso of the subdivided star differs from the compressed torso");
        }
        if let Some(m) = &s.minors {
            for (name, torso, res) in [("expanded", &s.bundle.expanded, &m.expanded), ("compressed", x, &m.compressed)] {
                match res {
                    MinorResult::Minor(cert) if verify_minor_certificate(torso, g, cert) => t.count("minor-certified", 1),
                    MinorResult::Indeterminate => t.incomplete += 1,
                    other => t.fail("main/minor", g, format!("{name} torso is not certified a minor: {other:?}")),
                }
            }
        }
    }
}

/// The equivalences and one-way implications between the tri-separation notions.
pub fn check_equivalences(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let a = match compute_total_nested(g) {
        Ok(a) => a,
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    let mixed = match enumerate_mixed_separations(g, 3) {
        Ok(m) => m,
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    equivalences(g, &a, &mixed, &mut t);
    t
}

fn equivalences(g: &Graph, a: &TriAnalysis, mixed: &[MixedSeparation], t: &mut Tally) {
    let strong_nt = a.strong_nontrivial();
    let k4 = is_k4(g);
    for (&s, f) in a.all_tri.iter().zip(&a.flags) {
        t.count("tri-separations", 1);
        // Trivial exactly for the sides of atomic cuts.
        if f.is_trivial != is_atomic_cut(g, s) {
            t.fail("trivial", g, format!("{s:?}: trivial={} atomic={}", f.is_trivial, is_atomic_cut(g, s)));
        }
        if f.is_nontrivial {
            let tn = a.is_totally_nested(s);
            let alt = f.is_strong && strong_nt.iter().all(|&x| s.nested_with(x));
            if tn != alt {
                t.fail("expendable", g, format!("{s:?}: totally nested {tn}, strong and nested with strong {alt}"));
            }
            if tn && !f.is_half_connected {
                t.fail("totally-nested-half-connected", g, format!("{s:?}"));
            }
            let etc = externally_tri_connected(g, s).externally_tri_connected;
            if etc && f.is_half_connected && f.is_strong {
                t.count("externally-tri-connected", 1);
                if !tn {
                    t.fail("is-nested", g, format!("{s:?} passes the sufficient condition but crosses"));
                }
            }
        }
    }
    for &s in mixed.iter().filter(|s| s.order(g) == 3) {
        if is_nontrivial(g, s) && !s.separator(g).edges_form_matching() {
            t.fail("independent-edges", g, format!("{s:?}"));
        }
        if s.inter().is_empty() && !is_atomic_cut(g, s) {
            t.count("non-atomic-3-cuts", 1);
            if !a.n().contains(&s) {
                t.fail("3-cuts-nested", g, format!("{s:?} is not a totally-nested nontrivial tri-separation"));
            }
        }
    }
    let item1 = is_internally_4_connected(g) || k4 || is_k33(g);
    let item2 = k4 || vertex_three_separations(g).iter().all(|&s| !is_nontrivial(g, s));
    let item3 = k4 || a.flags.iter().all(|f| f.is_trivial);
    let item4 = strong_nt.is_empty();
    if !(item1 == item2 && item2 == item3 && item3 == item4) {
        t.fail("four-way", g, format!("items {item1} {item2} {item3} {item4}"));
    }
}

/// Shapes of the corner diagrams of all crossing pairs of nontrivial tri-separations.
pub fn check_crossing(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let a = match compute_total_nested(g) {
        Ok(a) => a,
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    let nt = a.nontrivial();
    for (i, &s1) in nt.iter().enumerate() {
        for &s2 in &nt[i + 1..] {
            if s1.nested_with(s2) {
                continue;
            }
            let (case, d) = crossing_case(g, s1, s2).expect("crossing pair");
            t.count("crossing-pairs", 1);
            match case {
                CrossingCase::K4Exception => {
                    t.count("k4-pairs", 1);
                    if !d.jumping_edges.is_empty() {
                        t.count("k4-jumping", 1);
                    }
                }
                CrossingCase::Neither => t.fail("crossing", g, format!("{s1:?} {s2:?}: neither shape")),
                CrossingCase::LinksOneCentreOne | CrossingCase::LinksEmptyCentreThree => {
                    t.count(if case == CrossingCase::LinksOneCentreOne { "case-links-one" } else { "case-centre-three" }, 1);
                    if !d.jumping_edges.is_empty() {
                        t.fail("crossing/jumping", g, format!("{s1:?} {s2:?}"));
                    }
                    if (is_half_connected(g, s1) || is_half_connected(g, s2)) && case != CrossingCase::LinksOneCentreOne {
                        t.fail("crossing/half-connected", g, format!("{s1:?} {s2:?}"));
                    }
                }
            }
        }
    }
    t
}

/// Every proper separation `(C,D)` of `x`: both strict sides nonempty, no edges between them.
pub fn proper_separations(x: &Graph) -> Vec<MixedSeparation> {
    let verts = x.vertices().to_vec();
    let k = verts.len();
    let mut out = Vec::new();
    let total = 3usize.pow(k as u32);
    for code in 0..total {
        let (mut a, mut b) = (VSet::EMPTY, VSet::EMPTY);
        let mut c = code;
        for &v in &verts {
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
        let s = MixedSeparation::new(a, b);
        if !s.strict_a().is_empty() && !s.strict_b().is_empty() && s.separator_edges(x).is_empty() {
            out.push(s);
        }
    }
    out
}

/// Largest compressed torso whose separations are enumerated exhaustively.
pub const HYPER_LIFT_MAX_TORSO: usize = 10;

/// The four hyper-lift guarantees for every proper separation of every compressed torso.
pub fn check_hyper_lift(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let d = match decompose(g) {
        Ok(d) => d,
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    for s in d.stars.iter().filter(|s| !s.star.is_empty()) {
        let x = &s.bundle.compressed;
        if x.n() > HYPER_LIFT_MAX_TORSO {
            t.incomplete += 1;
            continue;
        }
        for sep in proper_separations(x) {
            match hyper_lift(g, &s.bundle, sep) {
                Ok(l) => {
                    t.count("lifts", 1);
                    let props = hyper_lift_properties(g, &s.bundle, sep, l.separation);
                    for (i, ok) in props.iter().enumerate() {
                        if !ok {
                            t.fail(&format!("hyper-lift/{}", i + 1), g, format!("{sep:?} lifts to {:?}", l.separation));
                        }
                    }
                }
                Err(e) => t.fail("hyper-lift", g, e.to_string()),
            }
        }
    }
    t
}

/// `N(φ(G)) = φ(N(G))` and equal digests for each relabelling in `perms` (indexed by vertex id).
pub fn check_canonicity(g: &Graph, perms: &[Vec<Vertex>]) -> Tally {
    let mut t = Tally::default();
    let base = match compute_total_nested(g) {
        Ok(a) => a.n(),
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    let digest = canonical_digest(g, &base);
    for p in perms {
        let h = match g.relabel(|v| p[v]) {
            Ok(h) => h,
            Err(e) => {
                t.fail("canonicity", g, e.to_string());
                continue;
            }
        };
        let mut expected: Vec<MixedSeparation> = base.iter().map(|s| s.map(|v| p[v])).collect();
        let mut got = match compute_total_nested(&h) {
            Ok(a) => a.n(),
            Err(e) => {
                t.budget(g, e);
                continue;
            }
        };
        expected.sort_by_key(|s| (s.a, s.b));
        got.sort_by_key(|s| (s.a, s.b));
        t.count("relabellings", 1);
        if expected != got {
            t.fail("canonicity/n", g, format!("relabelling {p:?} changes N"));
        }
        if canonical_digest(&h, &got) != digest {
            t.fail("canonicity/digest", g, format!("relabelling {p:?} changes the digest"));
        }
    }
    t
}

/// Mixed-separation enumeration against the ternary oracle, for orders up to three.
pub fn check_enumeration_oracle(g: &Graph) -> Tally {
    let mut t = Tally::default();
    for k in 0..=3 {
        let mut fast = match enumerate_mixed_separations(g, k) {
            Ok(v) => v,
            Err(e) => {
                t.budget(g, e);
                return t;
            }
        };
        let mut slow = enumerate_by_bipartitions(g, k);
        fast.sort_by_key(|s| (s.a, s.b));
        slow.sort_by_key(|s| (s.a, s.b));
        t.count("separations", fast.len());
        if fast != slow {
            t.fail("enumeration-oracle", g, format!("order {k}: {} enumerated, {} by oracle", fast.len(), slow.len()));
        }
    }
    t
}

/// Splitting stars against the definition-checking oracle on the computed family.
pub fn check_star_oracle(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let a = match compute_total_nested(g) {
        Ok(a) => a,
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    match NestedFamily::new(a.n()) {
        Ok(f) => {
            let stars = splitting_stars(&f);
            t.count("stars", stars.len());
            if stars != splitting_stars_by_definition(&f) {
                t.fail("star-oracle", g, "splitting stars differ from the definition-checking oracle");
            }
        }
        Err(e) => t.fail("star-oracle", g, e.to_string()),
    }
    t
}

/// Minimal 3-connectivity gives a wheel, no type-c/d edges, independent vertex separators for
/// every totally-nested tri-separation, and no totally-nested nontrivial tri-separation.
pub fn check_tutte(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let r = match edge_types(g) {
        Ok(r) => r,
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    if !r.unsound.is_empty() {
        t.fail("edge-type-soundness", g, format!("{:?}", r.unsound));
    }
    if !r.minimally_3_connected {
        return t;
    }
    t.count("minimally-3-connected", 1);
    if !is_wheel(g) {
        t.fail("tutte/wheel", g, "minimally 3-connected but not a wheel");
    }
    if r.edges.iter().any(|e| e.type_c || e.type_d) {
        t.fail("tutte/edge-types", g, "minimally 3-connected graph with a type-c or type-d edge");
    }
    let a = match compute_total_nested(g) {
        Ok(a) => a,
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    for &s in a.all_tri.iter().filter(|&&s| a.is_totally_nested(s)) {
        t.count("totally-nested", 1);
        let x = s.inter();
        if !(x.len() == 3 && s.separator_edges(g).is_empty() && g.count_edges_within(x) == 0) {
            t.fail("tutte/totally-nice", g, format!("{s:?}"));
        }
    }
    if !a.n_indices.is_empty() {
        t.fail("tutte/no-sep", g, format!("{} totally-nested nontrivial tri-separations", a.n_indices.len()));
    }
    t
}

/// Essentially 4-connected, a cycle, or complete on at most four vertices; with the separator
/// shape of orbit-minimal elements of N.
pub fn check_vertex_transitive(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let complete_small = g.is_complete() && g.n() <= 4;
    let is_cycle = g.n() >= 3 && g.is_cycle();
    if complete_small || is_cycle {
        t.count(if complete_small { "complete" } else { "cycle" }, 1);
        return t;
    }
    if !is_k_connected(g, 3) {
        t.fail("vtx/3-connected", g, "neither a cycle, small complete, nor 3-connected");
        return t;
    }
    let a = match compute_total_nested(g) {
        Ok(a) => a,
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    if is_essentially_4_connected(g, &a) {
        t.count("essentially-4-connected", 1);
    } else {
        t.fail("vtx", g, "not essentially 4-connected");
    }
    let n = a.n();
    if n.is_empty() {
        return t;
    }
    t.count("with-n", 1);
    let sym = symmetry(g);
    let apply = |gen: &Vec<Option<Vertex>>, s: MixedSeparation| s.map(|v| gen[v].expect("vertex of the graph"));
    let mut done: HashSet<MixedSeparation> = HashSet::new();
    for &s0 in &n {
        if done.contains(&s0) {
            continue;
        }
        let mut orbit = vec![s0, s0.flip()];
        let mut seen: HashSet<MixedSeparation> = orbit.iter().copied().collect();
        let mut i = 0;
        while i < orbit.len() {
            for gen in &sym.generators {
                let x = apply(gen, orbit[i]);
                if seen.insert(x) {
                    orbit.push(x);
                }
            }
            i += 1;
        }
        done.extend(orbit.iter().copied());
        for &u in orbit.iter().filter(|&&u| !orbit.iter().any(|&x| x.lt(u))) {
            t.count("orbit-minimal", 1);
            let three_edges = u.inter().is_empty() && u.separator_edges(g).len() == 3;
            let triangle = u.a.len() == 3 && g.count_edges_within(u.a) == 3;
            if !three_edges {
                t.fail("vtx/three-cut", g, format!("{u:?}"));
            }
            if !triangle {
                t.fail("vtx/triangle-side", g, format!("{u:?}"));
            }
        }
    }
    t
}

/// The tree-decomposition induced by the totally-nested 2-separations and its two properties, the
/// crossing shapes, and external 2-connectivity against total nestedness.
pub fn check_two_separations(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let td = match two_sep_decomposition(g) {
        Ok(td) => td,
        Err(Error::Budget { .. }) => {
            t.incomplete += 1;
            return t;
        }
        Err(e) => {
            t.fail("2sep/decomposition", g, e.to_string());
            return t;
        }
    };
    if let Err(msg) = td.validate(g) {
        t.fail("2sep/tree", g, msg);
    }
    for (i, x) in td.torsos.iter().enumerate() {
        t.count(&format!("torso/{}", td.torso_kinds[i].as_str()), 1);
        match is_minor(x, g, crate::budget::minor_budget()) {
            MinorResult::Minor(c) if verify_minor_certificate(x, g, &c) => {}
            MinorResult::Indeterminate => t.incomplete += 1,
            other => t.fail("2sep/minor", g, format!("torso {x:?}: {other:?}")),
        }
        if td.torso_kinds[i] == TwoSepTorso::Cycle {
            let mut adhesions: Vec<VSet> = (0..td.edges.len())
                .filter(|&e| td.edges[e].0 == i || td.edges[e].1 == i)
                .map(|e| td.adhesion(e))
                .collect();
            let k = adhesions.len();
            adhesions.sort();
            adhesions.dedup();
            if adhesions.len() != k {
                t.fail("2sep/property-2", g, format!("cycle node {i} repeats an adhesion set"));
            }
        }
    }
    let all = match two_separations(g) {
        Ok(v) => v,
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    for (i, &s) in all.iter().enumerate() {
        let tn = is_totally_nested_among(s, &all);
        if tn != externally_2_connected(g, s) {
            t.fail("2sep/externally-2-connected", g, format!("{s:?}: totally nested {tn}"));
        }
        for &r in &all[i + 1..] {
            if !s.nested_with(r) {
                t.count("crossing-2-separations", 1);
                if let Err(e) = classify_2sep_crossing(g, s, r) {
                    t.fail("2sep/crossing", g, e.to_string());
                }
            }
        }
    }
    let mixed = match mixed_two_separations(g) {
        Ok(v) => v,
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    for (i, &s) in mixed.iter().enumerate() {
        for &r in &mixed[i + 1..] {
            if s.nested_with(r) {
                continue;
            }
            let d = corner_diagram(g, s, r);
            if Side::ALL.iter().all(|&x| d.link(x).size() == 1) && d.centre_size() == 0 {
                t.count("alternating-pairs", 1);
                let nodes = alternating_cycle_nodes(&td, g, s, r);
                if nodes.len() != 1 {
                    t.fail("2sep/property-1", g, format!("{s:?} {r:?}: {} alternating cycle nodes", nodes.len()));
                }
            }
        }
    }
    t
}

/// Apex-decompositions from every crossing pair of tri-separations whose separators meet in one
/// vertex with all links of size one: existence, cycle type, tri-star membership in N, and the
/// separator shape of tri-separations almost interlacing the tri-star.
pub fn check_apex(g: &Graph) -> Tally {
    let mut t = Tally::default();
    let a = match compute_total_nested(g) {
        Ok(a) => a,
        Err(e) => {
            t.budget(g, e);
            return t;
        }
    };
    let n = a.n();
    for (i, &s1) in a.all_tri.iter().enumerate() {
        for &s2 in &a.all_tri[i + 1..] {
            if s1.nested_with(s2) {
                continue;
            }
            let d = corner_diagram(g, s1, s2);
            if !(Side::ALL.iter().all(|&x| d.link(x).size() == 1) && d.centre_vertices.len() == 1 && d.diagonal_edges.is_empty()) {
                continue;
            }
            t.count("setting-pairs", 1);
            let apex = match apex_from_crossing(g, s1, s2) {
                Ok(x) => x,
                Err(e) => {
                    t.fail("apex/exists", g, format!("{s1:?} {s2:?}: {e}"));
                    continue;
                }
            };
            if !apex.is_two_connected(g) {
                t.fail("apex/2-connected", g, format!("{s1:?} {s2:?}"));
            }
            let star = match apex_tri_star(&apex, g) {
                Ok(x) => x,
                Err(e) => {
                    t.fail("apex/tri-star", g, e.to_string());
                    continue;
                }
            };
            let interlaced = |s: MixedSeparation| interlaces(s, &star) || interlaces(s.flip(), &star);
            if !interlaced(s1) || !interlaced(s2) {
                t.fail("apex/interlaced", g, format!("{s1:?} {s2:?}"));
            }
            let word = apex.type_word();
            t.count(&format!("type/{}", canonical_word(&word)), 1);
            let cw = canonical_word(&word);
            if cw == "bbt" || cw == "bbb" || apex.is_btbt_minus(g) {
                t.fail("apex/type", g, format!("forbidden type {word}"));
            }
            if apex.rim.len() == 3 && (!(cw == "ttt" || cw == "btt") || apex.rim.iter().any(|&x| !g.has_edge(apex.centre, x))) {
                t.fail("apex/length-three", g, format!("type {word}"));
            }
            for &m in star.members() {
                if !n.contains(&m) {
                    t.fail("apex/splitting", g, format!("tri-star member {m:?} is not in N"));
                }
            }
            let v = apex.centre;
            for (&c, f) in a.all_tri.iter().zip(&a.flags) {
                if !almost_interlaces(c, &star) {
                    continue;
                }
                t.count("almost-interlacing", 1);
                let sep = separator_elements(g, c);
                let at_v = sep.iter().any(|&e| match e {
                    RimElement::Vertex(x) => x == v,
                    RimElement::Edge(e) => e.has_end(v),
                });
                if !at_v {
                    t.fail("apex/centre-in-separator", g, format!("{c:?}"));
                }
                if f.is_strong && f.is_nontrivial && !apex.is_red_separator(g, &apex.separator_on_rim(g, c)) {
                    t.fail("apex/red", g, format!("{c:?}"));
                }
            }
        }
    }
    t
}

/// Lexicographically least rotation or reflection of a cyclic word.
pub fn canonical_word(w: &str) -> String {
    let chars: Vec<char> = w.chars().collect();
    let k = chars.len();
    let mut best: Option<String> = None;
    for rev in [false, true] {
        for r in 0..k {
            let s: String = (0..k)
                .map(|i| if rev { chars[(r + k - i) % k] } else { chars[(r + i) % k] })
                .collect();
            if best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
        }
    }
    best.unwrap_or_default()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Suite {
    Angry,
    Main,
    Tutte,
    Vtx,
    TwoSep,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Angry, Suite::Main, Suite::Tutte, Suite::Vtx, Suite::TwoSep];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Angry => "angry",
            Suite::Main => "main",
            Suite::Tutte => "tutte",
            Suite::Vtx => "vtx",
            Suite::TwoSep => "2sep",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.as_str() == s)
    }
}

/// Named family members run by the main suite in addition to the exhaustive corpus.
pub const DEFAULT_FAMILIES: &[(&str, &[u64])] = &[
    ("wheel", &[4]),
    ("wheel", &[8]),
    ("k3m", &[3]),
    ("k3m", &[6]),
    ("thickened-k3m", &[2]),
    ("grid3k", &[4]),
    ("grid3k", &[6]),
    ("necklace", &[3]),
    ("figord", &[6]),
    ("figord", &[10]),
    ("k10prism", &[10]),
    ("genwheel", &[5, 0b11001, 0b00110]),
    ("k3m-with-triangles", &[0]),
    ("k3m-with-triangles", &[2]),
    ("petersen", &[]),
];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub max_n: usize,
    pub families: Vec<(String, Vec<u64>)>,
}

impl Default for SuiteOptions {
    fn default() -> SuiteOptions {
        SuiteOptions { max_n: 7, families: Vec::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub graphs: usize,
    pub tally: Tally,
    /// No graph was skipped for budget reasons.
    pub complete: bool,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.tally.failures.is_empty()
    }
}

/// Builds the corpus of a suite and runs its checks.
pub fn verify_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut named = Vec::new();
    for (f, p) in &opts.families {
        named.push(canonical_form(&generate(f, p)?));
    }
    let graphs: Vec<Graph> = match suite {
        Suite::Vtx => {
            let mut v = vertex_transitive_corpus(opts.max_n)?;
            v.extend(named);
            v
        }
        Suite::TwoSep => {
            let mut v = two_connected(&corpus(opts.max_n));
            v.extend(named.into_iter().filter(|g| is_k_connected(g, 2)));
            v
        }
        _ => {
            let mut v = three_connected(&corpus(opts.max_n));
            v.extend(named.into_iter().filter(|g| is_k_connected(g, 3)));
            v
        }
    };
    let tally = match suite {
        Suite::Angry => run_checks(&graphs, check_angry),
        Suite::Main => run_checks(&graphs, |g| {
            let mut t = check_main(g);
            t.merge(check_apex(g));
            t
        }),
        Suite::Tutte => run_checks(&graphs, check_tutte),
        Suite::Vtx => run_checks(&graphs, check_vertex_transitive),
        Suite::TwoSep => run_checks(&graphs, check_two_separations),
    };
    let complete = tally.incomplete == 0;
    Ok(SuiteReport { suite: suite.as_str().to_string(), graphs: graphs.len(), tally, complete })
}

/// Smallest `n >= from` for which the scaled figure graph has exactly one strong nontrivial
/// tri-separation up to flipping and a quasi-4-connected, not internally 4-connected torso.
pub fn figord_threshold(from: usize, to: usize) -> Result<Option<usize>> {
    for n in from..=to {
        let g = crate::generate::figord(n)?;
        let d = decompose(&g)?;
        let strong = d.analysis.strong_nontrivial();
        let witnessed = d.stars.iter().any(|s| {
            is_quasi_4_connected(&s.bundle.compressed) && !is_internally_4_connected(&s.bundle.compressed)
        });
        if strong.len() == 2 && strong[0] == strong[1].flip() && witnessed {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, k3m, petersen, wheel};

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn edge_types_of_examples() {
        let r = edge_types(&k3m(3).unwrap()).unwrap();
        assert!(r.edges.iter().all(|e| e.type_c));
        let r = edge_types(&wheel(5).unwrap()).unwrap();
        assert!(r.edges.iter().all(|e| !e.type_c && !e.type_d));
        assert!(r.minimally_3_connected);
        let r = edge_types(&complete(5).unwrap()).unwrap();
        assert!(r.unsound.is_empty());
        assert!(!r.minimally_3_connected);
    }

    #[test]
    fn grades_of_examples() {
        assert!(connectivity_grades(&k3m(3).unwrap()).unwrap().essentially_4);
        assert!(connectivity_grades(&petersen()).unwrap().essentially_4);
        assert_eq!(connectivity_grades(&wheel(3).unwrap()).unwrap(), ConnectivityGrades::default());
    }

    #[test]
    fn words_up_to_symmetry() {
        assert_eq!(canonical_word("tbb"), "bbt");
        assert_eq!(canonical_word("tbtb"), "btbt");
        assert_eq!(canonical_word("ttb"), "btt");
    }

    #[test]
    fn small_vertex_transitive() {
        let v = vertex_transitive_corpus(6).unwrap();
        // K1, K2, K3, C4, K4, C5, K5, and on six vertices: C6, K3,3, prism, octahedron, K6.
        assert_eq!(v.len(), 12);
    }
}
