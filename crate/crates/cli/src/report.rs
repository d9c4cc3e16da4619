//! Serializable reports and their JSON, DOT and text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use trisep::decompose::{DecompositionResult, TorsoTag};
use trisep::graph::{Edge, Graph};
use trisep::minor::{verify_minor_certificate, MinorResult};
use trisep::separation::MixedSeparation;
use trisep::twosep::TreeDecomposition;
use trisep::vset::VSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInfo {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub digest: Option<String>,
}

impl GraphInfo {
    pub fn of(g: &Graph) -> GraphInfo {
        GraphInfo { n: g.n(), m: g.m(), edges: edge_pairs(&g.edges()), digest: None }
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new();
        for &[u, v] in &self.edges {
            g.add_edge(u, v).expect("report edges are simple");
        }
        g
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorEntry {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationEntry {
    #[serde(rename = "sideA")]
    pub side_a: Vec<usize>,
    #[serde(rename = "sideB")]
    pub side_b: Vec<usize>,
    pub separator: SeparatorEntry,
}

impl SeparationEntry {
    pub fn of(g: &Graph, s: MixedSeparation) -> SeparationEntry {
        let sep = s.separator(g);
        SeparationEntry {
            side_a: s.a.to_vec(),
            side_b: s.b.to_vec(),
            separator: SeparatorEntry { vertices: sep.vertices.to_vec(), edges: edge_pairs(&sep.edges) },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsoEntry {
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hub: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rim: Option<Vec<usize>>,
    /// Vertices and edges of the compressed torso.
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    /// Torso vertices on the separator of each member, in member order.
    pub separators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table_violation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarEntry {
    /// Indices into `n_family`.
    pub members: Vec<usize>,
    pub bag: Vec<usize>,
    pub torso: TorsoEntry,
    pub interlace: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    /// Every torso has one of the shapes of the classification.
    pub classified: bool,
    /// Every torso has the shape its interlacing predicts.
    pub table_respected: bool,
    /// `certified`, `failed`, `indeterminate` or `skipped` (graph too large).
    pub minors: String,
}

impl Verdicts {
    pub fn all_hold(&self) -> bool {
        self.classified && self.table_respected && self.minors != "failed"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub graph: GraphInfo,
    pub n_family: Vec<SeparationEntry>,
    pub stars: Vec<StarEntry>,
    pub verdicts: Verdicts,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

fn edge_pairs(edges: &[Edge]) -> Vec<[usize; 2]> {
    let mut out: Vec<[usize; 2]> = edges.iter().map(|e| [e.0.min(e.1), e.0.max(e.1)]).collect();
    out.sort();
    out
}

impl Report {
    pub fn from_decomposition(d: &DecompositionResult) -> Report {
        let g = &d.graph;
        let mut graph = GraphInfo::of(g);
        graph.digest = Some(d.digest.clone());
        let n_family = d.n.iter().map(|&s| SeparationEntry::of(g, s)).collect();
        let mut minors = if d.stars.iter().all(|s| s.minors.is_some()) { "certified" } else { "skipped" };
        let stars = d
            .stars
            .iter()
            .map(|s| {
                let b = &s.bundle;
                let x = &b.compressed;
                if let Some(m) = &s.minors {
                    for (h, r) in [(&b.expanded, &m.expanded), (x, &m.compressed)] {
                        match r {
                            MinorResult::Minor(cert) if verify_minor_certificate(h, g, cert) => {}
                            MinorResult::Indeterminate if minors != "failed" => minors = "indeterminate",
                            _ => minors = "failed",
                        }
                    }
                }
                let separators = s
                    .star
                    .members()
                    .iter()
                    .map(|m| (m.map(|v| b.merge.resolve(v)).inter() & x.vertices()).to_vec())
                    .collect();
                StarEntry {
                    members: s.member_indices.clone(),
                    bag: b.bag.to_vec(),
                    torso: TorsoEntry {
                        class: s.class.tag.as_str().to_string(),
                        m: s.class.m,
                        hub: s.class.hub,
                        rim: s.class.rim.clone(),
                        vertices: x.vertices().to_vec(),
                        edges: edge_pairs(&x.edges()),
                        separators,
                        table_violation: s.class.table_violation.clone(),
                    },
                    interlace: s.class.interlace.as_str().to_string(),
                }
            })
            .collect();
        let verdicts = Verdicts {
            classified: d.stars.iter().all(|s| s.class.tag != TorsoTag::Other),
            table_respected: d.stars.iter().all(|s| s.class.matches_table()),
            minors: minors.to_string(),
        };
        Report { graph, n_family, stars, verdicts, timing_ms: None }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    /// One DOT graph per torso, named `torso<i>`.
    pub fn dot_files(&self) -> Vec<(String, String)> {
        self.stars.iter().enumerate().map(|(i, s)| (format!("torso{i}"), torso_dot(i, s))).collect()
    }

    pub fn to_dot(&self) -> String {
        self.dot_files().into_iter().map(|(_, d)| d).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        let _ = writeln!(out, "graph: {} vertices, {} edges", g.n, g.m);
        if let Some(d) = &g.digest {
            let _ = writeln!(out, "digest: {d}");
        }
        let _ = writeln!(out, "totally-nested nontrivial tri-separations: {}", self.n_family.len());
        for (i, s) in self.n_family.iter().enumerate() {
            let edges: Vec<String> = s.separator.edges.iter().map(|[u, v]| format!("{u}-{v}")).collect();
            let _ = writeln!(
                out,
                "  [{i}] A={:?} B={:?} separator vertices {:?} edges [{}]",
                s.side_a,
                s.side_b,
                s.separator.vertices,
                edges.join(" ")
            );
        }
        let _ = writeln!(out, "splitting stars: {}", self.stars.len());
        for (i, s) in self.stars.iter().enumerate() {
            let t = &s.torso;
            let mut line = format!("  star {i} members {:?} bag {:?}: {} torso, {} interlacing", s.members, s.bag, t.class, s.interlace);
            if let Some(m) = t.m {
                line += &format!(", m={m}");
            }
            if let (Some(h), Some(r)) = (t.hub, &t.rim) {
                line += &format!(", hub {h} rim {r:?}");
            }
            if let Some(v) = &t.table_violation {
                line += &format!(" [violation: {v}]");
            }
            let _ = writeln!(out, "{line}");
        }
        let v = &self.verdicts;
        let _ = writeln!(out, "verdicts: classified={} table_respected={} minors={}", v.classified, v.table_respected, v.minors);
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "time: {ms} ms");
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Dot => self.to_dot(),
            OutputFormat::Text => self.to_text(),
        }
    }
}

fn torso_dot(i: usize, s: &StarEntry) -> String {
    let t = &s.torso;
    let on_separator: VSet = t.separators.iter().flatten().copied().collect();
    let mut out = format!("graph torso{i} {{\n  label=\"star {i}: {} ({})\";\n", t.class, s.interlace);
    for &v in &t.vertices {
        if on_separator.contains(v) {
            let _ = writeln!(out, "  {v} [color=red, style=filled, fillcolor=mistyrose];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for &[u, v] in &t.edges {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSepNode {
    pub bag: Vec<usize>,
    pub kind: String,
    pub torso_edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSepEdge {
    pub from: usize,
    pub to: usize,
    pub adhesion: Vec<usize>,
}

/// The 2-separation tree-decomposition of a 2-connected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSepReport {
    pub graph: GraphInfo,
    pub n_family: Vec<SeparationEntry>,
    pub nodes: Vec<TwoSepNode>,
    pub tree_edges: Vec<TwoSepEdge>,
}

impl TwoSepReport {
    pub fn new(g: &Graph, td: &TreeDecomposition) -> TwoSepReport {
        TwoSepReport {
            graph: GraphInfo::of(g),
            n_family: td.n.iter().map(|&s| SeparationEntry::of(g, s)).collect(),
            nodes: (0..td.bags.len())
                .map(|t| TwoSepNode {
                    bag: td.bags[t].to_vec(),
                    kind: td.torso_kinds[t].as_str().to_string(),
                    torso_edges: edge_pairs(&td.torsos[t].edges()),
                })
                .collect(),
            tree_edges: td
                .edges
                .iter()
                .enumerate()
                .map(|(e, &(from, to, _))| TwoSepEdge { from, to, adhesion: td.adhesion(e).to_vec() })
                .collect(),
        }
    }
}
