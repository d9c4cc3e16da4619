//! The canonical decomposition of a 3-connected graph along its totally-nested nontrivial
//! tri-separations, torso classification, and the trichotomy for the whole graph.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::symmetry;
use crate::minor::{is_minor, MinorResult};
use crate::recognize::{
    generalised_wheel, is_internally_4_connected, is_k4, is_quasi_4_connected, is_wheel, k3m_witness,
    thickened_k3m_witness, wheel_witness, GeneralisedWheel,
};
use crate::separation::{sort_separations, MixedSeparation};
use crate::star::{interlace_kind, splitting_stars, torsos, InterlaceKind, NestedFamily, OrientedStar, TorsoBundle};
use crate::tri::{compute_total_nested, TriAnalysis};
use crate::vset::{VSet, Vertex};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

/// Largest graph for which torsos get minor certificates.
pub const MINOR_CERTIFICATE_MAX_N: usize = 8;

/// Which kinds of strong nontrivial tri-separations interlace a star.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum StarInterlace {
    None,
    Light,
    Heavy,
    /// Both kinds occur; only possible when the compressed torso is `K_4`.
    LightAndHeavy,
}

impl StarInterlace {
    pub fn as_str(self) -> &'static str {
        match self {
            StarInterlace::None => "none",
            StarInterlace::Light => "light",
            StarInterlace::Heavy => "heavy",
            StarInterlace::LightAndHeavy => "light+heavy",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum TorsoTag {
    Quasi4Connected,
    K4,
    K3,
    Wheel,
    ThickenedK3m,
    WholeGraphK3m,
    /// None of the shapes above.
    Other,
}

impl TorsoTag {
    pub fn as_str(self) -> &'static str {
        match self {
            TorsoTag::Quasi4Connected => "quasi-4-connected",
            TorsoTag::K4 => "K4",
            TorsoTag::K3 => "K3",
            TorsoTag::Wheel => "wheel",
            TorsoTag::ThickenedK3m => "thickened-K3m",
            TorsoTag::WholeGraphK3m => "whole-graph-K3m",
            TorsoTag::Other => "other",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsoClass {
    pub tag: TorsoTag,
    pub interlace: StarInterlace,
    /// `m` for the `K_{3,m}` tags.
    pub m: Option<usize>,
    /// The triangle or the class of size three for the `K_{3,m}` tags.
    pub triangle: Option<VSet>,
    pub hub: Option<Vertex>,
    pub rim: Option<Vec<Vertex>>,
    /// The expanded torso as a concrete generalised wheel, for heavily interlaced stars.
    pub expanded_wheel: Option<GeneralisedWheel>,
    /// A strong nontrivial tri-separation interlacing the star, if any.
    pub interlacer: Option<MixedSeparation>,
    /// Why the torso falls outside the shape expected for its interlacing, if it does.
    pub table_violation: Option<String>,
}

impl TorsoClass {
    fn new(tag: TorsoTag, interlace: StarInterlace) -> TorsoClass {
        TorsoClass {
            tag,
            interlace,
            m: None,
            triangle: None,
            hub: None,
            rim: None,
            expanded_wheel: None,
            interlacer: None,
            table_violation: None,
        }
    }

    pub fn matches_table(&self) -> bool {
        self.table_violation.is_none()
    }
}

fn observed_tag(bundle: &TorsoBundle, g: &Graph) -> TorsoTag {
    let x = &bundle.compressed;
    if is_k4(x) {
        TorsoTag::K4
    } else if x.n() == 3 && x.is_complete() {
        TorsoTag::K3
    } else if wheel_witness(x).is_some() {
        TorsoTag::Wheel
    } else if thickened_k3m_witness(x).is_some() {
        TorsoTag::ThickenedK3m
    } else if bundle.star.is_empty() && k3m_witness(g).is_some() {
        TorsoTag::WholeGraphK3m
    } else if is_quasi_4_connected(x) {
        TorsoTag::Quasi4Connected
    } else {
        TorsoTag::Other
    }
}

/// Summarises how the strong nontrivial tri-separations of `g` interlace `star`, with the first
/// interlacer found.
pub fn star_interlace(g: &Graph, star: &OrientedStar, t: &TriAnalysis) -> (StarInterlace, Option<MixedSeparation>) {
    let (mut light, mut heavy, mut first) = (false, false, None);
    for s in t.strong_nontrivial() {
        match interlace_kind(g, s, star) {
            InterlaceKind::Light => light = true,
            InterlaceKind::Heavy => heavy = true,
            _ => continue,
        }
        first.get_or_insert(s);
    }
    let kind = match (light, heavy) {
        (false, false) => StarInterlace::None,
        (true, false) => StarInterlace::Light,
        (false, true) => StarInterlace::Heavy,
        (true, true) => StarInterlace::LightAndHeavy,
    };
    (kind, first)
}

/// Classifies the torsos of a splitting star of `N` according to how the star is interlaced.
/// A torso outside the expected shape keeps its observed tag and records the mismatch.
pub fn classify_torso(bundle: &TorsoBundle, interlace: StarInterlace, g: &Graph) -> TorsoClass {
    let x = &bundle.compressed;
    let mismatch = |what: &str| {
        let mut c = TorsoClass::new(observed_tag(bundle, g), interlace);
        c.table_violation = Some(format!("compressed torso with {} interlacing is not {what}: {x:?}", interlace.as_str()));
        c
    };
    let wheel_part = |class: &mut TorsoClass| -> Option<TorsoClass> {
        let Some(w) = wheel_witness(x) else { return Some(mismatch("a wheel")) };
        class.hub = Some(w.hub);
        class.rim = Some(w.rim);
        match generalised_wheel(&bundle.expanded) {
            Some(gw) => class.expanded_wheel = Some(gw),
            None => {
                class.table_violation =
                    Some(format!("expanded torso is not a generalised wheel: {:?}", bundle.expanded));
            }
        }
        None
    };
    match interlace {
        StarInterlace::None => {
            let tag = if is_quasi_4_connected(x) {
                TorsoTag::Quasi4Connected
            } else if is_k4(x) {
                TorsoTag::K4
            } else if x.n() == 3 && x.is_complete() {
                TorsoTag::K3
            } else {
                return mismatch("quasi 4-connected, K4 or K3");
            };
            TorsoClass::new(tag, interlace)
        }
        StarInterlace::Light => {
            if let Some((t, m)) = thickened_k3m_witness(x) {
                let mut c = TorsoClass::new(TorsoTag::ThickenedK3m, interlace);
                c.m = Some(m);
                c.triangle = Some(t);
                return c;
            }
            match k3m_witness(g) {
                Some((t, m)) if bundle.star.is_empty() => {
                    let mut c = TorsoClass::new(TorsoTag::WholeGraphK3m, interlace);
                    c.m = Some(m);
                    c.triangle = Some(t);
                    c
                }
                _ => mismatch("a thickened K3m, nor is the graph a K3m"),
            }
        }
        StarInterlace::Heavy => {
            let tag = if is_k4(x) { TorsoTag::K4 } else { TorsoTag::Wheel };
            let mut c = TorsoClass::new(tag, interlace);
            wheel_part(&mut c).unwrap_or(c)
        }
        StarInterlace::LightAndHeavy => {
            if !is_k4(x) {
                return mismatch("K4");
            }
            let mut c = TorsoClass::new(TorsoTag::K4, interlace);
            if let Some(bad) = wheel_part(&mut c) {
                return bad;
            }
            let (t, m) = thickened_k3m_witness(x).expect("K4 is a thickened K31");
            c.m = Some(m);
            c.triangle = Some(t);
            c
        }
    }
}

/// Branch-set certificates that both torsos are minors of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorCertificates {
    pub expanded: MinorResult,
    pub compressed: MinorResult,
}

#[derive(Clone, Debug)]
pub struct StarResult {
    pub star: OrientedStar,
    /// Positions of the members in the decomposition's `n` list.
    pub member_indices: Vec<usize>,
    pub bundle: TorsoBundle,
    pub class: TorsoClass,
    pub minors: Option<MinorCertificates>,
}

#[derive(Clone, Debug)]
pub struct DecompositionResult {
    pub graph: Graph,
    pub analysis: TriAnalysis,
    /// The totally-nested nontrivial tri-separations in canonical sorted order.
    pub n: Vec<MixedSeparation>,
    pub stars: Vec<StarResult>,
    /// Hex SHA-256 over the canonical form of the graph and of `n`.
    pub digest: String,
}

/// Decomposes a 3-connected graph.
pub fn decompose(g: &Graph) -> Result<DecompositionResult> {
    let analysis = compute_total_nested(g)?;
    let mut n = analysis.n();
    sort_separations(g, &mut n);
    let family = NestedFamily::new(n.clone())?;
    let stars = splitting_stars(&family);
    let results: Result<Vec<StarResult>> = stars
        .into_par_iter()
        .map(|star| {
            let bundle = torsos(g, &star)?;
            let (interlace, interlacer) = star_interlace(g, &star, &analysis);
            let mut class = classify_torso(&bundle, interlace, g);
            class.interlacer = interlacer;
            let minors = (g.n() <= MINOR_CERTIFICATE_MAX_N).then(|| MinorCertificates {
                expanded: is_minor(&bundle.expanded, g, crate::budget::minor_budget()),
                compressed: is_minor(&bundle.compressed, g, crate::budget::minor_budget()),
            });
            let member_indices = star.members().iter().map(|s| n.iter().position(|t| t == s).unwrap()).collect();
            Ok(StarResult { star, member_indices, bundle, class, minors })
        })
        .collect();
    let digest = canonical_digest(g, &n);
    Ok(DecompositionResult { graph: g.clone(), analysis, n, stars: results?, digest })
}

/// SHA-256 of the canonical code of `g` followed by the canonically relabelled separations.
pub fn canonical_digest(g: &Graph, seps: &[MixedSeparation]) -> String {
    let sym = symmetry(g);
    let pos = |v: Vertex| sym.position[v].expect("vertex of the graph");
    let mut encoded: Vec<(u64, u64)> = seps.iter().map(|s| (s.a.map(pos).0, s.b.map(pos).0)).collect();
    encoded.sort();
    let mut h = Sha256::new();
    h.update(sym.code.to_hex().as_bytes());
    for (a, b) in encoded {
        h.update(a.to_le_bytes());
        h.update(b.to_le_bytes());
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum AngryOutcome {
    HasTotallyNestedNontrivial,
    WheelOrK3m,
    Internally4Connected,
}

impl AngryOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            AngryOutcome::HasTotallyNestedNontrivial => "has-totally-nested-nontrivial",
            AngryOutcome::WheelOrK3m => "wheel-or-K3m",
            AngryOutcome::Internally4Connected => "internally-4-connected",
        }
    }
}

/// The three outcomes, each evaluated independently.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AngryReport {
    pub has_totally_nested_nontrivial: bool,
    pub wheel_or_k3m: bool,
    pub internally_4_connected: bool,
}

impl AngryReport {
    pub fn outcomes(&self) -> Vec<AngryOutcome> {
        let mut v = Vec::new();
        if self.has_totally_nested_nontrivial {
            v.push(AngryOutcome::HasTotallyNestedNontrivial);
        }
        if self.wheel_or_k3m {
            v.push(AngryOutcome::WheelOrK3m);
        }
        if self.internally_4_connected {
            v.push(AngryOutcome::Internally4Connected);
        }
        v
    }
}

pub fn angry_report(g: &Graph, t: &TriAnalysis) -> AngryReport {
    AngryReport {
        has_totally_nested_nontrivial: !t.n_indices.is_empty(),
        wheel_or_k3m: is_wheel(g) || matches!(k3m_witness(g), Some((_, m)) if m >= 3),
        internally_4_connected: is_internally_4_connected(g),
    }
}

/// Exactly one outcome of the trichotomy; an error carrying the report otherwise.
pub fn angry_classify(g: &Graph) -> Result<(AngryOutcome, AngryReport)> {
    let t = compute_total_nested(g)?;
    let r = angry_report(g, &t);
    match r.outcomes().as_slice() {
        [one] => Ok((*one, r)),
        other => Err(Error::Classification(format!("{} trichotomy outcomes hold for {g:?}: {r:?}", other.len()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{k3m, wheel};

    #[test]
    fn wheel_is_one_wheel_torso() {
        let d = decompose(&wheel(6).unwrap()).unwrap();
        assert!(d.n.is_empty());
        assert_eq!(d.stars.len(), 1);
        assert_eq!(d.stars[0].class.tag, TorsoTag::Wheel);
    }

    #[test]
    fn k3m_is_whole_graph_case() {
        let g = k3m(4).unwrap();
        let d = decompose(&g).unwrap();
        assert_eq!(d.stars[0].class.tag, TorsoTag::WholeGraphK3m);
        assert_eq!(angry_classify(&g).unwrap().0, AngryOutcome::WheelOrK3m);
    }
}
