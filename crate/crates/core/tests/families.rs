use trisep::decompose::{angry_classify, decompose, AngryOutcome, StarInterlace, TorsoTag};
use trisep::generate::{generate, grid3k, k3m, necklace, petersen, thickened_k3m, wheel, FAMILIES};
use trisep::graph::Graph;
use trisep::recognize::generalised_wheel;
use trisep::tri::compute_total_nested;
use trisep::twosep::{two_sep_decomposition, TwoSepTorso};
use trisep::verify::{connectivity_grades, figord_threshold};

fn heavy_triangle_graph() -> Graph {
    let edges = [(0, 3), (0, 5), (0, 6), (1, 2), (1, 5), (1, 6), (2, 4), (2, 6), (3, 4), (3, 5), (4, 5), (4, 6)];
    Graph::from_edges(7, &edges).unwrap()
}

#[test]
fn every_family_generates() {
    for f in FAMILIES {
        let params: &[u64] = match *f {
            "wheel" | "necklace" | "grid3k" => &[4],
            "genwheel" => &[5, 0b11001, 0b00110],
            "figord" | "k10prism" => &[6],
            "hexgrid" => &[3, 4],
            "circulant" => &[8, 1, 2],
            _ => &[3],
        };
        let g = generate(f, params).unwrap_or_else(|e| panic!("{f}: {e}"));
        assert!(g.n() > 0, "{f}");
    }
}

#[test]
fn wheels_and_k3m_have_no_totally_nested_tri_separations() {
    for rim in 4..=7 {
        assert!(compute_total_nested(&wheel(rim).unwrap()).unwrap().n().is_empty());
    }
    let (o, _) = angry_classify(&k3m(4).unwrap()).unwrap();
    assert_eq!(o, AngryOutcome::WheelOrK3m);
}

#[test]
fn petersen_is_essentially_four_connected() {
    let grades = connectivity_grades(&petersen()).unwrap();
    assert!(grades.essentially_4);
    assert!(decompose(&petersen()).unwrap().n.is_empty());
}

#[test]
fn necklace_separators_are_an_edge_and_two_vertices() {
    let g = necklace(3).unwrap();
    let d = decompose(&g).unwrap();
    assert!(!d.n.is_empty());
    for s in &d.n {
        let sep = s.separator(&g);
        assert_eq!((sep.vertices.len(), sep.edges.len()), (2, 1));
    }
}

#[test]
fn thickened_k3m_is_a_lightly_interlaced_torso() {
    let g = generate("k3m-with-triangles", &[2]).unwrap();
    let d = decompose(&g).unwrap();
    let light: Vec<_> = d.stars.iter().filter(|s| s.class.interlace == StarInterlace::Light).collect();
    assert!(!light.is_empty());
    assert!(light.iter().all(|s| s.class.tag == TorsoTag::ThickenedK3m && s.class.matches_table()));
    assert!(decompose(&thickened_k3m(3).unwrap()).is_ok());
}

/// A heavily interlaced star whose compressed torso collapses to a triangle while its expanded
/// torso is the wheel W4.
#[test]
fn heavy_interlacing_can_give_a_triangle() {
    let g = heavy_triangle_graph();
    let d = decompose(&g).unwrap();
    assert_eq!(d.n.len(), 4);
    let bad: Vec<_> = d.stars.iter().filter(|s| !s.class.matches_table()).collect();
    assert_eq!(bad.len(), 1);
    let s = bad[0];
    assert_eq!(s.class.interlace, StarInterlace::Heavy);
    assert_eq!(s.class.tag, TorsoTag::K3);
    assert!(generalised_wheel(&s.bundle.expanded).is_some());
}

#[test]
fn inner_grid_columns_are_heavily_interlaced_triangles() {
    let g = grid3k(5).unwrap();
    let d = decompose(&g).unwrap();
    let inner: Vec<_> = d.stars.iter().filter(|s| s.star.len() == 2).collect();
    assert_eq!(inner.len(), 3);
    for s in inner {
        assert_eq!((s.class.tag, s.class.interlace), (TorsoTag::K3, StarInterlace::Heavy));
        assert!(generalised_wheel(&s.bundle.expanded).is_some());
    }
}

#[test]
fn figure_graph_threshold() {
    assert_eq!(figord_threshold(6, 8).unwrap(), Some(6));
}

#[test]
fn two_separation_torsos_of_a_theta_graph() {
    // Two vertices joined by three paths of length two and one edge.
    let g = Graph::from_edges(5, &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap();
    let td = two_sep_decomposition(&g).unwrap();
    td.validate(&g).unwrap();
    assert!(td.torso_kinds.iter().any(|k| *k == TwoSepTorso::K2 || *k == TwoSepTorso::Cycle));
}
