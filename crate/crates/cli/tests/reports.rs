use trisep::decompose::decompose;
use trisep::generate::{grid3k, wheel};
use trisep_cli::report::{OutputFormat, Report};

#[test]
fn wheel_report_has_one_wheel_star() {
    let r = Report::from_decomposition(&decompose(&wheel(6).unwrap()).unwrap());
    assert!(r.n_family.is_empty());
    assert_eq!(r.stars.len(), 1);
    assert_eq!(r.stars[0].torso.class, "wheel");
    assert_eq!(r.stars[0].torso.hub, Some(0));
    assert!(r.verdicts.all_hold());
    let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["graph", "n_family", "stars", "verdicts"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    assert_eq!(json["stars"][0]["torso"]["class"], "wheel");
    assert!(json.get("timing_ms").is_none());
}

#[test]
fn reports_round_trip_through_json() {
    for g in [wheel(5).unwrap(), grid3k(5).unwrap()] {
        let r = Report::from_decomposition(&decompose(&g).unwrap());
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.graph.to_graph(), g);
        assert_eq!(back.render(OutputFormat::Text), r.render(OutputFormat::Text));
    }
}

#[test]
fn grid_report_uses_camel_case_sides_and_one_dot_per_torso() {
    let r = Report::from_decomposition(&decompose(&grid3k(5).unwrap()).unwrap());
    let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    let first = &json["n_family"][0];
    assert!(first["sideA"].is_array() && first["sideB"].is_array());
    assert_eq!(first["separator"]["edges"].as_array().unwrap().len(), 3);
    let dots = r.dot_files();
    assert_eq!(dots.len(), r.stars.len());
    assert!(dots.iter().all(|(_, d)| d.starts_with("graph torso") && d.contains("color=red")));
    assert!(!r.verdicts.table_respected);
}
