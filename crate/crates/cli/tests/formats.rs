use proptest::prelude::*;
use trisep::generate::complete;
use trisep::graph::Graph;
use trisep_cli::format::{parse_edgelist, parse_graph6, to_graph6, ParseError};

#[test]
fn edgelist_triangle() {
    let g = parse_edgelist("0 1\n1 2\n2 0\n").unwrap();
    assert_eq!(g, Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap());
}

#[test]
fn edgelist_comments_and_isolated_vertices() {
    let g = parse_edgelist("# a path\n0 1 # first edge\n\n1 2\n5\n").unwrap();
    assert_eq!(g.n(), 4);
    assert_eq!(g.m(), 2);
    assert_eq!(g.degree(5), 0);
}

#[test]
fn edgelist_errors_carry_the_line() {
    assert!(matches!(parse_edgelist("0 1\n0 0\n"), Err(ParseError::Line { line: 2, .. })));
    assert!(matches!(parse_edgelist("0 x\n"), Err(ParseError::Line { line: 1, .. })));
    assert!(matches!(parse_edgelist("0 1 2\n"), Err(ParseError::Line { line: 1, .. })));
    assert!(matches!(parse_edgelist("0 64\n"), Err(ParseError::Line { line: 1, .. })));
    let msg = parse_edgelist("1 2\n3 3\n").unwrap_err().to_string();
    assert!(msg.contains("line 2") && msg.contains("loop"), "{msg}");
}

#[test]
fn graph6_k4_matches_the_edgelist() {
    let from_g6 = parse_graph6("C~\n").unwrap();
    let from_list = parse_edgelist("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    assert_eq!(from_g6, from_list);
    assert_eq!(from_g6, complete(4).unwrap());
    assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), from_list);
    assert_eq!(to_graph6(&from_list), "C~");
}

#[test]
fn graph6_errors_carry_the_offset() {
    assert!(matches!(parse_graph6("C~~"), Err(ParseError::Graph6 { offset: 2, .. })));
    assert!(matches!(parse_graph6("C"), Err(ParseError::Graph6 { offset: 1, .. })));
    assert!(matches!(parse_graph6("C\u{7f}"), Err(ParseError::Graph6 { offset: 1, .. })));
    assert!(matches!(parse_graph6(""), Err(ParseError::Graph6 { offset: 0, .. })));
}

proptest! {
    #[test]
    fn graph6_round_trips(n in 1usize..20, bits in proptest::collection::vec(any::<bool>(), 190)) {
        let mut g = Graph::with_vertices(n).unwrap();
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[k] {
                    g.add_edge(u, v).unwrap();
                }
                k += 1;
            }
        }
        let text = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g.clone());
        prop_assert_eq!(parse_edgelist(&g.to_edgelist()).unwrap(), g);
    }
}
