use std::collections::HashSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trisep::connectivity::{is_k_connected, is_k_connected_menger};
use trisep::decompose::decompose;
use trisep::graph::Graph;
use trisep::iso::canonical_code;
use trisep::minor::{is_minor, verify_minor_certificate, MinorResult, DEFAULT_MINOR_BUDGET};
use trisep::recognize::vertex_three_separations;
use trisep::separation::{enumerate_by_bipartitions, enumerate_mixed_separations, MixedSeparation};
use trisep::tri::compute_total_nested;
use trisep::twosep::two_sep_decomposition;
use trisep::vset::VSet;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

fn dense_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (4..=max_n, any::<u64>(), any::<u64>()).prop_map(|(n, a, b)| graph_from_mask(n, a | b))
}

fn shuffled(g: &Graph, seed: u64) -> (Graph, Vec<usize>) {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    (g.relabel(|v| perm[v]).unwrap(), perm)
}

/// Minor test by assigning every vertex of `g` to a branch set or to deletion.
fn minor_by_partitions(h: &Graph, g: &Graph) -> bool {
    let (hn, gn) = (h.n(), g.n());
    let total = (hn + 1).pow(gn as u32);
    (0..total).any(|mut code| {
        let mut sets = vec![VSet::EMPTY; hn];
        for v in 0..gn {
            let label = code % (hn + 1);
            code /= hn + 1;
            if label > 0 {
                sets[label - 1].insert(v);
            }
        }
        sets.iter().all(|&s| !s.is_empty() && g.is_connected_set(s))
            && h.edges().iter().all(|e| sets[e.0].iter().any(|x| g.nbrs(x).intersects(sets[e.1])))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn connectivity_matches_menger(g in arb_graph(8), k in 1usize..4) {
        prop_assume!(g.n() > k);
        prop_assert_eq!(is_k_connected(&g, k), is_k_connected_menger(&g, k));
    }

    #[test]
    fn canonical_code_ignores_labels(g in arb_graph(8), seed in any::<u64>()) {
        let (h, _) = shuffled(&g, seed);
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
    }

    #[test]
    fn enumeration_matches_bipartitions(g in arb_graph(6), k in 0usize..4) {
        let fast: HashSet<MixedSeparation> = enumerate_mixed_separations(&g, k).unwrap().into_iter().collect();
        let slow: HashSet<MixedSeparation> = enumerate_by_bipartitions(&g, k).into_iter().collect();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn vertex_three_separations_are_the_edge_free_ones(g in dense_graph(7)) {
        prop_assume!(is_k_connected(&g, 3));
        let listed: HashSet<MixedSeparation> = vertex_three_separations(&g).into_iter().collect();
        let filtered: HashSet<MixedSeparation> = enumerate_mixed_separations(&g, 3)
            .unwrap()
            .into_iter()
            .filter(|s| s.inter().len() == 3 && s.separator_edges(&g).is_empty())
            .collect();
        prop_assert_eq!(listed, filtered);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn minor_search_matches_partitions(h in arb_graph(4), g in arb_graph(6)) {
        let brute = minor_by_partitions(&h, &g);
        match is_minor(&h, &g, DEFAULT_MINOR_BUDGET) {
            MinorResult::Minor(cert) => {
                prop_assert!(brute);
                prop_assert!(verify_minor_certificate(&h, &g, &cert));
            }
            MinorResult::NotMinor => prop_assert!(!brute),
            MinorResult::Indeterminate => prop_assert!(false, "budget exhausted on a tiny instance"),
        }
    }

    #[test]
    fn totally_nested_means_nested_with_every_tri_separation(g in dense_graph(7)) {
        prop_assume!(is_k_connected(&g, 3));
        let a = compute_total_nested(&g).unwrap();
        for s in a.n() {
            prop_assert!(a.all_tri.iter().all(|&t| s.nested_with(t)));
        }
    }

    #[test]
    fn decomposition_digest_ignores_labels(g in dense_graph(7), seed in any::<u64>()) {
        prop_assume!(is_k_connected(&g, 3));
        let (h, perm) = shuffled(&g, seed);
        let (dg, dh) = (decompose(&g).unwrap(), decompose(&h).unwrap());
        prop_assert_eq!(&dg.digest, &dh.digest);
        let moved: HashSet<MixedSeparation> = dg.n.iter().map(|s| s.map(|v| perm[v])).collect();
        prop_assert_eq!(moved, dh.n.iter().copied().collect::<HashSet<_>>());
        prop_assert_eq!(dg.stars.len(), dh.stars.len());
    }

    #[test]
    fn two_separation_decomposition_is_valid(g in dense_graph(8)) {
        prop_assume!(is_k_connected(&g, 2));
        let td = two_sep_decomposition(&g).unwrap();
        prop_assert_eq!(td.validate(&g), Ok(()));
    }
}
