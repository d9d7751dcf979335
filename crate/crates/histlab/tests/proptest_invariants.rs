use proptest::prelude::*;

use histlab::construct;
use histlab::formats;
use histlab::graph::Graph;
use histlab::hist::{self, SolveMode};

/// Arbitrary simple graph from an upper-triangle bit vector.
fn arbitrary_graph() -> impl Strategy<Value = Graph> {
    (1usize..40).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in arbitrary_graph()) {
        let line = formats::write_graph6(&g).unwrap();
        let back = formats::parse_graph6(&line).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(formats::write_graph6(&back).unwrap(), line);
    }

    #[test]
    fn edge_list_roundtrip(g in arbitrary_graph()) {
        let text = formats::write_edge_list(&g);
        prop_assert_eq!(formats::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn certificate_complement_roundtrip(n in prop::sample::select(vec![8usize, 10, 12]), seed in 0u64..500) {
        let g = match construct::random_regular(n, 3, seed) {
            Ok(g) if g.is_connected() => g,
            _ => return Ok(()),
        };
        let solved = hist::solve(&g, SolveMode::EnumerateAll).unwrap();
        for cert in &solved.certificates {
            // Leaf arithmetic: t1 = t3 + 2 and t1 = n/2 + 1.
            prop_assert_eq!(cert.leaf_count, cert.branch_count + 2);
            prop_assert_eq!(cert.leaf_count, n / 2 + 1);
            let h = hist::complement_of_hist(&g, cert).unwrap();
            prop_assert_eq!(h.covered_vertices.len(), n / 2 + 1);
            let back = hist::hist_from_two_regular(&g, &h).unwrap();
            prop_assert_eq!(&back, cert);
        }
    }

    #[test]
    fn random_regular_is_simple_and_regular(
        n in prop::sample::select(vec![6usize, 8, 10, 12]),
        d in 3usize..5,
        seed in 0u64..200,
    ) {
        if n * d % 2 != 0 {
            return Ok(());
        }
        // `Graph::from_edges` rejects loops and parallels, so success alone
        // certifies simplicity.
        let g = construct::random_regular(n, d, seed).unwrap();
        for v in 0..n {
            prop_assert_eq!(g.degree(v), d);
        }
        prop_assert_eq!(construct::random_regular(n, d, seed).unwrap(), g);
    }
}
