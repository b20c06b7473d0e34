//! Property tests for graph construction, distance matrices, star
//! products, and the edge-list format.

use std::collections::HashSet;

use proptest::prelude::*;

use qe_core::graph::{
    build_graph, distance_matrix, format_edge_list, parse_edge_list, star_product, Graph,
    GraphKind, StarSpec,
};

fn decode_prufer(n: usize, prufer: &[usize]) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let mut degree = vec![1usize; n];
    for &v in prufer {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in prufer {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Connected graphs: a random spanning tree plus a few extra edges.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..=10).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(0..n, n.saturating_sub(2)),
            prop::collection::vec((0..n, 0..n), 0..=6),
        )
            .prop_map(|(n, prufer, extra)| {
                let mut edges = decode_prufer(n, &prufer);
                let mut seen: HashSet<(usize, usize)> = edges
                    .iter()
                    .map(|&(u, v)| (u.min(v), u.max(v)))
                    .collect();
                for (u, v) in extra {
                    if u != v && seen.insert((u.min(v), u.max(v))) {
                        edges.push((u, v));
                    }
                }
                build_graph(n, &edges).unwrap()
            })
    })
}

fn arb_rooted_factor() -> impl Strategy<Value = (Graph, usize)> {
    (0..4u8, 2usize..=6).prop_flat_map(|(kind, size)| {
        let g = match kind {
            0 => qe_core::graph::named_graph(GraphKind::Complete, size).unwrap(),
            1 => qe_core::graph::named_graph(GraphKind::Path, size).unwrap(),
            2 => qe_core::graph::named_graph(GraphKind::Cycle, size.max(3)).unwrap(),
            _ => qe_core::graph::named_graph(GraphKind::Star, size).unwrap(),
        };
        let n = g.vertex_count();
        (Just(g), 0..n)
    })
}

proptest! {
    #[test]
    fn distance_matrix_is_a_graph_metric(g in arb_graph()) {
        let d = distance_matrix(&g);
        let n = g.vertex_count();
        for i in 0..n {
            prop_assert_eq!(d.get(i, i), 0);
            for j in 0..n {
                prop_assert_eq!(d.get(i, j), d.get(j, i));
                prop_assert_eq!(d.get(i, j) == 1, g.has_edge(i, j));
                if i != j {
                    prop_assert!(d.get(i, j) >= 1);
                }
                for k in 0..n {
                    prop_assert!(d.get(i, k) + d.get(k, j) >= d.get(i, j));
                }
            }
        }
    }

    #[test]
    fn star_product_distances_follow_the_two_case_formula(
        factors in prop::collection::vec(arb_rooted_factor(), 1..=4)
    ) {
        let spec = StarSpec::new(factors.clone()).unwrap();
        let (product, maps) = star_product(&spec);
        prop_assert!(product.vertex_count() <= 40);
        let d = distance_matrix(&product);
        let factor_d: Vec<_> = factors.iter().map(|(g, _)| distance_matrix(g)).collect();
        for (i, (gi, ri)) in factors.iter().enumerate() {
            for (j, (gj, rj)) in factors.iter().enumerate() {
                for u in 0..gi.vertex_count() {
                    for v in 0..gj.vertex_count() {
                        let got = d.get(maps[i][u], maps[j][v]);
                        let expected = if i == j {
                            factor_d[i].get(u, v)
                        } else if maps[i][u] == maps[j][v] {
                            0
                        } else {
                            factor_d[i].get(u, *ri) + factor_d[j].get(*rj, v)
                        };
                        prop_assert_eq!(got, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn edge_list_round_trips(g in arb_graph()) {
        let text = format_edge_list(&g);
        let parsed = parse_edge_list(&text).unwrap();
        prop_assert_eq!(g, parsed);
    }
}
