mod common;

use common::arb_tree;
use exlab_core::star_forest::{large_star_forest, star_target};
use exlab_core::{is_induced_star_forest, max_induced_star_forest_bruteforce, Graph};
use proptest::prelude::*;

/// Connected bipartite graphs: a random tree plus random edges across its
/// colour classes.
fn arb_connected_bipartite(max_n: usize) -> impl Strategy<Value = Graph> {
    (arb_tree(1, max_n), proptest::collection::vec(any::<bool>(), max_n * max_n)).prop_map(|(t, extra)| {
        let n = t.vertex_count();
        let colour = t.two_coloring().unwrap();
        let mut g = t;
        for u in 0..n {
            for v in u + 1..n {
                if colour[u] != colour[v] && extra[u * n + v] && extra[v * n + u] {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    })
}

fn avg_degree_bound(g: &Graph) -> usize {
    (2 * g.edge_count()).div_ceil(g.vertex_count()).max(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn output_is_large_and_induced(g in arb_connected_bipartite(12)) {
        let n = g.vertex_count();
        let d = avg_degree_bound(&g);
        let (s, trace) = large_star_forest(&g, d).unwrap();
        prop_assert!(is_induced_star_forest(&g, &s).unwrap());
        prop_assert!(s.len() >= star_target(n, &trace.delta));
        prop_assert!(s.len() <= max_induced_star_forest_bruteforce(&g).unwrap());
        prop_assert_eq!(trace.check(n, d), Ok(()));
    }

    #[test]
    fn centres_are_light_and_disjoint(g in arb_connected_bipartite(40)) {
        let n = g.vertex_count();
        let d = avg_degree_bound(&g);
        let (s, trace) = large_star_forest(&g, d).unwrap();
        prop_assert!(is_induced_star_forest(&g, &s).unwrap());
        prop_assert_eq!(trace.check(n, d), Ok(()));
        let Some(i) = trace.chosen_round else { return Ok(()) };
        let earlier: Vec<usize> = if i > 1 { trace.rounds[i - 2].y.clone() } else { Vec::new() };
        let mut owner = vec![usize::MAX; n];
        for &x in &trace.centers {
            prop_assert!(g.degree(x) <= 8 * d);
            for w in g.neighbors(x).filter(|w| !earlier.contains(w)) {
                prop_assert_eq!(owner[w], usize::MAX, "neighbour {} shared", w);
                owner[w] = x;
            }
        }
    }
}
