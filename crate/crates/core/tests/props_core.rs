mod common;

use common::arb_graph;
use exlab_core::combin::Combinations;
use exlab_core::degeneracy::VertexOrdering;
use exlab_core::graph::UniformHypergraph;
use exlab_core::plane::{is_prime, next_prime_at_least, verify_plane};
use exlab_core::{contains_clique, degeneracy, degeneracy_ordering, is_induced_star_forest, ProjectivePlane};
use proptest::prelude::*;

fn naive_clique(h: &UniformHypergraph, s: usize) -> bool {
    let k = h.uniformity();
    Combinations::new(h.vertex_count(), s).any(|set| {
        Combinations::new(s, k).all(|idx| {
            let e: Vec<usize> = idx.iter().map(|&i| set[i]).collect();
            h.has_sorted_edge(&e)
        })
    })
}

fn arb_hypergraph(max_n: usize) -> impl Strategy<Value = UniformHypergraph> {
    (3..=max_n, 2..=3usize, 0.0..1.0f64, any::<u64>()).prop_map(|(n, k, p, seed)| {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<Vec<usize>> = Combinations::new(n, k).filter(|_| rng.gen_bool(p)).collect();
        UniformHypergraph::from_edges(n, k, &edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degeneracy_ordering_replays(g in arb_graph(14)) {
        let (d, ord) = degeneracy_ordering(&g);
        let replay = VertexOrdering::replay(&g.adjacency_lists(), &ord.order).unwrap();
        prop_assert_eq!(&replay, &ord);
        prop_assert!(replay.max_back_degree() <= d);
    }

    #[test]
    fn degeneracy_monotone_under_edges(g in arb_graph(12), u in 0usize..12, v in 0usize..12) {
        let n = g.vertex_count();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let mut h = g.clone();
        h.add_edge(u, v).unwrap();
        prop_assert!(degeneracy(&g) <= degeneracy(&h));
    }

    #[test]
    fn clique_search_matches_enumeration(h in arb_hypergraph(9), s in 2usize..6) {
        let s = s.max(h.uniformity());
        let found = contains_clique(&h, s).unwrap();
        prop_assert_eq!(found.is_some(), naive_clique(&h, s));
        if let Some(c) = found {
            prop_assert_eq!(c.len(), s);
            prop_assert!(naive_clique(&h.induced(&c).unwrap(), s));
        }
    }

    #[test]
    fn independent_sets_are_star_forests(g in arb_graph(12), mask in any::<u16>()) {
        let mut s: Vec<usize> = Vec::new();
        for v in 0..g.vertex_count() {
            if mask >> v & 1 == 1 && s.iter().all(|&w| !g.has_edge(v, w)) {
                s.push(v);
            }
        }
        prop_assert!(is_induced_star_forest(&g, &s).unwrap());
    }

    #[test]
    fn next_prime_within_bertrand(x in 2u64..=1_000_000) {
        let p = next_prime_at_least(x).unwrap();
        prop_assert!(is_prime(p) && p >= x && p < 2 * x);
        prop_assert!((x..p).all(|y| !is_prime(y)));
    }
}

#[test]
fn planes_up_to_thirteen() {
    for q in [2usize, 3, 5, 7, 11, 13] {
        let p = ProjectivePlane::build(q).unwrap();
        assert!(verify_plane(&p), "order {q}");
        let n = p.point_count();
        let mut seen = vec![0u8; n * n];
        for line in p.lines() {
            for (i, &a) in line.iter().enumerate() {
                for &b in &line[i + 1..] {
                    seen[a.min(b) * n + a.max(b)] += 1;
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                assert_eq!(seen[a * n + b], 1, "pair {a} {b} in order {q}");
            }
        }
    }
}
