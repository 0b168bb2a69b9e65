#![allow(dead_code)]

use exlab_core::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Tree with the given Prüfer sequence; entries are reduced mod `n`.
pub fn tree_from_prufer(n: usize, seq: &[usize]) -> Graph {
    if n <= 1 {
        return Graph::new(n);
    }
    if n == 2 {
        return Graph::path(2);
    }
    let seq: Vec<usize> = seq.iter().map(|&x| x % n).collect();
    assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut g = Graph::new(n);
    for &x in &seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        g.add_edge(leaf, x).unwrap();
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    tree_from_prufer(n, &seq)
}

pub fn caterpillar(spine: usize, legs: usize) -> Graph {
    let mut g = Graph::new(spine * (legs + 1));
    for i in 1..spine {
        g.add_edge(i - 1, i).unwrap();
    }
    let mut next = spine;
    for i in 0..spine {
        for _ in 0..legs {
            g.add_edge(i, next).unwrap();
            next += 1;
        }
    }
    g
}

/// Random graph on `n` vertices with `m` distinct edges.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    let m = m.min(n * n.saturating_sub(1) / 2);
    while g.edge_count() < m {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

pub fn arb_tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n.max(1), n.saturating_sub(2)).prop_map(move |seq| tree_from_prufer(n, &seq))
    })
}

pub fn arb_forest(max_n: usize) -> impl Strategy<Value = Graph> {
    (arb_tree(1, max_n), any::<u64>()).prop_map(|(t, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut f = Graph::new(t.vertex_count());
        for (u, v) in t.edges() {
            if rng.gen_bool(0.7) {
                f.add_edge(u, v).unwrap();
            }
        }
        f
    })
}
