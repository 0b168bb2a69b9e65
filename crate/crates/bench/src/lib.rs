//! Deterministic inputs shared by the benchmarks.

use exlab_core::Graph;

/// The `w x h` grid graph. Bipartite, maximum degree 4.
pub fn grid(w: usize, h: usize) -> Graph {
    let mut g = Graph::new(w * h);
    for y in 0..h {
        for x in 0..w {
            let v = y * w + x;
            if x + 1 < w {
                g.add_edge(v, v + 1).expect("grid edge");
            }
            if y + 1 < h {
                g.add_edge(v, v + w).expect("grid edge");
            }
        }
    }
    g
}

/// A caterpillar: a path of `spine` vertices, each with `legs` pendant leaves.
pub fn caterpillar(spine: usize, legs: usize) -> Graph {
    let mut g = Graph::new(spine * (legs + 1));
    for s in 0..spine {
        if s + 1 < spine {
            g.add_edge(s, s + 1).expect("spine edge");
        }
        for l in 0..legs {
            g.add_edge(s, spine + s * legs + l).expect("leg edge");
        }
    }
    g
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    caterpillar(n, 0)
}
