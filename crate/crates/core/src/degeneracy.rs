//! Degeneracy by minimum-degree peeling.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::Graph;

/// A vertex ordering together with each position's count of earlier
/// neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    pub order: Vec<usize>,
    pub back_degree: Vec<usize>,
}

impl VertexOrdering {
    /// Recomputes back-degrees from scratch and checks that `order` is a
    /// permutation. Used to audit orderings produced elsewhere.
    pub fn replay(lists: &[Vec<usize>], order: &[usize]) -> Option<VertexOrdering> {
        let n = lists.len();
        if order.len() != n {
            return None;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return None;
            }
            pos[v] = i;
        }
        let back_degree = order
            .iter()
            .enumerate()
            .map(|(i, &v)| lists[v].iter().filter(|&&w| pos[w] < i).count())
            .collect();
        Some(VertexOrdering {
            order: order.to_vec(),
            back_degree,
        })
    }

    pub fn max_back_degree(&self) -> usize {
        self.back_degree.iter().copied().max().unwrap_or(0)
    }
}

/// Degeneracy `d` and an ordering in which every vertex has at most `d`
/// earlier neighbours.
///
/// Vertices are peeled by minimum remaining degree, lowest id first; the
/// returned order is the reverse of the peeling order.
pub fn degeneracy_ordering(g: &Graph) -> (usize, VertexOrdering) {
    degeneracy_of_lists(&g.adjacency_lists())
}

pub fn degeneracy(g: &Graph) -> usize {
    degeneracy_ordering(g).0
}

/// Same as [`degeneracy_ordering`] on an adjacency-list graph.
pub fn degeneracy_of_lists(lists: &[Vec<usize>]) -> (usize, VertexOrdering) {
    let n = lists.len();
    let mut deg: Vec<usize> = lists.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
        (0..n).map(|v| Reverse((deg[v], v))).collect();
    let mut peel = Vec::with_capacity(n);
    let mut at_removal = Vec::with_capacity(n);
    while let Some(Reverse((d, v))) = heap.pop() {
        if removed[v] || d != deg[v] {
            continue;
        }
        removed[v] = true;
        peel.push(v);
        at_removal.push(d);
        for &w in &lists[v] {
            if !removed[w] {
                deg[w] -= 1;
                heap.push(Reverse((deg[w], w)));
            }
        }
    }
    peel.reverse();
    at_removal.reverse();
    let d = at_removal.iter().copied().max().unwrap_or(0);
    (
        d,
        VertexOrdering {
            order: peel,
            back_degree: at_removal,
        },
    )
}

/// Degeneracy of a graph on `0..n` given as an edge list, in linear time
/// and compact memory. Meant for boards too large for adjacency lists.
pub fn degeneracy_of_edges(n: usize, edges: &[(u32, u32)]) -> usize {
    // CSR adjacency
    let mut start = vec![0u32; n + 1];
    for &(u, v) in edges {
        start[u as usize + 1] += 1;
        start[v as usize + 1] += 1;
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut adj = vec![0u32; 2 * edges.len()];
    for &(u, v) in edges {
        adj[fill[u as usize] as usize] = v;
        fill[u as usize] += 1;
        adj[fill[v as usize] as usize] = u;
        fill[v as usize] += 1;
    }
    drop(fill);
    let mut deg: Vec<u32> = (0..n).map(|v| start[v + 1] - start[v]).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0) as usize;
    // bucket sort by degree: vert holds vertices ordered by degree, pos
    // their positions, bin the first slot of each degree
    let mut bin = vec![0u32; max_deg + 2];
    for &d in &deg {
        bin[d as usize + 1] += 1;
    }
    for d in 0..=max_deg {
        bin[d + 1] += bin[d];
    }
    let mut pos = vec![0u32; n];
    let mut vert = vec![0u32; n];
    {
        let mut next = bin.clone();
        for v in 0..n {
            let d = deg[v] as usize;
            pos[v] = next[d];
            vert[next[d] as usize] = v as u32;
            next[d] += 1;
        }
    }
    let mut best = 0u32;
    for i in 0..n {
        let v = vert[i] as usize;
        best = best.max(deg[v]);
        for &w in &adj[start[v] as usize..start[v + 1] as usize] {
            let w = w as usize;
            if deg[w] > deg[v] {
                // move w to the front of its bucket, then shrink its degree
                let dw = deg[w] as usize;
                let pw = pos[w];
                let first = bin[dw].max(i as u32 + 1);
                let u = vert[first as usize] as usize;
                if u != w {
                    vert.swap(first as usize, pw as usize);
                    pos[u] = pw;
                    pos[w] = first;
                }
                bin[dw] = first + 1;
                deg[w] -= 1;
            }
        }
    }
    best as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_orderings_min(g: &Graph) -> usize {
        // Minimum over every permutation of the maximum back-degree.
        fn rec(g: &Graph, used: &mut Vec<bool>, prefix: &mut Vec<usize>, cur: usize, best: &mut usize) {
            if cur >= *best {
                return;
            }
            if prefix.len() == g.vertex_count() {
                *best = cur;
                return;
            }
            for v in 0..g.vertex_count() {
                if used[v] {
                    continue;
                }
                let back = prefix.iter().filter(|&&u| g.has_edge(u, v)).count();
                used[v] = true;
                prefix.push(v);
                rec(g, used, prefix, cur.max(back), best);
                prefix.pop();
                used[v] = false;
            }
        }
        let mut best = usize::MAX;
        rec(g, &mut vec![false; g.vertex_count()], &mut Vec::new(), 0, &mut best);
        if g.vertex_count() == 0 {
            0
        } else {
            best
        }
    }

    #[test]
    fn complete_graph() {
        assert_eq!(degeneracy(&Graph::complete(4)), 3);
    }

    #[test]
    fn trees_are_one_degenerate() {
        assert_eq!(degeneracy(&Graph::path(7)), 1);
        assert_eq!(degeneracy(&Graph::star(5)), 1);
        assert_eq!(degeneracy(&Graph::path(2)), 1);
    }

    #[test]
    fn five_cycle_matches_permutation_search() {
        let c5 = Graph::cycle(5);
        assert_eq!(all_orderings_min(&c5), 2);
        assert_eq!(degeneracy(&c5), 2);
    }

    #[test]
    fn empty_graph() {
        assert_eq!(degeneracy(&Graph::new(0)), 0);
        assert_eq!(degeneracy(&Graph::new(4)), 0);
    }

    #[test]
    fn edge_list_version_agrees() {
        let graphs = [
            Graph::complete(6),
            Graph::cycle(7),
            Graph::star(9),
            Graph::new(3),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
            Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap(),
        ];
        for g in &graphs {
            let edges: Vec<(u32, u32)> = g.edges().map(|(u, v)| (u as u32, v as u32)).collect();
            assert_eq!(degeneracy_of_edges(g.vertex_count(), &edges), degeneracy(g));
        }
    }

    #[test]
    fn ordering_replays() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let (d, ord) = degeneracy_ordering(&g);
        let replay = VertexOrdering::replay(&g.adjacency_lists(), &ord.order).unwrap();
        assert_eq!(replay, ord);
        assert_eq!(d, 2);
        assert_eq!(all_orderings_min(&g), d);
    }
}
