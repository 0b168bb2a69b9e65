//! Structure checks and exhaustive small-instance oracles.

use crate::error::{capacity, input, Result};
use crate::graph::{Graph, UniformHypergraph};

/// Largest graph accepted by [`max_induced_star_forest_bruteforce`].
pub const STAR_FOREST_BRUTE_MAX: usize = 16;

/// True iff every component of `g[s]` is a star (isolated vertices and single
/// edges included).
pub fn is_induced_star_forest(g: &Graph, s: &[usize]) -> Result<bool> {
    let n = g.vertex_count();
    let mut inside = vec![false; n];
    for &v in s {
        if v >= n {
            return input(format!("vertex {v} out of range for n = {n}"));
        }
        inside[v] = true;
    }
    let mut seen = vec![false; n];
    for &root in s {
        if seen[root] {
            continue;
        }
        // collect the component of root inside s
        seen[root] = true;
        let mut comp = vec![root];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for w in g.neighbors(u) {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        let edges: usize = comp
            .iter()
            .map(|&u| g.neighbors(u).filter(|&w| inside[w]).count())
            .sum::<usize>()
            / 2;
        if edges + 1 != comp.len() {
            return Ok(false);
        }
        // a tree is a star iff some vertex touches every edge
        let max_deg = comp
            .iter()
            .map(|&u| g.neighbors(u).filter(|&w| inside[w]).count())
            .max()
            .unwrap_or(0);
        if max_deg != edges {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Size of a largest vertex set inducing a star forest, by exhaustive search
/// over subsets in decreasing size.
pub fn max_induced_star_forest_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > STAR_FOREST_BRUTE_MAX {
        return capacity(format!(
            "star-forest brute force is capped at {STAR_FOREST_BRUTE_MAX} vertices, got {n}"
        ));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
        .collect();
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1u32 << n) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for size in (0..=n).rev() {
        if by_size[size].iter().any(|&m| star_forest_mask(&adj, m)) {
            return Ok(size);
        }
    }
    Ok(0)
}

/// Every induced edge has an endpoint of induced degree one.
fn star_forest_mask(adj: &[u32], mask: u32) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let nb = adj[v] & mask;
        if nb.count_ones() >= 2 {
            let mut it = nb;
            while it != 0 {
                let w = it.trailing_zeros() as usize;
                it &= it - 1;
                if (adj[w] & mask).count_ones() != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// An `s`-set of vertices all of whose `k`-subsets are edges of `h`, if one
/// exists. Backtracking over ascending vertex sets; a candidate is only
/// added when every new `k`-subset it creates is present.
pub fn contains_clique(h: &UniformHypergraph, s: usize) -> Result<Option<Vec<usize>>> {
    let k = h.uniformity();
    if s < k {
        return input(format!("clique size {s} is below the uniformity {k}"));
    }
    let n = h.vertex_count();
    if s > n {
        return Ok(None);
    }
    let mut chosen = Vec::with_capacity(s);
    let mut scratch = Vec::with_capacity(k);
    Ok(extend_clique(h, s, 0, &mut chosen, &mut scratch).then_some(chosen))
}

fn extend_clique(
    h: &UniformHypergraph,
    s: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    scratch: &mut Vec<usize>,
) -> bool {
    if chosen.len() == s {
        return true;
    }
    let n = h.vertex_count();
    let need = s - chosen.len();
    for v in from..n {
        if n - v < need {
            break;
        }
        if closes_all_edges(h, chosen, v, scratch) {
            chosen.push(v);
            if extend_clique(h, s, v + 1, chosen, scratch) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Whether each `(k-1)`-subset of `chosen` together with `v` is an edge.
/// `v` exceeds every chosen vertex, so sorted order is preserved.
fn closes_all_edges(h: &UniformHypergraph, chosen: &[usize], v: usize, scratch: &mut Vec<usize>) -> bool {
    let k = h.uniformity();
    if chosen.len() + 1 < k {
        return true;
    }
    for sub in crate::combin::Combinations::new(chosen.len(), k - 1) {
        scratch.clear();
        scratch.extend(sub.iter().map(|&i| chosen[i]));
        scratch.push(v);
        if !h.has_sorted_edge(scratch) {
            return false;
        }
    }
    true
}

/// Graph version of [`contains_clique`].
pub fn graph_clique(g: &Graph, s: usize) -> Option<Vec<usize>> {
    fn rec(g: &Graph, s: usize, cands: Vec<usize>, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == s {
            return true;
        }
        if chosen.len() + cands.len() < s {
            return false;
        }
        for (i, &v) in cands.iter().enumerate() {
            let next: Vec<usize> = cands[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            chosen.push(v);
            if rec(g, s, next, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    rec(g, s, (0..g.vertex_count()).collect(), &mut chosen).then_some(chosen)
}
