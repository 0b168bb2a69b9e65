//! Exhaustive Ramsey numbers for small graphs and uniform hypergraphs,
//! Ramsey saturation, and the closed-form bounds.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::combin::{binomial, Combinations};
use crate::error::{capacity, input, Error, Result};
use crate::graph::{Graph, UniformHypergraph};

/// Default limit on search nodes per board size.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

#[derive(Debug, Clone)]
pub struct RamseyQuery {
    pub target: UniformHypergraph,
    pub colors: usize,
    /// Largest board size tried.
    pub cap: usize,
    /// Search nodes allowed per board size before giving up with a capacity
    /// error.
    pub node_budget: u64,
}

impl RamseyQuery {
    pub fn new(target: UniformHypergraph, colors: usize, cap: usize) -> Result<RamseyQuery> {
        if colors == 0 {
            return input("at least one color is needed");
        }
        if colors > u8::MAX as usize {
            return input(format!("{colors} colors is more than the search supports"));
        }
        if cap < target.vertex_count() {
            return input(format!(
                "cap {cap} is below the {} target vertices",
                target.vertex_count()
            ));
        }
        Ok(RamseyQuery {
            target,
            colors,
            cap,
            node_budget: DEFAULT_NODE_BUDGET,
        })
    }

    pub fn graph(target: &Graph, colors: usize, cap: usize) -> Result<RamseyQuery> {
        RamseyQuery::new(graph_as_hypergraph(target), colors, cap)
    }

    pub fn with_budget(mut self, nodes: u64) -> RamseyQuery {
        self.node_budget = nodes;
        self
    }
}

pub fn graph_as_hypergraph(g: &Graph) -> UniformHypergraph {
    let edges: Vec<Vec<usize>> = g.edges().map(|(u, v)| vec![u, v]).collect();
    UniformHypergraph::from_edges(g.vertex_count(), 2, &edges).expect("graph edges are valid 2-sets")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RamseyValue {
    Known(usize),
    /// Every board up to the cap has an avoiding coloring.
    Unknown(usize),
}

impl std::fmt::Display for RamseyValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RamseyValue::Known(n) => write!(f, "r={n}"),
            RamseyValue::Unknown(cap) => write!(f, "unknown({cap})"),
        }
    }
}

/// Least `N <= cap` such that every coloring of the complete `k`-uniform
/// board on `N` vertices holds a monochromatic copy of the target.
pub fn ramsey_number(query: &RamseyQuery) -> Result<RamseyValue> {
    let t = query.target.vertex_count();
    if query.target.edge_count() == 0 {
        return Ok(RamseyValue::Known(t));
    }
    for n in t..=query.cap {
        if avoiding_coloring(query, n)?.is_none() {
            return Ok(RamseyValue::Known(n));
        }
    }
    Ok(RamseyValue::Unknown(query.cap))
}

/// A coloring of the complete `k`-uniform board on `n` vertices with no
/// monochromatic target, edges listed in colex order, or `None` if every
/// coloring contains one. The first edge is always colored 0 and colors are
/// introduced in increasing order.
pub fn avoiding_coloring(query: &RamseyQuery, n: usize) -> Result<Option<Vec<u8>>> {
    let board = Board::new(n, query.target.uniformity())?;
    let search = Search {
        board: &board,
        target: Pattern::new(&query.target),
        colors: query.colors,
        nodes: AtomicU64::new(0),
        budget: query.node_budget,
    };
    if board.edges.is_empty() {
        return Ok(if search.target.edges.is_empty() { None } else { Some(Vec::new()) });
    }
    // split the tree at a fixed depth and search the branches in parallel;
    // `find_map_first` keeps the returned witness deterministic
    let depth = board.edges.len().min(8);
    let mut prefixes = Vec::new();
    let mut colors = vec![u8::MAX; board.edges.len()];
    search.collect_prefixes(0, 0, depth, &mut colors, &mut prefixes)?;
    let found = prefixes.into_par_iter().find_map_first(|prefix| {
        let mut colors = vec![u8::MAX; board.edges.len()];
        colors[..depth].copy_from_slice(&prefix);
        let used = prefix.iter().copied().max().unwrap_or(0);
        match search.extend(depth, used, &mut colors) {
            Ok(true) => Some(Ok(colors)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        }
    });
    found.transpose()
}

/// Complete `k`-uniform board with colex-ranked edges.
struct Board {
    edges: Vec<Vec<usize>>,
    binom: Vec<Vec<usize>>,
}

impl Board {
    fn new(n: usize, k: usize) -> Result<Board> {
        let count = binomial(n as u128, k as u128);
        if count > 1 << 24 {
            return capacity(format!("board K_{n}^({k}) has {count} edges, too many to color"));
        }
        let binom: Vec<Vec<usize>> = (0..=n)
            .map(|a| (0..=k).map(|b| binomial(a as u128, b as u128) as usize).collect())
            .collect();
        let mut edges = vec![Vec::new(); count as usize];
        let mut board = Board {
            edges: Vec::new(),
            binom,
        };
        for e in Combinations::new(n, k) {
            let r = board.rank(&e);
            edges[r] = e;
        }
        board.edges = edges;
        Ok(board)
    }

    /// Colex rank of a sorted `k`-set.
    fn rank(&self, e: &[usize]) -> usize {
        e.iter().enumerate().map(|(i, &v)| self.binom[v][i + 1]).sum()
    }

    fn vertex_count(&self) -> usize {
        self.binom.len() - 1
    }
}

/// Target vertex count and edges.
struct Pattern {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Pattern {
    fn new(h: &UniformHypergraph) -> Pattern {
        Pattern {
            n: h.vertex_count(),
            edges: h.edges().to_vec(),
        }
    }
}

struct Search<'a> {
    board: &'a Board,
    target: Pattern,
    colors: usize,
    nodes: AtomicU64,
    budget: u64,
}

impl Search<'_> {
    fn tick(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::Capacity(format!(
                "coloring search on {} vertices exceeded {} nodes",
                self.board.vertex_count(),
                self.budget
            )));
        }
        Ok(())
    }

    /// Colors admissible for edge `i` given the largest color used so far.
    fn choices(&self, i: usize, used: u8) -> std::ops::RangeInclusive<u8> {
        if i == 0 {
            0..=0
        } else {
            0..=(used as usize + 1).min(self.colors - 1) as u8
        }
    }

    fn collect_prefixes(
        &self,
        i: usize,
        used: u8,
        depth: usize,
        colors: &mut [u8],
        out: &mut Vec<Vec<u8>>,
    ) -> Result<()> {
        if i == depth {
            out.push(colors[..depth].to_vec());
            return Ok(());
        }
        for c in self.choices(i, used) {
            self.tick()?;
            colors[i] = c;
            if !self.mono_through(i, colors) {
                self.collect_prefixes(i + 1, used.max(c), depth, colors, out)?;
            }
            colors[i] = u8::MAX;
        }
        Ok(())
    }

    /// Completes `colors[i..]` avoiding the target; true on success.
    fn extend(&self, i: usize, used: u8, colors: &mut [u8]) -> Result<bool> {
        if i == colors.len() {
            return Ok(true);
        }
        for c in self.choices(i, used) {
            self.tick()?;
            colors[i] = c;
            if !self.mono_through(i, colors) && self.extend(i + 1, used.max(c), colors)? {
                return Ok(true);
            }
        }
        colors[i] = u8::MAX;
        Ok(false)
    }

    /// Whether a copy of the target in the color of edge `i` uses edge `i`.
    fn mono_through(&self, i: usize, colors: &[u8]) -> bool {
        let e = &self.board.edges[i];
        let c = colors[i];
        let mut map = vec![usize::MAX; self.target.n];
        let mut used = vec![false; self.board.vertex_count()];
        for f in &self.target.edges {
            // map f onto e in every order
            let mut perm: Vec<usize> = (0..e.len()).collect();
            loop {
                for (j, &tv) in f.iter().enumerate() {
                    map[tv] = e[perm[j]];
                }
                for &bv in e {
                    used[bv] = true;
                }
                if self.place(0, &mut map, &mut used, c, colors) {
                    return true;
                }
                for &tv in f {
                    map[tv] = usize::MAX;
                }
                for &bv in e {
                    used[bv] = false;
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        false
    }

    /// Extends the partial embedding `map` vertex by vertex.
    fn place(&self, from: usize, map: &mut [usize], used: &mut [bool], c: u8, colors: &[u8]) -> bool {
        let Some(w) = (from..self.target.n).find(|&w| map[w] == usize::MAX) else {
            return self.target.edges.iter().all(|f| self.edge_has_color(f, map, c, colors));
        };
        for x in 0..used.len() {
            if used[x] {
                continue;
            }
            map[w] = x;
            used[x] = true;
            let consistent = self
                .target
                .edges
                .iter()
                .filter(|f| f.contains(&w) && f.iter().all(|&v| map[v] != usize::MAX))
                .all(|f| self.edge_has_color(f, map, c, colors));
            if consistent && self.place(w + 1, map, used, c, colors) {
                map[w] = usize::MAX;
                used[x] = false;
                return true;
            }
            map[w] = usize::MAX;
            used[x] = false;
        }
        false
    }

    fn edge_has_color(&self, f: &[usize], map: &[usize], c: u8, colors: &[u8]) -> bool {
        let mut img: Vec<usize> = f.iter().map(|&v| map[v]).collect();
        img.sort_unstable();
        colors[self.board.rank(&img)] == c
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// `r_1(ℓ; q) = q(ℓ-1) + 1`.
pub fn hypergraph_ramsey_pigeonhole(l: u64, q: u64) -> Result<u64> {
    if l == 0 || q == 0 {
        return input("pigeonhole Ramsey number needs ℓ >= 1 and q >= 1");
    }
    q.checked_mul(l - 1)
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| Error::Capacity(format!("r_1({l}; {q}) overflows")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Saturation {
    Saturated,
    /// Adding `edge` does not raise the Ramsey number `value`.
    Unsaturated { edge: (usize, usize), value: usize },
    Unknown { cap: usize },
}

/// Two-color Ramsey saturation: every missing edge strictly raises `r`.
pub fn is_ramsey_saturated(g: &Graph, cap: usize, budget: u64) -> Result<Saturation> {
    let complement = g.complement();
    if complement.edge_count() == 0 {
        return Ok(Saturation::Saturated);
    }
    let base = ramsey_number(&RamseyQuery::graph(g, 2, cap)?.with_budget(budget))?;
    let RamseyValue::Known(r) = base else {
        return Ok(Saturation::Unknown { cap });
    };
    for (u, v) in complement.edges() {
        let mut plus = g.clone();
        plus.add_edge(u, v)?;
        // only boards up to r matter: r(G+e) <= r means unsaturated
        match ramsey_number(&RamseyQuery::graph(&plus, 2, r.max(plus.vertex_count()))?.with_budget(budget))? {
            RamseyValue::Known(value) if value <= r => {
                return Ok(Saturation::Unsaturated { edge: (u, v), value });
            }
            // Unknown at cap r already means r(G+e) > r
            RamseyValue::Known(_) | RamseyValue::Unknown(_) => {}
        }
    }
    Ok(Saturation::Saturated)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RamseyBounds {
    /// `2^(m/n - 1)`.
    pub lower: f64,
    /// `Δ 2^(Δ+5) n` for bipartite graphs with at least one edge.
    pub upper: Option<f64>,
    /// `2^(1-m) N^n` at `N = ceil(lower)`.
    pub expectation: f64,
}

pub fn ramsey_bounds(g: &Graph) -> RamseyBounds {
    let n = g.vertex_count() as f64;
    let m = g.edge_count() as f64;
    let lower = if n == 0.0 { 0.0 } else { (m / n - 1.0).exp2() };
    let upper = (g.is_bipartite() && g.edge_count() > 0).then(|| {
        let delta = g.max_degree() as f64;
        delta * (delta + 5.0).exp2() * n
    });
    let expectation = (1.0 - m).exp2() * lower.ceil().powf(n);
    RamseyBounds {
        lower,
        upper,
        expectation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(g: &Graph, q: usize, cap: usize) -> RamseyValue {
        ramsey_number(&RamseyQuery::graph(g, q, cap).unwrap()).unwrap()
    }

    #[test]
    fn small_graph_values() {
        assert_eq!(r(&Graph::complete(2), 2, 4), RamseyValue::Known(2));
        assert_eq!(r(&Graph::path(3), 2, 4), RamseyValue::Known(3));
        assert_eq!(r(&Graph::path(4), 2, 6), RamseyValue::Known(5));
        assert_eq!(r(&Graph::complete(3), 2, 6), RamseyValue::Known(6));
        assert_eq!(r(&Graph::complete(3), 2, 5), RamseyValue::Unknown(5));
        assert_eq!(r(&Graph::complete(3), 1, 5), RamseyValue::Known(3));
        assert_eq!(r(&Graph::new(3), 2, 5), RamseyValue::Known(3));
    }

    #[test]
    fn pentagon_avoids_triangles() {
        let q = RamseyQuery::graph(&Graph::complete(3), 2, 5).unwrap();
        let w = avoiding_coloring(&q, 5).unwrap().unwrap();
        assert_eq!(w.len(), 10);
        assert_eq!(w.iter().filter(|&&c| c == 0).count(), 5);
    }

    #[test]
    fn pigeonhole() {
        assert_eq!(hypergraph_ramsey_pigeonhole(1, 7).unwrap(), 1);
        assert_eq!(hypergraph_ramsey_pigeonhole(3, 2).unwrap(), 5);
        assert_eq!(hypergraph_ramsey_pigeonhole(2, 4).unwrap(), 5);
        assert!(hypergraph_ramsey_pigeonhole(0, 2).is_err());
        // against the exhaustive engine on 1-uniform targets
        for l in 1..=3 {
            for q in 1..=3 {
                let edges: Vec<Vec<usize>> = (0..l).map(|v| vec![v]).collect();
                let h = UniformHypergraph::from_edges(l, 1, &edges).unwrap();
                let v = ramsey_number(&RamseyQuery::new(h, q, 10).unwrap()).unwrap();
                assert_eq!(v, RamseyValue::Known(hypergraph_ramsey_pigeonhole(l as u64, q as u64).unwrap() as usize));
            }
        }
    }

    #[test]
    fn three_uniform_small() {
        // a single 3-edge is forced as soon as one exists
        let h = UniformHypergraph::from_edges(3, 3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(ramsey_number(&RamseyQuery::new(h, 2, 5).unwrap()).unwrap(), RamseyValue::Known(3));
        // any two triples on 4 vertices share a pair, so the four triples
        // of K_4^(3) force two of one color
        let h = UniformHypergraph::from_edges(4, 3, &[vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let v = ramsey_number(&RamseyQuery::new(h, 2, 6).unwrap()).unwrap();
        assert_eq!(v, RamseyValue::Known(4));
    }

    #[test]
    fn saturation() {
        assert_eq!(is_ramsey_saturated(&Graph::complete(4), 4, 1_000_000).unwrap(), Saturation::Saturated);
        assert_eq!(is_ramsey_saturated(&Graph::path(3), 6, 1_000_000).unwrap(), Saturation::Saturated);
        let matching = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            is_ramsey_saturated(&matching, 6, 1_000_000).unwrap(),
            Saturation::Unsaturated { value: 5, .. }
        ));
    }

    #[test]
    fn budget_is_a_capacity_error() {
        let q = RamseyQuery::graph(&Graph::complete(3), 2, 6).unwrap().with_budget(10);
        assert!(matches!(ramsey_number(&q), Err(Error::Capacity(_))));
    }

    #[test]
    fn bounds() {
        let b = ramsey_bounds(&Graph::complete(4));
        assert!((b.lower - 2f64.sqrt()).abs() < 1e-12);
        assert!(b.upper.is_none());
        assert_eq!(ramsey_bounds(&Graph::cycle(4)).upper, Some(1024.0));
        assert_eq!(ramsey_bounds(&Graph::new(1)).lower, 0.5);
    }
}
