//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex, so membership tests are
//! constant time and complements are cheap. That suits the dense graphs this
//! crate works with (complements of sparse graphs, small Ramsey boards).
//! Very large sparse graphs, like online game boards, use adjacency lists
//! and [`crate::degeneracy::degeneracy_of_lists`] directly.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{input, Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    degree: Vec<usize>,
    edges: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_list())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Graph {
            n,
            words,
            rows: vec![0; words * n],
            degree: vec![0; n],
            edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.insert(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.insert(0, n - 1);
        }
        g
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.insert(0, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return input(format!("vertex {v} out of range for n = {}", self.n));
        }
        Ok(())
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn bit(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    fn insert(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.bit(u, v) {
            return false;
        }
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
        self.degree[u] += 1;
        self.degree[v] += 1;
        self.edges += 1;
        true
    }

    /// Adds `uv`; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return input(format!("self-loop at vertex {u}"));
        }
        Ok(self.insert(u, v))
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || u == v || !self.bit(u, v) {
            return false;
        }
        self.rows[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.rows[v * self.words + u / WORD] &= !(1 << (u % WORD));
        self.degree[u] -= 1;
        self.degree[v] -= 1;
        self.edges -= 1;
        true
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bit(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * WORD + b)
                }
            })
        })
    }

    /// Edges as pairs `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbors(v).collect()).collect()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.bit(u, v) {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            self.check_vertex(u)?;
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if u == v {
                    return input(format!("vertex {u} repeated"));
                }
                if self.bit(u, v) {
                    g.insert(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges + 1 == self.n && self.is_connected()
    }

    /// Breadth-first 2-colouring, component by component, each component
    /// rooted at its smallest vertex with colour 0. `None` if an odd cycle
    /// exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Text form: `p <n> <m>` followed by one `u v` line per edge, 1-based.
    pub fn to_text(&self) -> String {
        let mut s = format!("p {} {}\n", self.n, self.edges);
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{} {}", u + 1, v + 1);
        }
        s
    }

    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = content_lines(text);
        let (lineno, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "empty graph file".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 || fields[0] != "p" {
            return Err(Error::Parse {
                line: lineno,
                msg: "expected header `p <n> <m>`".into(),
            });
        }
        let n = parse_num(fields[1], lineno)?;
        let m = parse_num(fields[2], lineno)?;
        let mut g = Graph::new(n);
        let mut seen = 0;
        for (lineno, line) in lines {
            let ids = parse_ids(line, lineno, n)?;
            if ids.len() != 2 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "expected two vertex ids".into(),
                });
            }
            g.add_edge(ids[0], ids[1]).map_err(|e| Error::Parse {
                line: lineno,
                msg: e.to_string(),
            })?;
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("header announces {m} edges, found {seen}"),
            });
        }
        Ok(g)
    }
}

/// A `k`-uniform hypergraph on `0..n` with no repeated edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformHypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
    index: std::collections::HashSet<Vec<usize>>,
}

impl UniformHypergraph {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return input("uniformity must be at least 1");
        }
        Ok(UniformHypergraph {
            n,
            k,
            edges: Vec::new(),
            index: Default::default(),
        })
    }

    pub fn from_edges(n: usize, k: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let mut h = UniformHypergraph::new(n, k)?;
        for e in edges {
            h.add_edge(e)?;
        }
        Ok(h)
    }

    /// Every `k`-subset of `0..n`.
    pub fn complete(n: usize, k: usize) -> Result<Self> {
        let mut h = UniformHypergraph::new(n, k)?;
        for e in crate::combin::Combinations::new(n, k) {
            h.add_edge(&e)?;
        }
        Ok(h)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Adds an edge (any vertex order); returns false for a duplicate.
    pub fn add_edge(&mut self, e: &[usize]) -> Result<bool> {
        if e.len() != self.k {
            return input(format!("edge {e:?} does not have {} vertices", self.k));
        }
        let mut e = e.to_vec();
        e.sort_unstable();
        if e.windows(2).any(|w| w[0] == w[1]) {
            return input(format!("edge {e:?} repeats a vertex"));
        }
        if let Some(&v) = e.iter().find(|&&v| v >= self.n) {
            return input(format!("vertex {v} out of range for n = {}", self.n));
        }
        if !self.index.insert(e.clone()) {
            return Ok(false);
        }
        self.edges.push(e);
        Ok(true)
    }

    pub fn remove_edge(&mut self, e: &[usize]) -> bool {
        let mut e = e.to_vec();
        e.sort_unstable();
        if self.index.remove(&e) {
            self.edges.retain(|f| *f != e);
            true
        } else {
            false
        }
    }

    /// Membership test; `e` must already be sorted ascending.
    pub fn has_sorted_edge(&self, e: &[usize]) -> bool {
        self.index.contains(e)
    }

    pub fn has_edge(&self, e: &[usize]) -> bool {
        let mut e = e.to_vec();
        e.sort_unstable();
        self.index.contains(&e)
    }

    /// Sub-hypergraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<UniformHypergraph> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return input(format!("vertex {v} out of range"));
            }
            pos[v] = i;
        }
        let mut h = UniformHypergraph::new(vertices.len(), self.k)?;
        for e in &self.edges {
            if e.iter().all(|&v| pos[v] != usize::MAX) {
                let mapped: Vec<usize> = e.iter().map(|&v| pos[v]).collect();
                h.add_edge(&mapped)?;
            }
        }
        Ok(h)
    }

    /// Text form: `h <k> <n> <m>` followed by one line of `k` ids per edge, 1-based.
    pub fn to_text(&self) -> String {
        let mut s = format!("h {} {} {}\n", self.k, self.n, self.edges.len());
        let mut edges = self.edges.clone();
        edges.sort();
        for e in edges {
            let ids: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
            let _ = writeln!(s, "{}", ids.join(" "));
        }
        s
    }

    pub fn parse(text: &str) -> Result<UniformHypergraph> {
        let mut lines = content_lines(text);
        let (lineno, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "empty hypergraph file".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "h" {
            return Err(Error::Parse {
                line: lineno,
                msg: "expected header `h <k> <n> <m>`".into(),
            });
        }
        let k = parse_num(fields[1], lineno)?;
        let n = parse_num(fields[2], lineno)?;
        let m = parse_num(fields[3], lineno)?;
        let mut h = UniformHypergraph::new(n, k).map_err(|e| Error::Parse {
            line: lineno,
            msg: e.to_string(),
        })?;
        let mut seen = 0;
        for (lineno, line) in lines {
            let ids = parse_ids(line, lineno, n)?;
            h.add_edge(&ids).map_err(|e| Error::Parse {
                line: lineno,
                msg: e.to_string(),
            })?;
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("header announces {m} edges, found {seen}"),
            });
        }
        Ok(h)
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_num(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{tok}` is not a nonnegative integer"),
    })
}

/// Parses 1-based ids and returns them 0-based.
pub(crate) fn parse_ids(line: &str, lineno: usize, n: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            let v = parse_num(tok, lineno)?;
            if v == 0 || v > n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("vertex id {v} outside 1..={n}"),
                });
            }
            Ok(v - 1)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_counts() {
        let g = Graph::complete(5);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.complement().edge_count(), 0);
        assert_eq!(Graph::cycle(5).max_degree(), 2);
        assert!(Graph::path(4).is_tree());
        assert!(!Graph::cycle(4).is_forest());
    }

    #[test]
    fn rejects_loops_and_range() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
    }

    #[test]
    fn bipartite_detection() {
        assert!(Graph::cycle(6).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::cycle(7);
        let text = format!("# a comment\n{}", g.to_text());
        assert_eq!(Graph::parse(&text).unwrap(), g);
        assert!(Graph::parse("p 3 2\n1 2\n").is_err());
        assert!(Graph::parse("p 3 1\n1 4\n").is_err());

        let h = UniformHypergraph::complete(5, 3).unwrap();
        assert_eq!(UniformHypergraph::parse(&h.to_text()).unwrap().edge_count(), 10);
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::path(5);
        let sub = g.induced(&[4, 3, 1]).unwrap();
        assert!(sub.has_edge(0, 1));
        assert!(!sub.has_edge(1, 2));
    }

    #[test]
    fn hypergraph_rejects_bad_edges() {
        let mut h = UniformHypergraph::new(4, 3).unwrap();
        assert!(h.add_edge(&[0, 1]).is_err());
        assert!(h.add_edge(&[0, 1, 1]).is_err());
        assert!(h.add_edge(&[0, 1, 4]).is_err());
        assert!(h.add_edge(&[2, 0, 1]).unwrap());
        assert!(!h.add_edge(&[0, 1, 2]).unwrap());
        assert!(h.has_edge(&[1, 2, 0]));
    }
}
