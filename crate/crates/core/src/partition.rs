//! Clique partitions of `K_n`, of complements of sparse graphs and of
//! complements of forests, plus tree partitions, an exact-cover verifier and
//! a brute-force `cp` oracle.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{capacity, input, Error, Result};
use crate::graph::{content_lines, parse_ids, Graph};
use crate::plane::{next_prime_at_least, ProjectivePlane};

/// Cliques exactly covering the edge set of `target`. Parts with fewer than
/// two vertices are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartition {
    pub target: Graph,
    pub parts: Vec<Vec<usize>>,
}

impl CliquePartition {
    fn new(target: Graph, parts: Vec<Vec<usize>>) -> CliquePartition {
        let parts = parts
            .into_iter()
            .filter(|p| p.len() >= 2)
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        CliquePartition { target, parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn max_part(&self) -> usize {
        self.parts.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// One part per line (sorted 1-based ids), parts in lexicographic order,
    /// then the trailer `c <parts> <bound>`.
    pub fn to_text(&self, bound: u64) -> String {
        let mut parts = self.parts.clone();
        for p in &mut parts {
            p.sort_unstable();
        }
        parts.sort();
        let mut s = String::new();
        for p in &parts {
            let ids: Vec<String> = p.iter().map(|v| (v + 1).to_string()).collect();
            let _ = writeln!(s, "{}", ids.join(" "));
        }
        let _ = writeln!(s, "c {} {}", parts.len(), bound);
        s
    }

    /// Reads parts written by [`CliquePartition::to_text`] against a known
    /// target. The trailer, if present, must agree with the part count.
    pub fn parse(target: Graph, text: &str) -> Result<CliquePartition> {
        let n = target.vertex_count();
        let mut parts = Vec::new();
        let mut trailer = None;
        for (lineno, line) in content_lines(text) {
            if let Some(rest) = line.strip_prefix("c ") {
                let count = rest.split_whitespace().next().and_then(|t| t.parse::<usize>().ok());
                trailer = Some((lineno, count));
                continue;
            }
            parts.push(parse_ids(line, lineno, n)?);
        }
        if let Some((line, count)) = trailer {
            if count != Some(parts.len()) {
                return Err(Error::Parse {
                    line,
                    msg: format!("trailer count disagrees with {} parts", parts.len()),
                });
            }
        }
        Ok(CliquePartition { target, parts })
    }
}

/// Why a claimed clique partition is not one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionDefect {
    VertexOutOfRange { part: usize, vertex: usize },
    RepeatedVertex { part: usize, vertex: usize },
    NotAClique { part: usize, u: usize, v: usize },
    CoveredTwice { u: usize, v: usize },
    Uncovered { u: usize, v: usize },
}

impl std::fmt::Display for PartitionDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // vertex ids are reported 1-based, like the file formats
        match *self {
            PartitionDefect::VertexOutOfRange { part, vertex } => {
                write!(f, "part {} names vertex {} outside the graph", part + 1, vertex + 1)
            }
            PartitionDefect::RepeatedVertex { part, vertex } => {
                write!(f, "part {} repeats vertex {}", part + 1, vertex + 1)
            }
            PartitionDefect::NotAClique { part, u, v } => {
                write!(f, "part {} contains non-edge {}-{}", part + 1, u + 1, v + 1)
            }
            PartitionDefect::CoveredTwice { u, v } => write!(f, "edge {}-{} covered more than once", u + 1, v + 1),
            PartitionDefect::Uncovered { u, v } => write!(f, "edge {}-{} uncovered", u + 1, v + 1),
        }
    }
}

/// Exact-cover check: every part is a clique of `g` and every edge of `g`
/// lies in exactly one part. Reports the first defect found.
pub fn check_partition(g: &Graph, parts: &[Vec<usize>]) -> std::result::Result<(), PartitionDefect> {
    let n = g.vertex_count();
    let mut covered = vec![false; n * n];
    for (pi, part) in parts.iter().enumerate() {
        for (i, &u) in part.iter().enumerate() {
            if u >= n {
                return Err(PartitionDefect::VertexOutOfRange { part: pi, vertex: u });
            }
            for &v in &part[i + 1..] {
                if v >= n {
                    return Err(PartitionDefect::VertexOutOfRange { part: pi, vertex: v });
                }
                if u == v {
                    return Err(PartitionDefect::RepeatedVertex { part: pi, vertex: u });
                }
                let (a, b) = (u.min(v), u.max(v));
                if !g.has_edge(a, b) {
                    return Err(PartitionDefect::NotAClique { part: pi, u: a, v: b });
                }
                if covered[a * n + b] {
                    return Err(PartitionDefect::CoveredTwice { u: a, v: b });
                }
                covered[a * n + b] = true;
            }
        }
    }
    // the edge count matches iff nothing is missing, since nothing was
    // covered twice and every covered pair is an edge
    let total: usize = parts.iter().map(|p| p.len() * p.len().saturating_sub(1) / 2).sum();
    if total != g.edge_count() {
        if let Some((u, v)) = g.edges().find(|&(u, v)| !covered[u * n + v]) {
            return Err(PartitionDefect::Uncovered { u, v });
        }
    }
    Ok(())
}

pub fn verify_partition(g: &Graph, p: &CliquePartition) -> bool {
    check_partition(g, &p.parts).is_ok()
}

/// `max(200 (n/k)^2, 4n)`.
pub fn complete_bound(n: usize, k: usize) -> f64 {
    let ratio = n as f64 / k as f64;
    (200.0 * ratio * ratio).max(4.0 * n as f64)
}

/// `C(n,2) / C(k,2)`, the pigeonhole floor for parts of at most `k` vertices.
pub fn complete_floor(n: usize, k: usize) -> f64 {
    (n * n.saturating_sub(1)) as f64 / (k * (k - 1)) as f64
}

/// Partition of `K_n` into cliques of at most `k` vertices.
///
/// Three cases: `n <= k` gives one clique; if the least prime `q` with
/// `q^2+q+1 >= n` has `q+1 <= k`, the lines of `P_q` restricted to the first
/// `n` points; otherwise the Turán graph `T_{n,k}` is partitioned by the
/// lines of `P_q` (`q` the least prime `>= n/k + k`) missing `k` fixed lines,
/// and each Turán part is handled recursively.
pub fn partition_complete(n: usize, k: usize) -> Result<CliquePartition> {
    if k < 2 {
        return input(format!("clique size bound k = {k} must be at least 2"));
    }
    let mut memo = HashMap::new();
    let parts = complete_parts(n, k, &mut memo)?;
    Ok(CliquePartition::new(Graph::complete(n), parts.as_ref().clone()))
}

type Memo = HashMap<usize, std::rc::Rc<Vec<Vec<usize>>>>;

fn complete_parts(n: usize, k: usize, memo: &mut Memo) -> Result<std::rc::Rc<Vec<Vec<usize>>>> {
    if let Some(p) = memo.get(&n) {
        return Ok(p.clone());
    }
    let parts = if n <= 1 {
        Vec::new()
    } else if n <= k {
        vec![(0..n).collect()]
    } else {
        let q = least_prime_plane_at_least(n)?;
        if q + 1 <= k {
            restricted_plane(n, q)?
        } else {
            turan_parts(n, k, memo)?
        }
    };
    let parts = std::rc::Rc::new(parts);
    memo.insert(n, parts.clone());
    Ok(parts)
}

/// Least prime `q` with `q^2 + q + 1 >= n`.
fn least_prime_plane_at_least(n: usize) -> Result<usize> {
    let mut q = 2u64;
    while q * q + q + 1 < n as u64 {
        q = next_prime_at_least(q + 1)?;
    }
    Ok(q as usize)
}

fn restricted_plane(n: usize, q: usize) -> Result<Vec<Vec<usize>>> {
    let plane = ProjectivePlane::cached(q)?;
    Ok(plane
        .lines()
        .iter()
        .map(|l| l.iter().copied().filter(|&p| p < n).collect::<Vec<_>>())
        .filter(|l| l.len() >= 2)
        .collect())
}

fn turan_parts(n: usize, k: usize, memo: &mut Memo) -> Result<Vec<Vec<usize>>> {
    let q = next_prime_at_least((n.div_ceil(k) + k) as u64)? as usize;
    let plane = ProjectivePlane::cached(q)?;
    let p_count = plane.point_count();
    // L_1..L_k are lines 0..k; the points where they cross are off limits
    let mut on_fixed = vec![0u32; p_count];
    for l in 0..k {
        for &p in plane.line(l) {
            on_fixed[p] += 1;
        }
    }
    let (base, extra) = (n / k, n % k);
    let mut vertex_at = vec![usize::MAX; p_count];
    let mut embedded = Vec::with_capacity(n);
    let mut groups = Vec::with_capacity(k);
    let mut next_vertex = 0;
    for l in 0..k {
        let size = base + usize::from(l < extra);
        let free: Vec<usize> = plane.line(l).iter().copied().filter(|&p| on_fixed[p] == 1).take(size).collect();
        if free.len() < size {
            return capacity(format!("line {l} of P_{q} has too few free points for n = {n}, k = {k}"));
        }
        let group: Vec<usize> = (next_vertex..next_vertex + size).collect();
        for (&p, &v) in free.iter().zip(&group) {
            vertex_at[p] = v;
            embedded.push((v, p));
        }
        next_vertex += size;
        groups.push(group);
    }
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); plane.line_count()];
    for &(v, p) in &embedded {
        for &l in plane.lines_through(p) {
            if l >= k {
                buckets[l].push(v);
            }
        }
    }
    let mut parts: Vec<Vec<usize>> = buckets.into_iter().filter(|b| b.len() >= 2).collect();
    for group in &groups {
        let sub = complete_parts(group.len(), k, memo)?;
        parts.extend(sub.iter().map(|p| p.iter().map(|&i| group[i]).collect()));
    }
    Ok(parts)
}

/// One clique on `full` plus a `K_2` for every other edge.
///
/// Every vertex of `full` must be adjacent to all other vertices of `g`.
pub fn partition_near_complete(g: &Graph, full: &[usize]) -> Result<CliquePartition> {
    let vertices: Vec<usize> = (0..g.vertex_count()).collect();
    let parts = near_complete_parts(g, &vertices, full)?;
    Ok(CliquePartition::new(g.clone(), parts))
}

/// [`partition_near_complete`] on the subgraph induced by `vertices`.
fn near_complete_parts(g: &Graph, vertices: &[usize], full: &[usize]) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let mut is_full = vec![false; n];
    for &f in full {
        if f >= n {
            return input(format!("vertex {f} out of range"));
        }
        is_full[f] = true;
    }
    for &f in full {
        if let Some(&v) = vertices.iter().find(|&&v| v != f && !g.has_edge(f, v)) {
            return input(format!("vertex {f} is listed as full but misses {v}"));
        }
    }
    let mut parts = Vec::new();
    if full.len() >= 2 {
        parts.push(full.to_vec());
    }
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if g.has_edge(u, v) && !(is_full[u] && is_full[v]) {
                parts.push(vec![u, v]);
            }
        }
    }
    Ok(parts)
}

/// Bookkeeping from [`partition_complement`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SparseComplementStats {
    /// Clique-size bound used for the `K_n` partition.
    pub k: usize,
    /// Number of cliques in that partition.
    pub base_parts: usize,
    /// Cliques that contained an edge of the sparse graph.
    pub touched: usize,
    pub sparse_edges: usize,
}

impl SparseComplementStats {
    /// `N + 2mk`.
    pub fn bound(&self) -> usize {
        self.base_parts + 2 * self.sparse_edges * self.k
    }
}

/// Clique-size bound `k = max(2, floor((n^2/m)^(1/3)))`, clamped to at most
/// `ceil(sqrt n)` (and used unclamped from below when `m = 0`).
pub fn sparse_complement_k(n: usize, m: usize) -> usize {
    let cap = ((n as f64).sqrt().ceil() as usize).max(2);
    if m == 0 {
        return cap;
    }
    let mut k = ((n * n) as f64 / m as f64).cbrt().floor() as usize;
    // guard against cbrt rounding just below an exact cube
    while (k + 1).pow(3) * m <= n * n {
        k += 1;
    }
    while k > 0 && k.pow(3) * m > n * n {
        k -= 1;
    }
    k.clamp(2, cap)
}

/// Partition of the complement of `f`: partition `K_n` into cliques of at
/// most `k` vertices, keep those avoiding `f`, and re-partition every clique
/// touching `f` with [`partition_near_complete`].
pub fn partition_complement(f: &Graph) -> Result<(CliquePartition, SparseComplementStats)> {
    let n = f.vertex_count();
    let m = f.edge_count();
    let k = sparse_complement_k(n, m);
    let complement = f.complement();
    let base = partition_complete(n, k)?;
    let mut parts = Vec::new();
    let mut touched = 0;
    for q in &base.parts {
        let mut untouched = vec![true; q.len()];
        let mut hit = false;
        for i in 0..q.len() {
            for j in i + 1..q.len() {
                if f.has_edge(q[i], q[j]) {
                    untouched[i] = false;
                    untouched[j] = false;
                    hit = true;
                }
            }
        }
        if !hit {
            parts.push(q.clone());
            continue;
        }
        touched += 1;
        let full: Vec<usize> = q.iter().zip(&untouched).filter(|(_, &u)| u).map(|(&v, _)| v).collect();
        parts.extend(near_complete_parts(&complement, q, &full)?);
    }
    let stats = SparseComplementStats {
        k,
        base_parts: base.len(),
        touched,
        sparse_edges: m,
    };
    Ok((CliquePartition::new(complement, parts), stats))
}

/// Edge-disjoint subtrees covering a tree, pairwise sharing at most one
/// vertex, listed so that every prefix union is connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePartition {
    pub tree: Graph,
    pub pieces: Vec<Vec<usize>>,
}

/// A pending branch hanging below an attachment vertex. Its edge count
/// equals its vertex count because it joins the attachment by one edge per
/// component.
#[derive(Debug, Clone)]
struct Branch(Vec<usize>);

#[derive(Debug, Clone)]
struct Piece {
    centre: usize,
    branches: Vec<Branch>,
}

impl Piece {
    fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = std::iter::once(self.centre)
            .chain(self.branches.iter().flat_map(|b| b.0.iter().copied()))
            .collect();
        v.sort_unstable();
        v
    }
}

/// Splits a tree into subtrees of at most `k` vertices.
///
/// The tree is rooted at vertex 0 and scanned in postorder. At each vertex
/// the pending branches of its children are grouped; a group is cut off as a
/// piece, with the vertex kept as its shared attachment, once it holds at
/// least `ceil(k/2)` edges. Pieces therefore carry between `ceil(k/2)` and
/// `k-1` edges, apart from the root remainder, which is merged into a
/// neighbouring piece (re-split in two by a subset-sum search when the union
/// is too large).
pub fn tree_partition(t: &Graph, k: usize) -> Result<TreePartition> {
    let n = t.vertex_count();
    if !t.is_tree() {
        return input("tree_partition needs a connected acyclic graph");
    }
    if k < 2 || k > n {
        return input(format!("tree_partition needs 2 <= k <= n, got k = {k}, n = {n}"));
    }
    if n <= k {
        return Ok(TreePartition {
            tree: t.clone(),
            pieces: vec![(0..n).collect()],
        });
    }
    let target = k.div_ceil(2);
    // iterative postorder from root 0
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    parent[0] = 0;
    while let Some(u) = stack.pop() {
        order.push(u);
        for w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &u in order.iter().skip(1) {
        children[parent[u]].push(u);
    }
    for c in &mut children {
        c.sort_unstable();
    }
    let mut pending: Vec<Option<Branch>> = vec![None; n];
    let mut pieces: Vec<Piece> = Vec::new();
    for &v in order.iter().rev() {
        let mut group: Vec<Branch> = Vec::new();
        let mut group_edges = 0;
        for &c in &children[v] {
            let branch = pending[c].take().expect("child processed before parent");
            let e = branch.0.len();
            if group_edges + e <= k - 1 {
                group_edges += e;
                group.push(branch);
                if group_edges >= target {
                    pieces.push(Piece {
                        centre: v,
                        branches: std::mem::take(&mut group),
                    });
                    group_edges = 0;
                }
            } else {
                // only reachable for odd k with a full-size branch
                pieces.push(Piece {
                    centre: v,
                    branches: vec![branch],
                });
            }
        }
        let mut vertices = vec![v];
        vertices.extend(group.into_iter().flat_map(|b| b.0));
        pending[v] = Some(Branch(vertices));
    }
    let rest = pending[0].take().unwrap();
    if rest.0.len() >= 2 {
        absorb_remainder(&mut pieces, rest.0, k);
    }
    let pieces = connected_order(n, pieces.iter().map(Piece::vertices).collect());
    Ok(TreePartition {
        tree: t.clone(),
        pieces,
    })
}

/// Folds the root's leftover subtree into a piece it touches.
fn absorb_remainder(pieces: &mut Vec<Piece>, rest: Vec<usize>, k: usize) {
    let mut in_rest = std::collections::HashSet::new();
    in_rest.extend(rest.iter().copied());
    let idx = pieces
        .iter()
        .rposition(|p| in_rest.contains(&p.centre))
        .expect("the leftover touches some piece when n > k");
    let piece = pieces.remove(idx);
    let centre = piece.centre;
    let mut branches = piece.branches;
    branches.push(Branch(rest.into_iter().filter(|&v| v != centre).collect()));
    let total: usize = branches.iter().map(|b| b.0.len()).sum();
    if total <= k - 1 {
        pieces.insert(idx, Piece { centre, branches });
        return;
    }
    // choose a subset whose edge count is as close to half as possible
    // while both sides stay within k-1 edges
    let sizes: Vec<usize> = branches.iter().map(|b| b.0.len()).collect();
    let mut reach: Vec<Option<(usize, usize)>> = vec![None; total + 1];
    reach[0] = Some((usize::MAX, 0));
    for (i, &s) in sizes.iter().enumerate() {
        for sum in (s..=total).rev() {
            if reach[sum].is_none() && reach[sum - s].is_some_and(|(last, _)| last != i) {
                reach[sum] = Some((i, sum - s));
            }
        }
    }
    let best = (0..=total)
        .filter(|&s| reach[s].is_some() && s <= k - 1 && total - s <= k - 1)
        .min_by_key(|&s| (s.abs_diff(total - s), s))
        .expect("two pieces always suffice");
    let mut in_first = vec![false; branches.len()];
    let mut s = best;
    while s > 0 {
        let (i, prev) = reach[s].unwrap();
        in_first[i] = true;
        s = prev;
    }
    let (mut first, mut second) = (Vec::new(), Vec::new());
    for (b, f) in branches.into_iter().zip(in_first) {
        if f {
            first.push(b);
        } else {
            second.push(b);
        }
    }
    pieces.insert(idx, Piece { centre, branches: second });
    pieces.insert(idx, Piece { centre, branches: first });
}

/// Orders pieces so that each prefix union is connected, starting from the
/// piece containing vertex 0 and always taking the lowest-index piece that
/// touches the union.
fn connected_order(n: usize, pieces: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, p) in pieces.iter().enumerate() {
        for &v in p {
            by_vertex[v].push(i);
        }
    }
    let mut placed = vec![false; pieces.len()];
    let mut frontier = std::collections::BTreeSet::new();
    let start = by_vertex[0].first().copied().unwrap_or(0);
    frontier.insert(start);
    let mut out = Vec::with_capacity(pieces.len());
    while let Some(i) = frontier.pop_first() {
        if placed[i] {
            continue;
        }
        placed[i] = true;
        for &v in &pieces[i] {
            for &j in &by_vertex[v] {
                if !placed[j] {
                    frontier.insert(j);
                }
            }
        }
        out.push(i);
    }
    out.into_iter().map(|i| pieces[i].clone()).collect()
}

/// Checks a tree partition against its contract for bound `k`: each piece
/// induces a subtree with at most `k` vertices (at least `k/3` once the tree
/// exceeds `k`), edges covered exactly once, pairwise intersections of at
/// most one vertex, at most `2n/k` pieces, and every piece after the first
/// meeting the union of its predecessors in exactly one vertex.
pub fn check_tree_partition(tp: &TreePartition, k: usize) -> std::result::Result<(), String> {
    let t = &tp.tree;
    let n = t.vertex_count();
    if n <= k {
        return if tp.pieces.len() == 1 && tp.pieces[0].len() == n {
            Ok(())
        } else {
            Err("a tree with n <= k must be a single piece".into())
        };
    }
    if tp.pieces.len() as f64 > 2.0 * n as f64 / k as f64 {
        return Err(format!("{} pieces exceed 2n/k = {:.2}", tp.pieces.len(), 2.0 * n as f64 / k as f64));
    }
    let mut cover = vec![0u32; n * n];
    let mut in_union = vec![false; n];
    for (i, piece) in tp.pieces.iter().enumerate() {
        if piece.len() > k || (3 * piece.len()) < k {
            return Err(format!("piece {i} has {} vertices, outside [k/3, k]", piece.len()));
        }
        let sub = t.induced(piece).map_err(|e| e.to_string())?;
        if !sub.is_tree() {
            return Err(format!("piece {i} does not induce a subtree"));
        }
        for (a, b) in sub.edges() {
            let (u, v) = (piece[a].min(piece[b]), piece[a].max(piece[b]));
            cover[u * n + v] += 1;
        }
        let shared = piece.iter().filter(|&&v| in_union[v]).count();
        if i > 0 && shared != 1 {
            return Err(format!("piece {i} meets the earlier pieces in {shared} vertices"));
        }
        for &v in piece {
            in_union[v] = true;
        }
        for (j, other) in tp.pieces[..i].iter().enumerate() {
            let common = piece.iter().filter(|v| other.contains(v)).count();
            if common > 1 {
                return Err(format!("pieces {j} and {i} share {common} vertices"));
            }
        }
    }
    for (u, v) in t.edges() {
        if cover[u * n + v] != 1 {
            return Err(format!("tree edge {u}-{v} covered {} times", cover[u * n + v]));
        }
    }
    Ok(())
}

/// `100 n (1 + log2 log2 n) + (n - 1)`: the forest-complement bound plus the
/// allowance for completing a forest to a spanning tree.
pub fn forest_bound(n: usize) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let nf = n as f64;
    let loglog = if n > 2 { nf.log2().log2() } else { 0.0 };
    100.0 * nf * (1.0 + loglog) + (nf - 1.0)
}

/// Largest vertex count handled by listing complement edges directly.
pub const FOREST_BASE_CASE: usize = 200;

/// Partition of the complement of a forest.
///
/// Up to [`FOREST_BASE_CASE`] vertices every complement edge is its own part.
/// Beyond that the forest is completed to a spanning tree (lowest-id
/// component representatives joined to vertex 0's component), the tree is
/// split with [`tree_partition`] at `k = floor(sqrt n)`, each piece is laid
/// on its own line of `P_q` (`q` the least prime `>= 3 sqrt n`) through the
/// image of its attachment vertex, lines free of tree edges become cliques,
/// and the vertices on each piece's line are handled recursively.
pub fn partition_complement_forest(f: &Graph) -> Result<CliquePartition> {
    if !f.is_forest() {
        return input("partition_complement_forest needs an acyclic graph");
    }
    let parts = forest_parts(f)?;
    Ok(CliquePartition::new(f.complement(), parts))
}

fn forest_parts(f: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = f.vertex_count();
    if n <= FOREST_BASE_CASE {
        let mut parts = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !f.has_edge(u, v) {
                    parts.push(vec![u, v]);
                }
            }
        }
        return Ok(parts);
    }
    let mut tree = f.clone();
    let mut parts = Vec::new();
    let comps = f.components();
    for comp in comps.iter().skip(1) {
        tree.add_edge(comps[0][0], comp[0])?;
        // a completion edge is an edge of the complement of f
        parts.push(vec![comps[0][0], comp[0]]);
    }
    let sqrt_n = (n as f64).sqrt();
    let k = (sqrt_n.floor() as usize).max(2);
    let tp = tree_partition(&tree, k)?;
    let q = next_prime_at_least((3.0 * sqrt_n).ceil() as u64)? as usize;
    let plane = ProjectivePlane::cached(q)?;
    let layout = embed_pieces(&plane, &tp.pieces, n)?;

    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); plane.line_count()];
    for (v, &p) in layout.point_of.iter().enumerate() {
        for &l in plane.lines_through(p) {
            buckets[l].push(v);
        }
    }
    let mut piece_line = vec![false; plane.line_count()];
    for &l in &layout.lines {
        piece_line[l] = true;
    }
    for (l, bucket) in buckets.into_iter().enumerate() {
        if bucket.len() < 2 {
            continue;
        }
        if !piece_line[l] {
            parts.push(bucket);
            continue;
        }
        let sub = tree.induced(&bucket)?;
        for p in forest_parts(&sub)? {
            parts.push(p.into_iter().map(|i| bucket[i]).collect());
        }
    }
    Ok(parts)
}

struct Layout {
    point_of: Vec<usize>,
    lines: Vec<usize>,
}

/// Places each piece on its own line through its attachment point, new
/// vertices on points not yet covered by an earlier piece line. Among the
/// admissible lines the one carrying fewest foreign vertices is preferred.
fn embed_pieces(plane: &ProjectivePlane, pieces: &[Vec<usize>], n: usize) -> Result<Layout> {
    let mut point_of = vec![usize::MAX; n];
    let mut occupied = vec![usize::MAX; plane.point_count()];
    let mut covered = vec![false; plane.point_count()];
    let mut used_line = vec![false; plane.line_count()];
    let mut lines = Vec::with_capacity(pieces.len());
    for (i, piece) in pieces.iter().enumerate() {
        let anchor = piece.iter().copied().find(|&v| point_of[v] != usize::MAX);
        let line = match anchor {
            None if i == 0 => 0,
            None => return input("tree pieces are not in connected order"),
            Some(a) => {
                let w = point_of[a];
                plane
                    .lines_through(w)
                    .iter()
                    .copied()
                    .filter(|&l| !used_line[l])
                    .min_by_key(|&l| {
                        let foreign = plane.line(l).iter().filter(|&&p| p != w && occupied[p] != usize::MAX).count();
                        (foreign, l)
                    })
                    .ok_or_else(|| Error::Capacity(format!("no unused line through the anchor of piece {i}")))?
            }
        };
        used_line[line] = true;
        lines.push(line);
        let free_points: Vec<usize> = plane
            .line(line)
            .iter()
            .copied()
            .filter(|&p| !covered[p] && occupied[p] == usize::MAX)
            .collect();
        let mut free = free_points.into_iter();
        for &v in piece {
            if point_of[v] != usize::MAX {
                continue;
            }
            let p = free
                .next()
                .ok_or_else(|| Error::Capacity(format!("line {line} has no free point for piece {i}")))?;
            point_of[v] = p;
            occupied[p] = v;
        }
        for &p in plane.line(line) {
            covered[p] = true;
        }
    }
    if point_of.contains(&usize::MAX) {
        return input("tree pieces do not cover every vertex");
    }
    Ok(Layout { point_of, lines })
}

/// Largest graph accepted by [`cp_bruteforce`].
pub const CP_BRUTE_MAX: usize = 8;

/// Exact clique partition number by branch and bound: the lowest uncovered
/// edge must lie in some clique of still-uncovered edges; every such clique
/// is tried.
pub fn cp_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > CP_BRUTE_MAX {
        return capacity(format!("cp brute force is capped at {CP_BRUTE_MAX} vertices, got {n}"));
    }
    let mut open: Vec<u16> = (0..n).map(|v| g.neighbors(v).fold(0u16, |m, w| m | 1 << w)).collect();
    let mut best = g.edge_count();
    cp_search(&mut open, 0, &mut best);
    Ok(best)
}

fn cp_search(open: &mut [u16], used: usize, best: &mut usize) {
    if used >= *best {
        return;
    }
    let Some(u) = open.iter().position(|&m| m != 0) else {
        *best = used;
        return;
    };
    let v = open[u].trailing_zeros() as usize;
    // cliques through u and v in the uncovered graph
    let common = open[u] & open[v];
    let mut cliques = Vec::new();
    grow_cliques(open, (1 << u) | (1 << v), common, &mut cliques);
    // larger cliques first finds good bounds early
    cliques.sort_by_key(|c: &u16| std::cmp::Reverse(c.count_ones()));
    for c in cliques {
        toggle(open, c);
        cp_search(open, used + 1, best);
        toggle(open, c);
    }
}

fn grow_cliques(open: &[u16], clique: u16, cands: u16, out: &mut Vec<u16>) {
    out.push(clique);
    let mut rest = cands;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        // only extend with higher candidates to avoid duplicates
        grow_cliques(open, clique | (1 << w), rest & open[w], out);
    }
}

fn toggle(open: &mut [u16], clique: u16) {
    let mut rest = clique;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        open[v] ^= clique & !(1 << v);
    }
}
