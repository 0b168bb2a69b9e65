//! Large induced star forests in sparse bipartite graphs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{input, Error, Result};
use crate::graph::Graph;

/// One round of the nested `Y_i` construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarRound {
    /// `Y_i`: vertices of the larger side with degree at least `d_i`.
    pub y: Vec<usize>,
    /// `δ_i = δ + |Y_{i-1}|/n`.
    pub delta: BigRational,
    /// `d_i = 1/(2^7 d δ_i)`.
    pub degree_threshold: BigRational,
    /// Edges meeting `Y_i \ Y_{i-1}`.
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarForestTrace {
    pub delta: BigRational,
    pub rounds: Vec<StarRound>,
    /// 1-based index of the round used, `None` when the larger side alone
    /// was big enough.
    pub chosen_round: Option<usize>,
    pub centers: Vec<usize>,
    pub output: Vec<usize>,
}

/// `δ = (2^7 d^2)^(-4d)`.
pub fn star_delta(d: usize) -> BigRational {
    let base = BigInt::from(128u32) * BigInt::from(d) * BigInt::from(d);
    let denom = num_traits::pow(base, 4 * d);
    BigRational::new(BigInt::one(), denom)
}

/// `ceil((1/2 + δ) n)`, the promised output size.
pub fn star_target(n: usize, delta: &BigRational) -> usize {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let v = (half + delta) * BigInt::from(n);
    let c = v.ceil().to_integer();
    usize::try_from(c).unwrap_or(usize::MAX)
}

/// An induced star forest of at least `(1/2+δ)n` vertices in a bipartite
/// graph of average degree at most `d`.
///
/// The larger colour class `Y` is returned when it already suffices (ties
/// resolved towards the class of vertex 0). Otherwise rounds are built until
/// the first with `e_i <= n/8`; centres of small degree are then picked in
/// ascending order from the side `X`, skipping any that share a neighbour
/// outside `Y_{i-1}` with an earlier centre, and joined to `Y \ Y_{i-1}`.
pub fn large_star_forest(g: &Graph, d: usize) -> Result<(Vec<usize>, StarForestTrace)> {
    let n = g.vertex_count();
    if d == 0 {
        return input("star forest degree bound d must be at least 1");
    }
    let colour = g
        .two_coloring()
        .ok_or_else(|| Error::Input("star forest input is not bipartite".into()))?;
    if 2 * g.edge_count() > d * n {
        return input(format!(
            "average degree {:.3} exceeds d = {d}",
            2.0 * g.edge_count() as f64 / n.max(1) as f64
        ));
    }
    let delta = star_delta(d);
    let target = star_target(n, &delta);
    let ones = colour.iter().filter(|&&c| c == 1).count();
    let zero_side = if n == 0 { 0 } else { colour[0] };
    let y_colour = if 2 * ones > n || (2 * ones == n && zero_side == 1) { 1 } else { 0 };
    let y_side: Vec<usize> = (0..n).filter(|&v| colour[v] == y_colour).collect();
    let x_side: Vec<usize> = (0..n).filter(|&v| colour[v] != y_colour).collect();

    let mut trace = StarForestTrace {
        delta: delta.clone(),
        rounds: Vec::new(),
        chosen_round: None,
        centers: Vec::new(),
        output: Vec::new(),
    };
    if y_side.len() >= target {
        trace.output = y_side.clone();
        return Ok((y_side, trace));
    }

    let n_big = BigInt::from(n);
    let scale = BigRational::from_integer(BigInt::from(128u32) * BigInt::from(d));
    let mut in_prev = vec![false; n];
    let mut prev_len = 0usize;
    let mut chosen = None;
    for i in 1..=4 * d {
        let delta_i = &delta + BigRational::new(BigInt::from(prev_len), n_big.clone());
        let d_i = (&scale * &delta_i).recip();
        let y_i: Vec<usize> = y_side
            .iter()
            .copied()
            .filter(|&v| BigRational::from_integer(BigInt::from(g.degree(v))) >= d_i)
            .collect();
        let mut in_cur = vec![false; n];
        for &v in &y_i {
            in_cur[v] = true;
        }
        // Y_i \ Y_{i-1} is an independent set, so its degree sum counts edges
        let e_i: usize = y_i.iter().filter(|&&v| !in_prev[v]).map(|&v| g.degree(v)).sum();
        trace.rounds.push(StarRound {
            y: y_i,
            delta: delta_i,
            degree_threshold: d_i,
            edges: e_i,
        });
        if 8 * e_i <= n {
            chosen = Some(i);
            break;
        }
        prev_len = in_cur.iter().filter(|&&b| b).count();
        in_prev = in_cur;
    }
    let Some(i) = chosen else {
        return Err(Error::Input(format!(
            "every round has e_i > n/8, impossible for average degree <= {d}"
        )));
    };
    trace.chosen_round = Some(i);
    let round = &trace.rounds[i - 1];
    let mut fresh = vec![false; n];
    for &v in &round.y {
        fresh[v] = !in_prev[v];
    }
    let candidates: Vec<usize> = x_side
        .iter()
        .copied()
        .filter(|&x| g.neighbors(x).all(|w| !fresh[w]) && g.degree(x) <= 8 * d)
        .collect();
    // a neighbour outside Y_{i-1} may be claimed by one centre only
    let mut claimed = vec![false; n];
    for &x in &candidates {
        if g.neighbors(x).any(|w| !in_prev[w] && claimed[w]) {
            continue;
        }
        for w in g.neighbors(x) {
            if !in_prev[w] {
                claimed[w] = true;
            }
        }
        trace.centers.push(x);
    }
    let mut output: Vec<usize> = trace
        .centers
        .iter()
        .copied()
        .chain(y_side.iter().copied().filter(|&v| !in_prev[v]))
        .collect();
    output.sort_unstable();
    trace.output = output.clone();
    Ok((output, trace))
}

impl StarForestTrace {
    /// Arithmetic invariants of the rounds: `δ_1 = δ`, nested `Y_i`,
    /// `δ_i < δ_{i+1} <= 2^7 d^2 δ_i`, and `d_i δ_i 2^7 d = 1`.
    pub fn check(&self, n: usize, d: usize) -> std::result::Result<(), String> {
        let growth = BigRational::from_integer(BigInt::from(128 * d * d));
        let scale = BigRational::from_integer(BigInt::from(128 * d));
        let mut prev: Option<&StarRound> = None;
        for (i, r) in self.rounds.iter().enumerate() {
            let expected = &self.delta
                + BigRational::new(BigInt::from(prev.map_or(0, |p| p.y.len())), BigInt::from(n.max(1)));
            if r.delta != expected {
                return Err(format!("round {} has δ_i off the recurrence", i + 1));
            }
            if !(&r.degree_threshold * &r.delta * &scale).is_one() {
                return Err(format!("round {} has d_i ≠ 1/(2^7 d δ_i)", i + 1));
            }
            if let Some(p) = prev {
                if !p.y.iter().all(|v| r.y.contains(v)) {
                    return Err(format!("Y_{} is not nested in Y_{}", i, i + 1));
                }
                if r.delta > &growth * &p.delta || r.delta < p.delta {
                    return Err(format!("δ_{} outside [δ_{}, 2^7 d^2 δ_{}]", i + 1, i, i));
                }
            }
            prev = Some(r);
        }
        if self.delta.is_zero() {
            return Err("δ must be positive".into());
        }
        Ok(())
    }
}

/// Calls `visit` once for every connected bipartite graph on `n` vertices
/// up to permutations within the smaller side. Vertices `0..a` form one
/// side, `a..n` the other, `a <= n - a`, and the biadjacency rows are
/// nonzero and nondecreasing. Isomorphic copies may repeat.
pub fn for_each_connected_bipartite(n: usize, mut visit: impl FnMut(&Graph)) {
    if n == 1 {
        visit(&Graph::new(1));
        return;
    }
    for a in 1..=n / 2 {
        let b = n - a;
        let mut rows = vec![1u32; a];
        loop {
            let mut g = Graph::new(n);
            for (i, &r) in rows.iter().enumerate() {
                for j in 0..b {
                    if r >> j & 1 == 1 {
                        g.add_edge(i, a + j).expect("in range");
                    }
                }
            }
            if g.is_connected() {
                visit(&g);
            }
            if !next_sorted_rows(&mut rows, (1u32 << b) - 1) {
                break;
            }
        }
    }
}

/// Next nondecreasing tuple over `1..=max`.
fn next_sorted_rows(rows: &mut [u32], max: u32) -> bool {
    let Some(i) = rows.iter().rposition(|&r| r < max) else {
        return false;
    };
    let v = rows[i] + 1;
    for r in &mut rows[i..] {
        *r = v;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{is_induced_star_forest, max_induced_star_forest_bruteforce};

    #[test]
    fn examples() {
        let (s, trace) = large_star_forest(&Graph::star(5), 2).unwrap();
        assert_eq!(s, vec![1, 2, 3, 4, 5]);
        assert!(trace.chosen_round.is_none());

        let c4 = Graph::cycle(4);
        let (s, trace) = large_star_forest(&c4, 2).unwrap();
        assert!(s.len() >= 3);
        assert!(is_induced_star_forest(&c4, &s).unwrap());
        assert_eq!(max_induced_star_forest_bruteforce(&c4).unwrap(), 3);
        assert_eq!(trace.chosen_round, Some(1));
        trace.check(4, 2).unwrap();

        let (s, _) = large_star_forest(&Graph::new(6), 1).unwrap();
        assert_eq!(s.len(), 6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(large_star_forest(&Graph::cycle(5), 2).is_err());
        assert!(large_star_forest(&Graph::complete(2), 0).is_err());
        // K_{3,3} has average degree 3
        let mut k33 = Graph::new(6);
        for u in 0..3 {
            for v in 3..6 {
                k33.add_edge(u, v).unwrap();
            }
        }
        assert!(large_star_forest(&k33, 2).is_err());
        assert!(large_star_forest(&k33, 3).is_ok());
    }

    #[test]
    fn delta_and_target() {
        let d1 = star_delta(1);
        assert_eq!(d1, BigRational::new(BigInt::one(), BigInt::from(128u64.pow(4))));
        assert_eq!(star_target(4, &star_delta(2)), 3);
        assert_eq!(star_target(7, &star_delta(1)), 4);
    }

    #[test]
    fn catalogue_counts() {
        // connected bipartite graphs, counted with side-ordered biadjacency
        // multisets: n = 2 gives one, n = 3 gives the path
        let mut count = 0;
        for_each_connected_bipartite(3, |_| count += 1);
        assert_eq!(count, 1);
        let mut seen = 0;
        for_each_connected_bipartite(5, |g| {
            assert!(g.is_connected() && g.is_bipartite());
            seen += 1;
        });
        assert!(seen > 5);
    }
}
