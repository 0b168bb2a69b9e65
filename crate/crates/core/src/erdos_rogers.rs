//! `K_s^(3)`-free subsets of `K_{s+1}^(3)`-free 3-uniform hypergraphs.
//!
//! A sequence `v_1, v_2, …` is grown together with a shrinking set `V_ℓ` of
//! candidates so that every pair `v_i, v_j` is homogeneous: either all
//! triples `{v_i, v_j, x}` with `x` later in the sequence or in `V_ℓ` are
//! edges, or none are. The auxiliary graph records the all-edge pairs and
//! stays `K_s`-free.

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combin::Combinations;
use crate::error::{input, Error, Result};
use crate::graph::{Graph, UniformHypergraph};
use crate::oracle::{contains_clique, graph_clique};

/// Inputs up to this many vertices are checked to be `K_{s+1}^(3)`-free.
pub const INPUT_CHECK_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcessState {
    /// `v_1, …, v_ℓ`.
    pub sequence: Vec<usize>,
    /// `V_ℓ`, ascending.
    pub survivors: Vec<usize>,
    /// Auxiliary graph on sequence positions.
    pub aux: Graph,
    pub alpha: Rational64,
    pub p: usize,
    pub m: usize,
    /// `(|V_{ℓ,j}|, |V_{ℓ,j+1}|)` for every refinement step taken.
    pub refinements: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitPath {
    /// An auxiliary vertex reached degree `p`; its neighbourhood is returned.
    Neighbourhood { centre: usize },
    /// The sequence reached length `m`; an independent set of the auxiliary
    /// graph is returned.
    IndependentSet,
    /// `V_ℓ` ran empty and the process stopped at length `at < m`,
    /// returning an independent set of the auxiliary graph so far.
    Degenerate { at: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErdosRogersRun {
    pub set: Vec<usize>,
    pub exit: ExitPath,
    pub state: ProcessState,
    /// Whether the input was checked to be `K_{s+1}^(3)`-free (skipped
    /// above [`INPUT_CHECK_CAP`] vertices).
    pub input_checked: bool,
    /// Number of steps after which the auxiliary graph was checked.
    pub aux_checks: usize,
}

impl ErdosRogersRun {
    pub fn reached_target(&self) -> bool {
        self.set.len() >= self.state.p
    }
}

/// `m = p^2 ln ln p / ln p`, at least `p`.
pub fn default_length(p: usize) -> usize {
    let pf = p as f64;
    let raw = if p >= 3 { pf * pf * pf.ln().ln() / pf.ln() } else { 0.0 };
    (raw.ceil() as usize).max(p)
}

/// `α = (p/m) ln(m/p)` clamped into `(0, 1/2]`; `1/2` when that is not
/// positive.
pub fn default_alpha(p: usize, m: usize) -> Rational64 {
    let half = Rational64::new(1, 2);
    if p == 0 || m <= p {
        return half;
    }
    let a = (p as f64 / m as f64) * (m as f64 / p as f64).ln();
    match Rational64::approximate_float(a) {
        Some(r) if r > Rational64::from_integer(0) => r.min(half),
        _ => half,
    }
}

/// Runs the sequence process and returns a verified `K_s^(3)`-free set.
pub fn find_ks3_free_subset(
    h: &UniformHypergraph,
    s: usize,
    p: usize,
    alpha: Rational64,
    m: usize,
) -> Result<ErdosRogersRun> {
    if h.uniformity() != 3 {
        return input(format!("expected a 3-uniform hypergraph, got {}-uniform", h.uniformity()));
    }
    if s < 3 {
        return input("s must be at least 3");
    }
    if alpha <= Rational64::from_integer(0) || alpha > Rational64::new(1, 2) {
        return input(format!("alpha = {alpha} is outside (0, 1/2]"));
    }
    let n = h.vertex_count();
    let input_checked = n <= INPUT_CHECK_CAP;
    if input_checked && contains_clique(h, s + 1)?.is_some() {
        return input(format!("hypergraph contains K_{}^(3)", s + 1));
    }
    let mut state = ProcessState {
        sequence: Vec::new(),
        survivors: (0..n).collect(),
        aux: Graph::new(0),
        alpha,
        p,
        m,
        refinements: Vec::new(),
    };
    let mut aux_checks = 0;
    let (num, den) = (*alpha.numer(), *alpha.denom());
    let mut exit = ExitPath::IndependentSet;
    while state.sequence.len() < m {
        let Some(&v) = state.survivors.first() else {
            exit = ExitPath::Degenerate { at: state.sequence.len() };
            break;
        };
        let mut current: Vec<usize> = state.survivors[1..].to_vec();
        let mut joined = Vec::new();
        let mut steps = Vec::new();
        for (j, &vj) in state.sequence.iter().enumerate() {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                current.iter().partition(|&&w| h.has_edge(&[vj, v, w]));
            let before = current.len();
            // keep the co-neighbourhood when it holds an α fraction; an
            // empty set makes the pair vacuously a non-edge pair
            if before > 0 && inside.len() as i64 * den >= num * before as i64 {
                joined.push(j);
                current = inside;
            } else {
                current = outside;
            }
            steps.push((before, current.len()));
        }
        let l = state.sequence.len();
        let mut aux = Graph::new(l + 1);
        for (a, b) in state.aux.edges() {
            aux.add_edge(a, b)?;
        }
        for &j in &joined {
            aux.add_edge(j, l)?;
        }
        aux_checks += 1;
        let clique = graph_clique(&aux, s).is_some();
        let emptied = current.is_empty();
        if clique {
            // with a survivor w, a K_s plus w would be a K_{s+1}^(3)
            if !emptied {
                return Err(Error::Protocol(format!("auxiliary graph gained a K_{s} at length {}", l + 1)));
            }
            exit = ExitPath::Degenerate { at: l };
            break;
        }
        state.aux = aux;
        state.sequence.push(v);
        state.survivors = current;
        state.refinements.extend(steps);
        if p > 0 {
            if let Some(centre) = (0..=l).find(|&u| state.aux.degree(u) >= p) {
                exit = ExitPath::Neighbourhood { centre };
                break;
            }
        }
        if emptied && state.sequence.len() < m {
            exit = ExitPath::Degenerate { at: l + 1 };
            break;
        }
    }
    let positions: Vec<usize> = match exit {
        ExitPath::Neighbourhood { centre } => state.aux.neighbors(centre).collect(),
        _ => greedy_independent_set(&state.aux),
    };
    let mut set: Vec<usize> = positions.iter().map(|&i| state.sequence[i]).collect();
    set.sort_unstable();
    let sub = h.induced(&set)?;
    if s <= set.len() && contains_clique(&sub, s)?.is_some() {
        return Err(Error::Protocol("output contains a K_s^(3)".into()));
    }
    Ok(ErdosRogersRun {
        set,
        exit,
        state,
        input_checked,
        aux_checks,
    })
}

impl ProcessState {
    /// Full homogeneity and bookkeeping check: every pair `v_i, v_j` sees
    /// only edges or only non-edges towards later sequence vertices and
    /// survivors, matching the auxiliary graph, and every refinement kept
    /// at least a `min(α, 1-α)` fraction.
    pub fn check(&self, h: &UniformHypergraph) -> std::result::Result<(), String> {
        let l = self.sequence.len();
        for i in 0..l {
            for j in i + 1..l {
                let (a, b) = (self.sequence[i], self.sequence[j]);
                let expect = self.aux.has_edge(i, j);
                let later = self.sequence[j + 1..].iter().chain(&self.survivors);
                if let Some(&w) = later.into_iter().find(|&&w| h.has_edge(&[a, b, w]) != expect) {
                    return Err(format!("pair ({a}, {b}) is not homogeneous at {w}"));
                }
            }
        }
        let one = Rational64::from_integer(1);
        let frac = self.alpha.min(one - self.alpha);
        for &(before, after) in &self.refinements {
            if Rational64::from_integer(after as i64 + 1) < frac * Rational64::from_integer(before as i64) {
                return Err(format!("refinement {before} -> {after} lost too much"));
            }
        }
        Ok(())
    }
}

/// Repeatedly takes a vertex of minimum remaining degree (lowest id on
/// ties) and deletes its closed neighbourhood. Always at least
/// `n/(Δ+1)` vertices.
pub fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut out = Vec::new();
    while let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v)) {
        out.push(v);
        let mut gone = vec![v];
        gone.extend(g.neighbors(v).filter(|&w| alive[w]));
        for &x in &gone {
            alive[x] = false;
        }
        for &x in &gone {
            for y in g.neighbors(x) {
                if alive[y] {
                    deg[y] -= 1;
                }
            }
        }
    }
    assert!(out.len() * (g.max_degree() + 1) >= n);
    out
}

/// Seeded random 3-uniform hypergraph with edge probability `density`, made
/// `K_t^(3)`-free by one pass over the `t`-sets in lexicographic order that
/// deletes a random triple from each complete one.
pub fn random_clique_free(n: usize, t: usize, density: f64, seed: u64) -> Result<UniformHypergraph> {
    if t < 3 {
        return input("t must be at least 3");
    }
    if !(0.0..=1.0).contains(&density) {
        return input(format!("density {density} outside [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = UniformHypergraph::new(n, 3)?;
    for e in Combinations::new(n, 3) {
        if rng.gen_bool(density) {
            h.add_edge(&e)?;
        }
    }
    for set in Combinations::new(n, t) {
        let triples: Vec<Vec<usize>> = Combinations::new(t, 3)
            .map(|c| c.iter().map(|&i| set[i]).collect())
            .collect();
        if triples.iter().all(|e| h.has_sorted_edge(e)) {
            let victim = rng.gen_range(0..triples.len());
            h.remove_edge(&triples[victim]);
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> Rational64 {
        Rational64::new(1, 2)
    }

    #[test]
    fn empty_hypergraph_gives_everything() {
        let h = UniformHypergraph::new(6, 3).unwrap();
        let run = find_ks3_free_subset(&h, 3, 6, half(), 6).unwrap();
        assert!(run.set.len() <= 6);
        // all pairs are non-edge pairs, so the auxiliary graph is empty
        assert_eq!(run.set, vec![0, 1, 2, 3, 4, 5]);
        run.state.check(&h).unwrap();
    }

    #[test]
    fn rainbow_hypergraph() {
        let mut edges = Vec::new();
        for a in 0..5 {
            for b in 5..10 {
                for c in 10..15 {
                    edges.push(vec![a, b, c]);
                }
            }
        }
        let h = UniformHypergraph::from_edges(15, 3, &edges).unwrap();
        let run = find_ks3_free_subset(&h, 3, 5, Rational64::new(1, 4), 15).unwrap();
        let sub = h.induced(&run.set).unwrap();
        assert!(contains_clique(&sub, 3).unwrap().is_none());
        run.state.check(&h).unwrap();
        // one full part is a certificate too
        let part: Vec<usize> = (0..5).collect();
        assert!(contains_clique(&h.induced(&part).unwrap(), 3).unwrap().is_none());
    }

    #[test]
    fn seeded_random_instance() {
        let h = random_clique_free(30, 4, 0.5, 11).unwrap();
        assert!(contains_clique(&h, 4).unwrap().is_none());
        let run = find_ks3_free_subset(&h, 3, 4, Rational64::new(1, 4), 12).unwrap();
        assert!(contains_clique(&h.induced(&run.set).unwrap(), 3).unwrap().is_none());
        run.state.check(&h).unwrap();
        assert!(run.input_checked);
    }

    #[test]
    fn rejects_bad_input() {
        let k4 = UniformHypergraph::complete(4, 3).unwrap();
        assert!(find_ks3_free_subset(&k4, 3, 2, half(), 3).is_err());
        let g2 = UniformHypergraph::new(4, 2).unwrap();
        assert!(find_ks3_free_subset(&g2, 3, 2, half(), 3).is_err());
        let h = UniformHypergraph::new(4, 3).unwrap();
        assert!(find_ks3_free_subset(&h, 3, 2, Rational64::new(3, 4), 3).is_err());
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_independent_set(&Graph::new(7)).len(), 7);
        assert_eq!(greedy_independent_set(&Graph::complete(5)).len(), 1);
        assert_eq!(greedy_independent_set(&Graph::cycle(6)), vec![0, 2, 4]);
    }

    #[test]
    fn defaults() {
        assert_eq!(default_length(2), 2);
        let m = default_length(10);
        assert!(m >= 10);
        let a = default_alpha(10, m);
        assert!(a > Rational64::from_integer(0) && a <= half());
        assert_eq!(default_alpha(3, 3), half());
    }
}
