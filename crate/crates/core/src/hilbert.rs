//! Subset sums and Hilbert cubes in sets of integers.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combin::{binomial, Combinations};
use crate::error::{capacity, input, Error, Result};

/// `Σ(X)` for a set of distinct positive generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumProfile {
    /// The generators in increasing order.
    pub generators: Vec<u64>,
    /// All subset sums, sorted, without repetition.
    pub sums: Vec<u64>,
}

impl SumProfile {
    pub fn dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn size(&self) -> usize {
        self.sums.len()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.sums.binary_search(&v).is_ok()
    }

    /// Whether `x = a - b` for some `a, b` in `Σ(X)`.
    pub fn in_difference_set(&self, x: u64) -> bool {
        self.sums.iter().any(|&b| b.checked_add(x).is_some_and(|a| self.contains(a)))
    }
}

/// `C(d+1, 2) + 1`, the least possible `|Σ(X)|` for `d` distinct generators.
pub fn sigma_lower_bound(d: usize) -> u128 {
    binomial(d as u128 + 1, 2) + 1
}

/// Exact `Σ(X)` by doubling: `Σ(X ∪ {x}) = Σ(X) ∪ (Σ(X) + x)`.
pub fn subset_sums(xs: &[u64]) -> Result<SumProfile> {
    let mut generators = xs.to_vec();
    generators.sort_unstable();
    if generators.first() == Some(&0) {
        return input("subset sum generators must be positive");
    }
    if let Some(w) = generators.windows(2).find(|w| w[0] == w[1]) {
        return input(format!("repeated generator {}", w[0]));
    }
    if generators.len() > 40 {
        return capacity(format!("{} generators; at most 40 are enumerated", generators.len()));
    }
    let mut sums = vec![0u64];
    for &x in &generators {
        let shifted = sums
            .iter()
            .map(|&s| s.checked_add(x))
            .collect::<Option<Vec<u64>>>()
            .ok_or_else(|| Error::Input("subset sum overflows u64".into()))?;
        sums = merge_dedup(&sums, &shifted);
    }
    let d = generators.len();
    let size = sums.len() as u128;
    assert!(sigma_lower_bound(d) <= size && size <= 1u128 << d, "|Σ(X)| = {size} outside bounds for d = {d}");
    Ok(SumProfile { generators, sums })
}

fn merge_dedup(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let v = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x <= y => {
                i += 1;
                j += usize::from(x == y);
                x
            }
            (_, Some(&y)) => {
                j += 1;
                y
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, None) => unreachable!(),
        };
        out.push(v);
    }
    out
}

/// A finite set of integers in `0..=max`, stored as a dense bit vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSet {
    words: Vec<u64>,
    universe: u64,
}

impl IntSet {
    /// The empty set over `0..=max`.
    pub fn new(max: u64) -> IntSet {
        IntSet {
            words: vec![0; (max / 64 + 1) as usize],
            universe: max,
        }
    }

    pub fn from_elements(max: u64, elements: impl IntoIterator<Item = u64>) -> Result<IntSet> {
        let mut s = IntSet::new(max);
        for e in elements {
            if e > max {
                return input(format!("element {e} outside 0..={max}"));
            }
            s.insert(e);
        }
        Ok(s)
    }

    /// Largest value the set may hold.
    pub fn universe(&self) -> u64 {
        self.universe
    }

    pub fn insert(&mut self, v: u64) {
        assert!(v <= self.universe);
        self.words[(v / 64) as usize] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: u64) -> bool {
        v <= self.universe && self.words[(v / 64) as usize] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as u64;
                    w &= w - 1;
                    i as u64 * 64 + b
                })
            })
        })
    }

    pub fn is_subset(&self, other: &IntSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// `{v - k : v in self, v >= k}` as raw words.
    fn shifted_down(&self, k: u64) -> Vec<u64> {
        shift_down(&self.words, k)
    }
}

fn shift_down(words: &[u64], k: u64) -> Vec<u64> {
    let (skip, bits) = ((k / 64) as usize, (k % 64) as u32);
    let mut out = vec![0u64; words.len()];
    for (i, o) in out.iter_mut().enumerate() {
        let lo = words.get(i + skip).copied().unwrap_or(0);
        let hi = words.get(i + skip + 1).copied().unwrap_or(0);
        *o = if bits == 0 { lo } else { lo >> bits | hi << (64 - bits) };
    }
    out
}

/// Clears every bit at positions `<= k`.
fn clear_through(words: &mut [u64], k: u64) {
    let (full, bits) = ((k / 64) as usize, k % 64);
    for w in words.iter_mut().take(full) {
        *w = 0;
    }
    if let Some(w) = words.get_mut(full) {
        *w &= if bits == 63 { 0 } else { !0u64 << (bits + 1) };
    }
}

fn bits(words: &[u64]) -> impl Iterator<Item = u64> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let b = w.trailing_zeros() as u64;
                w &= w - 1;
                i as u64 * 64 + b
            })
        })
    })
}

/// `H(x0; x1, ..., xd) = { x0 + Σ_{i∈I} xi : I ⊆ [d] }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertCube {
    pub x0: u64,
    pub generators: Vec<u64>,
}

impl HilbertCube {
    pub fn dimension(&self) -> usize {
        self.generators.len()
    }

    /// The `2^d` values with multiplicity, sorted.
    pub fn elements(&self) -> Vec<u64> {
        let mut out = vec![self.x0];
        for &g in &self.generators {
            let more: Vec<u64> = out.iter().map(|&v| v + g).collect();
            out.extend(more);
        }
        out.sort_unstable();
        out
    }

    /// Distinct positive generators with every element in `a`.
    pub fn lies_in(&self, a: &IntSet) -> bool {
        let mut g = self.generators.clone();
        g.sort_unstable();
        g.first() != Some(&0)
            && g.windows(2).all(|w| w[0] < w[1])
            && self.elements().iter().all(|&v| a.contains(v))
    }
}

impl std::fmt::Display for HilbertCube {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let g: Vec<String> = self.generators.iter().map(u64::to_string).collect();
        write!(f, "H({}; {})", self.x0, g.join(","))
    }
}

/// Limits on a cube search: a node count and an optional wall-clock cap.
/// Searches limited by nodes alone are deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub nodes: u64,
    pub time: Option<Duration>,
}

impl SearchBudget {
    pub fn nodes(nodes: u64) -> SearchBudget {
        SearchBudget { nodes, time: None }
    }

    pub fn unlimited() -> SearchBudget {
        SearchBudget::nodes(u64::MAX)
    }

    pub fn with_time(mut self, time: Duration) -> SearchBudget {
        self.time = Some(time);
        self
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::nodes(50_000_000)
    }
}

struct Meter {
    used: u64,
    budget: SearchBudget,
    deadline: Option<Instant>,
}

impl Meter {
    fn new(budget: SearchBudget) -> Meter {
        Meter {
            used: 0,
            budget,
            deadline: budget.time.map(|t| Instant::now() + t),
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget.nodes {
            return capacity(format!("cube search exceeded {} nodes", self.budget.nodes));
        }
        if self.used % 4096 == 0 {
            if let Some(t) = self.deadline {
                if Instant::now() > t {
                    return capacity(format!(
                        "cube search exceeded {} ms",
                        self.budget.time.unwrap_or_default().as_millis()
                    ));
                }
            }
        }
        Ok(())
    }
}

/// First cube of dimension `d` inside `a`, ordered by `x0` and then by the
/// generator tuple, or `None` when there is none.
///
/// With `C_0 = a - x0` and `C_{j+1} = C_j ∩ (C_j - g_j)`, the set `C_j` holds
/// exactly the `g` that keep every partial sum in `a`, so each level is a
/// word-parallel intersection.
pub fn find_hilbert_cube(a: &IntSet, d: usize, budget: SearchBudget) -> Result<Option<HilbertCube>> {
    let mut meter = Meter::new(budget);
    find_with(a, d, &mut meter)
}

fn find_with(a: &IntSet, d: usize, meter: &mut Meter) -> Result<Option<HilbertCube>> {
    for x0 in a.iter() {
        meter.tick()?;
        if d == 0 {
            return Ok(Some(HilbertCube { x0, generators: vec![] }));
        }
        let mut cand = a.shifted_down(x0);
        clear_through(&mut cand, 0);
        let mut gens = Vec::with_capacity(d);
        if extend(&cand, d, &mut gens, meter)? {
            return Ok(Some(HilbertCube { x0, generators: gens }));
        }
    }
    Ok(None)
}

fn extend(cand: &[u64], d: usize, gens: &mut Vec<u64>, meter: &mut Meter) -> Result<bool> {
    let left = d - gens.len();
    for g in bits(cand) {
        meter.tick()?;
        if left == 1 {
            gens.push(g);
            return Ok(true);
        }
        let mut next = shift_down(cand, g);
        for (n, c) in next.iter_mut().zip(cand) {
            *n &= c;
        }
        clear_through(&mut next, g);
        let room: usize = next.iter().map(|w| w.count_ones() as usize).sum();
        if room < left - 1 {
            continue;
        }
        gens.push(g);
        if extend(&next, d, gens, meter)? {
            return Ok(true);
        }
        gens.pop();
    }
    Ok(false)
}

/// Same answer as [`find_hilbert_cube`] by trying every `x0 <= max` and every
/// increasing generator tuple. Exponential in `d`; for cross-checks only.
pub fn find_hilbert_cube_naive(a: &IntSet, d: usize) -> Option<HilbertCube> {
    let max = a.universe();
    for x0 in 0..=max {
        if d == 0 {
            if a.contains(x0) {
                return Some(HilbertCube { x0, generators: vec![] });
            }
            continue;
        }
        if max - x0 < d as u64 {
            continue;
        }
        let span = (max - x0) as usize;
        for combo in Combinations::new(span, d) {
            let cube = HilbertCube {
                x0,
                generators: combo.iter().map(|&i| i as u64 + 1).collect(),
            };
            if cube.elements().iter().all(|&v| a.contains(v)) {
                return Some(cube);
            }
        }
    }
    None
}

/// Outcome of an ascending dimension search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeDimension {
    /// Largest dimension certified by a witness.
    pub dimension: usize,
    pub witness: Option<HilbertCube>,
    /// False when the budget ran out before `dimension + 1` was settled.
    pub certain: bool,
}

/// Largest `d <= d_max` for which `a` holds a cube of dimension `d`. Cubes
/// contain cubes of every smaller dimension, so the search stops at the first
/// absent dimension. The budget is shared across all dimensions tried.
pub fn max_cube_dimension(a: &IntSet, d_max: usize, budget: SearchBudget) -> CubeDimension {
    let mut meter = Meter::new(budget);
    let mut best = CubeDimension {
        dimension: 0,
        witness: None,
        certain: true,
    };
    for d in 1..=d_max {
        match find_with(a, d, &mut meter) {
            Ok(Some(c)) => {
                best.dimension = d;
                best.witness = Some(c);
            }
            Ok(None) => break,
            Err(_) => {
                best.certain = false;
                break;
            }
        }
    }
    best
}

/// Enumeration cap for [`count_small_sigma_sets`].
pub const COUNT_CAP: u128 = 20_000_000;

/// Number of `d`-subsets `X` of `1..=n` with `|Σ(X)| <= bound`, by full
/// enumeration.
pub fn count_small_sigma_sets(n: usize, d: usize, bound: u64) -> Result<u64> {
    let total = binomial(n as u128, d as u128);
    if total > COUNT_CAP {
        return capacity(format!("C({n},{d}) = {total} subsets exceeds {COUNT_CAP}"));
    }
    if (bound as u128) < sigma_lower_bound(d) {
        return Ok(0);
    }
    let words = (n * d) / 64 + 1;
    let mut count = 0u64;
    let mut reach = vec![vec![0u64; words]; d + 1];
    reach[0][0] = 1;
    // depth-first over increasing tuples, reusing the sums of each prefix
    let mut stack: Vec<u64> = Vec::with_capacity(d);
    fn walk(
        n: u64,
        d: usize,
        bound: u64,
        start: u64,
        stack: &mut Vec<u64>,
        reach: &mut [Vec<u64>],
        count: &mut u64,
    ) {
        let j = stack.len();
        if j == d {
            let size: u64 = reach[j].iter().map(|w| w.count_ones() as u64).sum();
            *count += u64::from(size <= bound);
            return;
        }
        for x in start..=n - (d - j - 1) as u64 {
            let (lo, hi) = reach.split_at_mut(j + 1);
            let prev = &lo[j];
            let next = &mut hi[0];
            next.copy_from_slice(prev);
            or_shift_up(next, prev, x);
            stack.push(x);
            walk(n, d, bound, x + 1, stack, reach, count);
            stack.pop();
        }
    }
    if d <= n {
        walk(n as u64, d, bound, 1, &mut stack, &mut reach, &mut count);
    }
    Ok(count)
}

fn or_shift_up(dst: &mut [u64], src: &[u64], k: u64) {
    let (skip, bits) = ((k / 64) as usize, (k % 64) as u32);
    for i in (skip..dst.len()).rev() {
        let lo = src[i - skip];
        let below = if i > skip { src[i - skip - 1] } else { 0 };
        dst[i] |= if bits == 0 { lo } else { lo << bits | below >> (64 - bits) };
    }
}

/// Parameters of a seeded random-subset experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Experiment {
    pub n: u64,
    pub delta: f64,
    pub trials: usize,
    pub seed: u64,
    pub d_max: usize,
    pub budget: SearchBudget,
    /// Constant in the reference line `c √(log2 n)`.
    pub c: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub dims: Vec<CubeDimension>,
    pub min: usize,
    pub median: f64,
    pub max: usize,
    pub reference: f64,
}

/// Trial `t` keeps each of `1..=n` with probability `δ`, drawing from the
/// ChaCha8 stream `t` of `seed`, so parallel and serial runs agree.
pub fn random_subset(n: u64, delta: f64, seed: u64, trial: u64) -> IntSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut s = IntSet::new(n);
    for v in 1..=n {
        if rng.gen_bool(delta) {
            s.insert(v);
        }
    }
    s
}

pub fn random_subset_experiment(e: &Experiment) -> Result<ExperimentReport> {
    if !(0.0..=1.0).contains(&e.delta) {
        return input(format!("density {} outside [0, 1]", e.delta));
    }
    if e.trials == 0 {
        return input("experiment needs at least one trial");
    }
    let dims: Vec<CubeDimension> = (0..e.trials as u64)
        .into_par_iter()
        .map(|t| max_cube_dimension(&random_subset(e.n, e.delta, e.seed, t), e.d_max, e.budget))
        .collect();
    let mut sorted: Vec<usize> = dims.iter().map(|c| c.dimension).collect();
    sorted.sort_unstable();
    let k = sorted.len();
    let median = if k % 2 == 1 {
        sorted[k / 2] as f64
    } else {
        (sorted[k / 2 - 1] + sorted[k / 2]) as f64 / 2.0
    };
    Ok(ExperimentReport {
        min: sorted[0],
        max: sorted[k - 1],
        median,
        reference: e.c * (e.n.max(2) as f64).log2().sqrt(),
        dims,
    })
}
