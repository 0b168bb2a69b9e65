//! The online Ramsey game: a Builder that forces a monochromatic copy of a
//! `d`-degenerate target while drawing only `(qd - (q-1))`-degenerate
//! boards, pluggable Painters, transcripts and their verifier.
//!
//! Builder constructs nested independent sets `V_0 ⊃ V_1 ⊃ …`. In round `i`
//! the set `V_{i-1}` is split into `W_i` and a pad; every `s`-subset of `W_i`
//! is joined to its own pad vertex, the Painter's answers color the
//! `s`-subsets, and a monochromatic subset of `W_i` becomes `V_i` with a
//! round color `C_i`. Once `n - 1` rounds share a color the target is
//! embedded along a degenerate ordering.
//!
//! Only `s = 1` (forest targets) is playable; for `s >= 2` the schedule needs
//! hypergraph Ramsey numbers beyond the exhaustive oracle and planning stops
//! with a capacity error naming the query.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::combin::binomial;
use crate::degeneracy::{degeneracy_of_edges, degeneracy_ordering};
use crate::error::{capacity, input, Error, Result};
use crate::graph::{content_lines, parse_num, Graph, UniformHypergraph};
use crate::ramsey::{ramsey_number, RamseyQuery, RamseyValue};

/// Largest `V_0` the engine will plan for.
pub const BOARD_VERTEX_CAP: u128 = 1 << 25;

/// Largest clique size handed to the exhaustive oracle while planning.
pub const PLAN_ORACLE_CAP: usize = 8;

const PLAN_ORACLE_BUDGET: u64 = 5_000_000;

/// How `V_i` is cut out of the monochromatic set `M_i` when `s = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    /// `|M_i| = qd(n_i + 1)` and `V_i` takes every `qd`-th vertex, exactly
    /// as in the general construction.
    Literal,
    /// `|M_i| = n_i` and `V_i = M_i`. With `s = 1` no dummy vertices are
    /// needed, so this is the same strategy with far smaller sets.
    Compact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuilderPlan {
    pub d: usize,
    pub q: usize,
    /// `qd - (q - 1)`.
    pub s: usize,
    /// `q(n-1) - (q-1)`.
    pub t: usize,
    pub spacing: Spacing,
    /// `n_0, …, n_t`, saturating.
    pub n: Vec<u128>,
    /// `m_0, …, m_{t-1}`.
    pub m: Vec<u128>,
}

impl BuilderPlan {
    /// Works the schedule backwards from `n_t = d`.
    pub fn new(target: &Graph, q: usize, spacing: Spacing) -> Result<BuilderPlan> {
        let nv = target.vertex_count();
        if nv == 0 {
            return input("the target needs at least one vertex");
        }
        if q == 0 || q > u8::MAX as usize {
            return input(format!("color count {q} out of range"));
        }
        let d = degeneracy_ordering(target).0.max(1);
        let s = q * d - (q - 1);
        let t = (q * (nv - 1)).saturating_sub(q - 1);
        let mut n = vec![0u128; t + 1];
        let mut m = vec![0u128; t];
        n[t] = d as u128;
        let qd = (q * d) as u128;
        for i in (0..t).rev() {
            let next = n[i + 1];
            let (clique, pad) = if s == 1 {
                let size = match spacing {
                    Spacing::Literal => qd.saturating_mul(next + 1),
                    Spacing::Compact => next,
                };
                // r_1(ℓ; q) = q(ℓ-1) + 1
                let mi = (q as u128).saturating_mul(size - 1).saturating_add(1);
                (mi, mi)
            } else {
                let l = qd.saturating_mul(next + 1);
                let colors = (q as u128).saturating_pow(s as u32);
                let mi = plan_query(s, l, colors)?;
                (mi, binomial(mi, s as u128))
            };
            m[i] = clique;
            n[i] = clique.saturating_add(pad);
        }
        Ok(BuilderPlan {
            d,
            q,
            s,
            t,
            spacing,
            n,
            m,
        })
    }

    /// Worst-case number of moves: every round exposes one edge per pad
    /// vertex and `s` edges per pad.
    pub fn worst_case_moves(&self) -> u128 {
        let s = self.s as u128;
        self.m
            .iter()
            .map(|&mi| binomial(mi, s).saturating_mul(s))
            .fold(0u128, u128::saturating_add)
    }

    /// `qd - (q - 1)`, the degeneracy the board never exceeds.
    pub fn board_degeneracy_bound(&self) -> usize {
        self.s
    }
}

/// Asks the exhaustive oracle for `r_s(ℓ; colors)`.
fn plan_query(s: usize, l: u128, colors: u128) -> Result<u128> {
    let name = format!("r_{s}({l}; {colors})");
    if l > PLAN_ORACLE_CAP as u128 || colors > u8::MAX as u128 {
        return capacity(format!("schedule needs {name}, beyond the exhaustive oracle cap of {PLAN_ORACLE_CAP}"));
    }
    let l = l as usize;
    let clique = UniformHypergraph::complete(l, s)?;
    let query = RamseyQuery::new(clique, colors as usize, PLAN_ORACLE_CAP)?.with_budget(PLAN_ORACLE_BUDGET);
    match ramsey_number(&query) {
        Ok(RamseyValue::Known(v)) => Ok(v as u128),
        Ok(RamseyValue::Unknown(cap)) => capacity(format!("schedule needs {name}, which exceeds {cap}")),
        Err(Error::Capacity(msg)) => capacity(format!("schedule needs {name}: {msg}")),
        Err(e) => Err(e),
    }
}

/// Read access to the board for painters.
pub struct BoardView<'a> {
    board: &'a Board,
    target: &'a TargetShape,
}

impl BoardView<'_> {
    pub fn colors(&self) -> usize {
        self.board.q
    }

    /// Number of edges of color `c` at `v`.
    pub fn color_degree(&self, v: usize, c: u8) -> usize {
        self.board.neighbours(v as u32).filter(|&(_, col)| col == c).count()
    }

    /// Whether coloring the unexposed edge `u v` with `c` would complete a
    /// monochromatic target. Always false for disconnected targets.
    pub fn would_complete(&self, u: usize, v: usize, c: u8) -> bool {
        let extra = Some((u as u32, v as u32));
        self.target.copy_through(self.board, u as u32, v as u32, c, extra).is_some()
    }
}

/// Colors each exposed edge.
pub trait Painter {
    fn name(&self) -> String;
    /// A color in `0..q` for the edge `u v` about to be added.
    fn paint(&mut self, view: &BoardView<'_>, u: usize, v: usize) -> Result<u8>;
}

/// Uniformly random colors from a seeded ChaCha8 stream.
pub struct RandomPainter {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomPainter {
    pub fn new(seed: u64) -> RandomPainter {
        RandomPainter {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Painter for RandomPainter {
    fn name(&self) -> String {
        format!("random({})", self.seed)
    }

    fn paint(&mut self, view: &BoardView<'_>, _u: usize, _v: usize) -> Result<u8> {
        Ok(self.rng.gen_range(0..view.colors()) as u8)
    }
}

pub struct FixedPainter(pub u8);

impl Painter for FixedPainter {
    fn name(&self) -> String {
        format!("fixed({})", self.0)
    }

    fn paint(&mut self, _view: &BoardView<'_>, _u: usize, _v: usize) -> Result<u8> {
        Ok(self.0)
    }
}

/// One-ply lookahead: avoids colors that complete a target, preferring the
/// color least used at the two endpoints.
pub struct GreedyAvoidPainter;

impl Painter for GreedyAvoidPainter {
    fn name(&self) -> String {
        "greedy-avoid".into()
    }

    fn paint(&mut self, view: &BoardView<'_>, u: usize, v: usize) -> Result<u8> {
        let best = (0..view.colors() as u8)
            .filter(|&c| !view.would_complete(u, v, c))
            .min_by_key(|&c| (view.color_degree(u, c) + view.color_degree(v, c), c));
        Ok(best.unwrap_or(0))
    }
}

/// Cycles through the colors move by move. Every round then starts one
/// color later than the previous one, so round colors rotate and Builder
/// needs the full schedule.
#[derive(Default)]
pub struct RoundRobinPainter {
    next: usize,
}

impl Painter for RoundRobinPainter {
    fn name(&self) -> String {
        "adversarial".into()
    }

    fn paint(&mut self, view: &BoardView<'_>, _u: usize, _v: usize) -> Result<u8> {
        let c = self.next % view.colors();
        self.next += 1;
        Ok(c as u8)
    }
}

/// Asks an operator for each color.
pub struct InteractivePainter<R, W> {
    input: R,
    output: W,
}

impl<R: BufRead, W: Write> InteractivePainter<R, W> {
    pub fn new(input: R, output: W) -> Self {
        InteractivePainter { input, output }
    }
}

impl<R: BufRead, W: Write> Painter for InteractivePainter<R, W> {
    fn name(&self) -> String {
        "interactive".into()
    }

    fn paint(&mut self, _view: &BoardView<'_>, u: usize, v: usize) -> Result<u8> {
        let io = |e: std::io::Error| Error::Protocol(format!("console: {e}"));
        write!(self.output, "edge {}-{} color? ", u + 1, v + 1).map_err(io)?;
        self.output.flush().map_err(io)?;
        let mut line = String::new();
        if self.input.read_line(&mut line).map_err(io)? == 0 {
            return Err(Error::Protocol("painter closed the console".into()));
        }
        line.trim()
            .parse::<u8>()
            .map_err(|_| Error::Protocol(format!("painter answered {:?}, not a color", line.trim())))
    }
}

/// Board adjacency in a singly linked edge arena, two slots per edge.
struct Board {
    q: usize,
    head: Vec<u32>,
    next: Vec<u32>,
    to: Vec<u32>,
    color: Vec<u8>,
}

const NIL: u32 = u32::MAX;

impl Board {
    fn new(q: usize) -> Board {
        Board {
            q,
            head: Vec::new(),
            next: Vec::new(),
            to: Vec::new(),
            color: Vec::new(),
        }
    }

    fn alloc(&mut self) -> Result<u32> {
        let id = self.head.len();
        if id as u128 >= BOARD_VERTEX_CAP {
            return capacity(format!("board exceeds {BOARD_VERTEX_CAP} vertices"));
        }
        self.head.push(NIL);
        Ok(id as u32)
    }

    fn push_edge(&mut self, u: u32, v: u32, c: u8) {
        for (a, b) in [(u, v), (v, u)] {
            let slot = self.to.len() as u32;
            self.to.push(b);
            self.color.push(c);
            self.next.push(self.head[a as usize]);
            self.head[a as usize] = slot;
        }
    }

    fn neighbours(&self, v: u32) -> impl Iterator<Item = (u32, u8)> + '_ {
        let mut slot = self.head.get(v as usize).copied().unwrap_or(NIL);
        std::iter::from_fn(move || {
            if slot == NIL {
                return None;
            }
            let out = (self.to[slot as usize], self.color[slot as usize]);
            slot = self.next[slot as usize];
            Some(out)
        })
    }
}

/// Precomputed search orders for locating a copy of a connected target
/// through a given board edge.
struct TargetShape {
    n: usize,
    /// For every target edge `(x, y)`: the remaining vertices in BFS order
    /// from `{x, y}`, each with its already-placed parent.
    orders: Vec<(usize, usize, Vec<(usize, usize)>)>,
}

impl TargetShape {
    fn new(target: &Graph) -> TargetShape {
        let n = target.vertex_count();
        let mut orders = Vec::new();
        if target.is_connected() && target.is_forest() {
            for (x, y) in target.edges() {
                for (a, b) in [(x, y), (y, x)] {
                    let mut seen = vec![false; n];
                    seen[a] = true;
                    seen[b] = true;
                    let mut queue = std::collections::VecDeque::from([a, b]);
                    let mut order = Vec::new();
                    while let Some(p) = queue.pop_front() {
                        for z in target.neighbors(p) {
                            if !seen[z] {
                                seen[z] = true;
                                order.push((z, p));
                                queue.push_back(z);
                            }
                        }
                    }
                    orders.push((a, b, order));
                }
            }
        }
        TargetShape { n, orders }
    }

    /// Board images of the target vertices for a copy in color `c` using
    /// the board edge `u v`. `extra` is an edge of color `c` treated as
    /// present although not yet on the board.
    fn copy_through(&self, board: &Board, u: u32, v: u32, c: u8, extra: Option<(u32, u32)>) -> Option<Vec<u32>> {
        let mut map = vec![NIL; self.n];
        for (a, b, order) in &self.orders {
            map.iter_mut().for_each(|m| *m = NIL);
            map[*a] = u;
            map[*b] = v;
            if extend_tree(board, order, 0, &mut map, c, extra) {
                return Some(map);
            }
        }
        None
    }
}

fn extend_tree(
    board: &Board,
    order: &[(usize, usize)],
    i: usize,
    map: &mut [u32],
    c: u8,
    extra: Option<(u32, u32)>,
) -> bool {
    let Some(&(z, p)) = order.get(i) else {
        return true;
    };
    let host = map[p];
    let virtual_nb = extra.and_then(|(a, b)| match host {
        h if h == a => Some((b, c)),
        h if h == b => Some((a, c)),
        _ => None,
    });
    for (w, col) in board.neighbours(host).chain(virtual_nb) {
        if col != c || map.contains(&w) {
            continue;
        }
        map[z] = w;
        if extend_tree(board, order, i + 1, map, c, extra) {
            return true;
        }
        map[z] = NIL;
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// `witness[x]` is the board vertex playing target vertex `x`.
    BuilderWin { witness: Vec<usize>, color: u8 },
    Exhausted { budget: usize },
}

/// Audit record of one round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundRecord {
    pub color: u8,
    /// Edges exposed in the round.
    pub moves: usize,
    pub kept: usize,
    /// Positions in `M_i` (0-based) selected for `V_i` under literal
    /// spacing; empty for compact spacing.
    pub selected: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameTranscript {
    pub target: Graph,
    pub q: usize,
    pub moves: Vec<(u32, u32, u8)>,
    pub rounds: Vec<RoundRecord>,
    /// True when a monochromatic copy appeared before the rounds finished.
    pub early: bool,
    pub outcome: Outcome,
}

/// Plays one game. `budget` caps the number of moves; reaching it ends the
/// game as [`Outcome::Exhausted`].
pub fn run_game(
    target: &Graph,
    q: usize,
    painter: &mut dyn Painter,
    budget: usize,
    spacing: Spacing,
) -> Result<GameTranscript> {
    let plan = BuilderPlan::new(target, q, spacing)?;
    if plan.n[0] > BOARD_VERTEX_CAP {
        return capacity(format!(
            "worst-case schedule needs {} board vertices (cap {BOARD_VERTEX_CAP})",
            plan.n[0]
        ));
    }
    let nv = target.vertex_count();
    let shape = TargetShape::new(target);
    let mut board = Board::new(q);
    let mut transcript = GameTranscript {
        target: target.clone(),
        q,
        moves: Vec::new(),
        rounds: Vec::new(),
        early: false,
        outcome: Outcome::Exhausted { budget },
    };
    if target.edge_count() == 0 {
        let witness = (0..nv).map(|_| board.alloc().map(|v| v as usize)).collect::<Result<_>>()?;
        transcript.outcome = Outcome::BuilderWin { witness, color: 0 };
        return Ok(transcript);
    }
    let qd = q * plan.d;
    let mut counts = vec![0usize; q];
    // per round: (w, pad) for every w in V_i
    let mut kept_pairs: Vec<Vec<(u32, u32)>> = Vec::new();
    let mut prev: Option<Vec<u32>> = None;
    let mut i = 0;
    while counts.iter().all(|&k| k + 1 < nv) {
        i += 1;
        if i > plan.t {
            return Err(Error::Protocol("ran past the last scheduled round".into()));
        }
        let n_i = plan.n[i] as usize;
        let m = plan.m[i - 1] as usize;
        let need = match spacing {
            Spacing::Literal => qd * (n_i + 1),
            Spacing::Compact => n_i,
        };
        let mut groups: Vec<Vec<(u32, u32)>> = vec![Vec::new(); q];
        let mut round_color = None;
        let mut exposed = 0;
        for j in 0..m {
            if transcript.moves.len() >= budget {
                return Ok(transcript);
            }
            let (w, pad) = match &prev {
                None => (board.alloc()?, board.alloc()?),
                Some(v) => (v[j], v[m + j]),
            };
            let c = {
                let view = BoardView {
                    board: &board,
                    target: &shape,
                };
                painter.paint(&view, w as usize, pad as usize)?
            };
            if c as usize >= q {
                return Err(Error::Protocol(format!("{} answered color {c} with q = {q}", painter.name())));
            }
            board.push_edge(w, pad, c);
            transcript.moves.push((w, pad, c));
            exposed += 1;
            if let Some(witness) = shape.copy_through(&board, w, pad, c, None) {
                transcript.early = true;
                transcript.outcome = Outcome::BuilderWin {
                    witness: witness.into_iter().map(|x| x as usize).collect(),
                    color: c,
                };
                return Ok(transcript);
            }
            groups[c as usize].push((w, pad));
            if groups[c as usize].len() == need {
                round_color = Some(c);
                break;
            }
        }
        let c = round_color.ok_or_else(|| Error::Protocol("pigeonhole failed to close a round".into()))?;
        let mono = std::mem::take(&mut groups[c as usize]);
        let (pairs, selected) = match spacing {
            Spacing::Compact => (mono, Vec::new()),
            Spacing::Literal => {
                let idx: Vec<usize> = (1..=n_i).map(|k| k * qd - 1).collect();
                (idx.iter().map(|&k| mono[k]).collect(), idx)
            }
        };
        counts[c as usize] += 1;
        transcript.rounds.push(RoundRecord {
            color: c,
            moves: exposed,
            kept: pairs.len(),
            selected,
        });
        prev = Some(pairs.iter().map(|&(w, _)| w).collect());
        kept_pairs.push(pairs);
    }
    let color = (0..q).find(|&c| counts[c] + 1 >= nv).unwrap() as u8;
    let witness = embed(target, &transcript.rounds, &kept_pairs, color)?;
    transcript.outcome = Outcome::BuilderWin { witness, color };
    Ok(transcript)
}

/// Embeds the target along its degenerate ordering: the `p`-th vertex goes
/// into `V_{i_{n-p}}`, as the pad of its earlier neighbour in round
/// `i_{n-p}`.
fn embed(target: &Graph, rounds: &[RoundRecord], kept: &[Vec<(u32, u32)>], color: u8) -> Result<Vec<usize>> {
    let nv = target.vertex_count();
    // the first n-1 rounds of the winning color, as indices into `rounds`
    let chosen: Vec<usize> = (0..rounds.len()).filter(|&r| rounds[r].color == color).take(nv - 1).collect();
    let (_, ordering) = degeneracy_ordering(target);
    let mut image = vec![usize::MAX; nv];
    let mut used = std::collections::HashSet::new();
    for (p, &u) in ordering.order.iter().enumerate() {
        // u is u_{p+1}; its level is i_{n-(p+1)}
        let placed = if p == 0 {
            kept[chosen[nv - 2]][0].0 as usize
        } else {
            let level = chosen[nv - 1 - p];
            let pads: HashMap<u32, u32> = kept[level].iter().copied().collect();
            let earlier: Vec<usize> = target.neighbors(u).filter(|&w| image[w] != usize::MAX).collect();
            let host = match earlier.as_slice() {
                [] => kept[level][0].0,
                [a] => image[*a] as u32,
                _ => return input("target is not 1-degenerate"),
            };
            let pad = pads
                .get(&host)
                .ok_or_else(|| Error::Protocol(format!("vertex {host} lost its pad in round {}", level + 1)))?;
            *pad as usize
        };
        if !used.insert(placed) {
            return Err(Error::Protocol("embedding reused a board vertex".into()));
        }
        image[u] = placed;
    }
    Ok(image)
}

/// Hex SHA-256 of the target's text form.
pub fn target_hash(target: &Graph) -> String {
    hex::encode(Sha256::digest(target.to_text().as_bytes()))
}

impl GameTranscript {
    /// Header `g <q> <hash>`, one `e u v c` line per move (1-based ids),
    /// a `# round <i> <color> <moves> <kept>` comment per round, and the
    /// trailer `w <vertices…> <color>` or `x <budget>`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "g {} {}", self.q, target_hash(&self.target));
        for &(u, v, c) in &self.moves {
            let _ = writeln!(s, "e {} {} {}", u + 1, v + 1, c);
        }
        for (i, r) in self.rounds.iter().enumerate() {
            let _ = writeln!(s, "# round {} {} {} {}", i + 1, r.color, r.moves, r.kept);
        }
        match &self.outcome {
            Outcome::BuilderWin { witness, color } => {
                let ids: Vec<String> = witness.iter().map(|v| (v + 1).to_string()).collect();
                let _ = writeln!(s, "w {} {}", ids.join(" "), color);
            }
            Outcome::Exhausted { budget } => {
                let _ = writeln!(s, "x {budget}");
            }
        }
        s
    }

    /// Reads a transcript for a known target; the header hash must match.
    pub fn parse(target: &Graph, text: &str) -> Result<GameTranscript> {
        let mut q = None;
        let mut moves = Vec::new();
        let mut outcome = None;
        for (line, content) in content_lines(text) {
            let err = |msg: String| Error::Parse { line, msg };
            let toks: Vec<&str> = content.split_whitespace().collect();
            match toks.first().copied() {
                Some("g") if toks.len() == 3 => {
                    if toks[2] != target_hash(target) {
                        return Err(err("target hash does not match".into()));
                    }
                    q = Some(parse_num(toks[1], line)?);
                }
                Some("e") if toks.len() == 4 => {
                    let u = parse_num(toks[1], line)?;
                    let v = parse_num(toks[2], line)?;
                    let c = parse_num(toks[3], line)?;
                    if u == 0 || v == 0 || u > u32::MAX as usize || v > u32::MAX as usize || c > u8::MAX as usize {
                        return Err(err(format!("move {content:?} out of range")));
                    }
                    moves.push(((u - 1) as u32, (v - 1) as u32, c as u8));
                }
                Some("w") if toks.len() >= 2 => {
                    let nums = toks[1..].iter().map(|t| parse_num(t, line)).collect::<Result<Vec<_>>>()?;
                    let (&color, ids) = nums.split_last().unwrap();
                    if ids.contains(&0) || color > u8::MAX as usize {
                        return Err(err("witness ids are 1-based".into()));
                    }
                    outcome = Some(Outcome::BuilderWin {
                        witness: ids.iter().map(|v| v - 1).collect(),
                        color: color as u8,
                    });
                }
                Some("x") if toks.len() == 2 => {
                    outcome = Some(Outcome::Exhausted {
                        budget: parse_num(toks[1], line)?,
                    });
                }
                _ => return Err(err(format!("unrecognised line {content:?}"))),
            }
        }
        let q = q.ok_or(Error::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        let outcome = outcome.ok_or(Error::Parse {
            line: 0,
            msg: "missing trailer".into(),
        })?;
        Ok(GameTranscript {
            target: target.clone(),
            q,
            moves,
            rounds: Vec::new(),
            early: false,
            outcome,
        })
    }

    /// Board size implied by the moves.
    pub fn board_vertices(&self) -> usize {
        self.moves.iter().map(|&(u, v, _)| u.max(v) as usize + 1).max().unwrap_or(0)
    }
}

/// Replays a transcript: every move is a new edge with a color below `q`,
/// the board has degeneracy at most `qd - (q-1)` for the target's
/// degeneracy `d`, and a claimed win maps every target edge onto a board
/// edge of the winning color injectively.
pub fn check_transcript(t: &GameTranscript) -> std::result::Result<(), String> {
    let d = degeneracy_ordering(&t.target).0.max(1);
    let bound = t.q * d - (t.q - 1);
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(t.moves.len());
    for (i, &(u, v, c)) in t.moves.iter().enumerate() {
        if u == v {
            return Err(format!("move {} is a loop", i + 1));
        }
        if c as usize >= t.q {
            return Err(format!("move {} has color {c} with q = {}", i + 1, t.q));
        }
        edges.push((u.min(v), u.max(v)));
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err("an edge is exposed twice".into());
    }
    let board_degeneracy = degeneracy_of_edges(t.board_vertices(), &edges);
    if board_degeneracy > bound {
        return Err(format!("board degeneracy {board_degeneracy} exceeds {bound}"));
    }
    match &t.outcome {
        Outcome::Exhausted { budget } => {
            if t.moves.len() > *budget {
                return Err("more moves than the budget".into());
            }
        }
        Outcome::BuilderWin { witness, color } => {
            if witness.len() != t.target.vertex_count() {
                return Err("witness size differs from the target".into());
            }
            let mut seen = std::collections::HashSet::new();
            if !witness.iter().all(|v| seen.insert(*v)) {
                return Err("witness repeats a board vertex".into());
            }
            let mut wanted: HashMap<(u32, u32), bool> = t
                .target
                .edges()
                .map(|(x, y)| {
                    let (a, b) = (witness[x] as u32, witness[y] as u32);
                    ((a.min(b), a.max(b)), false)
                })
                .collect();
            for (&e, &(_, _, c)) in edges.iter().zip(&t.moves) {
                if let Some(hit) = wanted.get_mut(&e) {
                    if c != *color {
                        return Err(format!("witness edge {}-{} has color {c}", e.0 + 1, e.1 + 1));
                    }
                    *hit = true;
                }
            }
            if let Some((&(a, b), _)) = wanted.iter().find(|(_, &hit)| !hit) {
                return Err(format!("witness edge {}-{} was never exposed", a + 1, b + 1));
            }
        }
    }
    Ok(())
}

pub fn verify_transcript(t: &GameTranscript) -> bool {
    check_transcript(t).is_ok()
}

/// Longest run of equal colors, as a subsequence, among the round colors.
pub fn constant_subsequence(rounds: &[RoundRecord], q: usize) -> usize {
    (0..q as u8).map(|c| rounds.iter().filter(|r| r.color == c).count()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn play(target: &Graph, q: usize, painter: &mut dyn Painter) -> GameTranscript {
        let t = run_game(target, q, painter, usize::MAX, Spacing::Compact).unwrap();
        check_transcript(&t).unwrap();
        assert!(matches!(t.outcome, Outcome::BuilderWin { .. }));
        t
    }

    #[test]
    fn single_edge_in_one_move() {
        let t = play(&Graph::path(2), 2, &mut RandomPainter::new(3));
        assert_eq!(t.moves.len(), 1);
    }

    #[test]
    fn path_against_adversary() {
        let p3 = Graph::path(3);
        for spacing in [Spacing::Compact, Spacing::Literal] {
            let t = run_game(&p3, 2, &mut RoundRobinPainter::default(), usize::MAX, spacing).unwrap();
            check_transcript(&t).unwrap();
            assert!(matches!(t.outcome, Outcome::BuilderWin { .. }));
        }
    }

    #[test]
    fn star_three_colors() {
        let t = play(&Graph::star(3), 3, &mut RandomPainter::new(7));
        assert!(t.board_vertices() > 0);
    }

    #[test]
    fn plan_values() {
        let plan = BuilderPlan::new(&Graph::path(3), 2, Spacing::Literal).unwrap();
        assert_eq!((plan.d, plan.s, plan.t), (1, 1, 3));
        assert_eq!(plan.n[3], 1);
        // m_2 = r_1(2·(1+1); 2) = 7, n_2 = 14
        assert_eq!(plan.m[2], 7);
        assert_eq!(plan.n[2], 14);
        let compact = BuilderPlan::new(&Graph::path(3), 2, Spacing::Compact).unwrap();
        assert_eq!(compact.n, vec![22, 6, 2, 1]);
    }

    #[test]
    fn d2_reports_the_query() {
        let err = BuilderPlan::new(&Graph::complete(3), 2, Spacing::Compact).unwrap_err();
        match err {
            Error::Capacity(msg) => assert!(msg.contains("r_3(12; 8)"), "{msg}"),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn out_of_range_color_is_a_protocol_error() {
        let r = run_game(&Graph::path(3), 2, &mut FixedPainter(5), usize::MAX, Spacing::Compact);
        assert!(matches!(r, Err(Error::Protocol(_))));
    }

    #[test]
    fn budget_exhaustion() {
        let t = run_game(&Graph::path(4), 2, &mut RoundRobinPainter::default(), 3, Spacing::Compact).unwrap();
        assert_eq!(t.outcome, Outcome::Exhausted { budget: 3 });
        assert!(verify_transcript(&t));
    }

    #[test]
    fn tampering_is_detected() {
        let mut t = play(&Graph::path(4), 2, &mut RoundRobinPainter::default());
        let text = t.to_text();
        let back = GameTranscript::parse(&t.target, &text).unwrap();
        assert!(verify_transcript(&back));
        // recolor a witness edge
        if let Outcome::BuilderWin { witness, .. } = &t.outcome {
            let (a, b) = (witness[0] as u32, witness[1] as u32);
            let (a, b) = (a.min(b), a.max(b));
            let mv = t.moves.iter_mut().find(|(u, v, _)| (*u.min(v), *u.max(v)) == (a, b)).unwrap();
            mv.2 ^= 1;
        }
        assert!(!verify_transcript(&t));
        // a triangle pushes the degeneracy to 2
        let mut t = play(&Graph::path(3), 2, &mut FixedPainter(0));
        let base = t.board_vertices() as u32;
        t.moves.extend([(base, base + 1, 0), (base + 1, base + 2, 0), (base, base + 2, 0)]);
        assert!(!verify_transcript(&t));
    }

    #[test]
    fn interactive_prompts() {
        let answers = b"1\n0\n1\n0\n1\n0\n1\n0\n1\n0\n1\n0\n1\n0\n1\n0\n1\n0\n1\n0\n1\n0\n" as &[u8];
        let mut out = Vec::new();
        let mut painter = InteractivePainter::new(answers, &mut out);
        let t = run_game(&Graph::path(3), 2, &mut painter, usize::MAX, Spacing::Compact).unwrap();
        assert!(verify_transcript(&t));
        assert!(String::from_utf8(out).unwrap().starts_with("edge 1-2 color? "));
        let mut painter = InteractivePainter::new(b"" as &[u8], Vec::new());
        assert!(matches!(
            run_game(&Graph::path(3), 2, &mut painter, usize::MAX, Spacing::Compact),
            Err(Error::Protocol(_))
        ));
    }
}
