//! Desarguesian projective planes `PG(2, q)` over prime fields.
//!
//! Points and lines both use normalised homogeneous triples in the order
//! `(x, y, 1)`, then `(x, 1, 0)`, then `(1, 0, 0)`, so point `(x, y, 1)` has
//! id `x*q + y`, `(x, 1, 0)` has id `q^2 + x`, and `(1, 0, 0)` has id
//! `q^2 + q`. Line ids follow the same scheme on coefficient triples.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{capacity, input, Error, Result};

/// Deterministic trial division.
pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x < 4 {
        return true;
    }
    if x % 2 == 0 {
        return false;
    }
    let mut f = 3u64;
    while f.checked_mul(f).is_some_and(|sq| sq <= x) {
        if x % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// Least prime `p >= x`. Bertrand's postulate guarantees `p < 2x`, which is
/// asserted.
pub fn next_prime_at_least(x: u64) -> Result<u64> {
    if x < 2 {
        return input(format!("next_prime_at_least needs x >= 2, got {x}"));
    }
    let mut p = x;
    while !is_prime(p) {
        p = match p.checked_add(1) {
            Some(p) => p,
            None => return capacity(format!("no prime >= {x} fits in 64 bits")),
        };
    }
    assert!(p / 2 < x || (p == 2 && x == 2), "Bertrand bound violated at x = {x}");
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectivePlane {
    q: usize,
    points: usize,
    lines: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl ProjectivePlane {
    /// Canonical `PG(2, q)` for prime `q`.
    pub fn build(q: usize) -> Result<ProjectivePlane> {
        if !is_prime(q as u64) {
            return input(format!("plane order {q} is not prime (prime powers are unsupported)"));
        }
        let total = q
            .checked_mul(q)
            .and_then(|s| s.checked_add(q + 1))
            .ok_or_else(|| Error::Capacity(format!("order {q} too large")))?;
        let inv = inverses(q);
        let lines: Vec<Vec<usize>> = (0..total)
            .map(|id| {
                let [a, b, c] = triple_of(id, q);
                let mut pts = line_points(a, b, c, q, &inv);
                pts.sort_unstable();
                pts
            })
            .collect();
        Ok(ProjectivePlane::from_lines(q, total, lines))
    }

    /// Shared, lazily built plane of order `q`. Constructions that need the
    /// same plane many times go through here.
    pub fn cached(q: usize) -> Result<Arc<ProjectivePlane>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ProjectivePlane>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(p) = cache.lock().unwrap().get(&q) {
            return Ok(Arc::clone(p));
        }
        let plane = Arc::new(ProjectivePlane::build(q)?);
        cache.lock().unwrap().insert(q, Arc::clone(&plane));
        Ok(plane)
    }

    /// Raw incidence structure with no validation; pair with [`verify_plane`].
    pub fn from_lines(q: usize, points: usize, lines: Vec<Vec<usize>>) -> ProjectivePlane {
        let mut incidence = vec![Vec::new(); points];
        for (l, pts) in lines.iter().enumerate() {
            for &p in pts {
                if p < points {
                    incidence[p].push(l);
                }
            }
        }
        ProjectivePlane {
            q,
            points,
            lines,
            incidence,
        }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn point_count(&self) -> usize {
        self.points
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line(&self, l: usize) -> &[usize] {
        &self.lines[l]
    }

    /// Lines through point `p`, ascending.
    pub fn lines_through(&self, p: usize) -> &[usize] {
        &self.incidence[p]
    }

    /// Point coordinates as a normalised triple.
    pub fn point_coords(&self, p: usize) -> [usize; 3] {
        triple_of(p, self.q)
    }

    /// One line per row, sorted 1-based point ids, rows sorted
    /// lexicographically.
    pub fn dump(&self) -> String {
        let mut rows: Vec<Vec<usize>> = self
            .lines
            .iter()
            .map(|l| {
                let mut l = l.clone();
                l.sort_unstable();
                l
            })
            .collect();
        rows.sort();
        let mut s = String::new();
        for row in rows {
            let ids: Vec<String> = row.iter().map(|p| (p + 1).to_string()).collect();
            let _ = writeln!(s, "{}", ids.join(" "));
        }
        s
    }
}

fn triple_of(id: usize, q: usize) -> [usize; 3] {
    if id < q * q {
        [id / q, id % q, 1]
    } else if id < q * q + q {
        [id - q * q, 1, 0]
    } else {
        [1, 0, 0]
    }
}

fn point_id(x: usize, y: usize, z: usize, q: usize) -> usize {
    match (z, y) {
        (1, _) => x * q + y,
        (0, 1) => q * q + x,
        _ => q * q + q,
    }
}

fn inverses(q: usize) -> Vec<usize> {
    let mut inv = vec![0; q];
    for a in 1..q {
        inv[a] = (1..q).find(|&b| a * b % q == 1).unwrap();
    }
    inv
}

/// Points `(x, y, z)` with `ax + by + cz = 0 (mod q)`.
fn line_points(a: usize, b: usize, c: usize, q: usize, inv: &[usize]) -> Vec<usize> {
    let neg = |v: usize| (q - v % q) % q;
    let mut pts = Vec::with_capacity(q + 1);
    // affine points (x, y, 1)
    if b != 0 {
        for x in 0..q {
            let y = neg(a * x + c) * inv[b] % q;
            pts.push(point_id(x, y, 1, q));
        }
    } else if a != 0 {
        let x = neg(c) * inv[a] % q;
        for y in 0..q {
            pts.push(point_id(x, y, 1, q));
        }
    }
    // points at infinity (x, 1, 0): ax + b = 0
    if a != 0 {
        let x = neg(b) * inv[a] % q;
        pts.push(point_id(x, 1, 0, q));
    } else if b == 0 {
        for x in 0..q {
            pts.push(point_id(x, 1, 0, q));
        }
    }
    // (1, 0, 0): a = 0
    if a == 0 {
        pts.push(point_id(1, 0, 0, q));
    }
    pts
}

/// Exhaustive check of the plane axioms and the count invariants.
///
/// Checks: `q^2+q+1` points and lines, every line of size `q+1` without
/// repeats, every point on `q+1` lines, each point pair on exactly one line,
/// each line pair meeting in exactly one point, and a quadrilateral (four
/// points with no three collinear).
pub fn verify_plane(p: &ProjectivePlane) -> bool {
    let q = p.q;
    let total = q * q + q + 1;
    if p.points != total || p.lines.len() != total {
        return false;
    }
    let mut member = vec![vec![false; total]; total];
    for (l, pts) in p.lines.iter().enumerate() {
        if pts.len() != q + 1 {
            return false;
        }
        for &pt in pts {
            if pt >= total || member[l][pt] {
                return false;
            }
            member[l][pt] = true;
        }
    }
    if p.incidence.iter().any(|ls| ls.len() != q + 1) {
        return false;
    }
    // point pairs
    let mut pair_count = vec![0u32; total * total];
    for pts in &p.lines {
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                let (a, b) = (a.min(b), a.max(b));
                pair_count[a * total + b] += 1;
            }
        }
    }
    for a in 0..total {
        for b in a + 1..total {
            if pair_count[a * total + b] != 1 {
                return false;
            }
        }
    }
    // line pairs
    for l1 in 0..total {
        for l2 in l1 + 1..total {
            let common = p.lines[l2].iter().filter(|&&pt| member[l1][pt]).count();
            if common != 1 {
                return false;
            }
        }
    }
    has_quadrilateral(p, &member)
}

fn has_quadrilateral(p: &ProjectivePlane, member: &[Vec<bool>]) -> bool {
    let collinear = |a: usize, b: usize, c: usize| member.iter().any(|row| row[a] && row[b] && row[c]);
    fn rec(
        p: &ProjectivePlane,
        chosen: &mut Vec<usize>,
        from: usize,
        collinear: &dyn Fn(usize, usize, usize) -> bool,
    ) -> bool {
        if chosen.len() == 4 {
            return true;
        }
        for v in from..p.points {
            let ok = (0..chosen.len())
                .all(|i| (i + 1..chosen.len()).all(|j| !collinear(chosen[i], chosen[j], v)));
            if ok {
                chosen.push(v);
                if rec(p, chosen, v + 1, collinear) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(p, &mut Vec::new(), 0, &collinear)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert_eq!(next_prime_at_least(3).unwrap(), 3);
        assert_eq!(next_prime_at_least(8).unwrap(), 11);
        assert_eq!(next_prime_at_least(14).unwrap(), 17);
        assert_eq!(next_prime_at_least(2).unwrap(), 2);
        assert!(next_prime_at_least(1).is_err());
        assert!(!is_prime(1) && !is_prime(9) && is_prime(97));
    }

    #[test]
    fn fano_plane() {
        let p = ProjectivePlane::build(2).unwrap();
        assert_eq!(p.point_count(), 7);
        assert_eq!(p.line_count(), 7);
        assert!(p.lines().iter().all(|l| l.len() == 3));
        assert!(verify_plane(&p));
    }

    #[test]
    fn order_three() {
        let p = ProjectivePlane::build(3).unwrap();
        assert_eq!(p.point_count(), 13);
        assert!(p.lines().iter().all(|l| l.len() == 4));
        assert!(verify_plane(&p));
    }

    #[test]
    fn rejects_non_primes() {
        assert!(ProjectivePlane::build(4).is_err());
        assert!(ProjectivePlane::build(1).is_err());
    }

    #[test]
    fn broken_planes_fail() {
        let p = ProjectivePlane::build(2).unwrap();
        let mut lines = p.lines().to_vec();
        lines.pop();
        assert!(!verify_plane(&ProjectivePlane::from_lines(2, 7, lines)));

        let mut lines = p.lines().to_vec();
        lines[6] = lines[0].clone();
        assert!(!verify_plane(&ProjectivePlane::from_lines(2, 7, lines)));
    }

    #[test]
    fn coordinates_round_trip() {
        let q = 5;
        for id in 0..q * q + q + 1 {
            let [x, y, z] = triple_of(id, q);
            assert_eq!(point_id(x, y, z, q), id);
        }
    }
}
