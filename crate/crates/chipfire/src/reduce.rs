//! Reduced divisors: burning test, reduction, linear equivalence.

use alloc::vec;
use alloc::vec::Vec;

use crate::divisor::{effective_divisors, Divisor, VertexFunction};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

/// Burning pass from `p` against chip counts `d` (assumed >= 0 off `p`).
/// Returns the burnt-vertex mask; the unburnt vertices form the unique
/// maximal set that can fire without driving any of its members negative.
fn burn(g: &Multigraph, p: VertexId, d: &[i64]) -> Vec<bool> {
    let n = g.vertex_count();
    let mut burnt = vec![false; n];
    let mut heat = vec![0i64; n]; // edges arriving from burnt territory
    burnt[p] = true;
    let mut stack = vec![p];
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u) {
            if !burnt[v] {
                heat[v] += g.multiplicity(u, v) as i64;
                if heat[v] > d[v] {
                    burnt[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    burnt
}

/// Fires every vertex of `set` (mask) `times` times: chips cross each edge
/// leaving the set, and the running witness `f` drops by `times` on the set.
fn fire_set(g: &Multigraph, set: &[bool], times: i64, d: &mut [i64], f: &mut [i64]) {
    let n = g.vertex_count();
    for v in 0..n {
        if !set[v] {
            continue;
        }
        f[v] -= times;
        for q in g.neighbors(v) {
            if !set[q] {
                let moved = g.multiplicity(v, q) as i64 * times;
                d[v] -= moved;
                d[q] += moved;
            }
        }
    }
}

/// The maximal subset of `V - {p}` that can fire simultaneously without
/// making any of its vertices negative (the unburnt set of the burning
/// pass). Empty exactly when `d` is `p`-reduced, given `d >= 0` off `p`.
pub fn firable_set(g: &Multigraph, p: VertexId, d: &Divisor) -> Result<Vec<VertexId>> {
    g.check_vertex(p)?;
    assert_eq!(d.len(), g.vertex_count(), "divisor size must match the graph");
    for v in 0..g.vertex_count() {
        if v != p && d[v] < 0 {
            return Err(Error::NegativeOutsideP { vertex: v });
        }
    }
    let burnt = burn(g, p, d.coeffs());
    Ok((0..g.vertex_count()).filter(|&v| !burnt[v]).collect())
}

/// Is `d` the `p`-reduced representative: effective away from `p`, and no
/// nonempty subset of `V - {p}` can fire without going negative.
pub fn is_reduced(g: &Multigraph, p: VertexId, d: &Divisor) -> bool {
    assert_eq!(d.len(), g.vertex_count(), "divisor size must match the graph");
    if (0..g.vertex_count()).any(|v| v != p && d[v] < 0) {
        return false;
    }
    burn(g, p, d.coeffs()).iter().all(|&b| b)
}

/// The `p`-reduced divisor equivalent to `d`, with the witness function
/// (normalized to 0 at `p`) satisfying `reduced = d + laplacian(f)`.
pub fn reduce(g: &Multigraph, p: VertexId, d: &Divisor) -> (Divisor, VertexFunction) {
    let n = g.vertex_count();
    assert!(p < n, "basepoint out of range");
    assert_eq!(d.len(), n, "divisor size must match the graph");
    let mut cur: Vec<i64> = d.coeffs().to_vec();
    let mut f = vec![0i64; n];

    // First make the divisor effective off p. Working from the farthest BFS
    // level inward, firing everything strictly closer than the level pushes
    // chips across exactly the level's inward edges, so one batched firing
    // per level suffices and never disturbs the levels already fixed.
    let dist = g.bfs_levels(p);
    let max_level = dist.iter().copied().max().unwrap_or(0);
    for level in (1..=max_level).rev() {
        let mut rounds = 0i64;
        for v in 0..n {
            if dist[v] == level && cur[v] < 0 {
                let inward: i64 = g
                    .neighbors(v)
                    .filter(|&q| dist[q] < level)
                    .map(|q| g.multiplicity(v, q) as i64)
                    .sum();
                rounds = rounds.max((-cur[v] + inward - 1) / inward);
            }
        }
        if rounds > 0 {
            let set: Vec<bool> = (0..n).map(|v| dist[v] < level).collect();
            fire_set(g, &set, rounds, &mut cur, &mut f);
        }
    }

    // Dhar loop: fire the maximal firable set until nothing is firable.
    loop {
        let burnt = burn(g, p, &cur);
        if burnt.iter().all(|&b| b) {
            break;
        }
        let set: Vec<bool> = burnt.iter().map(|&b| !b).collect();
        fire_set(g, &set, 1, &mut cur, &mut f);
    }

    let base = f[p];
    for v in f.iter_mut() {
        *v -= base;
    }
    (Divisor::new(cur), VertexFunction::new(f))
}

/// Linear equivalence test with witness: `Some(f)` with
/// `d1 - d2 = laplacian(f)` iff the two divisors are equivalent.
/// Both are compared through their reduced forms at basepoint 0.
pub fn equivalent(g: &Multigraph, d1: &Divisor, d2: &Divisor) -> Option<VertexFunction> {
    if d1.degree() != d2.degree() {
        return None;
    }
    let (r1, f1) = reduce(g, 0, d1);
    let (r2, f2) = reduce(g, 0, d2);
    if r1 == r2 {
        // d1 + Lf1 = r1 = r2 = d2 + Lf2, so d1 - d2 = L(f2 - f1).
        Some(&f2 - &f1)
    } else {
        None
    }
}

/// The complete linear system `|d|`: every effective divisor equivalent to
/// `d`, in enumeration order. Empty when the degree is negative.
pub fn linear_system(g: &Multigraph, d: &Divisor) -> Vec<Divisor> {
    if d.degree() < 0 {
        return Vec::new();
    }
    let target = reduce(g, 0, d).0;
    effective_divisors(g, d.degree() as u64, None)
        .filter(|e| reduce(g, 0, e).0 == target)
        .collect()
}
