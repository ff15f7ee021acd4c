//! Shared test apparatus: a brute-force oracle for rank/emptiness questions
//! that never calls the reduction machinery, the small-graph corpus, and
//! seeded random generators.
//!
//! The oracle decides `|D| != {}` by membership of `D - E` in a precomputed
//! table of *all* principal divisors `Lf` with `f` ranging over a box
//! `[-64, 64]` on the non-basepoint vertices. On graphs with at most 4
//! vertices and the divisor sizes used in tests, any two equivalent divisors
//! admit a witness of range well below the box radius, so table misses are
//! genuine non-memberships.

#![allow(dead_code)]

use chipfire::{effective_divisors, Divisor, Multigraph, VertexFunction};
use rand::Rng;

pub const BOX_RADIUS: i64 = 64;

/// All `Lf` for `f` in the box, packed 16 bits per vertex into a sorted
/// `u64` key list. Coefficients of such `Lf` stay far below 2^15.
pub struct PrincipalTable {
    n: usize,
    keys: Vec<u64>,
}

fn pack(coeffs: &[i64]) -> Option<u64> {
    let mut key = 0u64;
    for &c in coeffs {
        if !(-32768..32768).contains(&c) {
            return None;
        }
        key = (key << 16) | ((c + 32768) as u64);
    }
    Some(key)
}

impl PrincipalTable {
    pub fn build(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        assert!(n <= 4, "box enumeration is sized for at most 4 vertices");
        let mut keys = Vec::new();
        let mut values = vec![-BOX_RADIUS; n];
        values[0] = 0; // basepoint pinned; only differences matter
        loop {
            let f = VertexFunction::new(values.clone());
            let lap = g.laplacian(&f).unwrap();
            keys.push(pack(lap.coeffs()).expect("laplacian fits the packing"));
            // Odometer over vertices 1..n; vertex 0 stays pinned at 0.
            let mut i = 1;
            while i < n && values[i] == BOX_RADIUS {
                values[i] = -BOX_RADIUS;
                i += 1;
            }
            if i >= n {
                break;
            }
            values[i] += 1;
        }
        keys.sort_unstable();
        keys.dedup();
        PrincipalTable { n, keys }
    }

    pub fn contains_principal(&self, d: &Divisor) -> bool {
        debug_assert_eq!(d.len(), self.n);
        match pack(d.coeffs()) {
            Some(key) => self.keys.binary_search(&key).is_ok(),
            None => false,
        }
    }

    /// Is `D` equivalent to an effective divisor? Searches every effective
    /// `E` of matching degree for `D - E` principal.
    pub fn nonempty(&self, g: &Multigraph, d: &Divisor) -> bool {
        if d.degree() < 0 {
            return false;
        }
        effective_divisors(g, d.degree() as u64, None)
            .any(|e| self.contains_principal(&(d - &e)))
    }
}

/// Rank straight from the definition, with emptiness decided by the table.
pub fn oracle_rank(g: &Multigraph, table: &PrincipalTable, d: &Divisor) -> i64 {
    if !table.nonempty(g, d) {
        return -1;
    }
    let mut k = 1i64;
    loop {
        let beaten = effective_divisors(g, k as u64, None)
            .any(|e| !table.nonempty(g, &(d - &e)));
        if beaten {
            return k - 1;
        }
        k += 1;
        assert!(k <= d.degree() + 1, "rank cannot exceed the degree");
    }
}

/// Reducedness straight from the definition: effective away from `p`, and
/// every nonempty vertex set avoiding `p` goes negative somewhere when fired.
pub fn oracle_is_reduced(g: &Multigraph, p: usize, d: &Divisor) -> bool {
    let n = g.vertex_count();
    if (0..n).any(|v| v != p && d[v] < 0) {
        return false;
    }
    'sets: for mask in 1u32..(1 << n) {
        if mask & (1 << p) != 0 {
            continue;
        }
        for v in 0..n {
            if mask & (1 << v) == 0 {
                continue;
            }
            let outflow: i64 = (0..n)
                .filter(|&q| mask & (1 << q) == 0)
                .map(|q| g.multiplicity(v, q) as i64)
                .sum();
            if d[v] - outflow < 0 {
                continue 'sets; // this set cannot fire cleanly
            }
        }
        return false; // found a firable set
    }
    true
}

/// The ten connected simple graphs on at most four vertices, one per
/// isomorphism class.
pub fn small_simple_corpus() -> Vec<(&'static str, Multigraph)> {
    let g = |n, edges: &[(usize, usize)]| {
        let weighted: Vec<(usize, usize, u64)> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Multigraph::new(n, &weighted).unwrap()
    };
    vec![
        ("K1", g(1, &[])),
        ("K2", g(2, &[(0, 1)])),
        ("P3", g(3, &[(0, 1), (1, 2)])),
        ("K3", g(3, &[(0, 1), (1, 2), (0, 2)])),
        ("P4", g(4, &[(0, 1), (1, 2), (2, 3)])),
        ("star", g(4, &[(0, 1), (0, 2), (0, 3)])),
        ("paw", g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])),
        ("C4", g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])),
        ("diamond", g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])),
        ("K4", g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])),
    ]
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, p.len());
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Vertex permutations preserving all edge multiplicities.
pub fn automorphisms(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    permutations(n)
        .into_iter()
        .filter(|perm| {
            (0..n).all(|u| (0..n).all(|v| g.multiplicity(u, v) == g.multiplicity(perm[u], perm[v])))
        })
        .collect()
}

pub fn permute_divisor(d: &Divisor, perm: &[usize]) -> Divisor {
    let mut coeffs = vec![0; d.len()];
    for v in 0..d.len() {
        coeffs[perm[v]] = d[v];
    }
    Divisor::new(coeffs)
}

pub fn permute_graph(g: &Multigraph, perm: &[usize]) -> Multigraph {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let m = g.multiplicity(u, v);
            if m > 0 {
                edges.push((perm[u], perm[v], m));
            }
        }
    }
    Multigraph::new(n, &edges).unwrap()
}

/// All divisors with coefficients in `[-c, c]`, one representative per orbit
/// of the automorphism group.
pub fn divisor_orbit_reps(g: &Multigraph, c: i64) -> Vec<Divisor> {
    let auts = automorphisms(g);
    let n = g.vertex_count();
    let mut reps = Vec::new();
    let mut coeffs = vec![-c; n];
    loop {
        let d = Divisor::new(coeffs.clone());
        let canonical = auts
            .iter()
            .map(|perm| permute_divisor(&d, perm))
            .min()
            .unwrap();
        if canonical == d {
            reps.push(d);
        }
        let mut i = 0;
        while i < n && coeffs[i] == c {
            coeffs[i] = -c;
            i += 1;
        }
        if i >= n {
            break;
        }
        coeffs[i] += 1;
    }
    reps
}

/// Seeded connected multigraph: a random simple connected skeleton whose
/// edges are then thickened with multiplicities in `[1, max_mult]`.
pub fn random_multigraph<R: Rng>(n: usize, max_mult: u64, rng: &mut R) -> Multigraph {
    if n == 1 {
        return Multigraph::new(1, &[]).unwrap();
    }
    let skeleton = chipfire::random_simple_connected(n, (1, 2), rng.gen());
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if skeleton.multiplicity(u, v) > 0 {
                edges.push((u, v, rng.gen_range(1..=max_mult)));
            }
        }
    }
    Multigraph::new(n, &edges).unwrap()
}

/// Random divisor with coefficients in `[-3, 3]`, then one coefficient
/// adjusted so the total degree hits `target`.
pub fn random_divisor_with_degree<R: Rng>(n: usize, target: i64, rng: &mut R) -> Divisor {
    let mut coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    let v = rng.gen_range(0..n);
    let current: i64 = coeffs.iter().sum();
    coeffs[v] += target - current;
    Divisor::new(coeffs)
}
