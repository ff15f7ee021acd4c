//! Weierstrass sets of a pointed graph.
//!
//! Two subsets of the naturals attach to a vertex `p`:
//!
//! * the rank jump set — those `n` with `r(n*p) > r((n-1)*p)`; its complement
//!   has exactly `g` gaps, all below `2g`;
//! * the pole-order set — those `n` realized by an integer function whose
//!   only "pole" is at `p`, i.e. whose Laplacian is `>= 0` away from `p` and
//!   exactly `-n` there. Equivalently: `n*p` is equivalent to an effective
//!   divisor vanishing at `p`. This one is closed under addition.
//!
//! On simple graphs the jump set is contained in the pole-order set, and the
//! pole-order set is a numerical semigroup whose generators sit below
//! `4g - 1`, which is why that window certifies completeness.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::divisor::{Divisor, VertexFunction};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};
use crate::rank::{rank, rank_with_floor};
use crate::reduce::{equivalent, reduce};
use crate::setcalc::{max_plus_convolve, minkowski_sum};

/// Cofinite subset of the naturals containing 0, stored as its finite gap
/// list (strictly increasing, all >= 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CofiniteSet {
    gaps: Vec<u64>,
}

impl CofiniteSet {
    /// Builds from a gap list; sorts and deduplicates. Gaps must be >= 1.
    pub fn from_gaps(mut gaps: Vec<u64>) -> Self {
        assert!(!gaps.contains(&0), "0 is always a member");
        gaps.sort_unstable();
        gaps.dedup();
        CofiniteSet { gaps }
    }

    /// The whole of the naturals.
    pub fn full() -> Self {
        CofiniteSet { gaps: Vec::new() }
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Least `c` with everything from `c` on a member.
    pub fn conductor(&self) -> u64 {
        self.gaps.last().map_or(0, |&m| m + 1)
    }

    pub fn contains(&self, n: u64) -> bool {
        self.gaps.binary_search(&n).is_err()
    }

    /// Members in increasing order (infinite; `take` as needed).
    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        (0..).filter(move |&n| self.contains(n))
    }

    /// The `k`-th member, counting from `nth_member(0) = 0`.
    pub fn nth_member(&self, k: usize) -> u64 {
        let mut remaining = k as u64;
        let mut gap_idx = 0;
        let mut n = 0;
        loop {
            while gap_idx < self.gaps.len() && self.gaps[gap_idx] == n {
                n += 1;
                gap_idx += 1;
            }
            if remaining == 0 {
                return n;
            }
            remaining -= 1;
            n += 1;
        }
    }

    /// Membership bitmap on `[0, bound]`.
    pub fn bitmap(&self, bound: u64) -> Vec<bool> {
        (0..=bound).map(|n| self.contains(n)).collect()
    }

    /// First `kmax + 1` members as a minimal-pole-order sequence.
    pub fn to_lambda(&self, kmax: usize) -> LambdaSeq {
        LambdaSeq::new((0..=kmax).map(|k| self.nth_member(k)).collect())
    }
}

/// `values[k]` = least `n` whose divisor `n*p` reaches rank `k`; strictly
/// increasing with `values[0] = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSeq {
    values: Vec<u64>,
}

impl LambdaSeq {
    pub fn new(values: Vec<u64>) -> Self {
        assert!(!values.is_empty(), "sequence needs at least the rank-0 entry");
        assert!(values[0] == 0, "rank 0 is reached at n = 0");
        assert!(
            values.windows(2).all(|w| w[0] < w[1]),
            "minimal pole orders are strictly increasing"
        );
        LambdaSeq { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn kmax(&self) -> usize {
        self.values.len() - 1
    }

    /// Reads the sequence back as a cofinite set. Exact when the sequence
    /// extends past the set's conductor (every jump is listed).
    pub fn to_cofinite(&self) -> CofiniteSet {
        let last = *self.values.last().unwrap();
        let gaps = (1..last)
            .filter(|n| self.values.binary_search(n).is_err())
            .collect();
        CofiniteSet::from_gaps(gaps)
    }
}

/// Membership window for a set of naturals: bitmap on `[0, bound]`, the
/// window's additive generators, and whether the window provably determines
/// the whole set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetReport {
    pub bound: u64,
    members: Vec<bool>,
    pub generators: Vec<u64>,
    pub certified_complete: bool,
}

impl SetReport {
    fn new(bound: u64, members: Vec<bool>, certified_complete: bool) -> Self {
        debug_assert_eq!(members.len(), bound as usize + 1);
        let generators = window_generators(&members);
        SetReport { bound, members, generators, certified_complete }
    }

    pub fn contains(&self, n: u64) -> bool {
        n <= self.bound && self.members[n as usize]
    }

    pub fn members_bitmap(&self) -> &[bool] {
        &self.members
    }

    pub fn member_list(&self) -> Vec<u64> {
        (0..=self.bound).filter(|&n| self.members[n as usize]).collect()
    }
}

/// Members not expressible as a sum of two smaller positive members.
fn window_generators(members: &[bool]) -> Vec<u64> {
    let mut gens = Vec::new();
    for m in 1..members.len() {
        if !members[m] {
            continue;
        }
        let composite = (1..m).any(|a| members[a] && members[m - a]);
        if !composite {
            gens.push(m as u64);
        }
    }
    gens
}

/// The rank jump set of `(g, p)`: all `n` with `r(n*p) > r((n-1)*p)`,
/// returned through its gap list. Ranks are swept incrementally, and the
/// gap-count law (`g` gaps, all in `[1, 2g-1]`) is checked before returning.
pub fn rank_weierstrass_set(g: &Multigraph, p: VertexId) -> Result<CofiniteSet> {
    g.check_vertex(p)?;
    let genus = g.genus();
    let n_verts = g.vertex_count();
    let mut gaps = Vec::new();
    let mut prev = 0i64; // r(0 * p)
    for n in 1..=(2 * genus).saturating_sub(1) {
        let d = Divisor::single(n_verts, p, n as i64);
        let r = rank_with_floor(g, &d, prev);
        match r - prev {
            0 => gaps.push(n),
            1 => {}
            _ => return Err(Error::InternalInvariant("rank can only step by 0 or 1")),
        }
        prev = r;
    }
    if gaps.len() as u64 != genus {
        return Err(Error::InternalInvariant("gap count must equal the genus"));
    }
    Ok(CofiniteSet::from_gaps(gaps))
}

/// Minimal pole orders `values[k] = min { n : r(n*p) = k }` for `k <= kmax`.
pub fn lambda_sequence(g: &Multigraph, p: VertexId, kmax: usize) -> Result<LambdaSeq> {
    let jumps = rank_weierstrass_set(g, p)?;
    Ok(jumps.to_lambda(kmax))
}

/// Walks divisor classes of effective divisors avoiding `p`, degree by
/// degree, storing each class by its `p`-reduced form. `on_degree` receives
/// (degree, reduced form of degree*p, class table) and can stop the walk.
fn class_walk<F>(g: &Multigraph, p: VertexId, max_degree: u64, mut on_degree: F)
where
    F: FnMut(u64, &Divisor, &BTreeMap<Divisor, Divisor>) -> bool,
{
    let n = g.vertex_count();
    let zero = Divisor::zero(n);
    // reduced class representative -> an effective divisor avoiding p in it
    let mut classes: BTreeMap<Divisor, Divisor> = BTreeMap::new();
    classes.insert(zero.clone(), zero.clone());
    let mut np_reduced = zero;
    if !on_degree(0, &np_reduced, &classes) {
        return;
    }
    let bump_p = Divisor::single(n, p, 1);
    for degree in 1..=max_degree {
        np_reduced = reduce(g, p, &(&np_reduced + &bump_p)).0;
        let mut next: BTreeMap<Divisor, Divisor> = BTreeMap::new();
        for (reduced, witness) in &classes {
            for q in 0..n {
                if q == p {
                    continue;
                }
                let bump = Divisor::single(n, q, 1);
                let key = reduce(g, p, &(reduced + &bump)).0;
                next.entry(key).or_insert_with(|| witness + &bump);
            }
        }
        classes = next;
        if !on_degree(degree, &np_reduced, &classes) {
            return;
        }
    }
}

fn default_certified_bound(genus: u64) -> u64 {
    if genus == 0 {
        1
    } else {
        4 * genus - 1
    }
}

/// The pole-order set of `(g, p)` on a window `[0, B]`.
///
/// `n` is a member iff some effective divisor avoiding `p` is equivalent to
/// `n*p`. On simple graphs the default window `B = max(4g - 1, 1)` provably
/// contains every generator, so the report is certified complete; a
/// multigraph must supply its own bound and gets an uncertified window.
pub fn functional_weierstrass_set(
    g: &Multigraph,
    p: VertexId,
    bound: Option<u64>,
) -> Result<SetReport> {
    g.check_vertex(p)?;
    let simple = g.is_simple();
    let default_bound = default_certified_bound(g.genus());
    let b = match bound {
        Some(b) => b,
        None if simple => default_bound,
        None => return Err(Error::BoundRequired),
    };
    let mut members = vec![false; b as usize + 1];
    class_walk(g, p, b, |degree, np_reduced, classes| {
        members[degree as usize] = classes.contains_key(np_reduced);
        true
    });
    Ok(SetReport::new(b, members, simple && b >= default_bound))
}

/// A function with its only pole at `p`, of exact order `n` — i.e. with
/// Laplacian `-n` at `p` and `>= 0` elsewhere — normalized to 0 at `p`.
/// `None` when no such function exists.
pub fn pole_witness(g: &Multigraph, p: VertexId, n: u64) -> Option<VertexFunction> {
    g.check_vertex(p).ok()?;
    if n == 0 {
        return Some(VertexFunction::zero(g.vertex_count()));
    }
    let mut found: Option<Divisor> = None;
    class_walk(g, p, n, |degree, np_reduced, classes| {
        if degree == n {
            found = classes.get(np_reduced).cloned();
            false
        } else {
            true
        }
    });
    let effective = found?;
    let target = Divisor::single(g.vertex_count(), p, n as i64);
    let f = equivalent(g, &effective, &target)
        .expect("walk produced a divisor in the class of n*p");
    Some(f.normalized_at(p))
}

/// Least positive pole order at `p` on a simple graph: the minimum over the
/// components of `g - p` of the edge multiplicity from `p` into the
/// component.
pub fn functional_multiplicity(g: &Multigraph, p: VertexId) -> Result<u64> {
    g.check_vertex(p)?;
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let m = g
        .removal_components(p)
        .iter()
        .map(|comp| comp.iter().map(|&v| g.multiplicity(p, v)).sum::<u64>())
        .min()
        .expect("a simple graph has at least two vertices");
    Ok(m)
}

/// Weierstrass point test: does `g*p` already move, i.e. `r(g*p) >= 1`?
/// Equivalent to the gap list differing from `{1, ..., g}`.
pub fn is_weierstrass_point(g: &Multigraph, p: VertexId) -> bool {
    let genus = g.genus();
    let d = Divisor::single(g.vertex_count(), p, genus as i64);
    let by_rank = rank(g, &d) >= 1;
    #[cfg(debug_assertions)]
    {
        let expected: Vec<u64> = (1..=genus).collect();
        let by_gaps = rank_weierstrass_set(g, p)
            .map(|s| s.gaps() != expected.as_slice())
            .unwrap_or(false);
        debug_assert_eq!(by_rank, by_gaps, "rank test and gap test must agree");
    }
    by_rank
}

/// `functional_weierstrass_set` computed per block of the cut vertex `p`
/// (each component of `g - p` plus `p`) and recombined as a Minkowski sum
/// on the window. Agrees with the direct computation.
pub fn functional_weierstrass_set_blocks(
    g: &Multigraph,
    p: VertexId,
    bound: Option<u64>,
) -> Result<SetReport> {
    g.check_vertex(p)?;
    let simple = g.is_simple();
    let default_bound = default_certified_bound(g.genus());
    let b = match bound {
        Some(b) => b,
        None if simple => default_bound,
        None => return Err(Error::BoundRequired),
    };
    let mut acc = vec![false; b as usize + 1];
    acc[0] = true;
    for comp in g.removal_components(p) {
        let (block, bp) = g.block_at(p, &comp);
        let part = functional_weierstrass_set(&block, bp, Some(b))?;
        acc = minkowski_sum(&acc, part.members_bitmap())?;
    }
    Ok(SetReport::new(b, acc, simple && b >= default_bound))
}

/// `lambda_sequence` computed per block of the cut vertex `p` and recombined
/// by max-plus convolution. Agrees with the direct computation.
pub fn lambda_sequence_blocks(g: &Multigraph, p: VertexId, kmax: usize) -> Result<LambdaSeq> {
    let mut acc = LambdaSeq::new((0..=kmax as u64).collect());
    let comps = g.removal_components(p);
    if comps.is_empty() {
        // Single-vertex graph: ranks climb by one per chip.
        return Ok(acc);
    }
    let mut first = true;
    for comp in comps {
        let (block, bp) = g.block_at(p, &comp);
        let part = lambda_sequence(&block, bp, kmax)?;
        acc = if first { part } else { max_plus_convolve(&acc, &part) };
        first = false;
    }
    Ok(acc)
}
