//! Arithmetic on subsets of the naturals: numerical monoids, windowed
//! Minkowski sums, max-plus convolution of minimal-pole-order sequences,
//! staircase sets, and the Buchweitz obstruction.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::weierstrass::{CofiniteSet, LambdaSeq};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Additive submonoid of the naturals given by finitely many generators.
/// Numerical (cofinite) exactly when the generators' gcd is 1; an empty
/// generator list is the monoid `{0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalMonoid {
    generators: Vec<u64>,
}

impl NumericalMonoid {
    /// Sorts, deduplicates, and drops zero entries (0 generates nothing).
    pub fn new(generators: &[u64]) -> Self {
        let mut gens: Vec<u64> = generators.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        NumericalMonoid { generators: gens }
    }

    /// Sorted, deduplicated, zero-free.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn gcd(&self) -> u64 {
        self.generators.iter().fold(0, |acc, &g| gcd(acc, g))
    }

    /// Finite gap set / cofinite member set?
    pub fn is_numerical(&self) -> bool {
        self.gcd() == 1
    }

    /// Membership bitmap on `[0, bound]`.
    pub fn members_up_to(&self, bound: u64) -> Vec<bool> {
        let mut members = vec![false; bound as usize + 1];
        members[0] = true;
        for n in 1..=bound as usize {
            members[n] = self
                .generators
                .iter()
                .take_while(|&&g| g as usize <= n)
                .any(|&g| members[n - g as usize]);
        }
        members
    }

    pub fn contains(&self, n: u64) -> bool {
        *self.members_up_to(n).last().unwrap()
    }

    /// Gap data. For a numerical monoid the sieve runs until it has seen
    /// `min(generators)` consecutive members — past that point everything is
    /// a member — so the gap list is exact. Otherwise the gaps are infinite
    /// and only a window (up to four times the largest generator) is
    /// reported, with `gaps_complete` cleared.
    pub fn report(&self) -> MonoidReport {
        let multiplicity = self.generators.first().copied();
        if self.is_numerical() {
            let m0 = self.generators[0] as usize;
            let mut members = vec![true];
            let mut run = 0;
            while run < m0 {
                let n = members.len();
                let hit = self
                    .generators
                    .iter()
                    .take_while(|&&g| (g as usize) <= n)
                    .any(|&g| members[n - g as usize]);
                members.push(hit);
                run = if hit { run + 1 } else { 0 };
            }
            let gaps: Vec<u64> = (1..members.len() as u64)
                .filter(|&n| !members[n as usize])
                .collect();
            MonoidReport {
                frobenius: gaps.last().copied(),
                genus: Some(gaps.len() as u64),
                gaps,
                gaps_complete: true,
                multiplicity,
            }
        } else {
            let bound = self.generators.last().map_or(8, |&g| 4 * g);
            let members = self.members_up_to(bound);
            let gaps = (1..=bound).filter(|&n| !members[n as usize]).collect();
            MonoidReport {
                gaps,
                gaps_complete: false,
                frobenius: None,
                multiplicity,
                genus: None,
            }
        }
    }
}

/// Gap-side summary of a monoid. When `gaps_complete` is false the monoid is
/// not numerical and `gaps` is only an initial window; `frobenius` and
/// `genus` then stay empty. `multiplicity` is the least positive member,
/// absent only for the monoid `{0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidReport {
    pub gaps: Vec<u64>,
    pub gaps_complete: bool,
    pub frobenius: Option<u64>,
    pub multiplicity: Option<u64>,
    pub genus: Option<u64>,
}

/// Truncated sumset `{a + b : a in A, b in B}` of two membership bitmaps on
/// a shared window `[0, B]`. Both inputs must contain 0 (so the sum extends
/// both) and agree in length.
pub fn minkowski_sum(a: &[bool], b: &[bool]) -> Result<Vec<bool>> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch { expected: a.len(), found: b.len() });
    }
    if a.is_empty() || !a[0] || !b[0] {
        return Err(Error::MissingZero);
    }
    let mut out = vec![false; a.len()];
    for (i, &ai) in a.iter().enumerate() {
        if !ai {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(a.len() - i) {
            if bj {
                out[i + j] = true;
            }
        }
    }
    Ok(out)
}

/// Max-plus convolution `c(k) = max { a(i) + b(j) : i + j = k }`, truncated
/// to the shorter input's range. This is how minimal-pole-order sequences of
/// blocks glued at a vertex combine.
pub fn max_plus_convolve(a: &LambdaSeq, b: &LambdaSeq) -> LambdaSeq {
    let kmax = a.kmax().min(b.kmax());
    let av = a.values();
    let bv = b.values();
    let values = (0..=kmax)
        .map(|k| (0..=k).map(|i| av[i] + bv[k - i]).max().unwrap())
        .collect();
    LambdaSeq::new(values)
}

/// `{0, s_1, …, s_{n-1}} ∪ [s_n, ∞)` for the partial sums `s_i` of a
/// nonincreasing sequence. Zero entries are allowed; the empty sequence
/// gives the full set.
pub fn staircase_set(entries: &[u64]) -> Result<CofiniteSet> {
    if entries.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotSorted);
    }
    let mut stops = BTreeSet::new();
    stops.insert(0);
    let mut s = 0;
    for &e in entries {
        s += e;
        stops.insert(s);
    }
    let gaps = (1..s).filter(|n| !stops.contains(n)).collect();
    Ok(CofiniteSet::from_gaps(gaps))
}

/// Does the gap set `G` of a numerical monoid obstruct being a Weierstrass
/// gap set, i.e. is `|mG| > (2m-1)(g-1)` for the `m`-fold sumset `mG`?
/// Genus 0 and 1 gap sets ({} and {1}) are always realizable, so they never
/// violate; the inequality itself is only meaningful from genus 2 up.
pub fn buchweitz_violation(monoid: &NumericalMonoid, m: u64) -> Result<bool> {
    assert!(m >= 2, "sumset factor must be at least 2");
    if !monoid.is_numerical() {
        return Err(Error::NotNumerical);
    }
    let report = monoid.report();
    let genus = report.genus.unwrap();
    if genus <= 1 {
        return Ok(false);
    }
    let mut sums: BTreeSet<u64> = BTreeSet::new();
    sums.insert(0);
    for _ in 0..m {
        sums = sums
            .iter()
            .flat_map(|&s| report.gaps.iter().map(move |&g| s + g))
            .collect();
    }
    Ok(sums.len() as u64 > (2 * m - 1) * (genus - 1))
}
