//! Divisors (chip configurations) and integer vertex functions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Index, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

/// Integer-valued divisor on the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Divisor {
    coeffs: Vec<i64>,
}

impl Divisor {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Divisor { coeffs }
    }

    pub fn zero(vertices: usize) -> Self {
        Divisor { coeffs: vec![0; vertices] }
    }

    /// `amount` chips on a single vertex.
    pub fn single(vertices: usize, v: VertexId, amount: i64) -> Self {
        let mut coeffs = vec![0; vertices];
        coeffs[v] = amount;
        Divisor { coeffs }
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Vertices with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(v, _)| v)
    }
}

impl Index<VertexId> for Divisor {
    type Output = i64;
    fn index(&self, v: VertexId) -> &i64 {
        &self.coeffs[v]
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        debug_assert_eq!(self.len(), rhs.len());
        Divisor {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        debug_assert_eq!(self.len(), rhs.len());
        Divisor {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        Divisor { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl AddAssign<&Divisor> for Divisor {
    fn add_assign(&mut self, rhs: &Divisor) {
        debug_assert_eq!(self.len(), rhs.len());
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Divisor> for Divisor {
    fn sub_assign(&mut self, rhs: &Divisor) {
        debug_assert_eq!(self.len(), rhs.len());
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Integer function on vertices, considered up to additive constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexFunction {
    values: Vec<i64>,
}

impl VertexFunction {
    pub fn new(values: Vec<i64>) -> Self {
        VertexFunction { values }
    }

    pub fn zero(vertices: usize) -> Self {
        VertexFunction { values: vec![0; vertices] }
    }

    /// The function that is -1 at `p` and 0 elsewhere; applying the Laplacian
    /// to it fires `p` once.
    pub fn indicator(g: &Multigraph, p: VertexId) -> Result<Self> {
        g.check_vertex(p)?;
        let mut values = vec![0; g.vertex_count()];
        values[p] = -1;
        Ok(VertexFunction { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, v: VertexId) -> i64 {
        self.values[v]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Shifts by a constant so the value at `p` is 0.
    pub fn normalized_at(&self, p: VertexId) -> Self {
        let base = self.values[p];
        VertexFunction { values: self.values.iter().map(|v| v - base).collect() }
    }
}

impl Sub for &VertexFunction {
    type Output = VertexFunction;
    fn sub(self, rhs: &VertexFunction) -> VertexFunction {
        debug_assert_eq!(self.len(), rhs.len());
        VertexFunction {
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Multigraph {
    /// Graph Laplacian: `(Lf)(v) = sum over neighbors q of mult(v,q) * (f(v) - f(q))`.
    /// Always a degree-0 divisor.
    pub fn laplacian(&self, f: &VertexFunction) -> Result<Divisor> {
        let n = self.vertex_count();
        if f.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: f.len() });
        }
        let mut coeffs = vec![0i64; n];
        for v in 0..n {
            let mut acc = 0i64;
            for q in self.neighbors(v) {
                acc += self.multiplicity(v, q) as i64 * (f.value(v) - f.value(q));
            }
            coeffs[v] = acc;
        }
        Ok(Divisor::new(coeffs))
    }

    /// Canonical divisor: `deg(v) - 2` at every vertex; degree `2g - 2`.
    pub fn canonical_divisor(&self) -> Divisor {
        Divisor::new((0..self.vertex_count()).map(|v| self.degree(v) as i64 - 2).collect())
    }
}

/// Lazily enumerates every effective divisor of the given degree, in
/// descending lexicographic coefficient order, optionally restricted to
/// divisors vanishing at `forbid`.
pub fn effective_divisors(
    g: &Multigraph,
    degree: u64,
    forbid: Option<VertexId>,
) -> EffectiveDivisors {
    let n = g.vertex_count();
    if let Some(p) = forbid {
        assert!(p < n, "forbidden vertex out of range");
    }
    let slots: Vec<VertexId> = (0..n).filter(|&v| Some(v) != forbid).collect();
    let state = if slots.is_empty() && degree > 0 {
        None
    } else {
        let mut comp = vec![0i64; slots.len()];
        if let Some(first) = comp.first_mut() {
            *first = degree as i64;
        }
        Some(comp)
    };
    EffectiveDivisors { n, slots, state }
}

pub struct EffectiveDivisors {
    n: usize,
    slots: Vec<VertexId>,
    state: Option<Vec<i64>>,
}

impl Iterator for EffectiveDivisors {
    type Item = Divisor;

    fn next(&mut self) -> Option<Divisor> {
        let comp = self.state.as_mut()?;
        let mut coeffs = vec![0i64; self.n];
        for (slot, &c) in self.slots.iter().zip(comp.iter()) {
            coeffs[*slot] = c;
        }
        // Advance: decrement the last positive entry before the final slot and
        // move everything to its right onto the next slot.
        let k = comp.len();
        let pivot = (0..k.saturating_sub(1)).rev().find(|&i| comp[i] > 0);
        match pivot {
            Some(i) => {
                comp[i] -= 1;
                let rest: i64 = comp[i + 1..].iter().sum();
                for c in comp[i + 1..].iter_mut() {
                    *c = 0;
                }
                comp[i + 1] = rest + 1;
            }
            None => self.state = None,
        }
        Some(Divisor::new(coeffs))
    }
}
