//! Finite connected loopless multigraphs with dense vertex indices.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::setcalc::NumericalMonoid;

/// Vertices are dense indices `0..vertex_count`.
pub type VertexId = usize;

/// Undirected multigraph: symmetric multiplicity matrix, zero diagonal,
/// connected by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    mult: Vec<Vec<u64>>,
    deg: Vec<u64>,
}

impl Multigraph {
    /// Builds a graph from an edge list. Duplicate `(u, v)` entries accumulate
    /// their multiplicities; entries with multiplicity 0 add nothing.
    pub fn new(vertices: usize, edges: &[(VertexId, VertexId, u64)]) -> Result<Self> {
        let mut mult = vec![vec![0u64; vertices]; vertices];
        for &(u, v, m) in edges {
            if u >= vertices {
                return Err(Error::OutOfRange { index: u, limit: vertices });
            }
            if v >= vertices {
                return Err(Error::OutOfRange { index: v, limit: vertices });
            }
            if u == v && m > 0 {
                return Err(Error::LoopEdge { vertex: u });
            }
            mult[u][v] += m;
            mult[v][u] += m;
        }
        let g = Self::from_matrix(mult)?;
        Ok(g)
    }

    fn from_matrix(mult: Vec<Vec<u64>>) -> Result<Self> {
        let n = mult.len();
        if n == 0 || !connected(&mult) {
            return Err(Error::Disconnected);
        }
        let deg = mult.iter().map(|row| row.iter().sum()).collect();
        Ok(Multigraph { n, mult, deg })
    }

    /// Complete graph on `k >= 1` vertices.
    pub fn complete(k: usize) -> Self {
        assert!(k >= 1, "complete graph needs at least one vertex");
        let mut mult = vec![vec![1u64; k]; k];
        for (v, row) in mult.iter_mut().enumerate() {
            row[v] = 0;
        }
        Self::from_matrix(mult).expect("complete graph is connected")
    }

    /// Complete bipartite graph with parts of size `m` and `n`, plus a
    /// designated vertex of degree `n` (a vertex of the size-`m` part).
    pub fn complete_bipartite(m: usize, n: usize) -> (Self, VertexId) {
        assert!(m >= 1 && n >= 1, "both parts must be nonempty");
        let total = m + n;
        let mut mult = vec![vec![0u64; total]; total];
        for u in 0..m {
            for v in m..total {
                mult[u][v] = 1;
                mult[v][u] = 1;
            }
        }
        let g = Self::from_matrix(mult).expect("complete bipartite graph is connected");
        (g, 0)
    }

    /// Two vertices joined by `n >= 1` parallel edges.
    pub fn banana(n: u64) -> Self {
        assert!(n >= 1, "banana graph needs at least one edge");
        Self::new(2, &[(0, 1, n)]).expect("banana graph is connected")
    }

    /// Glues `g2` onto `g1` by identifying `v2` with `v1`. Vertices of `g1`
    /// keep their indices; the remaining vertices of `g2` follow in order.
    /// Returns the glued graph and the identified vertex (`v1`'s index).
    pub fn vertex_glue(
        g1: &Multigraph,
        v1: VertexId,
        g2: &Multigraph,
        v2: VertexId,
    ) -> Result<(Self, VertexId)> {
        g1.check_vertex(v1)?;
        g2.check_vertex(v2)?;
        let n = g1.n + g2.n - 1;
        let mut mult = vec![vec![0u64; n]; n];
        for u in 0..g1.n {
            for v in 0..g1.n {
                mult[u][v] = g1.mult[u][v];
            }
        }
        // g2's vertex q lands on v1 if q == v2, otherwise after g1's block.
        let map2 = |q: VertexId| -> VertexId {
            if q == v2 {
                v1
            } else {
                g1.n + q - usize::from(q > v2)
            }
        };
        for u in 0..g2.n {
            for v in 0..g2.n {
                if g2.mult[u][v] > 0 {
                    mult[map2(u)][map2(v)] += g2.mult[u][v];
                }
            }
        }
        let g = Self::from_matrix(mult)?;
        Ok((g, v1))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Total number of edges, counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.deg.iter().sum::<u64>() / 2
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u64 {
        self.mult[u][v]
    }

    pub fn degree(&self, v: VertexId) -> u64 {
        self.deg[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.mult[v]
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(q, _)| q)
    }

    /// First Betti number `|E| - |V| + 1` (the "genus" of the graph).
    pub fn genus(&self) -> u64 {
        // Connectivity gives |E| >= |V| - 1, so add before subtracting.
        self.edge_count() + 1 - self.n as u64
    }

    /// No parallel edges and more than one vertex.
    pub fn is_simple(&self) -> bool {
        self.n > 1 && self.mult.iter().all(|row| row.iter().all(|&m| m <= 1))
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::OutOfRange { index: v, limit: self.n })
        }
    }

    /// BFS distance from `root` to every vertex.
    pub(crate) fn bfs_levels(&self, root: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[root] = 0;
        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push(v);
                }
            }
        }
        dist
    }

    /// Connected components of the graph with vertex `p` deleted, each listed
    /// in ascending vertex order.
    pub fn removal_components(&self, p: VertexId) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        seen[p] = true;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Subgraph induced on `component + {p}`, with the new index of `p`.
    /// `component` must be one of `removal_components(p)`.
    pub fn block_at(&self, p: VertexId, component: &[VertexId]) -> (Self, VertexId) {
        let mut verts: Vec<VertexId> = component.to_vec();
        verts.push(p);
        verts.sort_unstable();
        let k = verts.len();
        let mut mult = vec![vec![0u64; k]; k];
        for a in 0..k {
            for b in 0..k {
                mult[a][b] = self.mult[verts[a]][verts[b]];
            }
        }
        let new_p = verts.binary_search(&p).expect("p is in the block");
        let g = Self::from_matrix(mult).expect("block with its cut vertex is connected");
        (g, new_p)
    }
}

fn connected(mult: &[Vec<u64>]) -> bool {
    let n = mult.len();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0usize];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen[v] && mult[u][v] > 0 {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

/// Star multigraph realizing the monoid generated by `generators`: spoke `i`
/// joins the hub (the returned vertex) with multiplicity `n_i`. The hub's
/// pole-order set is exactly the monoid the generators span.
pub fn monoid_realization(generators: &[u64]) -> Result<(Multigraph, VertexId)> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if generators.contains(&0) {
        return Err(Error::ZeroEntry);
    }
    let mut gens = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let e = gens.len();
    let edges: Vec<(usize, usize, u64)> =
        gens.iter().enumerate().map(|(i, &m)| (0, i + 1, m)).collect();
    let g = Multigraph::new(1 + e, &edges)?;
    Ok((g, 0))
}

/// Simple graph whose designated vertex has pole-order set equal to the
/// numerical semigroup generated by `generators` (gcd must be 1): complete
/// bipartite blocks `K_{m,n_i}` glued at their degree-`n_i` vertices, where
/// `m` is the largest gap plus 2 (and 2 when there are no gaps).
pub fn semigroup_realization(generators: &[u64]) -> Result<(Multigraph, VertexId)> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if generators.contains(&0) {
        return Err(Error::ZeroEntry);
    }
    let monoid = NumericalMonoid::new(generators);
    if !monoid.is_numerical() {
        return Err(Error::NotNumerical);
    }
    let m = match monoid.report().frobenius {
        Some(f) => f as usize + 2,
        None => 2,
    };
    let gens = monoid.generators();
    let (mut g, mut p) = Multigraph::complete_bipartite(m, gens[0] as usize);
    for &ni in &gens[1..] {
        let (block, q) = Multigraph::complete_bipartite(m, ni as usize);
        let glued = Multigraph::vertex_glue(&g, p, &block, q)?;
        g = glued.0;
        p = glued.1;
    }
    Ok((g, p))
}

/// Glues `K_{2,e_i}` blocks at their degree-`e_i` vertices, one per entry of
/// the nonincreasing positive sequence `entries`. The identified vertex's
/// rank jump set is the staircase set of the sequence.
pub fn staircase_realization(entries: &[u64]) -> Result<(Multigraph, VertexId)> {
    if entries.is_empty() {
        return Err(Error::EmptySequence);
    }
    if entries.contains(&0) {
        return Err(Error::ZeroEntry);
    }
    if entries.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotSorted);
    }
    let (mut g, mut p) = Multigraph::complete_bipartite(2, entries[0] as usize);
    for &e in &entries[1..] {
        let (block, q) = Multigraph::complete_bipartite(2, e as usize);
        let glued = Multigraph::vertex_glue(&g, p, &block, q)?;
        g = glued.0;
        p = glued.1;
    }
    Ok((g, p))
}

/// Erdos-Renyi `G(n, p)` conditioned on connectivity, deterministic for a
/// given seed. `edge_prob` is a rational `(num, den)` with `0 < num <= den`.
/// After 64 disconnected draws, falls back to a random spanning tree plus
/// independent extra edges.
pub fn random_simple_connected(
    n: usize,
    edge_prob: (u64, u64),
    seed: u64,
) -> Multigraph {
    assert!(n >= 2, "need at least two vertices");
    let (num, den) = edge_prob;
    assert!(num > 0 && num <= den, "edge probability must be in (0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_range(0..den) < num {
                    edges.push((u, v, 1));
                }
            }
        }
        if let Ok(g) = Multigraph::new(n, &edges) {
            return g;
        }
    }
    // Spanning tree by random attachment, then the remaining pairs with
    // probability p as before.
    let mut edges = Vec::new();
    let mut in_tree = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v, 1));
        in_tree[u][v] = true;
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !in_tree[u][v] && rng.gen_range(0..den) < num {
                edges.push((u, v, 1));
            }
        }
    }
    Multigraph::new(n, &edges).expect("spanning tree keeps the graph connected")
}
