//! Seeded verification harness: each theorem runs a battery of named
//! families first, then randomized trials. A failure records the seed that
//! reproduces it.

use chipfire::{
    functional_multiplicity, functional_weierstrass_set, is_reduced, lambda_sequence,
    max_plus_convolve, minkowski_sum, random_simple_connected, rank_weierstrass_set, reduce,
    riemann_roch_residual, staircase_realization, staircase_set, Divisor, Multigraph,
    VertexFunction, VertexId,
};
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::io::GraphJson;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Theorem {
    #[value(name = "riemann_roch")]
    RiemannRoch,
    #[value(name = "gap_count")]
    GapCount,
    #[value(name = "inclusion_A")]
    InclusionA,
    #[value(name = "minkowski_B")]
    MinkowskiB,
    #[value(name = "convolution_C")]
    ConvolutionC,
    #[value(name = "staircase_C")]
    StaircaseC,
    #[value(name = "superadditivity")]
    Superadditivity,
    #[value(name = "multiplicity")]
    Multiplicity,
    #[value(name = "reduced_unique")]
    ReducedUnique,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::RiemannRoch => "riemann_roch",
            Theorem::GapCount => "gap_count",
            Theorem::InclusionA => "inclusion_A",
            Theorem::MinkowskiB => "minkowski_B",
            Theorem::ConvolutionC => "convolution_C",
            Theorem::StaircaseC => "staircase_C",
            Theorem::Superadditivity => "superadditivity",
            Theorem::Multiplicity => "multiplicity",
            Theorem::ReducedUnique => "reduced_unique",
        }
    }
}

#[derive(Serialize)]
pub struct Failure {
    pub seed: u64,
    pub graph: GraphJson,
    pub detail: String,
}

#[derive(Serialize)]
pub struct Report {
    pub theorem: &'static str,
    pub trials: u64,
    pub failures: Vec<Failure>,
}

struct Ctx {
    max_vertices: usize,
    failures: Vec<Failure>,
}

impl Ctx {
    fn fail(&mut self, seed: u64, g: &Multigraph, p: Option<VertexId>, detail: String) {
        self.failures.push(Failure { seed, graph: GraphJson::from_graph(g, p), detail });
    }
}

fn random_connected(rng: &mut ChaCha8Rng, max_n: usize, allow_multi: bool) -> Multigraph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let skeleton = random_simple_connected(n, (rng.gen_range(2..=10), 10), rng.gen());
        let g = if allow_multi && rng.gen_bool(0.5) {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if skeleton.multiplicity(u, v) > 0 {
                        edges.push((u, v, rng.gen_range(1..=3)));
                    }
                }
            }
            Multigraph::new(n, &edges).unwrap()
        } else {
            skeleton
        };
        if g.genus() <= 8 {
            return g;
        }
    }
}

fn random_divisor(rng: &mut ChaCha8Rng, n: usize, target_degree: i64) -> Divisor {
    let mut coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    let v = rng.gen_range(0..n);
    let current: i64 = coeffs.iter().sum();
    coeffs[v] += target_degree - current;
    Divisor::new(coeffs)
}

fn check_riemann_roch(ctx: &mut Ctx, seed: u64, g: &Multigraph, d: &Divisor) {
    let residual = riemann_roch_residual(g, d);
    if residual != 0 {
        ctx.fail(seed, g, None, format!("residual {residual} for divisor {d}"));
    }
}

fn riemann_roch(ctx: &mut Ctx, trials: u64, master: &mut ChaCha8Rng) {
    let k4 = Multigraph::complete(4);
    check_riemann_roch(ctx, 0, &k4, &Divisor::single(4, 0, 3));
    check_riemann_roch(ctx, 0, &k4, &k4.canonical_divisor());
    let banana = Multigraph::banana(3);
    check_riemann_roch(ctx, 0, &banana, &Divisor::new(vec![-1, 2]));
    let (stair, _) = staircase_realization(&[3, 2, 2]).unwrap();
    check_riemann_roch(ctx, 0, &stair, &stair.canonical_divisor());
    for _ in 0..trials {
        let seed = master.gen();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, ctx.max_vertices, true);
        let genus = g.genus() as i64;
        let deg = rng.gen_range(-3..=2 * genus + 2);
        let d = random_divisor(&mut rng, g.vertex_count(), deg);
        check_riemann_roch(ctx, seed, &g, &d);
    }
}

fn check_gap_count(ctx: &mut Ctx, seed: u64, g: &Multigraph, p: VertexId) {
    let genus = g.genus();
    match rank_weierstrass_set(g, p) {
        Ok(set) => {
            let gaps = set.gaps();
            if gaps.len() as u64 != genus {
                ctx.fail(seed, g, Some(p), format!("{} gaps, genus {genus}", gaps.len()));
            } else if !gaps.iter().all(|&n| n >= 1 && n + 1 <= 2 * genus) {
                ctx.fail(seed, g, Some(p), format!("gaps {gaps:?} escape [1, 2g-1]"));
            }
        }
        Err(e) => ctx.fail(seed, g, Some(p), e.to_string()),
    }
}

fn gap_count(ctx: &mut Ctx, trials: u64, master: &mut ChaCha8Rng) {
    for k in 2..=5 {
        check_gap_count(ctx, 0, &Multigraph::complete(k), 0);
    }
    for n in 2..=5 {
        check_gap_count(ctx, 0, &Multigraph::banana(n), 0);
    }
    let (g, p) = Multigraph::complete_bipartite(3, 3);
    check_gap_count(ctx, 0, &g, p);
    let (stair, sp) = staircase_realization(&[3, 2, 2]).unwrap();
    check_gap_count(ctx, 0, &stair, sp);
    for _ in 0..trials {
        let seed = master.gen();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, ctx.max_vertices, true);
        let p = rng.gen_range(0..g.vertex_count());
        check_gap_count(ctx, seed, &g, p);
    }
}

fn check_inclusion(ctx: &mut Ctx, seed: u64, g: &Multigraph, p: VertexId) {
    let hr = match rank_weierstrass_set(g, p) {
        Ok(s) => s,
        Err(e) => return ctx.fail(seed, g, Some(p), e.to_string()),
    };
    let hf = match functional_weierstrass_set(g, p, None) {
        Ok(r) => r,
        Err(e) => return ctx.fail(seed, g, Some(p), e.to_string()),
    };
    for n in 0..=hf.bound {
        if hr.contains(n) && !hf.contains(n) {
            return ctx.fail(seed, g, Some(p), format!("{n} jumps without a function"));
        }
    }
}

fn inclusion_a(ctx: &mut Ctx, trials: u64, master: &mut ChaCha8Rng) {
    check_inclusion(ctx, 0, &Multigraph::complete(4), 0);
    let (kb, p) = Multigraph::complete_bipartite(2, 3);
    check_inclusion(ctx, 0, &kb, p);
    let (stair, sp) = staircase_realization(&[2, 2]).unwrap();
    check_inclusion(ctx, 0, &stair, sp);
    for _ in 0..trials {
        let seed = master.gen();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, ctx.max_vertices, false);
        let p = rng.gen_range(0..g.vertex_count());
        check_inclusion(ctx, seed, &g, p);
    }
}

fn random_block(rng: &mut ChaCha8Rng, max_n: usize) -> (Multigraph, VertexId) {
    loop {
        let n = rng.gen_range(2..=max_n.min(5));
        let g = random_simple_connected(n, (rng.gen_range(3..=10), 10), rng.gen());
        if g.genus() <= 3 {
            let p = rng.gen_range(0..n);
            return (g, p);
        }
    }
}

fn check_minkowski(
    ctx: &mut Ctx,
    seed: u64,
    g1: &Multigraph,
    p1: VertexId,
    g2: &Multigraph,
    p2: VertexId,
) {
    let (glued, p) = Multigraph::vertex_glue(g1, p1, g2, p2).unwrap();
    let whole = functional_weierstrass_set(&glued, p, None).unwrap();
    let a = functional_weierstrass_set(g1, p1, Some(whole.bound)).unwrap();
    let b = functional_weierstrass_set(g2, p2, Some(whole.bound)).unwrap();
    let summed = minkowski_sum(a.members_bitmap(), b.members_bitmap()).unwrap();
    if whole.members_bitmap() != summed.as_slice() {
        ctx.fail(seed, &glued, Some(p), "pole sets do not Minkowski-add".into());
    }
}

fn minkowski_b(ctx: &mut Ctx, trials: u64, master: &mut ChaCha8Rng) {
    let (k23, q23) = Multigraph::complete_bipartite(2, 3);
    let (k22, q22) = Multigraph::complete_bipartite(2, 2);
    check_minkowski(ctx, 0, &k23, q23, &k22, q22);
    check_minkowski(ctx, 0, &Multigraph::complete(4), 0, &Multigraph::complete(2), 0);
    for _ in 0..trials {
        let seed = master.gen();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g1, p1) = random_block(&mut rng, ctx.max_vertices);
        let (g2, p2) = random_block(&mut rng, ctx.max_vertices);
        check_minkowski(ctx, seed, &g1, p1, &g2, p2);
    }
}

fn check_convolution(
    ctx: &mut Ctx,
    seed: u64,
    g1: &Multigraph,
    p1: VertexId,
    g2: &Multigraph,
    p2: VertexId,
) {
    let (glued, p) = Multigraph::vertex_glue(g1, p1, g2, p2).unwrap();
    let whole = lambda_sequence(&glued, p, 4).unwrap();
    let a = lambda_sequence(g1, p1, 4).unwrap();
    let b = lambda_sequence(g2, p2, 4).unwrap();
    if whole != max_plus_convolve(&a, &b) {
        ctx.fail(seed, &glued, Some(p), "pole sequences do not convolve".into());
    }
}

fn convolution_c(ctx: &mut Ctx, trials: u64, master: &mut ChaCha8Rng) {
    let (k23, q23) = Multigraph::complete_bipartite(2, 3);
    let (k22, q22) = Multigraph::complete_bipartite(2, 2);
    check_convolution(ctx, 0, &k23, q23, &k22, q22);
    check_convolution(ctx, 0, &Multigraph::complete(4), 0, &Multigraph::complete(3), 1);
    for _ in 0..trials {
        let seed = master.gen();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g1, p1) = random_block(&mut rng, ctx.max_vertices);
        let (g2, p2) = random_block(&mut rng, ctx.max_vertices);
        check_convolution(ctx, seed, &g1, p1, &g2, p2);
    }
}

fn check_staircase(ctx: &mut Ctx, seed: u64, entries: &[u64]) {
    let (g, p) = staircase_realization(entries).unwrap();
    let got = rank_weierstrass_set(&g, p).unwrap();
    let want = staircase_set(entries).unwrap();
    if got != want {
        ctx.fail(
            seed,
            &g,
            Some(p),
            format!("sequence {entries:?}: gaps {:?} want {:?}", got.gaps(), want.gaps()),
        );
    }
}

fn staircase_c(ctx: &mut Ctx, trials: u64, master: &mut ChaCha8Rng) {
    for entries in [&[3, 2, 2][..], &[1], &[2, 2], &[5]] {
        check_staircase(ctx, 0, entries);
    }
    for _ in 0..trials {
        let seed = master.gen();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries: Vec<u64> = loop {
            let len = rng.gen_range(1..=4);
            let mut e: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=5)).collect();
            e.sort_unstable_by(|x, y| y.cmp(x));
            if e.iter().sum::<u64>() <= 8 {
                break e;
            }
        };
        check_staircase(ctx, seed, &entries);
    }
}

fn check_superadditive(ctx: &mut Ctx, seed: u64, g: &Multigraph, p: VertexId, n: u64, k: u64) {
    let hr = match rank_weierstrass_set(g, p) {
        Ok(s) => s,
        Err(e) => return ctx.fail(seed, g, Some(p), e.to_string()),
    };
    let count = |hi: u64| (1..=hi).filter(|&x| hr.contains(x)).count() as u64;
    if count(n * k) < k * count(n) {
        ctx.fail(seed, g, Some(p), format!("|H ∩ [1,{}]| < {k}·|H ∩ [1,{n}]|", n * k));
    }
}

fn superadditivity(ctx: &mut Ctx, trials: u64, master: &mut ChaCha8Rng) {
    let (stair, sp) = staircase_realization(&[3, 2, 2]).unwrap();
    for n in 1..=6 {
        for k in 1..=3 {
            check_superadditive(ctx, 0, &stair, sp, n, k);
        }
    }
    for _ in 0..trials {
        let seed = master.gen();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, ctx.max_vertices, true);
        let p = rng.gen_range(0..g.vertex_count());
        let n = rng.gen_range(1..=6);
        let k = rng.gen_range(1..=3);
        check_superadditive(ctx, seed, &g, p, n, k);
    }
}

fn check_multiplicity(ctx: &mut Ctx, seed: u64, g: &Multigraph, p: VertexId) {
    let by_cut = match functional_multiplicity(g, p) {
        Ok(m) => m,
        Err(e) => return ctx.fail(seed, g, Some(p), e.to_string()),
    };
    let hf = functional_weierstrass_set(g, p, None).unwrap();
    let least = hf.member_list().into_iter().find(|&n| n > 0);
    if least != Some(by_cut) {
        ctx.fail(seed, g, Some(p), format!("cut formula {by_cut}, set minimum {least:?}"));
    }
}

fn multiplicity(ctx: &mut Ctx, trials: u64, master: &mut ChaCha8Rng) {
    let (stair, sp) = staircase_realization(&[3, 2, 2]).unwrap();
    check_multiplicity(ctx, 0, &stair, sp);
    check_multiplicity(ctx, 0, &Multigraph::complete(4), 0);
    let (kb, p) = Multigraph::complete_bipartite(2, 3);
    check_multiplicity(ctx, 0, &kb, p);
    for _ in 0..trials {
        let seed = master.gen();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, ctx.max_vertices, false);
        let p = rng.gen_range(0..g.vertex_count());
        check_multiplicity(ctx, seed, &g, p);
    }
}

fn check_reduced_unique(
    ctx: &mut Ctx,
    seed: u64,
    g: &Multigraph,
    p: VertexId,
    d: &Divisor,
    shift: &VertexFunction,
) {
    let (r, f) = reduce(g, p, d);
    if &(d + &g.laplacian(&f).unwrap()) != &r {
        return ctx.fail(seed, g, Some(p), "witness is not exact".into());
    }
    if !is_reduced(g, p, &r) {
        return ctx.fail(seed, g, Some(p), format!("{r} is not reduced"));
    }
    if reduce(g, p, &r).0 != r {
        return ctx.fail(seed, g, Some(p), "reduce is not idempotent".into());
    }
    let moved = d + &g.laplacian(shift).unwrap();
    if reduce(g, p, &moved).0 != r {
        ctx.fail(seed, g, Some(p), "equivalent divisors reduce differently".into());
    }
}

fn reduced_unique(ctx: &mut Ctx, trials: u64, master: &mut ChaCha8Rng) {
    let path = Multigraph::new(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
    let d = Divisor::new(vec![0, 2, 0]);
    check_reduced_unique(ctx, 0, &path, 0, &d, &VertexFunction::new(vec![0, -1, 1]));
    if reduce(&path, 0, &d).0 != Divisor::new(vec![2, 0, 0]) {
        ctx.fail(0, &path, Some(0), "path example does not reduce to (2,0,0)".into());
    }
    for _ in 0..trials {
        let seed = master.gen();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, ctx.max_vertices, true);
        let n = g.vertex_count();
        let p = rng.gen_range(0..n);
        let d = Divisor::new((0..n).map(|_| rng.gen_range(-4..=4)).collect());
        let shift = VertexFunction::new((0..n).map(|_| rng.gen_range(-2..=2)).collect());
        check_reduced_unique(ctx, seed, &g, p, &d, &shift);
    }
}

pub fn run(theorem: Theorem, trials: u64, seed: u64, max_vertices: usize) -> Report {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let mut ctx = Ctx { max_vertices, failures: Vec::new() };
    let go = match theorem {
        Theorem::RiemannRoch => riemann_roch,
        Theorem::GapCount => gap_count,
        Theorem::InclusionA => inclusion_a,
        Theorem::MinkowskiB => minkowski_b,
        Theorem::ConvolutionC => convolution_c,
        Theorem::StaircaseC => staircase_c,
        Theorem::Superadditivity => superadditivity,
        Theorem::Multiplicity => multiplicity,
        Theorem::ReducedUnique => reduced_unique,
    };
    go(&mut ctx, trials, &mut master);
    ctx.failures.sort_by_key(|f| f.seed);
    Report { theorem: theorem.name(), trials, failures: ctx.failures }
}
