//! Property-based invariants on small random instances.

use chipfire::{
    effective_divisors, equivalent, functional_weierstrass_set, is_reduced, rank_weierstrass_set,
    reduce, CofiniteSet, Divisor, Multigraph, VertexFunction,
};
use proptest::prelude::*;

/// Connected multigraph on up to `max_n` vertices: a path skeleton plus
/// random extra multiplicities over all vertex pairs.
fn graph_strategy(max_n: usize, max_extra: u64) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(0..=max_extra, pairs.len()).prop_map(move |mults| {
            let mut edges: Vec<(usize, usize, u64)> =
                (1..n).map(|v| (v - 1, v, 1)).collect();
            for (&(u, v), m) in pairs.iter().zip(mults) {
                if m > 0 {
                    edges.push((u, v, m));
                }
            }
            Multigraph::new(n, &edges).unwrap()
        })
    })
}

/// Simple connected graph: path skeleton plus optional extra edges, capped
/// at multiplicity 1.
fn simple_graph_strategy(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 2..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |keep| {
            let mut edges: Vec<(usize, usize, u64)> =
                (1..n).map(|v| (v - 1, v, 1)).collect();
            for (&(u, v), k) in pairs.iter().zip(keep) {
                if k {
                    edges.push((u, v, 1));
                }
            }
            Multigraph::new(n, &edges).unwrap()
        })
    })
}

fn pointed_with_divisor(
    max_n: usize,
    max_extra: u64,
    c: i64,
) -> impl Strategy<Value = (Multigraph, usize, Divisor)> {
    graph_strategy(max_n, max_extra).prop_flat_map(move |g| {
        let n = g.vertex_count();
        (Just(g), 0..n, proptest::collection::vec(-c..=c, n))
            .prop_map(|(g, p, coeffs)| (g, p, Divisor::new(coeffs)))
    })
}

/// Exhaustive box search for a function with `Lf = diff`, basepoint pinned.
fn box_witness_exists(g: &Multigraph, diff: &Divisor, radius: i64) -> bool {
    let n = g.vertex_count();
    let mut values = vec![-radius; n];
    values[0] = 0;
    loop {
        let f = VertexFunction::new(values.clone());
        if &g.laplacian(&f).unwrap() == diff {
            return true;
        }
        let mut i = 1;
        while i < n && values[i] == radius {
            values[i] = -radius;
            i += 1;
        }
        if i >= n {
            return false;
        }
        values[i] += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduce_lands_on_the_reduced_class_representative(
        (g, p, d) in pointed_with_divisor(5, 2, 4),
    ) {
        let (r, f) = reduce(&g, p, &d);
        prop_assert_eq!(&r, &(&d + &g.laplacian(&f).unwrap()));
        prop_assert!(is_reduced(&g, p, &r));
        prop_assert_eq!(f.value(p), 0);
        // Idempotent, and invariant under adding any principal divisor.
        prop_assert_eq!(&reduce(&g, p, &r).0, &r);
    }

    #[test]
    fn reduce_is_class_invariant(
        ((g, p, d), shift) in pointed_with_divisor(4, 2, 3)
            .prop_flat_map(|(g, p, d)| {
                let n = g.vertex_count();
                (Just((g, p, d)), proptest::collection::vec(-2i64..=2, n))
            }),
    ) {
        let moved = &d + &g.laplacian(&VertexFunction::new(shift)).unwrap();
        prop_assert_eq!(reduce(&g, p, &moved).0, reduce(&g, p, &d).0);
    }

    #[test]
    fn equivalence_agrees_with_box_search(
        (g, _, d1) in pointed_with_divisor(4, 1, 2),
        coeffs2 in proptest::collection::vec(-2i64..=2, 4),
    ) {
        let n = g.vertex_count();
        let d2 = Divisor::new(coeffs2[..n].to_vec());
        match equivalent(&g, &d1, &d2) {
            Some(f) => {
                prop_assert_eq!(&g.laplacian(&f).unwrap(), &(&d1 - &d2));
            }
            None => {
                let radius = d1.coeffs().iter().map(|c| c.abs()).sum::<i64>()
                    + d2.coeffs().iter().map(|c| c.abs()).sum::<i64>()
                    + n as i64;
                prop_assert!(!box_witness_exists(&g, &(&d1 - &d2), radius));
            }
        }
    }

    #[test]
    fn effective_enumeration_is_complete_and_ordered(
        n in 1usize..=4,
        d in 0u64..=6,
    ) {
        let g = Multigraph::complete(n); // enumeration only reads vertex count
        let all: Vec<Divisor> = effective_divisors(&g, d, None).collect();
        let k = n as u64;
        let expected: u64 = {
            // C(d + k - 1, k - 1)
            let mut c = 1u64;
            for i in 0..k - 1 {
                c = c * (d + i + 1) / (i + 1);
            }
            c
        };
        prop_assert_eq!(all.len() as u64, expected);
        for w in all.windows(2) {
            prop_assert!(w[0].coeffs() > w[1].coeffs(), "descending order");
        }
        for e in &all {
            prop_assert!(e.is_effective());
            prop_assert_eq!(e.degree(), d as i64);
        }
        if n >= 2 {
            prop_assert!(effective_divisors(&g, d, Some(0)).all(|e| e[0] == 0));
        }
    }

    #[test]
    fn gap_law_holds_on_multigraphs((g, p, _) in pointed_with_divisor(4, 2, 0)) {
        let genus = g.genus();
        let set = rank_weierstrass_set(&g, p).unwrap();
        prop_assert_eq!(set.gaps().len() as u64, genus);
        prop_assert!(set.gaps().iter().all(|&n| n >= 1 && n + 1 <= 2 * genus));
    }

    #[test]
    fn jump_set_within_pole_set_on_simple_graphs(g in simple_graph_strategy(4)) {
        for p in 0..g.vertex_count() {
            let hr = rank_weierstrass_set(&g, p).unwrap();
            let hf = functional_weierstrass_set(&g, p, None).unwrap();
            prop_assert!(hf.certified_complete);
            for n in 0..=hf.bound {
                if hr.contains(n) {
                    prop_assert!(hf.contains(n), "p={}, n={}", p, n);
                }
            }
            // Pole orders form a monoid: closed under addition in-window.
            let members = hf.member_list();
            for &a in &members {
                for &b in &members {
                    if a + b <= hf.bound {
                        prop_assert!(hf.contains(a + b), "p={}, {}+{}", p, a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn jump_counting_is_superadditive(
        (g, p, _) in pointed_with_divisor(4, 2, 0),
        n in 1u64..=6,
        k in 1u64..=3,
    ) {
        let hr = rank_weierstrass_set(&g, p).unwrap();
        let count = |hi: u64| (1..=hi).filter(|&x| hr.contains(x)).count() as u64;
        prop_assert!(count(n * k) >= k * count(n));
    }

    #[test]
    fn reduced_divisor_starves_some_neighbor(
        (g, p, d) in pointed_with_divisor(5, 0, 3),
    ) {
        // On a simple graph a reduced divisor leaves some neighbor of the
        // basepoint at exactly zero (else the full complement could fire).
        if g.is_simple() {
            let r = reduce(&g, p, &d).0;
            prop_assert!(g.neighbors(p).any(|q| r[q] == 0));
        }
    }

    #[test]
    fn gap_list_and_pole_sequence_are_inverse(
        gaps in proptest::collection::btree_set(1u64..=30, 0..6),
    ) {
        let set = CofiniteSet::from_gaps(gaps.into_iter().collect());
        let lambda = set.to_lambda(set.conductor() as usize);
        prop_assert_eq!(lambda.to_cofinite(), set);
    }
}
