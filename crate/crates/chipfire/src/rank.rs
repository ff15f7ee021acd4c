//! Baker-Norine rank and its certificates.

use alloc::vec::Vec;

use crate::divisor::{effective_divisors, Divisor};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};
use crate::reduce::reduce;

/// Does `|d|` contain an effective divisor? Decided by reducing at `base`:
/// the reduced form is effective off the basepoint, so the system is
/// nonempty exactly when the basepoint coefficient stays nonnegative.
pub(crate) fn system_nonempty(g: &Multigraph, d: &Divisor, base: VertexId) -> bool {
    if d.degree() < 0 {
        return false;
    }
    reduce(g, base, d).0[base] >= 0
}

fn empty_witness_base(e: &Divisor) -> VertexId {
    e.support().next().unwrap_or(0)
}

/// Rank search starting from a proven lower bound `floor` (use -1 when
/// nothing is known). Shared by `rank` and the incremental sweeps over
/// `n * P` where monotonicity gives the previous rank as a floor.
pub(crate) fn rank_with_floor(g: &Multigraph, d: &Divisor, floor: i64) -> i64 {
    let deg = d.degree();
    if deg < 0 {
        return -1;
    }
    let genus = g.genus() as i64;
    if deg > 2 * genus - 2 {
        return deg - genus;
    }
    let mut k = floor + 1;
    loop {
        for e in effective_divisors(g, k as u64, None) {
            if !system_nonempty(g, &(d - &e), empty_witness_base(&e)) {
                return k - 1;
            }
        }
        k += 1;
        debug_assert!(k <= deg + 1, "rank search must stop by degree + 1");
    }
}

/// Baker-Norine rank: -1 when `|d|` is empty, otherwise the largest `k`
/// such that `|d - e|` is nonempty for every effective `e` of degree `k`.
/// Degrees above `2g - 2` short-circuit through Riemann-Roch.
pub fn rank(g: &Multigraph, d: &Divisor) -> i64 {
    assert_eq!(d.len(), g.vertex_count(), "divisor size must match the graph");
    rank_with_floor(g, d, -1)
}

/// All effective divisors `e` of degree `rank(d) + 1` with `|d - e|` empty —
/// the witnesses that pin the rank down. Materializing the set is only
/// supported for `deg(d) <= 2g - 1` unless `force` is set.
pub fn rank_certificates(g: &Multigraph, d: &Divisor, force: bool) -> Result<Vec<Divisor>> {
    let r = rank(g, d);
    if r < 0 {
        return Err(Error::RankNegative);
    }
    let limit = 2 * g.genus() as i64 - 1;
    if !force && d.degree() > limit {
        return Err(Error::WindowTooLarge { degree: d.degree(), limit });
    }
    Ok(effective_divisors(g, (r + 1) as u64, None)
        .filter(|e| !system_nonempty(g, &(d - e), empty_witness_base(e)))
        .collect())
}

/// On a simple graph, a rank certificate that avoids `p` entirely: the first
/// effective `e` of degree `rank(d) + 1` with `e(p) = 0` and `|d - e|` empty.
/// Such a certificate always exists on simple graphs.
pub fn certificate_avoiding(g: &Multigraph, d: &Divisor, p: VertexId) -> Result<Divisor> {
    g.check_vertex(p)?;
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let r = rank(g, d);
    if r < 0 {
        return Err(Error::RankNegative);
    }
    effective_divisors(g, (r + 1) as u64, Some(p))
        .find(|e| !system_nonempty(g, &(d - e), empty_witness_base(e)))
        .ok_or(Error::InternalInvariant(
            "a certificate avoiding the vertex must exist on a simple graph",
        ))
}

/// `r(d) - r(K - d) - deg(d) - 1 + g`, which Riemann-Roch says is zero.
pub fn riemann_roch_residual(g: &Multigraph, d: &Divisor) -> i64 {
    let k = g.canonical_divisor();
    rank(g, d) - rank(g, &(&k - d)) - (d.degree() + 1 - g.genus() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn ranks_on_k4() {
        let g = Multigraph::complete(4);
        assert_eq!(rank(&g, &Divisor::single(4, 0, 2)), 0);
        assert_eq!(rank(&g, &Divisor::single(4, 0, 3)), 1);
        assert_eq!(rank(&g, &Divisor::single(4, 0, 4)), 2);
        assert_eq!(rank(&g, &Divisor::new(vec![-1, 0, 0, 0])), -1);
    }

    #[test]
    fn rank_riemann_roch_regime() {
        // deg > 2g - 2 forces r = deg - g.
        let g = Multigraph::complete(4);
        assert_eq!(rank(&g, &Divisor::single(4, 1, 9)), 6);
        let tree = Multigraph::new(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(rank(&tree, &Divisor::new(vec![1, 1, 0])), 2);
    }

    #[test]
    fn rank_zero_divisor() {
        let g = Multigraph::complete(3);
        assert_eq!(rank(&g, &Divisor::zero(3)), 0);
    }

    #[test]
    fn certificates_on_triangle() {
        // Proof set of D = P on K_3 is {Q, R}.
        let g = Multigraph::complete(3);
        let d = Divisor::single(3, 0, 1);
        let certs = rank_certificates(&g, &d, false).unwrap();
        assert_eq!(
            certs,
            vec![Divisor::new(vec![0, 1, 0]), Divisor::new(vec![0, 0, 1])]
        );
        assert_eq!(
            rank_certificates(&g, &Divisor::new(vec![-1, 0, 0]), false),
            Err(Error::RankNegative)
        );
    }

    #[test]
    fn certificates_window_guard() {
        let g = Multigraph::complete(3);
        // g = 1, so degree 2 is past the 2g - 1 = 1 window.
        let d = Divisor::single(3, 0, 2);
        assert_eq!(
            rank_certificates(&g, &d, false),
            Err(Error::WindowTooLarge { degree: 2, limit: 1 })
        );
        let forced = rank_certificates(&g, &d, true).unwrap();
        assert!(!forced.is_empty());
        for e in &forced {
            assert_eq!(e.degree(), rank(&g, &d) + 1);
        }
    }

    #[test]
    fn avoiding_certificate_on_k4() {
        let g = Multigraph::complete(4);
        let d = Divisor::single(4, 0, 3);
        let e = certificate_avoiding(&g, &d, 0).unwrap();
        assert_eq!(e[0], 0);
        assert_eq!(e.degree(), 2);
        assert!(!system_nonempty(&g, &(&d - &e), empty_witness_base(&e)));
        assert_eq!(
            certificate_avoiding(&Multigraph::banana(2), &Divisor::zero(2), 0),
            Err(Error::NotSimple)
        );
    }

    #[test]
    fn riemann_roch_spot_checks() {
        let g = Multigraph::complete(4);
        // K - 4P is principal, so the residual vanishes with r(4P) = 2.
        assert_eq!(riemann_roch_residual(&g, &Divisor::single(4, 0, 4)), 0);
        for d in [
            Divisor::new(vec![1, -1, 2, 0]),
            Divisor::new(vec![0, 0, 0, 0]),
            Divisor::new(vec![3, 1, 0, 2]),
        ] {
            assert_eq!(riemann_roch_residual(&g, &d), 0);
        }
    }
}
