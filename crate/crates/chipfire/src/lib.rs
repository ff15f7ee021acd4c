//! Chip-firing on finite connected multigraphs.
//!
//! Divisors (integer chip configurations), linear equivalence through the
//! graph Laplacian, Dhar-style reduced divisors, Baker-Norine rank, and the
//! two Weierstrass sets of a pointed graph: the rank jump set and the set of
//! pole orders of functions with a unique pole, together with the numerical
//! monoid calculus (Minkowski sums, max-plus convolution) that governs how
//! those sets behave under gluing graphs at a vertex.
//!
//! The crate is `no_std` + `alloc`; everything is exact integer arithmetic.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod divisor;
pub mod error;
pub mod graph;
pub mod rank;
pub mod reduce;
pub mod setcalc;
pub mod weierstrass;

pub use divisor::{effective_divisors, Divisor, EffectiveDivisors, VertexFunction};
pub use error::{Error, Result};
pub use graph::{
    monoid_realization, random_simple_connected, semigroup_realization, staircase_realization,
    Multigraph, VertexId,
};
pub use rank::{certificate_avoiding, rank, rank_certificates, riemann_roch_residual};
pub use reduce::{equivalent, firable_set, is_reduced, linear_system, reduce};
pub use setcalc::{
    buchweitz_violation, max_plus_convolve, minkowski_sum, staircase_set, MonoidReport,
    NumericalMonoid,
};
pub use weierstrass::{
    functional_multiplicity, functional_weierstrass_set, functional_weierstrass_set_blocks,
    is_weierstrass_point, lambda_sequence, lambda_sequence_blocks, pole_witness,
    rank_weierstrass_set, CofiniteSet, LambdaSeq, SetReport,
};
