//! Exact arithmetic for Euler-Mahonian statistics on colored permutation
//! groups (wreath products Z_r wr S_n, hyperoctahedral groups B_n, and the
//! even-signed subgroups D_n), together with the polyhedral machinery —
//! half-open simplices, simplicial cones, fundamental parallelepipeds — that
//! realizes their descent/major-index generating functions as integer-point
//! transforms.
//!
//! Everything is exact: arbitrary-precision integer coefficients, exact
//! rationals where needed (Bernoulli polynomials, point location), and
//! truncated multivariate formal power series graded by the `z_0` (alias `t`)
//! degree. No floating point anywhere.
//!
//! The `identities` module holds a registry of generating-function identities
//! whose two sides are built independently (combinatorial statistics on one
//! side, geometric series expansion of closed products on the other) and
//! compared coefficient by coefficient up to a truncation order.

pub mod bijections;
pub mod colored_perm;
pub mod exec;
pub mod identities;
pub mod polyhedral;
pub mod series;
pub mod statistics;
