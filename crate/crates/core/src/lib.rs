//! Boundary divisor combinatorics for the moduli space of stable
//! genus-zero curves with `n` marked points.
//!
//! A boundary divisor is an unordered partition of the labels `1..=n`
//! into two sides of size at least 2. Relative to a cyclic ordering of
//! the labels, each side decomposes into alternating blocks and gaps;
//! the divisors whose block count is at least 2 (the non-adjacent ones)
//! form a basis of the divisor class group modulo Keel's relations, and
//! every consecutive divisor expands in that basis with `{-1, 0, +1}`
//! coefficients read off from segment parity.
//!
//! The crate keeps two independent routes to every hard claim:
//!
//! * segment-parity expansion vs. brute-force subset enumeration of the
//!   defining four-point relation ([`expansion`]);
//! * the dimension formula vs. the exact rank of the full relation
//!   matrix under fraction-free elimination ([`linalg`]).
//!
//! The `picard0n` binary exposes enumeration, decomposition, basis
//! listing, expansion, verification sweeps, and matrix export.

pub mod basis;
pub mod cli;
pub mod cyclic;
pub mod decompose;
pub mod divisor;
pub mod error;
pub mod expansion;
pub mod linalg;
pub mod relations;
pub mod subset;
pub mod verify;

pub use basis::{dimension, nonadjacent_basis, BasisCoordinates, NonAdjacentBasis};
pub use cyclic::CyclicOrder;
pub use decompose::{decompose, is_consecutive, polygon_signature, BlockDecomposition};
pub use divisor::{canonicalize, enumerate_divisors, num_divisors, BoundaryDivisor};
pub use error::{Error, Result};
pub use expansion::{coefficient, expand, expand_formal, oracle_expand, oracle_expand_side};
pub use linalg::{quotient_dimension_check, IntMatrix};
pub use relations::{
    keel_sums, relation_matrix, verify_consistency, FormalDivisorSum, KeelQuadruple,
    RelationMatrix,
};
pub use subset::MarkedSubset;

/// Hard cap on the number of marked points; subsets are `u32` masks and
/// enumerations walk `2^(n-1)` divisors.
pub const MAX_POINTS: usize = 25;

/// Cap for the subset-enumeration expansion, which walks `2^(n-4)`
/// subsets per divisor.
pub const ORACLE_MAX_POINTS: usize = 22;

/// Cap for assembling the dense-column relation matrix.
pub const RELATION_MATRIX_MAX_POINTS: usize = 12;

/// Cap for the exact elimination in the quotient dimension check.
pub const QUOTIENT_CHECK_MAX_POINTS: usize = 8;
