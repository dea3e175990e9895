//! Expansion of boundary divisors in a non-adjacent basis.
//!
//! Two independent routes compute the same coordinates:
//!
//! * [`expand`] — the closed form: a consecutive divisor `I` picks up a
//!   coefficient from each basis element `J` by locating `I` (or its
//!   complement) as a contiguous segment of `J`'s block/gap cycle; the
//!   sign is the parity of the segment's piece count (even -> +1,
//!   odd -> -1, no segment -> 0).
//! * [`oracle_expand`] — one step of the four-point relation anchored at
//!   the endpoints of `I`'s arc, expanded by brute-force subset
//!   enumeration over the `n - 4` unconstrained labels.
//!
//! The equivalence of the two is swept exhaustively in the tests; the
//! oracle stays deliberately naive so it can arbitrate.

use crate::basis::{BasisCoordinates, NonAdjacentBasis};
use crate::cyclic::CyclicOrder;
use crate::decompose::{check_same_points, decompose, piece_masks, run_count};
use crate::divisor::{canonicalize, BoundaryDivisor};
use crate::error::{Error, Result};
use crate::subset::{full_mask, MarkedSubset};
use crate::ORACLE_MAX_POINTS;

/// A cyclically contiguous run of pieces of a block/gap cycle
/// `(B_1, G_1, ..., B_N, G_N)`, addressed by start index and length.
///
/// Lengths run from 1 to `2N - 1`; the full cycle's union is all of the
/// labels, which no divisor side can be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    start: usize,
    len: usize,
}

impl Segment {
    /// Index of the first piece in the cycle.
    pub fn start(&self) -> usize {
        self.start
    }

    /// Number of pieces covered.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Expansion sign of a matching segment: `+1` for an even piece
    /// count, `-1` for odd.
    pub fn sign(&self) -> i64 {
        if self.len % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Finds the segment of `dec`'s piece cycle whose union is `target`, if any.
///
/// A contiguous piece union is a contiguous arc with endpoints on piece
/// boundaries, so at most one segment can match a given target.
pub fn find_segment(target: &MarkedSubset, dec: &crate::decompose::BlockDecomposition) -> Option<Segment> {
    let pieces: Vec<u32> = dec.pieces().iter().map(|p| p.mask()).collect();
    find_segment_in_pieces(target.mask(), &pieces)
}

fn find_segment_in_pieces(target: u32, pieces: &[u32]) -> Option<Segment> {
    let m = pieces.len();
    for start in 0..m {
        let mut union = 0u32;
        for len in 1..m {
            union |= pieces[(start + len - 1) % m];
            if union == target {
                return Some(Segment { start, len });
            }
            if union & !target != 0 {
                break;
            }
        }
    }
    None
}

/// Matches either side of `target` against the piece cycle and returns
/// the parity sign, or 0 with no match.
///
/// The two sides can only match complementary segments, whose lengths
/// `L` and `2N - L` share parity, so the answer does not depend on which
/// side is the canonical representative.
fn coefficient_from_pieces(rep_mask: u32, pieces: &[u32], full: u32) -> i64 {
    let co_mask = full & !rep_mask;
    let a = find_segment_in_pieces(rep_mask, pieces);
    let b = find_segment_in_pieces(co_mask, pieces);
    match (a, b) {
        (Some(sa), Some(sb)) => {
            debug_assert_eq!(sa.sign(), sb.sign(), "complementary segments disagree");
            sa.sign()
        }
        (Some(s), None) | (None, Some(s)) => {
            debug_assert!(false, "only one side matched: {s:?}");
            s.sign()
        }
        (None, None) => 0,
    }
}

/// Expansion coefficient of the basis element `j` in the expansion of the
/// consecutive divisor `i`, per the segment-parity rule.
pub fn coefficient(i: &BoundaryDivisor, j: &BoundaryDivisor, order: &CyclicOrder) -> Result<i64> {
    check_same_points(i.n(), j.n())?;
    check_same_points(i.n(), order.n())?;
    if run_count(i.rep(), order) != 1 {
        return Err(Error::ExpectedConsecutive {
            divisor: i.to_string(),
        });
    }
    if run_count(j.rep(), order) < 2 {
        return Err(Error::ExpectedNonAdjacent {
            divisor: j.to_string(),
        });
    }
    let dec = decompose(j, order)?;
    let pieces: Vec<u32> = dec.pieces().iter().map(|p| p.mask()).collect();
    Ok(coefficient_from_pieces(
        i.rep().mask(),
        &pieces,
        full_mask(order.n()),
    ))
}

/// Expands a divisor in the basis via segment parity.
///
/// Basis elements are their own expansion (a unit vector); consecutive
/// divisors collect a `{-1, 0, +1}` coefficient from every basis element.
pub fn expand<'b>(d: &BoundaryDivisor, basis: &'b NonAdjacentBasis) -> Result<BasisCoordinates<'b>> {
    check_same_points(d.n(), basis.n())?;
    if let Some(pos) = basis.position(d) {
        return Ok(BasisCoordinates::unit(basis, pos));
    }
    debug_assert_eq!(run_count(d.rep(), basis.order()), 1);
    let order = basis.order();
    let full = full_mask(order.n());
    let target = d.rep().mask();
    let coeffs: Vec<i64> = basis
        .elements()
        .iter()
        .map(|j| {
            let pieces = piece_masks(j.rep(), order);
            coefficient_from_pieces(target, &pieces, full)
        })
        .collect();
    Ok(BasisCoordinates::from_coeffs(basis, coeffs))
}

/// Expands a consecutive divisor by one step of the four-point relation,
/// enumerating all `2^(n-4)` contributing subsets.
///
/// With the arc of `I` spanning slots `a..=b`, the relation anchored at
/// the four labels around the arc's endpoints reads: subsets containing
/// `{before, last}` and avoiding `{first, after}` enter with `+1`;
/// subsets containing `{before, after}` and avoiding `{first, last}` —
/// the complement of `I` excepted — enter with `-1`. Every contributing
/// subset must be non-adjacent; anything else is reported as a loud
/// error rather than skipped.
pub fn oracle_expand<'b>(
    d: &BoundaryDivisor,
    basis: &'b NonAdjacentBasis,
) -> Result<BasisCoordinates<'b>> {
    oracle_expand_side(d.rep(), basis)
}

/// [`oracle_expand`] on an explicitly chosen side; both sides of a
/// consecutive divisor are arcs and must yield the same coordinates.
pub fn oracle_expand_side<'b>(
    side: &MarkedSubset,
    basis: &'b NonAdjacentBasis,
) -> Result<BasisCoordinates<'b>> {
    let order = basis.order();
    let n = order.n();
    check_same_points(side.n(), n)?;
    if n > ORACLE_MAX_POINTS {
        return Err(Error::CapExceeded {
            what: "subset-enumeration expansion",
            n,
            cap: ORACLE_MAX_POINTS,
        });
    }
    let size = side.len();
    if size < 2 || size > n - 2 {
        return Err(Error::SubsetSize { size, n });
    }
    if run_count(side, order) != 1 {
        return Err(Error::ExpectedConsecutive {
            divisor: format!("d{side}"),
        });
    }

    // arc endpoints in slot space
    let start = (0..n)
        .find(|&s| {
            side.contains(order.label_at(s)) && !side.contains(order.label_at((s + n - 1) % n))
        })
        .expect("consecutive side has a run start");
    let end = (start + size - 1) % n;
    let before = order.label_at((start + n - 1) % n);
    let first = order.label_at(start);
    let last = order.label_at(end);
    let after = order.label_at((end + 1) % n);
    debug_assert!([before, first, last, after].iter().all(|l| *l >= 1));

    let anchor_mask =
        (1u32 << (before - 1)) | (1u32 << (first - 1)) | (1u32 << (last - 1)) | (1u32 << (after - 1));
    debug_assert_eq!(anchor_mask.count_ones(), 4);
    let free: Vec<usize> = (1..=n)
        .filter(|l| anchor_mask >> (l - 1) & 1 == 0)
        .collect();
    let comp_mask = full_mask(n) & !side.mask();

    let mut coeffs = vec![0i64; basis.len()];
    let mut add_term = |mask: u32, sign: i64| -> Result<()> {
        let subset = MarkedSubset::new(n, mask)?;
        let size = subset.len();
        if size < 2 || size > n - 2 {
            return Err(Error::OracleTermSize {
                subset: subset.to_string(),
            });
        }
        let term = canonicalize(&subset)?;
        match basis.position(&term) {
            Some(pos) => {
                coeffs[pos] += sign;
                Ok(())
            }
            None => Err(Error::OracleTermAdjacent {
                subset: subset.to_string(),
            }),
        }
    };

    let lhs_base = (1u32 << (before - 1)) | (1u32 << (last - 1));
    let rhs_base = (1u32 << (before - 1)) | (1u32 << (after - 1));
    for bits in 0..(1u32 << free.len()) {
        let mut extra = 0u32;
        for (i, l) in free.iter().enumerate() {
            if bits >> i & 1 == 1 {
                extra |= 1 << (l - 1);
            }
        }
        add_term(lhs_base | extra, 1)?;
        let rhs = rhs_base | extra;
        if rhs != comp_mask {
            add_term(rhs, -1)?;
        }
    }
    Ok(BasisCoordinates::from_coeffs(basis, coeffs))
}

/// Integer-linear combination of expansions; entries may leave `{-1,0,+1}`.
pub fn expand_formal<'b>(
    terms: &[(i64, BoundaryDivisor)],
    basis: &'b NonAdjacentBasis,
) -> Result<BasisCoordinates<'b>> {
    let mut acc = BasisCoordinates::zero(basis);
    for (scale, d) in terms {
        let e = expand(d, basis)?;
        acc.add_scaled(*scale, &e);
    }
    Ok(acc)
}
