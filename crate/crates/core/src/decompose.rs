//! Block/gap decompositions of a divisor with respect to a cyclic order.
//!
//! A side `A` of a boundary divisor splits the oriented `n`-gon into
//! maximal runs: blocks `B_1..B_k` (labels in `A`) alternating with gaps
//! `G_1..G_k` (labels outside `A`). The pair count `k` is the divisor's
//! polygon size for that order: `k = 1` means `A` is a consecutive arc
//! (the two-pointed circle), `k >= 2` means it is non-adjacent and hence
//! a basis element.

use std::fmt;

use crate::cyclic::CyclicOrder;
use crate::divisor::BoundaryDivisor;
use crate::error::{Error, Result};
use crate::subset::MarkedSubset;

/// The alternating sequence `(B_1, G_1, ..., B_k, G_k)` of blocks and
/// gaps of one side of a divisor.
///
/// `B_1` is the block containing the side's earliest label in the order's
/// canonical arrangement; runs follow the order's orientation, and each
/// run lists its labels in slot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    order: CyclicOrder,
    blocks: Vec<Vec<usize>>,
    gaps: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    /// Decomposes an arbitrary nonempty proper subset of the labels.
    ///
    /// [`decompose`] is the divisor-level entry point; this one also
    /// serves the complement side directly.
    pub fn of_subset(side: &MarkedSubset, order: &CyclicOrder) -> Result<Self> {
        check_same_points(side.n(), order.n())?;
        let n = order.n();
        if side.is_empty() || side.len() == n {
            return Err(Error::SubsetSize {
                size: side.len(),
                n,
            });
        }

        let in_side: Vec<bool> = (0..n).map(|s| side.contains(order.label_at(s))).collect();

        // B_1 holds the side's earliest label in the canonical arrangement;
        // its run may start earlier (wrapping past slot 0).
        let anchor = in_side.iter().position(|&b| b).expect("nonempty side");
        let mut start = anchor;
        while in_side[(start + n - 1) % n] {
            start = (start + n - 1) % n;
        }

        let mut blocks = Vec::new();
        let mut gaps = Vec::new();
        let mut slot = start;
        let mut consumed = 0;
        while consumed < n {
            let is_block = in_side[slot];
            let mut run = Vec::new();
            while consumed < n && in_side[slot] == is_block {
                run.push(order.label_at(slot));
                slot = (slot + 1) % n;
                consumed += 1;
            }
            if is_block {
                blocks.push(run);
            } else {
                gaps.push(run);
            }
        }
        debug_assert_eq!(blocks.len(), gaps.len());
        Ok(Self {
            order: order.clone(),
            blocks,
            gaps,
        })
    }

    /// Number of blocks (equivalently gaps); half the polygon's vertex count.
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn gaps(&self) -> &[Vec<usize>] {
        &self.gaps
    }

    pub fn order(&self) -> &CyclicOrder {
        &self.order
    }

    /// The decomposed side, as a subset.
    pub fn side(&self) -> MarkedSubset {
        let labels: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        MarkedSubset::from_labels(self.order.n(), &labels).expect("blocks are valid labels")
    }

    /// The cyclic piece sequence `B_1, G_1, B_2, G_2, ..., B_k, G_k` as
    /// subsets; segments of this sequence drive the expansion coefficients.
    pub fn pieces(&self) -> Vec<MarkedSubset> {
        let n = self.order.n();
        let mut out = Vec::with_capacity(2 * self.k());
        for i in 0..self.k() {
            out.push(MarkedSubset::from_labels(n, &self.blocks[i]).expect("valid block"));
            out.push(MarkedSubset::from_labels(n, &self.gaps[i]).expect("valid gap"));
        }
        out
    }

    /// Serialized polygon: run contents separated by `|`, e.g.
    /// `(10,1,2|3|4|5,6|7|8,9)`; `k = 1` renders the two-pointed circle
    /// `(B1|G1)`.
    pub fn signature(&self) -> String {
        let mut out = String::from("(");
        for i in 0..self.k() {
            if i > 0 {
                out.push('|');
            }
            push_run(&mut out, &self.blocks[i]);
            out.push('|');
            push_run(&mut out, &self.gaps[i]);
        }
        out.push(')');
        out
    }
}

fn push_run(out: &mut String, run: &[usize]) {
    for (i, l) in run.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&l.to_string());
    }
}

impl fmt::Display for BlockDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.signature())
    }
}

pub(crate) fn check_same_points(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::MismatchedPoints { left, right });
    }
    Ok(())
}

/// Decomposes the canonical representative side of `d` along `order`.
pub fn decompose(d: &BoundaryDivisor, order: &CyclicOrder) -> Result<BlockDecomposition> {
    BlockDecomposition::of_subset(d.rep(), order)
}

/// Number of maximal runs of `side` in the order, without materializing
/// the decomposition.
pub(crate) fn run_count(side: &MarkedSubset, order: &CyclicOrder) -> usize {
    let n = order.n();
    (0..n)
        .filter(|&s| {
            side.contains(order.label_at(s)) && !side.contains(order.label_at((s + n - 1) % n))
        })
        .count()
}

/// Piece masks `B_1, G_1, ..., B_k, G_k` without run label lists; kernel
/// behind the expansion sweep.
pub(crate) fn piece_masks(side: &MarkedSubset, order: &CyclicOrder) -> Vec<u32> {
    let n = order.n();
    let in_side: Vec<bool> = (0..n).map(|s| side.contains(order.label_at(s))).collect();
    let anchor = in_side.iter().position(|&b| b).expect("nonempty side");
    let mut start = anchor;
    while in_side[(start + n - 1) % n] {
        start = (start + n - 1) % n;
    }
    let mut pieces = Vec::new();
    let mut slot = start;
    let mut consumed = 0;
    while consumed < n {
        let is_block = in_side[slot];
        let mut mask = 0u32;
        while consumed < n && in_side[slot] == is_block {
            mask |= 1 << (order.label_at(slot) - 1);
            slot = (slot + 1) % n;
            consumed += 1;
        }
        pieces.push(mask);
    }
    pieces
}

/// True iff the divisor is a consecutive arc for the order (`k = 1`);
/// invariant under swapping the representative for its complement.
pub fn is_consecutive(d: &BoundaryDivisor, order: &CyclicOrder) -> Result<bool> {
    check_same_points(d.n(), order.n())?;
    Ok(run_count(d.rep(), order) == 1)
}

/// The polygon signature of the divisor's decomposition.
pub fn polygon_signature(d: &BoundaryDivisor, order: &CyclicOrder) -> Result<String> {
    Ok(decompose(d, order)?.signature())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn div(n: usize, labels: &[usize]) -> BoundaryDivisor {
        BoundaryDivisor::from_labels(n, labels).unwrap()
    }

    #[test]
    fn hexagon_example() {
        let order = CyclicOrder::standard(10).unwrap();
        let dec = decompose(&div(10, &[1, 2, 4, 7, 10]), &order).unwrap();
        assert_eq!(dec.k(), 3);
        let expect_blocks: Vec<Vec<usize>> = vec![vec![10, 1, 2], vec![4], vec![7]];
        let expect_gaps: Vec<Vec<usize>> = vec![vec![3], vec![5, 6], vec![8, 9]];
        assert_eq!(dec.blocks(), expect_blocks.as_slice());
        assert_eq!(dec.gaps(), expect_gaps.as_slice());
        assert_eq!(dec.signature(), "(10,1,2|3|4|5,6|7|8,9)");
    }

    #[test]
    fn two_pointed_circle_example() {
        let order = CyclicOrder::standard(10).unwrap();
        let dec = decompose(&div(10, &[1, 2, 3, 9, 10]), &order).unwrap();
        assert_eq!(dec.k(), 1);
        assert_eq!(dec.signature(), "(9,10,1,2,3|4,5,6,7,8)");
    }

    #[test]
    fn forced_alternation() {
        let order = CyclicOrder::standard(4).unwrap();
        let dec = decompose(&div(4, &[1, 3]), &order).unwrap();
        assert_eq!(dec.k(), 2);
        assert_eq!(dec.signature(), "(1|2|3|4)");
    }

    #[test]
    fn anchor_block_without_label_one() {
        let order = CyclicOrder::standard(6).unwrap();
        let dec = decompose(&div(6, &[3, 6]), &order).unwrap();
        let expect_blocks: Vec<Vec<usize>> = vec![vec![3], vec![6]];
        let expect_gaps: Vec<Vec<usize>> = vec![vec![4, 5], vec![1, 2]];
        assert_eq!(dec.blocks(), expect_blocks.as_slice());
        assert_eq!(dec.gaps(), expect_gaps.as_slice());
    }

    #[test]
    fn consecutive_depends_on_order() {
        let standard = CyclicOrder::standard(6).unwrap();
        let twisted = CyclicOrder::new(&[1, 4, 6, 2, 3, 5]).unwrap();
        let d = div(6, &[4, 6]);
        assert!(!is_consecutive(&d, &standard).unwrap());
        assert!(is_consecutive(&d, &twisted).unwrap());
    }

    #[test]
    fn consecutive_examples() {
        let order = CyclicOrder::standard(5).unwrap();
        assert!(is_consecutive(&div(5, &[1, 2]), &order).unwrap());
        assert!(!is_consecutive(&div(5, &[1, 3]), &order).unwrap());
    }

    #[test]
    fn wrap_run_is_consecutive() {
        let order = CyclicOrder::standard(4).unwrap();
        assert!(is_consecutive(&div(4, &[1, 4]), &order).unwrap());
    }

    #[test]
    fn complement_swaps_blocks_and_gaps() {
        let order = CyclicOrder::standard(10).unwrap();
        let side = MarkedSubset::from_labels(10, &[1, 2, 4, 7, 10]).unwrap();
        let dec = BlockDecomposition::of_subset(&side, &order).unwrap();
        let co = BlockDecomposition::of_subset(&side.complement(), &order).unwrap();
        assert_eq!(dec.k(), co.k());
        let mut a: Vec<_> = dec.blocks().to_vec();
        let mut b: Vec<_> = co.gaps().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn pieces_tile_the_labels() {
        let order = CyclicOrder::new(&[1, 5, 3, 2, 6, 4, 7]).unwrap();
        let dec = decompose(&div(7, &[2, 5, 7]), &order).unwrap();
        let mut union = 0u32;
        let mut total = 0;
        for p in dec.pieces() {
            assert_eq!(union & p.mask(), 0, "pieces overlap");
            union |= p.mask();
            total += p.len();
        }
        assert_eq!(total, 7);
        assert_eq!(union, (1 << 7) - 1);
        assert_eq!(dec.side().labels(), vec![2, 5, 7]);
    }

    #[test]
    fn rejects_mismatched_points() {
        let order = CyclicOrder::standard(6).unwrap();
        let d = div(5, &[1, 3]);
        assert!(matches!(
            is_consecutive(&d, &order),
            Err(Error::MismatchedPoints { .. })
        ));
    }
}
