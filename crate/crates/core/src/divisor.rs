use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{check_points, full_mask, MarkedSubset};

/// A boundary divisor: the unordered pair `{A, complement(A)}` of
/// complementary label subsets with `2 <= |A| <= n-2`, stored through its
/// canonical representative.
///
/// The canonical side is the smaller one; on a size tie the side
/// containing label 1 wins. This makes divisors usable as deterministic
/// map keys and display forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundaryDivisor {
    rep: MarkedSubset,
}

impl BoundaryDivisor {
    /// Convenience wrapper around [`canonicalize`].
    pub fn from_labels(n: usize, labels: &[usize]) -> Result<Self> {
        canonicalize(&MarkedSubset::from_labels(n, labels)?)
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    /// The canonical representative side.
    pub fn rep(&self) -> &MarkedSubset {
        &self.rep
    }

    /// The other side of the partition.
    pub fn other_side(&self) -> MarkedSubset {
        self.rep.complement()
    }

    /// Image under a relabeling permutation (re-canonicalized).
    pub fn relabeled(&self, sigma: &[usize]) -> Result<Self> {
        canonicalize(&self.rep.relabeled(sigma)?)
    }
}

/// Divisors sort by (representative size, representative mask); this is
/// the column order of every enumeration and basis in the crate.
impl Ord for BoundaryDivisor {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rep.len(), self.rep.mask()).cmp(&(other.rep.len(), other.rep.mask()))
    }
}

impl PartialOrd for BoundaryDivisor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BoundaryDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.rep)
    }
}

/// Canonicalizes `{A, complement(A)}` into a [`BoundaryDivisor`].
///
/// Idempotent and complement invariant: `canonicalize(A)` equals
/// `canonicalize(complement(A))` for every admissible `A`.
pub fn canonicalize(a: &MarkedSubset) -> Result<BoundaryDivisor> {
    let n = a.n();
    let size = a.len();
    if size < 2 || size > n - 2 {
        return Err(Error::SubsetSize { size, n });
    }
    let comp = a.complement();
    let rep = match size.cmp(&comp.len()) {
        Ordering::Less => *a,
        Ordering::Greater => comp,
        Ordering::Equal => {
            if a.contains(1) {
                *a
            } else {
                comp
            }
        }
    };
    Ok(BoundaryDivisor { rep })
}

/// All boundary divisors for `n` marked points, each exactly once, sorted
/// by (representative size, representative mask).
///
/// The count is `2^(n-1) - 1 - n`; for `n = 3` the list is empty.
pub fn enumerate_divisors(n: usize) -> Result<Vec<BoundaryDivisor>> {
    check_points(n)?;
    let mut out = Vec::with_capacity(num_divisors(n));
    for mask in 0..=full_mask(n) {
        let size = mask.count_ones() as usize;
        if size < 2 || size + 2 > n {
            continue;
        }
        // keep only canonical representatives
        let canonical = 2 * size < n || (2 * size == n && mask & 1 == 1);
        if canonical {
            let rep = MarkedSubset::new(n, mask)?;
            out.push(BoundaryDivisor { rep });
        }
    }
    out.sort();
    Ok(out)
}

/// `|D^n| = 2^(n-1) - 1 - n`, the number of boundary divisors.
pub fn num_divisors(n: usize) -> usize {
    (1usize << (n - 1)) - 1 - n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn div(n: usize, labels: &[usize]) -> BoundaryDivisor {
        BoundaryDivisor::from_labels(n, labels).unwrap()
    }

    #[test]
    fn smaller_side_wins() {
        assert_eq!(div(6, &[1, 2, 3, 5]).rep().labels(), vec![4, 6]);
    }

    #[test]
    fn tie_goes_to_the_side_with_label_one() {
        assert_eq!(div(4, &[3, 4]).rep().labels(), vec![1, 2]);
        assert_eq!(div(6, &[2, 3, 6]).rep().labels(), vec![1, 4, 5]);
    }

    #[test]
    fn already_canonical_is_kept() {
        assert_eq!(div(5, &[2, 4]).rep().labels(), vec![2, 4]);
    }

    #[test]
    fn complement_invariant_and_idempotent() {
        let a = MarkedSubset::from_labels(7, &[2, 5, 6]).unwrap();
        let d = canonicalize(&a).unwrap();
        assert_eq!(d, canonicalize(&a.complement()).unwrap());
        assert_eq!(d, canonicalize(d.rep()).unwrap());
    }

    #[test]
    fn rejects_trivial_sides() {
        let a = MarkedSubset::from_labels(5, &[2]).unwrap();
        assert_eq!(canonicalize(&a), Err(Error::SubsetSize { size: 1, n: 5 }));
        let b = MarkedSubset::from_labels(5, &[1, 2, 3, 4]).unwrap();
        assert_eq!(canonicalize(&b), Err(Error::SubsetSize { size: 4, n: 5 }));
    }

    #[test]
    fn n4_has_the_three_divisors() {
        let divs = enumerate_divisors(4).unwrap();
        let expect: Vec<_> = [[1, 2], [1, 3], [1, 4]]
            .iter()
            .map(|l| div(4, l))
            .collect();
        assert_eq!(divs, expect);
    }

    #[test]
    fn n5_has_the_ten_pairs() {
        let divs = enumerate_divisors(5).unwrap();
        assert_eq!(divs.len(), 10);
        assert!(divs.iter().all(|d| d.rep().len() == 2));
    }

    #[test]
    fn n3_is_empty() {
        assert!(enumerate_divisors(3).unwrap().is_empty());
    }

    #[test]
    fn display_form() {
        assert_eq!(div(6, &[1, 2, 3, 5]).to_string(), "d{4,6}");
    }
}
