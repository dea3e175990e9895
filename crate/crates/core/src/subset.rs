use std::fmt;

use crate::error::{Error, Result};
use crate::MAX_POINTS;

/// A subset of the marked-point labels `1..=n`, stored as an `n`-bit mask.
///
/// Bit `l - 1` of the mask is set when label `l` is a member. Masks keep
/// the enumeration and decomposition kernels branch-light; `n` is capped
/// at [`MAX_POINTS`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedSubset {
    n: usize,
    mask: u32,
}

pub(crate) fn check_points(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::TooFewPoints { n, min: 3 });
    }
    if n > MAX_POINTS {
        return Err(Error::CapExceeded {
            what: "marked-point subsets",
            n,
            cap: MAX_POINTS,
        });
    }
    Ok(())
}

pub(crate) fn full_mask(n: usize) -> u32 {
    (1u32 << n) - 1
}

impl MarkedSubset {
    pub fn new(n: usize, mask: u32) -> Result<Self> {
        check_points(n)?;
        if mask & !full_mask(n) != 0 {
            let label = 32 - (mask & !full_mask(n)).leading_zeros() as usize;
            return Err(Error::LabelOutOfRange { label, n });
        }
        Ok(Self { n, mask })
    }

    pub fn from_labels(n: usize, labels: &[usize]) -> Result<Self> {
        check_points(n)?;
        let mut mask = 0u32;
        for &label in labels {
            if label < 1 || label > n {
                return Err(Error::LabelOutOfRange { label, n });
            }
            let bit = 1u32 << (label - 1);
            if mask & bit != 0 {
                return Err(Error::DuplicateLabel { label });
            }
            mask |= bit;
        }
        Ok(Self { n, mask })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, label: usize) -> bool {
        label >= 1 && label <= self.n && self.mask >> (label - 1) & 1 == 1
    }

    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            mask: !self.mask & full_mask(self.n),
        }
    }

    /// Member labels in ascending order.
    pub fn labels(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (1..=self.n).filter(move |l| mask >> (l - 1) & 1 == 1)
    }

    /// Image of this subset under a relabeling permutation.
    ///
    /// `sigma` maps label `l` to `sigma[l - 1]` and must be a permutation
    /// of `1..=n`.
    pub fn relabeled(&self, sigma: &[usize]) -> Result<Self> {
        crate::cyclic::check_permutation(self.n, sigma)?;
        let labels: Vec<usize> = self.iter().map(|l| sigma[l - 1]).collect();
        Self::from_labels(self.n, &labels)
    }
}

impl fmt::Display for MarkedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}
