use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::subset::check_points;

/// A cyclic ordering of the marked-point labels `1..=n`.
///
/// Two arrangements that differ by rotation denote the same ordering, so
/// the stored form is rotated to begin with label 1. Reflections are kept
/// distinct: adjacency (all the basis construction needs) is reflection
/// invariant, but block numbering follows the user's orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicOrder {
    arrangement: Vec<usize>,
    /// slot[l - 1] is the position of label l in `arrangement`.
    slot: Vec<usize>,
}

pub(crate) fn check_permutation(n: usize, labels: &[usize]) -> Result<()> {
    if labels.len() != n {
        return Err(Error::NotAPermutation {
            n,
            len: labels.len(),
        });
    }
    let mut seen = 0u32;
    for &label in labels {
        if label < 1 || label > n {
            return Err(Error::LabelOutOfRange { label, n });
        }
        let bit = 1u32 << (label - 1);
        if seen & bit != 0 {
            return Err(Error::DuplicateLabel { label });
        }
        seen |= bit;
    }
    Ok(())
}

impl CyclicOrder {
    /// The standard ordering `(1, 2, ..., n)`.
    pub fn standard(n: usize) -> Result<Self> {
        check_points(n)?;
        Ok(Self::from_canonical((1..=n).collect()))
    }

    /// Builds the order from any rotation of its arrangement.
    pub fn new(arrangement: &[usize]) -> Result<Self> {
        let n = arrangement.len();
        check_points(n)?;
        check_permutation(n, arrangement)?;
        let start = arrangement.iter().position(|&l| l == 1).expect("label 1");
        let mut rotated = Vec::with_capacity(n);
        rotated.extend_from_slice(&arrangement[start..]);
        rotated.extend_from_slice(&arrangement[..start]);
        Ok(Self::from_canonical(rotated))
    }

    /// A uniformly random cyclic ordering (canonical form), drawn from `rng`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check_points(n)?;
        let mut rest: Vec<usize> = (2..=n).collect();
        // Fisher-Yates; label 1 stays in front so the result is canonical.
        for i in (1..rest.len()).rev() {
            let j = rng.gen_range(0..=i);
            rest.swap(i, j);
        }
        let mut arrangement = Vec::with_capacity(n);
        arrangement.push(1);
        arrangement.extend(rest);
        Ok(Self::from_canonical(arrangement))
    }

    fn from_canonical(arrangement: Vec<usize>) -> Self {
        let mut slot = vec![0usize; arrangement.len()];
        for (s, &l) in arrangement.iter().enumerate() {
            slot[l - 1] = s;
        }
        Self { arrangement, slot }
    }

    pub fn n(&self) -> usize {
        self.arrangement.len()
    }

    /// Canonical arrangement, starting with label 1.
    pub fn arrangement(&self) -> &[usize] {
        &self.arrangement
    }

    pub fn label_at(&self, slot: usize) -> usize {
        self.arrangement[slot % self.n()]
    }

    pub fn slot_of(&self, label: usize) -> usize {
        self.slot[label - 1]
    }

    /// Whether the two labels occupy neighboring slots.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        let n = self.n();
        let d = (self.slot_of(a) + n - self.slot_of(b)) % n;
        d == 1 || d == n - 1
    }

    /// The ordering obtained by sending each label `l` to `sigma[l - 1]`.
    pub fn relabeled(&self, sigma: &[usize]) -> Result<Self> {
        check_permutation(self.n(), sigma)?;
        let mapped: Vec<usize> = self.arrangement.iter().map(|&l| sigma[l - 1]).collect();
        Self::new(&mapped)
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.arrangement.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rotations_collapse_to_canonical() {
        let a = CyclicOrder::new(&[3, 5, 1, 4, 6, 2]).unwrap();
        let b = CyclicOrder::new(&[1, 4, 6, 2, 3, 5]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.arrangement(), &[1, 4, 6, 2, 3, 5]);
        assert_eq!(a.to_string(), "(1,4,6,2,3,5)");
    }

    #[test]
    fn reflection_stays_distinct() {
        let a = CyclicOrder::new(&[1, 2, 3, 4]).unwrap();
        let b = CyclicOrder::new(&[1, 4, 3, 2]).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn slots_invert_arrangement() {
        let o = CyclicOrder::new(&[2, 6, 1, 3, 4, 5]).unwrap();
        for label in 1..=6 {
            assert_eq!(o.label_at(o.slot_of(label)), label);
        }
    }

    #[test]
    fn adjacency_wraps() {
        let o = CyclicOrder::standard(5).unwrap();
        assert!(o.adjacent(1, 5));
        assert!(o.adjacent(2, 3));
        assert!(!o.adjacent(1, 3));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(CyclicOrder::new(&[1, 2, 2, 4]).is_err());
        assert!(CyclicOrder::new(&[1, 2, 5, 4]).is_err());
        assert!(CyclicOrder::new(&[1, 2]).is_err());
    }

    #[test]
    fn random_orders_are_canonical_and_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = CyclicOrder::random(8, &mut rng).unwrap();
        assert_eq!(a.arrangement()[0], 1);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let b = CyclicOrder::random(8, &mut rng).unwrap();
        assert_eq!(a, b);
    }
}
