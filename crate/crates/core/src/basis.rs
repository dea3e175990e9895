//! The non-adjacent basis attached to a cyclic ordering.
//!
//! For any cyclic ordering, the divisor classes whose defining subset is
//! not a consecutive arc (block count `k >= 2`) form a basis of the
//! divisor class group; its size is `2^(n-1) - 1 - C(n,2)`.

use std::collections::HashMap;
use std::fmt;

use crate::cyclic::CyclicOrder;
use crate::decompose::run_count;
use crate::divisor::{enumerate_divisors, BoundaryDivisor};
use crate::error::Result;
use crate::subset::check_points;

/// `dim = 2^(n-1) - 1 - C(n,2)`, the size of every non-adjacent basis.
pub fn dimension(n: usize) -> Result<usize> {
    check_points(n)?;
    Ok((1usize << (n - 1)) - 1 - n * (n - 1) / 2)
}

/// The non-adjacent basis for one cyclic ordering: every divisor with
/// `k >= 2`, in (representative size, representative mask) order.
///
/// For `n = 3` there are no divisors and the basis is empty.
#[derive(Debug, Clone)]
pub struct NonAdjacentBasis {
    order: CyclicOrder,
    elements: Vec<BoundaryDivisor>,
    index: HashMap<BoundaryDivisor, usize>,
}

impl NonAdjacentBasis {
    pub fn new(order: &CyclicOrder) -> Result<Self> {
        let elements: Vec<BoundaryDivisor> = enumerate_divisors(order.n())?
            .into_iter()
            .filter(|d| run_count(d.rep(), order) >= 2)
            .collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, d)| (*d, i))
            .collect();
        Ok(Self {
            order: order.clone(),
            elements,
            index,
        })
    }

    pub fn order(&self) -> &CyclicOrder {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.order.n()
    }

    pub fn elements(&self) -> &[BoundaryDivisor] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, idx: usize) -> Option<&BoundaryDivisor> {
        self.elements.get(idx)
    }

    /// Position of a divisor in the basis, or `None` when it is
    /// consecutive for this order.
    pub fn position(&self, d: &BoundaryDivisor) -> Option<usize> {
        self.index.get(d).copied()
    }
}

impl PartialEq for NonAdjacentBasis {
    fn eq(&self, other: &Self) -> bool {
        // elements are determined by the order
        self.order == other.order
    }
}

impl Eq for NonAdjacentBasis {}

/// Constructs the basis for `order`.
pub fn nonadjacent_basis(order: &CyclicOrder) -> Result<NonAdjacentBasis> {
    NonAdjacentBasis::new(order)
}

/// An integer coefficient vector over a basis.
///
/// Expansions of a single boundary divisor only ever use entries in
/// `{-1, 0, +1}`; formal combinations may grow beyond that.
#[derive(Debug, Clone)]
pub struct BasisCoordinates<'b> {
    basis: &'b NonAdjacentBasis,
    coeffs: Vec<i64>,
}

impl<'b> BasisCoordinates<'b> {
    pub fn zero(basis: &'b NonAdjacentBasis) -> Self {
        Self {
            basis,
            coeffs: vec![0; basis.len()],
        }
    }

    pub fn unit(basis: &'b NonAdjacentBasis, idx: usize) -> Self {
        let mut v = Self::zero(basis);
        v.coeffs[idx] = 1;
        v
    }

    pub(crate) fn from_coeffs(basis: &'b NonAdjacentBasis, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), basis.len());
        Self { basis, coeffs }
    }

    pub fn basis(&self) -> &'b NonAdjacentBasis {
        self.basis
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of a basis element; `None` when it is not in the basis.
    pub fn coeff_of(&self, d: &BoundaryDivisor) -> Option<i64> {
        self.basis.position(d).map(|i| self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&BoundaryDivisor, i64)> + '_ {
        self.basis
            .elements()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| (d, c))
    }

    /// Adds `scale` times `other` into `self`; both must share a basis.
    pub fn add_scaled(&mut self, scale: i64, other: &BasisCoordinates<'_>) {
        assert_eq!(self.basis, other.basis, "coordinates over different bases");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += scale * b;
        }
    }
}

impl PartialEq for BasisCoordinates<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.coeffs == other.coeffs
    }
}

impl Eq for BasisCoordinates<'_> {}

impl fmt::Display for BasisCoordinates<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (d, c) in self.terms() {
            if any {
                f.write_str(" ")?;
            }
            any = true;
            match c {
                1 => write!(f, "+{d}")?,
                -1 => write!(f, "-{d}")?,
                c if c > 0 => write!(f, "+{c}*{d}")?,
                c => write!(f, "-{}*{d}", -c)?,
            }
        }
        if !any {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_formula() {
        assert_eq!(dimension(3).unwrap(), 0);
        assert_eq!(dimension(4).unwrap(), 1);
        assert_eq!(dimension(5).unwrap(), 5);
        assert_eq!(dimension(6).unwrap(), 16);
    }

    #[test]
    fn n5_standard_basis_is_the_five_classes() {
        let order = CyclicOrder::standard(5).unwrap();
        let basis = nonadjacent_basis(&order).unwrap();
        let expect: Vec<BoundaryDivisor> = [[1, 3], [1, 4], [2, 4], [2, 5], [3, 5]]
            .iter()
            .map(|l| BoundaryDivisor::from_labels(5, l).unwrap())
            .collect();
        assert_eq!(basis.elements(), expect.as_slice());
    }

    #[test]
    fn n4_basis_is_the_single_cross_class() {
        let order = CyclicOrder::standard(4).unwrap();
        let basis = nonadjacent_basis(&order).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis.elements()[0].to_string(), "d{1,3}");
    }

    #[test]
    fn n6_basis_has_sixteen_elements() {
        let order = CyclicOrder::standard(6).unwrap();
        let basis = nonadjacent_basis(&order).unwrap();
        assert_eq!(basis.len(), 16);
        assert_eq!(basis.len(), dimension(6).unwrap());
    }

    #[test]
    fn n3_basis_is_empty() {
        let order = CyclicOrder::standard(3).unwrap();
        assert!(nonadjacent_basis(&order).unwrap().is_empty());
    }

    #[test]
    fn positions_invert_elements() {
        let order = CyclicOrder::new(&[1, 4, 2, 6, 3, 5]).unwrap();
        let basis = nonadjacent_basis(&order).unwrap();
        for (i, d) in basis.elements().iter().enumerate() {
            assert_eq!(basis.position(d), Some(i));
        }
    }

    #[test]
    fn coordinate_display() {
        let order = CyclicOrder::standard(5).unwrap();
        let basis = nonadjacent_basis(&order).unwrap();
        let mut v = BasisCoordinates::zero(&basis);
        assert_eq!(v.to_string(), "0");
        let u = BasisCoordinates::unit(&basis, 0);
        v.add_scaled(2, &u);
        v.add_scaled(-1, &BasisCoordinates::unit(&basis, 3));
        assert_eq!(v.to_string(), "+2*d{1,3} -d{2,5}");
    }
}
