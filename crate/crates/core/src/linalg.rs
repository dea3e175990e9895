//! Exact integer linear algebra.
//!
//! Rank and row-space membership are computed by fraction-free (Bareiss)
//! elimination over arbitrary-precision integers: every intermediate
//! entry is a minor of the original matrix, so the division by the
//! previous pivot is always exact — and asserted to be. No floating point
//! enters this module; it is the arbiter the combinatorial results are
//! checked against.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::divisor::num_divisors;
use crate::error::{Error, Result};
use crate::relations::relation_matrix;
use crate::QUOTIENT_CHECK_MAX_POINTS;

/// Dense matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(nr, nc);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != nc {
                return Err(Error::RowLengthMismatch {
                    expected: nc,
                    got: row.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                m.set_i64(r, c, v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn set_i64(&mut self, r: usize, c: usize, v: i64) {
        self.set(r, c, BigInt::from(v));
    }

    pub fn transposed(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn with_row_appended(&self, row: &[i64]) -> Result<Self> {
        if row.len() != self.cols {
            return Err(Error::RowLengthMismatch {
                expected: self.cols,
                got: row.len(),
            });
        }
        let mut out = self.clone();
        out.rows += 1;
        out.data.extend(row.iter().map(|&v| BigInt::from(v)));
        Ok(out)
    }

    /// Rank over the rationals, by fraction-free elimination on a private
    /// copy.
    ///
    /// Pivots take the smallest nonzero magnitude in the current column
    /// to slow entry growth; columns without a pivot are skipped. The
    /// Sylvester identity guarantees the division by the previous pivot
    /// is exact, which is asserted on every entry.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (nr, nc) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut rank = 0usize;
        for col in 0..nc {
            if rank == nr {
                break;
            }
            let pivot_row = (rank..nr)
                .filter(|&r| !m[r * nc + col].is_zero())
                .min_by_key(|&r| m[r * nc + col].abs());
            let Some(pivot_row) = pivot_row else {
                continue;
            };
            if pivot_row != rank {
                for c in 0..nc {
                    m.swap(rank * nc + c, pivot_row * nc + c);
                }
            }
            let pivot = m[rank * nc + col].clone();
            // every row below is updated, zero head included: rows must
            // all sit at the same minor level for the next division
            for r in rank + 1..nr {
                let head = std::mem::replace(&mut m[r * nc + col], BigInt::zero());
                for c in col + 1..nc {
                    let val = &m[r * nc + c] * &pivot - &head * &m[rank * nc + c];
                    let (q, rem) = val.div_rem(&prev);
                    assert!(rem.is_zero(), "fraction-free pivot divided inexactly");
                    m[r * nc + c] = q;
                }
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// True iff `v` lies in the row space of `self` (over the rationals):
    /// appending `v` must not raise the rank.
    pub fn in_row_space(&self, v: &[i64]) -> Result<bool> {
        let appended = self.with_row_appended(v)?;
        Ok(appended.rank() == self.rank())
    }
}

/// Confirms that the relation matrix cuts the divisor space down to
/// exactly the non-adjacent-basis dimension:
/// `|D^n| - rank = 2^(n-1) - 1 - C(n,2)`.
pub fn quotient_dimension_check(n: usize) -> Result<bool> {
    if n < 4 {
        return Err(Error::TooFewPoints { n, min: 4 });
    }
    if n > QUOTIENT_CHECK_MAX_POINTS {
        return Err(Error::CapExceeded {
            what: "quotient dimension check",
            n,
            cap: QUOTIENT_CHECK_MAX_POINTS,
        });
    }
    let rank = relation_matrix(n)?.to_int_matrix().rank();
    let dim = crate::basis::dimension(n)?;
    Ok(num_divisors(n) - rank == dim)
}
