//! Keel's relations among boundary divisor classes.
//!
//! For four distinct labels `i, j, k, l`, the three sums of classes
//! `delta_A` — taken over subsets `A` that contain one fixed pair and
//! avoid the other — are equal. The differences of consecutive sums over
//! all quadruples assemble into the relation matrix whose quotient is the
//! divisor class group.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};

use crate::basis::{BasisCoordinates, NonAdjacentBasis};
use crate::decompose::check_same_points;
use crate::divisor::{canonicalize, enumerate_divisors, BoundaryDivisor};
use crate::error::{Error, Result};
use crate::expansion::expand_formal;
use crate::linalg::IntMatrix;
use crate::subset::{check_points, MarkedSubset};
use crate::RELATION_MATRIX_MAX_POINTS;

/// Four distinct labels indexing one family of Keel relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeelQuadruple {
    n: usize,
    labels: [usize; 4],
}

impl KeelQuadruple {
    pub fn new(n: usize, labels: [usize; 4]) -> Result<Self> {
        check_points(n)?;
        let mut seen = 0u32;
        for &label in &labels {
            if label < 1 || label > n {
                return Err(Error::LabelOutOfRange { label, n });
            }
            let bit = 1u32 << (label - 1);
            if seen & bit != 0 {
                return Err(Error::DuplicateLabel { label });
            }
            seen |= bit;
        }
        Ok(Self { n, labels })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> [usize; 4] {
        self.labels
    }
}

impl fmt::Display for KeelQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k, l] = self.labels;
        write!(f, "({i},{j},{k},{l})")
    }
}

/// A formal integer combination of boundary divisors.
///
/// Keys are canonical divisors; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalDivisorSum {
    n: usize,
    terms: BTreeMap<BoundaryDivisor, i64>,
}

impl FormalDivisorSum {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, d: BoundaryDivisor, coeff: i64) {
        debug_assert_eq!(d.n(), self.n);
        let entry = self.terms.entry(d).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&d);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff_of(&self, d: &BoundaryDivisor) -> i64 {
        self.terms.get(d).copied().unwrap_or(0)
    }

    /// Terms in divisor order.
    pub fn terms(&self) -> impl Iterator<Item = (&BoundaryDivisor, i64)> + '_ {
        self.terms.iter().map(|(d, &c)| (d, c))
    }

    /// `self - other`, termwise.
    pub fn difference(&self, other: &FormalDivisorSum) -> FormalDivisorSum {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add(*d, -c);
        }
        out
    }

    /// Expands every term in the basis and combines linearly.
    pub fn expand<'b>(&self, basis: &'b NonAdjacentBasis) -> Result<BasisCoordinates<'b>> {
        let terms: Vec<(i64, BoundaryDivisor)> = self.terms().map(|(d, c)| (c, *d)).collect();
        expand_formal(&terms, basis)
    }
}

/// The three Keel sums for a quadruple `(i, j, k, l)`: subsets pairing
/// `i` with `j`, with `k`, and with `l` respectively.
///
/// Each sum enumerates all `2^(n-4)` subsets over the free labels,
/// canonicalizes every term, and merges coefficients.
pub fn keel_sums(q: &KeelQuadruple) -> Result<[FormalDivisorSum; 3]> {
    let n = q.n;
    let [i, j, k, l] = q.labels;
    let pairings = [[i, j, k, l], [i, k, j, l], [i, l, j, k]];
    let mut out = [
        FormalDivisorSum::new(n),
        FormalDivisorSum::new(n),
        FormalDivisorSum::new(n),
    ];
    for (sum, [p, q2, _, _]) in out.iter_mut().zip(pairings) {
        let base = (1u32 << (p - 1)) | (1u32 << (q2 - 1));
        let excluded = (1u32 << (i - 1)) | (1u32 << (j - 1)) | (1u32 << (k - 1)) | (1u32 << (l - 1));
        let free: Vec<usize> = (1..=n).filter(|x| excluded >> (x - 1) & 1 == 0).collect();
        for bits in 0..(1u32 << free.len()) {
            let mut mask = base;
            for (t, x) in free.iter().enumerate() {
                if bits >> t & 1 == 1 {
                    mask |= 1 << (x - 1);
                }
            }
            let subset = MarkedSubset::new(n, mask)?;
            sum.add(canonicalize(&subset)?, 1);
        }
    }
    Ok(out)
}

/// Sparse integer matrix of Keel relation differences.
///
/// Rows come in pairs per quadruple (in lexicographic quadruple order):
/// `S_ij|kl - S_ik|jl` then `S_ik|jl - S_il|jk`. Columns follow
/// [`enumerate_divisors`] order.
#[derive(Debug, Clone)]
pub struct RelationMatrix {
    n: usize,
    columns: Vec<BoundaryDivisor>,
    col_index: BTreeMap<BoundaryDivisor, usize>,
    /// one sparse row per relation difference, entries sorted by column
    rows: Vec<Vec<(usize, i64)>>,
}

impl RelationMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn columns(&self) -> &[BoundaryDivisor] {
        &self.columns
    }

    pub fn column_index(&self, d: &BoundaryDivisor) -> Option<usize> {
        self.col_index.get(d).copied()
    }

    pub fn rows(&self) -> &[Vec<(usize, i64)>] {
        &self.rows
    }

    pub fn row_as_dense(&self, row: usize) -> Vec<i64> {
        let mut out = vec![0i64; self.num_cols()];
        for &(c, v) in &self.rows[row] {
            out[c] = v;
        }
        out
    }

    /// Dense exact copy for elimination.
    pub fn to_int_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.num_rows(), self.num_cols());
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                m.set_i64(r, c, v);
            }
        }
        m
    }

    /// Coordinate text format: a `rows cols nnz` header, then one
    /// `row col value` line per nonzero, 1-based, in row-major order.
    pub fn write_coordinate<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "{} {} {}", self.num_rows(), self.num_cols(), self.nnz())?;
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                writeln!(w, "{} {} {}", r + 1, c + 1, v)?;
            }
        }
        Ok(())
    }
}

/// Assembles the full relation matrix for `n` points: `2 * C(n,4)` rows
/// over the `2^(n-1) - 1 - n` divisor columns.
pub fn relation_matrix(n: usize) -> Result<RelationMatrix> {
    if n < 4 {
        return Err(Error::TooFewPoints { n, min: 4 });
    }
    if n > RELATION_MATRIX_MAX_POINTS {
        return Err(Error::CapExceeded {
            what: "relation matrix assembly",
            n,
            cap: RELATION_MATRIX_MAX_POINTS,
        });
    }
    let columns = enumerate_divisors(n)?;
    let col_index: BTreeMap<BoundaryDivisor, usize> = columns
        .iter()
        .enumerate()
        .map(|(i, d)| (*d, i))
        .collect();

    let mut rows = Vec::with_capacity(2 * n * (n - 1) * (n - 2) * (n - 3) / 24);
    let sparse_row = |sum: &FormalDivisorSum| -> Vec<(usize, i64)> {
        sum.terms()
            .map(|(d, c)| (col_index[d], c))
            .collect::<Vec<_>>()
    };
    for quad in quadruples(n) {
        let q = KeelQuadruple::new(n, quad)?;
        let [s1, s2, s3] = keel_sums(&q)?;
        rows.push(sparse_row(&s1.difference(&s2)));
        rows.push(sparse_row(&s2.difference(&s3)));
    }
    Ok(RelationMatrix {
        n,
        columns,
        col_index,
        rows,
    })
}

/// Sorted 4-subsets of `1..=n` in lexicographic order.
pub(crate) fn quadruples(n: usize) -> impl Iterator<Item = [usize; 4]> {
    (1..=n).flat_map(move |a| {
        (a + 1..=n).flat_map(move |b| {
            (b + 1..=n).flat_map(move |c| (c + 1..=n).map(move |d| [a, b, c, d]))
        })
    })
}

/// Checks one quadruple against the expansion: all three Keel sums must
/// expand to the same coordinate vector in the basis.
pub fn verify_consistency(q: &KeelQuadruple, basis: &NonAdjacentBasis) -> Result<bool> {
    check_same_points(q.n(), basis.n())?;
    let [s1, s2, s3] = keel_sums(q)?;
    let v1 = s1.expand(basis)?;
    let v2 = s2.expand(basis)?;
    let v3 = s3.expand(basis)?;
    Ok(v1 == v2 && v2 == v3)
}
