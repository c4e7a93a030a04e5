use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::GeometryError;

/// A dense matrix of exact rationals. `BigRational` keeps every entry in
/// lowest terms with a positive denominator, so no normalization pass is
/// ever needed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    pub rows: Vec<Vec<BigRational>>,
    pub cols: usize,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>, cols: usize) -> Result<Self, GeometryError> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(GeometryError::RaggedMatrix {
                    row: i,
                    got: r.len(),
                    want: cols,
                });
            }
        }
        Ok(RationalMatrix { rows, cols })
    }

    pub fn from_int_rows(rows: &[Vec<BigInt>], cols: usize) -> Result<Self, GeometryError> {
        let rat = rows
            .iter()
            .map(|r| r.iter().map(|e| BigRational::from(e.clone())).collect())
            .collect();
        Self::from_rows(rat, cols)
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// Reduced row echelon form with zero rows dropped, plus the strictly
    /// increasing pivot columns. The result is canonical for the row space.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.rows.clone();
        let n_rows = m.len();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == n_rows {
                break;
            }
            // First nonzero entry at or below `row`.
            let Some(p) = (row..n_rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for v in m[row].iter_mut().skip(col) {
                *v = &*v * &inv;
            }
            let pivot = m[row].clone();
            for (r, other) in m.iter_mut().enumerate() {
                if r != row && !other[col].is_zero() {
                    let f = other[col].clone();
                    for (v, p) in other.iter_mut().zip(&pivot).skip(col) {
                        *v = &*v - &f * p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        m.truncate(row);
        (
            RationalMatrix {
                rows: m,
                cols: self.cols,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

/// Rank of a family of integer vectors (empty family: rank 0).
pub(crate) fn int_rank(vectors: &[Vec<BigInt>], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    RationalMatrix::from_int_rows(vectors, dim)
        .expect("uniform dimension")
        .rank()
}
