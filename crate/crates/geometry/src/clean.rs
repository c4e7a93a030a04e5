use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::matrix::RationalMatrix;

/// A basis `b₁,…,b_g` of a subspace of `Q^d` together with distinguished
/// coordinates `K = {k₁,…,k_g}` such that the g×g submatrix of basis
/// columns at K is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleanBasis {
    /// Row vectors, each of length `dim`.
    pub basis: Vec<Vec<BigRational>>,
    /// Distinguished coordinates, strictly increasing, one per basis row.
    pub distinguished: Vec<usize>,
    pub dim: usize,
}

impl CleanBasis {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Checks the defining property: basis columns at the distinguished
    /// coordinates form the identity.
    pub fn is_clean(&self) -> bool {
        if self.basis.len() != self.distinguished.len() {
            return false;
        }
        for (i, row) in self.basis.iter().enumerate() {
            for (j, &k) in self.distinguished.iter().enumerate() {
                let want = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                if row[k] != want {
                    return false;
                }
            }
        }
        true
    }

    /// Column `c` as a height-`g` vector.
    pub(crate) fn column(&self, c: usize) -> Vec<BigRational> {
        self.basis.iter().map(|row| row[c].clone()).collect()
    }
}

/// Canonical clean basis of the span of integer generators: reduced row
/// echelon form with the pivot columns as distinguished coordinates. The
/// pivots of an rref are unit columns, so the result is clean by
/// construction; this is asserted on every call.
pub fn clean_basis(generators: &[Vec<BigInt>], dim: usize) -> CleanBasis {
    let m = RationalMatrix::from_int_rows(generators, dim).expect("uniform generator dimension");
    let (r, pivots) = m.rref();
    let cb = CleanBasis {
        basis: r.rows,
        distinguished: pivots,
        dim,
    };
    assert!(cb.is_clean(), "rref pivots must form an identity submatrix");
    cb
}

/// The unique clean basis of the same span with distinguished set `coords`,
/// if the canonical basis columns at `coords` are invertible. This is the
/// change of basis `(B_K)⁻¹ · B`.
pub fn rebase(canonical: &CleanBasis, coords: &[usize]) -> Option<CleanBasis> {
    let g = canonical.rank();
    if coords.len() != g {
        return None;
    }
    // Stack the selected columns next to the full basis and eliminate; if
    // the left block reduces to the identity, the right block is the new
    // basis.
    let mut rows = Vec::with_capacity(g);
    for row in &canonical.basis {
        let mut r: Vec<BigRational> = coords.iter().map(|&c| row[c].clone()).collect();
        r.extend(row.iter().cloned());
        rows.push(r);
    }
    let m = RationalMatrix::from_rows(rows, g + canonical.dim).ok()?;
    let (red, pivots) = m.rref();
    if red.rows.len() != g || !pivots.iter().copied().eq(0..g) {
        return None;
    }
    let basis: Vec<Vec<BigRational>> = red.rows.iter().map(|r| r[g..].to_vec()).collect();
    let mut sorted: Vec<usize> = coords.to_vec();
    sorted.sort_unstable();
    // Rows currently answer to `coords` in the given order; reorder them so
    // the distinguished set can be kept ascending.
    let mut order: Vec<usize> = (0..g).collect();
    order.sort_by_key(|&i| coords[i]);
    let basis = order.iter().map(|&i| basis[i].clone()).collect();
    let cb = CleanBasis {
        basis,
        distinguished: sorted,
        dim: canonical.dim,
    };
    if cb.is_clean() {
        Some(cb)
    } else {
        None
    }
}
