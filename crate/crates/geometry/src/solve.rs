use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::GeometryError;

/// Hard ceiling for the solution searches, counted in assignments tried.
#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: 20_000_000 }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum RowKind {
    Eq,
    Ge,
}

struct Search<'a> {
    a: &'a [Vec<BigInt>],
    b: &'a [BigInt],
    kind: RowKind,
    cap: &'a BigInt,
    /// min/max possible contribution of variables `j..` to each row.
    min_rem: Vec<Vec<BigInt>>,
    max_rem: Vec<Vec<BigInt>>,
    budget: u64,
}

impl Search<'_> {
    /// Depth-first over variables in order, values ascending, so the first
    /// solution found is lexicographically least. Feasibility intervals for
    /// each variable are derived exactly from the remaining-contribution
    /// bounds; no solution within the cap is ever pruned.
    fn dfs(
        &mut self,
        j: usize,
        sums: &mut [BigInt],
        x: &mut Vec<BigInt>,
    ) -> Result<Option<Vec<BigInt>>, GeometryError> {
        let n = self.a.first().map_or(0, Vec::len);
        if j == n {
            let ok = self.b.iter().zip(sums.iter()).all(|(b, s)| match self.kind {
                RowKind::Eq => s == b,
                RowKind::Ge => s >= b,
            });
            return Ok(if ok { Some(x.clone()) } else { None });
        }
        let mut lo = BigInt::zero();
        let mut hi = self.cap.clone();
        for (r, row) in self.a.iter().enumerate() {
            let coeff = &row[j];
            // Contribution of x_j must make the row completable by the
            // variables after j.
            let need_lo = &self.b[r] - &sums[r] - &self.max_rem[r][j + 1];
            let need_hi = &self.b[r] - &sums[r] - &self.min_rem[r][j + 1];
            if coeff.is_zero() {
                if need_lo.is_positive() {
                    return Ok(None);
                }
                if self.kind == RowKind::Eq && need_hi.is_negative() {
                    return Ok(None);
                }
            } else if coeff.is_positive() {
                let l = need_lo.div_ceil(coeff);
                if l > lo {
                    lo = l;
                }
                if self.kind == RowKind::Eq {
                    let h = need_hi.div_floor(coeff);
                    if h < hi {
                        hi = h;
                    }
                }
            } else {
                let h = need_lo.div_floor(coeff);
                if h < hi {
                    hi = h;
                }
                if self.kind == RowKind::Eq {
                    let l = need_hi.div_ceil(coeff);
                    if l > lo {
                        lo = l;
                    }
                }
            }
            if lo > hi {
                return Ok(None);
            }
        }
        let mut val = lo;
        while val <= hi {
            if self.budget == 0 {
                return Err(GeometryError::BudgetExceeded {
                    budget: u64::MAX,
                });
            }
            self.budget -= 1;
            for (r, row) in self.a.iter().enumerate() {
                sums[r] += &row[j] * &val;
            }
            x.push(val.clone());
            if let Some(sol) = self.dfs(j + 1, sums, x)? {
                return Ok(Some(sol));
            }
            x.pop();
            for (r, row) in self.a.iter().enumerate() {
                sums[r] -= &row[j] * &val;
            }
            val += 1;
        }
        Ok(None)
    }
}

fn solve(
    a: &[Vec<BigInt>],
    b: &[BigInt],
    kind: RowKind,
    cap: &BigInt,
    opts: &SolveOptions,
) -> Result<Option<Vec<BigInt>>, GeometryError> {
    if cap < &BigInt::from(1) {
        return Err(GeometryError::ZeroCap);
    }
    if b.len() != a.len() {
        return Err(GeometryError::RhsLength {
            got: b.len(),
            want: a.len(),
        });
    }
    let n = a.first().map_or(0, Vec::len);
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(GeometryError::RaggedMatrix {
                row: i,
                got: row.len(),
                want: n,
            });
        }
    }
    if a.is_empty() {
        return Ok(Some(Vec::new()));
    }

    let mut min_rem = vec![vec![BigInt::zero(); n + 1]; a.len()];
    let mut max_rem = vec![vec![BigInt::zero(); n + 1]; a.len()];
    for (r, row) in a.iter().enumerate() {
        for j in (0..n).rev() {
            let contrib = &row[j] * cap;
            min_rem[r][j] = &min_rem[r][j + 1]
                + if contrib.is_negative() {
                    contrib.clone()
                } else {
                    BigInt::zero()
                };
            max_rem[r][j] = &max_rem[r][j + 1]
                + if contrib.is_positive() {
                    contrib
                } else {
                    BigInt::zero()
                };
        }
    }

    let budget = opts.budget;
    let mut search = Search {
        a,
        b,
        kind,
        cap,
        min_rem,
        max_rem,
        budget,
    };
    let mut sums = vec![BigInt::zero(); a.len()];
    let mut x = Vec::with_capacity(n);
    match search.dfs(0, &mut sums, &mut x) {
        Err(GeometryError::BudgetExceeded { .. }) => {
            Err(GeometryError::BudgetExceeded { budget })
        }
        other => other,
    }
}

/// Lexicographically least `x ≥ 0` with `Ax = b` and `∥x∥∞ ≤ cap`, if any.
pub fn small_solution_eq(
    a: &[Vec<BigInt>],
    b: &[BigInt],
    cap: &BigInt,
    opts: &SolveOptions,
) -> Result<Option<Vec<BigInt>>, GeometryError> {
    solve(a, b, RowKind::Eq, cap, opts)
}

/// Lexicographically least `x ≥ 0` with `Ax ≥ b` and `∥x∥∞ ≤ cap`; the
/// right-hand side must be nonnegative.
pub fn small_solution_ineq(
    a: &[Vec<BigInt>],
    b: &[BigInt],
    cap: &BigInt,
    opts: &SolveOptions,
) -> Result<Option<Vec<BigInt>>, GeometryError> {
    if let Some(row) = b.iter().position(|v| v.is_negative()) {
        return Err(GeometryError::NegativeRhs { row });
    }
    solve(a, b, RowKind::Ge, cap, opts)
}

/// `Ax ≥ b` without the sign restriction on `b`. Negative entries arise in
/// derived systems (a committed path effect moved to the right-hand side);
/// the search itself does not care about the sign.
pub fn solve_ineq_unchecked(
    a: &[Vec<BigInt>],
    b: &[BigInt],
    cap: &BigInt,
    opts: &SolveOptions,
) -> Result<Option<Vec<BigInt>>, GeometryError> {
    solve(a, b, RowKind::Ge, cap, opts)
}
