use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::clean::{rebase, CleanBasis};
use crate::cycle::CycleSpace;
use crate::error::GeometryError;
use crate::matrix::RationalMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Small,
    Large,
    Thin,
    Thick,
}

/// Result of classifying a counter vector against a cycle space.
///
/// `distinguished` is the greedily selected coordinate set K* (ascending)
/// and `profile` the values of `v` on K*, sorted ascending. The stored
/// basis is the unique clean basis with distinguished set K*; by the
/// matroid exchange property its profile is componentwise minimal over all
/// candidate sets, so the verdict can be read off the profile alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub basis: CleanBasis,
    pub distinguished: Vec<usize>,
    pub profile: Vec<BigInt>,
}

/// Greedy minimum-profile distinguished set: coordinates sorted by
/// `(v[i], i)` ascending, selected while their basis columns stay linearly
/// independent, until rank-many are chosen.
pub fn greedy_distinguished(
    space: &CycleSpace,
    v: &[BigInt],
) -> Result<(Vec<usize>, Vec<BigInt>), GeometryError> {
    if v.len() != space.dim {
        return Err(GeometryError::DimensionMismatch {
            got: v.len(),
            want: space.dim,
        });
    }
    let g = space.rank;
    let mut order: Vec<usize> = (0..space.dim).collect();
    order.sort_by(|&a, &b| (&v[a], a).cmp(&(&v[b], b)));

    // Incremental exact elimination over chosen columns.
    let mut reduced: Vec<Vec<BigRational>> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    for i in order {
        if chosen.len() == g {
            break;
        }
        let mut col = space.basis.column(i);
        for r in &reduced {
            // Eliminate with the leading entry of r.
            let lead = r.iter().position(|x| !x.is_zero()).expect("nonzero row");
            if !col[lead].is_zero() {
                let f = &col[lead] / &r[lead];
                for (c, rv) in col.iter_mut().zip(r) {
                    let vnew = &*c - &f * rv;
                    *c = vnew;
                }
            }
        }
        if col.iter().any(|x| !x.is_zero()) {
            reduced.push(col);
            chosen.push(i);
        }
    }
    debug_assert_eq!(chosen.len(), g, "basis columns must span rank-many");
    chosen.sort_unstable();
    let mut profile: Vec<BigInt> = chosen.iter().map(|&i| v[i].clone()).collect();
    profile.sort();
    Ok((chosen, profile))
}

fn classification(space: &CycleSpace, v: &[BigInt], verdict: Verdict) -> Classification {
    let (chosen, profile) = greedy_distinguished(space, v).expect("validated by caller");
    let basis = rebase(&space.basis, &chosen)
        .expect("greedy set has independent columns by construction");
    assert!(basis.is_clean());
    Classification {
        verdict,
        basis,
        distinguished: chosen,
        profile,
    }
}

/// Rank of the canonical basis columns restricted to `coords`.
fn restricted_rank(space: &CycleSpace, coords: &[usize]) -> usize {
    if space.rank == 0 {
        return 0;
    }
    let rows: Vec<Vec<BigRational>> = (0..space.rank)
        .map(|r| coords.iter().map(|&c| space.basis.basis[r][c].clone()).collect())
        .collect();
    RationalMatrix::from_rows(rows, coords.len())
        .expect("rectangular")
        .rank()
}

/// `v` is C-small when some clean basis has all distinguished values below
/// C. Decided by the greedy profile; double-checked against the rank
/// criterion (columns with `v[i] < C` must span the whole space).
pub fn classify_small(
    space: &CycleSpace,
    v: &[BigInt],
    c: &BigInt,
) -> Result<Classification, GeometryError> {
    let (_, profile) = greedy_distinguished(space, v)?;
    let small = profile.last().is_none_or(|u| u < c);
    let below: Vec<usize> = (0..space.dim).filter(|&i| &v[i] < c).collect();
    let by_rank = restricted_rank(space, &below) == space.rank;
    assert_eq!(
        small, by_rank,
        "profile and rank criteria must agree on smallness"
    );
    let verdict = if small { Verdict::Small } else { Verdict::Large };
    Ok(classification(space, v, verdict))
}

/// `v` is C-thin for thresholds `C₀ ≤ … ≤ C_{g−1}` when some clean basis
/// has, for every k, fewer than k distinguished values ≥ C_{g−k}. On the
/// ascending profile this reads: u_j < C_{j−1} for all j.
pub fn classify_thin(
    space: &CycleSpace,
    v: &[BigInt],
    thresholds: &[BigInt],
) -> Result<Classification, GeometryError> {
    if thresholds.len() != space.rank {
        return Err(GeometryError::ThresholdLength {
            got: thresholds.len(),
            want: space.rank,
        });
    }
    if let Some(i) = (1..thresholds.len()).find(|&i| thresholds[i] < thresholds[i - 1]) {
        return Err(GeometryError::UnsortedThresholds { index: i });
    }
    let (_, profile) = greedy_distinguished(space, v)?;
    let thin = profile.iter().zip(thresholds).all(|(u, c)| u < c);
    let verdict = if thin { Verdict::Thin } else { Verdict::Thick };
    Ok(classification(space, v, verdict))
}
