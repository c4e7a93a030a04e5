use num_bigint::BigInt;
use num_rational::BigRational;
use vasskit_geometry::{clean_basis, GeometryError, RationalMatrix};

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

fn int_rows(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

fn rat_matrix(rows: &[&[i64]]) -> RationalMatrix {
    let cols = rows.first().map_or(0, |r| r.len());
    RationalMatrix::from_int_rows(&int_rows(rows), cols).unwrap()
}

#[test]
fn rref_of_reduced_matrix_is_identity_operation() {
    let m = rat_matrix(&[&[1, 0, 2], &[0, 1, 3]]);
    let (r, pivots) = m.rref();
    assert_eq!(r, m);
    assert_eq!(pivots, vec![0, 1]);
}

#[test]
fn rref_eliminates() {
    let m = rat_matrix(&[&[2, 0, 4], &[1, 1, 5]]);
    let (r, pivots) = m.rref();
    assert_eq!(r, rat_matrix(&[&[1, 0, 2], &[0, 1, 3]]));
    assert_eq!(pivots, vec![0, 1]);
}

#[test]
fn rref_drops_zero_rows() {
    let m = rat_matrix(&[&[0, 0]]);
    let (r, pivots) = m.rref();
    assert_eq!(r.rows.len(), 0);
    assert!(pivots.is_empty());
    assert_eq!(m.rank(), 0);
}

#[test]
fn rref_handles_fractions() {
    // Row space of {(2,3)} reduces to {(1, 3/2)}.
    let m = rat_matrix(&[&[2, 3]]);
    let (r, pivots) = m.rref();
    assert_eq!(pivots, vec![0]);
    assert_eq!(r.rows[0][0], rat(1));
    assert_eq!(r.rows[0][1], BigRational::new(BigInt::from(3), BigInt::from(2)));
}

#[test]
fn ragged_rows_rejected() {
    let rows = vec![vec![rat(1)], vec![rat(1), rat(2)]];
    let err = RationalMatrix::from_rows(rows, 1).unwrap_err();
    assert!(matches!(err, GeometryError::RaggedMatrix { row: 1, .. }));
}

#[test]
fn clean_basis_from_generators() {
    let cb = clean_basis(&int_rows(&[&[2, 0, 4], &[1, 1, 5]]), 3);
    assert_eq!(cb.distinguished, vec![0, 1]);
    assert_eq!(cb.basis[0], vec![rat(1), rat(0), rat(2)]);
    assert_eq!(cb.basis[1], vec![rat(0), rat(1), rat(3)]);
    assert!(cb.is_clean());
}

#[test]
fn clean_basis_of_nothing_is_empty() {
    let cb = clean_basis(&[], 4);
    assert_eq!(cb.rank(), 0);
    assert!(cb.distinguished.is_empty());
    assert!(cb.is_clean());
}

#[test]
fn clean_basis_scales() {
    let cb = clean_basis(&int_rows(&[&[0, 3]]), 2);
    assert_eq!(cb.distinguished, vec![1]);
    assert_eq!(cb.basis[0], vec![rat(0), rat(1)]);
}
