use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vasskit_geometry::{
    small_solution_eq, small_solution_ineq, solve_ineq_unchecked, GeometryError, SolveOptions,
};

fn ints(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

fn rows(a: &[&[i64]]) -> Vec<Vec<BigInt>> {
    a.iter().map(|r| ints(r)).collect()
}

fn cap(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn eq_solves_even_multiple() {
    let sol = small_solution_eq(&rows(&[&[2]]), &ints(&[4]), &cap(10), &SolveOptions::default())
        .unwrap();
    assert_eq!(sol, Some(ints(&[2])));
}

#[test]
fn eq_detects_parity_obstruction() {
    let sol = small_solution_eq(&rows(&[&[2]]), &ints(&[3]), &cap(50), &SolveOptions::default())
        .unwrap();
    assert_eq!(sol, None);
}

#[test]
fn eq_returns_lexicographically_least() {
    let sol = small_solution_eq(&rows(&[&[1, 1]]), &ints(&[3]), &cap(5), &SolveOptions::default())
        .unwrap();
    assert_eq!(sol, Some(ints(&[0, 3])));
}

#[test]
fn ineq_zero_rhs_gives_zero() {
    let sol =
        small_solution_ineq(&rows(&[&[1]]), &ints(&[0]), &cap(5), &SolveOptions::default())
            .unwrap();
    assert_eq!(sol, Some(ints(&[0])));
}

#[test]
fn ineq_rounds_up_to_multiple() {
    // Smallest multiple of 3 that reaches 7; stays within (r+1)(rN)^r = 6.
    let sol =
        small_solution_ineq(&rows(&[&[3]]), &ints(&[7]), &cap(6), &SolveOptions::default())
            .unwrap();
    assert_eq!(sol, Some(ints(&[3])));
}

#[test]
fn ineq_mixed_signs_lex_order() {
    let sol = small_solution_ineq(
        &rows(&[&[1, -1]]),
        &ints(&[1]),
        &cap(4),
        &SolveOptions::default(),
    )
    .unwrap();
    assert_eq!(sol, Some(ints(&[1, 0])));
}

#[test]
fn ineq_rejects_negative_rhs() {
    let err = small_solution_ineq(
        &rows(&[&[1]]),
        &ints(&[-1]),
        &cap(4),
        &SolveOptions::default(),
    )
    .unwrap_err();
    assert!(matches!(err, GeometryError::NegativeRhs { row: 0 }));
    // The unchecked variant accepts it.
    let sol = solve_ineq_unchecked(&rows(&[&[1]]), &ints(&[-1]), &cap(4), &SolveOptions::default())
        .unwrap();
    assert_eq!(sol, Some(ints(&[0])));
}

#[test]
fn cap_below_one_rejected() {
    let err = small_solution_eq(&rows(&[&[1]]), &ints(&[0]), &cap(0), &SolveOptions::default())
        .unwrap_err();
    assert!(matches!(err, GeometryError::ZeroCap));
}

#[test]
fn cap_is_respected() {
    let sol = small_solution_eq(&rows(&[&[1]]), &ints(&[9]), &cap(8), &SolveOptions::default())
        .unwrap();
    assert_eq!(sol, None);
    let sol = small_solution_eq(&rows(&[&[1]]), &ints(&[9]), &cap(9), &SolveOptions::default())
        .unwrap();
    assert_eq!(sol, Some(ints(&[9])));
}

#[test]
fn budget_exhaustion_is_distinct_from_none() {
    let err = small_solution_eq(
        &rows(&[&[1, 1, 1, 1, 0]]),
        &ints(&[40]),
        &cap(10),
        &SolveOptions { budget: 3 },
    )
    .unwrap_err();
    assert!(matches!(err, GeometryError::BudgetExceeded { budget: 3 }));
}

#[test]
fn dimension_mismatches_rejected() {
    let err = small_solution_eq(&rows(&[&[1, 2]]), &ints(&[1, 1]), &cap(3), &SolveOptions::default())
        .unwrap_err();
    assert!(matches!(err, GeometryError::RhsLength { got: 2, want: 1 }));
}

/// Brute-force reference: try all vectors with entries ≤ cap.
fn brute_eq(a: &[Vec<BigInt>], b: &[BigInt], cap: i64) -> Option<Vec<i64>> {
    let n = a.first().map_or(0, Vec::len);
    let mut x = vec![0i64; n];
    loop {
        let ok = a.iter().zip(b).all(|(row, rhs)| {
            let s: BigInt = row
                .iter()
                .zip(&x)
                .map(|(c, &v)| c * BigInt::from(v))
                .sum();
            &s == rhs
        });
        if ok {
            return Some(x);
        }
        let mut i = 0;
        loop {
            if i == n {
                return None;
            }
            x[i] += 1;
            if x[i] <= cap {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn eq_agrees_with_brute_force_on_random_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for _ in 0..300 {
        let n_rows = rng.gen_range(1..=3);
        let n_cols = rng.gen_range(1..=3);
        let a: Vec<Vec<BigInt>> = (0..n_rows)
            .map(|_| (0..n_cols).map(|_| BigInt::from(rng.gen_range(-3i64..=3))).collect())
            .collect();
        let b: Vec<BigInt> = (0..n_rows).map(|_| BigInt::from(rng.gen_range(-4i64..=4))).collect();
        let c = 5i64;
        let fast = small_solution_eq(&a, &b, &cap(c), &SolveOptions::default()).unwrap();
        let slow = brute_eq(&a, &b, c);
        assert_eq!(fast.is_some(), slow.is_some(), "solvability must agree");
        if let Some(sol) = fast {
            // Verify the solution exactly.
            for (row, rhs) in a.iter().zip(&b) {
                let s: BigInt = row.iter().zip(&sol).map(|(c, v)| c * v).sum();
                assert_eq!(&s, rhs);
            }
            assert!(sol.iter().all(|v| *v >= BigInt::from(0) && *v <= cap(c)));
        }
    }
}
