//! Exact rational linear algebra on small dense matrices.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Outcome of solving `A x = b` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solve {
    Unique(Vec<BigRational>),
    NoSolution,
    NonUnique,
}

/// Gaussian elimination with exact rational arithmetic.
/// `a` is row-major, `rows x cols`; `b` has length `rows`.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Solve {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_col_of_row = vec![usize::MAX; rows];
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for entry in m[row].iter_mut() {
            *entry /= &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let delta = &factor * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivot_col_of_row[row] = col;
        row += 1;
        if row == rows {
            break;
        }
    }
    let rank = row;
    for r in rank..rows {
        if !m[r][cols].is_zero() {
            return Solve::NoSolution;
        }
    }
    if rank < cols {
        return Solve::NonUnique;
    }
    let mut x = vec![BigRational::zero(); cols];
    for r in 0..rank {
        x[pivot_col_of_row[r]] = m[r][cols].clone();
    }
    Solve::Unique(x)
}

/// Rank of a rational matrix (row-major).
pub fn rank(a: &[Vec<BigRational>]) -> usize {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for entry in m[row].iter_mut() {
            *entry /= &inv;
        }
        for r in (row + 1)..rows {
            if !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        row += 1;
        if row == rows {
            break;
        }
    }
    row
}

/// `true` iff the rational is an integer; returns it if so.
pub fn as_integer(r: &BigRational) -> Option<BigInt> {
    if r.denom().is_one() || r.numer().is_zero() {
        Some(r.to_integer())
    } else {
        None
    }
}

/// `true` iff every entry is a non-negative integer.
pub fn all_nonneg_integers(xs: &[BigRational]) -> bool {
    xs.iter()
        .all(|x| as_integer(x).is_some_and(|n| !n.is_negative()))
}
