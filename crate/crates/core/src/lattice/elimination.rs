//! Fraction-free (Bareiss) elimination and small rational Gauss-Jordan.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntMatrix;

/// Bareiss forward elimination in place. Returns the rank and the sign of
/// the row permutation used.
fn bareiss(rows: &mut [Vec<BigInt>]) -> (usize, bool) {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut odd_swaps = false;
    let mut prev = BigInt::one();
    for col in 0..n {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        if p != rank {
            rows.swap(p, rank);
            odd_swaps = !odd_swaps;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for c in col + 1..n {
                let v = pivot * &row[c] - &lead * &pivot_row[c];
                // Sylvester's identity makes this division exact.
                row[c] = v / &prev;
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    (rank, odd_swaps)
}

/// Rank of an integer matrix given by rows.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    bareiss(&mut rows).0
}

/// Rank over Q of a rational matrix given by rows. Each row is cleared of
/// denominators first so the elimination stays fraction-free.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let int_rows = rows
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    integer_rank(int_rows)
}

/// Determinant of a square integer matrix.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut rows = m.to_rows();
    let (rank, odd) = bareiss(&mut rows);
    if rank < n {
        return BigInt::zero();
    }
    let d = rows[n - 1][n - 1].clone();
    if odd {
        -d
    } else {
        d
    }
}

/// Inverse over Q, or `None` for a singular matrix.
pub fn rational_inverse(m: &IntMatrix) -> Option<Vec<Vec<BigRational>>> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = m
                .row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x -= &f * p;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::big_vec;

    #[test]
    fn determinants() {
        assert_eq!(determinant(&IntMatrix::from_i64(&[[2, 4], [6, 8]])), BigInt::from(-8));
        assert_eq!(
            determinant(&IntMatrix::from_i64(&[[0, 1, 0], [1, 0, 0], [0, 0, 3]])),
            BigInt::from(-3)
        );
        assert!(determinant(&IntMatrix::from_i64(&[[1, 2], [2, 4]])).is_zero());
        assert_eq!(determinant(&IntMatrix::zeros(0, 0)), BigInt::one());
    }

    #[test]
    fn ranks_with_skipped_columns() {
        let rows = vec![big_vec(&[0, 1, 2]), big_vec(&[0, 2, 4]), big_vec(&[0, 0, 5])];
        assert_eq!(integer_rank(rows), 2);
        assert_eq!(integer_rank(vec![]), 0);
        let half = BigRational::new(1.into(), 2.into());
        let q = vec![
            vec![half.clone(), BigRational::one()],
            vec![BigRational::one(), BigRational::from_integer(2.into())],
        ];
        assert_eq!(rational_rank(&q), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = IntMatrix::from_i64(&[[1, 0], [-1, -2]]);
        let inv = rational_inverse(&m).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(inv[0], vec![BigRational::one(), BigRational::zero()]);
        assert_eq!(inv[1], vec![-half.clone(), -half]);
        assert!(rational_inverse(&IntMatrix::from_i64(&[[1, 2], [2, 4]])).is_none());
    }
}
