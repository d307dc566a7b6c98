//! Closed-form line bundle cohomology on products of projective spaces.
//!
//! `h^i(P^n, O(d))` is given by Bott's formula and the Kuenneth formula
//! extends it to products. Nothing here touches fans or section rings, which
//! makes these numbers usable as an independent check on both.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `h^i(P^{n_1} x ... x P^{n_k}, O(d_1, ..., d_k))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyQuery {
    pub factors: Vec<usize>,
    pub twists: Vec<i64>,
    pub index: usize,
}

impl CohomologyQuery {
    pub fn new(factors: Vec<usize>, twists: Vec<i64>, index: usize) -> Result<Self> {
        if factors.len() != twists.len() {
            return Err(Error::DimensionMismatch {
                expected: factors.len(),
                found: twists.len(),
            });
        }
        if factors.contains(&0) {
            return Err(Error::Unsupported("factors must have positive dimension".into()));
        }
        let dim: usize = factors.iter().sum();
        if index > dim {
            return Err(Error::Unsupported(format!(
                "cohomological index {index} exceeds dimension {dim}"
            )));
        }
        Ok(CohomologyQuery {
            factors,
            twists,
            index,
        })
    }

    pub fn dimension(&self) -> usize {
        self.factors.iter().sum()
    }
}

fn binomial(n: i64, k: usize) -> BigInt {
    if n < 0 || (n as usize) < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `h^i(P^n, O(d))`.
pub fn bott_dimension(n: usize, d: i64, i: usize) -> BigInt {
    assert!(n >= 1, "P^0 is not supported");
    if i == 0 && d >= 0 {
        binomial(d + n as i64, n)
    } else if i == n && d < -(n as i64) {
        binomial(-d - 1, n)
    } else {
        BigInt::zero()
    }
}

/// Sum over `i_1 + ... + i_k = i` of `prod_j h^{i_j}(P^{n_j}, O(d_j))`.
pub fn kunneth_dimension(q: &CohomologyQuery) -> BigInt {
    fn go(factors: &[usize], twists: &[i64], index: usize) -> BigInt {
        match factors.split_first() {
            None => {
                if index == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            Some((&n, rest)) => {
                let mut total = BigInt::zero();
                for i in 0..=n.min(index) {
                    let h = bott_dimension(n, twists[0], i);
                    if !h.is_zero() {
                        total += h * go(rest, &twists[1..], index - i);
                    }
                }
                total
            }
        }
    }
    go(&q.factors, &q.twists, q.index)
}

/// Top cohomology `h^{dim}(O(d_1, ..., d_k))` of a product.
pub fn top_dimension(factors: &[usize], twists: &[i64]) -> Result<BigInt> {
    let q = CohomologyQuery::new(factors.to_vec(), twists.to_vec(), factors.iter().sum())?;
    Ok(kunneth_dimension(&q))
}
