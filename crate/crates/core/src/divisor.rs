//! Weil and Q-divisors as coefficient vectors in a backend's divisor basis.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A divisor `sum_j c_j B_j` over the backend's basis `B_j` (rays of a fan,
/// or `(E_1, ..., E_r, A)` on a blow-up). Coefficients are exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Divisor(Vec<BigRational>);

impl Divisor {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Divisor(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Divisor(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero(len: usize) -> Self {
        Divisor(vec![BigRational::zero(); len])
    }

    /// The prime divisor `B_j`.
    pub fn basis(len: usize, j: usize) -> Self {
        let mut d = Self::zero(len);
        d.0[j] = BigRational::one();
        d
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, or [`Error::NonIntegral`].
    pub fn integral_coeffs(&self) -> Result<Vec<BigInt>> {
        if !self.is_integral() {
            return Err(Error::NonIntegral);
        }
        Ok(self.0.iter().map(|c| c.to_integer()).collect())
    }

    /// Coefficientwise round-down.
    pub fn floor(&self) -> Divisor {
        Divisor(self.0.iter().map(|c| c.floor()).collect())
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        assert_eq!(self.len(), other.len(), "divisor length");
        Divisor(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Divisor {
        let k = BigRational::from_integer(BigInt::from(k));
        Divisor(self.0.iter().map(|c| c * &k).collect())
    }

    /// `sum_i n_i D_i`, optionally plus a fixed divisor.
    pub fn combination(divisors: &[Divisor], n: &[i64], offset: Option<&Divisor>) -> Divisor {
        assert_eq!(divisors.len(), n.len(), "degree length");
        let len = divisors
            .first()
            .map(Divisor::len)
            .or(offset.map(Divisor::len))
            .unwrap_or(0);
        let mut acc = offset.cloned().unwrap_or_else(|| Divisor::zero(len));
        for (d, &k) in divisors.iter().zip(n) {
            if k != 0 {
                acc = acc.add(&d.scale(k));
            }
        }
        acc
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"3"`, `"-2"`, or `"5/6"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidDivisor(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}
