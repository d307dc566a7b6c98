//! The section ring of a toric variety as a normal affine semigroup ring.
//!
//! `R(X; D_1, ..., D_s)` has a basis of monomials `t^n chi^u` with `(n, u)`
//! in the rational cone `C = {(n, u) : <u, v_rho> + sum_i n_i a_{i,rho} >= 0}`.
//! For such rings the canonical module is spanned by the lattice points of
//! the relative interior of `C`. This gives a way to compute `omega_R` that
//! never mentions `K_X`, and that works whether or not the degree lattice
//! contains an ample divisor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ToricVariety;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::polyhedra::{Constraint, RationalPolyhedron};

#[derive(Clone, Debug)]
pub struct SectionCone {
    rank: usize,
    rays: Vec<Vec<i64>>,
    /// `a_{i, rho}` indexed `[rho][i]`.
    weights: Vec<Vec<BigRational>>,
    /// Rays whose inequality holds with equality on all of `C`.
    implicit: Vec<bool>,
}

impl SectionCone {
    pub fn new(x: &ToricVariety, divisors: &[Divisor]) -> Result<Self> {
        if divisors.is_empty() {
            return Err(Error::NoDivisors);
        }
        for d in divisors {
            if d.len() != x.ray_count() {
                return Err(Error::DimensionMismatch {
                    expected: x.ray_count(),
                    found: d.len(),
                });
            }
        }
        let rays = x.fan().rays.clone();
        let rank = x.fan().rank;
        let s = divisors.len();
        let weights: Vec<Vec<BigRational>> = (0..rays.len())
            .map(|r| divisors.iter().map(|d| d.coeffs()[r].clone()).collect())
            .collect();

        // Integer normals of the cone inequalities in variables (n, u).
        let normals: Vec<Vec<BigInt>> = rays
            .iter()
            .zip(&weights)
            .map(|(v, w)| {
                let lcm = w.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
                let mut row: Vec<BigInt> = w.iter().map(|a| (a * BigRational::from_integer(lcm.clone())).to_integer()).collect();
                row.extend(v.iter().map(|&x| BigInt::from(x) * &lcm));
                row
            })
            .collect();
        let implicit = (0..rays.len())
            .map(|r| {
                let mut cs: Vec<Constraint> = normals
                    .iter()
                    .map(|a| Constraint {
                        normal: a.clone(),
                        bound: BigRational::zero(),
                    })
                    .collect();
                cs.push(Constraint {
                    normal: normals[r].clone(),
                    bound: BigRational::one(),
                });
                let p = RationalPolyhedron::new(s + rank, cs).expect("consistent lengths");
                Ok(p.is_empty())
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(SectionCone {
            rank,
            rays,
            weights,
            implicit,
        })
    }

    /// Rays whose inequality is an implicit equality of the cone.
    pub fn implicit_equalities(&self) -> Vec<usize> {
        (0..self.implicit.len()).filter(|&r| self.implicit[r]).collect()
    }

    /// Whether the cone is full-dimensional in `R^s x M_R`.
    pub fn is_full_dimensional(&self) -> bool {
        !self.implicit.iter().any(|&b| b)
    }

    fn offsets(&self, n: &[i64]) -> Vec<BigRational> {
        self.weights
            .iter()
            .map(|w| {
                w.iter()
                    .zip(n)
                    .map(|(a, &k)| a * BigRational::from_integer(BigInt::from(k)))
                    .sum()
            })
            .collect()
    }

    /// Number of monomials of degree `n`: lattice points of the slice of `C`.
    pub fn slice_count(&self, n: &[i64]) -> Result<u64> {
        self.check_degree(n)?;
        let cs = self
            .rays
            .iter()
            .zip(self.offsets(n))
            .map(|(v, b)| Constraint {
                normal: v.iter().map(|&x| BigInt::from(x)).collect(),
                bound: -b,
            })
            .collect();
        RationalPolyhedron::new(self.rank, cs)?.count_lattice_points()
    }

    /// Number of lattice points `u` with `(n, u)` in the relative interior
    /// of `C`: the dimension of the canonical module in degree `n`.
    pub fn interior_count(&self, n: &[i64]) -> Result<u64> {
        self.check_degree(n)?;
        let mut cs = Vec::new();
        for ((v, b), &eq) in self.rays.iter().zip(self.offsets(n)).zip(&self.implicit) {
            let normal: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            // <u, v> + b >= 0 (equality) or > 0 (strict)
            if eq {
                if !b.is_integer() {
                    return Ok(0);
                }
                cs.push(Constraint {
                    normal: normal.iter().map(|x| -x).collect(),
                    bound: b.clone(),
                });
                cs.push(Constraint {
                    normal,
                    bound: -b,
                });
            } else {
                let strict = (-b).floor() + BigRational::one();
                cs.push(Constraint {
                    normal,
                    bound: strict,
                });
            }
        }
        RationalPolyhedron::new(self.rank, cs)?.count_lattice_points()
    }

    fn check_degree(&self, n: &[i64]) -> Result<()> {
        let s = self.weights.first().map_or(0, Vec::len);
        if n.len() != s {
            return Err(Error::DimensionMismatch {
                expected: s,
                found: n.len(),
            });
        }
        Ok(())
    }
}
