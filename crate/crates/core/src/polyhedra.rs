//! Rational polyhedra `{u : <a_i, u> >= b_i}` with integer normals.
//!
//! Boundedness and emptiness are decided exactly by Fourier-Motzkin
//! elimination; lattice points are enumerated by filtering the integer
//! bounding box the projections produce. The polytopes met at desk scale
//! are tiny, so nothing cleverer is needed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `<normal, u> >= bound`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub normal: Vec<BigInt>,
    pub bound: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolyhedron {
    dim: usize,
    constraints: Vec<Constraint>,
    /// Set when normalization met a `0 >= positive` row.
    infeasible: bool,
}

/// Outcome of [`RationalPolyhedron::bounding_box`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoxOutcome {
    /// No rational points at all.
    Empty,
    Unbounded,
    /// Per-coordinate integer ranges `[lo, hi]` containing every lattice
    /// point. A range with `lo > hi` means the polyhedron is rationally
    /// nonempty but has no lattice points.
    Bounded(Vec<(BigInt, BigInt)>),
}

impl RationalPolyhedron {
    pub fn new(dim: usize, constraints: Vec<Constraint>) -> Result<Self> {
        for c in &constraints {
            if c.normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: c.normal.len(),
                });
            }
        }
        let (constraints, infeasible) = normalize(constraints);
        Ok(RationalPolyhedron {
            dim,
            constraints,
            infeasible,
        })
    }

    /// Convenience constructor from small integer data.
    pub fn from_i64(dim: usize, rows: &[(Vec<i64>, i64)]) -> Result<Self> {
        let cs = rows
            .iter()
            .map(|(a, b)| Constraint {
                normal: a.iter().map(|&x| BigInt::from(x)).collect(),
                bound: BigRational::from_integer(BigInt::from(*b)),
            })
            .collect();
        Self::new(dim, cs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn contains(&self, u: &[BigInt]) -> bool {
        !self.infeasible
            && self.constraints.iter().all(|c| {
                let lhs: BigInt = c.normal.iter().zip(u).map(|(a, x)| a * x).sum();
                BigRational::from_integer(lhs) >= c.bound
            })
    }

    /// Rational emptiness, decided by eliminating every variable.
    pub fn is_empty(&self) -> bool {
        if self.infeasible {
            return true;
        }
        let mut cs = self.constraints.clone();
        for k in 0..self.dim {
            match eliminate(&cs, k) {
                Some(next) => cs = next,
                None => return true,
            }
        }
        false
    }

    /// Projection onto coordinate `k` as a rational interval; `None` bounds
    /// are infinite. Assumes the polyhedron is nonempty.
    pub fn coordinate_range(&self, k: usize) -> (Option<BigRational>, Option<BigRational>) {
        let mut cs = self.constraints.clone();
        for j in (0..self.dim).filter(|&j| j != k) {
            match eliminate(&cs, j) {
                Some(next) => cs = next,
                None => return (None, None),
            }
        }
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for c in &cs {
            let a = &c.normal[k];
            if a.is_positive() {
                let v = &c.bound / BigRational::from_integer(a.clone());
                if lo.as_ref().is_none_or(|l| v > *l) {
                    lo = Some(v);
                }
            } else if a.is_negative() {
                let v = &c.bound / BigRational::from_integer(a.clone());
                if hi.as_ref().is_none_or(|h| v < *h) {
                    hi = Some(v);
                }
            }
        }
        (lo, hi)
    }

    /// Projection onto a subset of coordinates, as a polyhedron in those
    /// coordinates (in the given order).
    pub fn project(&self, keep: &[usize]) -> RationalPolyhedron {
        let mut cs = self.constraints.clone();
        let mut infeasible = self.infeasible;
        for j in (0..self.dim).filter(|j| !keep.contains(j)) {
            match eliminate(&cs, j) {
                Some(next) => cs = next,
                None => {
                    infeasible = true;
                    cs.clear();
                    break;
                }
            }
        }
        let constraints = cs
            .into_iter()
            .map(|c| Constraint {
                normal: keep.iter().map(|&j| c.normal[j].clone()).collect(),
                bound: c.bound,
            })
            .collect();
        let (constraints, bad) = normalize(constraints);
        RationalPolyhedron {
            dim: keep.len(),
            constraints,
            infeasible: infeasible || bad,
        }
    }

    /// Exact emptiness and boundedness test plus an integer bounding box.
    pub fn bounding_box(&self) -> BoxOutcome {
        if self.is_empty() {
            return BoxOutcome::Empty;
        }
        let mut ranges = Vec::with_capacity(self.dim);
        for k in 0..self.dim {
            match self.coordinate_range(k) {
                (Some(lo), Some(hi)) => ranges.push((lo.ceil().to_integer(), hi.floor().to_integer())),
                _ => return BoxOutcome::Unbounded,
            }
        }
        BoxOutcome::Bounded(ranges)
    }

    /// All lattice points, in lexicographic order.
    pub fn lattice_points(&self) -> Result<Vec<Vec<BigInt>>> {
        let ranges = match self.bounding_box() {
            BoxOutcome::Empty => return Ok(Vec::new()),
            BoxOutcome::Unbounded => return Err(Error::Unbounded),
            BoxOutcome::Bounded(r) => r,
        };
        if ranges.iter().any(|(lo, hi)| lo > hi) {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        if self.dim == 0 {
            out.push(Vec::new());
            return Ok(out);
        }
        let mut point: Vec<BigInt> = ranges.iter().map(|(lo, _)| lo.clone()).collect();
        loop {
            if self.contains(&point) {
                out.push(point.clone());
            }
            // odometer, last coordinate fastest
            let mut k = self.dim;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                if point[k] < ranges[k].1 {
                    point[k] += 1;
                    for j in k + 1..self.dim {
                        point[j] = ranges[j].0.clone();
                    }
                    break;
                }
            }
        }
    }

    pub fn count_lattice_points(&self) -> Result<u64> {
        Ok(self.lattice_points()?.len() as u64)
    }

    /// Integer translate by `t`: `P + t`.
    pub fn translate(&self, t: &[BigInt]) -> RationalPolyhedron {
        let constraints = self
            .constraints
            .iter()
            .map(|c| {
                let shift: BigInt = c.normal.iter().zip(t).map(|(a, x)| a * x).sum();
                Constraint {
                    normal: c.normal.clone(),
                    bound: &c.bound + BigRational::from_integer(shift),
                }
            })
            .collect();
        RationalPolyhedron {
            dim: self.dim,
            constraints,
            infeasible: self.infeasible,
        }
    }
}

/// Divides each row by the gcd of its normal, drops trivially true rows,
/// and keeps only the tightest bound for each normal. Returns the rows and
/// whether a contradiction `0 >= b > 0` was seen.
fn normalize(constraints: Vec<Constraint>) -> (Vec<Constraint>, bool) {
    let mut best: BTreeMap<Vec<BigInt>, BigRational> = BTreeMap::new();
    let mut infeasible = false;
    for c in constraints {
        let g = c.normal.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            if c.bound.is_positive() {
                infeasible = true;
            }
            continue;
        }
        let normal: Vec<BigInt> = c.normal.iter().map(|x| x / &g).collect();
        let bound = c.bound / BigRational::from_integer(g);
        best.entry(normal)
            .and_modify(|b| {
                if bound > *b {
                    *b = bound.clone();
                }
            })
            .or_insert(bound);
    }
    let rows = best
        .into_iter()
        .map(|(normal, bound)| Constraint { normal, bound })
        .collect();
    (rows, infeasible)
}

/// One Fourier-Motzkin step removing variable `k`. `None` signals that a
/// contradiction appeared.
fn eliminate(cs: &[Constraint], k: usize) -> Option<Vec<Constraint>> {
    let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
    for c in cs {
        match c.normal[k].sign() {
            num_bigint::Sign::Plus => pos.push(c),
            num_bigint::Sign::Minus => neg.push(c),
            num_bigint::Sign::NoSign => keep.push(c.clone()),
        }
    }
    for p in &pos {
        for q in &neg {
            let wp = -&q.normal[k];
            let wq = p.normal[k].clone();
            let normal = p
                .normal
                .iter()
                .zip(&q.normal)
                .map(|(a, b)| &wp * a + &wq * b)
                .collect();
            let bound = BigRational::from_integer(wp.clone()) * &p.bound
                + BigRational::from_integer(wq.clone()) * &q.bound;
            keep.push(Constraint { normal, bound });
        }
    }
    let (rows, infeasible) = normalize(keep);
    (!infeasible).then_some(rows)
}

/// Lattice points as small integers; handy for tests and reports.
pub fn points_to_i64(points: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
    points
        .iter()
        .map(|p| p.iter().map(|x| x.to_i64().expect("small coordinate")).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(side: i64) -> RationalPolyhedron {
        RationalPolyhedron::from_i64(
            2,
            &[
                (vec![1, 0], 0),
                (vec![0, 1], 0),
                (vec![-1, 0], -side),
                (vec![0, -1], -side),
            ],
        )
        .unwrap()
    }

    #[test]
    fn square_box() {
        let b = square(2).bounding_box();
        assert_eq!(
            b,
            BoxOutcome::Bounded(vec![(0.into(), 2.into()), (0.into(), 2.into())])
        );
        assert_eq!(square(1).count_lattice_points().unwrap(), 4);
    }

    #[test]
    fn half_line_unbounded() {
        let p = RationalPolyhedron::from_i64(1, &[(vec![1], 0)]).unwrap();
        assert_eq!(p.bounding_box(), BoxOutcome::Unbounded);
        assert_eq!(p.lattice_points(), Err(Error::Unbounded));
    }

    #[test]
    fn contradictory_is_empty() {
        let p = RationalPolyhedron::from_i64(1, &[(vec![1], 1), (vec![-1], 0)]).unwrap();
        assert_eq!(p.bounding_box(), BoxOutcome::Empty);
        assert!(p.lattice_points().unwrap().is_empty());
    }

    #[test]
    fn simplex_points_lex() {
        let p = RationalPolyhedron::from_i64(
            2,
            &[(vec![1, 0], 0), (vec![0, 1], 0), (vec![-1, -1], -2)],
        )
        .unwrap();
        let pts = points_to_i64(&p.lattice_points().unwrap());
        assert_eq!(
            pts,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![2, 0]
            ]
        );
    }

    #[test]
    fn rational_nonempty_without_lattice_points() {
        // 1/3 <= x <= 2/3
        let p = RationalPolyhedron::new(
            1,
            vec![
                Constraint {
                    normal: vec![3.into()],
                    bound: BigRational::from_integer(1.into()),
                },
                Constraint {
                    normal: vec![(-3).into()],
                    bound: BigRational::from_integer((-2).into()),
                },
            ],
        )
        .unwrap();
        assert!(!p.is_empty());
        assert_eq!(p.count_lattice_points().unwrap(), 0);
    }

    #[test]
    fn normalization_dedups() {
        let p = RationalPolyhedron::from_i64(1, &[(vec![2], 2), (vec![1], 0), (vec![0], -1)]).unwrap();
        assert_eq!(p.constraints().len(), 1);
        assert_eq!(p.constraints()[0].bound, BigRational::from_integer(1.into()));
    }

    #[test]
    fn zero_dimensional() {
        let p = RationalPolyhedron::from_i64(0, &[]).unwrap();
        assert_eq!(p.count_lattice_points().unwrap(), 1);
        let q = RationalPolyhedron::from_i64(0, &[(vec![], 1)]).unwrap();
        assert_eq!(q.count_lattice_points().unwrap(), 0);
    }
}
