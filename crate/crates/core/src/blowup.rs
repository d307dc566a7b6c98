//! `X = Bl_{t_1, ..., t_r} P^n`, the blow-up of projective space at distinct
//! rational points.
//!
//! `Cl(X)` is free on `E_1, ..., E_r, A` (exceptional divisors, then the
//! pull-back of a hyperplane), and for `c_i >= 0`
//! `h^0(dA - sum c_i E_i)` is the dimension of the space of degree-`d` forms
//! vanishing to order at least `c_i` at `t_i`. Negative `c_i` impose
//! nothing: `E_i` is a fixed component of `|dA + k E_i|` for `k > 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::backend::VarietyBackend;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::lattice::{rational_rank, FGAbelianGroup};

/// Distinct points of `P^n` in homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    n: usize,
    points: Vec<Vec<BigRational>>,
}

impl PointConfig {
    pub fn new(n: usize, points: Vec<Vec<BigRational>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPointConfig("projective dimension must be positive".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != n + 1 {
                return Err(Error::InvalidPointConfig(format!(
                    "point {i} has {} coordinates, expected {}",
                    p.len(),
                    n + 1
                )));
            }
            if p.iter().all(Zero::is_zero) {
                return Err(Error::InvalidPointConfig(format!("point {i} is the zero vector")));
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if rational_rank(&[points[i].clone(), points[j].clone()]) < 2 {
                    return Err(Error::InvalidPointConfig(format!(
                        "points {i} and {j} are the same projective point"
                    )));
                }
            }
        }
        Ok(PointConfig { n, points })
    }

    pub fn from_i64<P: AsRef<[i64]>>(n: usize, points: &[P]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| {
                p.as_ref()
                    .iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        Self::new(n, pts)
    }

    /// The coordinate points `(1:0:...:0), ..., ` (the first `r` of them).
    pub fn coordinate_points(n: usize, r: usize) -> Result<Self> {
        if r > n + 1 {
            return Err(Error::InvalidPointConfig(format!(
                "P^{n} has only {} coordinate points",
                n + 1
            )));
        }
        let pts: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..=n).map(|j| i64::from(i == j)).collect())
            .collect();
        Self::from_i64(n, &pts)
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<BigRational>] {
        &self.points
    }
}

/// `dA - sum_i c_i E_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlowupDivisor {
    pub d: i64,
    pub c: Vec<i64>,
}

impl BlowupDivisor {
    pub fn new(d: i64, c: Vec<i64>) -> Self {
        BlowupDivisor { d, c }
    }

    /// From coordinates over `(E_1, ..., E_r, A)`.
    pub fn from_divisor(div: &Divisor) -> Result<Self> {
        let coeffs = div.integral_coeffs()?;
        let (a, es) = coeffs.split_last().ok_or_else(|| {
            Error::InvalidDivisor("blow-up divisors need at least the A coefficient".into())
        })?;
        let small = |x: &BigInt| {
            i64::try_from(x).map_err(|_| Error::InvalidDivisor(format!("coefficient {x} too large")))
        };
        Ok(BlowupDivisor {
            d: small(a)?,
            c: es.iter().map(|e| small(e).map(|v| -v)).collect::<Result<_>>()?,
        })
    }

    /// Coordinates over `(E_1, ..., E_r, A)`.
    pub fn to_divisor(&self) -> Divisor {
        let mut v: Vec<i64> = self.c.iter().map(|c| -c).collect();
        v.push(self.d);
        Divisor::from_i64(&v)
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exponent vectors of length `vars` and total degree `d`, lexicographically
/// descending.
fn monomials(vars: usize, d: usize) -> Vec<Vec<usize>> {
    if vars == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(vars - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Exponent vectors of length `vars` and total degree `< bound`.
fn multi_indices_below(vars: usize, bound: usize) -> Vec<Vec<usize>> {
    (0..bound).flat_map(|k| monomials(vars, k)).collect()
}

/// `h^0(X, O_X(dA - sum c_i E_i))`: the dimension of degree-`d` forms
/// vanishing to order `max(c_i, 0)` at each `t_i`.
///
/// When every point is a coordinate point the conditions are monomial and
/// the count is direct; otherwise this is [`section_dimension_by_rank`].
pub fn section_dimension_blowup(cfg: &PointConfig, div: &BlowupDivisor) -> Result<u64> {
    let axes: Option<Vec<usize>> = cfg.points.iter().map(|p| coordinate_axis(p)).collect();
    match axes {
        Some(axes) => section_dimension_monomial(cfg, &axes, div),
        None => section_dimension_by_rank(cfg, div),
    }
}

/// `Some(k)` when the point is `e_k` up to scaling.
fn coordinate_axis(p: &[BigRational]) -> Option<usize> {
    let mut nonzero = p.iter().enumerate().filter(|(_, x)| !x.is_zero());
    let (k, _) = nonzero.next()?;
    nonzero.next().is_none().then_some(k)
}

/// A monomial `x^alpha` vanishes to order `m` at `e_k` exactly when
/// `alpha_k <= d - m`, and distinct monomials impose independent
/// conditions, so sections are counted monomial by monomial.
fn section_dimension_monomial(
    cfg: &PointConfig,
    axes: &[usize],
    div: &BlowupDivisor,
) -> Result<u64> {
    if div.c.len() != cfg.len() {
        return Err(Error::DimensionMismatch {
            expected: cfg.len(),
            found: div.c.len(),
        });
    }
    if div.d < 0 {
        return Ok(0);
    }
    let mut cap = vec![div.d; cfg.n + 1];
    for (&k, &c) in axes.iter().zip(&div.c) {
        cap[k] = cap[k].min(div.d - c.max(0));
    }
    if cap.iter().any(|&x| x < 0) {
        return Ok(0);
    }
    // number of alpha with |alpha| = d and alpha_k <= cap[k]
    let d = div.d as usize;
    let mut ways = vec![0u64; d + 1];
    ways[0] = 1;
    for &c in &cap {
        let c = c as usize;
        let mut next = vec![0u64; d + 1];
        for (total, slot) in next.iter_mut().enumerate() {
            *slot = (0..=c.min(total)).map(|a| ways[total - a]).sum();
        }
        ways = next;
    }
    Ok(ways[d])
}

/// The same number as [`section_dimension_blowup`], always computed as
/// the corank of the Taylor-coefficient condition matrix. Vanishing is
/// imposed in the affine chart where the first nonzero coordinate of the
/// point is 1, and the rank is computed exactly.
pub fn section_dimension_by_rank(cfg: &PointConfig, div: &BlowupDivisor) -> Result<u64> {
    if div.c.len() != cfg.len() {
        return Err(Error::DimensionMismatch {
            expected: cfg.len(),
            found: div.c.len(),
        });
    }
    if div.d < 0 {
        return Ok(0);
    }
    let d = div.d as usize;
    let n = cfg.n;
    let mults: Vec<usize> = div.c.iter().map(|&c| c.max(0) as usize).collect();
    // A nonzero form of degree d has multiplicity at most d everywhere.
    if mults.iter().any(|&m| m > d) {
        return Ok(0);
    }
    let monos = monomials(n + 1, d);
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (pt, &m) in cfg.points.iter().zip(&mults) {
        if m == 0 {
            continue;
        }
        let pivot = pt.iter().position(|x| !x.is_zero()).expect("validated");
        let affine: Vec<BigRational> = pt.iter().map(|x| x / &pt[pivot]).collect();
        let free_vars: Vec<usize> = (0..=n).filter(|&j| j != pivot).collect();
        // powers[j][e] = t_j^e
        let powers: Vec<Vec<BigRational>> = affine
            .iter()
            .map(|t| (0..=d).map(|e| t.pow(e as i32)).collect())
            .collect();
        for beta in multi_indices_below(n, m) {
            let row = monos
                .iter()
                .map(|alpha| {
                    let mut acc = BigRational::one();
                    for (&j, &b) in free_vars.iter().zip(&beta) {
                        let a = alpha[j];
                        if a < b {
                            return BigRational::zero();
                        }
                        acc *= BigRational::from_integer(binomial(a as u64, b as u64));
                        acc *= &powers[j][a - b];
                        if acc.is_zero() {
                            return acc;
                        }
                    }
                    acc
                })
                .collect();
            rows.push(row);
        }
    }
    let rank = rational_rank(&rows);
    Ok((monos.len() - rank) as u64)
}

/// `K_X = (n - 1) sum E_i - (n + 1) A`.
pub fn canonical_divisor_blowup(cfg: &PointConfig) -> BlowupDivisor {
    let n = cfg.n as i64;
    BlowupDivisor::new(-(n + 1), vec![-(n - 1); cfg.len()])
}

/// The class group, free on `(E_1, ..., E_r, A)`.
pub fn class_group_blowup(cfg: &PointConfig) -> FGAbelianGroup {
    FGAbelianGroup::free(cfg.len() + 1)
}

#[derive(Clone, Debug)]
pub struct BlowupVariety {
    config: PointConfig,
    class_group: FGAbelianGroup,
}

impl BlowupVariety {
    pub fn new(config: PointConfig) -> Self {
        let class_group = class_group_blowup(&config);
        BlowupVariety {
            config,
            class_group,
        }
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    /// The divisor `E_i`.
    pub fn exceptional(&self, i: usize) -> Divisor {
        Divisor::basis(self.config.len() + 1, i)
    }

    /// The pull-back `A` of a hyperplane.
    pub fn hyperplane(&self) -> Divisor {
        Divisor::basis(self.config.len() + 1, self.config.len())
    }
}

impl VarietyBackend for BlowupVariety {
    fn describe(&self) -> String {
        format!(
            "blow-up of P^{} at {} point(s)",
            self.config.n,
            self.config.len()
        )
    }

    fn dimension(&self) -> usize {
        self.config.n
    }

    fn divisor_len(&self) -> usize {
        self.config.len() + 1
    }

    fn class_group(&self) -> &FGAbelianGroup {
        &self.class_group
    }

    fn canonical_divisor(&self) -> Divisor {
        canonical_divisor_blowup(&self.config).to_divisor()
    }

    fn section_dimension(&self, d: &Divisor) -> Result<u64> {
        self.check_divisor(d)?;
        section_dimension_blowup(&self.config, &BlowupDivisor::from_divisor(d)?)
    }

    /// Sufficient test: `dA - sum e_i E_i` with every `e_i >= 1` and
    /// `d >= sum e_i + 1` is ample. It is `(d - sum e_i) A + sum e_i (A - E_i)`,
    /// the pull-back of an ample class under the finite morphism
    /// `X -> P^n x prod_i P^{n-1}` given by `A` and the projections from the
    /// `t_i`. `X` is smooth, so every Weil divisor is Cartier.
    ///
    /// Divisors outside this region are reported as not certified.
    fn is_ample_cartier(&self, d: &Divisor) -> Result<bool> {
        self.check_divisor(d)?;
        let b = BlowupDivisor::from_divisor(d)?;
        let total: i64 = b.c.iter().sum();
        Ok(b.c.iter().all(|&e| e >= 1) && b.d > total)
    }
}
