//! Ready-made varieties and rings used throughout the tests, benches and
//! the command-line `examples` report.

use std::sync::Arc;

use crate::blowup::{BlowupVariety, PointConfig};
use crate::class_lattice::ClassLatticeVariety;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::multisection::{MultiSectionRing, RingOptions};
use crate::toric::{del_pezzo_6, p1_product, projective_space};

/// `R(P^1 x P^1; A_1, A_2) = k[x_0, x_1, y_0, y_1]` graded by bidegree.
pub fn cox_p1xp1() -> Result<MultiSectionRing> {
    let x = Arc::new(p1_product(2)?);
    MultiSectionRing::new(x, vec![Divisor::basis(4, 0), Divisor::basis(4, 2)])
}

/// The Segre-type ring `R(P^1 x P^1; aA_1 + bA_2)`.
pub fn segre_ring(a: i64, b: i64) -> Result<MultiSectionRing> {
    let x = Arc::new(p1_product(2)?);
    MultiSectionRing::new(x, vec![Divisor::from_i64(&[a, 0, b, 0])])
}

/// `R(P^1; pt) = k[s, t]`.
pub fn p1_point_ring() -> Result<MultiSectionRing> {
    let x = Arc::new(projective_space(1)?);
    MultiSectionRing::new(x, vec![Divisor::from_i64(&[1, 0])])
}

/// Blow-up of the weighted plane `P(a, b, c)` at a smooth point, known
/// through its class data in the basis `(A, E)`: `A` generates
/// `Cl(P(a, b, c))` and `E` is the exceptional curve.
///
/// The Mori cone is spanned by `E` and the strict transform of a curve of
/// degree `curve_degree` (in units of `A`) with multiplicity `curve_mult`
/// at the point; its self-intersection must be negative. Cartier classes
/// are those with `abc | d`.
pub fn weighted_plane_blowup(
    a: i64,
    b: i64,
    c: i64,
    curve_degree: i64,
    curve_mult: i64,
) -> Result<ClassLatticeVariety> {
    if a <= 0 || b <= 0 || c <= 0 || curve_degree <= 0 || curve_mult <= 0 {
        return Err(Error::InvalidDivisor("weights and curve data must be positive".into()));
    }
    let abc = a * b * c;
    if curve_degree * curve_degree >= abc * curve_mult * curve_mult {
        return Err(Error::InvalidDivisor(format!(
            "curve of degree {curve_degree} and multiplicity {curve_mult} is not negative on P({a},{b},{c})"
        )));
    }
    ClassLatticeVariety::new(
        format!("Bl P({a},{b},{c})"),
        2,
        vec!["A".into(), "E".into()],
        &[],
        vec![-(a + b + c), 1],
        // (dA + xE).E = -x > 0 and (dA + xE).C = (d deg + abc mult x) / abc > 0
        vec![vec![0, -1], vec![curve_degree, abc * curve_mult]],
        vec![(vec![1, 0], abc)],
    )
}

/// `P(2, 3, 5)` blown up at `(1:1:1)`; the negative curve is the strict
/// transform of `z = xy`.
pub fn weighted_plane_235() -> Result<ClassLatticeVariety> {
    weighted_plane_blowup(2, 3, 5, 5, 1)
}

/// Ample witnesses on the weighted planes need `abc | d`, which is out of
/// reach of the default search box.
pub const WEIGHTED_PLANE_WITNESS_BOUND: i64 = 64;

/// `R(X; -alpha E, beta A)` on a weighted-plane blow-up.
pub fn weighted_plane_ring(
    x: ClassLatticeVariety,
    alpha: i64,
    beta: i64,
) -> Result<MultiSectionRing> {
    MultiSectionRing::with_options(
        Arc::new(x),
        vec![Divisor::from_i64(&[0, -alpha]), Divisor::from_i64(&[beta, 0])],
        RingOptions {
            witness_bound: WEIGHTED_PLANE_WITNESS_BOUND,
            ..RingOptions::default()
        },
    )
}

/// `P^n` blown up at the first `r` coordinate points.
pub fn coordinate_blowup(n: usize, r: usize) -> Result<BlowupVariety> {
    Ok(BlowupVariety::new(PointConfig::coordinate_points(n, r)?))
}

/// `R(X; -sum m_i E_i, A)` on a point blow-up of `P^n`.
pub fn point_blowup_ring(x: BlowupVariety, m: &[i64]) -> Result<MultiSectionRing> {
    let r = x.config().len();
    if m.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            found: m.len(),
        });
    }
    let mut d1: Vec<i64> = m.iter().map(|k| -k).collect();
    d1.push(0);
    let mut d2 = vec![0; r];
    d2.push(1);
    MultiSectionRing::new(Arc::new(x), vec![Divisor::from_i64(&d1), Divisor::from_i64(&d2)])
}

/// Toric rays of dP6 carrying the exceptional curves over the coordinate
/// points `(1:0:0), (0:1:0), (0:0:1)` of `P^2`.
pub const DP6_EXCEPTIONAL_RAYS: [usize; 3] = [1, 3, 5];

/// `dA - c_1 E_1 - c_2 E_2 - c_3 E_3` as a torus-invariant divisor on dP6,
/// with `A` the pull-back of the line `x_1 = 0`.
pub fn dp6_divisor(d: i64, c: [i64; 3]) -> Divisor {
    let mut v = vec![0i64; 6];
    for r in [0, 1, 5] {
        v[r] += d;
    }
    for (ray, ci) in DP6_EXCEPTIONAL_RAYS.iter().zip(c) {
        v[*ray] -= ci;
    }
    Divisor::from_i64(&v)
}

/// The basis `(A, -E_1, -E_2, -E_3)` of `Cl(dP6)`.
pub fn dp6_basis() -> Vec<Divisor> {
    vec![
        dp6_divisor(1, [0, 0, 0]),
        dp6_divisor(0, [1, 0, 0]),
        dp6_divisor(0, [0, 1, 0]),
        dp6_divisor(0, [0, 0, 1]),
    ]
}

/// The Cox ring of dP6 on [`dp6_basis`].
pub fn dp6_cox() -> Result<MultiSectionRing> {
    crate::multisection::cox_ring(Arc::new(del_pezzo_6()?), Some(dp6_basis()), RingOptions::default())
}
