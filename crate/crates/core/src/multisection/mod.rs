//! Multi-section rings `R = R(X; D_1, ..., D_s)` with
//! `R_n = H^0(X, O_X(sum n_i D_i))`, their modules
//! `[M_F]_n = H^0(X, O_X(sum n_i D_i + F))`, and the canonical module.
//!
//! Under three hypotheses the canonical module is `M_{K_X}`:
//! the classes `D_1, ..., D_s` are linearly independent over `Z`, some
//! integer combination of them is ample Cartier, and `R` is Noetherian.
//! The first is checked exactly on construction, the second is searched for
//! in a bounded box (see [`RingOptions`]), the third is assumed.

mod table;

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

pub use self::table::{DegreeBox, GradedDimTable};
use crate::backend::VarietyBackend;
use crate::cohomology;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::lattice::{
    determinant, hnf, rational_inverse, rational_rank, sublattice_membership, GroupElement,
    IntMatrix, Quotient,
};
use crate::toric::SectionCone;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingOptions {
    /// Ample witnesses are searched among `a` with `|a_i| <= witness_bound`.
    pub witness_bound: i64,
    /// Refuse canonical-module queries when no witness was found. When
    /// false, results are computed anyway and callers are expected to
    /// report the missing hypothesis.
    pub require_witness: bool,
}

impl Default for RingOptions {
    fn default() -> Self {
        RingOptions {
            witness_bound: 8,
            require_witness: true,
        }
    }
}

/// The standing hypotheses a result depends on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypotheses {
    pub classes_independent: bool,
    pub ample_witness: Option<Vec<i64>>,
    pub witness_bound: i64,
    pub noetherian_assumed: bool,
}

#[derive(Clone, Debug)]
pub struct MultiSectionRing {
    backend: Arc<dyn VarietyBackend>,
    divisors: Vec<Divisor>,
    classes: Option<Vec<GroupElement>>,
    ample_witness: Option<Vec<i64>>,
    options: RingOptions,
    independence_checked: bool,
}

/// Whether `omega_R` is free of rank one, i.e. `K_X` lies in the lattice
/// spanned by the `D_i` in `Cl(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessVerdict {
    pub free: bool,
    /// `c` with `K_X ~ sum c_i D_i`.
    pub coefficients: Option<Vec<BigInt>>,
    /// Degree of a generator of `omega_R`: `-c`. Then
    /// `dim omega_n = dim R_{n - e}`.
    pub generator_degree: Option<Vec<BigInt>>,
    /// `t` with `omega_R = R(t)`, where `R(t)_n = R_{n + t}`; equal to `c`.
    pub twist: Option<Vec<BigInt>>,
    pub hypotheses: Hypotheses,
}

/// How the canonical module of a restricted ring was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaMethod {
    /// `M_{K_X}` of the restricted ring, valid because its degree lattice
    /// contains an ample witness.
    CanonicalDivisor,
    /// Lattice points in the relative interior of the section cone of a
    /// toric ring. Needs no ample divisor.
    SemigroupInterior,
}

#[derive(Clone, Debug)]
pub struct RestrictionReport {
    pub sublattice: Vec<Vec<i64>>,
    /// Ample witness of the restricted ring, in sublattice coordinates.
    pub ample_in_sublattice: Option<Vec<i64>>,
    pub method: OmegaMethod,
    /// `m -> dim (omega_R)_{sum m_j F_j}`.
    pub restricted: GradedDimTable,
    /// `m -> dim (omega_S)_m` for the ring `S` on the sublattice.
    pub subring: GradedDimTable,
    pub mismatches: Vec<Vec<i64>>,
}

impl RestrictionReport {
    pub fn agree(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub degree_box: DegreeBox,
    /// Pairs `{n, -n}` examined.
    pub pairs_checked: usize,
    /// `n` with `R_n != 0` and `R_{-n} != 0`, in the order examined.
    pub violations: Vec<Vec<i64>>,
}

impl ProbeReport {
    pub fn first_violation(&self) -> Option<&[i64]> {
        self.violations.first().map(Vec::as_slice)
    }
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    pub factors: Vec<usize>,
    /// `n -> dim H^{top}_m(R)_n`.
    pub local: GradedDimTable,
    /// `n -> h^{dim X}(X, O(sum n_i D_i))` from Bott and Kuenneth.
    pub oracle: GradedDimTable,
    pub mismatches: Vec<Vec<i64>>,
}

impl DualityReport {
    pub fn agree(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn small(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Unsupported(format!("integer {x} does not fit in 64 bits")))
}

/// Vectors of `[-k, k]^s` with max-norm exactly `k`, lexicographically.
fn shell(s: usize, k: i64) -> Vec<Vec<i64>> {
    DegreeBox::cube(s, -k, k)
        .expect("k >= 0")
        .degrees()
        .into_iter()
        .filter(|a| a.iter().any(|x| x.abs() == k))
        .collect()
}

fn max_norm(n: &[i64]) -> i64 {
    n.iter().map(|x| x.abs()).max().unwrap_or(0)
}

fn find_witness(
    backend: &dyn VarietyBackend,
    divisors: &[Divisor],
    bound: i64,
) -> Result<Option<Vec<i64>>> {
    for k in 1..=bound {
        let found = shell(divisors.len(), k).into_par_iter().find_map_first(|a| {
            let d = Divisor::combination(divisors, &a, None);
            match backend.is_ample_cartier(&d) {
                Ok(true) => Some(Ok(a)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        });
        if let Some(r) = found {
            return r.map(Some);
        }
    }
    Ok(None)
}

/// Exact check that no nonzero integer vector `n` has `sum n_i D_i ~ 0`
/// (over Q for Q-divisors). Returns such a relation when one exists.
fn dependency(backend: &dyn VarietyBackend, divisors: &[Divisor]) -> Result<Option<Vec<i64>>> {
    let rows: Vec<Vec<BigRational>> = divisors
        .iter()
        .map(|d| backend.rational_class(d))
        .collect::<Result<_>>()?;
    let s = divisors.len();
    if rational_rank(&rows) == s {
        return Ok(None);
    }
    let r = backend.class_group().free_rank();
    let scales: Vec<BigInt> = rows
        .iter()
        .map(|row| row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom())))
        .collect();
    let kernel: Vec<BigInt> = if r == 0 {
        let mut v = vec![BigInt::zero(); s];
        v[0] = BigInt::one();
        v
    } else {
        let m = IntMatrix::from_rows(
            s,
            r,
            rows.iter()
                .zip(&scales)
                .map(|(row, l)| {
                    row.iter()
                        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
                        .collect()
                })
                .collect(),
        );
        let (_, u) = hnf(&m);
        u.row(s - 1).to_vec()
    };
    let mut rel: Vec<BigInt> = kernel.iter().zip(&scales).map(|(k, l)| k * l).collect();
    let g = rel.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in &mut rel {
            *x /= &g;
        }
    }
    if let Some(exponent) = backend.class_group().torsion().last() {
        for x in &mut rel {
            *x *= exponent;
        }
    }
    Ok(Some(rel.iter().map(small).collect::<Result<_>>()?))
}

impl MultiSectionRing {
    pub fn new(backend: Arc<dyn VarietyBackend>, divisors: Vec<Divisor>) -> Result<Self> {
        Self::with_options(backend, divisors, RingOptions::default())
    }

    pub fn with_options(
        backend: Arc<dyn VarietyBackend>,
        divisors: Vec<Divisor>,
        options: RingOptions,
    ) -> Result<Self> {
        Self::build(backend, divisors, options, true)
    }

    /// Skips the independence check. Only useful to exhibit what goes wrong
    /// without it.
    pub fn new_unchecked(
        backend: Arc<dyn VarietyBackend>,
        divisors: Vec<Divisor>,
        options: RingOptions,
    ) -> Result<Self> {
        Self::build(backend, divisors, options, false)
    }

    fn build(
        backend: Arc<dyn VarietyBackend>,
        divisors: Vec<Divisor>,
        options: RingOptions,
        check: bool,
    ) -> Result<Self> {
        if divisors.is_empty() {
            return Err(Error::NoDivisors);
        }
        for d in &divisors {
            backend.check_divisor(d)?;
        }
        if check {
            if let Some(relation) = dependency(backend.as_ref(), &divisors)? {
                return Err(Error::DependentClasses { relation });
            }
        }
        let classes = if divisors.iter().all(Divisor::is_integral) {
            Some(
                divisors
                    .iter()
                    .map(|d| backend.divisor_class(d))
                    .collect::<Result<_>>()?,
            )
        } else {
            None
        };
        let ample_witness = find_witness(backend.as_ref(), &divisors, options.witness_bound)?;
        Ok(MultiSectionRing {
            backend,
            divisors,
            classes,
            ample_witness,
            options,
            independence_checked: check,
        })
    }

    /// Number of grading axes `s`.
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    pub fn backend(&self) -> &Arc<dyn VarietyBackend> {
        &self.backend
    }

    pub fn divisors(&self) -> &[Divisor] {
        &self.divisors
    }

    /// Classes in `Cl(X)`; `None` for Q-divisors.
    pub fn classes(&self) -> Option<&[GroupElement]> {
        self.classes.as_deref()
    }

    pub fn ample_witness(&self) -> Option<&[i64]> {
        self.ample_witness.as_deref()
    }

    pub fn noetherian_assumed(&self) -> bool {
        true
    }

    pub fn options(&self) -> RingOptions {
        self.options
    }

    pub fn hypotheses(&self) -> Hypotheses {
        Hypotheses {
            classes_independent: self.independence_checked,
            ample_witness: self.ample_witness.clone(),
            witness_bound: self.options.witness_bound,
            noetherian_assumed: self.noetherian_assumed(),
        }
    }

    fn check_degree(&self, n: &[i64]) -> Result<()> {
        if n.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: n.len(),
            });
        }
        Ok(())
    }

    fn check_box(&self, b: &DegreeBox) -> Result<()> {
        if b.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: b.rank(),
            });
        }
        Ok(())
    }

    fn witness_required(&self) -> Result<()> {
        if self.options.require_witness && self.ample_witness.is_none() {
            return Err(Error::NoAmpleWitness {
                bound: self.options.witness_bound,
            });
        }
        Ok(())
    }

    fn integral_classes(&self) -> Result<&[GroupElement]> {
        self.classes.as_deref().ok_or(Error::NonIntegral)
    }

    /// `sum n_i D_i`.
    pub fn degree_divisor(&self, n: &[i64]) -> Result<Divisor> {
        self.check_degree(n)?;
        Ok(Divisor::combination(&self.divisors, n, None))
    }

    /// `dim R_n`.
    pub fn graded_dimension(&self, n: &[i64]) -> Result<u64> {
        self.backend.section_dimension(&self.degree_divisor(n)?)
    }

    /// `dim [M_F]_n = h^0(sum n_i D_i + F)`.
    pub fn module_piece_dimension(&self, f: &Divisor, n: &[i64]) -> Result<u64> {
        self.backend.check_divisor(f)?;
        self.check_degree(n)?;
        self.backend
            .section_dimension(&Divisor::combination(&self.divisors, n, Some(f)))
    }

    /// `dim (omega_R)_n`. For Q-divisors this is [`Self::q_canonical_piece`].
    pub fn canonical_piece_dimension(&self, n: &[i64]) -> Result<u64> {
        self.witness_required()?;
        if self.classes.is_some() {
            self.module_piece_dimension(&self.backend.canonical_divisor(), n)
        } else {
            self.q_canonical_piece(n)
        }
    }

    /// `dim H^{dim R}_m(R)_n = dim (omega_R)_{-n}` by graded duality.
    pub fn top_local_cohomology_dim(&self, n: &[i64]) -> Result<u64> {
        let neg: Vec<i64> = n.iter().map(|x| -x).collect();
        self.canonical_piece_dimension(&neg)
    }

    pub fn graded_table(&self, b: &DegreeBox) -> Result<GradedDimTable> {
        self.check_box(b)?;
        GradedDimTable::fill(b, |n| self.graded_dimension(n))
    }

    pub fn module_table(&self, f: &Divisor, b: &DegreeBox) -> Result<GradedDimTable> {
        self.check_box(b)?;
        self.backend.check_divisor(f)?;
        GradedDimTable::fill(b, |n| self.module_piece_dimension(f, n))
    }

    pub fn canonical_table(&self, b: &DegreeBox) -> Result<GradedDimTable> {
        self.check_box(b)?;
        self.witness_required()?;
        GradedDimTable::fill(b, |n| self.canonical_piece_dimension(n))
    }

    /// `h^0(floor(sum n_i D_i + K_X + sum_V (q_V - 1)/q_V V))` where `q_V`
    /// is the lcm of the denominators of the coefficients of `V` in the
    /// `D_i`. Prime divisors `V` are the coordinates of the backend's
    /// divisor basis, so non-integral rings need a toric backend.
    pub fn q_canonical_piece(&self, n: &[i64]) -> Result<u64> {
        self.witness_required()?;
        self.check_degree(n)?;
        if self.classes.is_none() && self.backend.as_toric().is_none() {
            return Err(Error::Unsupported(
                "Q-divisor rings are only supported on toric varieties".into(),
            ));
        }
        let len = self.backend.divisor_len();
        let correction: Vec<BigRational> = (0..len)
            .map(|v| {
                let q = self
                    .divisors
                    .iter()
                    .fold(BigInt::one(), |acc, d| acc.lcm(d.coeffs()[v].denom()));
                BigRational::new(q.clone() - 1, q)
            })
            .collect();
        let k = self.backend.canonical_divisor().add(&Divisor::new(correction));
        let d = Divisor::combination(&self.divisors, n, Some(&k)).floor();
        self.backend.section_dimension(&d)
    }

    /// Decides whether `omega_R` is free by lattice membership of `K_X`
    /// among the `D_i` in `Cl(X)`.
    pub fn freeness_test(&self) -> Result<FreenessVerdict> {
        self.witness_required()?;
        let classes = self.integral_classes()?;
        let g = self.backend.class_group();
        let k = self.backend.divisor_class(&self.backend.canonical_divisor())?;
        let coefficients = g.membership(classes, &k)?;
        let negated = coefficients
            .as_ref()
            .map(|c| c.iter().map(|x| -x).collect());
        Ok(FreenessVerdict {
            free: coefficients.is_some(),
            generator_degree: negated,
            twist: coefficients.clone(),
            coefficients,
            hypotheses: self.hypotheses(),
        })
    }

    /// All `v` in `[-bound, bound]^s` with `dim omega_n = dim R_{n - v}`
    /// for every `n` in the box. A redundant check on
    /// [`Self::freeness_test`], which decides freeness exactly.
    pub fn reconciling_shifts(&self, b: &DegreeBox, bound: i64) -> Result<Vec<Vec<i64>>> {
        let omega = self.canonical_table(b)?;
        let graded = self.graded_table(&b.widen(bound))?;
        let shifts = DegreeBox::cube(self.rank(), -bound, bound)?.degrees();
        Ok(shifts
            .into_par_iter()
            .filter(|v| {
                omega.iter().all(|(n, w)| {
                    let m: Vec<i64> = n.iter().zip(v).map(|(a, b)| a - b).collect();
                    graded.get(&m) == Some(w)
                })
            })
            .collect())
    }

    /// `Cl(R) = Cl(X) / <D_1, ..., D_s>`.
    pub fn cl_r_group(&self) -> Result<Quotient> {
        self.witness_required()?;
        let classes = self.integral_classes()?;
        Ok(self.backend.class_group().quotient(classes))
    }

    /// Class of the divisorial ideal `M_F` in `Cl(R)`.
    pub fn class_in_cl_r(&self, f: &Divisor) -> Result<GroupElement> {
        self.backend.check_divisor(f)?;
        let q = self.cl_r_group()?;
        q.group.project(&f.integral_coeffs()?)
    }

    /// The ring on `F_j = sum_i sublattice[j][i] D_i`.
    pub fn restrict(&self, sublattice: &[Vec<i64>]) -> Result<MultiSectionRing> {
        let fs = self.sublattice_divisors(sublattice)?;
        Self::with_options(self.backend.clone(), fs, self.options)
    }

    fn sublattice_divisors(&self, sublattice: &[Vec<i64>]) -> Result<Vec<Divisor>> {
        sublattice
            .iter()
            .map(|row| self.degree_divisor(row))
            .collect()
    }

    /// Compares `omega` of the ring on a sublattice `L` with the restriction
    /// of `omega_R` to `L`, over a box of sublattice coordinates.
    pub fn restriction_check(
        &self,
        sublattice: &[Vec<i64>],
        b: &DegreeBox,
    ) -> Result<RestrictionReport> {
        self.witness_required()?;
        if b.rank() != sublattice.len() {
            return Err(Error::DimensionMismatch {
                expected: sublattice.len(),
                found: b.rank(),
            });
        }
        let options = RingOptions {
            require_witness: false,
            ..self.options
        };
        let sub = Self::with_options(self.backend.clone(), self.sublattice_divisors(sublattice)?, options)?;
        let lift = |m: &[i64]| -> Vec<i64> {
            (0..self.rank())
                .map(|i| sublattice.iter().zip(m).map(|(row, k)| row[i] * k).sum())
                .collect()
        };
        let restricted = GradedDimTable::fill(b, |m| self.canonical_piece_dimension(&lift(m)))?;
        let (method, subring) = if sub.ample_witness.is_some() {
            (
                OmegaMethod::CanonicalDivisor,
                GradedDimTable::fill(b, |m| sub.canonical_piece_dimension(m))?,
            )
        } else if let Some(toric) = self.backend.as_toric() {
            let cone = SectionCone::new(toric, &sub.divisors)?;
            (
                OmegaMethod::SemigroupInterior,
                GradedDimTable::fill(b, |m| cone.interior_count(m))?,
            )
        } else {
            return Err(Error::NoAmpleWitness {
                bound: self.options.witness_bound,
            });
        };
        let mismatches = restricted.differences(&subring);
        Ok(RestrictionReport {
            sublattice: sublattice.to_vec(),
            ample_in_sublattice: sub.ample_witness,
            method,
            restricted,
            subring,
            mismatches,
        })
    }

    /// Looks for `n != 0` with `R_n != 0` and `R_{-n} != 0`, which cannot
    /// happen when the classes are independent. Degrees are examined by
    /// increasing max-norm, then lexicographically, one per pair `{n, -n}`.
    pub fn local_domain_probe(&self, b: &DegreeBox) -> Result<ProbeReport> {
        self.check_box(b)?;
        if !self.backend.has_sections() {
            return Err(Error::Unsupported(format!(
                "{} has no section dimensions to probe",
                self.backend.describe()
            )));
        }
        let mut degrees: Vec<Vec<i64>> = b
            .degrees()
            .into_iter()
            .filter(|n| n.iter().find(|x| **x != 0).is_some_and(|x| *x > 0))
            .filter(|n| b.contains(&n.iter().map(|x| -x).collect::<Vec<_>>()))
            .collect();
        degrees.sort_by(|a, c| max_norm(a).cmp(&max_norm(c)).then_with(|| a.cmp(c)));
        let flags: Vec<bool> = degrees
            .par_iter()
            .map(|n| {
                if self.graded_dimension(n)? == 0 {
                    return Ok(false);
                }
                let neg: Vec<i64> = n.iter().map(|x| -x).collect();
                Ok(self.graded_dimension(&neg)? > 0)
            })
            .collect::<Result<_>>()?;
        let violations = degrees
            .iter()
            .zip(&flags)
            .filter(|(_, &f)| f)
            .map(|(n, _)| n.clone())
            .collect();
        Ok(ProbeReport {
            degree_box: b.clone(),
            pairs_checked: degrees.len(),
            violations,
        })
    }

    /// Compares `dim H^{top}_m(R)_n` with the top cohomology of
    /// `O(sum n_i D_i)` from the closed-form oracle. Needs a shipped
    /// product of projective spaces.
    pub fn serre_duality_check(&self, b: &DegreeBox) -> Result<DualityReport> {
        self.check_box(b)?;
        let factors = self
            .backend
            .as_toric()
            .and_then(|t| t.product_factors())
            .ok_or_else(|| {
                Error::Unsupported(
                    "the cohomology oracle covers products of projective spaces only".into(),
                )
            })?
            .to_vec();
        self.integral_classes()?;
        let local = GradedDimTable::fill(b, |n| self.top_local_cohomology_dim(n))?;
        let oracle = GradedDimTable::fill(b, |n| {
            let class = self.backend.divisor_class(&self.degree_divisor(n)?)?;
            let twists: Vec<i64> = class.coords.iter().map(small).collect::<Result<_>>()?;
            let h = cohomology::top_dimension(&factors, &twists)?;
            h.to_u64()
                .ok_or_else(|| Error::Unsupported(format!("dimension {h} too large")))
        })?;
        let mismatches = local.differences(&oracle);
        Ok(DualityReport {
            factors,
            local,
            oracle,
            mismatches,
        })
    }
}

/// The Cox ring of `X`: the multi-section ring on a basis of `Cl(X)`.
///
/// Without an explicit basis, divisors lifting the standard basis of the
/// class group coordinates are used.
pub fn cox_ring(
    backend: Arc<dyn VarietyBackend>,
    basis: Option<Vec<Divisor>>,
    options: RingOptions,
) -> Result<MultiSectionRing> {
    let g = backend.class_group();
    if !g.is_free() {
        return Err(Error::TorsionClassGroup(
            g.torsion().iter().map(ToString::to_string).collect(),
        ));
    }
    let r = g.free_rank();
    let basis = match basis {
        Some(b) => {
            if b.len() != r {
                return Err(Error::NotClassGroupBasis);
            }
            let cols: Vec<Vec<BigInt>> = b
                .iter()
                .map(|d| Ok(backend.divisor_class(d)?.coords))
                .collect::<Result<_>>()?;
            if !determinant(&IntMatrix::from_columns(r, &cols)).abs().is_one() {
                return Err(Error::NotClassGroupBasis);
            }
            b
        }
        None => {
            let p = g.projection();
            let images: Vec<Vec<BigInt>> = (0..p.cols()).map(|j| p.column(j)).collect();
            (0..r)
                .map(|j| {
                    let mut e = vec![BigInt::zero(); r];
                    e[j] = BigInt::one();
                    let x = sublattice_membership(&images, &e)?
                        .expect("the class map is surjective");
                    Ok(Divisor::new(x.into_iter().map(BigRational::from_integer).collect()))
                })
                .collect::<Result<_>>()?
        }
    };
    MultiSectionRing::with_options(backend, basis, options)
}

/// `-K_X` in the coordinates of the chosen basis of `Cl(X)`: the degree of
/// the generator of the canonical module of the Cox ring.
pub fn cox_canonical_degree(
    backend: Arc<dyn VarietyBackend>,
    basis: Option<Vec<Divisor>>,
) -> Result<Vec<BigInt>> {
    let ring = cox_ring(backend.clone(), basis, RingOptions::default())?;
    let verdict = ring.freeness_test()?;
    let degree = verdict
        .generator_degree
        .expect("K_X lies in the span of a basis of Cl(X)");
    let r = ring.rank();
    let classes = ring.integral_classes()?;
    let cols: Vec<Vec<BigInt>> = classes.iter().map(|c| c.coords.clone()).collect();
    let inv = rational_inverse(&IntMatrix::from_columns(r, &cols)).expect("basis");
    let k = backend.divisor_class(&backend.canonical_divisor())?;
    let direct: Vec<BigInt> = inv
        .iter()
        .map(|row| {
            let x: BigRational = row
                .iter()
                .zip(&k.coords)
                .map(|(a, b)| a * BigRational::from_integer(b.clone()))
                .sum();
            -x.to_integer()
        })
        .collect();
    assert_eq!(degree, direct, "membership and inversion disagree");
    Ok(degree)
}
