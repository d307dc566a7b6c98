use num_rational::BigRational;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::lattice::{FGAbelianGroup, GroupElement};
use crate::toric::ToricVariety;

/// What a multi-section ring needs to know about its variety `X`.
///
/// Divisors are coefficient vectors over a fixed basis of divisors chosen by
/// the backend; `class_group` projects that lattice onto `Cl(X)`.
pub trait VarietyBackend: Send + Sync + std::fmt::Debug {
    /// Short human-readable description.
    fn describe(&self) -> String;

    fn dimension(&self) -> usize;

    /// Length of divisor coefficient vectors.
    fn divisor_len(&self) -> usize;

    fn class_group(&self) -> &FGAbelianGroup;

    fn canonical_divisor(&self) -> Divisor;

    /// `h^0(X, O_X(D))`. Backends that accept Q-divisors round down
    /// coefficientwise first.
    fn section_dimension(&self, d: &Divisor) -> Result<u64>;

    /// Whether `D` is certified to be an ample Cartier divisor.
    fn is_ample_cartier(&self, d: &Divisor) -> Result<bool>;

    /// Whether non-integral coefficients are meaningful for this backend.
    fn supports_rational_divisors(&self) -> bool {
        false
    }

    /// Whether `section_dimension` is available at all.
    fn has_sections(&self) -> bool {
        true
    }

    fn as_toric(&self) -> Option<&ToricVariety> {
        None
    }

    fn check_divisor(&self, d: &Divisor) -> Result<()> {
        if d.len() != self.divisor_len() {
            return Err(Error::DimensionMismatch {
                expected: self.divisor_len(),
                found: d.len(),
            });
        }
        if !self.supports_rational_divisors() && !d.is_integral() {
            return Err(Error::NonIntegral);
        }
        Ok(())
    }

    /// Class of an integral divisor in `Cl(X)`.
    fn divisor_class(&self, d: &Divisor) -> Result<GroupElement> {
        self.check_divisor(d)?;
        self.class_group().project(&d.integral_coeffs()?)
    }

    /// Free part of the class of a Q-divisor, as rationals. Torsion is
    /// invisible after tensoring with Q.
    fn rational_class(&self, d: &Divisor) -> Result<Vec<BigRational>> {
        self.check_divisor(d)?;
        let g = self.class_group();
        let p = g.projection();
        Ok((0..g.free_rank())
            .map(|i| {
                p.row(i)
                    .iter()
                    .zip(d.coeffs())
                    .map(|(a, c)| BigRational::from_integer(a.clone()) * c)
                    .sum()
            })
            .collect())
    }
}
