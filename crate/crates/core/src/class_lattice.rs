//! A variety known only through its class group data.
//!
//! Some surfaces are easy to describe at the level of `Cl(X)` (generators,
//! relations, `K_X`, the ample cone and the Cartier classes) while their
//! section spaces need Groebner-basis machinery. This backend supports every
//! class-level operation (freeness, `Cl(R)`, ample witnesses) and refuses
//! section dimensions.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::backend::VarietyBackend;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::lattice::{FGAbelianGroup, IntMatrix};

#[derive(Clone, Debug)]
pub struct ClassLatticeVariety {
    name: String,
    dimension: usize,
    generators: Vec<String>,
    class_group: FGAbelianGroup,
    canonical: Vec<i64>,
    /// Open cone: `<w, x> > 0` for every `w`.
    ample_cone: Vec<Vec<i64>>,
    /// `<w, x> = 0 (mod m)` for every `(w, m)`.
    cartier: Vec<(Vec<i64>, i64)>,
}

impl ClassLatticeVariety {
    /// `generators` name the coordinates of divisors; `relations` are
    /// columns spanning the principal divisors among them (may be empty).
    pub fn new(
        name: impl Into<String>,
        dimension: usize,
        generators: Vec<String>,
        relations: &[Vec<i64>],
        canonical: Vec<i64>,
        ample_cone: Vec<Vec<i64>>,
        cartier: Vec<(Vec<i64>, i64)>,
    ) -> Result<Self> {
        let m = generators.len();
        let check = |v: &[i64]| {
            if v.len() == m {
                Ok(())
            } else {
                Err(Error::DimensionMismatch {
                    expected: m,
                    found: v.len(),
                })
            }
        };
        check(&canonical)?;
        for r in relations {
            check(r)?;
        }
        for w in &ample_cone {
            check(w)?;
        }
        for (w, modulus) in &cartier {
            check(w)?;
            if *modulus <= 0 {
                return Err(Error::InvalidDivisor(format!(
                    "Cartier modulus must be positive, got {modulus}"
                )));
            }
        }
        if ample_cone.is_empty() {
            return Err(Error::InvalidDivisor(
                "an ample cone needs at least one inequality".into(),
            ));
        }
        let class_group = if relations.is_empty() {
            FGAbelianGroup::free(m)
        } else {
            let cols: Vec<Vec<BigInt>> = relations.iter().map(|r| crate::lattice::big_vec(r)).collect();
            FGAbelianGroup::cokernel(&IntMatrix::from_columns(m, &cols))
        };
        Ok(ClassLatticeVariety {
            name: name.into(),
            dimension,
            generators,
            class_group,
            canonical,
            ample_cone,
            cartier,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl VarietyBackend for ClassLatticeVariety {
    fn describe(&self) -> String {
        format!("{} (class data over {})", self.name, self.generators.join(", "))
    }

    fn dimension(&self) -> usize {
        self.dimension
    }

    fn divisor_len(&self) -> usize {
        self.generators.len()
    }

    fn class_group(&self) -> &FGAbelianGroup {
        &self.class_group
    }

    fn canonical_divisor(&self) -> Divisor {
        Divisor::from_i64(&self.canonical)
    }

    fn section_dimension(&self, _d: &Divisor) -> Result<u64> {
        Err(Error::Unsupported(format!(
            "{} carries class data only; section dimensions are not available",
            self.name
        )))
    }

    fn has_sections(&self) -> bool {
        false
    }

    fn is_ample_cartier(&self, d: &Divisor) -> Result<bool> {
        self.check_divisor(d)?;
        let x = d.integral_coeffs()?;
        let pair = |w: &[i64]| -> BigInt { w.iter().zip(&x).map(|(&a, b)| b * a).sum() };
        let ample = self.ample_cone.iter().all(|w| pair(w) > BigInt::from(0));
        let cartier = self
            .cartier
            .iter()
            .all(|(w, m)| pair(w).mod_floor(&BigInt::from(*m)) == BigInt::from(0));
        Ok(ample && cartier)
    }
}
