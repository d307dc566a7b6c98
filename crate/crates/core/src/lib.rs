//! Multigraded section rings `R(X; D_1, ..., D_s)` of normal projective
//! varieties, the graded modules `M_F`, and their canonical modules.
//!
//! Everything is exact: integers are arbitrary precision, polyhedra are
//! rational, and section spaces are computed either by lattice-point
//! counting (toric varieties) or by exact interpolation rank (blow-ups of
//! projective space at points).
//!
//! The main entry point is [`MultiSectionRing`], built over any
//! [`VarietyBackend`].

pub mod blowup;
pub mod catalog;
pub mod class_lattice;
pub mod cohomology;
pub mod divisor;
mod error;
pub mod lattice;
pub mod multisection;
pub mod polyhedra;
pub mod toric;

pub use crate::backend::VarietyBackend;
pub use crate::blowup::{BlowupDivisor, BlowupVariety, PointConfig};
pub use crate::class_lattice::ClassLatticeVariety;
pub use crate::divisor::Divisor;
pub use crate::error::{Error, Result};
pub use crate::lattice::{FGAbelianGroup, GroupElement, IntMatrix, SmithDecomposition};
pub use crate::multisection::{
    cox_canonical_degree, cox_ring, DualityReport, Hypotheses, OmegaMethod, ProbeReport, RestrictionReport,
    DegreeBox, FreenessVerdict, GradedDimTable, MultiSectionRing, RingOptions,
};
pub use crate::polyhedra::{BoxOutcome, RationalPolyhedron};
pub use crate::toric::{Fan, ToricVariety};

mod backend;
