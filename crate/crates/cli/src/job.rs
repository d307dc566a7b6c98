//! The JSON job description and its translation into library objects.

use std::sync::Arc;

use coxcanon::catalog::weighted_plane_blowup;
use coxcanon::divisor::parse_rational;
use coxcanon::toric::{
    del_pezzo_6, hirzebruch, p1_product, product_of_projective_spaces, projective_space,
};
use coxcanon::{
    BlowupVariety, ClassLatticeVariety, Divisor, Fan, PointConfig, ToricVariety, VarietyBackend,
};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub variety: VarietySpec,
    #[serde(default)]
    pub divisors: Vec<Vec<Coefficient>>,
    /// Per-axis inclusive ranges `[lo, hi]`.
    #[serde(rename = "box")]
    pub degree_box: Option<Vec<[i64; 2]>>,
    pub sublattice: Option<Vec<Vec<i64>>>,
    pub witness_bound: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum VarietySpec {
    Builtin(Builtin),
    Toric {
        rank: usize,
        rays: Vec<Vec<i64>>,
        cones: Vec<Vec<usize>>,
    },
    Blowup {
        n: usize,
        points: Vec<Vec<Coefficient>>,
    },
    ClassLattice {
        name: Option<String>,
        dimension: usize,
        generators: Vec<String>,
        #[serde(default)]
        relations: Vec<Vec<i64>>,
        canonical: Vec<i64>,
        ample_cone: Vec<Vec<i64>>,
        #[serde(default)]
        cartier: Vec<Congruence>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Congruence {
    pub weights: Vec<i64>,
    pub modulus: i64,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum Builtin {
    ProjectiveSpace { n: usize },
    ProductOfProjectiveSpaces { dims: Vec<usize> },
    P1Product { k: usize },
    DelPezzo6,
    Hirzebruch { a: i64 },
    WeightedPlaneBlowup {
        a: i64,
        b: i64,
        c: i64,
        curve_degree: i64,
        curve_mult: i64,
    },
}

/// An integer, or a string `"p/q"`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(i64),
    Text(String),
}

impl Coefficient {
    fn to_rational(&self) -> Result<num_rational::BigRational, CliError> {
        match self {
            Coefficient::Int(k) => Ok(num_rational::BigRational::from_integer((*k).into())),
            Coefficient::Text(s) => parse_rational(s).map_err(CliError::from),
        }
    }
}

impl JobSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid job: {e}")))
    }

    pub fn backend(&self) -> Result<Arc<dyn VarietyBackend>, CliError> {
        Ok(match &self.variety {
            VarietySpec::Builtin(b) => match b {
                Builtin::ProjectiveSpace { n } => Arc::new(projective_space(*n)?),
                Builtin::ProductOfProjectiveSpaces { dims } => {
                    Arc::new(product_of_projective_spaces(dims)?)
                }
                Builtin::P1Product { k } => Arc::new(p1_product(*k)?),
                Builtin::DelPezzo6 => Arc::new(del_pezzo_6()?),
                Builtin::Hirzebruch { a } => Arc::new(hirzebruch(*a)?),
                Builtin::WeightedPlaneBlowup {
                    a,
                    b,
                    c,
                    curve_degree,
                    curve_mult,
                } => Arc::new(weighted_plane_blowup(*a, *b, *c, *curve_degree, *curve_mult)?),
            },
            VarietySpec::Toric { rank, rays, cones } => {
                if rays.iter().any(|r| r.len() != *rank) {
                    return Err(CliError::Input(format!("every ray needs {rank} coordinates")));
                }
                if cones.iter().flatten().any(|&i| i >= rays.len()) {
                    return Err(CliError::Input("cone refers to a missing ray".into()));
                }
                Arc::new(ToricVariety::new(Fan::new(*rank, rays.clone(), cones.clone()))?)
            }
            VarietySpec::Blowup { n, points } => {
                let pts = points
                    .iter()
                    .map(|p| p.iter().map(Coefficient::to_rational).collect())
                    .collect::<Result<_, _>>()?;
                Arc::new(BlowupVariety::new(PointConfig::new(*n, pts)?))
            }
            VarietySpec::ClassLattice {
                name,
                dimension,
                generators,
                relations,
                canonical,
                ample_cone,
                cartier,
            } => Arc::new(ClassLatticeVariety::new(
                name.clone().unwrap_or_else(|| "X".into()),
                *dimension,
                generators.clone(),
                relations,
                canonical.clone(),
                ample_cone.clone(),
                cartier.iter().map(|c| (c.weights.clone(), c.modulus)).collect(),
            )?),
        })
    }

    pub fn divisors(&self) -> Result<Vec<Divisor>, CliError> {
        self.divisors
            .iter()
            .map(|d| {
                Ok(Divisor::new(
                    d.iter().map(Coefficient::to_rational).collect::<Result<_, _>>()?,
                ))
            })
            .collect()
    }
}
