//! Complete simplicial toric varieties given by a fan.
//!
//! Sections of `O_X(D)` for `D = sum a_rho D_rho` are the lattice points of
//! `{u : <u, v_rho> >= -a_rho}`; the class group is `Z^rays` modulo the
//! image of the character lattice.

mod builtin;
mod cone;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub use self::builtin::{
    del_pezzo_6, hirzebruch, p1_product, product_of_projective_spaces, projective_space,
};
pub use self::cone::SectionCone;

use crate::backend::VarietyBackend;
use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::lattice::{determinant, rational_inverse, FGAbelianGroup, IntMatrix};
use crate::polyhedra::{Constraint, RationalPolyhedron};

/// A fan in `N = Z^rank`: primitive ray generators and maximal cones given
/// as sets of ray indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(rank: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Self {
        Fan {
            rank,
            rays,
            max_cones,
        }
    }

    /// Rays as the rows of an integer matrix: the map `M -> Z^rays`,
    /// `u -> (<u, v_rho>)`.
    pub fn ray_matrix(&self) -> IntMatrix {
        IntMatrix::from_i64(&self.rays)
    }

    /// Checks that the fan is simplicial, complete and made of primitive
    /// rays. Returns one diagnostic per violation.
    pub fn validate(&self) -> std::result::Result<(), Vec<String>> {
        let mut diag = Vec::new();
        let n = self.rank;
        if n == 0 {
            diag.push("lattice rank must be positive".to_string());
        }
        if self.rays.is_empty() {
            diag.push("fan has no rays".to_string());
        }
        for (i, r) in self.rays.iter().enumerate() {
            if r.len() != n {
                diag.push(format!("ray {i} has length {} but the lattice rank is {n}", r.len()));
                continue;
            }
            let g = r.iter().fold(0i64, |acc, &x| acc.gcd(&x));
            if g == 0 {
                diag.push(format!("ray {i} is zero"));
            } else if g != 1 {
                diag.push(format!("non-primitive ray {i} {r:?} (gcd {g})"));
            }
        }
        for i in 0..self.rays.len() {
            for j in i + 1..self.rays.len() {
                if self.rays[i] == self.rays[j] {
                    diag.push(format!("rays {i} and {j} coincide"));
                }
            }
        }
        if self.max_cones.is_empty() {
            diag.push("fan has no maximal cones".to_string());
        }
        let mut seen = BTreeMap::new();
        for (c, cone) in self.max_cones.iter().enumerate() {
            let mut sorted = cone.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != cone.len() {
                diag.push(format!("cone {c} repeats a ray"));
            }
            if let Some(&r) = sorted.iter().find(|&&r| r >= self.rays.len()) {
                diag.push(format!("cone {c} refers to missing ray {r}"));
                continue;
            }
            if let Some(prev) = seen.insert(sorted.clone(), c) {
                diag.push(format!("cones {prev} and {c} coincide"));
            }
            if cone.len() != n {
                diag.push(format!(
                    "cone {c} has {} rays; only simplicial full-dimensional cones are supported",
                    cone.len()
                ));
            } else if self.rays.iter().all(|r| r.len() == n)
                && determinant(&self.cone_matrix(cone)).is_zero()
            {
                diag.push(format!("cone {c} is not full-dimensional (rays are dependent)"));
            }
        }
        for i in 0..self.rays.len() {
            if !self.max_cones.iter().any(|c| c.contains(&i)) {
                diag.push(format!("incomplete fan: ray {i} lies in no maximal cone"));
            }
        }
        if !diag.is_empty() {
            return Err(diag);
        }

        self.check_ridges(&mut diag);
        if diag.is_empty() {
            self.check_covering_degree(&mut diag);
        }
        if diag.is_empty() {
            Ok(())
        } else {
            Err(diag)
        }
    }

    fn cone_matrix(&self, cone: &[usize]) -> IntMatrix {
        let rows: Vec<&[i64]> = cone.iter().map(|&r| self.rays[r].as_slice()).collect();
        IntMatrix::from_i64(&rows)
    }

    /// Every ridge must be shared by exactly two maximal cones lying on
    /// opposite sides of it.
    fn check_ridges(&self, diag: &mut Vec<String>) {
        let mut ridges: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, cone) in self.max_cones.iter().enumerate() {
            for &out in cone {
                let mut ridge: Vec<usize> = cone.iter().copied().filter(|&r| r != out).collect();
                ridge.sort_unstable();
                ridges.entry(ridge).or_default().push((c, out));
            }
        }
        for (ridge, cones) in &ridges {
            match cones.as_slice() {
                [(c1, r1), (c2, r2)] => {
                    let normal = ridge_normal(&self.rays, ridge, self.rank);
                    let s1 = dot(&normal, &self.rays[*r1]).signum();
                    let s2 = dot(&normal, &self.rays[*r2]).signum();
                    if s1 == s2 {
                        diag.push(format!(
                            "cones {c1} and {c2} lie on the same side of their common ridge {ridge:?}"
                        ));
                    }
                }
                [(c, _)] => diag.push(format!(
                    "incomplete fan: ridge {ridge:?} of cone {c} is not shared with another cone"
                )),
                many => diag.push(format!(
                    "ridge {ridge:?} lies in {} maximal cones",
                    many.len()
                )),
            }
        }
    }

    /// A generic point must lie in exactly one maximal cone; this catches
    /// fans that wrap around more than once.
    fn check_covering_degree(&self, diag: &mut Vec<String>) {
        let n = self.rank;
        let inverses: Vec<Vec<Vec<BigRational>>> = self
            .max_cones
            .iter()
            .map(|c| rational_inverse(&self.cone_matrix(c)).expect("checked nonsingular"))
            .collect();
        let base: Vec<i64> = (0..n)
            .map(|k| self.max_cones[0].iter().map(|&r| self.rays[r][k]).sum())
            .collect();
        for t in 1..=64i64 {
            let point: Vec<BigRational> = (0..n)
                .map(|k| {
                    let wiggle = t.pow(k as u32);
                    BigRational::from_integer(BigInt::from(97 * base[k] + wiggle))
                })
                .collect();
            let mut inside = 0;
            let mut on_boundary = false;
            for inv in &inverses {
                // point = sum_i lambda_i v_i  <=>  lambda^T = point^T V^-1
                let lambda: Vec<BigRational> = (0..n)
                    .map(|i| (0..n).map(|k| &point[k] * &inv[k][i]).sum())
                    .collect();
                if lambda.iter().all(|l| !l.is_negative()) {
                    if lambda.iter().any(Zero::is_zero) {
                        on_boundary = true;
                        break;
                    }
                    inside += 1;
                }
            }
            if on_boundary {
                continue;
            }
            if inside != 1 {
                diag.push(format!(
                    "maximal cones overlap: a generic point lies in {inside} of them"
                ));
            }
            return;
        }
    }
}

fn dot(a: &[BigInt], b: &[i64]) -> BigInt {
    a.iter().zip(b).map(|(x, &y)| x * y).sum()
}

/// Normal vector of the hyperplane spanned by the ridge rays (cofactor
/// expansion of the generalized cross product).
fn ridge_normal(rays: &[Vec<i64>], ridge: &[usize], n: usize) -> Vec<BigInt> {
    (0..n)
        .map(|skip| {
            let rows: Vec<Vec<i64>> = ridge
                .iter()
                .map(|&r| {
                    (0..n)
                        .filter(|&k| k != skip)
                        .map(|k| rays[r][k])
                        .collect()
                })
                .collect();
            let minor = if rows.is_empty() {
                BigInt::from(1)
            } else {
                determinant(&IntMatrix::from_i64(&rows))
            };
            if skip % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
        .collect()
}

/// A validated fan with the data needed repeatedly: class group, inverse
/// cone matrices and the facet adjacency used for the ampleness test.
#[derive(Clone, Debug)]
pub struct ToricVariety {
    name: String,
    fan: Fan,
    class_group: FGAbelianGroup,
    cone_inverses: Vec<Vec<Vec<BigRational>>>,
    /// `(cone, ray)` with `ray` in a neighbouring cone across a shared facet.
    adjacency: Vec<(usize, usize)>,
    product_factors: Option<Vec<usize>>,
}

impl ToricVariety {
    pub fn new(fan: Fan) -> Result<Self> {
        Self::named("toric", fan)
    }

    pub fn named(name: impl Into<String>, fan: Fan) -> Result<Self> {
        fan.validate().map_err(Error::InvalidFan)?;
        let class_group = FGAbelianGroup::cokernel(&fan.ray_matrix());
        let cone_inverses = fan
            .max_cones
            .iter()
            .map(|c| rational_inverse(&fan.cone_matrix(c)).expect("validated"))
            .collect();
        let mut adjacency = Vec::new();
        for (c, cone) in fan.max_cones.iter().enumerate() {
            for (d, other) in fan.max_cones.iter().enumerate() {
                if c == d {
                    continue;
                }
                let fresh: Vec<usize> = other.iter().copied().filter(|r| !cone.contains(r)).collect();
                if fresh.len() == 1 {
                    adjacency.push((c, fresh[0]));
                }
            }
        }
        Ok(ToricVariety {
            name: name.into(),
            fan,
            class_group,
            cone_inverses,
            adjacency,
            product_factors: None,
        })
    }

    /// `Some([n_1, ..., n_k])` when the fan is the shipped fan of
    /// `P^{n_1} x ... x P^{n_k}`; class coordinates are then the multidegrees.
    pub fn product_factors(&self) -> Option<&[usize]> {
        self.product_factors.as_deref()
    }

    pub(crate) fn with_product_factors(mut self, dims: Vec<usize>) -> Self {
        self.product_factors = Some(dims);
        self
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ray_count(&self) -> usize {
        self.fan.rays.len()
    }

    /// `K_X = -sum_rho D_rho`.
    pub fn canonical(&self) -> Divisor {
        Divisor::from_i64(&vec![-1; self.ray_count()])
    }

    /// `div(chi^u) = sum_rho <u, v_rho> D_rho`.
    pub fn principal_divisor(&self, u: &[i64]) -> Divisor {
        let coeffs: Vec<i64> = self
            .fan
            .rays
            .iter()
            .map(|v| v.iter().zip(u).map(|(a, b)| a * b).sum())
            .collect();
        Divisor::from_i64(&coeffs)
    }

    /// Local data `m_sigma` with `<m_sigma, v_rho> = -a_rho` on each maximal
    /// cone, or `None` if some `m_sigma` is not integral.
    pub fn cartier_data(&self, d: &Divisor) -> Result<Option<Vec<Vec<BigRational>>>> {
        self.check_divisor(d)?;
        let a = d.integral_coeffs()?;
        let mut out = Vec::with_capacity(self.fan.max_cones.len());
        for (cone, inv) in self.fan.max_cones.iter().zip(&self.cone_inverses) {
            let rhs: Vec<BigRational> = cone
                .iter()
                .map(|&r| BigRational::from_integer(-&a[r]))
                .collect();
            let m: Vec<BigRational> = inv
                .iter()
                .map(|row| row.iter().zip(&rhs).map(|(x, y)| x * y).sum())
                .collect();
            if m.iter().any(|x| !x.is_integer()) {
                return Ok(None);
            }
            out.push(m);
        }
        Ok(Some(out))
    }

    pub fn is_cartier(&self, d: &Divisor) -> Result<bool> {
        Ok(self.cartier_data(d)?.is_some())
    }

    /// Cartier with a strictly convex support function: each `m_sigma`
    /// lies strictly inside the half-space of every ray of a neighbouring
    /// cone.
    pub fn is_ample(&self, d: &Divisor) -> Result<bool> {
        let Some(ms) = self.cartier_data(d)? else {
            return Ok(false);
        };
        let a = d.integral_coeffs()?;
        Ok(self.adjacency.iter().all(|&(c, r)| {
            let pairing: BigRational = ms[c]
                .iter()
                .zip(&self.fan.rays[r])
                .map(|(m, &v)| m * BigRational::from_integer(BigInt::from(v)))
                .sum();
            pairing > BigRational::from_integer(-&a[r])
        }))
    }

    /// `{u in M_R : <u, v_rho> >= -floor(a_rho)}`.
    pub fn section_polytope(&self, d: &Divisor) -> Result<RationalPolyhedron> {
        self.check_divisor(d)?;
        let constraints = self
            .fan
            .rays
            .iter()
            .zip(d.coeffs())
            .map(|(v, a)| Constraint {
                normal: v.iter().map(|&x| BigInt::from(x)).collect(),
                bound: -a.floor(),
            })
            .collect();
        RationalPolyhedron::new(self.fan.rank, constraints)
    }
}

impl VarietyBackend for ToricVariety {
    fn describe(&self) -> String {
        format!(
            "{} (rank {}, {} rays, {} maximal cones)",
            self.name,
            self.fan.rank,
            self.fan.rays.len(),
            self.fan.max_cones.len()
        )
    }

    fn dimension(&self) -> usize {
        self.fan.rank
    }

    fn divisor_len(&self) -> usize {
        self.ray_count()
    }

    fn class_group(&self) -> &FGAbelianGroup {
        &self.class_group
    }

    fn canonical_divisor(&self) -> Divisor {
        self.canonical()
    }

    fn section_dimension(&self, d: &Divisor) -> Result<u64> {
        self.section_polytope(d)?.count_lattice_points()
    }

    fn is_ample_cartier(&self, d: &Divisor) -> Result<bool> {
        self.check_divisor(d)?;
        if !d.is_integral() {
            return Ok(false);
        }
        self.is_ample(d)
    }

    fn supports_rational_divisors(&self) -> bool {
        true
    }

    fn as_toric(&self) -> Option<&ToricVariety> {
        Some(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::big_vec;

    fn p2() -> ToricVariety {
        projective_space(2).unwrap()
    }

    #[test]
    fn validation_diagnostics() {
        let rays = vec![vec![1, 0], vec![0, 1], vec![-1, -1]];
        assert!(Fan::new(2, rays.clone(), vec![vec![0, 1], vec![1, 2], vec![2, 0]])
            .validate()
            .is_ok());
        let err = Fan::new(2, rays, vec![vec![0, 1]]).validate().unwrap_err();
        assert!(err.iter().any(|d| d.contains("incomplete")));
        let err = Fan::new(1, vec![vec![2], vec![-1]], vec![vec![0], vec![1]])
            .validate()
            .unwrap_err();
        assert!(err.iter().any(|d| d.contains("non-primitive")));
    }

    #[test]
    fn incomplete_fan_diagnosed() {
        let rays = vec![vec![1, 0], vec![0, 1], vec![-1, -1]];
        let err = Fan::new(2, rays, vec![vec![0, 1], vec![1, 2]])
            .validate()
            .unwrap_err();
        assert!(err.iter().any(|d| d.contains("incomplete")), "{err:?}");
    }

    #[test]
    fn double_cover_rejected() {
        // Two triangles of 120-degree cones interleaved: locally fine,
        // globally each point is covered twice.
        let rays = vec![
            vec![1, 0],
            vec![1, 1],
            vec![0, 1],
            vec![-1, 0],
            vec![-1, -1],
            vec![0, -1],
        ];
        let cones = vec![
            vec![0, 2],
            vec![2, 4],
            vec![4, 0],
            vec![1, 3],
            vec![3, 5],
            vec![5, 1],
        ];
        let err = Fan::new(2, rays, cones).validate().unwrap_err();
        assert!(err.iter().any(|d| d.contains("overlap")), "{err:?}");
    }

    #[test]
    fn non_simplicial_rejected() {
        let rays = vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]];
        let err = Fan::new(2, rays, vec![vec![0, 1, 2, 3]]).validate().unwrap_err();
        assert!(err.iter().any(|d| d.contains("simplicial")));
    }

    #[test]
    fn class_groups() {
        assert_eq!(p2().class_group().free_rank(), 1);
        assert!(p2().class_group().is_free());
        let p1p1 = p1_product(2).unwrap();
        assert_eq!(p1p1.class_group().free_rank(), 2);
        let weighted = ToricVariety::new(Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -2]],
            vec![vec![0, 1], vec![1, 2], vec![2, 0]],
        ))
        .unwrap();
        assert_eq!(weighted.class_group().free_rank(), 1);
        assert!(weighted.class_group().is_free());
    }

    #[test]
    fn canonical_classes() {
        let x = p2();
        let k = x.divisor_class(&x.canonical()).unwrap();
        assert_eq!(k.coords, big_vec(&[-3]));
        let p1 = projective_space(1).unwrap();
        assert_eq!(p1.divisor_class(&p1.canonical()).unwrap().coords, big_vec(&[-2]));
        let q = p1_product(2).unwrap();
        assert_eq!(q.divisor_class(&q.canonical()).unwrap().coords, big_vec(&[-2, -2]));
    }

    #[test]
    fn cartier_and_ample() {
        let x = p2();
        let d = Divisor::from_i64(&[0, 0, 1]);
        assert!(x.is_cartier(&d).unwrap());
        assert!(x.is_ample(&d).unwrap());
        let zero = Divisor::zero(3);
        assert!(x.is_cartier(&zero).unwrap());
        assert!(!x.is_ample(&zero).unwrap());

        let q = p1_product(2).unwrap();
        let a1 = Divisor::basis(4, 0);
        assert!(q.is_cartier(&a1).unwrap());
        assert!(!q.is_ample(&a1).unwrap());
        assert!(q.is_ample(&Divisor::from_i64(&[1, 0, 1, 0])).unwrap());

        let half = Divisor::new(vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::zero(),
            BigRational::zero(),
        ]);
        assert_eq!(x.is_cartier(&half), Err(Error::NonIntegral));
    }

    #[test]
    fn weighted_plane_cartier() {
        let w = ToricVariety::new(Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -2]],
            vec![vec![0, 1], vec![1, 2], vec![2, 0]],
        ))
        .unwrap();
        // D_0 has degree 1 on P(1,2,1) and is not Cartier at the 1/2 point.
        assert!(!w.is_cartier(&Divisor::basis(3, 0)).unwrap());
        assert!(w.is_cartier(&Divisor::basis(3, 1)).unwrap());
        assert!(w.is_ample(&Divisor::basis(3, 1)).unwrap());
    }

    #[test]
    fn section_dimensions() {
        let x = p2();
        assert_eq!(x.section_dimension(&Divisor::from_i64(&[0, 0, 2])).unwrap(), 6);
        assert_eq!(x.section_dimension(&x.canonical()).unwrap(), 0);
        let q = p1_product(2).unwrap();
        assert_eq!(q.section_dimension(&Divisor::from_i64(&[2, 0, 3, 0])).unwrap(), 12);
    }

    #[test]
    fn rational_divisor_rounds_down() {
        let p1 = projective_space(1).unwrap();
        let d = Divisor::new(vec![
            BigRational::new(7.into(), 2.into()),
            BigRational::new((-1).into(), 3.into()),
        ]);
        // floor -> (3, -1): degree 2
        assert_eq!(p1.section_dimension(&d).unwrap(), 3);
    }
}
