//! Fans shipped with the crate.

use super::{Fan, ToricVariety};
use crate::error::Result;

/// `P^n`: rays `e_1, ..., e_n, -(e_1 + ... + e_n)`, every `n`-subset a cone.
pub fn projective_space(n: usize) -> Result<ToricVariety> {
    Ok(ToricVariety::named(format!("P^{n}"), projective_fan(n))?.with_product_factors(vec![n]))
}

fn projective_fan(n: usize) -> Fan {
    let mut rays: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    rays.push(vec![-1; n]);
    let cones = (0..=n)
        .map(|skip| (0..=n).filter(|&r| r != skip).collect())
        .collect();
    Fan::new(n, rays, cones)
}

/// `P^{n_1} x ... x P^{n_k}`, rays grouped by factor in the order of
/// [`projective_space`].
pub fn product_of_projective_spaces(dims: &[usize]) -> Result<ToricVariety> {
    let rank: usize = dims.iter().sum();
    let mut rays = Vec::new();
    let mut factor_cones: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut offset = 0;
    for &n in dims {
        let f = projective_fan(n);
        let base = rays.len();
        for r in &f.rays {
            let mut v = vec![0; rank];
            v[offset..offset + n].copy_from_slice(r);
            rays.push(v);
        }
        factor_cones.push(
            f.max_cones
                .iter()
                .map(|c| c.iter().map(|&r| r + base).collect())
                .collect(),
        );
        offset += n;
    }
    let mut cones: Vec<Vec<usize>> = vec![Vec::new()];
    for fc in &factor_cones {
        cones = cones
            .iter()
            .flat_map(|prefix| {
                fc.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.extend(c);
                    v
                })
            })
            .collect();
    }
    let name = dims
        .iter()
        .map(|n| format!("P^{n}"))
        .collect::<Vec<_>>()
        .join(" x ");
    Ok(ToricVariety::named(name, Fan::new(rank, rays, cones))?.with_product_factors(dims.to_vec()))
}

/// `(P^1)^k` with rays `e_1, -e_1, e_2, -e_2, ...`.
pub fn p1_product(k: usize) -> Result<ToricVariety> {
    product_of_projective_spaces(&vec![1; k])
}

/// The toric del Pezzo surface of degree 6: `P^2` blown up at its three
/// torus-fixed points. Rays in cyclic order
/// `(1,0), (1,1), (0,1), (-1,0), (-1,-1), (0,-1)`.
pub fn del_pezzo_6() -> Result<ToricVariety> {
    let rays = vec![
        vec![1, 0],
        vec![1, 1],
        vec![0, 1],
        vec![-1, 0],
        vec![-1, -1],
        vec![0, -1],
    ];
    let cones = (0..6).map(|i| vec![i, (i + 1) % 6]).collect();
    ToricVariety::named("dP6", Fan::new(2, rays, cones))
}

/// Hirzebruch surface `F_a`: rays `(1,0), (0,1), (-1,a), (0,-1)`.
pub fn hirzebruch(a: i64) -> Result<ToricVariety> {
    let rays = vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]];
    let cones = (0..4).map(|i| vec![i, (i + 1) % 4]).collect();
    ToricVariety::named(format!("F_{a}"), Fan::new(2, rays, cones))
}
