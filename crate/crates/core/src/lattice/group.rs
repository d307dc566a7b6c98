use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::normal_form::{hnf, snf, sublattice_membership};
use super::IntMatrix;
use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^r + Z/t_1 + ... + Z/t_q`, together
/// with a surjection from an ambient lattice `Z^m`.
///
/// Coordinates are ordered free part first, then torsion. Invariant factors
/// equal to one are dropped, so two presentations of isomorphic quotients
/// have equal `free_rank` and `torsion`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FGAbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
    projection: IntMatrix,
}

/// An element of an [`FGAbelianGroup`], in the group's coordinates.
/// Torsion coordinates are reduced into `[0, t_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub coords: Vec<BigInt>,
}

/// `G / <gens>` together with the map from coordinates of `G` to coordinates
/// of the quotient.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FGAbelianGroup,
    pub map: IntMatrix,
}

impl FGAbelianGroup {
    /// `Z^rows / columnspace(relations)`.
    pub fn cokernel(relations: &IntMatrix) -> Self {
        let m = relations.rows();
        let dec = snf(relations);
        let diag = dec.diagonal();
        let rank = dec.rank();

        let free_rows: Vec<usize> = (rank..m).collect();
        let torsion_rows: Vec<usize> = (0..rank).filter(|&i| !diag[i].is_one()).collect();
        let torsion: Vec<BigInt> = torsion_rows.iter().map(|&i| diag[i].clone()).collect();

        // The free coordinates are only defined up to GL(r, Z); the Hermite
        // form of the free rows picks a canonical representative.
        let free = hnf(&dec.u.select_rows(&free_rows)).0;
        let mut projection = IntMatrix::zeros(free_rows.len() + torsion.len(), m);
        for i in 0..free_rows.len() {
            for j in 0..m {
                projection[(i, j)] = free[(i, j)].clone();
            }
        }
        for (k, &i) in torsion_rows.iter().enumerate() {
            for j in 0..m {
                projection[(free_rows.len() + k, j)] = dec.u[(i, j)].mod_floor(&torsion[k]);
            }
        }
        FGAbelianGroup {
            free_rank: free_rows.len(),
            torsion,
            projection,
        }
    }

    /// `Z^n` with the identity projection.
    pub fn free(n: usize) -> Self {
        FGAbelianGroup {
            free_rank: n,
            torsion: Vec::new(),
            projection: IntMatrix::identity(n),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Invariant factors of the torsion part, each > 1, each dividing the next.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of coordinates of an element.
    pub fn coordinate_len(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Rank of the ambient lattice the projection starts from.
    pub fn ambient_dim(&self) -> usize {
        self.projection.cols()
    }

    pub fn projection(&self) -> &IntMatrix {
        &self.projection
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// Reduces raw coordinates into canonical form.
    pub fn element(&self, mut coords: Vec<BigInt>) -> Result<GroupElement> {
        if coords.len() != self.coordinate_len() {
            return Err(Error::DimensionMismatch {
                expected: self.coordinate_len(),
                found: coords.len(),
            });
        }
        for (c, t) in coords[self.free_rank..].iter_mut().zip(&self.torsion) {
            *c = c.mod_floor(t);
        }
        Ok(GroupElement { coords })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![BigInt::zero(); self.coordinate_len()],
        }
    }

    /// Image of an ambient lattice vector.
    pub fn project(&self, ambient: &[BigInt]) -> Result<GroupElement> {
        if ambient.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: ambient.len(),
            });
        }
        self.element(self.projection.mul_vec(ambient))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let sum = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        self.element(sum).expect("same group")
    }

    pub fn scale(&self, a: &GroupElement, k: &BigInt) -> GroupElement {
        self.element(a.coords.iter().map(|x| x * k).collect())
            .expect("same group")
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.scale(a, &BigInt::from(-1))
    }

    pub fn is_zero(&self, a: &GroupElement) -> bool {
        a.coords.iter().all(Zero::is_zero)
    }

    /// Columns `t_i * e_{r+i}`: the relations that cut the torsion out of
    /// the coordinate lattice `Z^(r+q)`.
    fn torsion_relations(&self) -> Vec<Vec<BigInt>> {
        (0..self.torsion.len())
            .map(|k| {
                let mut col = vec![BigInt::zero(); self.coordinate_len()];
                col[self.free_rank + k] = self.torsion[k].clone();
                col
            })
            .collect()
    }

    /// Integer coefficients `x` with `sum x_j gens[j] = target` in this group.
    ///
    /// Elements are lifted to `Z^(r+q)` and the torsion relations are added
    /// as extra generators, whose coefficients are discarded.
    pub fn membership(
        &self,
        gens: &[GroupElement],
        target: &GroupElement,
    ) -> Result<Option<Vec<BigInt>>> {
        let mut lifted: Vec<Vec<BigInt>> = gens.iter().map(|g| g.coords.clone()).collect();
        lifted.extend(self.torsion_relations());
        let sol = sublattice_membership(&lifted, &target.coords)?;
        Ok(sol.map(|mut x| {
            x.truncate(gens.len());
            x
        }))
    }

    /// `G / <gens>`. The returned group projects from the same ambient
    /// lattice as `self`.
    pub fn quotient(&self, gens: &[GroupElement]) -> Quotient {
        let mut cols: Vec<Vec<BigInt>> = gens.iter().map(|g| g.coords.clone()).collect();
        cols.extend(self.torsion_relations());
        let rel = IntMatrix::from_columns(self.coordinate_len(), &cols);
        let q = FGAbelianGroup::cokernel(&rel);
        let map = q.projection.clone();
        let mut projection = map.mul(&self.projection);
        for (k, t) in q.torsion.iter().enumerate() {
            let row = q.free_rank + k;
            for j in 0..projection.cols() {
                projection[(row, j)] = projection[(row, j)].mod_floor(t);
            }
        }
        Quotient {
            group: FGAbelianGroup {
                free_rank: q.free_rank,
                torsion: q.torsion,
                projection,
            },
            map,
        }
    }

    /// All elements, for finite groups of order at most `limit`.
    pub fn elements(&self, limit: u64) -> Option<Vec<GroupElement>> {
        let order = self.order()?;
        if order > BigInt::from(limit) {
            return None;
        }
        let mut out = vec![Vec::new()];
        for t in &self.torsion {
            let mut next = Vec::new();
            for prefix in &out {
                let mut k = BigInt::zero();
                while &k < t {
                    let mut v: Vec<BigInt> = prefix.clone();
                    v.push(k.clone());
                    next.push(v);
                    k += 1;
                }
            }
            out = next;
        }
        Some(out.into_iter().map(|coords| GroupElement { coords }).collect())
    }
}

impl GroupElement {
    pub fn from_i64(v: &[i64]) -> Self {
        GroupElement {
            coords: super::big_vec(v),
        }
    }
}
