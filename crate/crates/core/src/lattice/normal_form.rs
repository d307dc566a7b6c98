use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `U` unimodular and `U * A = H`. `H` is in row
/// echelon form, every pivot is positive, and the entries above a pivot lie
/// in `[0, pivot)`. Zero rows sit at the bottom.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.rows();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut pivot_row = 0;
    for col in 0..a.cols() {
        if pivot_row == m {
            break;
        }
        loop {
            let best = (pivot_row..m)
                .filter(|&r| !h[(r, col)].is_zero())
                .min_by(|&r, &s| h[(r, col)].abs().cmp(&h[(s, col)].abs()).then(r.cmp(&s)));
            let Some(best) = best else { break };
            h.swap_rows(best, pivot_row);
            u.swap_rows(best, pivot_row);
            let mut clean = true;
            for r in pivot_row + 1..m {
                if h[(r, col)].is_zero() {
                    continue;
                }
                let q = -h[(r, col)].div_floor(&h[(pivot_row, col)]);
                h.add_row_multiple(r, pivot_row, &q);
                u.add_row_multiple(r, pivot_row, &q);
                clean &= h[(r, col)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        for r in 0..pivot_row {
            let q = -h[(r, col)].div_floor(&h[(pivot_row, col)]);
            h.add_row_multiple(r, pivot_row, &q);
            u.add_row_multiple(r, pivot_row, &q);
        }
        pivot_row += 1;
    }
    (h, u)
}

/// `U * A * V = S` with `U`, `V` unimodular and `S` diagonal in Smith form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The `min(rows, cols)` diagonal entries of `S`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form by naive exact elimination.
///
/// The pivot is always the nonzero entry of smallest absolute value in the
/// remaining block, ties broken by lowest row then lowest column, so the
/// transforms are deterministic.
pub fn snf(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    'diag: for t in 0..m.min(n) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    let better = match pivot {
                        None => true,
                        Some(p) => s[(i, j)].abs() < s[p].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pr, pc)) = pivot else { break 'diag };
            s.swap_rows(t, pr);
            u.swap_rows(t, pr);
            s.swap_cols(t, pc);
            v.swap_cols(t, pc);

            let mut clean = true;
            for r in t + 1..m {
                if s[(r, t)].is_zero() {
                    continue;
                }
                let q = -s[(r, t)].div_floor(&s[(t, t)]);
                s.add_row_multiple(r, t, &q);
                u.add_row_multiple(r, t, &q);
                clean &= s[(r, t)].is_zero();
            }
            for c in t + 1..n {
                if s[(t, c)].is_zero() {
                    continue;
                }
                let q = -s[(t, c)].div_floor(&s[(t, t)]);
                s.add_col_multiple(c, t, &q);
                v.add_col_multiple(c, t, &q);
                clean &= s[(t, c)].is_zero();
            }
            if !clean {
                continue;
            }

            let p = s[(t, t)].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !s[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { u, s, v }
}

/// Integer coefficients `x` with `sum_j x_j * generators[j] = target`, or
/// `None` when the target is outside the lattice the generators span.
///
/// The solution is read off the Smith form of the generator matrix and
/// checked by substitution before it is returned.
pub fn sublattice_membership(
    generators: &[Vec<BigInt>],
    target: &[BigInt],
) -> Result<Option<Vec<BigInt>>> {
    let m = target.len();
    for g in generators {
        if g.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: g.len(),
            });
        }
    }
    let k = generators.len();
    if k == 0 {
        return Ok(target.iter().all(Zero::is_zero).then(Vec::new));
    }
    let g = IntMatrix::from_columns(m, generators);
    let dec = snf(&g);
    let c = dec.u.mul_vec(target);
    let diag = dec.diagonal();
    let mut y = vec![BigInt::zero(); k];
    for i in 0..m {
        let d = diag.get(i).filter(|d| !d.is_zero());
        match d {
            Some(d) => {
                let (q, r) = c[i].div_rem(d);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            }
            None => {
                if !c[i].is_zero() {
                    return Ok(None);
                }
            }
        }
    }
    let x = dec.v.mul_vec(&y);
    assert_eq!(g.mul_vec(&x), target, "membership witness failed substitution");
    Ok(Some(x))
}
