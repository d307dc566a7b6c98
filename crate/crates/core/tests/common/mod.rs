//! Independent oracles: small-integer arithmetic and brute force, sharing
//! no code with the library under test.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `d_k`: gcd of all `k x k` minors.
pub fn determinantal_divisor(a: &[Vec<i64>], k: usize) -> i128 {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut g = 0;
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let minor: Vec<Vec<i128>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| a[r][c] as i128).collect())
                .collect();
            g = gcd(g, det(&minor));
        }
    }
    g
}

pub fn to_i128(x: &BigInt) -> i128 {
    x.to_i128().expect("small")
}

/// All `u` in `[-r, r]^dim` with `<a, u> >= b` for every `(a, b)`.
pub fn box_filter(dim: usize, r: i64, constraints: &[(Vec<i64>, i64)]) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..dim {
        pts = pts
            .into_iter()
            .flat_map(|p| {
                (-r..=r).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    pts.into_iter()
        .filter(|u| {
            constraints
                .iter()
                .all(|(a, b)| a.iter().zip(u).map(|(x, y)| x * y).sum::<i64>() >= *b)
        })
        .collect()
}

pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as u64
}

/// `dim k[x_0, ..., x_n]_d`.
pub fn forms(n: i64, d: i64) -> u64 {
    if d < 0 {
        0
    } else {
        binomial(d + n, n)
    }
}

/// Sections of `O(a, b)` on `P^1 x P^1`: bihomogeneous monomials.
pub fn p1xp1_sections(a: i64, b: i64) -> u64 {
    forms(1, a) * forms(1, b)
}

/// Forms of degree `d` on `P^2` vanishing to order `c_i` at the three
/// coordinate points, counted monomial by monomial.
pub fn p2_three_points(d: i64, c: [i64; 3]) -> u64 {
    if d < 0 {
        return 0;
    }
    let mut count = 0;
    for a0 in 0..=d {
        for a1 in 0..=d - a0 {
            let a = [a0, a1, d - a0 - a1];
            // order of vanishing at e_k is d - a_k
            if (0..3).all(|k| d - a[k] >= c[k]) {
                count += 1;
            }
        }
    }
    count
}
