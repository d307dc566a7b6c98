mod common;

use common::box_filter;
use coxcanon::lattice::big_vec;
use coxcanon::polyhedra::{points_to_i64, Constraint};
use coxcanon::{BoxOutcome, Error, RationalPolyhedron};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn constraints(dim: usize) -> impl Strategy<Value = Vec<(Vec<i64>, i64)>> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, dim), -6i64..=6), 0..=5)
}

fn boxed(dim: usize, r: i64, mut rows: Vec<(Vec<i64>, i64)>) -> Vec<(Vec<i64>, i64)> {
    for k in 0..dim {
        let mut e = vec![0; dim];
        e[k] = 1;
        rows.push((e.clone(), -r));
        e[k] = -1;
        rows.push((e, -r));
    }
    rows
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn boxed_enumeration_matches_brute_force(
        (dim, rows) in (1usize..=3).prop_flat_map(|d| (Just(d), constraints(d))),
        r in 1i64..=4,
    ) {
        let rows = boxed(dim, r, rows);
        let p = RationalPolyhedron::from_i64(dim, &rows).unwrap();
        let got = points_to_i64(&p.lattice_points().unwrap());
        prop_assert_eq!(got, box_filter(dim, r, &rows));
    }

    #[test]
    fn free_polyhedra_within_their_box(
        (dim, rows) in (1usize..=3).prop_flat_map(|d| (Just(d), constraints(d))),
    ) {
        let p = RationalPolyhedron::from_i64(dim, &rows).unwrap();
        match p.bounding_box() {
            BoxOutcome::Bounded(ranges) => {
                let fits = ranges.iter().all(|(lo, hi)| lo >= &BigInt::from(-12) && hi <= &BigInt::from(12));
                prop_assume!(fits);
                let got = points_to_i64(&p.lattice_points().unwrap());
                prop_assert_eq!(got, box_filter(dim, 12, &rows));
            }
            BoxOutcome::Empty => {
                prop_assert!(box_filter(dim, 12, &rows).is_empty());
                prop_assert!(p.lattice_points().unwrap().is_empty());
            }
            BoxOutcome::Unbounded => {
                prop_assert_eq!(p.lattice_points(), Err(Error::Unbounded));
            }
        }
    }

    #[test]
    fn translation_preserves_counts(
        (dim, rows) in (1usize..=3).prop_flat_map(|d| (Just(d), constraints(d))),
        r in 1i64..=3,
        t in prop::collection::vec(-5i64..=5, 3),
    ) {
        let rows = boxed(dim, r, rows);
        let p = RationalPolyhedron::from_i64(dim, &rows).unwrap();
        let q = p.translate(&big_vec(&t[..dim]));
        prop_assert_eq!(p.count_lattice_points().unwrap(), q.count_lattice_points().unwrap());
    }
}

#[test]
fn rational_bounds_round_inward() {
    // 1/2 <= x <= 7/2
    let p = RationalPolyhedron::new(
        1,
        vec![
            Constraint { normal: big_vec(&[1]), bound: BigRational::new(1.into(), 2.into()) },
            Constraint { normal: big_vec(&[-1]), bound: BigRational::new((-7).into(), 2.into()) },
        ],
    )
    .unwrap();
    assert_eq!(points_to_i64(&p.lattice_points().unwrap()), vec![vec![1], vec![2], vec![3]]);
}

#[test]
fn halfspace_is_unbounded() {
    let p = RationalPolyhedron::from_i64(2, &[(vec![1, 1], 0)]).unwrap();
    assert_eq!(p.bounding_box(), BoxOutcome::Unbounded);
}

#[test]
fn empty_triangle() {
    // x >= 1, y >= 1, x + y <= 1
    let p = RationalPolyhedron::from_i64(2, &[(vec![1, 0], 1), (vec![0, 1], 1), (vec![-1, -1], -1)]).unwrap();
    assert!(p.is_empty());
    assert_eq!(p.bounding_box(), BoxOutcome::Empty);
}
