//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero
//! exit status if any criterion fails.

mod common;

use std::sync::Arc;
use std::time::Instant;

use common::{box_filter, determinantal_divisor, forms, p2_three_points, to_i128};
use coxcanon::blowup::{section_dimension_by_rank, BlowupDivisor};
use coxcanon::catalog::{
    coordinate_blowup, cox_p1xp1, dp6_cox, dp6_divisor, p1_point_ring, point_blowup_ring,
    segre_ring, weighted_plane_235, weighted_plane_ring,
};
use coxcanon::cohomology::top_dimension;
use coxcanon::lattice::snf;
use coxcanon::polyhedra::points_to_i64;
use coxcanon::toric::{del_pezzo_6, hirzebruch, p1_product, projective_space};
use coxcanon::{
    cox_ring, DegreeBox, Divisor, IntMatrix, MultiSectionRing, RationalPolyhedron, RingOptions,
    ToricVariety, VarietyBackend,
};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn weighted_plane_table() -> Outcome {
    let x = weighted_plane_235().map_err(err)?;
    let mut free_cells = Vec::new();
    for alpha in 1..=6 {
        for beta in 1..=6 {
            let v = weighted_plane_ring(x.clone(), alpha, beta)
                .and_then(|r| r.freeness_test())
                .map_err(err)?;
            let expected = alpha == 1 && [1, 2, 5].contains(&beta);
            check(v.free == expected, format!("(alpha, beta) = ({alpha}, {beta}): free = {}", v.free))?;
            if v.free {
                free_cells.push(format!("({alpha},{beta})"));
            }
        }
    }
    Ok(format!("free exactly at {}", free_cells.join(" ")))
}

fn point_blowup_table() -> Outcome {
    let cases: [([i64; 2], bool); 4] = [([2, 2], true), ([2, 3], false), ([3, 3], false), ([1, 1], true)];
    for (m, free) in cases {
        let x = coordinate_blowup(3, 2).map_err(err)?;
        let r = point_blowup_ring(x, &m).map_err(err)?;
        let v = r.freeness_test().map_err(err)?;
        check(v.free == free, format!("m = {m:?}: free = {}", v.free))?;
    }
    Ok("m=(1,1),(2,2) free; m=(2,3),(3,3) not free".into())
}

fn cox_shift() -> Outcome {
    let r = cox_p1xp1().map_err(err)?;
    let b = DegreeBox::cube(2, -5, 5).map_err(err)?;
    let omega = r.canonical_table(&b).map_err(err)?;
    for (n, w) in omega.iter() {
        let g = r.graded_dimension(&[n[0] - 2, n[1] - 2]).map_err(err)?;
        check(w == g, format!("omega{n:?} = {w}, R(n - (2,2)) = {g}"))?;
    }
    let v = r.freeness_test().map_err(err)?;
    let minus_two = vec![BigInt::from(-2), BigInt::from(-2)];
    check(v.free && v.twist.as_ref() == Some(&minus_two), format!("verdict {v:?}"))?;
    Ok(format!("omega = R(-2,-2) on {} degrees", omega.len()))
}

fn restriction() -> Outcome {
    let r = cox_p1xp1().map_err(err)?;
    let b = DegreeBox::cube(1, -5, 5).map_err(err)?;
    let axis = r.restriction_check(&[vec![1, 0]], &b).map_err(err)?;
    check(!axis.agree(), "sublattice (1,0) should disagree")?;
    check(axis.restricted.is_identically_zero(), "restriction of omega_R should vanish")?;
    check(!axis.subring.is_identically_zero(), "omega of S_{1,0} should be nonzero")?;
    check(axis.subring.get(&[2]) == Some(1), "omega of S_{1,0} at 2 should be 1")?;
    let diag = r.restriction_check(&[vec![1, 1]], &b).map_err(err)?;
    check(diag.agree(), format!("sublattice (1,1) mismatches at {:?}", diag.mismatches))?;
    Ok("(1,0) mismatch with restricted table 0 and omega(2) = 1; (1,1) agrees on -5..5".into())
}

fn segre() -> Outcome {
    for (a, b) in [(1, 1), (2, 3)] {
        let r = segre_ring(a, b).map_err(err)?;
        for n in 1..=5 {
            let got = r.canonical_piece_dimension(&[n]).map_err(err)?;
            let want = forms(1, n * a - 2) * forms(1, n * b - 2);
            check(got == want, format!("(a,b)=({a},{b}) n={n}: {got} vs {want}"))?;
        }
    }
    Ok("(1,1) and (2,3) for n = 1..5".into())
}

fn duality() -> Outcome {
    let cox = cox_p1xp1().map_err(err)?;
    let b2 = DegreeBox::cube(2, -6, 6).map_err(err)?;
    for n in b2.degrees() {
        let local = cox.top_local_cohomology_dim(&n).map_err(err)?;
        let oracle = top_dimension(&[1, 1], &n).map_err(err)?;
        check(BigInt::from(local) == oracle, format!("P1xP1 at {n:?}: {local} vs {oracle}"))?;
    }
    let p1 = p1_point_ring().map_err(err)?;
    for n in -6..=6 {
        let local = p1.top_local_cohomology_dim(&[n]).map_err(err)?;
        let oracle = top_dimension(&[1], &[n]).map_err(err)?;
        check(BigInt::from(local) == oracle, format!("P1 at {n}: {local} vs {oracle}"))?;
    }
    Ok("169 + 13 degrees".into())
}

fn cross_backend() -> Outcome {
    let toric = del_pezzo_6().map_err(err)?;
    let blowup = coordinate_blowup(2, 3).map_err(err)?;
    let mut count = 0;
    for d in -5..=5i64 {
        for c1 in -3..=3i64 {
            for c2 in -3..=3i64 {
                for c3 in -3..=3i64 {
                    let c = [c1, c2, c3];
                    let t = toric.section_dimension(&dp6_divisor(d, c)).map_err(err)?;
                    let bd = BlowupDivisor::new(d, c.to_vec());
                    let b = blowup.section_dimension(&bd.to_divisor()).map_err(err)?;
                    let rank = section_dimension_by_rank(blowup.config(), &bd).map_err(err)?;
                    let clamped = c.map(|x| x.max(0));
                    let oracle = p2_three_points(d, clamped);
                    check(
                        t == b && b == rank && rank == oracle,
                        format!("d={d} c={c:?}: toric {t}, blow-up {b}, rank {rank}, monomials {oracle}"),
                    )?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} divisors"))
}

fn random_matrix(rng: &mut StdRng) -> Vec<Vec<i64>> {
    let r = rng.random_range(1..=4);
    let c = rng.random_range(1..=4);
    (0..r).map(|_| (0..c).map(|_| rng.random_range(-9..=9)).collect()).collect()
}

fn property_suites() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);

    let snf_cases = 500;
    for _ in 0..snf_cases {
        let a = random_matrix(&mut rng);
        let m = IntMatrix::from_i64(&a);
        let dec = snf(&m);
        check(dec.u.is_unimodular() && dec.v.is_unimodular(), format!("not unimodular for {a:?}"))?;
        check(dec.u.mul(&m).mul(&dec.v) == dec.s, format!("UAV != S for {a:?}"))?;
        let diag = dec.diagonal();
        let off_diagonal_zero = (0..dec.s.rows())
            .all(|i| (0..dec.s.cols()).all(|j| i == j || dec.s[(i, j)].is_zero()));
        check(off_diagonal_zero, format!("S not diagonal for {a:?}"))?;
        for w in diag.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            check(divides, format!("divisibility fails for {a:?}"))?;
        }
        let mut prod: i128 = 1;
        for (k, d) in diag.iter().enumerate() {
            prod *= to_i128(d);
            check(prod == determinantal_divisor(&a, k + 1), format!("d_{} fails for {a:?}", k + 1))?;
        }
    }

    let poly_cases = 200;
    for _ in 0..poly_cases {
        let dim = rng.random_range(1..=3usize);
        let r = rng.random_range(1..=4i64);
        let mut rows: Vec<(Vec<i64>, i64)> = (0..rng.random_range(0..=4))
            .map(|_| ((0..dim).map(|_| rng.random_range(-3..=3)).collect(), rng.random_range(-6..=6)))
            .collect();
        for k in 0..dim {
            let mut e = vec![0; dim];
            e[k] = 1;
            rows.push((e.clone(), -r));
            e[k] = -1;
            rows.push((e, -r));
        }
        let p = RationalPolyhedron::from_i64(dim, &rows).map_err(err)?;
        let got = points_to_i64(&p.lattice_points().map_err(err)?);
        check(got == box_filter(dim, r, &rows), format!("lattice points differ for {rows:?}"))?;
    }

    let varieties: Vec<ToricVariety> = vec![
        projective_space(2).map_err(err)?,
        p1_product(2).map_err(err)?,
        del_pezzo_6().map_err(err)?,
        hirzebruch(2).map_err(err)?,
        projective_space(3).map_err(err)?,
    ];
    let toric_cases = 100;
    for _ in 0..toric_cases {
        let x = &varieties[rng.random_range(0..varieties.len())];
        let a: Vec<i64> = (0..x.ray_count()).map(|_| rng.random_range(-3..=3)).collect();
        let u: Vec<i64> = (0..x.fan().rank).map(|_| rng.random_range(-3..=3)).collect();
        let d = Divisor::from_i64(&a);
        let e = d.add(&x.principal_divisor(&u));
        let (hd, he) = (
            x.section_dimension(&d).map_err(err)?,
            x.section_dimension(&e).map_err(err)?,
        );
        check(hd == he, format!("{}: h0{a:?} = {hd} but shifted by {u:?} gives {he}", x.name()))?;
    }

    let shift_cases = 50;
    let toric_ring = cox_p1xp1().map_err(err)?;
    let blowup_ring = point_blowup_ring(coordinate_blowup(2, 2).map_err(err)?, &[1, 1]).map_err(err)?;
    for ring in [&toric_ring, &blowup_ring] {
        let len = ring.backend().divisor_len();
        for _ in 0..shift_cases {
            let f = Divisor::from_i64(&(0..len).map(|_| rng.random_range(-3..=3)).collect::<Vec<_>>());
            let n: Vec<i64> = (0..ring.rank()).map(|_| rng.random_range(-3..=3)).collect();
            for j in 0..ring.rank() {
                let mut m = n.clone();
                m[j] += 1;
                let lhs = ring.module_piece_dimension(&f.add(&ring.divisors()[j]), &n).map_err(err)?;
                let rhs = ring.module_piece_dimension(&f, &m).map_err(err)?;
                check(lhs == rhs, format!("shift identity fails for F = {f}, n = {n:?}, j = {j}"))?;
            }
        }
    }
    Ok(format!(
        "{snf_cases} SNF, {poly_cases} polyhedra, {toric_cases} toric divisors, {shift_cases} F per backend x 2"
    ))
}

fn probes() -> Outcome {
    let mut shipped: Vec<(String, MultiSectionRing)> = vec![
        ("Cox(P1xP1)".into(), cox_p1xp1().map_err(err)?),
        ("S_{1,1}".into(), segre_ring(1, 1).map_err(err)?),
        ("S_{2,3}".into(), segre_ring(2, 3).map_err(err)?),
        ("R(P1; pt)".into(), p1_point_ring().map_err(err)?),
        ("Cox(dP6)".into(), dp6_cox().map_err(err)?),
        (
            "Cox(Bl_3 P2)".into(),
            cox_ring(Arc::new(coordinate_blowup(2, 3).map_err(err)?), None, RingOptions::default())
                .map_err(err)?,
        ),
        (
            "R(Bl_1 P2; -E, A)".into(),
            point_blowup_ring(coordinate_blowup(2, 1).map_err(err)?, &[1]).map_err(err)?,
        ),
    ];
    for m in [[1, 1], [2, 2], [2, 3], [3, 3]] {
        shipped.push((
            format!("R(Bl_2 P3; -{}E1-{}E2, A)", m[0], m[1]),
            point_blowup_ring(coordinate_blowup(3, 2).map_err(err)?, &m).map_err(err)?,
        ));
    }
    let mut pairs = 0;
    for (name, ring) in &shipped {
        let b = DegreeBox::cube(ring.rank(), -5, 5).map_err(err)?;
        let rep = ring.local_domain_probe(&b).map_err(err)?;
        check(rep.violations.is_empty(), format!("{name}: violation at {:?}", rep.first_violation()))?;
        pairs += rep.pairs_checked;
    }
    let x = Arc::new(p1_product(2).map_err(err)?);
    let bypass = MultiSectionRing::new_unchecked(
        x,
        vec![Divisor::basis(4, 0), Divisor::basis(4, 0).scale(-1)],
        RingOptions::default(),
    )
    .map_err(err)?;
    let rep = bypass
        .local_domain_probe(&DegreeBox::cube(2, -5, 5).map_err(err)?)
        .map_err(err)?;
    check(rep.first_violation() == Some(&[1, 1][..]), format!("bypassed ring: {:?}", rep.first_violation()))?;
    Ok(format!(
        "{} rings clean over {pairs} pairs; bypassed (A1, -A1) violates at (1,1)",
        shipped.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("weighted-plane freeness table", weighted_plane_table),
        ("point blow-up freeness", point_blowup_table),
        ("Cox ring of P1xP1 shift", cox_shift),
        ("restriction to sublattices", restriction),
        ("Segre canonical pieces", segre),
        ("local cohomology duality", duality),
        ("blow-up vs toric dP6", cross_backend),
        ("property suites", property_suites),
        ("local domain probe", probes),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
}
