//! Subcommand bodies. Each returns a report whose JSON keys are sorted and
//! whose tables are in lexicographic degree order.

use coxcanon::catalog::{
    coordinate_blowup, cox_p1xp1, point_blowup_ring, weighted_plane_235, weighted_plane_ring,
};
use coxcanon::{
    DegreeBox, FGAbelianGroup, GradedDimTable, Hypotheses, MultiSectionRing, OmegaMethod,
    RingOptions,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::job::JobSpec;
use crate::CliError;

pub enum Report {
    Json(Value),
    /// CSV header and rows, plus the JSON form for `--format json`.
    Table { json: Value, header: Vec<String>, rows: Vec<Vec<String>> },
}

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

fn degree_key(n: &[i64]) -> String {
    n.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn group(g: &FGAbelianGroup) -> Value {
    json!({
        "free_rank": g.free_rank(),
        "torsion": ints(g.torsion()),
    })
}

fn hypotheses(h: &Hypotheses) -> Value {
    json!({
        "ample_witness": h.ample_witness,
        "classes_independent": h.classes_independent,
        "noetherian_assumed": h.noetherian_assumed,
        "witness_bound": h.witness_bound,
    })
}

fn warnings(ring: &MultiSectionRing) -> Value {
    let mut w = Vec::new();
    if ring.ample_witness().is_none() {
        w.push(format!(
            "no ample Cartier combination found with |a_i| <= {}; canonical-module results assume one exists",
            ring.options().witness_bound
        ));
    }
    json!(w)
}

fn table_json(t: &GradedDimTable) -> Value {
    let entries: Vec<Value> = t
        .iter()
        .map(|(n, v)| json!({"degree": n, "dimension": v}))
        .collect();
    json!({"box": t.degree_box().to_string(), "entries": entries})
}

fn table_rows(t: &GradedDimTable) -> Vec<Vec<String>> {
    t.iter().map(|(n, v)| vec![degree_key(n), v.to_string()]).collect()
}

pub struct Context {
    pub job: JobSpec,
    pub degree_box: Option<Vec<(i64, i64)>>,
    pub sublattice: Option<Vec<Vec<i64>>>,
}

impl Context {
    fn ring(&self) -> Result<MultiSectionRing, CliError> {
        let backend = self.job.backend()?;
        let divisors = self.job.divisors()?;
        if divisors.is_empty() {
            return Err(CliError::Input("the job lists no divisors".into()));
        }
        let options = RingOptions {
            witness_bound: self.job.witness_bound.unwrap_or(RingOptions::default().witness_bound),
            require_witness: false,
        };
        Ok(MultiSectionRing::with_options(backend, divisors, options)?)
    }

    fn make_box(&self, rank: usize) -> Result<DegreeBox, CliError> {
        let ranges: Vec<(i64, i64)> = match (&self.degree_box, &self.job.degree_box) {
            (Some(r), _) => r.clone(),
            (None, Some(r)) => r.iter().map(|[lo, hi]| (*lo, *hi)).collect(),
            (None, None) => vec![(-5, 5)],
        };
        let ranges = if ranges.len() == 1 && rank != 1 {
            vec![ranges[0]; rank]
        } else {
            ranges
        };
        if ranges.len() != rank {
            return Err(CliError::Input(format!(
                "degree box has {} axes, expected {rank}",
                ranges.len()
            )));
        }
        DegreeBox::new(ranges).map_err(|e| CliError::Input(e.to_string()))
    }

    fn sublattice(&self) -> Result<Vec<Vec<i64>>, CliError> {
        self.sublattice
            .clone()
            .or_else(|| self.job.sublattice.clone())
            .ok_or_else(|| CliError::Input("restrict needs a sublattice".into()))
    }
}

fn ring_header(ring: &MultiSectionRing) -> Value {
    json!({
        "divisors": ring.divisors().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "hypotheses": hypotheses(&ring.hypotheses()),
        "variety": ring.backend().describe(),
        "warnings": warnings(ring),
    })
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(a), Value::Object(b)) = (&mut base, extra) {
        a.extend(b);
    }
    base
}

pub fn classgroup(ctx: &Context) -> Result<Report, CliError> {
    let backend = ctx.job.backend()?;
    let divisors = ctx.job.divisors()?;
    let mut out = json!({
        "canonical_class": ints(&backend.divisor_class(&backend.canonical_divisor())?.coords),
        "class_group": group(backend.class_group()),
        "variety": backend.describe(),
    });
    if !divisors.is_empty() {
        let ring = ctx.ring()?;
        let classes: Value = match ring.classes() {
            Some(cs) => cs.iter().map(|c| ints(&c.coords)).collect(),
            None => Value::Null,
        };
        let cl_r = match ring.classes() {
            Some(_) => group(&ring.cl_r_group()?.group),
            None => Value::Null,
        };
        out = merge(
            out,
            merge(ring_header(&ring), json!({"divisor_classes": classes, "cl_r": cl_r})),
        );
    }
    Ok(Report::Json(out))
}

fn single_table(kind: &str, ring: &MultiSectionRing, t: &GradedDimTable) -> Report {
    Report::Table {
        json: merge(ring_header(ring), json!({"kind": kind, "table": table_json(t)})),
        header: vec!["degree".into(), "dimension".into()],
        rows: table_rows(t),
    }
}

pub fn sections(ctx: &Context) -> Result<Report, CliError> {
    let ring = ctx.ring()?;
    let t = ring.graded_table(&ctx.make_box(ring.rank())?)?;
    Ok(single_table("graded", &ring, &t))
}

pub fn canonical(ctx: &Context) -> Result<Report, CliError> {
    let ring = ctx.ring()?;
    let t = ring.canonical_table(&ctx.make_box(ring.rank())?)?;
    Ok(single_table("canonical", &ring, &t))
}

pub fn freeness(ctx: &Context) -> Result<Report, CliError> {
    let ring = ctx.ring()?;
    let v = ring.freeness_test()?;
    let opt = |x: &Option<Vec<BigInt>>| x.as_ref().map_or(Value::Null, |v| ints(v));
    Ok(Report::Json(merge(
        ring_header(&ring),
        json!({
            "coefficients": opt(&v.coefficients),
            "free": v.free,
            "generator_degree": opt(&v.generator_degree),
            "twist": opt(&v.twist),
        }),
    )))
}

pub fn restrict(ctx: &Context) -> Result<Report, CliError> {
    let ring = ctx.ring()?;
    let sub = ctx.sublattice()?;
    if sub.iter().any(|row| row.len() != ring.rank()) {
        return Err(CliError::Input(format!(
            "sublattice vectors need {} entries",
            ring.rank()
        )));
    }
    let rep = ring.restriction_check(&sub, &ctx.make_box(sub.len())?)?;
    let method = match rep.method {
        OmegaMethod::CanonicalDivisor => "canonical_divisor",
        OmegaMethod::SemigroupInterior => "semigroup_interior",
    };
    let rows = rep
        .restricted
        .iter()
        .map(|(n, v)| {
            vec![degree_key(n), v.to_string(), rep.subring.get(n).unwrap_or(0).to_string()]
        })
        .collect();
    let json = merge(
        ring_header(&ring),
        json!({
            "agree": rep.agree(),
            "ample_in_sublattice": rep.ample_in_sublattice,
            "method": method,
            "mismatches": rep.mismatches,
            "restricted_omega": table_json(&rep.restricted),
            "sublattice": rep.sublattice,
            "subring_omega": table_json(&rep.subring),
        }),
    );
    Ok(Report::Table {
        json,
        header: vec!["degree".into(), "restricted".into(), "subring".into()],
        rows,
    })
}

pub fn duality(ctx: &Context) -> Result<Report, CliError> {
    let ring = ctx.ring()?;
    let rep = ring.serre_duality_check(&ctx.make_box(ring.rank())?)?;
    let rows = rep
        .local
        .iter()
        .map(|(n, v)| vec![degree_key(n), v.to_string(), rep.oracle.get(n).unwrap_or(0).to_string()])
        .collect();
    let json = merge(
        ring_header(&ring),
        json!({
            "agree": rep.agree(),
            "factors": rep.factors,
            "local_cohomology": table_json(&rep.local),
            "mismatches": rep.mismatches,
            "oracle": table_json(&rep.oracle),
        }),
    );
    Ok(Report::Table {
        json,
        header: vec!["degree".into(), "local".into(), "oracle".into()],
        rows,
    })
}

pub fn probe(ctx: &Context) -> Result<Report, CliError> {
    let ring = ctx.ring()?;
    let rep = ring.local_domain_probe(&ctx.make_box(ring.rank())?)?;
    Ok(Report::Json(merge(
        ring_header(&ring),
        json!({
            "box": rep.degree_box.to_string(),
            "first_violation": rep.first_violation(),
            "pairs_checked": rep.pairs_checked,
            "violations": rep.violations,
        }),
    )))
}

/// Regenerates the worked examples: the weighted-plane freeness grid, the
/// point blow-up freeness list and the Cox ring of `P^1 x P^1`.
pub fn examples(ctx: &Context) -> Result<Report, CliError> {
    let x = weighted_plane_235()?;
    let mut grid = Vec::new();
    for alpha in 1..=6 {
        for beta in 1..=6 {
            let r = weighted_plane_ring(x.clone(), alpha, beta)?;
            let v = r.freeness_test()?;
            grid.push(json!({
                "alpha": alpha,
                "beta": beta,
                "cl_r_torsion": ints(r.cl_r_group()?.group.torsion()),
                "free": v.free,
                "generator_degree": v.generator_degree.as_ref().map_or(Value::Null, |g| ints(g)),
            }));
        }
    }
    let mut blowups = Vec::new();
    for m in [[1, 1], [2, 2], [2, 3], [3, 3]] {
        let r = point_blowup_ring(coordinate_blowup(3, 2)?, &m)?;
        let v = r.freeness_test()?;
        blowups.push(json!({
            "free": v.free,
            "m": m,
            "generator_degree": v.generator_degree.as_ref().map_or(Value::Null, |g| ints(g)),
        }));
    }
    let cox = cox_p1xp1()?;
    let b = ctx.make_box(2)?;
    let verdict = cox.freeness_test()?;
    let axis = cox.restriction_check(&[vec![1, 0]], &DegreeBox::cube(1, -5, 5)?)?;
    let diagonal = cox.restriction_check(&[vec![1, 1]], &DegreeBox::cube(1, -5, 5)?)?;
    Ok(Report::Json(json!({
        "cox_p1xp1": {
            "canonical": table_json(&cox.canonical_table(&b)?),
            "graded": table_json(&cox.graded_table(&b)?),
            "twist": verdict.twist.as_ref().map_or(Value::Null, |t| ints(t)),
            "restriction_axis": {
                "agree": axis.agree(),
                "restricted_omega": table_json(&axis.restricted),
                "subring_omega": table_json(&axis.subring),
            },
            "restriction_diagonal": {
                "agree": diagonal.agree(),
            },
        },
        "point_blowup_p3": blowups,
        "weighted_plane_235": grid,
    })))
}

