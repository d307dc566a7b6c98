use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// A product of inclusive integer ranges, one per grading axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeBox {
    ranges: Vec<(i64, i64)>,
}

impl DegreeBox {
    pub fn new(ranges: Vec<(i64, i64)>) -> Result<Self> {
        if let Some((lo, hi)) = ranges.iter().find(|(lo, hi)| lo > hi) {
            return Err(Error::Unsupported(format!("empty degree range {lo}:{hi}")));
        }
        Ok(DegreeBox { ranges })
    }

    /// `[lo, hi]^s`.
    pub fn cube(s: usize, lo: i64, hi: i64) -> Result<Self> {
        Self::new(vec![(lo, hi); s])
    }

    pub fn ranges(&self) -> &[(i64, i64)] {
        &self.ranges
    }

    pub fn rank(&self) -> usize {
        self.ranges.len()
    }

    pub fn len(&self) -> usize {
        self.ranges
            .iter()
            .map(|(lo, hi)| (hi - lo + 1) as usize)
            .product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, n: &[i64]) -> bool {
        n.len() == self.ranges.len()
            && n.iter().zip(&self.ranges).all(|(x, (lo, hi))| lo <= x && x <= hi)
    }

    /// Every degree of the box in lexicographic order.
    pub fn degrees(&self) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = vec![Vec::new()];
        for &(lo, hi) in &self.ranges {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (lo..=hi).map(move |x| {
                        let mut v = prefix.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// The box enlarged by `r` on both sides of every axis.
    pub fn widen(&self, r: i64) -> DegreeBox {
        DegreeBox {
            ranges: self.ranges.iter().map(|(lo, hi)| (lo - r, hi + r)).collect(),
        }
    }
}

impl std::fmt::Display for DegreeBox {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.ranges.iter().map(|(lo, hi)| format!("{lo}:{hi}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Dimensions of graded pieces over a finite box. A cache, not a claim about
/// degrees outside the box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDimTable {
    degree_box: DegreeBox,
    entries: BTreeMap<Vec<i64>, u64>,
}

impl GradedDimTable {
    /// Evaluates `f` on every degree of the box, in parallel.
    pub fn fill<F>(degree_box: &DegreeBox, f: F) -> Result<Self>
    where
        F: Fn(&[i64]) -> Result<u64> + Sync,
    {
        let degrees = degree_box.degrees();
        let values: Vec<u64> = degrees.par_iter().map(|n| f(n)).collect::<Result<_>>()?;
        Ok(GradedDimTable {
            degree_box: degree_box.clone(),
            entries: degrees.into_iter().zip(values).collect(),
        })
    }

    pub fn degree_box(&self) -> &DegreeBox {
        &self.degree_box
    }

    pub fn get(&self, n: &[i64]) -> Option<u64> {
        self.entries.get(n).copied()
    }

    /// Entries in lexicographic degree order.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, u64)> {
        self.entries.iter().map(|(k, v)| (k, *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_identically_zero(&self) -> bool {
        self.entries.values().all(|&v| v == 0)
    }

    /// Degrees where the two tables differ (degrees missing from `other`
    /// count as differences).
    pub fn differences(&self, other: &GradedDimTable) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .filter(|(k, v)| other.get(k) != Some(**v))
            .map(|(k, _)| k.clone())
            .collect()
    }
}
