//! Point configurations realising metrics: `ℓ₁` embeddings read off cut
//! certificates, and an `ℓ∞` configuration whose SIG is a given graph.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fullcut::CutCertificate;
use crate::graph::SimpleGraph;
use crate::metric::{pairs, Metric};
use crate::rational::{int, zero, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    L1,
    LInf,
}

impl Norm {
    pub fn name(self) -> &'static str {
        match self {
            Norm::L1 => "l1",
            Norm::LInf => "linf",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    pub norm: Norm,
    pub points: Vec<Vec<Rational>>,
}

impl PointSet {
    pub fn new(norm: Norm, points: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(first) = points.first() {
            if let Some(p) = points.iter().position(|p| p.len() != first.len()) {
                return Err(Error::DimensionMismatch(format!(
                    "point {} has dimension {}, expected {}",
                    p + 1,
                    points[p].len(),
                    first.len()
                )));
            }
        }
        Ok(Self { norm, points })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn dimension(&self) -> usize {
        self.points.first().map_or(0, Vec::len)
    }

    /// Distance between 1-based points `i` and `j` under the tagged norm.
    pub fn distance(&self, i: usize, j: usize) -> Rational {
        let diffs = self.points[i - 1].iter().zip(&self.points[j - 1]).map(|(a, b)| (a - b).abs());
        match self.norm {
            Norm::L1 => diffs.sum(),
            Norm::LInf => diffs.max().unwrap_or_else(zero),
        }
    }

    pub fn metric(&self) -> Result<Metric> {
        Metric::from_fn(self.n(), |i, j| self.distance(i, j))
    }
}

/// Point `i` has coordinate `w_C` for each cut `C` containing `i`, else 0.
/// Zero-weight cuts are dropped first.
pub fn l1_embedding(cert: &CutCertificate) -> Result<PointSet> {
    if let Some(k) = cert.weights.iter().position(Signed::is_negative) {
        return Err(Error::InvalidCertificate(format!("weight of cut {} is negative", cert.cuts[k])));
    }
    let kept = cert.pruned();
    let points = (1..=cert.n)
        .map(|i| kept.cuts.iter().zip(&kept.weights).map(|(c, w)| if c.contains(i) { w.clone() } else { zero() }).collect())
        .collect();
    PointSet::new(Norm::L1, points)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub i: usize,
    pub j: usize,
    pub expected: Rational,
    pub actual: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryReport {
    pub mismatches: Vec<Mismatch>,
}

impl IsometryReport {
    pub fn is_isometry(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn verify_isometry(pts: &PointSet, d: &Metric) -> Result<IsometryReport> {
    if pts.n() != d.n() {
        return Err(Error::DimensionMismatch(format!("{} points for a metric on {}", pts.n(), d.n())));
    }
    let mismatches = pairs(d.n())
        .filter_map(|(i, j)| {
            let (expected, actual) = (d.get(i, j), pts.distance(i, j));
            (expected != actual).then_some(Mismatch { i, j, expected, actual })
        })
        .collect();
    Ok(IsometryReport { mismatches })
}

/// Rows of `E + 2I` with the last column removed, under `ℓ∞`.
///
/// The induced distance is 1 on edges and 2 elsewhere, so on a connected
/// graph (no isolated vertices) its SIG is the graph itself.
pub fn linf_sig_embedding(g: &SimpleGraph) -> Result<PointSet> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2, what: "an embedding" });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let points = (1..=n)
        .map(|i| {
            (1..n)
                .map(|k| {
                    if k == i {
                        int(2)
                    } else if g.has_edge(i, k) {
                        int(1)
                    } else {
                        zero()
                    }
                })
                .collect()
        })
        .collect();
    PointSet::new(Norm::LInf, points)
}

/// Drops coordinates that vanish on every point.
pub fn trim_zero_coordinates(pts: &PointSet) -> PointSet {
    let keep: Vec<usize> = (0..pts.dimension()).filter(|&k| pts.points.iter().any(|p| !p[k].is_zero())).collect();
    PointSet { norm: pts.norm, points: pts.points.iter().map(|p| keep.iter().map(|&k| p[k].clone()).collect()).collect() }
}
