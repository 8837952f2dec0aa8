//! Sphere-of-influence graphs.
//!
//! For a metric with positive off-diagonal entries, `r_i` is the distance
//! from `i` to its nearest neighbour, and `{i, j}` is an edge iff
//! `d(i,j) < r_i + r_j`. Ties are non-edges.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Family, SimpleGraph};
use crate::metric::{pairs, Metric};
use crate::paircut::{paircut_membership, PaircutVerdict};
use crate::rational::Rational;

/// `r_i = min_{j != i} d(i,j)`; rejects zero distances.
pub fn radii(d: &Metric) -> Result<Vec<Rational>> {
    if let Some((i, j)) = pairs(d.n()).find(|&(i, j)| d.get(i, j).is_zero()) {
        return Err(Error::ZeroDistance { i, j });
    }
    Ok((1..=d.n())
        .map(|i| (1..=d.n()).filter(|&j| j != i).map(|j| d.get(i, j)).min().expect("n >= 2"))
        .collect())
}

pub fn sig_graph(d: &Metric) -> Result<SimpleGraph> {
    let r = radii(d)?;
    let edges: Vec<(usize, usize)> = pairs(d.n()).filter(|&(i, j)| d.get(i, j) < &r[i - 1] + &r[j - 1]).collect();
    SimpleGraph::from_edges(d.n(), &edges)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeStatus {
    /// The inequality has the required sign with room to spare.
    StrictPass,
    /// A required non-edge sits exactly on the tie `d(i,j) = r_i + r_j`.
    NonstrictPass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCheck {
    pub i: usize,
    pub j: usize,
    pub edge: bool,
    /// `r_i + r_j - d(i,j)`.
    pub slack: Rational,
    pub status: EdgeStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigReport {
    pub radii: Vec<Rational>,
    pub edge_checks: Vec<EdgeCheck>,
}

impl SigReport {
    pub fn passes(&self) -> bool {
        self.edge_checks.iter().all(|c| c.status != EdgeStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &EdgeCheck> {
        self.edge_checks.iter().filter(|c| c.status == EdgeStatus::Fail)
    }
}

/// Checks whether `d` is a SIG-metric of `g`, pair by pair.
pub fn verify_sig_metric(d: &Metric, g: &SimpleGraph) -> Result<SigReport> {
    if d.n() != g.n() {
        return Err(Error::DimensionMismatch(format!("metric on {} points, graph on {}", d.n(), g.n())));
    }
    let radii = radii(d)?;
    let edge_checks = pairs(d.n())
        .map(|(i, j)| {
            let slack = &radii[i - 1] + &radii[j - 1] - d.get(i, j);
            let edge = g.has_edge(i, j);
            let status = match (edge, slack.is_positive(), slack.is_zero()) {
                (true, true, _) | (false, false, false) => EdgeStatus::StrictPass,
                (false, _, true) => EdgeStatus::NonstrictPass,
                _ => EdgeStatus::Fail,
            };
            EdgeCheck { i, j, edge, slack, status }
        })
        .collect();
    Ok(SigReport { radii, edge_checks })
}

/// The metric every SIG-metric of the star `S(n)` must be, given the
/// center-to-leaf distances `a`: `d(0,i) = a_i`, `d(i,j) = a_i + a_j`.
///
/// Vertex 1 is the center (external label 0) and vertex `i + 1` is leaf `i`.
pub fn forced_star_metric(a: &[Rational]) -> Result<Metric> {
    if let Some(k) = a.iter().position(|x| !x.is_positive()) {
        return Err(Error::NegativeEntry { position: format!("a_{}", k + 1), value: a[k].to_string() });
    }
    Metric::from_fn(a.len() + 1, |i, j| if i == 1 { a[j - 2].clone() } else { &a[i - 2] + &a[j - 2] })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarObstruction {
    pub metric: Metric,
    pub sig: SigReport,
    pub paircut: PaircutVerdict,
}

impl StarObstruction {
    /// The forced metric is a SIG-metric of `S(n)` and lies outside the
    /// pair-cut cone.
    pub fn holds(&self) -> bool {
        self.sig.passes() && !self.paircut.member
    }
}

pub fn star_graph_obstruction(a: &[Rational]) -> Result<StarObstruction> {
    let n = a.len();
    if n < 4 {
        return Err(Error::TooFewVertices { n, min: 4, what: "the star obstruction" });
    }
    let metric = forced_star_metric(a)?;
    let star = Family::Star(n).build()?;
    let sig = verify_sig_metric(&metric, &star)?;
    let paircut = paircut_membership(&metric)?;
    Ok(StarObstruction { metric, sig, paircut })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::truncated_metric;
    use crate::rational::{int, ratio};

    #[test]
    fn equal_distances_give_complete_graph() {
        let d = Metric::from_fn(5, |_, _| ratio(3, 2)).unwrap();
        assert_eq!(sig_graph(&d).unwrap(), Family::Complete(5).build().unwrap());
    }

    #[test]
    fn zero_distance_is_rejected() {
        let d = Metric::new(3, vec![int(0), int(1), int(1)]).unwrap();
        assert!(matches!(sig_graph(&d), Err(Error::ZeroDistance { i: 1, j: 2 })));
    }

    #[test]
    fn wrong_graph_fails() {
        let d = truncated_metric(&Family::Complete(5).build().unwrap()).unwrap();
        let report = verify_sig_metric(&d, &Family::Cycle(5).build().unwrap()).unwrap();
        assert!(!report.passes());
        assert_eq!(report.failures().count(), 5);
    }

    #[test]
    fn star_metric_ties_on_leaf_pairs() {
        let a = [1, 1, 1, 1].map(int);
        let ob = star_graph_obstruction(&a).unwrap();
        assert!(ob.holds());
        for c in &ob.sig.edge_checks {
            let want = if c.i == 1 { EdgeStatus::StrictPass } else { EdgeStatus::NonstrictPass };
            assert_eq!(c.status, want, "pair ({}, {})", c.i, c.j);
        }
    }

    #[test]
    fn star_obstruction_rejects_bad_input() {
        assert!(star_graph_obstruction(&[int(1), int(0), int(1), int(1)]).is_err());
        assert!(star_graph_obstruction(&[int(1), int(1), int(1)]).is_err());
    }
}
