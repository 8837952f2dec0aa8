//! Finite semi-metrics on `V_n` stored as vectors over lexicographically
//! ordered pairs, plus the trace and star-trace summaries.

use num_traits::{Signed, Zero};

use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::rational::{zero, Rational};

/// `n (n - 1) / 2`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Zero-based lexicographic rank of the pair `{i, j}` with `1 <= i < j <= n`.
pub fn pair_index(i: usize, j: usize, n: usize) -> Result<usize> {
    if i == 0 || i >= j || j > n {
        return Err(Error::InvalidPair { i, j, n });
    }
    Ok(pair_rank(i, j, n))
}

#[inline]
fn pair_rank(i: usize, j: usize, n: usize) -> usize {
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

/// Inverse of [`pair_index`]: the 1-based pair at a zero-based position.
pub fn pair_at(index: usize, n: usize) -> Option<(usize, usize)> {
    let mut rest = index;
    for i in 1..n {
        let row = n - i;
        if rest < row {
            return Some((i, i + 1 + rest));
        }
        rest -= row;
    }
    None
}

/// Iterator over all pairs `(i, j)`, `1 <= i < j <= n`, in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// A semi-metric on `V_n`.
///
/// Construction checks shape and nonnegativity only; the triangle
/// inequality is checked by [`Metric::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Metric {
    n: usize,
    d: Vec<Rational>,
}

impl Metric {
    pub fn new(n: usize, d: Vec<Rational>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVertices { n, min: 2, what: "a metric" });
        }
        if d.len() != pair_count(n) {
            return Err(Error::DimensionMismatch(format!(
                "metric on {n} points needs {} distances, got {}",
                pair_count(n),
                d.len()
            )));
        }
        if let Some(k) = d.iter().position(|x| x.is_negative()) {
            let (i, j) = pair_at(k, n).expect("index in range");
            return Err(Error::NegativeEntry { position: format!("d({i},{j})"), value: d[k].to_string() });
        }
        Ok(Self { n, d })
    }

    /// Builds a metric from a distance function on 1-based pairs `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        let d = pairs(n).map(|(i, j)| f(i, j)).collect();
        Self::new(n, d)
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, vec![zero(); pair_count(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.d
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.d
    }

    /// `d(i, j)` for 1-based vertices in either order; `d(i, i) = 0`.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.dist(i, j).clone()
    }

    pub(crate) fn dist(&self, i: usize, j: usize) -> &Rational {
        static ZERO: std::sync::OnceLock<Rational> = std::sync::OnceLock::new();
        assert!(i >= 1 && j >= 1 && i <= self.n && j <= self.n, "vertex out of range");
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => ZERO.get_or_init(zero),
            std::cmp::Ordering::Less => &self.d[pair_rank(i, j, self.n)],
            std::cmp::Ordering::Greater => &self.d[pair_rank(j, i, self.n)],
        }
    }

    /// `λ d` for `λ >= 0`.
    pub fn scaled(&self, lambda: &Rational) -> Result<Self> {
        Self::new(self.n, self.d.iter().map(|x| x * lambda).collect())
    }

    /// Sum of two metrics on the same vertex set.
    pub fn sum(&self, other: &Metric) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("metrics on {} and {} points", self.n, other.n)));
        }
        Self::new(self.n, self.d.iter().zip(&other.d).map(|(a, b)| a + b).collect())
    }

    pub fn trace(&self) -> Rational {
        self.d.iter().sum()
    }

    /// `s_i`, the sum of distances from `i` to every other vertex.
    pub fn star_trace(&self, i: usize) -> Rational {
        (1..=self.n).filter(|&j| j != i).map(|j| self.dist(i, j)).sum()
    }

    pub fn summarize(&self) -> MetricSummary {
        MetricSummary {
            trace: self.trace(),
            star_traces: (1..=self.n).map(|i| self.star_trace(i)).collect(),
        }
    }

    /// `s_C`, the total distance across a nontrivial cut.
    pub fn cut_trace(&self, cut: &Cut) -> Result<Rational> {
        if cut.n() != self.n {
            return Err(Error::DimensionMismatch(format!("cut on {} points, metric on {}", cut.n(), self.n)));
        }
        if cut.is_trivial() {
            return Err(Error::TrivialCut);
        }
        let inside = cut.members();
        let outside = cut.complement().members();
        let mut total = zero();
        for &i in &inside {
            for &j in &outside {
                total += self.dist(i, j);
            }
        }
        Ok(total)
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> Rational {
        self.d.iter().max().cloned().unwrap_or_else(zero)
    }

    /// Checks the metric axioms, listing every violation.
    ///
    /// In strict mode zero distances between distinct points are reported
    /// as well; in semi-metric mode they are allowed.
    pub fn validate(&self, strict: bool) -> ValidationReport {
        let n = self.n;
        let mut report = ValidationReport::default();
        for (k, (i, j)) in pairs(n).enumerate() {
            let x = &self.d[k];
            if x.is_negative() {
                report.negative_entries.push((i, j));
            } else if strict && x.is_zero() {
                report.zero_entries.push((i, j));
            }
        }
        for (i, j) in pairs(n) {
            let dij = self.dist(i, j);
            for k in (1..=n).filter(|&k| k != i && k != j) {
                let slack = self.dist(i, k) + self.dist(k, j) - dij;
                if slack.is_negative() {
                    report.triangle_violations.push(TriangleViolation { i, j, k, slack });
                }
            }
        }
        report
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricSummary {
    pub trace: Rational,
    /// `star_traces[i - 1] = s_i`.
    pub star_traces: Vec<Rational>,
}

/// `d(i, j) > d(i, k) + d(k, j)`; `slack = d(i,k) + d(k,j) - d(i,j) < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub slack: Rational,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub triangle_violations: Vec<TriangleViolation>,
    pub zero_entries: Vec<(usize, usize)>,
    pub negative_entries: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.triangle_violations.is_empty() && self.zero_entries.is_empty() && self.negative_entries.is_empty()
    }
}
