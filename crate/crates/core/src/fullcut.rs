//! The full cut-matrix `S` (columns `δ_C` over all nontrivial cuts):
//! a sufficient condition for cut-cone membership built from its right
//! inverse, an explicit basis of `ker S`, and cut-certificate checks.
//!
//! Since `SSᵀ = 2^{n-2}(I + J)`, the vector `w = Sᵀ(SSᵀ)⁻¹ d` solves
//! `S w = d` and has coordinates
//!
//! ```text
//! w_C = (s_C - Tr(d) |C|(n-|C|) / (m+1)) / 2^{n-2},     m = n(n-1)/2.
//! ```
//!
//! If all of them are nonnegative, `w` is a cut decomposition of `d`.
//! Failing that inequality proves nothing, so [`sufficient_condition`]
//! answers "member" or "inconclusive", never "non-member".

use num_traits::{Signed, Zero};

use crate::cut::{cut_index, enumerate_cuts, Cut};
use crate::error::{Error, Result};
use crate::metric::{pair_count, pairs, Metric};
use crate::rational::{int, pow2, ratio, zero, Rational};

/// Nonnegative weights on cuts whose weighted cut-metrics sum to a metric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCertificate {
    pub n: usize,
    pub cuts: Vec<Cut>,
    pub weights: Vec<Rational>,
}

impl CutCertificate {
    pub fn new(n: usize, cuts: Vec<Cut>, weights: Vec<Rational>) -> Result<Self> {
        if cuts.len() != weights.len() {
            return Err(Error::InvalidCertificate(format!("{} cuts but {} weights", cuts.len(), weights.len())));
        }
        if let Some(c) = cuts.iter().find(|c| c.n() != n) {
            return Err(Error::InvalidCertificate(format!("cut {c} is on {} points, expected {n}", c.n())));
        }
        Ok(Self { n, cuts, weights })
    }

    /// `Σ w_C δ_C` as a pair-indexed vector; weights are not sign-checked.
    pub fn combination(&self) -> Vec<Rational> {
        pairs(self.n)
            .map(|(i, j)| {
                self.cuts
                    .iter()
                    .zip(&self.weights)
                    .filter(|(c, w)| !w.is_zero() && c.separates(i, j))
                    .map(|(_, w)| w.clone())
                    .sum()
            })
            .collect()
    }

    /// Drops zero-weight entries.
    pub fn pruned(&self) -> Self {
        let (cuts, weights) = self
            .cuts
            .iter()
            .zip(&self.weights)
            .filter(|(_, w)| !w.is_zero())
            .map(|(c, w)| (*c, w.clone()))
            .unzip();
        Self { n: self.n, cuts, weights }
    }

    pub fn metric(&self) -> Result<Metric> {
        Metric::new(self.n, self.combination())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    /// Positions (into the certificate) of negative weights.
    pub negative_weights: Vec<usize>,
    /// First pair where the combination differs from the metric: `(i, j, expected, got)`.
    pub mismatch: Option<(usize, usize, Rational, Rational)>,
}

impl CertificateReport {
    pub fn is_valid(&self) -> bool {
        self.negative_weights.is_empty() && self.mismatch.is_none()
    }
}

pub fn verify_cut_certificate(cert: &CutCertificate, d: &Metric) -> Result<CertificateReport> {
    if cert.n != d.n() {
        return Err(Error::DimensionMismatch(format!("certificate on {} points, metric on {}", cert.n, d.n())));
    }
    let negative_weights = cert.weights.iter().enumerate().filter(|(_, w)| w.is_negative()).map(|(k, _)| k).collect();
    let combined = cert.combination();
    let mismatch = pairs(d.n())
        .zip(combined)
        .zip(d.as_slice())
        .find(|((_, got), want)| got != *want)
        .map(|(((i, j), got), want)| (i, j, want.clone(), got));
    Ok(CertificateReport { negative_weights, mismatch })
}

/// `S_r d`, one coordinate per nontrivial cut in graded lexicographic order.
pub fn candidate_solution(d: &Metric) -> Result<Vec<Rational>> {
    let n = d.n();
    let cuts = enumerate_cuts(n)?;
    let m = pair_count(n) as i64;
    let trace_share = d.trace() * ratio(1, m + 1);
    let scale = pow2(n - 2).recip();
    cuts.iter()
        .map(|c| {
            let s_c = d.cut_trace(c)?;
            Ok((s_c - &trace_share * int(c.separated_pairs() as i64)) * &scale)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SufficientVerdict {
    /// The inequality holds for every cut; the candidate solution is a certificate.
    Member(CutCertificate),
    /// Some cut fails the inequality; membership is undecided.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SufficientReport {
    pub verdict: SufficientVerdict,
    /// `(C, s_C - |C|(n-|C|) Tr(d)/(m+1))` for one cut per complement pair,
    /// namely the first `2^{n-1} - 1` cuts of the graded order.
    pub slacks: Vec<(Cut, Rational)>,
}

impl SufficientReport {
    pub fn is_member(&self) -> bool {
        matches!(self.verdict, SufficientVerdict::Member(_))
    }

    pub fn failing_cuts(&self) -> Vec<Cut> {
        self.slacks.iter().filter(|(_, s)| s.is_negative()).map(|(c, _)| *c).collect()
    }
}

pub fn sufficient_condition(d: &Metric) -> Result<SufficientReport> {
    let n = d.n();
    let cuts = enumerate_cuts(n)?;
    let m = pair_count(n) as i64;
    let trace_share = d.trace() * ratio(1, m + 1);
    // s_C and |C|(n-|C|) are complement-invariant, and the first half of the
    // graded order holds exactly one cut from each complement pair
    let half = cuts.len() / 2;
    let slacks: Vec<(Cut, Rational)> = cuts[..half]
        .iter()
        .map(|c| Ok((*c, d.cut_trace(c)? - &trace_share * int(c.separated_pairs() as i64))))
        .collect::<Result<_>>()?;
    let verdict = if slacks.iter().any(|(_, s)| s.is_negative()) {
        SufficientVerdict::Inconclusive
    } else {
        let weights = candidate_solution(d)?;
        SufficientVerdict::Member(CutCertificate::new(n, cuts, weights)?)
    };
    Ok(SufficientReport { verdict, slacks })
}

/// A sparse vector over the nontrivial cuts (graded lexicographic order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutVector {
    pub len: usize,
    /// `(cut index, value)` pairs sorted by index, no zeros.
    pub entries: Vec<(usize, Rational)>,
}

impl CutVector {
    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = vec![zero(); self.len];
        for (k, x) in &self.entries {
            out[*k] = x.clone();
        }
        out
    }

    /// `S v`, computed from the sparse entries.
    pub fn image(&self, n: usize) -> Result<Vec<Rational>> {
        let cuts = enumerate_cuts(n)?;
        if cuts.len() != self.len {
            return Err(Error::DimensionMismatch(format!("vector of length {} for n = {n}", self.len)));
        }
        Ok(pairs(n)
            .map(|(i, j)| {
                self.entries.iter().filter(|(k, _)| cuts[*k].separates(i, j)).map(|(_, x)| x.clone()).sum()
            })
            .collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelLabel {
    /// `e_k - e_{2^n-1-k}` for the 1-based cut position `k`.
    Skew(usize),
    /// Alternating sum `Σ_{C ⊆ T} (-1)^{|C|} e_C` over the cuts inside `T`.
    Alternating(Cut),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub n: usize,
    pub labels: Vec<KernelLabel>,
    pub vectors: Vec<CutVector>,
}

impl KernelBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// `e_k - e_{2^n-1-k}` for `1 <= k <= 2^{n-1} - 1`.
pub fn skew_generator(n: usize, k: usize) -> Result<CutVector> {
    let len = cut_count(n)?;
    if k == 0 || k > len / 2 {
        return Err(Error::InvalidCertificate(format!("skew generator index {k} outside 1..={}", len / 2)));
    }
    let mut entries = vec![(k - 1, int(1)), (len - k, int(-1))];
    entries.sort_by_key(|(i, _)| *i);
    Ok(CutVector { len, entries })
}

/// `Σ (-1)^{|C|} e_C` over nontrivial cuts `C ⊆ T`; the empty and full cuts
/// contribute nothing. Defined for any nonempty `T`, but only in
/// `ker S` when `|T| >= 3`.
pub fn alternating_generator(t: &Cut) -> Result<CutVector> {
    let n = t.n();
    let len = cut_count(n)?;
    if t.is_empty() {
        return Err(Error::TrivialCut);
    }
    let mut entries = Vec::with_capacity(1 << t.len());
    // walk the submasks of T
    let mut sub = t.mask();
    loop {
        let c = Cut::from_mask(n, sub)?;
        if !c.is_trivial() {
            let sign = if c.len() % 2 == 0 { 1 } else { -1 };
            entries.push((cut_index(&c)?, int(sign)));
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & t.mask();
    }
    entries.sort_by_key(|(i, _)| *i);
    Ok(CutVector { len, entries })
}

fn cut_count(n: usize) -> Result<usize> {
    Ok(enumerate_cuts(n)?.len())
}

/// The basis `{ψ_T : |T| >= 3} ∪ {φ_1, ..., φ_{n-1}}` of `ker S`, of size
/// `2^n - 2 - n(n-1)/2`. Alternating generators come first, ordered by
/// `T` in graded lexicographic order.
pub fn kernel_basis(n: usize) -> Result<KernelBasis> {
    let cuts = enumerate_cuts(n)?;
    let mut labels = Vec::new();
    let mut vectors = Vec::new();
    let full = Cut::from_mask(n, (1u64 << n) - 1)?;
    for t in cuts.iter().filter(|c| c.len() >= 3).chain(std::iter::once(&full)) {
        labels.push(KernelLabel::Alternating(*t));
        vectors.push(alternating_generator(t)?);
    }
    for k in 1..n {
        labels.push(KernelLabel::Skew(k));
        vectors.push(skew_generator(n, k)?);
    }
    Ok(KernelBasis { n, labels, vectors })
}
