//! Membership in the pair-cut cone, the cone spanned by the `n(n-1)/2`
//! cut-metrics `δ_{i,j}` whose cut is a pair.
//!
//! For `n >= 5` the square cut-matrix is invertible and the unique weights
//! solving `Σ w_{i,j} δ_{i,j} = d` have the closed form
//!
//! ```text
//! w_{i,j} = -d(i,j)/2 - Tr(d)/((n-2)(n-4)) + (s_i + s_j)/(2(n-4))
//! ```
//!
//! so `d` is a member exactly when every pair satisfies
//!
//! ```text
//! s_i + s_j >= (n-4) d(i,j) + 2 Tr(d)/(n-2).
//! ```
//!
//! Equality is allowed: the cone is closed. For `n < 5` there is no closed
//! form; use [`crate::oracle::paircut_membership_exact`].

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::metric::{pairs, Metric};
use crate::rational::{int, ratio, Rational};

fn require_closed_form(n: usize) -> Result<()> {
    if n < 5 {
        Err(Error::TooFewVertices { n, min: 5, what: "the closed-form pair-cut test" })
    } else {
        Ok(())
    }
}

/// A pair `{i, j}` whose inequality fails, with its exact (negative) slack
/// `s_i + s_j - (n-4) d(i,j) - 2 Tr(d)/(n-2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairViolation {
    pub i: usize,
    pub j: usize,
    pub slack: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaircutVerdict {
    pub member: bool,
    /// Closed-form weights, one per pair in lexicographic order.
    pub weights: Vec<Rational>,
    /// Every failing pair, sorted by pair index.
    pub violations: Vec<PairViolation>,
}

/// Slack of the membership inequality for every pair, in lexicographic order.
pub fn pair_slacks(d: &Metric) -> Result<Vec<Rational>> {
    require_closed_form(d.n())?;
    let n = d.n() as i64;
    let summary = d.summarize();
    let tail = &summary.trace * ratio(2, n - 2);
    Ok(pairs(d.n())
        .map(|(i, j)| {
            &summary.star_traces[i - 1] + &summary.star_traces[j - 1] - d.dist(i, j) * int(n - 4) - &tail
        })
        .collect())
}

/// The unique solution of `S_sq w = d`.
pub fn paircut_weights(d: &Metric) -> Result<Vec<Rational>> {
    require_closed_form(d.n())?;
    let n = d.n() as i64;
    let summary = d.summarize();
    let trace_term = &summary.trace * ratio(1, (n - 2) * (n - 4));
    let half = ratio(1, 2);
    let star_factor = ratio(1, 2 * (n - 4));
    Ok(pairs(d.n())
        .map(|(i, j)| {
            let stars = &summary.star_traces[i - 1] + &summary.star_traces[j - 1];
            stars * &star_factor - d.dist(i, j) * &half - &trace_term
        })
        .collect())
}

pub fn paircut_membership(d: &Metric) -> Result<PaircutVerdict> {
    let slacks = pair_slacks(d)?;
    let weights = paircut_weights(d)?;
    let violations: Vec<PairViolation> = pairs(d.n())
        .zip(slacks)
        .filter(|(_, s)| s.is_negative())
        .map(|((i, j), slack)| PairViolation { i, j, slack })
        .collect();
    Ok(PaircutVerdict { member: violations.is_empty(), weights, violations })
}

/// Per-vertex slack `(n-2) s_i - Tr(d)` of the necessary condition.
///
/// A negative slack proves `d` is not in the pair-cut cone; all slacks
/// nonnegative proves nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryConditionReport {
    pub slacks: Vec<Rational>,
}

impl NecessaryConditionReport {
    pub fn certifies_non_membership(&self) -> bool {
        self.slacks.iter().any(Signed::is_negative)
    }

    /// 1-based vertices with negative slack.
    pub fn failing_vertices(&self) -> Vec<usize> {
        self.slacks.iter().enumerate().filter(|(_, s)| s.is_negative()).map(|(k, _)| k + 1).collect()
    }
}

pub fn necessary_condition(d: &Metric) -> Result<NecessaryConditionReport> {
    require_closed_form(d.n())?;
    let summary = d.summarize();
    let factor = int(d.n() as i64 - 2);
    Ok(NecessaryConditionReport {
        slacks: summary.star_traces.iter().map(|s| s * &factor - &summary.trace).collect(),
    })
}

/// When every star trace equals a common `s`, membership reduces to
/// `max d(i,j) <= s/(n-2)`. Returns `None` if the star traces differ or
/// `n < 5`.
pub fn constant_star_shortcut(d: &Metric) -> Option<bool> {
    if d.n() < 5 {
        return None;
    }
    let summary = d.summarize();
    let s = summary.star_traces.first()?;
    if summary.star_traces.iter().any(|x| x != s) {
        return None;
    }
    let bound = s * ratio(1, d.n() as i64 - 2);
    Some(d.diameter() <= bound)
}

/// Rebuilds `Σ w_{i,j} δ_{i,j}` from pair weights.
pub fn reconstruct_from_pair_weights(n: usize, weights: &[Rational]) -> Vec<Rational> {
    let pair_list: Vec<(usize, usize)> = pairs(n).collect();
    pair_list
        .iter()
        .map(|&(k, l)| {
            pair_list
                .iter()
                .zip(weights)
                .filter(|((a, b), w)| !w.is_zero() && ([a, b].contains(&&k) != [a, b].contains(&&l)))
                .map(|(_, w)| w.clone())
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::{cut_metric_vector, Cut};
    use crate::cut_algebra::inverse_square_cut_matrix;
    use crate::metric::pair_index;
    use crate::rational::zero;

    fn pair_cut(n: usize, p: usize, q: usize) -> Metric {
        Metric::new(n, cut_metric_vector(&Cut::from_members(n, &[p, q]).unwrap())).unwrap()
    }

    #[test]
    fn single_pair_cut_has_indicator_weights() {
        let d = pair_cut(5, 2, 4);
        let w = paircut_weights(&d).unwrap();
        let k = pair_index(2, 4, 5).unwrap();
        for (idx, x) in w.iter().enumerate() {
            assert_eq!(*x, if idx == k { int(1) } else { zero() });
        }
        let verdict = paircut_membership(&d).unwrap();
        assert!(verdict.member);
        // the inequality is tight except at the pair itself
        let slacks = pair_slacks(&d).unwrap();
        for (idx, s) in slacks.iter().enumerate() {
            assert_eq!(s.is_zero(), idx != k);
        }
    }

    #[test]
    fn two_pair_combination_is_recovered() {
        let d = pair_cut(6, 1, 2).scaled(&int(2)).unwrap().sum(&pair_cut(6, 3, 4).scaled(&int(3)).unwrap()).unwrap();
        let w = paircut_weights(&d).unwrap();
        for (idx, x) in w.iter().enumerate() {
            let expected = if idx == pair_index(1, 2, 6).unwrap() {
                int(2)
            } else if idx == pair_index(3, 4, 6).unwrap() {
                int(3)
            } else {
                zero()
            };
            assert_eq!(*x, expected);
        }
    }

    #[test]
    fn complete_graph_weights_are_constant() {
        let k5 = Metric::from_fn(5, |_, _| int(1)).unwrap();
        let w = paircut_weights(&k5).unwrap();
        assert!(w.iter().all(|x| *x == ratio(1, 6)));
        assert_eq!(reconstruct_from_pair_weights(5, &w), k5.as_slice());
        assert_eq!(constant_star_shortcut(&k5), Some(true));
    }

    #[test]
    fn closed_form_equals_matrix_inverse() {
        let d = Metric::from_fn(6, |i, j| ratio((i * j % 5 + 1) as i64, (i + j) as i64)).unwrap();
        let inv = inverse_square_cut_matrix(6).unwrap();
        assert_eq!(paircut_weights(&d).unwrap(), inv.mul_vec(d.as_slice()).unwrap());
    }

    #[test]
    fn necessary_condition_on_pair_cut() {
        let d = pair_cut(5, 1, 2);
        let report = necessary_condition(&d).unwrap();
        assert!(!report.certifies_non_membership());
        // vertices in the pair: (n-2)(n-2) - 2(n-2) = 3; others: 3*2 - 6 = 0
        assert_eq!(report.slacks, vec![int(3), int(3), zero(), zero(), zero()]);
    }

    #[test]
    fn small_n_is_rejected() {
        let d = Metric::from_fn(4, |_, _| int(1)).unwrap();
        assert!(paircut_membership(&d).is_err());
        assert!(paircut_weights(&d).is_err());
        assert!(necessary_condition(&d).is_err());
        assert_eq!(constant_star_shortcut(&d), None);
    }

    #[test]
    fn shortcut_declines_non_constant_star_traces() {
        let d = pair_cut(5, 1, 2);
        assert_eq!(constant_star_shortcut(&d), None);
    }
}
