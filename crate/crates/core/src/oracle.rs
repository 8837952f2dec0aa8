//! Exact feasibility of `M w = d, w >= 0` over the rationals.
//!
//! The solver is a dense-tableau phase-I simplex. Rows with negative
//! right-hand side are negated, one artificial variable is added per row,
//! and the sum of artificials is minimised. Entering columns follow the
//! most negative reduced cost; after a run of degenerate pivots the solver
//! switches to Bland's rule until the objective moves again, which rules
//! out cycling. A zero optimum yields a witness; a positive optimum yields
//! a Farkas vector read off the final reduced costs of the artificial
//! columns. Both certificates are
//! checked exactly before they are returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cut::enumerate_cuts_with_limit;
use crate::cut_algebra::{full_cut_matrix_with_limit, square_cut_matrix};
use crate::error::{Error, Result};
use crate::fullcut::CutCertificate;
use crate::matrix::RationalMatrix;
use crate::metric::Metric;
use crate::rational::{zero, Rational};

pub const DEFAULT_MAX_CUTCONE_N: usize = 10;
pub const DEFAULT_MAX_PAIRCUT_N: usize = 14;

/// Consecutive degenerate pivots tolerated before switching to Bland's rule.
const STALL_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeasibilityStatus {
    Feasible,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityResult {
    pub status: FeasibilityStatus,
    /// `w >= 0` with `M w = d`, present iff feasible.
    pub witness: Option<Vec<Rational>>,
    /// `y` with `yᵀM <= 0` and `yᵀd > 0`, present iff infeasible.
    pub farkas: Option<Vec<Rational>>,
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        self.status == FeasibilityStatus::Feasible
    }
}

/// Fraction-free tableau: the true entries are `rows[i][k] / det`, where
/// `det > 0` is the determinant of the current basis (up to sign). Pivoting
/// uses exact integer division, so no gcd is ever taken.
struct Tableau {
    rows: Vec<Vec<BigInt>>,
    /// Phase-I reduced costs scaled by `det`; the last entry is `-det * objective`.
    cost: Vec<BigInt>,
    basis: Vec<usize>,
    det: BigInt,
    width: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let det = &self.det;
        let update = |row: &mut Vec<BigInt>| {
            let f = row[c].clone();
            for (x, q) in row.iter_mut().zip(&pivot_row) {
                if x.is_zero() && (f.is_zero() || q.is_zero()) {
                    continue;
                }
                let mut v = &*x * &p;
                if !f.is_zero() && !q.is_zero() {
                    v -= &f * q;
                }
                *x = v / det;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                update(row);
            }
        }
        update(&mut self.cost);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
        self.det = p;
    }

    /// Entering column: most negative reduced cost (lowest index on ties),
    /// or under `bland` the lowest index with negative reduced cost. Leaving
    /// row: minimum ratio, ties broken by lowest basic index.
    fn step(&mut self, bland: bool) -> bool {
        let negative = (0..self.width).filter(|&k| self.cost[k].is_negative());
        let entering = if bland {
            negative.min()
        } else {
            negative.fold(None, |best: Option<usize>, k| match best {
                Some(b) if self.cost[b] <= self.cost[k] => Some(b),
                _ => Some(k),
            })
        };
        let Some(c) = entering else {
            return false;
        };
        let rhs = self.width;
        let mut best: Option<usize> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if !row[c].is_positive() {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    // row[rhs]/row[c] against rows[b][rhs]/rows[b][c], denominators positive
                    let lhs = &row[rhs] * &self.rows[b][c];
                    let rhs_val = &self.rows[b][rhs] * &row[c];
                    lhs < rhs_val || (lhs == rhs_val && self.basis[i] < self.basis[b])
                }
            };
            if better {
                best = Some(i);
            }
        }
        // phase I is bounded below by zero, so some row always qualifies
        let r = best.expect("phase-I objective is bounded");
        self.pivot(r, c);
        true
    }
}

pub fn lp_feasibility(m: &RationalMatrix, d: &[Rational]) -> Result<FeasibilityResult> {
    let (rows, cols) = (m.rows(), m.cols());
    if d.len() != rows {
        return Err(Error::DimensionMismatch(format!("{rows}x{cols} system with right-hand side of length {}", d.len())));
    }
    let width = cols + rows;
    let signs: Vec<bool> = d.iter().map(Signed::is_negative).collect();
    // clear denominators row by row: row r is multiplied by scale[r] > 0
    let scale: Vec<BigInt> = (0..rows)
        .map(|r| m.row(r).iter().chain(std::iter::once(&d[r])).fold(BigInt::one(), |acc, x| acc.lcm(x.denom())))
        .collect();
    let scaled = |x: &Rational, r: usize| -> BigInt {
        let v = x.numer() * (&scale[r] / x.denom());
        if signs[r] {
            -v
        } else {
            v
        }
    };
    let mut table = Vec::with_capacity(rows);
    for (r, dr) in d.iter().enumerate() {
        let mut row: Vec<BigInt> = m.row(r).iter().map(|x| scaled(x, r)).collect();
        row.extend((0..rows).map(|k| if k == r { BigInt::one() } else { BigInt::zero() }));
        row.push(scaled(dr, r));
        table.push(row);
    }
    let mut cost = vec![BigInt::zero(); width + 1];
    for row in &table {
        for (k, x) in row.iter().enumerate() {
            if k < cols || k == width {
                cost[k] -= x;
            }
        }
    }
    let mut t = Tableau { rows: table, cost, basis: (cols..width).collect(), det: BigInt::one(), width };
    let mut stalled = 0;
    loop {
        let before = t.cost[width].clone();
        let det_before = t.det.clone();
        if !t.step(stalled >= STALL_LIMIT) {
            break;
        }
        // objective values are cost/det; compare them without dividing
        let moved = &t.cost[width] * &det_before != &before * &t.det;
        stalled = if moved { 0 } else { stalled + 1 };
    }

    let det = Rational::from_integer(t.det.clone());
    let result = if t.cost[width].is_zero() {
        let mut w = vec![zero(); cols];
        for (r, &b) in t.basis.iter().enumerate() {
            if b < cols {
                w[b] = Rational::from_integer(t.rows[r][width].clone()) / &det;
            }
        }
        FeasibilityResult { status: FeasibilityStatus::Feasible, witness: Some(w), farkas: None }
    } else {
        // artificial r has cost 1, so its reduced cost is 1 - π_r; undo the
        // row scaling and sign flip to get y for the original system
        let y = (0..rows)
            .map(|r| {
                let pi = Rational::one() - Rational::from_integer(t.cost[cols + r].clone()) / &det;
                let y = pi * Rational::from_integer(scale[r].clone());
                if signs[r] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        FeasibilityResult { status: FeasibilityStatus::Infeasible, witness: None, farkas: Some(y) }
    };
    verify_feasibility(m, d, &result)?;
    Ok(result)
}

/// Exact check of whichever certificate `result` carries.
pub fn verify_feasibility(m: &RationalMatrix, d: &[Rational], result: &FeasibilityResult) -> Result<()> {
    match (&result.status, &result.witness, &result.farkas) {
        (FeasibilityStatus::Feasible, Some(w), None) => {
            if w.iter().any(Signed::is_negative) {
                return Err(Error::InvalidCertificate("witness has a negative entry".into()));
            }
            if m.mul_vec(w)? != d {
                return Err(Error::InvalidCertificate("witness does not reproduce the right-hand side".into()));
            }
            Ok(())
        }
        (FeasibilityStatus::Infeasible, None, Some(y)) => {
            if y.len() != m.rows() {
                return Err(Error::DimensionMismatch(format!("Farkas vector of length {}", y.len())));
            }
            let yt_m = m.transpose().mul_vec(y)?;
            if let Some(k) = yt_m.iter().position(Signed::is_positive) {
                return Err(Error::InvalidCertificate(format!("yᵀM is positive in column {k}")));
            }
            let yt_d: Rational = y.iter().zip(d).map(|(a, b)| a * b).sum();
            if !yt_d.is_positive() {
                return Err(Error::InvalidCertificate("yᵀd is not positive".into()));
            }
            Ok(())
        }
        _ => Err(Error::InvalidCertificate("result must carry exactly the certificate matching its status".into())),
    }
}

pub fn cutcone_membership(d: &Metric) -> Result<FeasibilityResult> {
    cutcone_membership_with_limit(d, DEFAULT_MAX_CUTCONE_N)
}

/// LP against the full cut-matrix; witness coordinates follow the graded
/// cut order.
pub fn cutcone_membership_with_limit(d: &Metric, max_n: usize) -> Result<FeasibilityResult> {
    let s = full_cut_matrix_with_limit(d.n(), max_n)?;
    lp_feasibility(&s, d.as_slice())
}

/// Nonzero witness entries as a certificate over the graded cut order.
pub fn certificate_from_witness(n: usize, witness: &[Rational]) -> Result<CutCertificate> {
    let cuts = enumerate_cuts_with_limit(n, 64)?;
    if cuts.len() != witness.len() {
        return Err(Error::DimensionMismatch(format!("witness of length {} for n = {n}", witness.len())));
    }
    CutCertificate::new(n, cuts, witness.to_vec()).map(|c| c.pruned())
}

pub fn paircut_membership_exact(d: &Metric) -> Result<FeasibilityResult> {
    paircut_membership_exact_with_limit(d, DEFAULT_MAX_PAIRCUT_N)
}

/// LP against the square cut-matrix; works for every `n >= 3`.
pub fn paircut_membership_exact_with_limit(d: &Metric, max_n: usize) -> Result<FeasibilityResult> {
    if d.n() > max_n {
        return Err(Error::TooManyVertices { n: d.n(), max: max_n, what: "the pair-cut oracle" });
    }
    lp_feasibility(&square_cut_matrix(d.n())?, d.as_slice())
}
