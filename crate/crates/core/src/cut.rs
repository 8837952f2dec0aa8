//! Cuts of `V_n = {1, ..., n}` and their cut-metric vectors.
//!
//! A cut is stored as a bitmask: vertex `i` is a member iff bit `i - 1` is
//! set. Nontrivial cuts are enumerated in *graded lexicographic* order:
//! by cardinality first, then lexicographically on the sorted member list.
//! Under this order the complement of the `k`-th cut (1-based) is the
//! `(2^n - 1 - k)`-th cut, which is what the kernel generators rely on.

use std::fmt;

use num_integer::binomial;

use crate::error::{Error, Result};
use crate::metric::pair_count;
use crate::rational::{one, zero, Rational};

/// Largest `n` for which the cut list (and the full cut-matrix) is built.
pub const DEFAULT_MAX_CUT_VERTICES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cut {
    n: usize,
    mask: u64,
}

impl Cut {
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::TooManyVertices { n, max: 64, what: "cuts" });
        }
        if n < 64 && mask >> n != 0 {
            return Err(Error::VertexOutOfRange { v: 64 - mask.leading_zeros() as usize, n });
        }
        Ok(Self { n, mask })
    }

    /// Builds a cut from 1-based member labels. Duplicates are ignored.
    pub fn from_members(n: usize, members: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in members {
            if v == 0 || v > n || v > 64 {
                return Err(Error::VertexOutOfRange { v, n });
            }
            mask |= 1 << (v - 1);
        }
        Self::from_mask(n, mask)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.mask == 0 || self.mask == self.full_mask()
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.n && self.mask >> (v - 1) & 1 == 1
    }

    pub fn complement(&self) -> Self {
        Self { n: self.n, mask: !self.mask & self.full_mask() }
    }

    /// Sorted 1-based member labels.
    pub fn members(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.contains(v)).collect()
    }

    /// Whether the cut separates `i` from `j`.
    pub fn separates(&self, i: usize, j: usize) -> bool {
        self.contains(i) != self.contains(j)
    }

    /// `|C| (n - |C|)`, the number of pairs the cut separates.
    pub fn separated_pairs(&self) -> usize {
        self.len() * (self.n - self.len())
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.members().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

fn check_cut_range(n: usize, max_n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::TooFewVertices { n, min: 3, what: "cut enumeration" });
    }
    if n > max_n {
        return Err(Error::TooManyVertices { n, max: max_n, what: "cut enumeration" });
    }
    Ok(())
}

/// All `2^n - 2` nontrivial cuts in graded lexicographic order, with the
/// default size guard.
pub fn enumerate_cuts(n: usize) -> Result<Vec<Cut>> {
    enumerate_cuts_with_limit(n, DEFAULT_MAX_CUT_VERTICES)
}

pub fn enumerate_cuts_with_limit(n: usize, max_n: usize) -> Result<Vec<Cut>> {
    check_cut_range(n, max_n.min(63))?;
    let mut cuts = Vec::with_capacity((1usize << n) - 2);
    for k in 1..n {
        push_k_subsets(n, k, &mut cuts);
    }
    Ok(cuts)
}

/// Appends the `k`-subsets of `V_n` in lexicographic order.
fn push_k_subsets(n: usize, k: usize, out: &mut Vec<Cut>) {
    let mut members: Vec<usize> = (1..=k).collect();
    loop {
        let mask = members.iter().fold(0u64, |m, &v| m | 1 << (v - 1));
        out.push(Cut { n, mask });
        // advance to the next combination
        let mut pos = k;
        while pos > 0 && members[pos - 1] == n - k + pos {
            pos -= 1;
        }
        if pos == 0 {
            return;
        }
        members[pos - 1] += 1;
        for t in pos..k {
            members[t] = members[t - 1] + 1;
        }
    }
}

/// Zero-based position of a nontrivial cut in [`enumerate_cuts`] order,
/// computed combinatorially.
pub fn cut_index(cut: &Cut) -> Result<usize> {
    if cut.is_trivial() {
        return Err(Error::TrivialCut);
    }
    let n = cut.n;
    let k = cut.len();
    let before: usize = (1..k).map(|s| binomial(n, s)).sum();
    // lexicographic rank among k-subsets
    let mut rank = 0;
    let mut prev = 0;
    for (t, &v) in cut.members().iter().enumerate() {
        for skipped in prev + 1..v {
            rank += binomial(n - skipped, k - t - 1);
        }
        prev = v;
    }
    Ok(before + rank)
}

/// The 0/1 vector of `δ_C` indexed by pairs in lexicographic order.
/// Trivial cuts give the zero vector.
pub fn cut_metric_vector(cut: &Cut) -> Vec<Rational> {
    let n = cut.n;
    let mut out = Vec::with_capacity(pair_count(n));
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(if cut.separates(i, j) { one() } else { zero() });
        }
    }
    out
}
