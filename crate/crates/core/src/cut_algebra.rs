//! The square and full cut-matrices, the vertex-edge incidence matrix of
//! `K_n`, and the closed-form spectral projectors and inverse of the square
//! cut-matrix.
//!
//! Write `m = n(n-1)/2`, `A` for the square cut-matrix (the adjacency
//! matrix of the line graph `L(K_n)`), `B` for the `n x m` incidence matrix
//! and `J` for an all-ones matrix. Then
//!
//! ```text
//! BᵀB = 2I + A        BBᵀ = (n-2)I + J
//! (BBᵀ)⁻¹ = I/(n-2) - J/(2(n-1)(n-2))
//! P_col = Bᵀ(BBᵀ)⁻¹B
//! A = -2 P₋₂ + (n-4) P_{n-4} + (2n-4) P_{2n-4}
//! ```
//!
//! with `P_{2n-4} = J/m`, `P_{n-4} = P_col - J/m` and `P₋₂ = I - P_col`.
//! For `n >= 5` all three eigenvalues are nonzero and `A` is invertible.
//! Everything here is built from these formulas; no generic elimination is
//! involved.

use crate::cut::{cut_metric_vector, enumerate_cuts_with_limit, Cut, DEFAULT_MAX_CUT_VERTICES};
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::metric::{pair_count, pairs};
use crate::rational::{int, one, pow2, ratio, zero, Rational};

fn require_min(n: usize, min: usize, what: &'static str) -> Result<()> {
    if n < min {
        Err(Error::TooFewVertices { n, min, what })
    } else {
        Ok(())
    }
}

/// Columns are `δ_{i,j}` for the pair-cuts in lexicographic order.
pub fn square_cut_matrix(n: usize) -> Result<RationalMatrix> {
    require_min(n, 3, "the square cut-matrix")?;
    let columns: Vec<Vec<Rational>> = pairs(n)
        .map(|(i, j)| cut_metric_vector(&Cut::from_members(n, &[i, j]).expect("valid pair")))
        .collect();
    RationalMatrix::from_columns(pair_count(n), &columns)
}

/// Entry `(k, l)` is 1 iff vertex `k + 1` is an endpoint of the `l`-th pair.
pub fn incidence_matrix(n: usize) -> Result<RationalMatrix> {
    require_min(n, 3, "the incidence matrix")?;
    let edges: Vec<(usize, usize)> = pairs(n).collect();
    Ok(RationalMatrix::from_fn(n, edges.len(), |k, l| {
        let (i, j) = edges[l];
        if k + 1 == i || k + 1 == j {
            one()
        } else {
            zero()
        }
    }))
}

/// `(BBᵀ)⁻¹ = I/(n-2) - J/(2(n-1)(n-2))`.
pub fn incidence_gram_inverse(n: usize) -> Result<RationalMatrix> {
    require_min(n, 3, "the incidence Gram inverse")?;
    let n_i = n as i64;
    let diag = ratio(1, n_i - 2);
    let off = ratio(1, 2 * (n_i - 1) * (n_i - 2));
    Ok(RationalMatrix::from_fn(n, n, |r, c| if r == c { &diag - &off } else { -off.clone() }))
}

/// Orthogonal projector onto the column space of `Bᵀ`.
pub fn column_space_projector(n: usize) -> Result<RationalMatrix> {
    let b = incidence_matrix(n)?;
    let inner = incidence_gram_inverse(n)?;
    Ok(&(&b.transpose() * &inner) * &b)
}

/// The eigenprojectors of the square cut-matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projectors {
    pub n: usize,
    /// Projector onto the eigenspace of `-2` (multiplicity `n(n-3)/2`).
    pub minus_two: RationalMatrix,
    /// Projector onto the eigenspace of `n - 4` (multiplicity `n - 1`).
    pub n_minus_four: RationalMatrix,
    /// Projector onto the eigenspace of `2n - 4`, spanned by the all-ones vector.
    pub two_n_minus_four: RationalMatrix,
}

impl Projectors {
    /// `(eigenvalue, projector)` triples.
    pub fn spectrum(&self) -> [(Rational, &RationalMatrix); 3] {
        let n = self.n as i64;
        [
            (int(-2), &self.minus_two),
            (int(n - 4), &self.n_minus_four),
            (int(2 * n - 4), &self.two_n_minus_four),
        ]
    }

    /// `Σ λ P_λ`.
    pub fn recombine(&self) -> RationalMatrix {
        let m = pair_count(self.n);
        self.spectrum()
            .iter()
            .fold(RationalMatrix::zeros(m, m), |acc, (lambda, p)| &acc + &p.scale(lambda))
    }
}

pub fn projectors(n: usize) -> Result<Projectors> {
    require_min(n, 5, "the spectral projectors")?;
    let m = pair_count(n);
    let p_col = column_space_projector(n)?;
    let p_top = RationalMatrix::ones(m, m).scale(&ratio(1, m as i64));
    Ok(Projectors {
        n,
        minus_two: &RationalMatrix::identity(m) - &p_col,
        n_minus_four: &p_col - &p_top,
        two_n_minus_four: p_top,
    })
}

/// `A⁻¹ = -I/2 - n/(2(n-2)(n-4)) P_{2n-4} + (n-2)/(2(n-4)) P_col`.
pub fn inverse_square_cut_matrix(n: usize) -> Result<RationalMatrix> {
    require_min(n, 5, "inverting the square cut-matrix")?;
    let n_i = n as i64;
    let m = pair_count(n);
    let p_col = column_space_projector(n)?;
    let p_top = RationalMatrix::ones(m, m).scale(&ratio(1, m as i64));
    let a = RationalMatrix::identity(m).scale(&ratio(-1, 2));
    let b = p_top.scale(&ratio(-n_i, 2 * (n_i - 2) * (n_i - 4)));
    let c = p_col.scale(&ratio(n_i - 2, 2 * (n_i - 4)));
    Ok(&(&a + &b) + &c)
}

/// Full cut-matrix with the default size guard.
pub fn full_cut_matrix(n: usize) -> Result<RationalMatrix> {
    full_cut_matrix_with_limit(n, DEFAULT_MAX_CUT_VERTICES)
}

/// `m x (2^n - 2)` matrix whose columns are `δ_C` in graded lexicographic
/// cut order.
pub fn full_cut_matrix_with_limit(n: usize, max_n: usize) -> Result<RationalMatrix> {
    let cuts = enumerate_cuts_with_limit(n, max_n)?;
    let m = pair_count(n);
    let pair_list: Vec<(usize, usize)> = pairs(n).collect();
    Ok(RationalMatrix::from_fn(m, cuts.len(), |r, c| {
        let (i, j) = pair_list[r];
        if cuts[c].separates(i, j) {
            one()
        } else {
            zero()
        }
    }))
}

/// `S_r = Sᵀ (SSᵀ)⁻¹` with `(SSᵀ)⁻¹ = (I - J/(m+1)) / 2^{n-2}`.
pub fn full_cut_right_inverse(n: usize) -> Result<RationalMatrix> {
    let s = full_cut_matrix(n)?;
    let m = pair_count(n);
    let scale = pow2(n - 2).recip();
    let inner = (&RationalMatrix::identity(m) - &RationalMatrix::ones(m, m).scale(&ratio(1, m as i64 + 1)))
        .scale(&scale);
    Ok(&s.transpose() * &inner)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_matrix_n4_matches_printed_matrix() {
        let rows = ["011110", "101101", "110011", "110011", "101101", "011110"];
        let a = square_cut_matrix(4).unwrap();
        for (r, row) in rows.iter().enumerate() {
            for (c, ch) in row.chars().enumerate() {
                assert_eq!(a[(r, c)], int(ch.to_digit(10).unwrap() as i64), "entry ({r},{c})");
            }
        }
    }

    #[test]
    fn square_matrix_basic_shape() {
        for n in 3..=7 {
            let a = square_cut_matrix(n).unwrap();
            assert!(a.is_symmetric());
            let row_sum = int(2 * (n as i64 - 2));
            for r in 0..a.rows() {
                assert_eq!(a.row(r).iter().sum::<Rational>(), row_sum);
                assert_eq!(a[(r, r)], zero());
            }
        }
        assert!(square_cut_matrix(2).is_err());
    }

    #[test]
    fn incidence_identities() {
        let b3 = incidence_matrix(3).unwrap();
        assert_eq!(b3.to_text(), "1 1 0\n1 0 1\n0 1 1\n");
        for n in 3..=7 {
            let b = incidence_matrix(n).unwrap();
            let m = pair_count(n);
            let btb = &b.transpose() * &b;
            let expected = &RationalMatrix::identity(m).scale(&int(2)) + &square_cut_matrix(n).unwrap();
            assert_eq!(btb, expected);
            let bbt = &b * &b.transpose();
            let expected = &RationalMatrix::identity(n).scale(&int(n as i64 - 2)) + &RationalMatrix::ones(n, n);
            assert_eq!(bbt, expected);
            assert!((&bbt * &incidence_gram_inverse(n).unwrap()).is_identity());
        }
    }

    #[test]
    fn projector_ranks_n5() {
        let p = projectors(5).unwrap();
        assert_eq!(p.two_n_minus_four.rank(), 1);
        assert_eq!(p.n_minus_four.rank(), 4);
        assert_eq!(p.minus_two.rank(), 5);
        assert_eq!(p.recombine(), square_cut_matrix(5).unwrap());
    }

    #[test]
    fn projector_algebra() {
        for n in 5..=7 {
            let p = projectors(n).unwrap();
            let all = [&p.minus_two, &p.n_minus_four, &p.two_n_minus_four];
            for (a, pa) in all.iter().enumerate() {
                assert!(pa.is_symmetric());
                assert_eq!(&(*pa * *pa), *pa);
                for (b, pb) in all.iter().enumerate() {
                    if a != b {
                        assert!((*pa * *pb).is_zero());
                    }
                }
            }
            assert!((&(&p.minus_two + &p.n_minus_four) + &p.two_n_minus_four).is_identity());
        }
        assert!(projectors(4).is_err());
    }

    #[test]
    fn inverse_closed_form() {
        for n in 5..=7 {
            let a = square_cut_matrix(n).unwrap();
            let inv = inverse_square_cut_matrix(n).unwrap();
            assert!((&a * &inv).is_identity());
            assert!((&inv * &a).is_identity());
        }
        let inv6 = inverse_square_cut_matrix(6).unwrap();
        let ones = vec![one(); 15];
        assert!(inv6.mul_vec(&ones).unwrap().iter().all(|x| *x == ratio(1, 8)));
        assert!(inverse_square_cut_matrix(4).is_err());
    }

    #[test]
    fn full_cut_matrix_identities() {
        for n in 3..=7 {
            let s = full_cut_matrix(n).unwrap();
            let m = pair_count(n);
            let sst = &s * &s.transpose();
            let expected = (&RationalMatrix::identity(m) + &RationalMatrix::ones(m, m)).scale(&pow2(n - 2));
            assert_eq!(sst, expected, "n={n}");
            assert!((&s * &full_cut_right_inverse(n).unwrap()).is_identity());
        }
        let s4 = full_cut_matrix(4).unwrap();
        let sst = &s4 * &s4.transpose();
        assert_eq!(sst[(0, 0)], int(8));
        assert_eq!(sst[(0, 5)], int(4));
        for k in 0..4 {
            assert_eq!(s4.column(k), s4.column(13 - k));
        }
    }

    #[test]
    fn pair_cut_columns_of_full_matrix() {
        let s = full_cut_matrix(5).unwrap();
        let a = square_cut_matrix(5).unwrap();
        // pair-cuts occupy positions 5..15 in graded order
        for c in 0..10 {
            assert_eq!(s.column(5 + c), a.column(c));
        }
    }
}
