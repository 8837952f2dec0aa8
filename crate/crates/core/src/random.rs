//! Seeded generators of rational test metrics.
//!
//! All generators take an explicit RNG; seed a [`rand_chacha::ChaCha8Rng`]
//! (see [`seeded`]) for reproducible streams.

use num_traits::Signed;
use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cut::Cut;
use crate::error::Result;
use crate::metric::{pair_count, pairs, Metric};
use crate::rational::{ratio, zero, Rational};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational<R: Rng + ?Sized>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    ratio(rng.gen_range(0..=max_num), rng.gen_range(1..=max_den))
}

/// `ℓ₁` distances between `n` random points of `{0, 1/q, ..., k/q}^dim`;
/// always in the cut cone.
pub fn random_l1_metric<R: Rng + ?Sized>(n: usize, dim: usize, rng: &mut R) -> Result<Metric> {
    let den = rng.gen_range(1..=4);
    let points: Vec<Vec<Rational>> =
        (0..n).map(|_| (0..dim).map(|_| ratio(rng.gen_range(0..=6), den)).collect()).collect();
    Metric::from_fn(n, |i, j| points[i - 1].iter().zip(&points[j - 1]).map(|(a, b)| (a - b).abs()).sum())
}

/// Nonnegative combination of pair-cut metrics; roughly a third of the
/// weights are zero.
pub fn random_paircut_combination<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Metric> {
    let mut d = vec![zero(); pair_count(n)];
    for (i, j) in pairs(n) {
        if rng.gen_bool(1.0 / 3.0) {
            continue;
        }
        let w = small_rational(rng, 5, 3);
        let cut = Cut::from_members(n, &[i, j])?;
        for (x, (k, l)) in d.iter_mut().zip(pairs(n)) {
            if cut.separates(k, l) {
                *x += &w;
            }
        }
    }
    Metric::new(n, d)
}

/// Nonnegative combination of `k` distinct random nontrivial cuts.
pub fn random_cut_combination<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Metric> {
    let total = (1usize << n) - 2;
    let mut d = vec![zero(); pair_count(n)];
    for idx in sample(rng, total, k.min(total)) {
        let cut = Cut::from_mask(n, idx as u64 + 1)?;
        let w = ratio(rng.gen_range(1..=6), rng.gen_range(1..=3));
        for (x, (i, j)) in d.iter_mut().zip(pairs(n)) {
            if cut.separates(i, j) {
                *x += &w;
            }
        }
    }
    Metric::new(n, d)
}

/// Random positive distances closed under shortest paths, so the triangle
/// inequality holds. Often outside both cones.
pub fn random_repaired_metric<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Metric> {
    let mut m = vec![vec![zero(); n]; n];
    for (i, j) in pairs(n) {
        let x = ratio(rng.gen_range(1..=12), rng.gen_range(1..=3));
        m[i - 1][j - 1] = x.clone();
        m[j - 1][i - 1] = x;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = &m[i][k] + &m[k][j];
                if via < m[i][j] {
                    m[i][j] = via;
                }
            }
        }
    }
    Metric::from_fn(n, |i, j| m[i - 1][j - 1].clone())
}

/// One of the generators above, chosen uniformly.
pub fn random_test_metric<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Metric> {
    match rng.gen_range(0..4) {
        0 => random_l1_metric(n, rng.gen_range(1..=n), rng),
        1 => random_paircut_combination(n, rng),
        2 => random_cut_combination(n, rng.gen_range(1..=2 * n), rng),
        _ => random_repaired_metric(n, rng),
    }
}

/// `n` positive rationals with numerators and denominators in `1..=max`.
pub fn random_positive_rationals<R: Rng + ?Sized>(n: usize, max: i64, rng: &mut R) -> Vec<Rational> {
    (0..n).map(|_| ratio(rng.gen_range(1..=max), rng.gen_range(1..=max))).collect()
}
