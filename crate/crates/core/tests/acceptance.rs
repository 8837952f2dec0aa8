//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cutcone::cut::{cut_metric_vector, enumerate_cuts, Cut};
use cutcone::cut_algebra::{
    full_cut_matrix, full_cut_right_inverse, incidence_matrix, inverse_square_cut_matrix, projectors,
    square_cut_matrix,
};
use cutcone::embedding::{l1_embedding, linf_sig_embedding, verify_isometry};
use cutcone::fullcut::{
    alternating_generator, candidate_solution, kernel_basis, sufficient_condition, verify_cut_certificate,
    CutCertificate, CutVector, KernelLabel, SufficientVerdict,
};
use cutcone::graph::{graph_metric, random_connected_graph, truncated_metric, Family, SimpleGraph};
use cutcone::matrix::RationalMatrix;
use cutcone::metric::{pair_count, Metric};
use cutcone::oracle::{certificate_from_witness, cutcone_membership, lp_feasibility, paircut_membership_exact};
use cutcone::paircut::paircut_membership;
use cutcone::random::{
    random_cut_combination, random_l1_metric, random_positive_rationals, random_repaired_metric, random_test_metric,
    seeded,
};
use cutcone::rational::{int, pow2, ratio, Rational};
use cutcone::sig::{sig_graph, star_graph_obstruction};
use nalgebra::DMatrix;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| format!("{e:?}"))
}

fn fig2() -> SimpleGraph {
    SimpleGraph::from_edges(7, &[(1, 2), (1, 4), (1, 5), (1, 7), (2, 3), (3, 4), (5, 6), (6, 7)]).unwrap()
}

fn criterion_1() -> Outcome {
    let rows = ["011110", "101101", "110011", "110011", "101101", "011110"];
    let a = ok(square_cut_matrix(4))?;
    for (r, row) in rows.iter().enumerate() {
        for (c, ch) in row.chars().enumerate() {
            ensure(a[(r, c)] == int(ch.to_digit(10).unwrap() as i64), format!("entry ({r},{c}) differs"))?;
        }
    }
    Ok("6x6 matrix matches entry for entry".into())
}

fn criterion_2() -> Outcome {
    for n in 5..=8usize {
        let a = ok(square_cut_matrix(n))?;
        let m = a.rows();
        let dense = DMatrix::from_fn(m, m, |r, c| a[(r, c)].to_f64().unwrap());
        let mut eig: Vec<f64> = dense.symmetric_eigen().eigenvalues.iter().copied().collect();
        eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let nf = n as f64;
        let mut want = vec![-2.0; n * (n - 3) / 2];
        want.extend(std::iter::repeat_n(nf - 4.0, n - 1));
        want.push(2.0 * nf - 4.0);
        want.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for (g, w) in eig.iter().zip(&want) {
            ensure((g - w).abs() < 1e-9, format!("n={n}: eigenvalue {g} vs {w}"))?;
        }
        let p = ok(projectors(n))?;
        for (_, proj) in p.spectrum() {
            ensure(&(proj * proj) == proj, format!("n={n}: projector not idempotent"))?;
        }
        ensure((&(&p.minus_two + &p.n_minus_four) + &p.two_n_minus_four).is_identity(), format!("n={n}: sum != I"))?;
        ensure(p.recombine() == a, format!("n={n}: A != sum of lambda P"))?;
        ensure((&a * &ok(inverse_square_cut_matrix(n))?).is_identity(), format!("n={n}: A A^-1 != I"))?;
    }
    Ok("n=5..8 spectrum within 1e-9, projector identities exact".into())
}

fn criterion_3() -> Outcome {
    for n in 4..=7usize {
        let m = pair_count(n);
        let a = ok(square_cut_matrix(n))?;
        let b = ok(incidence_matrix(n))?;
        let i_m = RationalMatrix::identity(m);
        ensure(&b.transpose() * &b == &i_m.scale(&int(2)) + &a, format!("n={n}: BtB"))?;
        let bbt = &RationalMatrix::identity(n).scale(&int(n as i64 - 2)) + &RationalMatrix::ones(n, n);
        ensure(&b * &b.transpose() == bbt, format!("n={n}: BBt"))?;
        let s = ok(full_cut_matrix(n))?;
        ensure(&s * &s.transpose() == (&i_m + &RationalMatrix::ones(m, m)).scale(&pow2(n - 2)), format!("n={n}: SSt"))?;
        ensure((&s * &ok(full_cut_right_inverse(n))?).is_identity(), format!("n={n}: S S_r"))?;
    }
    Ok("n=4..7 all four identities exact".into())
}

fn criterion_4() -> Outcome {
    let g = fig2();
    let d0 = ok(truncated_metric(&g))?;
    let v0 = ok(paircut_membership(&d0))?;
    let bad: Vec<(usize, usize)> = v0.violations.iter().map(|v| (v.i, v.j)).collect();
    ensure(!v0.member && bad == vec![(1, 3), (1, 6)], format!("d0 violations {bad:?}"))?;
    let d1 = ok(graph_metric(&g))?;
    ensure(ok(paircut_membership(&d1))?.member, "d1 not a member")?;
    let s = d1.summarize();
    ensure(s.trace == int(40), format!("Tr(d1) = {}", s.trace))?;
    ensure(s.star_traces[0] == int(8) && s.star_traces[2] == int(14) && s.star_traces[5] == int(14), "star traces")?;
    Ok("d0 fails exactly at {1,3},{1,6}; d1 member, Tr=40, s1=8, s3=s6=14".into())
}

fn criterion_5() -> Outcome {
    let verdict = |f: Family, graph_dist: bool| -> Result<bool, String> {
        let g = ok(f.build())?;
        let d = if graph_dist { ok(graph_metric(&g))? } else { ok(truncated_metric(&g))? };
        Ok(ok(paircut_membership(&d))?.member)
    };
    let mut rows: Vec<(String, bool, bool)> = Vec::new();
    for n in 5..=8 {
        rows.push((format!("K{n}"), verdict(Family::Complete(n), true)?, true));
        rows.push((format!("C{n} d0"), verdict(Family::Cycle(n), false)?, true));
        rows.push((format!("L{n} d0"), verdict(Family::Linear(n), false)?, false));
    }
    rows.push(("R(6,3) d0".into(), verdict(Family::Regular(6, 3), false)?, false));
    rows.push(("Q3 d0".into(), verdict(Family::Hypercube(3), false)?, false));
    rows.push(("Q3 d1".into(), verdict(Family::Hypercube(3), true)?, false));
    rows.push(("B(2,3) d0".into(), verdict(Family::Bipartite(2, 3), false)?, false));
    rows.push(("B(2,3) d1".into(), verdict(Family::Bipartite(2, 3), true)?, false));
    rows.push(("L9 d1".into(), verdict(Family::Linear(9), true)?, false));
    rows.push(("CP3 d0".into(), verdict(Family::CocktailParty(3), false)?, false));
    rows.push(("CP3 d1".into(), verdict(Family::CocktailParty(3), true)?, true));
    let wrong: Vec<String> = rows
        .iter()
        .filter(|(_, got, want)| got != want)
        .map(|(name, got, _)| format!("{name} computed {}", if *got { "member" } else { "non-member" }))
        .collect();
    ensure(wrong.is_empty(), format!("{} of {} rows disagree: {}", wrong.len(), rows.len(), wrong.join("; ")))?;
    Ok(format!("{} rows reproduced", rows.len()))
}

fn criterion_6() -> Outcome {
    for n in 4..=8usize {
        let basis = ok(kernel_basis(n))?;
        let cols = (1usize << n) - 2;
        ensure(basis.len() == cols - pair_count(n), format!("n={n}: size {}", basis.len()))?;
        for (label, v) in basis.labels.iter().zip(&basis.vectors) {
            ensure(ok(v.image(n))?.iter().all(Zero::is_zero), format!("n={n}: S v != 0 for {label:?}"))?;
        }
        let rows: Vec<Rational> = basis.vectors.iter().flat_map(CutVector::to_dense).collect();
        let m = ok(RationalMatrix::from_row_major(basis.len(), cols, rows))?;
        ensure(m.rank() == basis.len(), format!("n={n}: rank deficient"))?;
    }
    let basis4 = ok(kernel_basis(4))?;
    let as_ints = |v: &CutVector| -> Vec<i64> { v.to_dense().iter().map(|x| x.to_i64().unwrap()).collect() };
    let phi1 = basis4.labels.iter().position(|l| *l == KernelLabel::Skew(1)).unwrap();
    ensure(as_ints(&basis4.vectors[phi1]) == [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1], "phi_1")?;
    let printed: [(&[usize], [i64; 14]); 5] = [
        (&[1, 2, 3], [-1, -1, -1, 0, 1, 1, 0, 1, 0, 0, -1, 0, 0, 0]),
        (&[1, 2, 4], [-1, -1, 0, -1, 1, 0, 1, 0, 1, 0, 0, -1, 0, 0]),
        (&[1, 3, 4], [-1, 0, -1, -1, 0, 1, 1, 0, 0, 1, 0, 0, -1, 0]),
        (&[2, 3, 4], [0, -1, -1, -1, 0, 0, 0, 1, 1, 1, 0, 0, 0, -1]),
        (&[1, 2, 3, 4], [-1, -1, -1, -1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1]),
    ];
    for (members, want) in printed {
        let t = ok(Cut::from_members(4, members))?;
        let k = basis4.labels.iter().position(|l| *l == KernelLabel::Alternating(t)).ok_or("missing psi_T")?;
        ensure(as_ints(&basis4.vectors[k]) == want, format!("psi_{t}"))?;
    }
    for n in [5usize, 6] {
        let full = ok(Cut::from_mask(n, (1u64 << n) - 1))?;
        let lhs = ok(alternating_generator(&full))?.to_dense();
        let mut rhs = vec![Rational::zero(); lhs.len()];
        for t in ok(enumerate_cuts(n))? {
            let sign = if (n - 1 + t.len()) % 2 == 0 { 1 } else { -1 };
            for (x, y) in rhs.iter_mut().zip(ok(alternating_generator(&t))?.to_dense()) {
                *x += y * int(sign);
            }
        }
        ensure(lhs == rhs, format!("n={n}: full-set alternating identity"))?;
    }
    Ok("n=4..8 sizes, S v = 0, full rank; printed n=4 vectors; full-set identity n=5,6".into())
}

fn criterion_7() -> Outcome {
    let mut rng = seeded(7);
    let (mut members, mut total) = (0, 0);
    for n in 5..=7usize {
        for k in 0..100 {
            let d = ok(random_test_metric(n, &mut rng))?;
            let closed = ok(paircut_membership(&d))?;
            let lp = ok(paircut_membership_exact(&d))?;
            ensure(closed.member == lp.is_feasible(), format!("n={n} sample {k}: verdicts differ"))?;
            if lp.is_feasible() {
                ensure(lp.witness.as_ref() == Some(&closed.weights), format!("n={n} sample {k}: witness differs"))?;
                members += 1;
            }
            total += 1;
        }
    }
    Ok(format!("{total} metrics agree ({members} members, {} non-members)", total - members))
}

fn criterion_8() -> Outcome {
    let mut rng = seeded(8);
    let mut summary = Vec::new();
    for n in [5usize, 6] {
        let (mut passes, mut tries) = (0, 0);
        while passes < 20 {
            tries += 1;
            ensure(tries <= 5000, format!("n={n}: only {passes} passes in 5000 samples"))?;
            let k = rng.gen_range(n..(1usize << n) - 2);
            let d = ok(random_cut_combination(n, k, &mut rng))?;
            let report = ok(sufficient_condition(&d))?;
            let SufficientVerdict::Member(cert) = report.verdict else { continue };
            passes += 1;
            ensure(ok(verify_cut_certificate(&cert, &d))?.is_valid(), format!("n={n}: candidate certificate invalid"))?;
            ensure(cert.weights == ok(candidate_solution(&d))?, "certificate is not the candidate solution")?;
            ensure(ok(cutcone_membership(&d))?.is_feasible(), format!("n={n}: oracle disagrees"))?;
        }
        summary.push(format!("n={n}: 20 passes in {tries} samples"));
    }
    Ok(summary.join(", "))
}

fn check_certificate(name: &str, d: &Metric, cert: &CutCertificate) -> Result<(), String> {
    ensure(ok(verify_cut_certificate(cert, d))?.is_valid(), format!("{name}: certificate invalid"))?;
    let pts = ok(l1_embedding(cert))?;
    ensure(ok(verify_isometry(&pts, d))?.is_isometry(), format!("{name}: embedding not isometric"))
}

fn criterion_9() -> Outcome {
    let half = ratio(1, 2);
    let l5 = ok(truncated_metric(&ok(Family::Linear(5).build())?))?;
    let groups: [&[usize]; 6] = [&[1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5]];
    let cuts = groups.iter().map(|g| Cut::from_members(5, g)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
    check_certificate("L5", &l5, &ok(CutCertificate::new(5, cuts, vec![half.clone(); 6]))?)?;

    let cp3 = ok(truncated_metric(&ok(Family::CocktailParty(3).build())?))?;
    let transversals: Vec<Cut> = (0..8u32)
        .map(|bits| {
            let members: Vec<usize> = (0..3).map(|i| if bits >> i & 1 == 1 { i + 4 } else { i + 1 }).collect();
            Cut::from_members(6, &members).unwrap()
        })
        .collect();
    check_certificate("CP3", &cp3, &ok(CutCertificate::new(6, transversals, vec![ratio(1, 4); 8]))?)?;

    let k5 = ok(graph_metric(&ok(Family::Complete(5).build())?))?;
    let singles = (1..=5).map(|v| Cut::from_members(5, &[v]).unwrap()).collect();
    check_certificate("K5", &k5, &ok(CutCertificate::new(5, singles, vec![half; 5]))?)?;
    Ok("L5, CP3 (8 transversal cuts, weight 1/4), K5 verify and embed isometrically".into())
}

fn criterion_10() -> Outcome {
    let mut rng = seeded(10);
    for k in 0..200 {
        let n = rng.gen_range(4..=10);
        let p = rng.gen_range(0.05..0.6);
        let g = ok(random_connected_graph(n, p, &mut rng))?;
        let pts = ok(linf_sig_embedding(&g))?;
        let induced = ok(sig_graph(&ok(pts.metric())?))?;
        ensure(induced == g, format!("graph {k} ({g}) induced {induced}"))?;
    }
    Ok("200 random connected graphs on 4..10 vertices recovered".into())
}

fn criterion_11() -> Outcome {
    let mut rng = seeded(11);
    for k in 0..100 {
        let n = 4 + k % 6;
        let a = random_positive_rationals(n, 20, &mut rng);
        let ob = ok(star_graph_obstruction(&a))?;
        ensure(ob.sig.passes(), format!("case {k}: forced metric is not a SIG-metric of S({n})"))?;
        ensure(!ob.paircut.member, format!("case {k}: forced metric lies in PCUT_{}", n + 1))?;
    }
    Ok("100 forced star metrics, n=4..9: SIG-metric of S(n), outside PCUT".into())
}

fn criterion_12() -> Outcome {
    let mut rng = seeded(12);
    let mut instances: Vec<(String, Metric)> = vec![
        ("Q3 d0".into(), ok(truncated_metric(&ok(Family::Hypercube(3).build())?))?),
        ("L9 d1".into(), ok(graph_metric(&ok(Family::Linear(9).build())?))?),
        ("CP3 d0".into(), ok(truncated_metric(&ok(Family::CocktailParty(3).build())?))?),
        ("L5 d0".into(), ok(truncated_metric(&ok(Family::Linear(5).build())?))?),
    ];
    for k in 0..3 {
        instances.push((format!("random l1 n=10 #{k}"), ok(random_l1_metric(10, 4, &mut rng))?));
        instances.push((format!("random repaired n=10 #{k}"), ok(random_repaired_metric(10, &mut rng))?));
    }
    instances.push(("C10 d0".into(), ok(truncated_metric(&ok(Family::Cycle(10).build())?))?));
    let mut worst = Duration::ZERO;
    let mut feasible = 0;
    for (name, d) in &instances {
        let start = Instant::now();
        let r = ok(cutcone_membership(d))?;
        let elapsed = start.elapsed();
        worst = worst.max(elapsed);
        ensure(elapsed < Duration::from_secs(60), format!("{name}: {elapsed:?}"))?;
        // lp_feasibility verifies before returning; re-check independently
        let s = ok(full_cut_matrix(d.n()))?;
        if let Some(w) = &r.witness {
            ensure(ok(s.mul_vec(w))? == d.as_slice(), format!("{name}: witness"))?;
            let cert = ok(certificate_from_witness(d.n(), w))?;
            ensure(ok(verify_cut_certificate(&cert, d))?.is_valid(), format!("{name}: certificate"))?;
            feasible += 1;
        } else {
            let y = r.farkas.as_ref().ok_or("no certificate")?;
            let yts = ok(s.transpose().mul_vec(y))?;
            let ytd: Rational = y.iter().zip(d.as_slice()).map(|(a, b)| a * b).sum();
            ensure(yts.iter().all(|x| *x <= Rational::zero()) && ytd > Rational::zero(), format!("{name}: Farkas"))?;
        }
        if name == "Q3 d0" {
            ensure(!r.is_feasible(), "Q3 d0 should be infeasible")?;
        }
    }
    let trivial = ok(lp_feasibility(
        &ok(RationalMatrix::from_columns(3, &[cut_metric_vector(&ok(Cut::from_members(3, &[1]))?)]))?,
        &[int(1), int(1), int(0)],
    ))?;
    ensure(trivial.witness == Some(vec![int(1)]), "single-column system")?;
    Ok(format!(
        "{} instances ({feasible} feasible) certified, slowest {:.2}s",
        instances.len(),
        worst.as_secs_f64()
    ))
}

fn main() {
    let criteria: [(usize, fn() -> Outcome); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (k, f) in criteria {
        if !only.is_empty() && !only.contains(&k) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {k:>2}: PASS ({secs:.1}s) {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {k:>2}: FAIL ({secs:.1}s) {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
