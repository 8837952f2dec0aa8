use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use cutcone::cut_algebra::{
    full_cut_matrix_with_limit, full_cut_right_inverse, incidence_matrix, inverse_square_cut_matrix,
    square_cut_matrix,
};
use cutcone::embedding::{l1_embedding, linf_sig_embedding, verify_isometry, PointSet};
use cutcone::fullcut::{kernel_basis, sufficient_condition, verify_cut_certificate, KernelLabel, SufficientVerdict};
use cutcone::graph::{graph_metric, random_connected_graph, truncated_metric, Family, SimpleGraph};
use cutcone::io::{
    certificate_from_json, certificate_to_json, farkas_to_json, graph_from_json, graph_to_json, metric_from_json,
    metric_to_json, points_to_json, points_to_text,
};
use cutcone::oracle::{
    certificate_from_witness, cutcone_membership_with_limit, paircut_membership_exact_with_limit, FeasibilityResult,
    DEFAULT_MAX_CUTCONE_N, DEFAULT_MAX_PAIRCUT_N,
};
use cutcone::paircut::paircut_membership;
use cutcone::random::{random_positive_rationals, seeded};
use cutcone::rational::{parse_rational, rational_to_json};
use cutcone::sig::{radii, sig_graph, star_graph_obstruction, verify_sig_metric, EdgeStatus, SigReport};
use cutcone::{Metric, Rational, RationalMatrix};

use crate::output::{emit, emit_document, join, read_document, write_document, Report};
use crate::{
    Cli, Command, CutconeMode, EmbedKind, FamilyAction, Global, MatrixAction, MatrixKind, MetricInput, SigAction,
    Which,
};

pub const OK: u8 = 0;
pub const NO: u8 = 1;
pub const INCONCLUSIVE: u8 = 2;
pub const USAGE: u8 = 3;

fn verdict(yes: bool) -> u8 {
    if yes {
        OK
    } else {
        NO
    }
}

fn rationals(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rational_to_json).collect())
}

fn read_metric(input: &MetricInput) -> Result<Metric> {
    let doc = read_document(input.metric.as_deref())?;
    Ok(metric_from_json(&doc)?)
}

fn read_graph(path: Option<&Path>) -> Result<SimpleGraph> {
    Ok(graph_from_json(&read_document(path)?)?)
}

fn guard(n: usize, limit: usize, what: &str) -> Result<()> {
    if n > limit {
        bail!("n = {n} exceeds the limit {limit} for {what}; raise it with --max-n");
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Validate { input, strict } => validate(g, &read_metric(input)?, *strict),
        Command::Stats { input } => stats(g, &read_metric(input)?),
        Command::Paircut { mode, input } => paircut(g, &read_metric(input)?, mode.is_some()),
        Command::Cutcone { mode, input, emit_certificate, emit_farkas } => {
            let d = read_metric(input)?;
            match mode {
                CutconeMode::Sufficient => sufficient(g, &d, emit_certificate.as_deref()),
                CutconeMode::Exact => exact(g, &d, emit_certificate.as_deref(), emit_farkas.as_deref()),
            }
        }
        Command::Kernel { n, .. } => kernel(g, *n),
        Command::VerifyCert { cert, input } => verify_cert(g, cert, &read_metric(input)?),
        Command::Embed { kind } => match kind {
            EmbedKind::L1 { cert, metric } => embed_l1(g, cert, metric.as_deref()),
            EmbedKind::LinfSig { graph } => points(g, &linf_sig_embedding(&read_graph(graph.as_deref())?)?),
        },
        Command::Sig { action } => match action {
            SigAction::Build { input } => sig_build(g, &read_metric(input)?),
            SigAction::Verify { input, graph } => {
                let d = read_metric(input)?;
                sig_verify(g, &d, &read_graph(Some(graph))?)
            }
            SigAction::StarObstruction { n, a } => star(g, *n, a.as_deref()),
        },
        Command::Family { action: FamilyAction::Gen { name, params, metric, emit_graph, input, edge_prob } } => {
            family(g, name, params, *metric, *emit_graph, input.as_deref(), *edge_prob)
        }
        Command::Matrix { action: MatrixAction::Dump { kind, n } } => matrix(g, *kind, *n),
    }
}

fn validate(g: &Global, d: &Metric, strict: bool) -> Result<u8> {
    let r = d.validate(strict);
    let triangles: Vec<Value> = r
        .triangle_violations
        .iter()
        .map(|v| json!({ "i": v.i, "j": v.j, "k": v.k, "slack": rational_to_json(&v.slack) }))
        .collect();
    let mut report = Report::new(json!({
        "valid": r.is_valid(),
        "triangle_violations": triangles,
        "zero_entries": r.zero_entries,
        "negative_entries": r.negative_entries,
    }))
    .line(if r.is_valid() { "valid" } else { "invalid" });
    for v in &r.triangle_violations {
        report = report.line(format!("triangle d({},{}) > d({},{}) + d({},{}) by {}", v.i, v.j, v.i, v.k, v.k, v.j, -&v.slack));
    }
    for (i, j) in &r.zero_entries {
        report = report.line(format!("zero d({i},{j})"));
    }
    emit(g, &report)?;
    Ok(verdict(r.is_valid()))
}

fn stats(g: &Global, d: &Metric) -> Result<u8> {
    let s = d.summarize();
    let report = Report::new(json!({
        "n": d.n(),
        "trace": rational_to_json(&s.trace),
        "star_traces": rationals(&s.star_traces),
        "diameter": rational_to_json(&d.diameter()),
    }))
    .line(format!("n: {}", d.n()))
    .line(format!("trace: {}", s.trace))
    .line(format!("star traces: {}", join(&s.star_traces)))
    .line(format!("diameter: {}", d.diameter()));
    emit(g, &report)?;
    Ok(OK)
}

fn lp_report(result: &FeasibilityResult, method: &str) -> Report {
    let mut json = json!({ "method": method, "member": result.is_feasible() });
    let mut report = Report::new(Value::Null).line(format!("method: {method}"));
    if let Some(w) = &result.witness {
        json["weights"] = rationals(w);
        report = report.line("member").line(format!("weights: {}", join(w)));
    }
    if let Some(y) = &result.farkas {
        json["farkas"] = rationals(y);
        report = report.line("not a member").line(format!("farkas: {}", join(y)));
    }
    report.json = json;
    report
}

fn paircut(g: &Global, d: &Metric, force_lp: bool) -> Result<u8> {
    if force_lp || d.n() < 5 {
        let limit = g.max_n.unwrap_or(DEFAULT_MAX_PAIRCUT_N);
        let result = paircut_membership_exact_with_limit(d, limit)?;
        emit(g, &lp_report(&result, "lp"))?;
        return Ok(verdict(result.is_feasible()));
    }
    let v = paircut_membership(d)?;
    let violations: Vec<Value> = v
        .violations
        .iter()
        .map(|x| json!({ "pair": [x.i, x.j], "slack": rational_to_json(&x.slack) }))
        .collect();
    let mut report = Report::new(json!({
        "method": "closed-form",
        "member": v.member,
        "weights": rationals(&v.weights),
        "violations": violations,
    }))
    .line(if v.member { "member" } else { "not a member" });
    if v.member {
        report = report.line(format!("weights: {}", join(&v.weights)));
    }
    for x in &v.violations {
        report = report.line(format!("violation {{{},{}}} slack {}", x.i, x.j, x.slack));
    }
    emit(g, &report)?;
    Ok(verdict(v.member))
}

fn sufficient(g: &Global, d: &Metric, cert_path: Option<&Path>) -> Result<u8> {
    guard(d.n(), g.max_n.unwrap_or(cutcone::cut::DEFAULT_MAX_CUT_VERTICES), "cut enumeration")?;
    let r = sufficient_condition(d)?;
    let failing: Vec<Value> = r
        .slacks
        .iter()
        .filter(|(_, s)| *s < Rational::default())
        .map(|(c, s)| json!({ "cut": c.members(), "slack": rational_to_json(s) }))
        .collect();
    let (code, mut report) = match &r.verdict {
        SufficientVerdict::Member(cert) => {
            let pruned = cert.pruned();
            if let Some(path) = cert_path {
                write_document(path, &certificate_to_json(&pruned))?;
            }
            let mut report = Report::new(json!({ "verdict": "member", "certificate": certificate_to_json(&pruned) }))
                .line("member");
            for (c, w) in pruned.cuts.iter().zip(&pruned.weights) {
                report = report.line(format!("{c} {w}"));
            }
            (OK, report)
        }
        SufficientVerdict::Inconclusive => (
            INCONCLUSIVE,
            Report::new(json!({ "verdict": "inconclusive", "failing_cuts": failing })).line("inconclusive"),
        ),
    };
    for (c, s) in r.slacks.iter().filter(|(_, s)| *s < Rational::default()) {
        report = report.line(format!("failing cut {c} slack {s}"));
    }
    emit(g, &report)?;
    Ok(code)
}

fn exact(g: &Global, d: &Metric, cert_path: Option<&Path>, farkas_path: Option<&Path>) -> Result<u8> {
    let result = cutcone_membership_with_limit(d, g.max_n.unwrap_or(DEFAULT_MAX_CUTCONE_N))?;
    let mut report = Report::new(json!({ "member": result.is_feasible() }));
    if let Some(w) = &result.witness {
        let cert = certificate_from_witness(d.n(), w)?;
        report.json["certificate"] = certificate_to_json(&cert);
        if let Some(path) = cert_path {
            write_document(path, &certificate_to_json(&cert))?;
        }
        report = report.line("member");
        for (c, w) in cert.cuts.iter().zip(&cert.weights) {
            report = report.line(format!("{c} {w}"));
        }
    }
    if let Some(y) = &result.farkas {
        report.json["farkas"] = farkas_to_json(y)["y"].clone();
        if let Some(path) = farkas_path {
            write_document(path, &farkas_to_json(y))?;
        }
        report = report.line("not a member").line(format!("farkas: {}", join(y)));
    }
    emit(g, &report)?;
    Ok(verdict(result.is_feasible()))
}

fn kernel(g: &Global, n: usize) -> Result<u8> {
    guard(n, g.max_n.unwrap_or(DEFAULT_MAX_CUTCONE_N), "the kernel basis")?;
    let basis = kernel_basis(n)?;
    let mut report = Report::new(Value::Null);
    let mut items = Vec::new();
    for (label, v) in basis.labels.iter().zip(&basis.vectors) {
        let name = match label {
            KernelLabel::Alternating(t) => format!("psi{t}"),
            KernelLabel::Skew(k) => format!("phi{k}"),
        };
        let dense = v.to_dense();
        report = report.line(format!("{name}: {}", join(&dense)));
        items.push(json!({ "label": name, "vector": rationals(&dense) }));
    }
    report.json = json!({ "n": n, "dimension": basis.len(), "basis": items });
    emit(g, &report)?;
    Ok(OK)
}

fn verify_cert(g: &Global, cert: &Path, d: &Metric) -> Result<u8> {
    let cert = certificate_from_json(&read_document(Some(cert))?)?;
    let r = verify_cut_certificate(&cert, d)?;
    let mismatch = r.mismatch.as_ref().map(|(i, j, expected, got)| {
        json!({ "pair": [i, j], "expected": rational_to_json(expected), "got": rational_to_json(got) })
    });
    let mut report = Report::new(json!({
        "valid": r.is_valid(),
        "negative_weights": r.negative_weights,
        "mismatch": mismatch,
    }))
    .line(if r.is_valid() { "valid" } else { "invalid" });
    for k in &r.negative_weights {
        report = report.line(format!("negative weight on cut {}", cert.cuts[*k]));
    }
    if let Some((i, j, expected, got)) = &r.mismatch {
        report = report.line(format!("d({i},{j}) = {expected} but the cuts give {got}"));
    }
    emit(g, &report)?;
    Ok(verdict(r.is_valid()))
}

fn points(g: &Global, pts: &PointSet) -> Result<u8> {
    let mut report = Report::new(points_to_json(pts));
    report.text = points_to_text(pts);
    emit(g, &report)?;
    Ok(OK)
}

fn embed_l1(g: &Global, cert: &Path, metric: Option<&Path>) -> Result<u8> {
    let cert = certificate_from_json(&read_document(Some(cert))?)?;
    let pts = l1_embedding(&cert)?;
    let Some(path) = metric else {
        return points(g, &pts);
    };
    let d = metric_from_json(&read_document(Some(path))?)?;
    let iso = verify_isometry(&pts, &d)?;
    if !iso.is_isometry() {
        for m in &iso.mismatches {
            eprintln!("d({},{}) = {} but the points give {}", m.i, m.j, m.expected, m.actual);
        }
        points(g, &pts)?;
        return Ok(NO);
    }
    points(g, &pts)
}

fn sig_build(g: &Global, d: &Metric) -> Result<u8> {
    let graph = sig_graph(d)?;
    let r = radii(d)?;
    let mut doc = graph_to_json(&graph);
    doc["radii"] = rationals(&r);
    let mut report = Report::new(doc).line(format!("radii: {}", join(&r)));
    report.text.push_str(&graph.to_string());
    if !report.text.ends_with('\n') {
        report.text.push('\n');
    }
    emit(g, &report)?;
    Ok(OK)
}

fn sig_lines(mut report: Report, sig: &SigReport) -> Report {
    for c in &sig.edge_checks {
        let kind = if c.edge { "edge" } else { "non-edge" };
        let note = match c.status {
            EdgeStatus::StrictPass => continue,
            EdgeStatus::NonstrictPass => "tie",
            EdgeStatus::Fail => "FAIL",
        };
        report = report.line(format!("{note} {kind} {{{},{}}} slack {}", c.i, c.j, c.slack));
    }
    report
}

fn sig_json(sig: &SigReport) -> Value {
    let checks: Vec<Value> = sig
        .edge_checks
        .iter()
        .map(|c| {
            let status = match c.status {
                EdgeStatus::StrictPass => "strict",
                EdgeStatus::NonstrictPass => "tie",
                EdgeStatus::Fail => "fail",
            };
            json!({ "pair": [c.i, c.j], "edge": c.edge, "slack": rational_to_json(&c.slack), "status": status })
        })
        .collect();
    json!({ "passes": sig.passes(), "radii": rationals(&sig.radii), "edge_checks": checks })
}

fn sig_verify(g: &Global, d: &Metric, graph: &SimpleGraph) -> Result<u8> {
    let sig = verify_sig_metric(d, graph)?;
    let report = Report::new(sig_json(&sig)).line(if sig.passes() { "SIG-metric" } else { "not a SIG-metric" });
    emit(g, &sig_lines(report, &sig))?;
    Ok(verdict(sig.passes()))
}

fn star(g: &Global, n: usize, a: Option<&[String]>) -> Result<u8> {
    let a: Vec<Rational> = match a {
        Some(list) => {
            let a = list.iter().map(|s| parse_rational(s)).collect::<cutcone::Result<Vec<_>>>()?;
            if a.len() != n {
                bail!("--a has {} entries but --n is {n}", a.len());
            }
            a
        }
        None => random_positive_rationals(n, 20, &mut seeded(g.seed)),
    };
    let ob = star_graph_obstruction(&a)?;
    let violations: Vec<Value> =
        ob.paircut.violations.iter().map(|v| json!({ "pair": [v.i, v.j], "slack": rational_to_json(&v.slack) })).collect();
    let report = Report::new(json!({
        "a": rationals(&a),
        "metric": metric_to_json(&ob.metric),
        "sig": sig_json(&ob.sig),
        "paircut_member": ob.paircut.member,
        "violations": violations,
        "holds": ob.holds(),
    }))
    .line(format!("a: {}", join(&a)))
    .line(format!("SIG-metric of S({n}): {}", if ob.sig.passes() { "yes" } else { "no" }))
    .line(format!("in the pair-cut cone: {}", if ob.paircut.member { "yes" } else { "no" }));
    let mut report = sig_lines(report, &ob.sig);
    for v in &ob.paircut.violations {
        report = report.line(format!("violation {{{},{}}} slack {}", v.i, v.j, v.slack));
    }
    emit(g, &report)?;
    Ok(verdict(ob.holds()))
}

fn family(
    g: &Global,
    name: &str,
    params: &[usize],
    which: Which,
    as_graph: bool,
    input: Option<&Path>,
    p: f64,
) -> Result<u8> {
    let graph = if name.eq_ignore_ascii_case("graph") {
        if !params.is_empty() {
            bail!("graph takes no parameters");
        }
        read_graph(input)?
    } else if name.eq_ignore_ascii_case("random") {
        let [n] = params else { bail!("random takes one parameter, got {}", params.len()) };
        if !(0.0..=1.0).contains(&p) {
            bail!("--edge-prob must lie in [0, 1]");
        }
        random_connected_graph(*n, p, &mut seeded(g.seed))?
    } else {
        Family::parse(name, params)?.build()?
    };
    let doc = if as_graph {
        graph_to_json(&graph)
    } else {
        let d = match which {
            Which::D0 => truncated_metric(&graph),
            Which::D1 => graph_metric(&graph),
        }
        .with_context(|| format!("metric of {name} {params:?}"))?;
        metric_to_json(&d)
    };
    emit_document(g, &doc)?;
    Ok(OK)
}

fn matrix(g: &Global, kind: MatrixKind, n: usize) -> Result<u8> {
    let limit = g.max_n.unwrap_or(DEFAULT_MAX_CUTCONE_N);
    let m: RationalMatrix = match kind {
        MatrixKind::Square => square_cut_matrix(n)?,
        MatrixKind::SquareInverse => inverse_square_cut_matrix(n)?,
        MatrixKind::Incidence => incidence_matrix(n)?,
        MatrixKind::Full => full_cut_matrix_with_limit(n, limit)?,
        MatrixKind::FullRightInverse => {
            guard(n, limit, "the full cut-matrix")?;
            full_cut_right_inverse(n)?
        }
    };
    let rows: Vec<Value> = (0..m.rows()).map(|r| rationals(m.row(r))).collect();
    let mut report = Report::new(json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows }));
    report.text = m.to_text();
    emit(g, &report)?;
    Ok(OK)
}
