//! JSON documents for metrics, graphs, cut certificates, Farkas vectors and
//! point sets. Rationals are written as `"p/q"` strings and read from
//! integers, exact decimals or such strings.

use serde_json::{json, Map, Value};

use crate::cut::Cut;
use crate::embedding::{Norm, PointSet};
use crate::error::{Error, Result};
use crate::fullcut::CutCertificate;
use crate::graph::SimpleGraph;
use crate::metric::Metric;
use crate::rational::{rational_from_json, rational_to_json, Rational};

fn object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::Format("expected a JSON object".into()))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::Format(format!("missing field {key:?}")))
}

fn usize_of(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| Error::Format(format!("{what} must be a nonnegative integer, got {v}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Format(format!("{what} must be an array")))
}

fn rationals(v: &Value, what: &str) -> Result<Vec<Rational>> {
    array(v, what)?.iter().map(rational_from_json).collect()
}

fn rationals_to_json(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rational_to_json).collect())
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

/// `{"n": n, "d": [...]}` with distances in lexicographic pair order.
pub fn metric_from_json(v: &Value) -> Result<Metric> {
    let obj = object(v)?;
    let n = usize_of(field(obj, "n")?, "n")?;
    Metric::new(n, rationals(field(obj, "d")?, "d")?)
}

pub fn metric_to_json(d: &Metric) -> Value {
    json!({ "n": d.n(), "d": rationals_to_json(d.as_slice()) })
}

/// `{"n": n, "edges": [[i, j], ...]}` or `{"adjacency": [[0, 1, ...], ...]}`.
pub fn graph_from_json(v: &Value) -> Result<SimpleGraph> {
    let obj = object(v)?;
    if let Some(adj) = obj.get("adjacency") {
        let rows = array(adj, "adjacency")?
            .iter()
            .map(|row| {
                array(row, "adjacency row")?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .and_then(|b| u8::try_from(b).ok())
                            .ok_or_else(|| Error::Format(format!("adjacency entry {x} is not 0 or 1")))
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let g = SimpleGraph::from_adjacency(&rows)?;
        if let Some(n) = obj.get("n") {
            if usize_of(n, "n")? != g.n() {
                return Err(Error::Format(format!("n = {n} disagrees with a {0}x{0} adjacency matrix", g.n())));
            }
        }
        return Ok(g);
    }
    let n = usize_of(field(obj, "n")?, "n")?;
    let edges = array(field(obj, "edges")?, "edges")?
        .iter()
        .map(|e| match array(e, "edge")?.as_slice() {
            [i, j] => Ok((usize_of(i, "vertex")?, usize_of(j, "vertex")?)),
            _ => Err(Error::Format(format!("edge {e} must be a pair"))),
        })
        .collect::<Result<Vec<_>>>()?;
    SimpleGraph::from_edges(n, &edges)
}

pub fn graph_to_json(g: &SimpleGraph) -> Value {
    json!({ "n": g.n(), "edges": g.edges().iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>() })
}

/// `{"n": n, "cuts": [{"members": [1, 2], "weight": "1/2"}, ...]}`; a cut may
/// be given as `"mask"` (vertex `i` is bit `i - 1`) instead of `"members"`.
pub fn certificate_from_json(v: &Value) -> Result<CutCertificate> {
    let obj = object(v)?;
    let n = usize_of(field(obj, "n")?, "n")?;
    let mut cuts = Vec::new();
    let mut weights = Vec::new();
    for entry in array(field(obj, "cuts")?, "cuts")? {
        let e = object(entry)?;
        let cut = match (e.get("members"), e.get("mask")) {
            (Some(m), None) => {
                let members = array(m, "members")?.iter().map(|x| usize_of(x, "member")).collect::<Result<Vec<_>>>()?;
                Cut::from_members(n, &members)?
            }
            (None, Some(mask)) => {
                let mask = mask.as_u64().ok_or_else(|| Error::Format(format!("mask {mask} is not an integer")))?;
                Cut::from_mask(n, mask)?
            }
            _ => return Err(Error::Format("each cut needs exactly one of \"members\" or \"mask\"".into())),
        };
        if cut.is_trivial() {
            return Err(Error::TrivialCut);
        }
        cuts.push(cut);
        weights.push(rational_from_json(field(e, "weight")?)?);
    }
    CutCertificate::new(n, cuts, weights)
}

pub fn certificate_to_json(cert: &CutCertificate) -> Value {
    let cuts: Vec<Value> = cert
        .cuts
        .iter()
        .zip(&cert.weights)
        .map(|(c, w)| json!({ "members": c.members(), "weight": rational_to_json(w) }))
        .collect();
    json!({ "n": cert.n, "cuts": cuts })
}

pub fn farkas_to_json(y: &[Rational]) -> Value {
    json!({ "y": rationals_to_json(y) })
}

pub fn farkas_from_json(v: &Value) -> Result<Vec<Rational>> {
    rationals(field(object(v)?, "y")?, "y")
}

pub fn points_to_json(pts: &PointSet) -> Value {
    json!({
        "norm": pts.norm.name(),
        "points": pts.points.iter().map(|p| rationals_to_json(p)).collect::<Vec<_>>(),
    })
}

pub fn points_from_json(v: &Value) -> Result<PointSet> {
    let obj = object(v)?;
    let norm = match field(obj, "norm")?.as_str() {
        Some("l1") => Norm::L1,
        Some("linf") => Norm::LInf,
        _ => return Err(Error::Format("norm must be \"l1\" or \"linf\"".into())),
    };
    let points = array(field(obj, "points")?, "points")?.iter().map(|p| rationals(p, "point")).collect::<Result<_>>()?;
    PointSet::new(norm, points)
}

/// One point per line, coordinates as space-separated `p/q` tokens.
pub fn points_to_text(pts: &PointSet) -> String {
    pts.points
        .iter()
        .map(|p| p.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}
