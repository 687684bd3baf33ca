//! JSON and CSV encodings.
//!
//! A rational is written as `{"num": n, "den": d, "approx": x}`; `num` and
//! `den` are JSON integers when they fit in 64 bits and decimal strings
//! otherwise, and `approx` is informational only.

use std::str::FromStr;

use gdof_core::rational::to_f64;
use gdof_core::{Halfspace, PiecewiseLinearCurve, Point2, Rational, Region2, SplitRegion, SplitTuple};
use num_bigint::BigInt;
use serde::Serializer;
use serde_json::{json, Value};

use crate::error::{GdofError, Result};
use crate::verify::SlopeReport;

fn int_to_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    let bad = || GdofError::Format(format!("expected an integer, found {v}"));
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(bad),
        Value::String(s) => BigInt::from_str(s).map_err(|_| bad()),
        _ => Err(bad()),
    }
}

pub fn rational_to_json(x: &Rational) -> Value {
    json!({
        "num": int_to_json(x.numer()),
        "den": int_to_json(x.denom()),
        "approx": to_f64(x),
    })
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let field = |k: &str| v.get(k).ok_or_else(|| GdofError::Format(format!("rational without {k:?}")));
    let num = int_from_json(field("num")?)?;
    let den = int_from_json(field("den")?)?;
    if den == BigInt::from(0) {
        return Err(GdofError::Format("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

pub fn serialize_rational<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&rational_to_json(x), s)
}

fn rationals(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rational_to_json).collect())
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| GdofError::Format(format!("{what} must be an array")))
}

fn halfspaces_to_json(hs: &[Halfspace]) -> Value {
    Value::Array(
        hs.iter()
            .map(|h| json!({"c": rationals(&h.coefficients), "rhs": rational_to_json(&h.rhs)}))
            .collect(),
    )
}

fn halfspaces_from_json(v: &Value) -> Result<Vec<Halfspace>> {
    array(v, "halfspaces")?
        .iter()
        .map(|h| {
            let c = array(h.get("c").unwrap_or(&Value::Null), "c")?
                .iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>>>()?;
            if c.is_empty() {
                return Err(GdofError::Format("empty coefficient list".into()));
            }
            let rhs = rational_from_json(h.get("rhs").unwrap_or(&Value::Null))?;
            Ok(Halfspace::new(c, rhs))
        })
        .collect()
}

pub fn point_to_json(p: &Point2) -> Value {
    rationals(p)
}

/// `{"halfspaces": [{"c": [..], "rhs": ..}], "vertices": [[d1, d2], ..]}`.
pub fn region_to_json(r: &Region2) -> Value {
    json!({
        "halfspaces": halfspaces_to_json(r.halfspaces()),
        "vertices": Value::Array(r.vertices().iter().map(point_to_json).collect()),
    })
}

/// Rebuilds the region from its half-spaces and checks the stored vertices.
pub fn region_from_json(v: &Value) -> Result<Region2> {
    let hs = halfspaces_from_json(v.get("halfspaces").unwrap_or(&Value::Null))?;
    let region = Region2::from_halfspaces(hs)?;
    if let Some(stored) = v.get("vertices") {
        let stored = array(stored, "vertices")?
            .iter()
            .map(|p| {
                let xy = array(p, "vertex")?;
                if xy.len() != 2 {
                    return Err(GdofError::Format("vertex must have two coordinates".into()));
                }
                Ok([rational_from_json(&xy[0])?, rational_from_json(&xy[1])?])
            })
            .collect::<Result<Vec<Point2>>>()?;
        if stored != region.vertices() {
            return Err(GdofError::Format("stored vertices disagree with the half-spaces".into()));
        }
    }
    Ok(region)
}

pub fn split_tuple_to_json(t: &SplitTuple) -> Value {
    json!({
        "d1p": rational_to_json(&t.d1p),
        "d1c": rational_to_json(&t.d1c),
        "d2p": rational_to_json(&t.d2p),
        "d2c": rational_to_json(&t.d2c),
    })
}

pub fn split_to_json(split: &SplitRegion, point: Option<&Point2>, witness: Option<&SplitTuple>) -> Value {
    let mut out = json!({
        "variables": ["d1p", "d1c", "d2p", "d2c"],
        "halfspaces": halfspaces_to_json(split.halfspaces()),
    });
    if let Some(p) = point {
        out["point"] = point_to_json(p);
        out["feasible"] = Value::Bool(witness.is_some());
        out["witness"] = witness.map(split_tuple_to_json).unwrap_or(Value::Null);
    }
    out
}

pub fn curve_to_json(name: &str, curve: &PiecewiseLinearCurve) -> Value {
    json!({
        "curve": name,
        "points": Value::Array(
            curve
                .points()
                .iter()
                .map(|(a, d)| json!({"alpha": rational_to_json(a), "d_s": rational_to_json(d)}))
                .collect()
        ),
    })
}

/// Two columns with a header, for gnuplot and spreadsheets.
pub fn curve_to_csv(curve: &PiecewiseLinearCurve) -> String {
    let mut s = String::from("alpha,d_s\n");
    for (a, d) in curve.points() {
        s.push_str(&format!("{},{}\n", to_f64(a), to_f64(d)));
    }
    s
}

pub fn vertices_to_csv(r: &Region2) -> String {
    let mut s = String::from("d1,d2\n");
    for v in r.vertices() {
        s.push_str(&format!("{},{}\n", to_f64(&v[0]), to_f64(&v[1])));
    }
    s
}

pub fn reports_to_json(suite: &str, reports: &[SlopeReport]) -> Value {
    json!({
        "suite": suite,
        "reports": reports,
        "pass": reports.iter().all(|r| r.pass),
    })
}

pub fn reports_to_csv(reports: &[SlopeReport]) -> String {
    let mut s = String::from("label,predicted,estimated,abs_error,pass\n");
    for r in reports {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.label,
            to_f64(&r.predicted),
            r.estimated,
            r.abs_error,
            r.pass
        ));
    }
    s
}
