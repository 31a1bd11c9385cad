//! JSON output documents. Keys come out sorted (serde_json's default map),
//! and every array is already in the library's canonical order, so equal
//! inputs give equal bytes.

use mckay_core::moduli::{
    DistinguishedRep, GitParameter, PThetaData, Saturation, ThetaFan, TightSetPolicy,
};
use mckay_core::polyhedra::{vertex_facet_incidence, FanCone};
use mckay_core::quiver::{kernel_generators_cij, Binomial, McKayQuiver};
use mckay_core::{Rational, Result};
use serde_json::{json, Value};

pub const SCHEMA: &str = "mckay-moduli/1";

/// `"num/den"`, integers included.
pub fn rational(x: &Rational) -> Value {
    Value::String(format!("{}/{}", x.numer(), x.denom()))
}

pub fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

fn rational_rows(rows: &[Vec<Rational>]) -> Value {
    Value::Array(rows.iter().map(|r| rationals(r)).collect())
}

/// Inverse of [`rational`].
pub fn parse_rational(s: &str) -> Option<Rational> {
    s.parse().ok()
}

pub fn quiver_document(quiver: &McKayQuiver) -> Value {
    let inc = quiver.incidence();
    let binomials: Vec<String> = kernel_generators_cij(quiver)
        .iter()
        .map(|c| Binomial::from_difference(c).display(quiver).to_string())
        .collect();
    let arrows: Vec<Value> = quiver
        .arrows()
        .iter()
        .map(|a| json!({"head": a.head, "tail": a.tail, "label": a.label}))
        .collect();
    let vertices: Vec<&[i64]> = quiver
        .vertices()
        .iter()
        .map(|c| c.residues.as_slice())
        .collect();
    json!({
        "schema": SCHEMA,
        "group": quiver.group().describe(),
        "quiver": {
            "vertices": vertices,
            "arrows": arrows,
            "B": inc.b,
            "C": inc.c,
            "D": inc.d,
            "kernel_generators": binomials,
        }
    })
}

fn theta_fields(doc: &mut Value, theta: &GitParameter, ghilb: bool) {
    doc["theta"] = rationals(theta.theta());
    doc["ghilb"] = Value::Bool(ghilb);
}

fn cone_value(cone: &FanCone) -> Value {
    json!({"rays": cone.rays, "dim": cone.dim})
}

pub fn fan_document(
    pt: &PThetaData,
    tf: &ThetaFan,
    d_theta: Option<String>,
    ghilb: bool,
) -> Result<Value> {
    let incidence = vertex_facet_incidence(&pt.h, &pt.v)?;
    let inequalities: Vec<Value> =
        pt.h.inequalities
            .iter()
            .map(|h| json!({"normal": rationals(&h.normal), "offset": rational(&h.offset)}))
            .collect();
    let fan = &tf.fan;
    let maximal: Vec<&Vec<usize>> = fan.maximal.iter().map(|&c| &fan.cones[c].rays).collect();
    let walls: Vec<&Vec<usize>> = fan
        .cones
        .iter()
        .filter(|c| c.dim == 2)
        .map(|c| &c.rays)
        .collect();
    let mut fan_value = json!({
        "rays": rational_rows(&fan.rays),
        "maximal_cones": maximal,
        "walls": walls,
        "markers": rational_rows(&fan.markers),
    });
    if let Some(charts) = &tf.charts {
        fan_value["charts"] = Value::Array(
            charts
                .iter()
                .map(|c| {
                    let witness = match &c.saturation {
                        Saturation::SaturatedUpToBound => Value::Null,
                        Saturation::NotSaturated(x) => json!(x),
                    };
                    json!({
                        "vertex": c.vertex,
                        "bound": c.bound,
                        "generators": c.generators,
                        "saturated_up_to_bound": witness.is_null(),
                        "witness": witness,
                    })
                })
                .collect(),
        );
    }
    let mut doc = json!({
        "schema": SCHEMA,
        "group": pt.quiver.group().describe(),
        "p_theta": {
            "vertices": rational_rows(&pt.v.vertices),
            "rays": rational_rows(&pt.v.rays),
            "inequalities": inequalities,
            "incidence": incidence,
        },
        "fan": fan_value,
        "d_theta": d_theta,
    });
    theta_fields(&mut doc, &pt.theta, ghilb);
    Ok(doc)
}

pub struct RepContext<'a> {
    pub quiver: &'a McKayQuiver,
    pub theta: &'a GitParameter,
    pub ghilb: bool,
    pub w: &'a [Rational],
    pub policy: TightSetPolicy,
    pub cone_id: usize,
    pub cone: &'a FanCone,
}

pub fn rep_document(ctx: &RepContext<'_>, rep: &DistinguishedRep) -> Value {
    let policy = match ctx.policy {
        TightSetPolicy::WholeFace => "whole-face",
        TightSetPolicy::SingleOptimizer => "single-optimizer",
    };
    let mut doc = json!({
        "schema": SCHEMA,
        "group": ctx.quiver.group().describe(),
        "rep": {
            "w": rationals(ctx.w),
            "b": rep.b,
            "tight_set": rep.tight,
            "tight_set_policy": policy,
            "v": rationals(&rep.v),
            "value": rational(&rep.value),
            "cone_id": ctx.cone_id,
            "cone": cone_value(ctx.cone),
        }
    });
    theta_fields(&mut doc, ctx.theta, ctx.ghilb);
    doc
}

/// Indented JSON with a trailing newline. Arrays of scalars stay on one
/// line so matrices read row by row.
pub fn render(doc: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, doc, 0);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth + 1);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push('}');
        }
        Value::Array(items) if !is_flat(v) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push(']');
        }
        Value::Array(items) => {
            let cells: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&cells.join(", "));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}
