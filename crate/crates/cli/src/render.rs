//! Text and JSON rendering helpers.

use std::sync::Arc;

use num_complex::Complex64;

use surface_flows_core::graph::{EmbeddedGraph, Face};
use surface_flows_core::group::{CharacterTable, FiniteGroup};
use surface_flows_core::partition::{CountResult, CountValue};

pub fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

/// Format a complex number compactly: integers as integers, reals without
/// an imaginary part, everything else as `a+bi`.
pub fn fmt_complex(z: Complex64) -> String {
    let fmt_re = |x: f64| {
        if (x - x.round()).abs() < 1e-9 {
            format!("{}", x.round() as i64)
        } else {
            format!("{x:.6}")
        }
    };
    if z.im.abs() < 1e-9 {
        fmt_re(z.re)
    } else {
        format!("{}{}{}i", fmt_re(z.re), if z.im >= 0.0 { "+" } else { "-" }, {
            let a = z.im.abs();
            if (a - a.round()).abs() < 1e-9 {
                format!("{}", a.round() as i64)
            } else {
                format!("{a:.6}")
            }
        })
    }
}

pub fn count_json(result: &CountResult) -> serde_json::Value {
    let value = match &result.value {
        CountValue::Integer(v) => serde_json::json!(v.to_string()),
        CountValue::Complex(z) => serde_json::json!([z.re, z.im]),
    };
    serde_json::json!({
        "value": value,
        "method": result.method.as_str(),
        "terms": result.terms,
    })
}

pub fn face_json(graph: &EmbeddedGraph, face: &Face) -> serde_json::Value {
    let arcs: Vec<serde_json::Value> = face
        .arcs
        .iter()
        .map(|a| serde_json::json!([graph.edge(a.edge).id, a.dir.as_str()]))
        .collect();
    match face.isolated_at {
        Some(v) => serde_json::json!({ "arcs": arcs, "isolated_at": graph.vertex_id(v) }),
        None => serde_json::json!({ "arcs": arcs }),
    }
}

pub fn group_json(group: &Arc<FiniteGroup>, table: &CharacterTable) -> serde_json::Value {
    let classes: Vec<serde_json::Value> = (0..group.classes().count())
        .map(|c| {
            let members: Vec<&str> = group
                .classes()
                .members(c)
                .iter()
                .map(|&e| group.name(e))
                .collect();
            serde_json::json!({
                "representative": group.name(group.classes().representative(c)),
                "size": group.classes().size(c),
                "elements": members,
            })
        })
        .collect();
    let characters: Vec<Vec<serde_json::Value>> = table
        .characters()
        .iter()
        .map(|chi| {
            chi.class_values()
                .iter()
                .map(|z| serde_json::json!([z.re, z.im]))
                .collect()
        })
        .collect();
    serde_json::json!({
        "order": group.order(),
        "classes": classes,
        "characters": characters,
    })
}

pub fn group_text(group: &Arc<FiniteGroup>, table: &CharacterTable) -> String {
    let mut out = String::new();
    let n = group.order();
    out.push_str(&format!("group: {}  order: {n}\n", group.spec_string()));
    out.push_str(&format!("elements: {}\n", group.names().join(" ")));

    out.push_str("cayley table:\n");
    let width = group
        .names()
        .iter()
        .map(String::len)
        .max()
        .unwrap_or(1)
        .max(1);
    out.push_str(&format!("  {:width$} |", ""));
    for b in 0..n {
        out.push_str(&format!(" {:width$}", group.name(b)));
    }
    out.push('\n');
    out.push_str(&format!("  {:-<w$}\n", "", w = (width + 1) * (n + 1) + 2));
    for a in 0..n {
        out.push_str(&format!("  {:width$} |", group.name(a)));
        for b in 0..n {
            out.push_str(&format!(" {:width$}", group.name(group.mul(a, b))));
        }
        out.push('\n');
    }

    out.push_str("classes:\n");
    for c in 0..group.classes().count() {
        let members: Vec<&str> = group
            .classes()
            .members(c)
            .iter()
            .map(|&e| group.name(e))
            .collect();
        out.push_str(&format!(
            "  {c}: size {}, elements {{{}}}\n",
            group.classes().size(c),
            members.join(", ")
        ));
    }

    out.push_str("character table (rows: irreducibles, columns: classes by representative):\n");
    let header: Vec<String> = (0..group.classes().count())
        .map(|c| group.name(group.classes().representative(c)).to_string())
        .collect();
    out.push_str(&format!("  {:>6} | {}\n", "dim", header.join("  ")));
    for (chi, &dim) in table.characters().iter().zip(table.dimensions()) {
        let row: Vec<String> = chi.class_values().iter().map(|&z| fmt_complex(z)).collect();
        out.push_str(&format!("  {dim:>6} | {}\n", row.join("  ")));
    }
    out
}
