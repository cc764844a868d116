//! Serialized views of lattices, faces and weight systems. Every output is
//! a deterministic function of its input; JSON objects carry `schema: 1`.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::Result;
use crate::faces::{self, CrossSectionLattice};
use crate::nodeset::NodeSet;
use crate::rootsys::{RootSystem, Weight};
use crate::weights::WeightSystem;

pub const SCHEMA: u32 = 1;

fn header(rs: &RootSystem, lambda: &Weight) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("type".into(), json!(rs.kind().to_string()));
    m.insert("rank".into(), json!(rs.rank()));
    m.insert("lambda".into(), json!(lambda));
    m
}

fn rationals(v: &[crate::linalg::Rational]) -> Value {
    json!(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

/// Lattice elements as JSON nodes; `⊥` is id 0 with `dim = -1`.
pub fn lattice_json(rs: &RootSystem, lambda: &Weight, csl: &CrossSectionLattice, f: &[u128]) -> Value {
    let mut nodes = vec![json!({
        "id": 0,
        "kind": "zero",
        "nodes": [],
        "dim": -1,
        "orbit_size": 1,
        "least": Value::Null,
        "n_vertices": 0,
    })];
    for (k, face) in csl.face_lattice().faces().iter().enumerate() {
        nodes.push(json!({
            "id": k + 1,
            "kind": "face",
            "nodes": face.nodes(),
            "dim": face.dim(),
            "orbit_size": csl.orbit_sizes()[k],
            "least": face.least(),
            "n_vertices": face.vertex_count(),
        }));
    }
    let edges: Vec<[usize; 2]> = csl.covers().into_iter().map(|(a, b)| [a, b]).collect();
    let mut m = header(rs, lambda);
    m.insert("type_j".into(), json!(csl.type_j()));
    m.insert("nodes".into(), Value::Array(nodes));
    m.insert("edges".into(), json!(edges));
    m.insert("f_polynomial".into(), json!(f));
    Value::Object(m)
}

/// Hasse diagram with `⊥` at the bottom.
pub fn lattice_dot(csl: &CrossSectionLattice) -> String {
    let mut s = String::from("digraph cross_section_lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    s.push_str("  n0 [label=\"⊥\", shape=circle];\n");
    for (k, face) in csl.face_lattice().faces().iter().enumerate() {
        let _ = writeln!(
            s,
            "  n{} [label=\"S={} dim {}\\n{} faces, {} vertices\"];",
            k + 1,
            face.nodes(),
            face.dim(),
            csl.orbit_sizes()[k],
            face.vertex_count()
        );
    }
    for (a, b) in csl.covers() {
        let _ = writeln!(s, "  n{a} -> n{b};");
    }
    s.push_str("}\n");
    s
}

/// `f(t) = 6 + 6t + t^2`.
pub fn f_polynomial_text(f: &[u128]) -> String {
    let terms: Vec<String> = f
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| {
            let coeff = if c == 1 && k > 0 { String::new() } else { c.to_string() };
            match k {
                0 => coeff,
                1 => format!("{coeff}t"),
                _ => format!("{coeff}t^{k}"),
            }
        })
        .collect();
    format!("f(t) = {}", terms.join(" + "))
}

pub fn f_polynomial_json(rs: &RootSystem, lambda: &Weight, f: &[u128]) -> Value {
    let mut m = header(rs, lambda);
    m.insert("f_polynomial".into(), json!(f));
    Value::Object(m)
}

/// Summary of the standard parabolic face `F_I`.
#[derive(Debug, Clone)]
pub struct FaceReport {
    pub subset: NodeSet,
    pub face: faces::CanonicalFace,
    pub least_root_coords: Vec<crate::linalg::Rational>,
    pub barycenter: faces::FaceBarycenter,
    /// `(i, F_i is a facet)` for every simple index.
    pub facets: Vec<(usize, bool)>,
}

pub fn face_report(rs: &RootSystem, lambda: &Weight, ws: &WeightSystem, subset: NodeSet) -> Result<FaceReport> {
    let face = faces::standard_parabolic_face(rs, lambda, subset)?;
    let barycenter = faces::barycenter_face(rs, lambda, ws, subset)?;
    let facets = (1..=rs.rank())
        .map(|i| Ok((i, faces::is_facet(rs, lambda, i)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(FaceReport {
        subset,
        least_root_coords: rs.root_coords(face.least()),
        face,
        barycenter,
        facets,
    })
}

pub fn face_report_json(rs: &RootSystem, lambda: &Weight, r: &FaceReport) -> Value {
    let mut m = header(rs, lambda);
    m.insert("subset".into(), json!(r.subset));
    m.insert("canonical".into(), json!(r.face.nodes()));
    m.insert("dim".into(), json!(r.face.dim()));
    m.insert("least".into(), json!(r.face.least()));
    m.insert("least_root_coords".into(), rationals(&r.least_root_coords));
    m.insert("n_vertices".into(), json!(r.face.vertex_count()));
    m.insert("n_weights".into(), json!(r.barycenter.count));
    let coeffs: Vec<Value> = r
        .barycenter
        .coefficients
        .iter()
        .map(|(i, a)| json!({"index": i, "coefficient": a.to_string()}))
        .collect();
    m.insert("barycenter".into(), Value::Array(coeffs));
    let facets: Vec<Value> = r.facets.iter().map(|(i, f)| json!({"index": i, "facet": f})).collect();
    m.insert("facets".into(), Value::Array(facets));
    Value::Object(m)
}

pub fn face_report_text(r: &FaceReport) -> String {
    let root: Vec<String> = r.least_root_coords.iter().map(ToString::to_string).collect();
    let bary: Vec<String> = r
        .barycenter
        .coefficients
        .iter()
        .map(|(i, a)| format!("{a}·ϖ̃_{i}"))
        .collect();
    let facets: Vec<String> = r.facets.iter().map(|(i, f)| format!("F_{i}: {f}")).collect();
    let mut s = String::new();
    let _ = writeln!(s, "I = {}", r.subset);
    let _ = writeln!(s, "canonical S = {}", r.face.nodes());
    let _ = writeln!(s, "dim = {}", r.face.dim());
    let _ = writeln!(s, "least = {} (root coordinates ({}))", r.face.least(), root.join(","));
    let _ = writeln!(s, "vertices = {}", r.face.vertex_count());
    let _ = writeln!(s, "weights in face = {}", r.barycenter.count);
    let bary = if bary.is_empty() { "0".to_string() } else { bary.join(" + ") };
    let _ = writeln!(s, "barycenter = {bary}");
    let _ = writeln!(s, "facet flags: {}", facets.join(", "));
    s
}

pub fn weights_json(rs: &RootSystem, lambda: &Weight, ws: &WeightSystem) -> Value {
    let mut m = header(rs, lambda);
    m.insert("count".into(), json!(ws.len()));
    m.insert("weights".into(), json!(ws.weights()));
    Value::Object(m)
}

pub fn weights_text(ws: &WeightSystem) -> String {
    let mut s = String::new();
    for mu in ws.iter() {
        let _ = writeln!(s, "{mu}");
    }
    s
}

pub fn diagram_json(rs: &RootSystem, lambda: &Weight, diag: &crate::dynkin::ExtendedDiagram) -> Value {
    let mut edges = Vec::new();
    for a in 0..=rs.rank() {
        for b in diag.neighbors(a).iter().filter(|&b| b > a) {
            edges.push([a, b]);
        }
    }
    let mut m = header(rs, lambda);
    m.insert("type_j".into(), json!(diag.type_j()));
    m.insert("edges".into(), json!(edges));
    m.insert("connected_with_zero".into(), json!(diag.enumerate_connected_with_zero()));
    Value::Object(m)
}
