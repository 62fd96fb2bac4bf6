//! WebAssembly bindings for the browser demo in `www/`. Every export takes
//! text and returns a JSON string; failures come back as `{"error": ...}`.

use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use circarc::circle::{Arc, ArcFamily};
use circarc::classify::circular_report;
use circarc::cover::rho;
use circarc::generators::{generate, FamilySpec, Generated};
use circarc::graph::UnitGraph;
use circarc::hyperbolicity::{delta_sup, DEFAULT_GEODESIC_CAP};
use circarc::intersection::build;
use circarc::Error;

/// Geodesic cap for the browser, small enough to stay responsive.
const WEB_GEODESIC_CAP: usize = DEFAULT_GEODESIC_CAP / 10;

fn to_json(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable report")
}

fn respond(r: Result<Value, Error>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn graph_json(g: &UnitGraph) -> Value {
    json!({ "n": g.n(), "edges": g.edges() })
}

/// Arcs with their labels and endpoints in turns, for drawing.
fn arcs_json(fam: &ArcFamily) -> Value {
    fam.arcs()
        .iter()
        .zip(fam.labels())
        .map(|(a, label)| match a {
            Arc::Full => json!({ "label": label, "full": true }),
            Arc::Span { start, end } => json!({ "label": label, "start": start, "end": end }),
        })
        .collect()
}

fn analyze(text: &str) -> Result<Value, Error> {
    let fam: ArcFamily = text.parse()?;
    let model = build(&fam);
    let cover = rho(&fam);
    let delta = delta_sup(&model.graph, WEB_GEODESIC_CAP);
    Ok(json!({
        "arcs": arcs_json(&fam),
        "graph": graph_json(&model.graph),
        "cover": to_json(&cover),
        "delta": to_json(&delta),
        "report": to_json(&circular_report(&model)),
    }))
}

fn generated(name: &str, params: &str, seed: u64) -> Result<Value, Error> {
    let mut spec = FamilySpec::new(name.trim().parse()?);
    spec.seed = seed;
    for kv in params.split([',', ' ']).filter(|s| !s.is_empty()) {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::Param(format!("expected key=value, got {kv:?}")))?;
        spec = spec.param(k, v);
    }
    Ok(match generate(&spec)? {
        Generated::Family(f) => json!({ "kind": "family", "text": f.to_string() }),
        Generated::Graph(g) => json!({ "kind": "graph", "text": g.to_string() }),
    })
}

fn graph_delta(text: &str) -> Result<Value, Error> {
    let g: UnitGraph = text.parse()?;
    Ok(json!({
        "graph": graph_json(&g),
        "delta": to_json(&delta_sup(&g, WEB_GEODESIC_CAP)),
    }))
}

/// Intersection graph, ρ with a cover, δ with a witness, and the circular
/// report of an arc family in text form.
#[wasm_bindgen]
pub fn analyze_family(text: &str) -> String {
    respond(analyze(text))
}

/// Text of a named family, e.g. `generate_family("cycle_tiling", "rho=5", 0)`.
#[wasm_bindgen]
pub fn generate_family(name: &str, params: &str, seed: u32) -> String {
    respond(generated(name, params, seed.into()))
}

/// δ of a graph given as an edge list.
#[wasm_bindgen]
pub fn delta_of_graph(text: &str) -> String {
    respond(graph_delta(text))
}
