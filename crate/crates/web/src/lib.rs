//! wasm-bindgen surface for the static demo page in `www/`.
//!
//! Each export takes plain strings and returns a JSON document, so the page
//! needs no generated bindings beyond the three functions. Budgets arrive
//! as JS numbers.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use cyclewidth::format::graph6;
use cyclewidth::harness::generate::{generate, Family};
use cyclewidth::treewidth::TreeDecomposition;
use cyclewidth::{decompose, exact_treewidth, verify_outcome, Budget, CycleFamilySpec, Graph, Outcome};

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    json!({ "n": g.n(), "edges": edges, "graph6": graph6::encode(g) })
}

fn td_json(td: &TreeDecomposition) -> Value {
    let edges: Vec<[usize; 2]> = td.edges().iter().map(|&(a, b)| [a, b]).collect();
    json!({ "width": td.width(), "bags": td.bags(), "edges": edges })
}

fn parse_graph(text: &str) -> Result<Graph, String> {
    graph6::decode(text.trim().as_bytes()).map_err(|e| e.to_string())
}

pub fn generate_json(family: &str) -> Result<Value, String> {
    let fam: Family = family.parse().map_err(|e: cyclewidth::Error| e.to_string())?;
    let g = generate(&fam).map_err(|e| e.to_string())?;
    if g.n() > cyclewidth::graph::MAX_EXACT_VERTICES {
        return Err(format!("the demo handles at most {} vertices", cyclewidth::graph::MAX_EXACT_VERTICES));
    }
    Ok(graph_json(&g))
}

pub fn treewidth_json(g6: &str, budget: u64) -> Result<Value, String> {
    let g = parse_graph(g6)?;
    let r = exact_treewidth(&g, Budget::new(budget));
    Ok(json!({
        "graph": graph_json(&g),
        "exact": r.exact,
        "lower_bound": r.lower_bound,
        "order": r.order,
        "decomposition": td_json(&r.decomposition),
    }))
}

pub fn decompose_json(g6: &str, spec: &str, budget: u64) -> Result<Value, String> {
    let g = parse_graph(g6)?;
    let spec: CycleFamilySpec = spec.parse().map_err(|e: cyclewidth::Error| e.to_string())?;
    let o = decompose(&g, &spec, Budget::new(budget)).map_err(|e| e.to_string())?;
    let verified = verify_outcome(&g, &spec, &o).is_ok();
    let trace: Vec<String> = o.trace().iter().map(|r| r.to_string()).collect();
    let body = match &o {
        Outcome::Minor { model, .. } => {
            let cycles: Vec<&[usize]> = model.packing.cycles.iter().map(|c| c.vertices()).collect();
            let targets: Vec<usize> = model.assignment.iter().map(|&j| spec.lengths()[j]).collect();
            json!({ "tag": "minor", "cycles": cycles, "targets": targets })
        }
        Outcome::Decomposition { td, bound, .. } => {
            json!({ "tag": "decomposition", "bound": bound, "decomposition": td_json(td) })
        }
    };
    let mut out = json!({ "graph": graph_json(&g), "verified": verified, "trace": trace, "h": spec.h(), "k": spec.k() });
    if let (Value::Object(o), Value::Object(b)) = (&mut out, body) {
        o.extend(b);
    }
    Ok(out)
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

/// Graph from a family string such as `random:12:0.3:1`.
#[wasm_bindgen(js_name = generateGraph)]
pub fn generate_graph(family: &str) -> Result<String, JsValue> {
    to_js(generate_json(family))
}

/// Exact treewidth of a graph6 graph, with its decomposition.
#[wasm_bindgen]
pub fn treewidth(g6: &str, budget: f64) -> Result<String, JsValue> {
    to_js(treewidth_json(g6, budget as u64))
}

/// Minor model or bounded-width decomposition for the family `spec`.
#[wasm_bindgen(js_name = decomposeGraph)]
pub fn decompose_graph(g6: &str, spec: &str, budget: f64) -> Result<String, JsValue> {
    to_js(decompose_json(g6, spec, budget as u64))
}
