//! wasm-bindgen bindings for the static demo page in `www/`.
//!
//! Every export takes a group expression and returns a JSON string; errors
//! come back as a thrown string. The plain `*_json` functions hold the logic so
//! they can be tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use powergraph::classify::{classify, DiameterPrediction, Witness};
use powergraph::graphs::{bfs_distances, complement, star, GraphKind};
use powergraph::group::build_group_with_cap;
use powergraph::verify::GroupAnalysis;
use powergraph::{parse_group_expr, GroupTable};

/// Largest group the page will draw.
pub const DEMO_ORDER_CAP: usize = 256;

#[derive(Serialize)]
struct Vertex {
    element: usize,
    order: u32,
}

#[derive(Serialize)]
struct Prediction {
    value: u8,
    reason: String,
    witness: Vec<usize>,
}

#[derive(Serialize)]
struct GraphView {
    name: String,
    order: usize,
    kind: GraphKind,
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    isolated: Vec<usize>,
    components: usize,
    diameter: Option<usize>,
    /// Star-vertex indices of a pair at maximal distance.
    farthest: Option<(usize, usize)>,
    prediction: Option<Prediction>,
}

#[derive(Serialize)]
struct Summary {
    name: String,
    order: usize,
    orders: Vec<(u32, usize)>,
    maximal_cyclic: usize,
    cyc: usize,
    elementary_abelian_2: bool,
    nilpotent: bool,
    psi: bool,
    phi: bool,
    power: Result<Prediction, String>,
    enhanced: Result<Prediction, String>,
}

fn load(expr: &str) -> Result<GroupTable, String> {
    let e = parse_group_expr(expr).map_err(|e| e.to_string())?;
    build_group_with_cap(&e, DEMO_ORDER_CAP).map_err(|e| e.to_string())
}

fn parse_kind(kind: &str) -> Result<GraphKind, String> {
    match kind {
        "power" => Ok(GraphKind::Power),
        "enhanced" => Ok(GraphKind::Enhanced),
        other => Err(format!("unknown graph kind '{other}'")),
    }
}

fn prediction(p: DiameterPrediction) -> Prediction {
    let witness = match p.witness {
        Some(Witness::Psi(w)) => vec![w.element.0],
        Some(Witness::Phi(w)) => vec![w.x.0, w.y.0],
        None => vec![],
    };
    Prediction { value: p.value, reason: p.reason.to_string(), witness }
}

/// Star of the complement of the chosen graph, with its measured and predicted diameter.
pub fn complement_graph_json(expr: &str, kind: &str) -> Result<String, String> {
    let g = load(expr)?;
    let kind = parse_kind(kind)?;
    let a = GroupAnalysis::new(&g);
    let m = a.measure(kind);
    let position = |e: usize| m.star.kept.iter().position(|&v| v == e);
    let view = GraphView {
        name: g.name().to_string(),
        order: g.order(),
        kind,
        vertices: m.star.kept.iter().map(|&v| Vertex { element: v, order: g.orders()[v] }).collect(),
        edges: m.star.graph.edges().collect(),
        isolated: m.star.isolated.clone(),
        components: m.components,
        diameter: m.diameter,
        farthest: m.farthest_pair.and_then(|(u, v)| Some((position(u.0)?, position(v.0)?))),
        prediction: a.predict(kind).ok().map(prediction),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

/// Distances from star vertex `source` to every star vertex (`null` when unreachable).
pub fn distances_from_json(expr: &str, kind: &str, source: usize) -> Result<String, String> {
    let g = load(expr)?;
    let graph = GroupAnalysis::new(&g).graph(parse_kind(kind)?);
    let s = star(&complement(&graph));
    if source >= s.kept.len() {
        return Err(format!("vertex {source} is not in the complement's star"));
    }
    serde_json::to_string(&bfs_distances(&s.graph, source)).map_err(|e| e.to_string())
}

pub fn summary_json(expr: &str) -> Result<String, String> {
    let g = load(expr)?;
    let a = GroupAnalysis::new(&g);
    let c = classify(&g);
    let summary = Summary {
        name: g.name().to_string(),
        order: g.order(),
        orders: g.order_multiset().into_iter().collect(),
        maximal_cyclic: a.family.len(),
        cyc: a.cyc.count_ones(..),
        elementary_abelian_2: c.elementary_abelian_2,
        nilpotent: c.nilpotent,
        psi: c.psi.is_some(),
        phi: c.phi.is_some(),
        power: c.power.map(prediction).map_err(|e| e.to_string()),
        enhanced: c.enhanced.map(prediction).map_err(|e| e.to_string()),
    };
    serde_json::to_string(&summary).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = complementGraph)]
pub fn complement_graph(expr: &str, kind: &str) -> Result<String, JsValue> {
    complement_graph_json(expr, kind).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = distancesFrom)]
pub fn distances_from(expr: &str, kind: &str, source: usize) -> Result<String, JsValue> {
    distances_from_json(expr, kind, source).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = groupSummary)]
pub fn group_summary(expr: &str) -> Result<String, JsValue> {
    summary_json(expr).map_err(|e| JsValue::from_str(&e))
}
