//! Browser bindings. Every entry point takes plain strings and returns a JSON
//! string of the form `{"ok": true, ...}` or `{"ok": false, "error": "..."}`,
//! so the page needs no generated TypeScript types.

use drg_core::exact::rational::{parse_rational_list, serde_rational};
use drg_core::exact::{det_exact, BigRational, RationalMatrix};
use drg_core::oracle::{cross_validate, graph::parse_params, intersection_array_of, Family, IdentityCheck};
use drg_core::{
    analyze, conjecture_check, distance_seed, srg_closed_form, ConjectureReport, IntersectionArray,
    InvertibilityReport, SrgParams, SrgReport,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Families larger than this are refused to keep the page responsive.
pub const MAX_VERTICES: usize = 128;

#[derive(Serialize)]
struct Failure {
    ok: bool,
    error: String,
}

#[derive(Serialize)]
struct Success<T: Serialize> {
    ok: bool,
    #[serde(flatten)]
    body: T,
}

fn respond<T: Serialize>(result: Result<T, String>) -> String {
    match result {
        Ok(body) => serde_json::to_string(&Success { ok: true, body }),
        Err(error) => serde_json::to_string(&Failure { ok: false, error }),
    }
    .expect("responses serialize")
}

fn seed_or_default(array: &IntersectionArray, seed: &str) -> Result<Vec<BigRational>, String> {
    if seed.trim().is_empty() {
        return Ok(distance_seed(array.diameter()));
    }
    parse_rational_list(seed).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct AnalyzeBody {
    report: InvertibilityReport,
    conjecture: ConjectureReport,
    notes: Vec<String>,
}

fn analyze_body(array: &str, seed: &str) -> Result<AnalyzeBody, String> {
    let array: IntersectionArray = array.parse().map_err(|e: drg_core::ArrayError| e.to_string())?;
    array.sphere_sizes().map_err(|e| e.to_string())?;
    let seed = seed_or_default(&array, seed)?;
    let report = analyze(&array, &seed).map_err(|e| e.to_string())?;
    let conjecture = conjecture_check(&array, &seed).map_err(|e| e.to_string())?;
    Ok(AnalyzeBody {
        notes: array.notes(),
        report,
        conjecture,
    })
}

/// Invertibility report and determinant identity check for an array and an
/// optional seed (empty string for the distance matrix).
#[wasm_bindgen]
pub fn analyze_array(array: &str, seed: &str) -> String {
    respond(analyze_body(array, seed))
}

#[derive(Serialize)]
struct SrgBody {
    report: SrgReport,
    theta: String,
    tau: String,
}

fn srg_body(params: &str) -> Result<SrgBody, String> {
    let params: SrgParams = params.parse().map_err(|e: drg_core::SrgError| e.to_string())?;
    let report = srg_closed_form(&params).map_err(|e| e.to_string())?;
    Ok(SrgBody {
        theta: report.theta.to_string(),
        tau: report.tau.to_string(),
        report,
    })
}

/// Closed form for strongly-regular parameters given as `n,k,a,c`.
#[wasm_bindgen]
pub fn srg(params: &str) -> String {
    respond(srg_body(params))
}

#[derive(Serialize)]
struct FamilyBody {
    family: String,
    vertices: usize,
    array: IntersectionArray,
    /// Entries as `"p/q"` strings.
    distance: Vec<Vec<String>>,
    inverse: Option<Vec<Vec<String>>>,
    #[serde(with = "serde_rational::option")]
    det: Option<BigRational>,
    direct_rank: usize,
    checks: Vec<IdentityCheck>,
    all_passed: bool,
}

fn family_body(name: &str, params: &str) -> Result<FamilyBody, String> {
    let params = parse_params(params).map_err(|_| format!("parameters must be integers, got `{params}`"))?;
    let family = Family::parse(name, &params).map_err(|e| e.to_string())?;
    let graph = family.build();
    if graph.vertex_count() > MAX_VERTICES {
        return Err(format!(
            "{family} has {} vertices; the demo stops at {MAX_VERTICES}",
            graph.vertex_count()
        ));
    }
    let array = intersection_array_of(&graph).map_err(|e| e.to_string())?;
    let cv = cross_validate(&graph).map_err(|e| e.to_string())?;
    let dist = graph.distances().map_err(|e| e.to_string())?;
    let n = graph.vertex_count();
    let d = graph.distance_matrix().map_err(|e| e.to_string())?;
    let inverse = cv
        .analysis
        .w
        .as_ref()
        .map(|w| RationalMatrix::from_fn(n, n, |u, v| w[dist[u][v]].clone()));
    let det = (n <= 40).then(|| det_exact(&d).expect("square"));
    Ok(FamilyBody {
        family: family.to_string(),
        vertices: n,
        array,
        distance: d.to_string_rows(),
        inverse: inverse.map(|m| m.to_string_rows()),
        det,
        direct_rank: cv.direct_rank,
        all_passed: cv.all_passed(),
        checks: cv.checks,
    })
}

/// Builds a named graph, counts its intersection array, cross-validates it,
/// and returns `D` and `D^-1` for heatmaps.
#[wasm_bindgen]
pub fn family_oracle(name: &str, params: &str) -> String {
    respond(family_body(name, params))
}
