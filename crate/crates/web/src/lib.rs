//! Browser bindings: three operations over algebras pasted as `.alg` text.
//! Every export returns a JSON string; errors come back as JS exceptions.

use qalg::brickfamily::FamilySpec;
use qalg::bqa::BoundAlgebra;
use qalg::cli::{self, AnyAlgebra, Options};
use qalg::exactla::Field;
use qalg::rep::{is_brick, socle};
use serde::Serialize;
use wasm_bindgen::prelude::*;

fn parse(text: &str) -> Result<AnyAlgebra, String> {
    cli::parse_algebra(text, None).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct TensorView {
    summary: String,
    report: serde_json::Value,
    algebra: String,
}

pub fn tensor_json(a: &str, b: &str) -> Result<String, String> {
    let out = cli::tensor(&parse(a)?, &parse(b)?, &[], Options::default()).map_err(|e| e.to_string())?;
    let view = TensorView {
        summary: out.summary,
        report: serde_json::from_str(&out.report).map_err(|e| e.to_string())?,
        algebra: out.artifact.unwrap_or_default(),
    };
    Ok(serde_json::to_string(&view).unwrap())
}

#[derive(Serialize)]
struct MapView {
    arrow: String,
    rows: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct MemberView {
    parameter: String,
    vertices: Vec<String>,
    dims: Vec<usize>,
    maps: Vec<MapView>,
    socle_dims: Vec<usize>,
    brick: bool,
}

fn member_view<F: Field>(a: &BoundAlgebra<F>, b: &BoundAlgebra<F>, lambda: &str) -> Result<String, String> {
    let f = a.field();
    let spec = FamilySpec::new(a, b).map_err(|e| e.to_string())?;
    let l = f.parse(lambda.trim()).map_err(|e| e.to_string())?;
    let m = spec.member(&l).map_err(|e| e.to_string())?;
    let q = spec.tensor.quiver();
    let maps = m
        .maps()
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| MapView {
            arrow: q.arrow(i).id.clone(),
            rows: (0..x.rows()).map(|r| x.row(r).iter().map(|e| e.to_string()).collect()).collect(),
        })
        .collect();
    let view = MemberView {
        parameter: l.to_string(),
        vertices: q.vertices().to_vec(),
        dims: m.dims().to_vec(),
        maps,
        socle_dims: socle(&spec.tensor, &m).rep.dims().to_vec(),
        brick: is_brick(&spec.tensor, &m).map_err(|e| e.to_string())?,
    };
    Ok(serde_json::to_string(&view).unwrap())
}

pub fn member_json(a: &str, b: &str, lambda: &str) -> Result<String, String> {
    match (parse(a)?, parse(b)?) {
        (AnyAlgebra::Rational(x), AnyAlgebra::Rational(y)) => member_view(&x, &y, lambda),
        (AnyAlgebra::Prime(x), AnyAlgebra::Prime(y)) if x.field() == y.field() => member_view(&x, &y, lambda),
        (x, y) => Err(format!("algebras are over different fields ({} and {})", x.field(), y.field())),
    }
}

#[derive(Serialize)]
struct SttiltView {
    summary: String,
    report: serde_json::Value,
    dot: String,
}

pub fn sttilt_json(a: &str, cap: usize) -> Result<String, String> {
    let out = cli::sttilt(&parse(a)?, cap, &[], Options::default()).map_err(|e| e.to_string())?;
    let view = SttiltView {
        summary: out.summary,
        report: serde_json::from_str(&out.report).map_err(|e| e.to_string())?,
        dot: out.artifact.unwrap_or_default(),
    };
    Ok(serde_json::to_string(&view).unwrap())
}

/// Presentation and dimension check of `A ⊗ B`.
#[wasm_bindgen]
pub fn tensor(a: &str, b: &str) -> Result<String, JsValue> {
    tensor_json(a, b).map_err(|e| JsValue::from_str(&e))
}

/// The brick of the family for one parameter.
#[wasm_bindgen]
pub fn family_member(a: &str, b: &str, lambda: &str) -> Result<String, JsValue> {
    member_json(a, b, lambda).map_err(|e| JsValue::from_str(&e))
}

/// Support τ-tilting pairs with the Hasse diagram as DOT.
#[wasm_bindgen]
pub fn sttilt(a: &str, cap: usize) -> Result<String, JsValue> {
    sttilt_json(a, cap).map_err(|e| JsValue::from_str(&e))
}
