//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function returns a JSON string; the `*_json` twins hold the
//! logic and are what the native tests exercise.

use gamma_euler::strata::{stratify_o2_rep, stratify_s1_rep, stratify_s1_shell, Stratification};
use gamma_euler::syntax::parse_int_list;
use gamma_euler::{
    chi_gamma_o2, chi_gamma_s1_rep, chi_gamma_symplectic_quotient, chi_orbit_hom, evaluate_gamma_euler, format_gamma,
    parse_gamma, Context, Error, EulerValue, GammaGroup, IsotropyClass, O2Representation, WeightVector,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn render(value: &EulerValue, gamma: &GammaGroup, s: &Stratification) -> String {
    json!({
        "gamma": format_gamma(gamma),
        "value": value,
        "strata": s.to_records(),
    })
    .to_string()
}

fn checked_sum(s: &Stratification, gamma: &GammaGroup, ctx: &Context, value: &EulerValue) -> Result<(), String> {
    let sum = evaluate_gamma_euler(s, gamma, ctx).map_err(|e| e.to_string())?;
    if &sum != value {
        return Err(format!("stratum sum {sum} disagrees with formula {value}"));
    }
    Ok(())
}

/// Circle representation (`mode = "rep"`) or its shell (`mode = "shell"`).
pub fn circle_json(weights: &str, gamma: &str, mode: &str) -> Result<String, String> {
    let w: Vec<i64> = parse_int_list(weights).map_err(|e| e.to_string())?;
    let v = WeightVector::new(w);
    let gamma = parse_gamma(gamma).map_err(|e| e.to_string())?;
    let ctx = Context::default();
    let (value, s) = match mode {
        "rep" => (chi_gamma_s1_rep(&v, &gamma, &ctx), stratify_s1_rep(&v)),
        "shell" => (
            chi_gamma_symplectic_quotient(&IsotropyClass::CircleSO2, &gamma, &ctx),
            stratify_s1_shell(&v),
        ),
        other => return Err(format!("unknown mode {other:?}")),
    };
    let value = value.map_err(|e| e.to_string())?;
    let s = s.map_err(|e| e.to_string())?;
    checked_sum(&s, &gamma, &ctx, &value)?;
    Ok(render(&value, &gamma, &s))
}

pub fn o2_json(alphas: &str, det: u32, gamma: &str, real: bool) -> Result<String, String> {
    let a: Vec<u64> = parse_int_list(alphas).map_err(|e| e.to_string())?;
    let rep = O2Representation::new(a, det, real).map_err(|e| e.to_string())?;
    let gamma = parse_gamma(gamma).map_err(|e| e.to_string())?;
    let ctx = Context::default();
    let value = chi_gamma_o2(&rep, &gamma, &ctx).map_err(|e| e.to_string())?;
    let s = stratify_o2_rep(&rep).map_err(|e| e.to_string())?;
    checked_sum(&s, &gamma, &ctx, &value)?;
    Ok(render(&value, &gamma, &s))
}

pub fn hom_orbits_json(target: &str, gamma: &str) -> Result<String, String> {
    let h: IsotropyClass = target.parse().map_err(|e: Error| e.to_string())?;
    let gamma = parse_gamma(gamma).map_err(|e| e.to_string())?;
    let value = chi_orbit_hom(&gamma, &h, &Context::default()).map_err(|e| e.to_string())?;
    Ok(json!({ "gamma": format_gamma(&gamma), "target": h.tag(), "value": value }).to_string())
}

#[wasm_bindgen]
pub fn circle(weights: &str, gamma: &str, mode: &str) -> Result<String, JsValue> {
    circle_json(weights, gamma, mode).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn o2(alphas: &str, det: u32, gamma: &str, real: bool) -> Result<String, JsValue> {
    o2_json(alphas, det, gamma, real).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = homOrbits)]
pub fn hom_orbits(target: &str, gamma: &str) -> Result<String, JsValue> {
    hom_orbits_json(target, gamma).map_err(|e| JsValue::from_str(&e))
}
