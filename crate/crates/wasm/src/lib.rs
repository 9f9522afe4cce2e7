//! Browser bindings for the demo page. Each export takes plain strings or
//! numbers and returns a JSON string; errors come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

use djh_core::circuit;
use djh_core::cyclotomic;
use djh_core::formats::{self, FunctionSpec, ImageValue};
use djh_core::qft;
use djh_core::representation::{builtin_irreps, EntryIndex};
use djh_core::{IntPolynomial, Result, DEFAULT_VERDICT_TOL};

fn respond<T: Serialize>(r: Result<T>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).unwrap_or_else(|e| json!({ "error": e.to_string() }).to_string()),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn parse_csv(text: &str) -> std::result::Result<Vec<i64>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|e| format!("{s:?}: {e}")))
        .collect()
}

/// `Φ_n`, the exact test `Φ_n | P` and, when it holds, the non-negative
/// decomposition of `P`. Also returns the positions of the terms of `P` on
/// the unit circle so the page can draw them.
pub fn cyclotomic_analysis(coeffs_csv: &str, n: u64) -> String {
    let coeffs = match parse_csv(coeffs_csv) {
        Ok(c) => c,
        Err(e) => return json!({ "error": e }).to_string(),
    };
    respond((|| {
        let p = IntPolynomial::from_i64s(&coeffs);
        let phi = cyclotomic::cyclotomic_poly(n)?;
        let balanced = cyclotomic::eval_at_root_of_unity_is_zero(&p, n)?;
        let decomposition = match cyclotomic::dephi_decompose(&p, n) {
            Ok(d) => json!(d),
            Err(e) => json!({ "error": e.to_string() }),
        };
        let points: Vec<_> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(t, &c)| json!({ "exponent": t % n as usize, "count": c }))
            .collect();
        Ok(json!({
            "n": n,
            "phi": phi,
            "polynomial": p,
            "balanced": balanced,
            "decomposition": decomposition,
            "points": points,
        }))
    })())
}

/// Runs the circuit for `f` given by its image (indices or labels) into
/// the group described by `group_json`.
pub fn simulate_circuit(group_json: &str, image_csv: &str, k: usize, i: usize, j: usize) -> String {
    respond((|| {
        let spec = formats::parse_group_spec(group_json)?;
        let image = image_csv
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| match s.parse::<usize>() {
                Ok(v) => ImageValue::Index(v),
                Err(_) => ImageValue::Label(s.to_string()),
            })
            .collect();
        let fspec = FunctionSpec {
            id: None,
            codomain: Some(spec),
            domain_size: None,
            image,
        };
        let f = fspec.build()?;
        let set = builtin_irreps(f.codomain())?;
        let mut report = circuit::run_djh(&f, &set, EntryIndex::from_one_based(i, j, k)?, DEFAULT_VERDICT_TOL)?;
        report.final_state = None;
        let classification = formats::classify_all(&f, &set, djh_core::DEFAULT_TOL)?;
        Ok(json!({ "circuit": report, "classification": classification }))
    })())
}

/// The Fourier matrix of a group as moduli and phases for a heatmap.
pub fn fourier_heatmap(group_json: &str) -> String {
    respond((|| {
        let g = formats::parse_group_spec(group_json)?.build()?;
        let set = builtin_irreps(&g)?;
        let f = qft::fourier_matrix(&set);
        let cells: Vec<Vec<[f64; 2]>> = f
            .entries()
            .row_iter()
            .map(|row| row.iter().map(|z| [z.norm(), z.arg()]).collect())
            .collect();
        Ok(json!({
            "order": g.order(),
            "labels": g.labels(),
            "dims": set.dims(),
            "unitarity": qft::verify_unitary(&f).max_deviation(),
            "cells": cells,
        }))
    })())
}

#[wasm_bindgen(js_name = cyclotomicAnalysis)]
pub fn cyclotomic_analysis_js(coeffs_csv: &str, n: u32) -> String {
    cyclotomic_analysis(coeffs_csv, n as u64)
}

#[wasm_bindgen(js_name = simulateCircuit)]
pub fn simulate_circuit_js(group_json: &str, image_csv: &str, k: u32, i: u32, j: u32) -> String {
    simulate_circuit(group_json, image_csv, k as usize, i as usize, j as usize)
}

#[wasm_bindgen(js_name = fourierHeatmap)]
pub fn fourier_heatmap_js(group_json: &str) -> String {
    fourier_heatmap(group_json)
}
