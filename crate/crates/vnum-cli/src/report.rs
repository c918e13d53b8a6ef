//! Input loading and report assembly for the file-based commands.

use serde_json::{json, Value};
use std::fmt::Write as _;
use vnum_core::*;

/// A parsed input file: either an ideal listing or a graph whose edge
/// ideal is taken.
pub struct Input {
    pub format: &'static str,
    pub ideal: MonomialIdeal,
}

/// Interpret `text` as a graph file when its first meaningful line is a
/// `graph:` header, and as an ideal listing otherwise.
pub fn load_input(text: &str) -> Result<Input> {
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with("graph:") {
            let graph = parse_graph(text)?;
            return Ok(Input {
                format: "graph",
                ideal: edge_ideal(&graph)?,
            });
        }
        break;
    }
    Ok(Input {
        format: "ideal",
        ideal: parse_ideal(text)?,
    })
}

fn prime_json(prime: &MonomialPrime) -> Value {
    json!(prime.variable_names())
}

fn input_json(file: &str, input: &Input) -> Value {
    let ideal = &input.ideal;
    json!({
        "file": file,
        "format": input.format,
        "ring": ideal.ring().var_names(),
        "generators": ideal.generator_strings(),
    })
}

fn v_number_json(ideal: &MonomialIdeal, report: &VNumberReport) -> Value {
    let ring = ideal.ring();
    let locals: Vec<Value> = report
        .locals
        .iter()
        .map(|(prime, local)| {
            json!({
                "prime": prime_json(prime),
                "height": prime.height(),
                "v": local.v,
                "witness": local.witness.display(ring).to_string(),
            })
        })
        .collect();
    json!({
        "v": report.v,
        "is_prime": report.is_prime,
        "locals": locals,
    })
}

/// The full invariant report for `vnum invariants`.
pub fn invariants_json(
    file: &str,
    input: &Input,
    field: &FieldChoice,
    max_polarized_vars: usize,
) -> Result<Value> {
    let ideal = &input.ideal;
    let decomposition = irreducible_decomposition(ideal)?;
    let v_report = v_number(ideal)?;
    let hom = summary_with_cap(ideal, field, max_polarized_vars)?;
    let primes: Vec<Value> = decomposition
        .associated_primes
        .iter()
        .map(prime_json)
        .collect();
    Ok(json!({
        "input": input_json(file, input),
        "field": field.label(),
        "v_number": v_number_json(ideal, &v_report),
        "associated_primes": primes,
        "height": decomposition.height,
        "bight": decomposition.bight,
        "unmixed": decomposition.is_unmixed(),
        "summary": hom.to_json(),
        "hilbert_display": hom.hilbert.to_string(),
    }))
}

/// Human-readable rendering of the invariant report.
pub fn invariants_text(
    file: &str,
    input: &Input,
    field: &FieldChoice,
    max_polarized_vars: usize,
) -> Result<String> {
    let ideal = &input.ideal;
    let decomposition = irreducible_decomposition(ideal)?;
    let v_report = v_number(ideal)?;
    let hom = summary_with_cap(ideal, field, max_polarized_vars)?;
    let ring = ideal.ring();

    let mut out = String::new();
    let _ = writeln!(out, "input: {file} ({})", input.format);
    let _ = writeln!(
        out,
        "ring: {} ({} variables), field {field}",
        ring.var_names().join(" "),
        ring.num_vars()
    );
    let _ = writeln!(
        out,
        "generators ({}): {}",
        ideal.gens().len(),
        ideal.generator_strings().join(", ")
    );
    let _ = writeln!(out, "v-number: {}", v_report.v);
    for (prime, local) in &v_report.locals {
        let _ = writeln!(
            out,
            "  at ({}): v = {}, witness {}",
            prime.variable_names().join(", "),
            local.v,
            local.witness.display(ring)
        );
    }
    let _ = writeln!(
        out,
        "associated primes: {}; height {}, bight {}, {}",
        decomposition.associated_primes.len(),
        decomposition.height,
        decomposition.bight,
        if decomposition.is_unmixed() {
            "unmixed"
        } else {
            "mixed"
        }
    );
    let _ = writeln!(
        out,
        "regularity {}, projective dimension {}, depth {}, Krull dim {}",
        hom.regularity, hom.proj_dim, hom.depth, hom.krull_dim
    );
    let cm_type = hom
        .cm_type
        .map_or_else(|| "-".to_string(), |t| t.to_string());
    let a_inv = hom
        .a_invariant
        .map_or_else(|| "-".to_string(), |a| a.to_string());
    let _ = writeln!(
        out,
        "cohen_macaulay {}, type {}, gorenstein {}, level {}, a-invariant {}",
        hom.cohen_macaulay, cm_type, hom.gorenstein, hom.level, a_inv
    );
    let _ = writeln!(out, "hilbert series: {}", hom.hilbert);
    let _ = writeln!(out, "betti table:");
    let _ = writeln!(out, "{}", hom.betti);
    Ok(out)
}

/// The bracket-power report for `vnum frobenius`.
pub fn frobenius_json(file: &str, input: &Input, q: u32) -> Result<Value> {
    let ideal = &input.ideal;
    let bracket = ideal.frobenius_power(q)?;
    let profile = height_profile(ideal)?;
    let v_base = v_number(ideal)?.v;
    let v_bracket = v_of_frobenius(ideal, q)?;
    let alpha = alpha_q(ideal, q)?;

    let lower = u64::from(q) * u64::from(v_base) + u64::from(q - 1) * profile.height as u64;
    let upper = u64::from(q) * u64::from(v_base) + u64::from(q - 1) * profile.bight as u64;
    Ok(json!({
        "input": input_json(file, input),
        "q": q,
        "bracket_generators": bracket.gens().len(),
        "v": v_base,
        "v_of_bracket": v_bracket,
        "alpha_q": alpha.alpha,
        "alpha_witness": alpha.witness.display(ideal.ring()).to_string(),
        "height": profile.height,
        "bight": profile.bight,
        "unmixed": profile.unmixed,
        "lower_bound": lower,
        "lower_bound_holds": u64::from(v_bracket) >= lower,
        "lower_bound_equality": u64::from(v_bracket) == lower,
        "upper_bound": upper,
        "upper_bound_holds": u64::from(v_bracket) <= upper,
        "alpha_le_v_of_bracket": alpha.alpha <= v_bracket,
    }))
}
