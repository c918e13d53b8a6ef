//! Counterexample scan: search random unmixed monomial ideals whose last
//! Betti column sits in a single degree (no Cohen–Macaulay assumption) for
//! a violation of `v(I) ≥ reg S/I`. A violator is a research finding, not
//! an error: it is reported verbatim and the exit status stays zero.

use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;
use vnum_core::*;

#[derive(Debug, Serialize)]
pub struct ScanCandidate {
    pub case_index: usize,
    pub ring: Vec<String>,
    pub generators: Vec<String>,
    pub v: u32,
    pub regularity: u32,
    pub last_column_degree: u32,
    pub unmixed_height: usize,
}

#[derive(Debug, Serialize)]
pub struct ScanReport {
    pub suite: String,
    pub seed: u64,
    pub attempts: usize,
    pub cases_run: usize,
    pub cases_passed: usize,
    pub violations: Vec<ScanCandidate>,
    pub wall_ms: u128,
}

fn candidate(
    case_index: usize,
    seed: u64,
    max_polarized_vars: usize,
) -> Result<Option<(ScanCandidate, bool)>> {
    let mut rng = SplitMix64::new(seed);
    let n = 2 + rng.below(4) as usize; // 2..=5 variables
    let square_free = rng.chance(50);
    let ideal = random_monomial_ideal(rng.next_u64(), n, 5, 3, square_free)?;

    let profile = height_profile(&ideal)?;
    if !profile.unmixed {
        return Ok(None);
    }
    let betti = betti_table_with_cap(&ideal, &FieldChoice::Rationals, max_polarized_vars)?;
    let last = betti.last_column();
    if last.len() != 1 {
        return Ok(None);
    }
    let v = v_number(&ideal)?.v;
    let regularity = betti.regularity();
    let record = ScanCandidate {
        case_index,
        ring: ideal.ring().var_names().to_vec(),
        generators: ideal.generator_strings(),
        v,
        regularity,
        last_column_degree: last[0].0,
        unmixed_height: profile.height,
    };
    Ok(Some((record, v >= regularity)))
}

/// Run the scan over `count` seeded draws.
pub fn run_scan(seed: u64, count: usize, max_polarized_vars: usize) -> Result<ScanReport> {
    let start = Instant::now();
    let mut rng = SplitMix64::new(seed);
    let case_seeds: Vec<u64> = (0..count).map(|_| rng.next_u64()).collect();
    let outcomes: Vec<Option<(ScanCandidate, bool)>> = case_seeds
        .par_iter()
        .enumerate()
        .map(|(k, &s)| candidate(k, s, max_polarized_vars))
        .collect::<Result<Vec<_>>>()?;

    let mut cases_run = 0;
    let mut cases_passed = 0;
    let mut violations = Vec::new();
    for outcome in outcomes.into_iter().flatten() {
        cases_run += 1;
        if outcome.1 {
            cases_passed += 1;
        } else {
            violations.push(outcome.0);
        }
    }
    Ok(ScanReport {
        suite: "scan_q52".to_string(),
        seed,
        attempts: count,
        cases_run,
        cases_passed,
        violations,
        wall_ms: start.elapsed().as_millis(),
    })
}
