//! The verification suites: each runs its curated fixed cases first and,
//! only when those all pass, a seeded random corpus. Cases execute in a
//! work pool; reports aggregate in case order so reruns are reproducible.

use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;
use vnum_core::*;

pub const SUITE_NAMES: [&str; 9] = [
    "frobenius_formula",
    "upper_bound",
    "alpha_ceiling",
    "monotone",
    "alpha_sandwich",
    "gorenstein_eq",
    "level_ineq",
    "artinian_level_iff",
    "polarization_remark",
];

#[derive(Debug, Serialize)]
pub struct FailureRecord {
    pub case: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases_run: usize,
    pub cases_passed: usize,
    pub first_failure: Option<FailureRecord>,
    pub wall_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases_passed == self.cases_run
    }
}

#[derive(Debug)]
struct Verdict {
    case: String,
    pass: bool,
    expected: String,
    got: String,
}

impl Verdict {
    fn eq<T: PartialEq + std::fmt::Display>(case: String, expected: T, got: T) -> Verdict {
        Verdict {
            case,
            pass: expected == got,
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }

    fn claim(case: String, claim: &str, pass: bool, got: String) -> Verdict {
        Verdict {
            case,
            pass,
            expected: claim.to_string(),
            got,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteParams {
    pub seed: u64,
    pub count: usize,
    pub max_vars: usize,
    pub max_polarized_vars: usize,
}

/// One-line replayable description of an ideal.
fn describe(ideal: &MonomialIdeal) -> String {
    format!(
        "({}) in {}",
        ideal.generator_strings().join(", "),
        ideal.ring().var_names().join(" ")
    )
}

fn ideal(text: &str) -> MonomialIdeal {
    parse_ideal(text).expect("curated ideal parses")
}

/// A corpus ideal for suites without structural side conditions:
/// 2..=min(5, max_vars) variables, at most 5 generators of degree ≤ 3.
fn corpus_ideal(seed: u64, max_vars: usize) -> MonomialIdeal {
    let mut rng = SplitMix64::new(seed);
    let hi = max_vars.clamp(2, 5) as u64;
    let n = 2 + rng.below(hi - 1) as usize;
    let square_free = rng.chance(50);
    random_monomial_ideal(rng.next_u64(), n, 5, 3, square_free).expect("corpus parameters valid")
}

/// A random monomial complete intersection `(x_1^{a_1}, …, x_k^{a_k})`
/// with Σ a_i ≤ 9, possibly with extra unused ring variables.
fn random_complete_intersection(seed: u64) -> (MonomialIdeal, u32) {
    let mut rng = SplitMix64::new(seed);
    let k = 1 + rng.below(3) as usize;
    let extra = rng.below(2) as usize;
    let ring = AmbientRing::standard(k + extra);
    let mut gens = Vec::new();
    let mut expected = 0;
    for i in 0..k {
        let a = 1 + rng.below(3) as u32;
        expected += a - 1;
        gens.push(Monomial::variable(i, k + extra).pow(a));
    }
    let ci = MonomialIdeal::new(ring, gens).expect("complete intersection is valid");
    (ci, expected)
}

fn random_artinian(seed: u64, max_vars: usize) -> MonomialIdeal {
    let mut rng = SplitMix64::new(seed);
    let hi = max_vars.clamp(2, 4) as u64;
    let n = 2 + rng.below(hi - 1) as usize;
    let max_deg = 2 + rng.below(3) as u32;
    let extra = rng.below(4) as usize;
    random_artinian_ideal(rng.next_u64(), n, max_deg, extra).expect("artinian parameters valid")
}

// === Suite case logic =====================================================

/// Lower bound `v(I^[q]) ≥ q v + (q−1) height`, an equality when unmixed.
fn frobenius_formula_case(ideal: &MonomialIdeal, q: u32) -> Result<Verdict> {
    let profile = height_profile(ideal)?;
    let v = v_number(ideal)?.v;
    let vq = v_of_frobenius(ideal, q)?;
    let bound = q * v + (q - 1) * profile.height as u32;
    let case = format!("q={q} I={}", describe(ideal));
    Ok(if profile.unmixed {
        Verdict::eq(
            format!("{case} [unmixed: equality]"),
            bound,
            vq,
        )
    } else {
        Verdict::claim(
            format!("{case} [mixed: lower bound]"),
            &format!("v(I^[q]) >= {bound}"),
            vq >= bound,
            format!("v(I^[q]) = {vq}"),
        )
    })
}

/// Upper bound `v(I^[q]) ≤ q v + (q−1) bight`.
fn upper_bound_case(ideal: &MonomialIdeal, q: u32) -> Result<Verdict> {
    let profile = height_profile(ideal)?;
    let v = v_number(ideal)?.v;
    let vq = v_of_frobenius(ideal, q)?;
    let bound = q * v + (q - 1) * profile.bight as u32;
    Ok(Verdict::claim(
        format!("q={q} I={}", describe(ideal)),
        &format!("v(I^[q]) <= {bound}"),
        vq <= bound,
        format!("v(I^[q]) = {vq}"),
    ))
}

/// Ceiling identity for unmixed square-free ideals with `q > n`:
/// `⌈α_q/q⌉ = v + height`.
fn alpha_ceiling_case(ideal: &MonomialIdeal) -> Result<Verdict> {
    let q = smallest_prime_above(ideal.num_vars());
    let profile = height_profile(ideal)?;
    let v = v_number(ideal)?.v;
    let alpha = alpha_q(ideal, q)?.alpha;
    let ceiling = alpha.div_ceil(q);
    Ok(Verdict::eq(
        format!("q={q} alpha={alpha} I={}", describe(ideal)),
        v + profile.height as u32,
        ceiling,
    ))
}

/// Monotonicity along q ∈ {2,4,8}: `v(I^[q])/q` and `α_q/q` are
/// non-decreasing, and `α_q ≤ v(I^[q])` at each step.
fn monotone_case(ideal: &MonomialIdeal) -> Result<Verdict> {
    let mut vs = Vec::new();
    let mut alphas = Vec::new();
    for q in [2u32, 4, 8] {
        vs.push(v_of_frobenius(ideal, q)?);
        alphas.push(alpha_q(ideal, q)?.alpha);
    }
    // a/2 ≤ b/4 ≤ c/8 compared by cross-multiplication.
    let v_monotone = 2 * vs[1] >= 4 * vs[0] && 4 * vs[2] >= 8 * vs[1];
    let alpha_monotone = 2 * alphas[1] >= 4 * alphas[0] && 4 * alphas[2] >= 8 * alphas[1];
    let sandwich = (0..3).all(|i| alphas[i] <= vs[i]);
    Ok(Verdict::claim(
        format!("I={}", describe(ideal)),
        "v/q and alpha/q non-decreasing over q=2,4,8; alpha_q <= v(I^[q])",
        v_monotone && alpha_monotone && sandwich,
        format!("v={vs:?} alpha={alphas:?}"),
    ))
}

/// `α_q ≤ v(I^[q])` always; for square-free ideals additionally
/// `α_q ≥ v(I^[q]) − max_p v_p(I)`.
fn alpha_sandwich_case(ideal: &MonomialIdeal, q: u32) -> Result<Verdict> {
    let vq = v_of_frobenius(ideal, q)?;
    let alpha = alpha_q(ideal, q)?.alpha;
    let upper_ok = alpha <= vq;
    let (claim, pass, got) = if ideal.is_square_free() {
        let slack = v_number(ideal)?.max_local();
        (
            format!("v(I^[q]) - {slack} <= alpha_q <= v(I^[q])"),
            upper_ok && alpha + slack >= vq,
            format!("alpha={alpha} v(I^[q])={vq}"),
        )
    } else {
        (
            "alpha_q <= v(I^[q])".to_string(),
            upper_ok,
            format!("alpha={alpha} v(I^[q])={vq}"),
        )
    };
    Ok(Verdict::claim(
        format!("q={q} I={}", describe(ideal)),
        &claim,
        pass,
        got,
    ))
}

/// Gorenstein quotients have every local v-number equal to the
/// regularity; complete intersections realize `Σ(a_i − 1)`.
fn gorenstein_eq_case(
    ideal: &MonomialIdeal,
    closed_form: Option<u32>,
    max_polarized_vars: usize,
) -> Result<Verdict> {
    let hom = summary_with_cap(ideal, &FieldChoice::Rationals, max_polarized_vars)?;
    let report = v_number(ideal)?;
    let case = format!("I={}", describe(ideal));
    if !hom.gorenstein {
        return Ok(Verdict::claim(
            case,
            "case qualifies as Gorenstein",
            false,
            "gorenstein flag is false".to_string(),
        ));
    }
    let mut pass = report.v == hom.regularity && report.max_local() == hom.regularity;
    let mut got = format!(
        "v={} max_local={} reg={}",
        report.v,
        report.max_local(),
        hom.regularity
    );
    let mut claim = "v_p(I) = reg S/I for every associated prime".to_string();
    if let Some(expected) = closed_form {
        pass = pass && report.v == expected;
        claim = format!("{claim}; v = {expected}");
        got = format!("{got} expected={expected}");
    }
    Ok(Verdict::claim(case, &claim, pass, got))
}

/// Level quotients satisfy `v_p(I) ≥ reg S/I` at every associated prime.
fn level_ineq_case(ideal: &MonomialIdeal, max_polarized_vars: usize) -> Result<Verdict> {
    let hom = summary_with_cap(ideal, &FieldChoice::Rationals, max_polarized_vars)?;
    let report = v_number(ideal)?;
    let case = format!("I={}", describe(ideal));
    if !hom.level {
        return Ok(Verdict::claim(
            case,
            "case qualifies as level",
            false,
            "level flag is false".to_string(),
        ));
    }
    Ok(Verdict::claim(
        case,
        &format!("v_p(I) >= reg = {} at every associated prime", hom.regularity),
        report.v >= hom.regularity,
        format!("min local v = {}", report.v),
    ))
}

/// Artinian quotients: `v ≤ reg`, with equality exactly on level algebras.
fn artinian_level_iff_case(ideal: &MonomialIdeal, max_polarized_vars: usize) -> Result<Verdict> {
    let hom = summary_with_cap(ideal, &FieldChoice::Rationals, max_polarized_vars)?;
    let v = v_number(ideal)?.v;
    let pass = v <= hom.regularity && (v == hom.regularity) == hom.level;
    Ok(Verdict::claim(
        format!("I={}", describe(ideal)),
        "v <= reg, with v = reg iff level",
        pass,
        format!("v={} reg={} level={}", v, hom.regularity, hom.level),
    ))
}

/// The polarization route: `v_via_polarization = v(I)`, and the
/// polarized ideal itself has the same v-number.
fn polarization_remark_case(ideal: &MonomialIdeal) -> Result<Verdict> {
    let direct = v_number(ideal)?.v;
    let via = v_via_polarization(ideal, None)?;
    let polarized = ideal.polarize()?.ideal;
    let of_polarized = v_number(&polarized)?.v;
    Ok(Verdict::claim(
        format!("I={}", describe(ideal)),
        &format!("ceiling route and v(I^P) both equal v = {direct}"),
        via == direct && of_polarized == direct,
        format!("route={via} v(I^P)={of_polarized}"),
    ))
}

// === Suite wiring =========================================================

const C4: &str = "vars: x1 x2 x3 x4\nx1*x2\nx2*x3\nx3*x4\nx1*x4\n";
const TRIANGLE: &str = "vars: x y z\nx*y\ny*z\nx*z\n";
const PRIME_2_OF_3: &str = "vars: x1 x2 x3\nx1\nx2\n";
const MIXED_XXY: &str = "vars: x y\nx^2\nx*y\n";
const CI_23: &str = "vars: x y\nx^2\ny^3\n";

struct Suite {
    curated: fn(&SuiteParams) -> Result<Vec<Verdict>>,
    random: fn(&SuiteParams, usize, u64) -> Result<Option<Verdict>>,
    /// Random attempts per requested case (> 1 when cases are filtered).
    attempt_factor: usize,
}

fn by_name(name: &str) -> Result<Suite> {
    Ok(match name {
        "frobenius_formula" => Suite {
            curated: |_| {
                let whisker = edge_ideal(&Graph::star(3)?.whisker())?;
                Ok(vec![
                    frobenius_formula_case(&ideal(C4), 2)?,
                    frobenius_formula_case(&ideal(C4), 3)?,
                    frobenius_formula_case(&ideal(PRIME_2_OF_3), 4)?,
                    frobenius_formula_case(&whisker, 2)?,
                    frobenius_formula_case(&ideal(MIXED_XXY), 2)?,
                ])
            },
            random: |p, k, s| {
                frobenius_formula_case(&corpus_ideal(s, p.max_vars), [2, 3][k % 2]).map(Some)
            },
            attempt_factor: 1,
        },
        "upper_bound" => Suite {
            curated: |_| {
                Ok(vec![
                    upper_bound_case(&ideal(MIXED_XXY), 2)?,
                    upper_bound_case(&ideal(C4), 3)?,
                    upper_bound_case(&ideal("vars: x1 x2 x3\nx1*x2\nx2*x3\n"), 2)?,
                ])
            },
            random: |p, k, s| upper_bound_case(&corpus_ideal(s, p.max_vars), [2, 3][k % 2]).map(Some),
            attempt_factor: 1,
        },
        "alpha_ceiling" => Suite {
            curated: |_| {
                Ok(vec![
                    alpha_ceiling_case(&ideal(C4))?,
                    alpha_ceiling_case(&ideal(TRIANGLE))?,
                    alpha_ceiling_case(&edge_ideal(&Graph::complete(4)?)?)?,
                    alpha_ceiling_case(&edge_ideal(&Graph::cycle(5)?)?)?,
                ])
            },
            random: |p, _, s| {
                let mut rng = SplitMix64::new(s);
                let hi = p.max_vars.clamp(2, 5) as u64;
                let n = 2 + rng.below(hi - 1) as usize;
                let candidate = random_monomial_ideal(rng.next_u64(), n, 5, 3, true)?;
                if !height_profile(&candidate)?.unmixed {
                    return Ok(None);
                }
                alpha_ceiling_case(&candidate).map(Some)
            },
            attempt_factor: 5,
        },
        "monotone" => Suite {
            curated: |_| {
                Ok(vec![
                    monotone_case(&ideal(C4))?,
                    monotone_case(&ideal(PRIME_2_OF_3))?,
                    monotone_case(&ideal(MIXED_XXY))?,
                    monotone_case(&ideal(CI_23))?,
                ])
            },
            random: |p, _, s| monotone_case(&corpus_ideal(s, p.max_vars)).map(Some),
            attempt_factor: 1,
        },
        "alpha_sandwich" => Suite {
            curated: |_| {
                Ok(vec![
                    alpha_sandwich_case(&ideal(C4), 2)?,
                    alpha_sandwich_case(&ideal(TRIANGLE), 3)?,
                    alpha_sandwich_case(&ideal(PRIME_2_OF_3), 2)?,
                    alpha_sandwich_case(&ideal(MIXED_XXY), 2)?,
                ])
            },
            random: |p, k, s| {
                alpha_sandwich_case(&corpus_ideal(s, p.max_vars), [2, 3][k % 2]).map(Some)
            },
            attempt_factor: 1,
        },
        "gorenstein_eq" => Suite {
            curated: |p| {
                let cases = [
                    ("vars: x y\nx^2\ny^3\n", 3),
                    ("vars: x y\nx^2\ny^2\n", 2),
                    ("vars: x y z\nx^3\ny^3\nz^2\n", 5),
                    ("vars: x y z\nx\ny\n", 0),
                    ("vars: x y z w\nx^2\ny^3\n", 3),
                ];
                cases
                    .iter()
                    .map(|(text, expected)| {
                        gorenstein_eq_case(&ideal(text), Some(*expected), p.max_polarized_vars)
                    })
                    .collect()
            },
            random: |p, k, s| {
                if k % 4 == 3 {
                    // Random artinian quotients, kept when Gorenstein.
                    let candidate = random_artinian(s, 3);
                    let hom =
                        summary_with_cap(&candidate, &FieldChoice::Rationals, p.max_polarized_vars)?;
                    if !hom.gorenstein {
                        return Ok(None);
                    }
                    gorenstein_eq_case(&candidate, None, p.max_polarized_vars).map(Some)
                } else {
                    let (ci, expected) = random_complete_intersection(s);
                    gorenstein_eq_case(&ci, Some(expected), p.max_polarized_vars).map(Some)
                }
            },
            attempt_factor: 3,
        },
        "level_ineq" => Suite {
            curated: |p| {
                Ok(vec![
                    level_ineq_case(&edge_ideal(&level_graph_11())?, p.max_polarized_vars)?,
                    level_ineq_case(&ideal(CI_23), p.max_polarized_vars)?,
                    level_ineq_case(&ideal("vars: x y z\nx^2\ny^2\nz^2\n"), p.max_polarized_vars)?,
                ])
            },
            random: |p, k, s| {
                let candidate = match k % 3 {
                    0 => random_complete_intersection(s).0,
                    1 => random_artinian(s, p.max_vars),
                    _ => {
                        let mut rng = SplitMix64::new(s);
                        let hi = p.max_vars.clamp(2, 5) as u64;
                        let n = 2 + rng.below(hi - 1) as usize;
                        random_monomial_ideal(rng.next_u64(), n, 4, 3, true)?
                    }
                };
                let hom = summary_with_cap(&candidate, &FieldChoice::Rationals, p.max_polarized_vars)?;
                if !hom.level {
                    return Ok(None);
                }
                level_ineq_case(&candidate, p.max_polarized_vars).map(Some)
            },
            attempt_factor: 8,
        },
        "artinian_level_iff" => Suite {
            curated: |p| {
                let cases = [
                    "vars: x y\nx^2\ny^2\n",
                    "vars: x y\nx^3\nx^2*y\nx*y^2\ny^3\n",
                    "vars: x y\nx^3\nx*y\ny^3\n",
                    "vars: x y z\nx^2\ny^3\nz^2\nx*y*z\n",
                ];
                cases
                    .iter()
                    .map(|text| artinian_level_iff_case(&ideal(text), p.max_polarized_vars))
                    .collect()
            },
            random: |p, _, s| {
                artinian_level_iff_case(&random_artinian(s, p.max_vars), p.max_polarized_vars)
                    .map(Some)
            },
            attempt_factor: 1,
        },
        "polarization_remark" => Suite {
            curated: |_| {
                let whisker = edge_ideal(&Graph::star(3)?.whisker())?;
                Ok(vec![
                    polarization_remark_case(&ideal(C4))?,
                    polarization_remark_case(&ideal(CI_23))?,
                    polarization_remark_case(&ideal(PRIME_2_OF_3))?,
                    polarization_remark_case(&whisker)?,
                ])
            },
            random: |p, _, s| {
                let candidate = corpus_ideal(s, p.max_vars);
                if !height_profile(&candidate)?.unmixed {
                    return Ok(None);
                }
                polarization_remark_case(&candidate).map(Some)
            },
            attempt_factor: 3,
        },
        _ => {
            return Err(Error::domain(format!(
                "unknown suite {name:?}; known suites: {}",
                SUITE_NAMES.join(", ")
            )))
        }
    })
}

/// Run one named suite: curated cases first (failures stop the run), then
/// `count` qualifying random cases drawn from the seed.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    let start = Instant::now();
    let suite = by_name(name)?;

    let curated = (suite.curated)(params)?;
    let mut cases_run = curated.len();
    let mut cases_passed = curated.iter().filter(|v| v.pass).count();
    let mut first_failure = curated.iter().find(|v| !v.pass).map(|v| FailureRecord {
        case: format!("[curated] {}", v.case),
        expected: v.expected.clone(),
        got: v.got.clone(),
    });

    if first_failure.is_none() {
        let mut rng = SplitMix64::new(params.seed);
        let attempts = params.count.saturating_mul(suite.attempt_factor);
        let case_seeds: Vec<u64> = (0..attempts).map(|_| rng.next_u64()).collect();
        let outcomes: Vec<Option<Verdict>> = case_seeds
            .par_iter()
            .enumerate()
            .map(|(k, &s)| (suite.random)(params, k, s))
            .collect::<Result<Vec<_>>>()?;
        let verdicts: Vec<Verdict> = outcomes
            .into_iter()
            .flatten()
            .take(params.count)
            .collect();
        cases_run += verdicts.len();
        cases_passed += verdicts.iter().filter(|v| v.pass).count();
        first_failure = verdicts.iter().find(|v| !v.pass).map(|v| FailureRecord {
            case: format!("[seed {}] {}", params.seed, v.case),
            expected: v.expected.clone(),
            got: v.got.clone(),
        });
    }

    Ok(SuiteReport {
        suite: name.to_string(),
        seed: params.seed,
        cases_run,
        cases_passed,
        first_failure,
        wall_ms: start.elapsed().as_millis(),
    })
}
