//! Hilbert series of monomial quotients.
//!
//! The series of `S/I` is computed as a rational function
//! `N(t) / (1 − t)^d` where `d` is the Krull dimension. The numerator is
//! found by the standard pivot recursion
//!
//! ```text
//! N(I) = N(I + (x)) + t · N(I : x)
//! ```
//!
//! which reflects the exact sequence `0 → S/(I:x)(−1) → S/I → S/(I+(x)) → 0`,
//! with memoization on canonical generator lists. Degree-one generators are
//! peeled off first as exact `(1 − t)` factors, which also guarantees the
//! recursion always makes progress. The raw numerator over `(1 − t)^n` is
//! then divided exactly by `(1 − t)^height`.

use crate::decompose::irreducible_decomposition;
use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;
use serde_json::json;
use std::collections::HashMap;
use std::fmt;

/// The Hilbert series of a monomial quotient, reduced so that the pole
/// order equals the Krull dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
    pole_order: usize,
}

impl HilbertSeries {
    /// Numerator coefficients, constant term first; the leading
    /// coefficient is nonzero.
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// Order of the pole at `t = 1`; equals the Krull dimension of `S/I`.
    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    pub fn numerator_degree(&self) -> usize {
        self.numerator.len() - 1
    }

    /// Value of the numerator at `t = 1`: the multiplicity of `S/I`.
    /// Always positive after the pole reduction.
    pub fn multiplicity(&self) -> i64 {
        self.numerator.iter().sum()
    }

    /// Power-series coefficients of the full series up to degree `limit`,
    /// i.e. the Hilbert function of `S/I` in degrees `0..=limit`.
    pub fn coefficients(&self, limit: usize) -> Vec<i64> {
        let mut coeffs = vec![0i64; limit + 1];
        for (k, &c) in self.numerator.iter().enumerate() {
            if k <= limit {
                coeffs[k] = c;
            }
        }
        for _ in 0..self.pole_order {
            for k in 1..=limit {
                coeffs[k] += coeffs[k - 1];
            }
        }
        coeffs
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "numerator": self.numerator,
            "pole_order": self.pole_order,
            "multiplicity": self.multiplicity(),
        })
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = format_poly(&self.numerator);
        if self.pole_order == 0 {
            return write!(f, "{poly}");
        }
        if poly.contains(' ') {
            write!(f, "({poly}) / (1 - t)^{}", self.pole_order)
        } else {
            write!(f, "{poly} / (1 - t)^{}", self.pole_order)
        }
    }
}

fn format_poly(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (e, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else if c < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let show_coeff = mag != 1 || e == 0;
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        if e > 0 {
            if show_coeff {
                out.push('*');
            }
            out.push('t');
            if e > 1 {
                out.push_str(&format!("^{e}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Hilbert series of `S/I` for a proper ideal.
pub fn hilbert_series(ideal: &MonomialIdeal) -> Result<HilbertSeries> {
    if ideal.is_unit() {
        return Err(Error::domain("the unit ideal has no Hilbert series"));
    }
    let n = ideal.num_vars();
    let height = if ideal.is_zero() {
        0
    } else {
        irreducible_decomposition(ideal)?.height
    };
    let mut memo = HashMap::new();
    let mut numerator = raw_numerator(ideal.gens().to_vec(), &mut memo);
    // The raw numerator vanishes at t = 1 to order exactly height(I), so
    // each of these divisions is exact.
    for _ in 0..height {
        numerator = divide_by_one_minus_t(&numerator)
            .expect("Hilbert numerator must vanish at t = 1 to order height");
    }
    let series = HilbertSeries {
        numerator,
        pole_order: n - height,
    };
    debug_assert!(series.multiplicity() > 0);
    Ok(series)
}

/// Numerator of the Hilbert series over `(1 − t)^n`. The generator list
/// must be canonical-minimal, which the recursion preserves.
fn raw_numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, Vec<i64>>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let linear_count = gens.iter().filter(|g| g.degree() == 1).count();
    let result = if linear_count > 0 {
        // Variables among the generators contribute exact (1 − t) factors;
        // minimality keeps the remaining generators untouched.
        let rest: Vec<Monomial> = gens
            .iter()
            .filter(|g| g.degree() > 1)
            .cloned()
            .collect();
        let mut poly = raw_numerator(rest, memo);
        for _ in 0..linear_count {
            poly = multiply_by_one_minus_t_pow(&poly, 1);
        }
        poly
    } else {
        let n = gens[0].num_vars();
        // Pivot: among the variables of the first generator, the one
        // dividing the most generators, so both branches shrink fast.
        let pivot_var = gens[0]
            .support()
            .into_iter()
            .max_by_key(|&i| {
                let count = gens.iter().filter(|g| g.exponent(i) > 0).count();
                (count, std::cmp::Reverse(i))
            })
            .expect("generators of a proper ideal are non-constant");
        let pivot = Monomial::variable(pivot_var, n);
        let mut plus = gens.clone();
        plus.push(pivot.clone());
        let plus = minimalize(plus);
        let colon = minimalize(
            gens.iter()
                .map(|g| g.colon_by(&pivot).expect("same ambient ring"))
                .collect(),
        );
        let left = raw_numerator(plus, memo);
        let right = raw_numerator(colon, memo);
        add_shifted(&left, &right, 1)
    };
    memo.insert(gens, result.clone());
    result
}

/// `a(t) + t^shift · b(t)`, trailing zeros trimmed.
fn add_shifted(a: &[i64], b: &[i64], shift: usize) -> Vec<i64> {
    let len = a.len().max(b.len() + shift);
    let mut out = vec![0i64; len];
    out[..a.len()].copy_from_slice(a);
    for (k, &c) in b.iter().enumerate() {
        out[k + shift] += c;
    }
    trim(out)
}

/// `p(t) · (1 − t^d)`.
fn multiply_by_one_minus_t_pow(p: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; p.len() + d];
    out[..p.len()].copy_from_slice(p);
    for (k, &c) in p.iter().enumerate() {
        out[k + d] -= c;
    }
    trim(out)
}

/// Exact division by `(1 − t)`; `None` when `p(1) ≠ 0`.
fn divide_by_one_minus_t(p: &[i64]) -> Option<Vec<i64>> {
    if p.iter().sum::<i64>() != 0 {
        return None;
    }
    let mut out = Vec::with_capacity(p.len().saturating_sub(1));
    let mut running = 0i64;
    for &c in &p[..p.len() - 1] {
        running += c;
        out.push(running);
    }
    Some(trim(out))
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
    p
}
