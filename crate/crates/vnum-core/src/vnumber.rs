//! The v-number of a monomial ideal, its local refinements, and the
//! degree invariant of Frobenius bracket powers.
//!
//! For a proper nonzero ideal `I` and an associated prime `𝔭`, the local
//! v-number `v_𝔭(I)` is the least degree of a monomial `f` with
//! `I : f = 𝔭`, and `v(I)` is the minimum over all associated primes;
//! `v(I) = 0` exactly when `I` is prime.
//!
//! The fast path in [`local_v_number`] scans the minimal generators of
//! `I : 𝔭`. This is exact because monomial witnesses suffice: if `f` is any
//! monomial with `I : f = 𝔭`, then `f ∈ I : 𝔭`, so some minimal generator
//! `g` of `I : 𝔭` divides `f`, and `𝔭 ⊆ I : g ⊆ I : f = 𝔭` forces
//! `I : g = 𝔭` with `deg g ≤ deg f`. The brute-force oracle
//! [`brute_force_v`] revalidates this degree by degree in tests.
//!
//! For `q ≥ 2`, `alpha_q(I)` is the least degree in which the quotient
//! `(I^[q] : I) / I^[q]` is nonzero, where `I^[q]` is the bracket power
//! generated by the `q`-th powers of the generators. The same
//! smallest-generator argument computes it exactly.

use crate::decompose::irreducible_decomposition;
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::Monomial;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::ops::ControlFlow;

/// A local v-number together with a witness monomial `g` satisfying
/// `I : g = 𝔭` and `deg g = v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalV {
    pub v: u32,
    pub witness: Monomial,
}

/// The v-number of an ideal with its local refinement over `Ass(S/I)`.
#[derive(Debug, Clone)]
pub struct VNumberReport {
    pub v: u32,
    pub is_prime: bool,
    pub locals: BTreeMap<MonomialPrime, LocalV>,
}

impl VNumberReport {
    /// The prime realizing `v`, with its witness (first in canonical prime
    /// order among minimizers).
    pub fn minimizer(&self) -> (&MonomialPrime, &LocalV) {
        self.locals
            .iter()
            .min_by_key(|(_, l)| l.v)
            .expect("a report has at least one associated prime")
    }

    /// The largest local v-number.
    pub fn max_local(&self) -> u32 {
        self.locals.values().map(|l| l.v).max().unwrap_or(0)
    }
}

/// Degree invariant of the bracket power: `alpha` is the least degree of a
/// monomial lying in `(I^[q] : I) \ I^[q]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaReport {
    pub q: u32,
    pub alpha: u32,
    pub witness: Monomial,
}

fn check_proper_nonzero(ideal: &MonomialIdeal, what: &str) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::domain(format!("{what} is undefined for the zero ideal")));
    }
    if ideal.is_unit() {
        return Err(Error::domain(format!("{what} is undefined for the unit ideal")));
    }
    Ok(())
}

/// `v_𝔭(I)`: scans the minimal generators of `I : 𝔭` in canonical
/// (degree-ascending) order and returns the first one whose colon is
/// exactly `𝔭`. Errors if `𝔭` is not an associated prime of `I` — the scan
/// finding no witness is equivalent to that.
pub fn local_v_number(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<LocalV> {
    check_proper_nonzero(ideal, "the local v-number")?;
    if ideal.ring() != prime.ring() {
        return Err(Error::structural(
            "ideal and prime live in different ambient rings".to_string(),
        ));
    }
    let target = prime.as_ideal();
    let candidates = ideal.colon(&target)?;
    for g in candidates.gens() {
        if ideal.colon_monomial(g)? == target {
            return Ok(LocalV {
                v: g.degree(),
                witness: g.clone(),
            });
        }
    }
    Err(Error::domain(format!(
        "{prime} is not an associated prime of the ideal"
    )))
}

/// `v(I)` together with every local v-number and witness.
///
/// A prime input short-circuits to `v = 0` with witness `1`. Otherwise the
/// ideal is decomposed and the local computations run independently (in
/// parallel) over the associated primes.
pub fn v_number(ideal: &MonomialIdeal) -> Result<VNumberReport> {
    check_proper_nonzero(ideal, "the v-number")?;
    if ideal.is_prime() {
        let p = MonomialPrime::from_ideal(ideal).expect("is_prime implies variable-generated");
        let mut locals = BTreeMap::new();
        locals.insert(
            p,
            LocalV {
                v: 0,
                witness: Monomial::unit(ideal.num_vars()),
            },
        );
        return Ok(VNumberReport {
            v: 0,
            is_prime: true,
            locals,
        });
    }
    let dec = irreducible_decomposition(ideal)?;
    let locals: BTreeMap<MonomialPrime, LocalV> = dec
        .associated_primes
        .into_par_iter()
        .map(|p| {
            let local = local_v_number(ideal, &p)?;
            Ok((p, local))
        })
        .collect::<Result<_>>()?;
    let v = locals.values().map(|l| l.v).min().expect("Ass is nonempty");
    Ok(VNumberReport {
        v,
        is_prime: false,
        locals,
    })
}

/// `alpha_q(I)` for `q ≥ 2`: least degree in `(I^[q] : I) \ I^[q]`,
/// realized by a minimal generator of the colon ideal.
pub fn alpha_q(ideal: &MonomialIdeal, q: u32) -> Result<AlphaReport> {
    check_proper_nonzero(ideal, "alpha_q")?;
    if q < 2 {
        return Err(Error::domain(
            "alpha_q requires q >= 2 (at q = 1 the defining quotient is zero)".to_string(),
        ));
    }
    let bracket = ideal.frobenius_power(q)?;
    let colon = bracket.colon(ideal)?;
    for g in colon.gens() {
        if !bracket.contains(g)? {
            return Ok(AlphaReport {
                q,
                alpha: g.degree(),
                witness: g.clone(),
            });
        }
    }
    // Unreachable for proper nonzero ideals: among the products of
    // generators with multiplicities ≤ q−1 that avoid I^[q] (the monomial 1
    // is one), a divisibility-maximal choice multiplies into I^[q] by every
    // generator, so (I^[q] : I) always exceeds I^[q].
    Err(Error::domain(
        "the bracket-power colon collapsed; the input was not a proper nonzero ideal".to_string(),
    ))
}

/// `v(I^[q])` for `q ≥ 2`.
pub fn v_of_frobenius(ideal: &MonomialIdeal, q: u32) -> Result<u32> {
    check_proper_nonzero(ideal, "v of a bracket power")?;
    if q < 2 {
        return Err(Error::domain("v_of_frobenius requires q >= 2".to_string()));
    }
    Ok(v_number(&ideal.frobenius_power(q)?)?.v)
}

/// Smallest prime strictly greater than `n`.
pub fn smallest_prime_above(n: usize) -> u32 {
    let mut candidate = n as u32 + 1;
    while !crate::field::is_prime(candidate as u64) {
        candidate += 1;
    }
    candidate
}

/// Compute `v(I)` of an unmixed ideal along the polarization route, without
/// ever decomposing `I` itself: polarize, pick the smallest prime
/// `q > dim S'` where `S'` is the polarized ambient ring, and return
/// `⌈alpha_q(I') / q⌉ − height(I)`.
///
/// When `known_height` is `None` the height is read off the decomposition
/// of the polarized ideal (polarization preserves heights and unmixedness),
/// and a mixed input is rejected. Passing `Some(h)` skips that
/// decomposition entirely; the caller is then responsible for unmixedness.
pub fn v_via_polarization(ideal: &MonomialIdeal, known_height: Option<usize>) -> Result<u32> {
    check_proper_nonzero(ideal, "the polarization route")?;
    let polarization = ideal.polarize()?;
    let height = match known_height {
        Some(h) => h,
        None => {
            let dec = irreducible_decomposition(&polarization.ideal)?;
            if !dec.is_unmixed() {
                return Err(Error::domain(
                    "the polarization route requires an unmixed ideal".to_string(),
                ));
            }
            dec.height
        }
    };
    let dim = polarization.ideal.num_vars();
    let q = smallest_prime_above(dim);
    let alpha = alpha_q(&polarization.ideal, q)?.alpha;
    let ceil = (alpha as u64).div_ceil(q as u64);
    (ceil as i64 - height as i64).try_into().map_err(|_| {
        Error::domain(
            "⌈alpha_q/q⌉ fell below the height; the input was not unmixed".to_string(),
        )
    })
}

/// Call `f` on every exponent vector of total degree `d` in `n` variables,
/// in canonical order, stopping early if `f` breaks.
fn for_each_monomial_of_degree<F>(n: usize, d: u32, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[u32]) -> ControlFlow<()>,
{
    fn rec<F>(buf: &mut Vec<u32>, pos: usize, left: u32, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        if pos + 1 == buf.len() {
            buf[pos] = left;
            return f(buf);
        }
        // Canonical order lists the larger leading exponent first.
        for e in (0..=left).rev() {
            buf[pos] = e;
            rec(buf, pos + 1, left - e, f)?;
        }
        ControlFlow::Continue(())
    }
    if n == 0 {
        return ControlFlow::Continue(());
    }
    let mut buf = vec![0u32; n];
    rec(&mut buf, 0, d, f)
}

/// Default search ceiling for [`brute_force_v`]: the sum of the generator
/// degrees plus the support size of the prime. Every minimal generator of
/// `I : 𝔭` divides `lcm(gens)`, so the fast-path witness degree never
/// exceeds this.
pub fn default_v_search_cap(ideal: &MonomialIdeal, prime: &MonomialPrime) -> u32 {
    ideal.generator_degree_sum() + prime.height() as u32
}

/// Independent degree-by-degree oracle for the local v-number: enumerate
/// all monomials of degree `0, 1, …, max_degree` and return the first
/// degree at which some `f` has `I : f = 𝔭`, or `None` if the cap is hit.
pub fn brute_force_v(
    ideal: &MonomialIdeal,
    prime: &MonomialPrime,
    max_degree: u32,
) -> Result<Option<u32>> {
    check_proper_nonzero(ideal, "the brute-force v oracle")?;
    if ideal.ring() != prime.ring() {
        return Err(Error::structural(
            "ideal and prime live in different ambient rings".to_string(),
        ));
    }
    let target = prime.as_ideal();
    let n = ideal.num_vars();
    for d in 0..=max_degree {
        let mut found = false;
        let _ = for_each_monomial_of_degree(n, d, &mut |exps| {
            let f = Monomial::new(exps.to_vec());
            if ideal
                .colon_monomial(&f)
                .expect("sizes match by construction")
                == target
            {
                found = true;
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if found {
            return Ok(Some(d));
        }
    }
    Ok(None)
}
