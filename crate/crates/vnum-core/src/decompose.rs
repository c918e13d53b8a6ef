//! Irreducible decomposition of monomial ideals, associated primes, and
//! the height profile.
//!
//! Every proper nonzero monomial ideal is a finite irredundant intersection
//! of irreducible ideals, each generated by pure variable powers. The
//! decomposition here uses the classical splitting recursion: while some
//! generator `m` mixes at least two variables, write `m = u·v` with
//! `u = x_i^{m_i}` the full power of the first variable of `m`; then
//! `(J, u·v) = (J, u) ∩ (J, v)` because `u` and `v` are coprime. Once every
//! generator is a pure power the ideal is irreducible. Intermediate results
//! are memoized on canonical generator lists, and the final list is made
//! irredundant: an irreducible ideal contains an intersection only if it
//! contains one of the factors, so pairwise containment suffices.

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::Monomial;
use crate::ring::AmbientRing;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// An irreducible monomial ideal `(x_{i_1}^{a_1}, …, x_{i_k}^{a_k})`,
/// stored as its sorted list of (variable, exponent) pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    ring: AmbientRing,
    pure_powers: Vec<(usize, u32)>,
}

impl IrreducibleComponent {
    fn new(ring: AmbientRing, mut pure_powers: Vec<(usize, u32)>) -> Self {
        pure_powers.sort_unstable();
        IrreducibleComponent { ring, pure_powers }
    }

    /// Sorted (variable index, exponent) pairs.
    pub fn pure_powers(&self) -> &[(usize, u32)] {
        &self.pure_powers
    }

    pub fn ring(&self) -> &AmbientRing {
        &self.ring
    }

    pub fn height(&self) -> usize {
        self.pure_powers.len()
    }

    /// The radical: the prime generated by the same variables.
    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::new(self.ring.clone(), self.pure_powers.iter().map(|&(i, _)| i))
            .expect("components have nonempty support")
    }

    pub fn as_ideal(&self) -> MonomialIdeal {
        let n = self.ring.num_vars();
        MonomialIdeal::new(
            self.ring.clone(),
            self.pure_powers
                .iter()
                .map(|&(i, a)| {
                    let mut e = vec![0u32; n];
                    e[i] = a;
                    Monomial::new(e)
                })
                .collect(),
        )
        .expect("component exponents are valid")
    }

    /// Ideal containment `other ⊆ self`, decided on pure powers: every
    /// generator `x_i^{a}` of `other` lies in `self` exactly when `self`
    /// has `x_i^{b}` with `b ≤ a`.
    pub fn contains_component(&self, other: &IrreducibleComponent) -> bool {
        other.pure_powers.iter().all(|&(i, a)| {
            self.pure_powers
                .binary_search_by_key(&i, |&(j, _)| j)
                .map(|pos| self.pure_powers[pos].1 <= a)
                .unwrap_or(false)
        })
    }
}

impl PartialOrd for IrreducibleComponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IrreducibleComponent {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.pure_powers.len(), &self.pure_powers)
            .cmp(&(other.pure_powers.len(), &other.pure_powers))
            .then_with(|| self.ring.var_names().cmp(other.ring.var_names()))
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_ideal())
    }
}

/// The full decomposition of a proper nonzero monomial ideal.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// Irredundant irreducible components, canonically ordered.
    pub components: Vec<IrreducibleComponent>,
    /// Distinct radicals of the components, sorted: exactly `Ass(S/I)`.
    pub associated_primes: Vec<MonomialPrime>,
    /// Minimum height of an associated prime.
    pub height: usize,
    /// Maximum height of an associated prime (the big height).
    pub bight: usize,
}

impl Decomposition {
    pub fn is_unmixed(&self) -> bool {
        self.height == self.bight
    }
}

/// Height, big height, unmixedness, and the Krull dimension of the
/// quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeightProfile {
    pub height: usize,
    pub bight: usize,
    pub unmixed: bool,
    pub krull_dim: usize,
}

fn check_decomposable(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::domain("cannot decompose the zero ideal"));
    }
    if ideal.is_unit() {
        return Err(Error::domain("cannot decompose the unit ideal"));
    }
    Ok(())
}

/// Components in raw form: sorted `(variable, exponent)` pairs each.
type RawComponents = Vec<Vec<(usize, u32)>>;

/// Irredundant irreducible decomposition of a proper nonzero monomial
/// ideal. The intersection of the returned components equals the input,
/// and no component contains the intersection of the others.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    check_decomposable(ideal)?;
    let mut memo: HashMap<Vec<Monomial>, RawComponents> = HashMap::new();
    let raw = decompose_rec(ideal, &mut memo);

    // Deduplicate, then drop every component that contains another one.
    let mut components: Vec<IrreducibleComponent> = raw
        .into_iter()
        .map(|pp| IrreducibleComponent::new(ideal.ring().clone(), pp))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let redundant: Vec<bool> = components
        .iter()
        .map(|c| {
            components
                .iter()
                .any(|other| other != c && c.contains_component(other))
        })
        .collect();
    let mut keep = redundant.iter().map(|r| !r);
    components.retain(|_| keep.next().unwrap());

    let associated_primes: Vec<MonomialPrime> = components
        .iter()
        .map(IrreducibleComponent::radical)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let height = associated_primes.iter().map(MonomialPrime::height).min()
        .expect("a proper nonzero ideal has at least one component");
    let bight = associated_primes.iter().map(MonomialPrime::height).max().unwrap();

    let dec = Decomposition {
        components,
        associated_primes,
        height,
        bight,
    };
    debug_assert!(reconstructs(ideal, &dec), "decomposition must intersect back to the input");
    Ok(dec)
}

/// Does the intersection of the components equal the ideal?
fn reconstructs(ideal: &MonomialIdeal, dec: &Decomposition) -> bool {
    let mut acc = MonomialIdeal::unit(ideal.ring().clone());
    for c in &dec.components {
        acc = acc
            .intersect(&c.as_ideal())
            .expect("components share the ideal's ring");
    }
    acc == *ideal
}

fn decompose_rec(
    ideal: &MonomialIdeal,
    memo: &mut HashMap<Vec<Monomial>, RawComponents>,
) -> RawComponents {
    if let Some(hit) = memo.get(ideal.gens()) {
        return hit.clone();
    }
    let result = match ideal.gens().iter().find(|g| !g.is_pure_power()) {
        None => {
            // Every generator is a pure power: the ideal is irreducible.
            vec![ideal
                .gens()
                .iter()
                .map(|g| {
                    let i = g.support()[0];
                    (i, g.exponent(i))
                })
                .collect()]
        }
        Some(m) => {
            let i = m.support()[0];
            let n = m.num_vars();
            let mut u_exp = vec![0u32; n];
            u_exp[i] = m.exponent(i);
            let u = Monomial::new(u_exp);
            let v = m.colon_by(&u).expect("same ambient size");

            let mut left_gens = ideal.gens().to_vec();
            left_gens.push(u);
            let left = MonomialIdeal::new(ideal.ring().clone(), left_gens)
                .expect("generators come from the same ring");
            let mut right_gens = ideal.gens().to_vec();
            right_gens.push(v);
            let right = MonomialIdeal::new(ideal.ring().clone(), right_gens)
                .expect("generators come from the same ring");

            let mut out = decompose_rec(&left, memo);
            out.extend(decompose_rec(&right, memo));
            out
        }
    };
    memo.insert(ideal.gens().to_vec(), result.clone());
    result
}

/// The associated primes of `S/I`: the radicals of the irreducible
/// components. For monomial ideals every associated prime is of the form
/// `I : f` for a monomial `f`.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(irreducible_decomposition(ideal)?.associated_primes)
}

/// Height, big height, unmixedness, and `dim S/I = n − height`.
pub fn height_profile(ideal: &MonomialIdeal) -> Result<HeightProfile> {
    let dec = irreducible_decomposition(ideal)?;
    Ok(HeightProfile {
        height: dec.height,
        bight: dec.bight,
        unmixed: dec.is_unmixed(),
        krull_dim: ideal.num_vars() - dec.height,
    })
}
