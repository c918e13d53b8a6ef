//! Monomial ideals in canonical form, and the pure monomial primes.
//!
//! A [`MonomialIdeal`] always stores its unique minimal generating set,
//! sorted in the canonical order (total degree, then lexicographic on
//! exponent vectors). Structural equality of two ideals in the same ring is
//! therefore mathematical equality. The zero ideal (no generators) and the
//! unit ideal (generated by `1`) are representable; operations that are
//! undefined on them reject them with a domain error.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::AmbientRing;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// Reduce a generator list to the unique minimal generating set, sorted
/// canonically. Duplicates and divisibility-redundant generators are
/// dropped; if the unit monomial is present the result is `[1]`.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
    'outer: for g in gens {
        // Only earlier (≤ degree) monomials can divide g.
        for kept in &minimal {
            if kept.divides(&g).expect("minimalize requires equal ambient sizes") {
                continue 'outer;
            }
        }
        minimal.push(g);
    }
    minimal
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: AmbientRing,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Ideal generated by the given monomials; the list is minimalized and
    /// canonically ordered. An empty list gives the zero ideal.
    pub fn new(ring: AmbientRing, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.num_vars() != ring.num_vars() {
                return Err(Error::structural(format!(
                    "generator has {} variables but the ring has {}",
                    g.num_vars(),
                    ring.num_vars()
                )));
            }
        }
        Ok(MonomialIdeal {
            ring,
            gens: minimalize(gens),
        })
    }

    /// Ideal generated by the given exponent vectors.
    pub fn from_exponents(ring: AmbientRing, exps: Vec<Vec<u32>>) -> Result<Self> {
        let gens = exps.into_iter().map(Monomial::new).collect();
        Self::new(ring, gens)
    }

    pub fn zero(ring: AmbientRing) -> Self {
        MonomialIdeal { ring, gens: vec![] }
    }

    pub fn unit(ring: AmbientRing) -> Self {
        let n = ring.num_vars();
        MonomialIdeal {
            ring,
            gens: vec![Monomial::unit(n)],
        }
    }

    #[inline]
    pub fn ring(&self) -> &AmbientRing {
        &self.ring
    }

    /// The minimal generators, canonically sorted.
    #[inline]
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_vars(&self) -> usize {
        self.ring.num_vars()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    /// Proper and nonzero: the precondition shared by the invariant
    /// computations in this crate.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_square_free(&self) -> bool {
        self.gens.iter().all(Monomial::is_square_free)
    }

    /// A nonzero monomial ideal is prime exactly when it is generated by
    /// variables.
    pub fn is_prime(&self) -> bool {
        !self.gens.is_empty() && self.gens.iter().all(|g| g.degree() == 1)
    }

    /// Sum of the total degrees of the minimal generators.
    pub fn generator_degree_sum(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).sum()
    }

    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::structural(
                "ideals live in different ambient rings".to_string(),
            ));
        }
        Ok(())
    }

    fn check_member_size(&self, m: &Monomial) -> Result<()> {
        if m.num_vars() != self.ring.num_vars() {
            return Err(Error::structural(format!(
                "monomial has {} variables but the ideal's ring has {}",
                m.num_vars(),
                self.ring.num_vars()
            )));
        }
        Ok(())
    }

    /// Membership test: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_member_size(m)?;
        for g in &self.gens {
            if g.divides(m)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Ideal containment `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_ring(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The colon ideal `self : (m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_member_size(m)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.colon_by(m))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.ring.clone(), gens)
    }

    /// The colon ideal `self : other`, i.e. the intersection of
    /// `self : (g)` over the generators of `other`. `other` must be nonzero.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        if other.is_zero() {
            return Err(Error::domain("colon by the zero ideal".to_string()));
        }
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let part = self.colon_monomial(g)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
        }
        Ok(acc.expect("other has at least one generator"))
    }

    /// Intersection of two monomial ideals (pairwise lcms, minimalized).
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut candidates = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                candidates.push(a.lcm(b)?);
            }
        }
        MonomialIdeal::new(self.ring.clone(), candidates)
    }

    /// The Frobenius bracket power `(g^q : g a generator)`, `q ≥ 1`.
    pub fn frobenius_power(&self, q: u32) -> Result<MonomialIdeal> {
        if q < 1 {
            return Err(Error::domain("bracket power requires q >= 1".to_string()));
        }
        // Powers of a minimal generating set are again minimal, but run the
        // constructor anyway to keep one code path.
        MonomialIdeal::new(
            self.ring.clone(),
            self.gens.iter().map(|g| g.pow(q)).collect(),
        )
    }

    /// Strings for the minimal generators in the ideal text format.
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| g.display(&self.ring).to_string())
            .collect()
    }

    /// Polarization: each `x_i^a` factor of each generator is replaced by a
    /// product of `a` distinct new variables. The result is square-free and
    /// shares all homological invariants with the input. A square-free
    /// ideal polarizes to itself.
    pub fn polarize(&self) -> Result<Polarization> {
        if !self.is_proper_nonzero() {
            return Err(Error::domain(
                "polarization requires a proper nonzero ideal".to_string(),
            ));
        }
        if self.is_square_free() {
            return Ok(Polarization {
                ideal: self.clone(),
                var_origin: (0..self.num_vars()).collect(),
            });
        }
        let n = self.num_vars();
        // Every original variable keeps at least one copy, so the ambient
        // dimension never shrinks and heights are preserved.
        let mut copies = vec![1u32; n];
        for g in &self.gens {
            for (i, c) in copies.iter_mut().enumerate() {
                *c = (*c).max(g.exponent(i));
            }
        }
        let mut names = Vec::new();
        let mut var_origin = Vec::new();
        // slot_of[i] = index of the first copy of variable i.
        let mut slot_of = vec![0usize; n];
        for i in 0..n {
            slot_of[i] = names.len();
            for k in 1..=copies[i] {
                names.push(format!("{}_{}", self.ring.var_name(i), k));
                var_origin.push(i);
            }
        }
        let new_ring = AmbientRing::new(names)?;
        let total = new_ring.num_vars();
        let mut new_gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut e = vec![0u32; total];
            for i in 0..n {
                for k in 0..g.exponent(i) as usize {
                    e[slot_of[i] + k] = 1;
                }
            }
            new_gens.push(Monomial::new(e));
        }
        let ideal = MonomialIdeal::new(new_ring, new_gens)?;
        debug_assert!(ideal.is_square_free());
        debug_assert_eq!(ideal.gens().len(), self.gens.len());
        Ok(Polarization { ideal, var_origin })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        write!(f, ")")
    }
}

/// Result of polarizing an ideal: the square-free ideal in its new ring,
/// plus the map sending each polarized variable to the original variable it
/// is a copy of.
#[derive(Debug, Clone)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub var_origin: Vec<usize>,
}

/// A monomial prime: the ideal generated by a set of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    ring: AmbientRing,
    support: Vec<usize>,
}

impl MonomialPrime {
    /// Prime generated by the variables with the given indices. The support
    /// must be nonempty and in range.
    pub fn new(ring: AmbientRing, support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = support.into_iter().collect();
        if set.is_empty() {
            return Err(Error::domain(
                "a monomial prime needs a nonempty variable support".to_string(),
            ));
        }
        if let Some(&max) = set.iter().next_back() {
            if max >= ring.num_vars() {
                return Err(Error::structural(format!(
                    "variable index {max} out of range for {} variables",
                    ring.num_vars()
                )));
            }
        }
        Ok(MonomialPrime {
            ring,
            support: set.into_iter().collect(),
        })
    }

    /// Recognize a variable-generated ideal as a prime.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Option<MonomialPrime> {
        if !ideal.is_prime() {
            return None;
        }
        let support = ideal
            .gens()
            .iter()
            .map(|g| g.support()[0])
            .collect::<Vec<_>>();
        Some(MonomialPrime {
            ring: ideal.ring().clone(),
            support,
        })
    }

    pub fn ring(&self) -> &AmbientRing {
        &self.ring
    }

    /// Sorted indices of the generating variables.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }

    pub fn as_ideal(&self) -> MonomialIdeal {
        let n = self.ring.num_vars();
        MonomialIdeal::new(
            self.ring.clone(),
            self.support
                .iter()
                .map(|&i| Monomial::variable(i, n))
                .collect(),
        )
        .expect("prime support is validated at construction")
    }

    /// Names of the generating variables.
    pub fn variable_names(&self) -> Vec<String> {
        self.support
            .iter()
            .map(|&i| self.ring.var_name(i).to_string())
            .collect()
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.support.len(), &self.support)
            .cmp(&(other.support.len(), &other.support))
            .then_with(|| self.ring.var_names().cmp(other.ring.var_names()))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.variable_names().join(", "))
    }
}
