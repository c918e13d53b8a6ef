//! Monomials in a fixed number of variables.
//!
//! A [`Monomial`] is a dense exponent vector with its total degree cached.
//! Monomials do not carry a ring reference; operations that combine two
//! monomials require equal exponent-vector lengths and fail with a
//! structural error otherwise.
//!
//! The canonical order used everywhere in this crate is total degree first;
//! within a degree, monomials are compared lexicographically on exponent
//! vectors with the larger vector first, so generator lists read the way
//! they are usually written (`x^2` before `x*y^2` before `y^3`). [`Ord`]
//! implements exactly that order.

use crate::error::{Error, Result};
use crate::ring::AmbientRing;
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl Monomial {
    /// Monomial with the given exponent vector.
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    /// The unit monomial `1` in `n` variables.
    pub fn unit(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
            degree: 0,
        }
    }

    /// The variable `x_i` (0-indexed) in `n` variables.
    pub fn variable(i: usize, n: usize) -> Self {
        assert!(i < n, "variable index {i} out of range for {n} variables");
        let mut exponents = vec![0; n];
        exponents[i] = 1;
        Monomial {
            exponents,
            degree: 1,
        }
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    #[inline]
    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }

    /// Indices of the variables that occur with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exponents.len())
            .filter(|&i| self.exponents[i] > 0)
            .collect()
    }

    /// True when every exponent is 0 or 1.
    pub fn is_square_free(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// True when the monomial is a power of a single variable.
    pub fn is_pure_power(&self) -> bool {
        self.exponents.iter().filter(|&&e| e > 0).count() == 1
    }

    fn check_compatible(&self, other: &Monomial) -> Result<()> {
        if self.exponents.len() != other.exponents.len() {
            return Err(Error::structural(format!(
                "monomials from different ambient rings ({} vs {} variables)",
                self.exponents.len(),
                other.exponents.len()
            )));
        }
        Ok(())
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_compatible(other)?;
        if self.degree > other.degree {
            return Ok(false);
        }
        Ok(self
            .exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_compatible(other)?;
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_compatible(other)?;
        Ok(Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        ))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_compatible(other)?;
        Ok(Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        ))
    }

    /// The colon quotient `self / gcd(self, other)`: the minimal monomial
    /// `m` with `m * other` divisible by `self`.
    pub fn colon_by(&self, other: &Monomial) -> Result<Monomial> {
        self.check_compatible(other)?;
        Ok(Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        ))
    }

    /// `self` raised to the `q`-th power.
    pub fn pow(&self, q: u32) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|e| e * q).collect(),
            degree: self.degree * q,
        }
    }

    /// Render using the ring's variable names, e.g. `x1^2*x3`; the unit
    /// monomial renders as `1`.
    pub fn display<'a>(&'a self, ring: &'a AmbientRing) -> MonomialDisplay<'a> {
        assert_eq!(
            self.num_vars(),
            ring.num_vars(),
            "monomial and ring have different ambient sizes"
        );
        MonomialDisplay { m: self, ring }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    ring: &'a AmbientRing,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.ring.var_name(i))?;
            } else {
                write!(f, "{}^{}", self.ring.var_name(i), e)?;
            }
        }
        Ok(())
    }
}
