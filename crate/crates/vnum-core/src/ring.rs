//! The ambient polynomial ring a monomial ideal lives in.
//!
//! An [`AmbientRing`] is a list of variable names plus an optional prime
//! characteristic label. The characteristic is metadata only: every
//! operation in this crate that depends on a coefficient field takes the
//! field as an explicit argument instead of reading it off the ring.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    var_names: Vec<String>,
    characteristic: Option<u64>,
}

/// A polynomial ring `K[x_1, …, x_n]` identified by its variable names.
///
/// Cheap to clone (the data is shared). Two rings are equal when they have
/// the same variable names in the same order and the same characteristic
/// label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AmbientRing(Arc<RingData>);

impl AmbientRing {
    /// Ring with the given variable names and characteristic-zero label.
    ///
    /// Names must be nonempty, distinct, and free of the characters the
    /// ideal text format reserves (whitespace, `*`, `^`, `#`, `:`).
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self> {
        Self::build(names, None)
    }

    /// Ring labeled with a prime characteristic `p`.
    pub fn with_characteristic<S: Into<String>>(names: Vec<S>, p: u64) -> Result<Self> {
        if !crate::field::is_prime(p) {
            return Err(Error::domain(format!("characteristic {p} is not prime")));
        }
        Self::build(names, Some(p))
    }

    /// Ring with variables named `x1, …, xn`.
    pub fn standard(n: usize) -> Self {
        Self::build((1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>(), None)
            .expect("generated names are always valid")
    }

    fn build<S: Into<String>>(names: Vec<S>, characteristic: Option<u64>) -> Result<Self> {
        let var_names: Vec<String> = names.into_iter().map(Into::into).collect();
        for name in &var_names {
            if name.is_empty() {
                return Err(Error::structural("empty variable name"));
            }
            if name
                .chars()
                .any(|c| c.is_whitespace() || matches!(c, '*' | '^' | '#' | ':'))
            {
                return Err(Error::structural(format!(
                    "variable name {name:?} contains a reserved character"
                )));
            }
            if name.chars().all(|c| c.is_ascii_digit()) {
                return Err(Error::structural(format!(
                    "variable name {name:?} is all digits"
                )));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for name in &var_names {
            if !seen.insert(name.as_str()) {
                return Err(Error::structural(format!(
                    "duplicate variable name {name:?}"
                )));
            }
        }
        Ok(AmbientRing(Arc::new(RingData {
            var_names,
            characteristic,
        })))
    }

    pub fn num_vars(&self) -> usize {
        self.0.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.var_names
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.var_names[i]
    }

    pub fn characteristic(&self) -> Option<u64> {
        self.0.characteristic
    }

    /// Index of the variable with the given name, if any.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.var_names.iter().position(|v| v == name)
    }
}

impl fmt::Display for AmbientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic() {
            None => write!(f, "K[{}]", self.var_names().join(", ")),
            Some(p) => write!(f, "F{p}[{}]", self.var_names().join(", ")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_ring_names() {
        let r = AmbientRing::standard(3);
        assert_eq!(r.num_vars(), 3);
        assert_eq!(r.var_names(), &["x1", "x2", "x3"]);
        assert_eq!(r.var_index("x2"), Some(1));
        assert_eq!(r.var_index("y"), None);
    }

    #[test]
    fn rejects_bad_names() {
        assert!(AmbientRing::new(vec!["a", "a"]).is_err());
        assert!(AmbientRing::new(vec!["a b"]).is_err());
        assert!(AmbientRing::new(vec!["a^2"]).is_err());
        assert!(AmbientRing::new(vec![""]).is_err());
        assert!(AmbientRing::new(vec!["12"]).is_err());
    }

    #[test]
    fn characteristic_must_be_prime() {
        assert!(AmbientRing::with_characteristic(vec!["x"], 4).is_err());
        let r = AmbientRing::with_characteristic(vec!["x"], 5).unwrap();
        assert_eq!(r.characteristic(), Some(5));
    }

    #[test]
    fn equality_is_structural() {
        let a = AmbientRing::standard(2);
        let b = AmbientRing::new(vec!["x1", "x2"]).unwrap();
        assert_eq!(a, b);
        let c = AmbientRing::new(vec!["x2", "x1"]).unwrap();
        assert_ne!(a, c);
    }
}
