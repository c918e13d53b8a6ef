//! The ideal text format.
//!
//! ```text
//! vars: x1 x2 x3
//! # a comment
//! x1^2*x2
//! x3
//! ```
//!
//! The first meaningful line is a `vars:` header declaring the variable
//! names. Every following line is one generator, written multiplicatively:
//! factors are separated by `*` or whitespace (juxtaposition also works and
//! is resolved by longest-name match), `^` introduces an exponent. Blank
//! lines are skipped and `#` starts a comment anywhere. Unknown variables
//! and non-positive exponents are rejected with the offending line number.
//!
//! A file with a header and no generator lines denotes the zero ideal.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::AmbientRing;

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

/// Parse the ideal text format.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut ring: Option<AmbientRing> = None;
    let mut gens: Vec<Monomial> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        match &ring {
            None => {
                let rest = line.strip_prefix("vars:").ok_or_else(|| {
                    Error::parse(line_no, "expected a `vars:` header before generators")
                })?;
                let names: Vec<&str> = rest.split_whitespace().collect();
                if names.is_empty() {
                    return Err(Error::parse(line_no, "the `vars:` header lists no variables"));
                }
                ring =
                    Some(AmbientRing::new(names).map_err(|e| Error::parse(line_no, e.to_string()))?);
            }
            Some(r) => gens.push(parse_generator_line(line, r, line_no)?),
        }
    }
    let ring = ring.ok_or_else(|| Error::parse(1, "missing `vars:` header"))?;
    MonomialIdeal::new(ring, gens)
}

fn parse_generator_line(line: &str, ring: &AmbientRing, line_no: usize) -> Result<Monomial> {
    let mut exponents = vec![0u32; ring.num_vars()];
    for token in line.split(|c: char| c == '*' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        parse_factor_run(token, ring, line_no, &mut exponents)?;
    }
    Ok(Monomial::new(exponents))
}

/// Parse a run of `name[^exp]` factors with no separators, e.g. `x1^2x2`.
/// Names are matched greedily (longest declared name first), which makes
/// inputs like `x11` unambiguous when both `x1` and `x11` are declared.
fn parse_factor_run(
    token: &str,
    ring: &AmbientRing,
    line_no: usize,
    exponents: &mut [u32],
) -> Result<()> {
    let mut rest = token;
    while !rest.is_empty() {
        let mut best: Option<(usize, usize)> = None; // (var index, name length)
        for (i, name) in ring.var_names().iter().enumerate() {
            if rest.starts_with(name.as_str()) {
                match best {
                    Some((_, len)) if len >= name.len() => {}
                    _ => best = Some((i, name.len())),
                }
            }
        }
        let (var, len) = best.ok_or_else(|| {
            Error::parse(
                line_no,
                format!("unknown variable at {rest:?} (declared: {})", ring.var_names().join(" ")),
            )
        })?;
        rest = &rest[len..];
        let mut exp: u32 = 1;
        if let Some(stripped) = rest.strip_prefix('^') {
            let digits: String = stripped.chars().take_while(|c| c.is_ascii_digit()).collect();
            if digits.is_empty() {
                return Err(Error::parse(
                    line_no,
                    format!("expected an exponent after `^` in {token:?}"),
                ));
            }
            exp = digits
                .parse::<u32>()
                .map_err(|_| Error::parse(line_no, format!("exponent out of range in {token:?}")))?;
            if exp == 0 {
                return Err(Error::parse(
                    line_no,
                    format!("non-positive exponent in {token:?}"),
                ));
            }
            rest = &stripped[digits.len()..];
        }
        exponents[var] = exponents[var].checked_add(exp).ok_or_else(|| {
            Error::parse(line_no, format!("exponent overflow in {token:?}"))
        })?;
    }
    Ok(())
}

/// Render an ideal in the text format that [`parse_ideal`] accepts.
pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("vars: {}\n", ideal.ring().var_names().join(" "));
    for g in ideal.generator_strings() {
        out.push_str(&g);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_example() {
        let text = "vars: x1 x2 x3\n# comment\nx1^2*x2\nx3\n";
        let i = parse_ideal(text).unwrap();
        assert_eq!(i.gens().len(), 2);
        assert_eq!(i.to_string(), "(x3, x1^2*x2)");
    }

    #[test]
    fn juxtaposition_and_whitespace_separators() {
        let a = parse_ideal("vars: x y\nx^2y\n").unwrap();
        let b = parse_ideal("vars: x y\nx^2 * y\n").unwrap();
        let c = parse_ideal("vars: x y\nx^2 y\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
    }

    #[test]
    fn longest_name_wins() {
        let i = parse_ideal("vars: x1 x11\nx11x1\n").unwrap();
        assert_eq!(i.gens()[0].exponents(), &[1, 1]);
    }

    #[test]
    fn repeated_factors_accumulate() {
        let i = parse_ideal("vars: x y\nx*x*y^2\n").unwrap();
        assert_eq!(i.gens()[0].exponents(), &[2, 2]);
    }

    #[test]
    fn no_generators_is_the_zero_ideal() {
        let i = parse_ideal("vars: a b\n# nothing\n").unwrap();
        assert!(i.is_zero());
    }

    #[test]
    fn rejects_unknown_variable_with_line_number() {
        let err = parse_ideal("vars: x y\nx*z\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_zero_exponent() {
        assert!(parse_ideal("vars: x y\nx^0\n").is_err());
    }

    #[test]
    fn rejects_missing_header() {
        assert!(parse_ideal("x*y\n").is_err());
        assert!(parse_ideal("").is_err());
        assert!(parse_ideal("vars:\nx\n").is_err());
    }

    #[test]
    fn round_trips_canonical_form() {
        let text = "vars: x y z\nz\ny^3 x\nx^2\n";
        let i = parse_ideal(text).unwrap();
        let written = write_ideal(&i);
        let back = parse_ideal(&written).unwrap();
        assert_eq!(i, back);
    }
}
