//! Exact invariants of monomial ideals.
//!
//! This crate computes, with integer/exact-field arithmetic throughout:
//!
//! - **v-numbers**: the least degree of a monomial whose colon into the
//!   ideal is an associated prime, globally and locally at each prime,
//!   with explicit witness monomials ([`v_number`], [`local_v_number`]);
//! - **Frobenius bracket powers** `I^[q] = (g^q : g ∈ I)` and the
//!   accompanying invariant `α_q(I)`, the least degree in
//!   `(I^[q] : I) ∖ I^[q]` ([`alpha_q`], [`v_of_frobenius`],
//!   [`v_via_polarization`]);
//! - **irreducible decompositions** of monomial ideals, associated primes,
//!   and height profiles ([`irreducible_decomposition`]);
//! - **homological invariants** over the rationals or a prime field:
//!   graded Betti tables via polarization and Stanley–Reisner homology,
//!   an independent Koszul-complex oracle, regularity, projective
//!   dimension, depth, Cohen–Macaulay/Gorenstein/level detection, and
//!   Hilbert series ([`betti_table`], [`summary`], [`hilbert_series`]);
//! - a deterministic **corpus** of test ideals: graph edge ideals, a
//!   curated 11-vertex level example, and seeded random generators
//!   ([`corpus`]).
//!
//! Ideals live in an explicitly named polynomial ring ([`AmbientRing`])
//! and are kept in canonical minimal form at all times. The text format
//! understood by [`parse_ideal`] is a `vars:` header followed by one
//! generator per line.
//!
//! # Example
//!
//! ```
//! use vnum_core::{parse_ideal, v_number, irreducible_decomposition};
//!
//! // Edge ideal of the 4-cycle.
//! let ideal = parse_ideal("vars: x1 x2 x3 x4\nx1*x2\nx2*x3\nx3*x4\nx1*x4\n")?;
//!
//! let dec = irreducible_decomposition(&ideal)?;
//! assert_eq!(dec.height, 2);
//! assert!(dec.is_unmixed());
//!
//! let report = v_number(&ideal)?;
//! assert_eq!(report.v, 1);
//! # Ok::<(), vnum_core::Error>(())
//! ```

pub mod betti;
pub mod complex;
pub mod corpus;
pub mod decompose;
pub mod error;
pub mod field;
pub mod hilbert;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod ring;
pub mod vnumber;

pub use betti::{
    betti_table, betti_table_with_cap, koszul_betti_oracle, summary, summary_with_cap,
    BettiTable, HomologicalSummary, DEFAULT_POLARIZED_CAP, KOSZUL_VAR_CAP,
};
pub use complex::{
    reduced_homology_dims, stanley_reisner_complex, SimplicialComplex, DEFAULT_HOMOLOGY_CAP,
};
pub use corpus::{
    edge_ideal, level_graph_11, parse_graph, random_artinian_ideal, random_graph,
    random_monomial_ideal, write_graph, Graph, SplitMix64,
};
pub use decompose::{
    associated_primes, height_profile, irreducible_decomposition, Decomposition, HeightProfile,
    IrreducibleComponent,
};
pub use error::{Error, Result};
pub use field::{is_prime, matrix_rank, FieldChoice};
pub use hilbert::{hilbert_series, HilbertSeries};
pub use ideal::{minimalize, MonomialIdeal, MonomialPrime, Polarization};
pub use monomial::Monomial;
pub use parse::{parse_ideal, write_ideal};
pub use ring::AmbientRing;
pub use vnumber::{
    alpha_q, brute_force_v, default_v_search_cap, local_v_number, smallest_prime_above,
    v_number, v_of_frobenius, v_via_polarization, AlphaReport, LocalV, VNumberReport,
};
