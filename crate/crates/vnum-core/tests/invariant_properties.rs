//! Structural invariants checked over randomized inputs: minimalization,
//! colon/containment consistency, bracket powers commuting with
//! intersections and colons, stability of associated primes, decomposition
//! irredundancy, polarization, and witness validity for v and α_q.

use proptest::prelude::*;
use vnum_core::*;

/// Parameters that seed a corpus ideal. Shrinking moves toward fewer
/// variables, fewer generators, and lower degrees.
#[derive(Debug, Clone)]
struct IdealSpec {
    seed: u64,
    n: usize,
    max_gens: usize,
    max_deg: u32,
    square_free: bool,
}

fn arb_spec() -> impl Strategy<Value = IdealSpec> {
    (any::<u64>(), 2..=5usize, 1..=6usize, 1..=3u32, any::<bool>()).prop_map(
        |(seed, n, max_gens, max_deg, square_free)| IdealSpec {
            seed,
            n,
            max_gens,
            max_deg,
            square_free,
        },
    )
}

fn build(spec: &IdealSpec) -> MonomialIdeal {
    random_monomial_ideal(
        spec.seed,
        spec.n,
        spec.max_gens,
        spec.max_deg,
        spec.square_free,
    )
    .unwrap()
}

/// A second ideal in the same ring, derived from an independent seed.
fn sibling(spec: &IdealSpec, seed: u64) -> MonomialIdeal {
    random_monomial_ideal(seed, spec.n, spec.max_gens, spec.max_deg, spec.square_free).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_is_idempotent_and_order_insensitive(
        exps in prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..8),
    ) {
        let gens: Vec<Monomial> = exps.into_iter().map(Monomial::new).collect();
        let once = minimalize(gens.clone());
        prop_assert_eq!(minimalize(once.clone()), once.clone());
        let mut reversed = gens;
        reversed.reverse();
        prop_assert_eq!(minimalize(reversed), once);
    }

    #[test]
    fn containment_agrees_with_colon_being_unit(
        spec in arb_spec(),
        exps in prop::collection::vec(0u32..4, 5),
    ) {
        let ideal = build(&spec);
        let m = Monomial::new(exps[..spec.n].to_vec());
        let contained = ideal.contains(&m).unwrap();
        let colon = ideal.colon_monomial(&m).unwrap();
        prop_assert_eq!(contained, colon.is_unit());
        // The colon always contains the ideal.
        prop_assert!(colon.contains_ideal(&ideal).unwrap());
    }

    #[test]
    fn bracket_power_commutes_with_intersection(spec in arb_spec(), other in any::<u64>(), q in 2u32..=4) {
        let a = build(&spec);
        let b = sibling(&spec, other);
        let lhs = a.intersect(&b).unwrap().frobenius_power(q).unwrap();
        let rhs = a
            .frobenius_power(q)
            .unwrap()
            .intersect(&b.frobenius_power(q).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_power_commutes_with_colon(spec in arb_spec(), other in any::<u64>(), q in 2u32..=4) {
        let a = build(&spec);
        let b = sibling(&spec, other);
        let lhs = a.colon(&b).unwrap().frobenius_power(q).unwrap();
        let rhs = a
            .frobenius_power(q)
            .unwrap()
            .colon(&b.frobenius_power(q).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn associated_primes_are_stable_under_bracket_powers(spec in arb_spec(), q in 2u32..=4) {
        let ideal = build(&spec);
        let original = associated_primes(&ideal).unwrap();
        let powered = associated_primes(&ideal.frobenius_power(q).unwrap()).unwrap();
        prop_assert_eq!(original, powered);
    }

    #[test]
    fn decomposition_reconstructs_the_ideal_irredundantly(spec in arb_spec()) {
        let ideal = build(&spec);
        let decomposition = irreducible_decomposition(&ideal).unwrap();
        let components = &decomposition.components;

        let mut meet = components[0].as_ideal();
        for component in &components[1..] {
            meet = meet.intersect(&component.as_ideal()).unwrap();
        }
        prop_assert_eq!(&meet, &ideal);

        // Irredundant: dropping any component grows the intersection.
        if components.len() > 1 {
            for skip in 0..components.len() {
                let mut partial: Option<MonomialIdeal> = None;
                for (k, component) in components.iter().enumerate() {
                    if k == skip {
                        continue;
                    }
                    partial = Some(match partial {
                        None => component.as_ideal(),
                        Some(acc) => acc.intersect(&component.as_ideal()).unwrap(),
                    });
                }
                prop_assert_ne!(partial.unwrap(), ideal.clone());
            }
        }

        // Height data is read off the components.
        let heights: Vec<usize> = components.iter().map(|c| c.height()).collect();
        prop_assert_eq!(decomposition.height, *heights.iter().min().unwrap());
        prop_assert_eq!(decomposition.bight, *heights.iter().max().unwrap());
    }

    #[test]
    fn polarization_is_square_free_and_preserves_height(spec in arb_spec()) {
        let ideal = build(&spec);
        let polarized = ideal.polarize().unwrap();
        prop_assert!(polarized.ideal.is_square_free());
        prop_assert_eq!(polarized.ideal.gens().len(), ideal.gens().len());
        let original = height_profile(&ideal).unwrap();
        let fixed = height_profile(&polarized.ideal).unwrap();
        prop_assert_eq!(original.height, fixed.height);
        // Square-free ideals polarize to themselves in the same ring.
        if ideal.is_square_free() {
            prop_assert_eq!(polarized.ideal.to_string(), ideal.to_string());
        }
    }

    #[test]
    fn v_number_witnesses_realize_their_primes(spec in arb_spec()) {
        let ideal = build(&spec);
        let report = v_number(&ideal).unwrap();
        prop_assert_eq!(report.is_prime, ideal.is_prime());
        prop_assert_eq!(report.is_prime, report.v == 0);
        let ass: Vec<MonomialPrime> = associated_primes(&ideal).unwrap();
        prop_assert_eq!(report.locals.len(), ass.len());
        for (prime, local) in &report.locals {
            prop_assert!(ass.contains(prime));
            prop_assert_eq!(local.witness.degree(), local.v);
            prop_assert_eq!(ideal.colon_monomial(&local.witness).unwrap(), prime.as_ideal());
        }
        prop_assert_eq!(report.v, report.locals.values().map(|l| l.v).min().unwrap());
    }

    #[test]
    fn alpha_q_respects_the_degree_bound(spec in arb_spec(), q in 2u32..=4) {
        let ideal = build(&spec);
        let report = alpha_q(&ideal, q).unwrap();
        prop_assert_eq!(report.q, q);
        prop_assert!(report.alpha <= (q - 1) * ideal.generator_degree_sum());
        let bracket = ideal.frobenius_power(q).unwrap();
        prop_assert!(!bracket.contains(&report.witness).unwrap());
        prop_assert!(bracket.colon(&ideal).unwrap().contains(&report.witness).unwrap());
        prop_assert_eq!(report.witness.degree(), report.alpha);
    }

    #[test]
    fn prime_bracket_powers_have_closed_form_invariants(
        mask in 1u32..31,
        q in 2u32..=5,
    ) {
        let ring = AmbientRing::standard(5);
        let support: Vec<usize> = (0..5).filter(|i| mask & (1 << i) != 0).collect();
        let height = support.len();
        let prime = MonomialPrime::new(ring, support).unwrap();
        let ideal = prime.as_ideal();
        let expected = (q - 1) * height as u32;
        prop_assert_eq!(alpha_q(&ideal, q).unwrap().alpha, expected);
        prop_assert_eq!(v_of_frobenius(&ideal, q).unwrap(), expected);
    }
}
