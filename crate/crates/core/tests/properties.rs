use modp_gl2::charcycle::{
    char_cycle, minimal_primes, mult_at_prime, MinimalPrime, ModuleSpec, Monomial, MonomialIdeal,
    Summand,
};
use modp_gl2::lattice::{
    length_bound, quotient_profile, soc_length, subspace_algebra, Subspace, SubrepProfile,
};
use modp_gl2::tuples::{e_twist, enumerate_d, enumerate_p_ind, weight_of_tuple};
use modp_gl2::weights::{
    char_of_weight, conj_s, count_generic_weights, required_genericity, weight_s, InertialKind,
    Params, SerreWeight, TheoremId, ToralCharacter,
};
use proptest::prelude::*;

const PRIMES: [i64; 8] = [5, 7, 11, 13, 17, 19, 23, 29];

fn arb_params(max_f: i64) -> impl Strategy<Value = Params> {
    (prop::sample::select(PRIMES.to_vec()), 1..=max_f).prop_map(|(p, f)| Params::new(p, f).unwrap())
}

/// A 1-generic weight over a small prime.
fn arb_generic_weight() -> impl Strategy<Value = (Params, SerreWeight)> {
    arb_params(3).prop_flat_map(|prm| {
        let p = prm.p() as i64;
        (
            prop::collection::vec(1..=p - 3, prm.f()),
            0..prm.modulus() as i64,
        )
            .prop_map(move |(d, m)| (prm, SerreWeight::new(&d, m, &prm).unwrap()))
    })
}

fn arb_vectors(field: u32, ambient: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..field, ambient), 0..=ambient + 1)
}

fn arb_subspace_triple() -> impl Strategy<Value = (Subspace, Subspace, Subspace)> {
    (prop::sample::select(vec![2u32, 3, 5]), 1usize..=4).prop_flat_map(|(c, n)| {
        (arb_vectors(c, n), arb_vectors(c, n), arb_vectors(c, n)).prop_map(move |(a, b, x)| {
            (
                Subspace::span(c, n, &a).unwrap(),
                Subspace::span(c, n, &b).unwrap(),
                Subspace::span(c, n, &x).unwrap(),
            )
        })
    })
}

fn arb_monomial(f: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec((0u8..3, 1u32..=3), f).prop_map(move |slots| {
        let mut y = vec![0; slots.len()];
        let mut z = vec![0; slots.len()];
        for (i, (which, e)) in slots.into_iter().enumerate() {
            match which {
                0 => y[i] = e,
                1 => z[i] = e,
                _ => {}
            }
        }
        Monomial::new(y, z).unwrap()
    })
}

fn arb_module(f: usize) -> impl Strategy<Value = ModuleSpec> {
    prop::collection::vec(
        (prop::collection::vec(arb_monomial(f), 0..=3), 1u64..=4),
        1..=3,
    )
    .prop_filter_map("unit ideal", move |parts| {
        let summands = parts
            .into_iter()
            .map(|(gens, mult)| {
                let ideal = MonomialIdeal::new(f, gens).unwrap();
                (!ideal.is_unit()).then(|| Summand::new(ideal, mult).unwrap())
            })
            .collect::<Option<Vec<_>>>()?;
        Some(ModuleSpec::direct(summands))
    })
}

fn arb_nested_pair() -> impl Strategy<Value = (Params, SubrepProfile, SubrepProfile)> {
    (1i64..=3, 1usize..=3, prop::sample::select(vec![2u32, 3]), any::<bool>())
        .prop_flat_map(|(f, r, c, irreducible)| {
            let prm = Params::new(29, f).unwrap();
            let kind = if irreducible {
                InertialKind::Irreducible
            } else {
                InertialKind::ReducibleSplit
            };
            let count = if irreducible { 1 } else { f as usize + 1 };
            prop::collection::vec((arb_vectors(c, r), arb_vectors(c, r)), count).prop_map(
                move |pairs| {
                    let mut inner = Vec::new();
                    let mut outer = Vec::new();
                    for (a, b) in pairs {
                        let big = Subspace::span(c, r, &[a.clone(), b].concat()).unwrap();
                        inner.push(Subspace::span(c, r, &a).unwrap());
                        outer.push(big);
                    }
                    (
                        prm,
                        SubrepProfile::new(kind, inner, &prm).unwrap(),
                        SubrepProfile::new(kind, outer, &prm).unwrap(),
                    )
                },
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn conj_s_is_an_involution(prm in arb_params(4), a in 0i128..1_000_000, d in 0i128..1_000_000) {
        let chi = ToralCharacter::new(a, d, &prm);
        prop_assert_eq!(conj_s(conj_s(chi)), chi);
    }

    #[test]
    fn weight_s_carries_the_conjugate_character((prm, w) in arb_generic_weight()) {
        let ws = weight_s(&w, &prm).unwrap();
        prop_assert_ne!(&ws, &w);
        prop_assert_eq!(
            char_of_weight(&ws, &prm).unwrap(),
            conj_s(char_of_weight(&w, &prm).unwrap())
        );
        if ws.digits().iter().all(|&r| r >= 1 && r + 3 <= prm.p()) {
            prop_assert_eq!(weight_s(&ws, &prm).unwrap(), w);
        }
    }

    #[test]
    fn generic_count_matches_closed_form(prm in arb_params(2), n in 0u64..8) {
        let p = prm.p();
        let expected = if p >= 2 + 2 * n {
            (p - 1 - 2 * n).pow(prm.f() as u32) * (prm.q() - 1)
        } else {
            0
        };
        prop_assert_eq!(count_generic_weights(n, &prm), expected);
    }

    #[test]
    fn thresholds_follow_dependencies(f in 1i64..=12) {
        let prm = Params::new(3, f).unwrap();
        let global = required_genericity(TheoremId::GlobalFiniteLength, &prm);
        let bound = required_genericity(TheoremId::LengthBound, &prm);
        let graded = required_genericity(TheoremId::GradedStructure, &prm);
        prop_assert!(global >= bound && bound >= graded);
    }

    #[test]
    fn twist_numerator_is_even(
        p in prop::sample::select(vec![11i64, 13, 17, 19, 23, 29, 31]),
        f in 1i64..=4,
        seed in prop::collection::vec(0i64..1000, 4),
    ) {
        let prm = Params::new(p, f).unwrap();
        // 0-generic reducible digits
        let r: Vec<i64> = seed.iter().take(f as usize).map(|s| s % (p - 2)).collect();
        prop_assume!(r.iter().any(|&x| x != 0) && r.iter().any(|&x| x != p - 3));
        for lambda in enumerate_d(&prm) {
            prop_assert!(e_twist(&lambda, &r, &prm).is_ok());
            let w = weight_of_tuple(&lambda, &r, &prm).unwrap();
            prop_assert!(w.digits().iter().all(|&d| d < prm.p()));
        }
    }

    #[test]
    fn principal_series_digits_in_range(
        p in prop::sample::select(vec![11i64, 13, 17, 19, 23, 29, 31]),
        f in 1i64..=4,
        seed in prop::collection::vec(0i64..1000, 4),
    ) {
        let prm = Params::new(p, f).unwrap();
        let r: Vec<i64> = seed.iter().take(f as usize).map(|s| 1 + s % (p - 3)).collect();
        for lambda in enumerate_p_ind(&prm) {
            let w = weight_of_tuple(&lambda, &r, &prm).unwrap();
            prop_assert!(w.digits().iter().all(|&d| d < prm.p()));
        }
    }

    #[test]
    fn modular_law((a, b, x) in arb_subspace_triple()) {
        // A ⊆ B  ⇒  A + (X ∩ B) = (A + X) ∩ B
        let a = a.intersection(&b).unwrap();
        let left = a.sum(&x.intersection(&b).unwrap()).unwrap();
        let right = a.sum(&x).unwrap().intersection(&b).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn dimension_formula((a, b, _x) in arb_subspace_triple()) {
        let alg = subspace_algebra(&a, &b).unwrap();
        prop_assert_eq!(alg.sum.dim() + alg.intersection.dim(), a.dim() + b.dim());
    }

    #[test]
    fn span_ignores_basis_order(c in prop::sample::select(vec![2u32, 3, 5, 7]), vs in arb_vectors(7, 4)) {
        let vs: Vec<Vec<u32>> = vs.into_iter().map(|v| v.into_iter().map(|x| x % c).collect()).collect();
        let mut rev = vs.clone();
        rev.reverse();
        prop_assert_eq!(Subspace::span(c, 4, &vs).unwrap(), Subspace::span(c, 4, &rev).unwrap());
    }

    #[test]
    fn socle_length_strictly_monotone((prm, inner, outer) in arb_nested_pair()) {
        let (a, b) = (soc_length(&inner, &prm), soc_length(&outer, &prm));
        if inner == outer {
            prop_assert_eq!(a, b);
        } else {
            prop_assert!(a < b);
        }
    }

    #[test]
    fn quotient_additivity((prm, inner, outer) in arb_nested_pair()) {
        let quotient = quotient_profile(&outer, &inner).unwrap();
        prop_assert_eq!(
            soc_length(&inner, &prm) + soc_length(&quotient, &prm),
            soc_length(&outer, &prm)
        );
        prop_assert_eq!(
            length_bound(&outer, &inner, &prm).unwrap() as usize,
            quotient.total_dim()
        );
        let zero = SubrepProfile::zero(outer.kind(), outer.rank(), outer.field(), &prm).unwrap();
        prop_assert_eq!(quotient_profile(&outer, &zero).unwrap(), outer.clone());
    }

    #[test]
    fn cycle_additivity(
        (f, a, b) in (1usize..=3).prop_flat_map(|f| (Just(f), arb_module(f), arb_module(f)))
    ) {
        let prm = Params::new(29, f as i64).unwrap();
        let za = char_cycle(&a, &prm).unwrap();
        let zb = char_cycle(&b, &prm).unwrap();
        let zab = char_cycle(&a.direct_sum(&b), &prm).unwrap();
        prop_assert_eq!(&zab, &za.add(&zb).unwrap());
        prop_assert_eq!(zab.sub(&zb).unwrap(), za);
        let total = a.total_multiplicity() + b.total_multiplicity();
        prop_assert!(zab.coeffs().values().all(|&c| c <= total));
    }

    #[test]
    fn multiplicity_is_zero_or_one(f in 1usize..=3, gens in prop::collection::vec(arb_monomial(3), 0..=4)) {
        let gens: Vec<Monomial> = gens
            .into_iter()
            .map(|m| Monomial::new(m.y_exps()[..f].to_vec(), m.z_exps()[..f].to_vec()).unwrap())
            .collect();
        let ideal = MonomialIdeal::new(f, gens).unwrap();
        prop_assume!(!ideal.is_unit());
        let prm = Params::new(29, f as i64).unwrap();
        for q in minimal_primes(&prm) {
            prop_assert!(mult_at_prime(&ideal, &q).unwrap() <= 1);
        }
        prop_assert_eq!(mult_at_prime(&MonomialIdeal::zero(f), &MinimalPrime::p0(f)).unwrap(), 1);
    }
}
