mod common;

use hyperarr::algebra::{Polynomial, Ring};
use hyperarr::groebner::{
    buchberger_ideal, ideal_equal, is_ideal_groebner_basis, normal_form, SubmoduleGens,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn every_corpus_computation_passes_the_audit() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut total = 0;
    for (name, a) in common::corpus() {
        total += common::audit_arrangement(&a, &mut rng).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    assert!(total >= 60, "only {total} computations audited");
}

#[test]
fn syzygies_of_the_graphical_session() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = common::audit_syzygies(
        &common::derivation_syzygy_input(&common::graphical_session()),
        &mut rng,
    )
    .unwrap();
    assert!(n >= 4);
}

fn arb_ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    (any::<u64>(), 1usize..=4).prop_map(|(seed, k)| {
        let ring = Ring::new(["x", "y", "z"]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..k)
            .map(|_| common::random_poly(&ring, 3, &mut rng))
            .filter(|p| !p.is_zero())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_ideals_have_valid_bases(gens in arb_ideal(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert!(common::audit_ideal(&gens, &mut rng).is_ok());
        let gb = buchberger_ideal(&gens).unwrap();
        prop_assert!(is_ideal_groebner_basis(&gb));
        prop_assert!(ideal_equal(&gb, &gens).unwrap());
        // reduced: no term of one element is divisible by another's leading monomial
        for (i, g) in gb.iter().enumerate() {
            let others: Vec<Polynomial> = gb.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
            prop_assert_eq!(&normal_form(g, &others).unwrap(), g);
        }
    }

    #[test]
    fn random_syzygies_annihilate(gens in arb_ideal(), seed in any::<u64>()) {
        prop_assume!(!gens.is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = SubmoduleGens::from_ideal(gens[0].ring(), &gens).unwrap();
        prop_assert!(common::audit_syzygies(&m, &mut rng).is_ok());
    }
}
