mod common;

use hyperarr::algebra::{AffineForm, Rational, Ring};
use hyperarr::arrangement::Arrangement;
use hyperarr::combinatorics::{
    betti_numbers, char_poly, cone_poincare_check, count_points_ff, deletion_restriction_check,
    flats, mobius, mobius_recursion_holds, num_bounded_chambers, num_chambers, poincare_poly, rank,
    tutte_char_check, whitney_char_poly,
};
use hyperarr::exec::Execution;
use hyperarr::Error;
use proptest::prelude::*;

const PRIMES: &[u64] = &[
    5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101,
];

fn chi_at(a: &Arrangement, q: u64) -> Rational {
    char_poly(a).eval(&[Rational::from_integer((q as i64).into())])
}

#[test]
fn whitney_agrees_with_the_lattice() {
    let mut n = 0;
    for (name, a) in common::corpus() {
        if a.len() > 14 {
            continue;
        }
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(
                whitney_char_poly(&a, exec).unwrap(),
                char_poly(&a),
                "{name}"
            );
        }
        n += 1;
    }
    assert!(n >= 25, "only {n} arrangements compared");
}

#[test]
fn finite_field_counts_match_the_characteristic_polynomial() {
    let mut pairs = 0;
    for (name, a) in common::corpus() {
        let mut good = 0;
        for &q in PRIMES {
            if good == 4 || (q as f64).powi(a.dim() as i32) > 1e6 {
                break;
            }
            match count_points_ff(&a, q, Execution::Parallel) {
                Ok(count) => {
                    assert_eq!(
                        Rational::from_integer((count as i64).into()),
                        chi_at(&a, q),
                        "{name} at q = {q}"
                    );
                    pairs += 1;
                    good += 1;
                }
                Err(Error::BadReduction { .. }) => {}
                Err(e) => panic!("{name} at q = {q}: {e}"),
            }
        }
    }
    assert!(pairs >= 10, "only {pairs} pairs");
}

#[test]
fn deletion_restriction_at_every_index() {
    for (name, a) in common::corpus() {
        for i in 1..=a.len() {
            assert!(deletion_restriction_check(&a, i).unwrap(), "{name} at {i}");
        }
    }
}

#[test]
fn tutte_relation_on_the_corpus() {
    for (name, a) in common::corpus() {
        if a.len() > 24 {
            continue;
        }
        assert!(tutte_char_check(&a, Execution::Parallel).unwrap(), "{name}");
    }
}

#[test]
fn cone_formula_for_every_family_instance() {
    for (name, a) in common::family_instances() {
        assert!(cone_poincare_check(&a).unwrap(), "{name}");
    }
    assert!(cone_poincare_check(&common::figure1()).unwrap());
}

#[test]
fn mobius_and_betti_basics() {
    for (name, a) in common::corpus() {
        let p = flats(&a);
        let mu = mobius(&p);
        assert!(mobius_recursion_holds(&p, &mu), "{name}");
        let b = betti_numbers(&a);
        assert_eq!(b.len(), rank(&a) + 1, "{name}");
        assert_eq!(b[0], 1);
        assert_eq!(b.get(1).map_or(0, |&b| b as usize), a.len(), "{name}");
        // signs of the Moebius function alternate with rank
        for (k, level) in p.levels().iter().enumerate() {
            for &f in level {
                let m = mu.get(f);
                assert!(m == 0 || (m > 0) == (k % 2 == 0), "{name}: flat {f}");
            }
        }
        assert_eq!(num_chambers(&a), b.iter().sum::<u64>(), "{name}");
        if a.is_central() && !a.is_empty() {
            assert_eq!(num_bounded_chambers(&a), 0, "{name}");
        }
    }
}

#[test]
fn poincare_at_one_counts_chambers() {
    for (name, a) in common::corpus() {
        let pi1 = poincare_poly(&a).eval(&[Rational::from_integer(1.into())]);
        assert_eq!(
            pi1,
            Rational::from_integer((num_chambers(&a) as i64).into()),
            "{name}"
        );
    }
}

fn arb_arrangement() -> impl Strategy<Value = Arrangement> {
    (2usize..=3).prop_flat_map(|l| {
        prop::collection::vec((prop::collection::vec(-2i64..=2, l), -2i64..=2), 1..=7).prop_map(
            move |rows| {
                let ring = Ring::new(["x", "y", "z"].iter().take(l).copied());
                let mut forms: Vec<AffineForm> = Vec::new();
                for (lin, c) in rows {
                    if let Ok(f) = AffineForm::from_ints(&lin, c) {
                        if !forms.iter().any(|g| g.is_proportional(&f)) {
                            forms.push(f);
                        }
                    }
                }
                Arrangement::new(&ring, forms).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_arrangements_satisfy_the_oracles(a in arb_arrangement()) {
        prop_assert_eq!(whitney_char_poly(&a, Execution::Sequential).unwrap(), char_poly(&a));
        prop_assert!(tutte_char_check(&a, Execution::Parallel).unwrap());
        prop_assert!(cone_poincare_check(&a).unwrap());
        for i in 1..=a.len() {
            prop_assert!(deletion_restriction_check(&a, i).unwrap());
        }
        match count_points_ff(&a, 97, Execution::Sequential) {
            Ok(c) => prop_assert_eq!(Rational::from_integer((c as i64).into()), chi_at(&a, 97)),
            Err(Error::BadReduction { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
        let p = flats(&a);
        prop_assert!(mobius_recursion_holds(&p, &mobius(&p)));
        prop_assert_eq!(betti_numbers(&a).get(1).map_or(0, |&b| b as usize), a.len());
    }
}
