use proptest::prelude::*;

use super::*;
use crate::algebra::{parse_polynomial, Ring};
use crate::arrangement::{make_family, Family};

fn arr(vars: &[&str], forms: &[&str]) -> Arrangement {
    let ring = Ring::new(vars.iter().copied());
    let polys: Vec<Polynomial> = forms
        .iter()
        .map(|f| parse_polynomial(&ring, f).unwrap())
        .collect();
    Arrangement::from_polynomials(&ring, &polys).unwrap()
}

fn strings(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect()
}

fn graph_example() -> Arrangement {
    make_family(
        &Family::Graphical {
            edges: vec![(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)],
        },
        4,
    )
    .unwrap()
}

fn ziegler_example() -> Arrangement {
    arr(
        &["x", "y", "z"],
        &["x", "y", "z", "x-y", "x-y-z", "x-y+2*z"],
    )
}

fn logarithmic(set: &DerivationSet, a: &Arrangement, mult: &[u32]) -> bool {
    set.derivations().iter().all(|d| {
        a.form_polynomials()
            .iter()
            .zip(mult)
            .all(|(f, &m)| apply_derivation(d, f).unwrap().is_divisible_by(&f.pow(m)))
    })
}

#[test]
fn apply_derivation_examples() {
    let r = Ring::new(["x", "y", "z"]);
    let p = |s| parse_polynomial(&r, s).unwrap();
    let euler = ModuleElement::new(&r, vec![p("x"), p("y"), p("z")]).unwrap();
    assert_eq!(
        apply_derivation(&euler, &p("x^2+y^2+z^2")).unwrap(),
        p("2*x^2+2*y^2+2*z^2")
    );
    let ones = ModuleElement::new(&r, vec![p("1"), p("1"), p("1")]).unwrap();
    assert!(apply_derivation(&ones, &p("x-y")).unwrap().is_zero());
    let dx = ModuleElement::new(&r, vec![p("x"), p("0"), p("0")]).unwrap();
    assert_eq!(apply_derivation(&dx, &p("x*y*z")).unwrap(), p("x*y*z"));
    let short = ModuleElement::new(&r, vec![p("x")]).unwrap();
    assert!(apply_derivation(&short, &p("x")).is_err());
}

#[test]
fn boolean_is_diagonal() {
    let b = make_family(&Family::Boolean, 3).unwrap();
    let d = der_module(&b).unwrap();
    assert_eq!(d.pdegs(), &[1, 1, 1]);
    assert!(logarithmic(&d, &b, &[1, 1, 1]));
    let diag = DerivationSet::parse(
        b.ring(),
        &strings(&[&["x", "0", "0"], &["0", "y", "0"], &["0", "0", "z"]]),
    )
    .unwrap();
    assert!(saito_check(&b, &diag).unwrap());
    assert!(saito_check(&b, &d).unwrap());
    let squared = DerivationSet::parse(
        b.ring(),
        &strings(&[&["x^2", "0", "0"], &["0", "y", "0"], &["0", "0", "z"]]),
    )
    .unwrap();
    assert!(!saito_check(&b, &squared).unwrap());
    assert_eq!(exponents(&b).unwrap(), vec![1, 1, 1]);
    assert!(is_free(&b).unwrap());
}

#[test]
fn graphical_session() {
    let a = graph_example();
    let d = der_module(&a).unwrap();
    assert!(logarithmic(&d, &a, &[1; 5]));
    assert_eq!(exponents(&a).unwrap(), vec![0, 1, 2, 2]);
    assert!(is_free(&a).unwrap());
    let det = d.matrix().unwrap().det().unwrap();
    let c = det.div_exact(&a.defining_poly()).unwrap();
    assert!(c.is_constant() && !c.is_zero());

    // the session's printed basis, columns are derivations
    let paper = DerivationSet::parse(
        a.ring(),
        &strings(&[
            &["1", "1", "1", "1"],
            &["0", "x-y", "x-z", "x-w"],
            &["0", "0", "x*z-z^2-x*w+z*w", "0"],
            &["0", "0", "x*y-y*z-x*w+z*w", "x*y-x*w-y*w+w^2"],
        ]),
    )
    .unwrap();
    assert_eq!(paper.pdegs(), &[0, 1, 2, 2]);
    assert!(saito_check(&a, &paper).unwrap());

    let b = a.deletion(3).unwrap();
    assert!(!is_free(&b).unwrap());
    assert_eq!(exponents(&b), Err(Error::NotFree));
}

#[test]
fn braid_keeps_the_degree_zero_exponent() {
    let braid = make_family(&Family::BraidA, 3).unwrap();
    let d = der_module(&braid).unwrap();
    assert_eq!(d.pdegs(), &[0, 1, 2]);
    assert!(saito_check(&braid, &d).unwrap());
}

#[test]
fn non_central_is_rejected() {
    let shi = make_family(&Family::ShiA, 3).unwrap();
    assert_eq!(der_module(&shi), Err(Error::NonCentral));
    assert_eq!(is_free(&shi), Err(Error::NonCentral));
    assert_eq!(exponents(&shi), Err(Error::NonCentral));
}

#[test]
fn saito_rejects_non_logarithmic_candidates() {
    let b = make_family(&Family::Boolean, 3).unwrap();
    let bad = DerivationSet::parse(
        b.ring(),
        &strings(&[&["x", "0", "0"], &["0", "1", "0"], &["0", "0", "z"]]),
    )
    .unwrap();
    assert_eq!(
        saito_check(&b, &bad),
        Err(Error::NotLogarithmic {
            derivation: 2,
            hyperplane: 2
        })
    );
    let two = DerivationSet::parse(b.ring(), &strings(&[&["x", "0", "0"]])).unwrap();
    assert!(matches!(saito_check(&b, &two), Err(Error::Dimension(_))));
}

#[test]
fn ziegler_session() {
    let a = ziegler_example();
    assert_eq!(exponents(&a).unwrap(), vec![1, 2, 3]);
    let z = a.ziegler_multirestriction(3).unwrap();
    let d = multi_der_module(&z).unwrap();
    assert_eq!(d.pdegs(), &[2, 3]);
    assert!(logarithmic(&d, z.base(), z.mult()));
    assert_eq!(multi_exponents(&z).unwrap(), vec![2, 3]);
    assert!(is_multi_free(&z).unwrap());
    let det = d.matrix().unwrap().det().unwrap();
    let c = det.div_exact(&z.defining_poly()).unwrap();
    assert!(c.is_constant() && !c.is_zero());

    let paper = DerivationSet::parse(
        z.base().ring(),
        &strings(&[
            &["y[1]*y[2]", "y[1]*y[2]"],
            &["y[1]^3", "3*y[1]^2*y[2]-3*y[1]*y[2]^2+y[2]^3"],
        ]),
    )
    .unwrap();
    assert!(multi_saito_check(&z, &paper).unwrap());

    assert!(ziegler_theorem_check_at(&a, 3).unwrap());
    for i in 1..=a.len() {
        assert!(ziegler_theorem_check_at(&a, i).unwrap(), "index {i}");
    }
}

#[test]
fn ziegler_hypotheses() {
    let b = make_family(&Family::Boolean, 3).unwrap();
    assert!(ziegler_theorem_check(&b).unwrap());
    assert_eq!(
        multi_exponents(&b.ziegler_multirestriction(2).unwrap()).unwrap(),
        vec![1, 1]
    );
    let braid = make_family(&Family::BraidA, 3).unwrap();
    assert!(matches!(
        ziegler_theorem_check(&braid),
        Err(Error::Hypotheses(_))
    ));
    let cycle = make_family(
        &Family::Graphical {
            edges: vec![(1, 2), (2, 3), (3, 4), (1, 4)],
        },
        4,
    )
    .unwrap();
    assert!(matches!(
        ziegler_theorem_check(&cycle),
        Err(Error::Hypotheses(_))
    ));
}

#[test]
fn multi_degenerate_cases() {
    let b = make_family(&Family::Boolean, 3).unwrap();
    let simple = MultiArrangement::simple(b.clone());
    assert_eq!(multi_der_module(&simple).unwrap(), der_module(&b).unwrap());
    assert_eq!(multi_exponents(&simple).unwrap(), vec![1, 1, 1]);

    let line = arr(&["x"], &["x"]);
    let m = MultiArrangement::new(line, vec![2]).unwrap();
    let d = multi_der_module(&m).unwrap();
    assert_eq!(d.pdegs(), &[2]);
    assert_eq!(
        d.derivations()[0].components()[0],
        parse_polynomial(m.base().ring(), "x^2").unwrap()
    );

    let zero = MultiArrangement::new(b, vec![0, 1, 1]).unwrap();
    assert_eq!(multi_exponents(&zero).unwrap(), vec![0, 1, 1]);
}

#[test]
fn chordality_matches_freeness_on_small_graphs() {
    let cycle = vec![(1, 2), (2, 3), (3, 4), (1, 4)];
    let a = make_family(
        &Family::Graphical {
            edges: cycle.clone(),
        },
        4,
    )
    .unwrap();
    assert!(!graph_is_chordal(&cycle, 4).unwrap());
    assert!(!is_free(&a).unwrap());
    let tree = vec![(1, 2), (1, 3), (3, 4)];
    let t = make_family(
        &Family::Graphical {
            edges: tree.clone(),
        },
        4,
    )
    .unwrap();
    assert!(graph_is_chordal(&tree, 4).unwrap());
    assert!(is_free(&t).unwrap());
}

#[test]
fn local_freeness() {
    let exec = Execution::default();
    let b4 = make_family(&Family::Boolean, 4).unwrap();
    for i in 1..=4 {
        assert!(is_locally_free_along(&b4, i, exec).unwrap());
    }
    assert!(is_locally_free_along(&graph_example(), 1, exec).unwrap());
    let generic = arr(&["x", "y", "z"], &["x", "y", "z", "x+y+z"]);
    for i in 1..=4 {
        assert!(is_locally_free_along(&generic, i, Execution::Sequential).unwrap());
    }
    assert!(matches!(
        is_locally_free_along(&generic, 5, exec),
        Err(Error::IndexOutOfRange { .. })
    ));
}

#[test]
fn permuting_hyperplanes_preserves_the_module() {
    let a = graph_example();
    let mut forms = a.forms().to_vec();
    forms.reverse();
    let b = Arrangement::new(a.ring(), forms).unwrap();
    let da = der_module(&a).unwrap();
    let db = der_module(&b).unwrap();
    // mutual membership, coordinatewise via the module Groebner machinery
    let ma = crate::groebner::SubmoduleGens::new(a.ring(), 4, da.derivations().to_vec()).unwrap();
    let mb = crate::groebner::SubmoduleGens::new(a.ring(), 4, db.derivations().to_vec()).unwrap();
    let ga = crate::groebner::module_gb(&ma).unwrap();
    let gb = crate::groebner::module_gb(&mb).unwrap();
    for d in db.derivations() {
        assert!(crate::groebner::module_normal_form(d, &ga)
            .unwrap()
            .is_zero());
    }
    for d in da.derivations() {
        assert!(crate::groebner::module_normal_form(d, &gb)
            .unwrap()
            .is_zero());
    }
    assert_eq!(ga, gb);
}

#[test]
fn derivation_json_round_trip() {
    let d = der_module(&graph_example()).unwrap();
    let text = d.to_json().to_string();
    assert_eq!(DerivationSet::from_json(&text).unwrap(), d);
    let bad = r#"{"vars":["x"],"derivations":[["x"]],"pdegs":[2]}"#;
    assert!(matches!(
        DerivationSet::from_json(bad),
        Err(Error::Parse(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Any l logarithmic derivations have determinant divisible by Q(A).
    #[test]
    fn determinants_of_logarithmic_tuples_are_divisible_by_q(
        coeffs in proptest::collection::vec(-3i64..=3, 16),
        which in 0usize..3,
    ) {
        let a = [graph_example(), ziegler_example(), make_family(&Family::TypeB, 3).unwrap()][which].clone();
        let l = a.dim();
        let d = der_module(&a).unwrap();
        let ring = a.ring();
        // degree-homogeneous recombinations: scale each basis element by a
        // constant and add constant multiples of lower-degree elements times
        // a linear form
        let mut cols = Vec::new();
        for j in 0..l {
            let mut v = d.derivations()[j].clone();
            for k in 0..j {
                let gap = d.pdegs()[j] as i64 - d.pdegs()[k] as i64;
                if gap >= 0 {
                    let mult = ring.var(0).pow(gap as u32).scale(&Rational::from_integer(coeffs[(j * 4 + k) % 16].into()));
                    v = v.add(&d.derivations()[k].scale_by(&mult));
                }
            }
            cols.push(v);
        }
        let set = DerivationSet::new(ring, cols).unwrap();
        prop_assert!(logarithmic(&set, &a, &vec![1; a.len()]));
        let det = set.matrix().unwrap().det().unwrap();
        prop_assert!(det.is_divisible_by(&a.defining_poly()));
    }
}
