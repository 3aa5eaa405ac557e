#![allow(dead_code)]

use hyperarr::algebra::{parse_polynomial, Monomial, Polynomial, Rational, Ring};
use hyperarr::arrangement::{make_family, Arrangement, Family};
use hyperarr::freeness::der_module;
use hyperarr::groebner::{
    buchberger_ideal, is_groebner_basis, is_ideal_groebner_basis, module_gb, module_normal_form,
    normal_form, syzygies, ModuleElement, SubmoduleGens,
};
use hyperarr::ideals::{artinian_orlik_terao_ideal, orlik_terao_ideal, solomon_terao_ideal};
use rand::Rng;

pub fn family(f: Family, l: usize) -> Arrangement {
    make_family(&f, l).unwrap()
}

pub fn from_strings(vars: &[&str], forms: &[&str]) -> Arrangement {
    let ring = Ring::new(vars.iter().copied());
    let polys: Vec<Polynomial> = forms
        .iter()
        .map(|s| parse_polynomial(&ring, s).unwrap())
        .collect();
    Arrangement::from_polynomials(&ring, &polys).unwrap()
}

pub fn figure1() -> Arrangement {
    from_strings(&["x", "y"], &["x", "x-1", "y", "y-1", "x-y"])
}

pub fn ziegler_example() -> Arrangement {
    from_strings(
        &["x", "y", "z"],
        &["x", "y", "z", "x-y", "x-y-z", "x-y+2*z"],
    )
}

pub fn graphical_session() -> Arrangement {
    family(
        Family::Graphical {
            edges: vec![(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)],
        },
        4,
    )
}

pub fn shi_catalan_session() -> Arrangement {
    family(Family::ShiCatalanA { lo: -1, hi: 2 }, 3)
}

/// Every named family in dimensions 1 to 4, minus instances that are empty
/// or coincide with an earlier one.
pub fn family_instances() -> Vec<(String, Arrangement)> {
    let mut out = Vec::new();
    for l in 1..=4 {
        out.push((format!("Boolean{l}"), family(Family::Boolean, l)));
        if l >= 2 {
            out.push((format!("braid{l}"), family(Family::BraidA, l)));
            out.push((format!("typeB{l}"), family(Family::TypeB, l)));
            out.push((format!("typeD{l}"), family(Family::TypeD, l)));
            out.push((format!("shiA{l}"), family(Family::ShiA, l)));
            out.push((format!("CatalanA{l}"), family(Family::CatalanA, l)));
            out.push((
                format!("ShiCatalan[-2,1]_{l}"),
                family(Family::ShiCatalanA { lo: -2, hi: 1 }, l),
            ));
        }
    }
    out.push(("ShiCatalan[-1,2]_3".into(), shi_catalan_session()));
    out.push(("graph{12,13,14,24,34}".into(), graphical_session()));
    out.push((
        "signed{+12,-23,loop 1}".into(),
        family(
            Family::SignedGraphical {
                positive: vec![(1, 2)],
                negative: vec![(2, 3)],
                loops: vec![1],
            },
            3,
        ),
    ));
    out
}

/// Families plus the worked examples, some cones and generic configurations.
pub fn corpus() -> Vec<(String, Arrangement)> {
    let mut out = family_instances();
    out.push(("figure1".into(), figure1()));
    out.push(("ziegler".into(), ziegler_example()));
    out.push((
        "generic4".into(),
        from_strings(&["x", "y", "z"], &["x", "y", "z", "x+y+z"]),
    ));
    out.push((
        "affine-lines".into(),
        from_strings(&["x", "y"], &["x", "y", "x+y-1", "x-y+2", "2*x+y-3"]),
    ));
    out.push((
        "rational-planes".into(),
        from_strings(
            &["x", "y", "z"],
            &["x-1/2", "y+2/3*z", "x+y+z-1", "3*x-z+1/5"],
        ),
    ));
    out.push((
        "cone(shiA3)".into(),
        family(Family::ShiA, 3).cone("w").unwrap(),
    ));
    out.push(("cone(figure1)".into(), figure1().cone("z").unwrap()));
    out.push((
        "deletion(graph,3)".into(),
        graphical_session().deletion(3).unwrap(),
    ));
    out
}

pub fn central_corpus() -> Vec<(String, Arrangement)> {
    corpus()
        .into_iter()
        .filter(|(_, a)| a.is_central())
        .collect()
}

/// All simple graphs on `1..=n` as edge lists (1-based).
pub fn all_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

/// A polynomial with up to four terms of degree at most `deg` and small
/// integer coefficients.
pub fn random_poly<R: Rng>(ring: &Ring, deg: u32, rng: &mut R) -> Polynomial {
    let n = ring.nvars();
    let terms: Vec<(Monomial, Rational)> = (0..rng.gen_range(1..=4))
        .map(|_| {
            let mut e = vec![0u32; n];
            for _ in 0..rng.gen_range(0..=deg) {
                e[rng.gen_range(0..n)] += 1;
            }
            (
                Monomial::from_exponents(&e),
                Rational::from_integer(rng.gen_range(-3i64..=3).into()),
            )
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn combine<R: Rng>(m: &SubmoduleGens, rng: &mut R) -> ModuleElement {
    let zero = ModuleElement::new(m.ring(), vec![m.ring().zero(); m.rank()]).unwrap();
    m.gens().iter().fold(zero, |acc, g| {
        acc.add(&g.scale_by(&random_poly(m.ring(), 2, rng)))
    })
}

/// The input whose syzygies give `D(A)`: the `l` coefficient columns of
/// the forms followed by `alpha_i e_i`.
pub fn derivation_syzygy_input(a: &Arrangement) -> SubmoduleGens {
    let ring = a.ring();
    let k = a.len();
    let polys = a.form_polynomials();
    let mut gens = Vec::new();
    for j in 0..a.dim() {
        let col = a
            .forms()
            .iter()
            .map(|f| ring.constant(f.linear()[j].clone()))
            .collect();
        gens.push(ModuleElement::new(ring, col).unwrap());
    }
    for (i, p) in polys.iter().enumerate() {
        let mut col = vec![ring.zero(); k];
        col[i] = p.clone();
        gens.push(ModuleElement::new(ring, col).unwrap());
    }
    SubmoduleGens::new(ring, k, gens).unwrap()
}

/// Every returned syzygy, and random combinations of them, annihilate the
/// generators; the syzygy module's reduced basis passes Buchberger's test.
pub fn audit_syzygies<R: Rng>(m: &SubmoduleGens, rng: &mut R) -> Result<usize, String> {
    let syz = syzygies(m).map_err(|e| e.to_string())?;
    let ring = m.ring();
    let apply = |s: &ModuleElement| {
        let zero = ModuleElement::new(ring, vec![ring.zero(); m.rank()]).unwrap();
        s.components()
            .iter()
            .zip(m.gens())
            .fold(zero, |acc, (c, g)| acc.add(&g.scale_by(c)))
    };
    for (i, s) in syz.gens().iter().enumerate() {
        if !apply(s).is_zero() {
            return Err(format!("syzygy {} does not annihilate", i + 1));
        }
    }
    for _ in 0..4 {
        if !syz.is_empty() && !apply(&combine(&syz, rng)).is_zero() {
            return Err("random combination of syzygies does not annihilate".into());
        }
    }
    audit_module(&syz, rng)?;
    Ok(syz.len())
}

/// The reduced basis passes Buchberger's test, and generators and random
/// combinations of them reduce to zero modulo it.
pub fn audit_module<R: Rng>(m: &SubmoduleGens, rng: &mut R) -> Result<(), String> {
    let gb = module_gb(m).map_err(|e| e.to_string())?;
    if !is_groebner_basis(&gb) {
        return Err("module basis fails Buchberger's criterion".into());
    }
    for g in m.gens() {
        if !module_normal_form(g, &gb)
            .map_err(|e| e.to_string())?
            .is_zero()
        {
            return Err("generator does not reduce to zero".into());
        }
    }
    for _ in 0..4 {
        if !m.is_empty()
            && !module_normal_form(&combine(m, rng), &gb)
                .map_err(|e| e.to_string())?
                .is_zero()
        {
            return Err("random combination does not reduce to zero".into());
        }
    }
    Ok(())
}

pub fn audit_ideal<R: Rng>(gens: &[Polynomial], rng: &mut R) -> Result<(), String> {
    if gens.is_empty() {
        return Ok(());
    }
    let gb = buchberger_ideal(gens).map_err(|e| e.to_string())?;
    if !is_ideal_groebner_basis(&gb) {
        return Err("ideal basis fails Buchberger's criterion".into());
    }
    let ring = gens[0].ring();
    for _ in 0..4 {
        let f = gens.iter().fold(ring.zero(), |acc, g| {
            &acc + &(g * &random_poly(ring, 2, rng))
        });
        if !normal_form(&f, &gb).map_err(|e| e.to_string())?.is_zero() {
            return Err("random ideal element does not reduce to zero".into());
        }
    }
    for g in gens {
        if !normal_form(g, &gb).map_err(|e| e.to_string())?.is_zero() {
            return Err("generator does not reduce to zero".into());
        }
    }
    Ok(())
}

/// Above this many hyperplanes the Orlik-Terao ideals live in too many
/// variables for their Groebner bases to fit the test budget.
pub const IDEAL_AUDIT_LIMIT: usize = 12;

/// Runs every Groebner-backed computation on `a` and audits each result;
/// returns the number of audited computations.
pub fn audit_arrangement<R: Rng>(a: &Arrangement, rng: &mut R) -> Result<usize, String> {
    let mut n = 0;
    if a.len() <= IDEAL_AUDIT_LIMIT {
        audit_ideal(&orlik_terao_ideal(a), rng)?;
        audit_ideal(&artinian_orlik_terao_ideal(a), rng)?;
        n += 2;
    }
    if !a.is_central() || a.is_empty() {
        return Ok(n);
    }
    audit_syzygies(&derivation_syzygy_input(a), rng)?;
    let d = der_module(a).map_err(|e| e.to_string())?;
    let gens = SubmoduleGens::new(a.ring(), a.dim(), d.derivations().to_vec())
        .map_err(|e| e.to_string())?;
    audit_module(&gens, rng)?;
    let squares = a
        .ring()
        .vars()
        .iter()
        .fold(a.ring().zero(), |acc, x| &acc + &x.pow(2));
    audit_ideal(
        &solomon_terao_ideal(a, &squares).map_err(|e| e.to_string())?,
        rng,
    )?;
    Ok(n + 3)
}
