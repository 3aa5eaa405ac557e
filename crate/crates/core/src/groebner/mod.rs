//! Groebner bases of ideals and of submodules of free modules, syzygies and
//! minimal generating sets of graded modules.
//!
//! Everything runs over `Q` with degrevlex on monomials and a
//! position-over-term order on module elements (position 0 dominates). All
//! bases returned are reduced and monic, so results are deterministic.

mod engine;

use crate::algebra::{Polynomial, Ring};
use crate::error::{Error, Result};

pub(crate) use engine::{Term, Vector};

/// Limits that turn a runaway Buchberger computation into an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbConfig {
    /// Largest (weighted) degree of a critical pair that will be processed.
    pub max_degree: u32,
    pub max_basis_size: usize,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_degree: 48,
            max_basis_size: 20_000,
        }
    }
}

/// Element of `S^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    ring: Ring,
    components: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(ring: &Ring, components: Vec<Polynomial>) -> Result<ModuleElement> {
        for c in &components {
            ring.check_same(c.ring())?;
        }
        Ok(ModuleElement {
            ring: ring.clone(),
            components,
        })
    }

    pub fn unit(ring: &Ring, rank: usize, i: usize) -> ModuleElement {
        let components = (0..rank)
            .map(|k| if k == i { ring.one() } else { ring.zero() })
            .collect();
        ModuleElement {
            ring: ring.clone(),
            components,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Common degree of all nonzero components; `None` for zero or
    /// non-homogeneous elements.
    pub fn degree(&self) -> Option<u32> {
        let mut d = None;
        for c in self.components.iter().filter(|c| !c.is_zero()) {
            let cd = c.homogeneous_degree()?;
            if *d.get_or_insert(cd) != cd {
                return None;
            }
        }
        d
    }

    pub fn scale_by(&self, p: &Polynomial) -> ModuleElement {
        ModuleElement {
            ring: self.ring.clone(),
            components: self.components.iter().map(|c| c * p).collect(),
        }
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        assert_eq!(self.rank(), other.rank(), "module rank");
        ModuleElement {
            ring: self.ring.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub(crate) fn to_vector(&self) -> Vector {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| {
                p.terms().iter().map(move |(m, c)| Term {
                    pos,
                    mono: m.clone(),
                    coeff: c.clone(),
                })
            })
            .collect()
    }

    pub(crate) fn from_vector(ring: &Ring, rank: usize, v: Vector) -> ModuleElement {
        let mut buckets: Vec<Vec<_>> = vec![Vec::new(); rank];
        for t in v {
            buckets[t.pos].push((t.mono, t.coeff));
        }
        ModuleElement {
            ring: ring.clone(),
            components: buckets
                .into_iter()
                .map(|b| Polynomial::from_sorted(ring, b))
                .collect(),
        }
    }
}

/// Generators of a submodule of `S^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleGens {
    ring: Ring,
    rank: usize,
    gens: Vec<ModuleElement>,
}

impl SubmoduleGens {
    pub fn new(ring: &Ring, rank: usize, gens: Vec<ModuleElement>) -> Result<SubmoduleGens> {
        for g in &gens {
            ring.check_same(g.ring())?;
            if g.rank() != rank {
                return Err(Error::Dimension(format!(
                    "element of rank {} in S^{rank}",
                    g.rank()
                )));
            }
        }
        Ok(SubmoduleGens {
            ring: ring.clone(),
            rank,
            gens,
        })
    }

    /// An ideal viewed as a submodule of `S^1`.
    pub fn from_ideal(ring: &Ring, gens: &[Polynomial]) -> Result<SubmoduleGens> {
        let els = gens
            .iter()
            .map(|g| ModuleElement::new(ring, vec![g.clone()]))
            .collect::<Result<_>>()?;
        SubmoduleGens::new(ring, 1, els)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[ModuleElement] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    fn vectors(&self) -> Vec<Vector> {
        self.gens.iter().map(ModuleElement::to_vector).collect()
    }

    fn wrap(&self, rank: usize, vs: Vec<Vector>) -> SubmoduleGens {
        SubmoduleGens {
            ring: self.ring.clone(),
            rank,
            gens: vs
                .into_iter()
                .map(|v| ModuleElement::from_vector(&self.ring, rank, v))
                .collect(),
        }
    }
}

fn poly_vector(p: &Polynomial) -> Vector {
    p.terms()
        .iter()
        .map(|(m, c)| Term {
            pos: 0,
            mono: m.clone(),
            coeff: c.clone(),
        })
        .collect()
}

fn vector_poly(ring: &Ring, v: Vector) -> Polynomial {
    Polynomial::from_sorted(ring, v.into_iter().map(|t| (t.mono, t.coeff)).collect())
}

fn common_ring(gens: &[Polynomial]) -> Result<Option<Ring>> {
    let Some(first) = gens.first() else {
        return Ok(None);
    };
    for g in gens {
        first.ring().check_same(g.ring())?;
    }
    Ok(Some(first.ring().clone()))
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger_ideal(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    buchberger_ideal_with(gens, &GbConfig::default())
}

pub fn buchberger_ideal_with(gens: &[Polynomial], config: &GbConfig) -> Result<Vec<Polynomial>> {
    let Some(ring) = common_ring(gens)? else {
        return Ok(Vec::new());
    };
    let gb = engine::groebner(1, &[0], gens.iter().map(poly_vector).collect(), config)?;
    Ok(gb.into_iter().map(|v| vector_poly(&ring, v)).collect())
}

/// Remainder of `p` modulo a Groebner basis; zero iff `p` lies in the ideal.
pub fn normal_form(p: &Polynomial, gb: &[Polynomial]) -> Result<Polynomial> {
    for g in gb {
        p.ring().check_same(g.ring())?;
    }
    let basis: Vec<Vector> = gb
        .iter()
        .filter(|g| !g.is_zero())
        .map(poly_vector)
        .collect();
    Ok(vector_poly(
        p.ring(),
        engine::reduce(poly_vector(p), &basis),
    ))
}

/// Whether two generating sets define the same ideal, by mutual membership.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    if let (Some(ra), Some(rb)) = (common_ring(a)?, common_ring(b)?) {
        ra.check_same(&rb)?;
    }
    let ga = buchberger_ideal(a)?;
    let gb = buchberger_ideal(b)?;
    for p in b {
        if !normal_form(p, &ga)?.is_zero() {
            return Ok(false);
        }
    }
    for p in a {
        if !normal_form(p, &gb)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reduced Groebner basis of a submodule.
pub fn module_gb(m: &SubmoduleGens) -> Result<SubmoduleGens> {
    let gb = engine::groebner(m.rank, &vec![0; m.rank], m.vectors(), &GbConfig::default())?;
    Ok(m.wrap(m.rank, gb))
}

/// Remainder of `v` modulo a module Groebner basis.
pub fn module_normal_form(v: &ModuleElement, gb: &SubmoduleGens) -> Result<ModuleElement> {
    v.ring().check_same(gb.ring())?;
    if v.rank() != gb.rank() {
        return Err(Error::Dimension("module rank mismatch".into()));
    }
    let basis: Vec<Vector> = gb.vectors().into_iter().filter(|g| !g.is_empty()).collect();
    let r = engine::reduce(v.to_vector(), &basis);
    Ok(ModuleElement::from_vector(v.ring(), v.rank(), r))
}

/// Generators of `{(c_1, ..., c_k) : sum c_i g_i = 0}`.
pub fn syzygies(m: &SubmoduleGens) -> Result<SubmoduleGens> {
    syzygies_with(m, &vec![0; m.rank], &GbConfig::default())
}

/// Syzygies with per-position degree shifts on the ambient module, so that
/// graded inputs such as `alpha^m e_i` stay homogeneous.
pub fn syzygies_with(
    m: &SubmoduleGens,
    shifts: &[u32],
    config: &GbConfig,
) -> Result<SubmoduleGens> {
    let syz = engine::syzygies(m.ring.nvars(), m.rank, shifts, &m.vectors(), config)?;
    Ok(m.wrap(m.len(), syz))
}

/// A minimal generating subset of a graded submodule, sorted by degree.
///
/// Generators are visited by increasing degree; each is kept only if it is
/// not already in the submodule spanned by those kept before it.
pub fn minimal_generators(m: &SubmoduleGens) -> Result<SubmoduleGens> {
    minimal_generators_with(m, &GbConfig::default())
}

pub fn minimal_generators_with(m: &SubmoduleGens, config: &GbConfig) -> Result<SubmoduleGens> {
    let mut graded = Vec::with_capacity(m.len());
    for (i, g) in m.gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let d = g.degree().ok_or_else(|| {
            Error::NotHomogeneous(format!("generator {} of the submodule", i + 1))
        })?;
        graded.push((d, g));
    }
    graded.sort_by_key(|(d, _)| *d);
    let mut bb = engine::Buchberger::new(m.rank, vec![0; m.rank], config.clone());
    let mut kept = Vec::new();
    for (_, g) in graded {
        if bb.insert(g.to_vector())? {
            bb.complete()?;
            kept.push(g.clone());
        }
    }
    Ok(SubmoduleGens {
        ring: m.ring.clone(),
        rank: m.rank,
        gens: kept,
    })
}

/// Checks Buchberger's criterion directly: every S-vector of two elements
/// with the same leading position reduces to zero modulo the set.
///
/// Pairs are skipped only when a criterion proves their S-vector reduces to
/// zero: coprime leading monomials (ideals only), or a third leading term `k` dividing
/// `lcm(i, j)` with `lcm(i, k)` and `lcm(j, k)` both proper divisors of it.
/// The latter is sound by induction on divisibility of the lcm.
pub fn is_groebner_basis(m: &SubmoduleGens) -> bool {
    let vs: Vec<Vector> = m
        .vectors()
        .into_iter()
        .filter(|v| !v.is_empty())
        .map(|mut v| {
            engine::make_monic(&mut v);
            v
        })
        .collect();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let (a, b) = (&vs[i][0], &vs[j][0]);
            if a.pos != b.pos || (m.rank == 1 && a.mono.is_coprime(&b.mono)) {
                continue;
            }
            let lcm = a.mono.lcm(&b.mono);
            let chain = vs.iter().enumerate().any(|(k, v)| {
                let c = &v[0];
                k != i
                    && k != j
                    && c.pos == a.pos
                    && c.mono.divides(&lcm)
                    && c.mono.lcm(&a.mono) != lcm
                    && c.mono.lcm(&b.mono) != lcm
            });
            if chain {
                continue;
            }
            if !engine::reduce(engine::s_vector(&vs[i], &vs[j], &lcm), &vs).is_empty() {
                return false;
            }
        }
    }
    true
}

pub fn is_ideal_groebner_basis(gb: &[Polynomial]) -> bool {
    match gb.first() {
        None => true,
        Some(g) => SubmoduleGens::from_ideal(g.ring(), gb).is_ok_and(|m| is_groebner_basis(&m)),
    }
}
