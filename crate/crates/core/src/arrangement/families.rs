use std::collections::HashSet;

use super::Arrangement;
use crate::algebra::{AffineForm, Ring};
use crate::error::{Error, Result};

/// Named families of arrangements in `l` variables `x_1, ..., x_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `x_i`.
    Boolean,
    /// Type A reflection arrangement: `x_i - x_j`, `i < j`.
    BraidA,
    /// `x_i - x_j`, `x_i + x_j` for `i < j`, then `x_i`.
    TypeB,
    /// `x_i - x_j`, `x_i + x_j` for `i < j`.
    TypeD,
    /// `x_i - x_j`, then `x_i - x_j - 1`.
    ShiA,
    /// `x_i - x_j + m` for `m` in `{-1, 0, 1}`.
    CatalanA,
    /// `x_i - x_j + m` for every integer `m` in `[lo, hi]`.
    ShiCatalanA { lo: i64, hi: i64 },
    /// `x_i - x_j` per edge `{i, j}` of a simple graph on `1..=l`.
    Graphical { edges: Vec<(usize, usize)> },
    /// `x_i - x_j` for positive edges, `x_i + x_j` for negative edges and
    /// `x_i` for loops.
    SignedGraphical {
        positive: Vec<(usize, usize)>,
        negative: Vec<(usize, usize)>,
        loops: Vec<usize>,
    },
}

/// `x, y, z, w` up to four variables, `x[1], ..., x[l]` beyond.
pub fn default_var_names(l: usize) -> Ring {
    if l <= 4 {
        Ring::new(["x", "y", "z", "w"].iter().take(l).copied())
    } else {
        Ring::indexed("x", l)
    }
}

fn pairs(l: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..l).flat_map(move |i| (i + 1..l).map(move |j| (i, j)))
}

/// `x_i + sign * x_j + c` (0-based indices; `j = None` for a coordinate form).
fn form(l: usize, i: usize, j: Option<(usize, i64)>, c: i64) -> AffineForm {
    let mut a = vec![0i64; l];
    a[i] = 1;
    if let Some((j, s)) = j {
        a[j] = s;
    }
    AffineForm::from_ints(&a, c).expect("nonzero linear part")
}

fn check_edges(
    l: usize,
    edges: &[(usize, usize)],
    seen: &mut HashSet<(usize, usize)>,
    tag: &str,
) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        if u == 0 || v == 0 || u > l || v > l {
            return Err(Error::InvalidFamily(format!(
                "{tag} edge {{{u},{v}}}: vertices must lie in 1..={l}"
            )));
        }
        if u == v {
            return Err(Error::InvalidFamily(format!(
                "{tag} edge {{{u},{v}}} is a loop"
            )));
        }
        let e = (u.min(v) - 1, u.max(v) - 1);
        if !seen.insert(e) {
            return Err(Error::InvalidFamily(format!(
                "duplicate {tag} edge {{{u},{v}}}"
            )));
        }
        out.push(e);
    }
    Ok(out)
}

/// Builds a member of a named family in `l` variables named by
/// [`default_var_names`].
pub fn make_family(family: &Family, l: usize) -> Result<Arrangement> {
    if l == 0 {
        return Err(Error::InvalidFamily("dimension must be at least 1".into()));
    }
    let ring = default_var_names(l);
    let mut forms = Vec::new();
    match family {
        Family::Boolean => forms.extend((0..l).map(|i| form(l, i, None, 0))),
        Family::BraidA => forms.extend(pairs(l).map(|(i, j)| form(l, i, Some((j, -1)), 0))),
        Family::TypeD | Family::TypeB => {
            for (i, j) in pairs(l) {
                forms.push(form(l, i, Some((j, -1)), 0));
                forms.push(form(l, i, Some((j, 1)), 0));
            }
            if *family == Family::TypeB {
                forms.extend((0..l).map(|i| form(l, i, None, 0)));
            }
        }
        Family::ShiA => return make_family(&Family::ShiCatalanA { lo: -1, hi: 0 }, l),
        Family::CatalanA => return make_family(&Family::ShiCatalanA { lo: -1, hi: 1 }, l),
        Family::ShiCatalanA { lo, hi } => {
            if lo > hi {
                return Err(Error::InvalidFamily(format!("empty interval [{lo}, {hi}]")));
            }
            // translates m <= 0 go block by block (m = 0, -1, -2, ...), the
            // positive ones pair by pair
            for m in (*lo..=(*hi).min(0)).rev() {
                forms.extend(pairs(l).map(|(i, j)| form(l, i, Some((j, -1)), m)));
            }
            if *hi > 0 {
                for (i, j) in pairs(l) {
                    forms.extend(((*lo).max(1)..=*hi).map(|m| form(l, i, Some((j, -1)), m)));
                }
            }
        }
        Family::Graphical { edges } => {
            let mut seen = HashSet::new();
            for (i, j) in check_edges(l, edges, &mut seen, "graph")? {
                forms.push(form(l, i, Some((j, -1)), 0));
            }
        }
        Family::SignedGraphical {
            positive,
            negative,
            loops,
        } => {
            let mut seen_pos = HashSet::new();
            let mut seen_neg = HashSet::new();
            for (i, j) in check_edges(l, positive, &mut seen_pos, "positive")? {
                forms.push(form(l, i, Some((j, -1)), 0));
            }
            for (i, j) in check_edges(l, negative, &mut seen_neg, "negative")? {
                forms.push(form(l, i, Some((j, 1)), 0));
            }
            let mut seen_loops = HashSet::new();
            for &v in loops {
                if v == 0 || v > l {
                    return Err(Error::InvalidFamily(format!(
                        "loop at {v}: vertices must lie in 1..={l}"
                    )));
                }
                if !seen_loops.insert(v) {
                    return Err(Error::InvalidFamily(format!("duplicate loop at {v}")));
                }
                forms.push(form(l, v - 1, None, 0));
            }
        }
    }
    Arrangement::new(&ring, forms)
}
