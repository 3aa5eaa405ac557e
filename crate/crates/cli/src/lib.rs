//! The `hyperarr` command line: one verb per invocation, input from a named
//! family or an arrangement file.
//!
//! Exit codes: 0 on success (and `true` for `check-*` verbs), 1 for a
//! `false` check, 2 for domain errors, 64 for usage errors including unknown
//! verbs, 65 for unreadable or malformed input data.

use std::io::Write;

use clap::Parser;
use serde_json::{json, Value};

use hyperarr::algebra::{parse_polynomial, Polynomial};
use hyperarr::arrangement::{
    arrangement_to_json, make_family, multi_to_json, parse_arrangement_json, Arrangement,
    ArrangementFile, Family, MultiArrangement,
};
use hyperarr::combinatorics::{
    betti_numbers, char_poly, cone_poincare_check, count_points_ff, deletion_restriction_check,
    flats, fresh_variable, mobius, num_bounded_chambers, num_chambers, poincare_poly,
    poset_to_json, tutte_char_check, tutte_poly, Flat,
};
use hyperarr::exec::Execution;
use hyperarr::freeness::{
    der_module, exponents, graph_is_chordal, is_free, is_multi_free, multi_der_module,
    multi_exponents, saito_check, ziegler_theorem_check_at, DerivationSet,
};
use hyperarr::ideals::{
    artinian_orlik_terao_ideal, ideal_string, ideal_to_json, orlik_terao_ideal, solomon_terao_ideal,
};
use hyperarr::Error;

pub const EXIT_FALSE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

pub const VERBS: &[&str] = &[
    "make",
    "show",
    "cone",
    "delete",
    "restrict",
    "localize",
    "flats",
    "mobius",
    "poincare",
    "charpoly",
    "betti",
    "chambers",
    "bchambers",
    "tutte",
    "check-tutte",
    "check-dr",
    "check-cone",
    "count-ff",
    "dermod",
    "exponents",
    "isfree",
    "saito",
    "ot",
    "aot",
    "st",
    "ziegler",
    "multi-dermod",
    "multi-exponents",
    "multi-isfree",
    "chordal",
];

#[derive(Parser, Debug)]
#[command(
    name = "hyperarr",
    version,
    about = "Exact computations with hyperplane arrangements over Q"
)]
struct Cli {
    /// Operation to run (see the README for the full list).
    verb: String,
    /// Named family: Boolean, braid, typeB, typeD, shiA, CatalanA, ShiCatalan,
    /// graphical, signed.
    #[arg(long)]
    family: Option<String>,
    /// Ambient dimension of a family.
    #[arg(long)]
    dim: Option<usize>,
    /// Graph edges, as `12,13,24` or `1-2,1-3,2-4`.
    #[arg(long, allow_hyphen_values = true)]
    edges: Option<String>,
    /// Negative edges of a signed graph.
    #[arg(long, allow_hyphen_values = true)]
    neg_edges: Option<String>,
    /// Loops of a signed graph, as `1,3`.
    #[arg(long)]
    loops: Option<String>,
    /// Interval `lo,hi` of a ShiCatalan family.
    #[arg(long, allow_hyphen_values = true)]
    interval: Option<String>,
    /// Arrangement JSON file.
    #[arg(long)]
    file: Option<String>,
    /// 1-based hyperplane index.
    #[arg(long)]
    index: Option<usize>,
    /// Name of the new coordinate for `cone`.
    #[arg(long)]
    var: Option<String>,
    /// Prime for `count-ff`.
    #[arg(long)]
    q: Option<u64>,
    /// Polynomial for `st`.
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    /// Derivation JSON file for `saito`.
    #[arg(long)]
    candidate: Option<String>,
    /// 1-based hyperplanes whose intersection is the flat for `localize`.
    #[arg(long)]
    hyperplanes: Option<String>,
    /// Multiplicities, as `1,1,3`.
    #[arg(long)]
    mult: Option<String>,
    /// With `ziegler`, also check Ziegler's theorem (exit 0/1).
    #[arg(long)]
    check: bool,
    /// Run the data-parallel sweeps sequentially.
    #[arg(long)]
    sequential: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_parse() {
            Failure::Data(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

/// What a verb produced: text and JSON renderings plus the exit code.
struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Output {
        Output {
            text: text.into(),
            json,
            code: 0,
        }
    }

    fn boolean(b: bool) -> Output {
        Output::new(b.to_string(), json!(b))
    }

    fn check(b: bool) -> Output {
        Output {
            code: if b { 0 } else { EXIT_FALSE },
            ..Output::boolean(b)
        }
    }
}

type Outcome = std::result::Result<Output, Failure>;

/// Parses `args` (including the program name), runs the verb and writes the
/// result to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    if !VERBS.contains(&cli.verb.as_str()) {
        let _ = writeln!(err, "error: unknown verb `{}`", cli.verb);
        return EXIT_USAGE;
    }
    match dispatch(&cli) {
        Ok(o) => {
            let _ = if cli.json {
                writeln!(out, "{}", o.json)
            } else {
                writeln!(out, "{}", o.text)
            };
            o.code
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Data(m) => (EXIT_DATA, m),
                Failure::Domain(m) => (EXIT_DOMAIN, m),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn parse_list<T: std::str::FromStr>(src: &str, what: &str) -> std::result::Result<Vec<T>, Failure> {
    src.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Failure::Data(format!("{what}: cannot read `{s}`")))
        })
        .collect()
}

/// `12,13` (single-digit vertices) or `1-2,1-3`.
fn parse_edges(src: &str) -> std::result::Result<Vec<(usize, usize)>, Failure> {
    let bad = |s: &str| {
        Failure::Data(format!(
            "edge `{s}`: expected two vertices like `12` or `1-2`"
        ))
    };
    src.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (u, v) = match s.split_once('-') {
                Some((u, v)) => (
                    u.trim().parse().map_err(|_| bad(s))?,
                    v.trim().parse().map_err(|_| bad(s))?,
                ),
                None => {
                    let d: Vec<usize> = s
                        .chars()
                        .map(|c| c.to_digit(10).map(|d| d as usize))
                        .collect::<Option<_>>()
                        .ok_or_else(|| bad(s))?;
                    match d[..] {
                        [u, v] => (u, v),
                        _ => return Err(bad(s)),
                    }
                }
            };
            Ok((u, v))
        })
        .collect()
}

fn family_of(cli: &Cli, name: &str) -> std::result::Result<Family, Failure> {
    let edges = |opt: &Option<String>| {
        opt.as_deref()
            .map(parse_edges)
            .transpose()
            .map(Option::unwrap_or_default)
    };
    let f = match name.to_ascii_lowercase().as_str() {
        "boolean" => Family::Boolean,
        "braid" | "braida" | "typea" => Family::BraidA,
        "typeb" => Family::TypeB,
        "typed" => Family::TypeD,
        "shi" | "shia" => Family::ShiA,
        "catalan" | "catalana" => Family::CatalanA,
        "shicatalan" | "shicatalana" => {
            let src = cli
                .interval
                .as_deref()
                .ok_or_else(|| Failure::Usage("ShiCatalan needs --interval lo,hi".into()))?;
            match parse_list::<i64>(src, "--interval")?[..] {
                [lo, hi] => Family::ShiCatalanA { lo, hi },
                _ => return Err(Failure::Data(format!("--interval `{src}`: expected lo,hi"))),
            }
        }
        "graphical" | "graph" => Family::Graphical {
            edges: edges(&cli.edges)?,
        },
        "signed" | "signedgraphical" => Family::SignedGraphical {
            positive: edges(&cli.edges)?,
            negative: edges(&cli.neg_edges)?,
            loops: cli
                .loops
                .as_deref()
                .map(|s| parse_list(s, "--loops"))
                .transpose()?
                .unwrap_or_default(),
        },
        other => return Err(Failure::Data(format!("unknown family `{other}`"))),
    };
    Ok(f)
}

fn load(cli: &Cli) -> std::result::Result<ArrangementFile, Failure> {
    let file = match (&cli.family, &cli.file) {
        (Some(_), Some(_)) => {
            return Err(Failure::Usage(
                "give either --family or --file, not both".into(),
            ))
        }
        (None, None) => return Err(Failure::Usage("no input: give --family or --file".into())),
        (Some(name), None) => {
            let l = cli
                .dim
                .ok_or_else(|| Failure::Usage("--family needs --dim".into()))?;
            let a =
                make_family(&family_of(cli, name)?, l).map_err(|e| Failure::Data(e.to_string()))?;
            ArrangementFile::Simple(a)
        }
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| Failure::Data(format!("{path}: {e}")))?;
            parse_arrangement_json(&text).map_err(|e| Failure::Data(format!("{path}: {e}")))?
        }
    };
    match &cli.mult {
        None => Ok(file),
        Some(src) => {
            let m = parse_list(src, "--mult")?;
            Ok(ArrangementFile::Multi(MultiArrangement::new(
                file.arrangement().clone(),
                m,
            )?))
        }
    }
}

fn need_index(cli: &Cli) -> std::result::Result<usize, Failure> {
    cli.index
        .ok_or_else(|| Failure::Usage(format!("`{}` needs --index", cli.verb)))
}

fn exec(cli: &Cli) -> Execution {
    if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn arrangement_output(a: &Arrangement) -> Output {
    Output::new(a.to_string(), arrangement_to_json(a))
}

fn poly_output(p: &Polynomial) -> Output {
    Output::new(
        format!("{p:#}"),
        json!({"vars": p.ring().names(), "polynomial": p.to_string()}),
    )
}

fn list_output<T: Copy + Into<u64>>(v: &[T]) -> Output {
    let v: Vec<u64> = v.iter().map(|&x| x.into()).collect();
    Output::new(format!("{v:?}"), json!(v))
}

fn ideal_output(ring: &hyperarr::algebra::Ring, gens: &[Polynomial]) -> Output {
    Output::new(ideal_string(gens), ideal_to_json(ring, gens))
}

fn derivations_output(d: &DerivationSet) -> Output {
    Output::new(
        format!("{}\npdeg: {:?}", d.matrix_string(), d.pdegs()),
        d.to_json(),
    )
}

fn flat_of(a: &Arrangement, cli: &Cli) -> std::result::Result<Flat, Failure> {
    let src = cli
        .hyperplanes
        .as_deref()
        .ok_or_else(|| Failure::Usage("`localize` needs --hyperplanes i,j,...".into()))?;
    let idx: Vec<usize> = parse_list(src, "--hyperplanes")?;
    let mut zero_based = Vec::with_capacity(idx.len());
    for i in idx {
        zero_based.push(a.check_index(i)?);
    }
    Flat::from_support(a, &zero_based)
        .ok_or_else(|| Failure::Domain(format!("hyperplanes {src} have empty intersection")))
}

fn dispatch(cli: &Cli) -> Outcome {
    let input = load(cli)?;
    let a = input.arrangement().clone();
    let out = match cli.verb.as_str() {
        "make" => match &input {
            ArrangementFile::Multi(m) => Output::new(m.to_string(), multi_to_json(m)),
            ArrangementFile::Simple(a) => arrangement_output(a),
        },
        "show" => {
            let text = format!(
                "vars: {}\nhyperplanes: {}\ncentral: {}\nrank: {}\n{}",
                a.ring().names().join(", "),
                a.len(),
                a.is_central(),
                hyperarr::combinatorics::rank(&a),
                match &input {
                    ArrangementFile::Multi(m) => m.to_string(),
                    ArrangementFile::Simple(a) => a.to_string(),
                }
            );
            let json = match &input {
                ArrangementFile::Multi(m) => multi_to_json(m),
                ArrangementFile::Simple(a) => arrangement_to_json(a),
            };
            Output::new(text, json)
        }
        "cone" => {
            let var = cli.var.clone().unwrap_or_else(|| fresh_variable(&a));
            arrangement_output(&a.cone(&var)?)
        }
        "delete" => arrangement_output(&a.deletion(need_index(cli)?)?),
        "restrict" => arrangement_output(&a.restriction(need_index(cli)?)?),
        "localize" => arrangement_output(&a.localization(&flat_of(&a, cli)?)?),
        "flats" | "mobius" => {
            let p = flats(&a);
            let mu = mobius(&p);
            let lines: Vec<String> = if cli.verb == "flats" {
                p.levels()
                    .iter()
                    .enumerate()
                    .map(|(k, level)| {
                        let shown: Vec<String> = level
                            .iter()
                            .map(|&f| p.flats()[f].display(a.ring()))
                            .collect();
                        format!("rank {k}: {}", shown.join(", "))
                    })
                    .collect()
            } else {
                p.levels()
                    .iter()
                    .flatten()
                    .map(|&f| format!("{}: {}", p.flats()[f].display(a.ring()), mu.get(f)))
                    .collect()
            };
            Output::new(lines.join("\n"), poset_to_json(&a, &p, &mu))
        }
        "poincare" => poly_output(&poincare_poly(&a)),
        "charpoly" => poly_output(&char_poly(&a)),
        "betti" => list_output(&betti_numbers(&a)),
        "chambers" => {
            let n = num_chambers(&a);
            Output::new(n.to_string(), json!(n))
        }
        "bchambers" => {
            let n = num_bounded_chambers(&a);
            Output::new(n.to_string(), json!(n))
        }
        "tutte" => poly_output(&tutte_poly(&a, exec(cli))?),
        "check-tutte" => Output::check(tutte_char_check(&a, exec(cli))?),
        "check-dr" => {
            let indices: Vec<usize> = match cli.index {
                Some(i) => vec![i],
                None => (1..=a.len()).collect(),
            };
            let mut ok = true;
            for i in indices {
                ok &= deletion_restriction_check(&a, i)?;
            }
            Output::check(ok)
        }
        "check-cone" => Output::check(cone_poincare_check(&a)?),
        "count-ff" => {
            let q = cli
                .q
                .ok_or_else(|| Failure::Usage("`count-ff` needs --q".into()))?;
            let n = count_points_ff(&a, q, exec(cli))?;
            Output::new(n.to_string(), json!(n))
        }
        "dermod" => derivations_output(&der_module(&a)?),
        "exponents" => list_output(&exponents(&a)?),
        "isfree" => Output::boolean(is_free(&a)?),
        "saito" => {
            let path = cli
                .candidate
                .as_deref()
                .ok_or_else(|| Failure::Usage("`saito` needs --candidate FILE".into()))?;
            let text =
                std::fs::read_to_string(path).map_err(|e| Failure::Data(format!("{path}: {e}")))?;
            let cand = DerivationSet::from_json(&text)
                .map_err(|e| Failure::Data(format!("{path}: {e}")))?;
            Output::boolean(saito_check(&a, &cand)?)
        }
        "ot" => ideal_output(&hyperarr::ideals::ot_ring(a.len()), &orlik_terao_ideal(&a)),
        "aot" => ideal_output(
            &hyperarr::ideals::ot_ring(a.len()),
            &artinian_orlik_terao_ideal(&a),
        ),
        "st" => {
            let src = cli
                .f
                .as_deref()
                .ok_or_else(|| Failure::Usage("`st` needs --f POLY".into()))?;
            let f = parse_polynomial(a.ring(), src)?;
            ideal_output(a.ring(), &solomon_terao_ideal(&a, &f)?)
        }
        "ziegler" => {
            let index = cli.index.unwrap_or(1);
            if cli.check {
                Output::check(ziegler_theorem_check_at(&a, index)?)
            } else {
                let z = a.ziegler_multirestriction(index)?;
                Output::new(z.to_string(), multi_to_json(&z))
            }
        }
        "multi-dermod" => derivations_output(&multi_der_module(&input.into_multi())?),
        "multi-exponents" => list_output(&multi_exponents(&input.into_multi())?),
        "multi-isfree" => Output::boolean(is_multi_free(&input.into_multi())?),
        "chordal" => {
            let edges = graph_edges(&a)?;
            Output::boolean(graph_is_chordal(&edges, a.dim())?)
        }
        other => unreachable!("verb `{other}` passed validation"),
    };
    Ok(out)
}

/// Recovers the graph of an arrangement of forms `x_i - x_j`.
fn graph_edges(a: &Arrangement) -> std::result::Result<Vec<(usize, usize)>, Failure> {
    let mut edges = Vec::with_capacity(a.len());
    for (k, f) in a.forms().iter().enumerate() {
        let support: Vec<usize> = (0..a.dim())
            .filter(|&j| !num_traits::Zero::is_zero(&f.linear()[j]))
            .collect();
        let graphic = f.is_homogeneous()
            && support.len() == 2
            && f.linear()[support[0]] == -f.linear()[support[1]].clone();
        if !graphic {
            return Err(Failure::Domain(format!(
                "hyperplane {} is not of the form x_i - x_j",
                k + 1
            )));
        }
        edges.push((support[0] + 1, support[1] + 1));
    }
    Ok(edges)
}
