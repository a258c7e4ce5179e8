//! Subcommands. Each reads algebra JSON from a file or stdin and returns
//! JSON with an exit code: 0 success, 1 property fails, 2 input error.

use std::io::Read;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

use zinbiel_core::catalog::{build, catalog_index, CatalogError, FamilyId, FamilySpec};
use zinbiel_core::exactla::{parse_rational, Rational, Subspace};
use zinbiel_core::graded::{associated_graded, natural_grading_verdict, GradedError, NaturalGrading, NotNaturallyGraded};
use zinbiel_core::maps::{graded_dims, is_isomorphism};
use zinbiel_core::polysys::{
    generic_superidentity_system_with, sign_outcome, system_matches_paper, transcribed_system, verify_family, Family,
};
use zinbiel_core::series::{derived_series, is_null_filiform, is_solvable, nilpotency_index, power_sequence, Nilpotency};
use zinbiel_core::spectra::{char_sequence_at, characteristic_sequence, is_filiform, FiliformVerdict, DEFAULT_SEED};
use zinbiel_core::structure::{annihilators, find_left_annihilating_homogeneous, minimal_graded_ideal, type_n1_structure_check};
use zinbiel_core::superalg::{Parity, SignConvention, SuperAlgebra, ZinbielVerdict};

use crate::format::{
    algebra_from_json, algebra_json, element_string, map_from_json, map_json, parse_element, parse_json, rational_json,
    to_text, FormatError,
};

#[derive(Debug, Parser)]
#[command(name = "zinbiel", version, about = "Exact computations on Zinbiel superalgebras")]
pub struct Cli {
    /// Seed for every randomized strategy.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Algebra JSON file; stdin when absent or "-".
    pub file: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Checks the superidentity on every basis triple.
    Check(Input),
    /// Power, even and odd chain dimensions.
    Series(Input),
    /// Characteristic sequence, at an element or by the candidate search.
    Charseq {
        #[command(flatten)]
        input: Input,
        /// Even element such as "e1+1/2e3".
        #[arg(long)]
        element: Option<String>,
    },
    /// Layer dimensions, gr's table and the naturally graded verdict.
    Gr(Input),
    /// Annihilators, an annihilating element and a minimal graded ideal.
    Structure(Input),
    /// The family catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Checks that transport(A, P) = B.
    IsoVerify { a: String, b: String, map: String },
    /// Prints the generic superidentity system of a dimension pattern.
    ClassifySystem {
        #[arg(long, default_value = "1,2")]
        pattern: String,
        /// Use the (-1)^{|a||b|} sign instead of the defining one.
        #[arg(long)]
        first_second_sign: bool,
        /// Compare with the printed (1, 2) equation list.
        #[arg(long)]
        compare: bool,
    },
    /// Verifies a (1, 2) solution family on seeded samples.
    ClassifyVerify {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List,
    Build {
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Total dimension, for NullFiliformSuper.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Format(e) => e.kind(),
            CliError::Catalog(CatalogError::Constraint { .. }) => "constraint",
            CliError::Catalog(_) => "catalog",
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Precondition(_) => "precondition",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": {"kind": self.kind(), "message": self.to_string()}})
    }
}

/// Exit code and the text for stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn json(code: i32, v: &Value) -> Self {
        Outcome {
            code,
            stdout: to_text(v),
        }
    }
}

/// Parses `argv` (program name first) and runs with the given stdin.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: e.to_string(),
                };
            }
            return Outcome::json(2, &CliError::Usage(e.to_string()).to_json());
        }
    };
    match dispatch(&cli, stdin) {
        Ok((code, v)) => Outcome::json(code, &v),
        Err(e) => Outcome::json(2, &e.to_json()),
    }
}

fn read_text(path: Option<&str>, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        None | Some("-") => stdin.read_to_string(&mut text).map(|_| ()).map_err(|e| CliError::Io {
            path: "stdin".into(),
            message: e.to_string(),
        })?,
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|e| CliError::Io {
                path: p.into(),
                message: e.to_string(),
            })?
        }
    }
    Ok(text)
}

fn read_algebra(path: Option<&str>, stdin: &mut dyn Read) -> Result<SuperAlgebra, CliError> {
    Ok(algebra_from_json(&parse_json(&read_text(path, stdin)?)?)?)
}

fn graded_dims_json(s: &Subspace, n: usize) -> Value {
    let (e, o) = graded_dims(s, n);
    json!([e, o])
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<(i32, Value), CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Check(input) => {
            let alg = read_algebra(input.file.as_deref(), stdin)?;
            Ok(match alg.is_zinbiel() {
                ZinbielVerdict::Ok => (0, json!({"zinbiel": true})),
                ZinbielVerdict::Violation { triple, residual } => (
                    1,
                    json!({
                        "zinbiel": false,
                        "triple": triple.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "residual": element_string(&residual),
                    }),
                ),
            })
        }
        Command::Series(input) => {
            let alg = read_algebra(input.file.as_deref(), stdin)?;
            let seq = power_sequence(&alg);
            let nil = match nilpotency_index(&alg) {
                Nilpotency::Index(s) => json!(s),
                Nilpotency::NotNilpotent => Value::Null,
            };
            Ok((
                0,
                json!({
                    "power": seq.full_dims(),
                    "even": seq.even_dims(),
                    "odd": seq.odd_dims(),
                    "derived": derived_series(&alg).iter().map(Subspace::dim).collect::<Vec<_>>(),
                    "nilpotency_index": nil,
                    "solvable": is_solvable(&alg),
                    "null_filiform": is_null_filiform(&alg),
                }),
            ))
        }
        Command::Charseq { input, element } => {
            let alg = read_algebra(input.file.as_deref(), stdin)?;
            if let Some(expr) = element {
                let x = parse_element(expr, alg.dim_even(), alg.dim_odd())?;
                let seq = char_sequence_at(&alg, &x).map_err(|e| CliError::Precondition(e.to_string()))?;
                return Ok((0, json!({"c0": seq.c0, "c1": seq.c1, "witness": element_string(&x)})));
            }
            let found = characteristic_sequence(&alg, seed).map_err(|e| CliError::Precondition(e.to_string()))?;
            let filiform = match is_filiform(&alg, seed) {
                FiliformVerdict::Yes { .. } => "yes",
                FiliformVerdict::No { .. } => "no",
                FiliformVerdict::Unknown => "unknown",
            };
            Ok((
                0,
                json!({
                    "c0": found.sequence.c0,
                    "c1": found.sequence.c1,
                    "witness": element_string(&found.witness),
                    "candidate_index": found.candidate_index,
                    "filiform": filiform,
                    "seed": seed,
                }),
            ))
        }
        Command::Gr(input) => {
            let alg = read_algebra(input.file.as_deref(), stdin)?;
            match associated_graded(&alg) {
                Ok(ag) => {
                    let verdict = match natural_grading_verdict(&alg, seed) {
                        NaturalGrading::Yes => json!({"naturally_graded": "yes"}),
                        NaturalGrading::Unknown => json!({"naturally_graded": "unknown"}),
                        NaturalGrading::No(NotNaturallyGraded::Invariant(name)) => {
                            json!({"naturally_graded": "no", "invariant": name})
                        }
                        NaturalGrading::No(NotNaturallyGraded::Condition1(e)) => {
                            json!({"naturally_graded": "no", "violation": e.to_string()})
                        }
                    };
                    let layers: Vec<Value> = ag.layers.layers.iter().map(|(e, o)| json!([e, o])).collect();
                    Ok((
                        0,
                        json!({
                            "layers": layers,
                            "adapted_basis": map_json(&ag.layers.adapted_basis),
                            "gr": algebra_json(&ag.gr),
                            "verdict": verdict,
                        }),
                    ))
                }
                Err(GradedError::Violation {
                    i,
                    j,
                    left,
                    right,
                    product,
                }) => Ok((
                    1,
                    json!({
                        "violation": {
                            "layers": [i, j],
                            "left": left.to_string(),
                            "right": right.to_string(),
                            "product": element_string(&product),
                        }
                    }),
                )),
                Err(GradedError::NotNilpotent) => Ok((1, json!({"not_nilpotent": true}))),
            }
        }
        Command::Structure(input) => {
            let alg = read_algebra(input.file.as_deref(), stdin)?;
            let n = alg.dim_even();
            let ann = annihilators(&alg);
            let mut out = json!({
                "annihilators": {
                    "left": graded_dims_json(&ann.left, n),
                    "right": graded_dims_json(&ann.right, n),
                    "two_sided": graded_dims_json(&ann.two_sided, n),
                }
            });
            let mut code = 0;
            match find_left_annihilating_homogeneous(&alg) {
                Ok(e) => {
                    out["left_annihilating_element"] =
                        json!({"element": element_string(&e.element), "parity": parity_name(e.parity)});
                }
                Err(e) => {
                    code = 1;
                    out["left_annihilating_element"] = json!({"error": e.to_string()});
                }
            }
            match minimal_graded_ideal(&alg) {
                Ok(mi) => {
                    out["minimal_ideal"] = json!({
                        "generator": element_string(&mi.generator),
                        "parity": parity_name(mi.parity),
                        "dim": mi.ideal.dim(),
                        "left_zero": mi.left_zero,
                        "right_zero": mi.right_zero,
                    });
                }
                Err(e) => {
                    code = 1;
                    out["minimal_ideal"] = json!({"error": e.to_string()});
                }
            }
            if let Ok(r) = type_n1_structure_check(&alg) {
                out["type_n1"] = json!({
                    "holds": r.holds(),
                    "even_odd_zero": r.even_odd_zero,
                    "odd_even_zero": r.odd_even_zero,
                    "odd_square_in_left_annihilator": r.odd_square_in_left_annihilator,
                });
            }
            Ok((code, out))
        }
        Command::Catalog(CatalogCommand::List) => {
            let entries: Vec<Value> = catalog_index()
                .into_iter()
                .map(|e| {
                    json!({
                        "family": e.family.name(),
                        "constraint": e.constraint,
                        "table": e.table,
                        "source": e.source,
                    })
                })
                .collect();
            Ok((0, Value::Array(entries)))
        }
        Command::Catalog(CatalogCommand::Build {
            family,
            n,
            m,
            dim,
            alpha,
            beta,
        }) => {
            let spec = build_spec(family, *n, *m, *dim, alpha.as_deref(), beta.as_deref())?;
            Ok((0, algebra_json(&build(&spec)?)))
        }
        Command::IsoVerify { a, b, map } => {
            let a = read_algebra(Some(a), stdin)?;
            let b = read_algebra(Some(b), stdin)?;
            let p = map_from_json(&parse_json(&read_text(Some(map), stdin)?)?)?;
            if (a.dim_even(), a.dim_odd()) != (b.dim_even(), b.dim_odd()) {
                return Err(CliError::Precondition(format!(
                    "algebras have dimensions ({}, {}) and ({}, {})",
                    a.dim_even(),
                    a.dim_odd(),
                    b.dim_even(),
                    b.dim_odd()
                )));
            }
            let check = is_isomorphism(&a, &b, &p).map_err(FormatError::from)?;
            let failure = check
                .first_failure
                .map_or(Value::Null, |(l, r)| json!([l.to_string(), r.to_string()]));
            Ok((
                if check.is_isomorphism { 0 } else { 1 },
                json!({"isomorphism": check.is_isomorphism, "first_failure": failure}),
            ))
        }
        Command::ClassifySystem {
            pattern,
            first_second_sign,
            compare,
        } => {
            let (n0, n1) = parse_pattern(pattern)?;
            let conv = if *first_second_sign {
                SignConvention::FirstSecond
            } else {
                SignConvention::SecondThird
            };
            let system = generic_superidentity_system_with(n0, n1, conv);
            let mut out = json!({
                "pattern": [n0, n1],
                "sign": if *first_second_sign { "first-second" } else { "second-third" },
                "count": system.len(),
                "polynomials": system.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            let mut code = 0;
            if *compare {
                if (n0, n1) != (1, 2) {
                    return Err(CliError::Usage("--compare needs --pattern 1,2".into()));
                }
                let report = system_matches_paper(&system, &transcribed_system());
                let outcome = sign_outcome();
                code = i32::from(!report.all_transcribed_matched());
                out["comparison"] = json!({
                    "transcribed": report.transcribed.len(),
                    "unmatched": report.unmatched().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "uncovered": report.uncovered.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "unmatched_by_sign": {
                        "second-third": outcome.unmatched_second_third,
                        "first-second": outcome.unmatched_first_second,
                    },
                });
            }
            Ok((code, out))
        }
        Command::ClassifyVerify { family, samples } => {
            let f: Family = family.parse().map_err(|e: zinbiel_core::polysys::FamilyError| CliError::Usage(e.to_string()))?;
            let drawn = f.seeded_samples(seed, *samples);
            let check = verify_family(f, &drawn).map_err(|e| CliError::Precondition(e.to_string()))?;
            let sample_json: Vec<Value> = drawn
                .iter()
                .map(|s| {
                    let mut obj = serde_json::Map::new();
                    for (name, v) in f.parameter_names().iter().zip(s) {
                        obj.insert((*name).into(), rational_json(v));
                    }
                    Value::Object(obj)
                })
                .collect();
            let failure = check
                .failure
                .as_ref()
                .map_or(Value::Null, |(i, p)| json!({"sample": i, "polynomial": p.to_string()}));
            Ok((
                i32::from(!check.passed()),
                json!({
                    "family": f.to_string(),
                    "seed": seed,
                    "samples": sample_json,
                    "passed": check.passed(),
                    "failure": failure,
                }),
            ))
        }
    }
}

fn parse_pattern(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("pattern must be n0,n1, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn parse_param(text: Option<&str>) -> Result<Option<Rational>, CliError> {
    text.map(|t| parse_rational(t).map_err(|e| CliError::Format(FormatError::Rational(e.to_string()))))
        .transpose()
}

/// Family spec from flags; sizes fall back to the catalog template.
pub fn build_spec(
    family: &str,
    n: Option<usize>,
    m: Option<usize>,
    dim: Option<usize>,
    alpha: Option<&str>,
    beta: Option<&str>,
) -> Result<FamilySpec, CliError> {
    let id: FamilyId = family.parse()?;
    let template = catalog_index()
        .into_iter()
        .find(|e| e.family == id)
        .expect("every family is indexed")
        .template;
    let mut spec = match (dim, n, m) {
        (Some(_), Some(_), _) | (Some(_), _, Some(_)) => {
            return Err(CliError::Usage("give either --dim or --n/--m".into()));
        }
        (Some(d), None, None) if id == FamilyId::NullFiliformSuper => FamilySpec::null_filiform_super(d),
        (Some(d), None, None) if id.is_pure_even() => FamilySpec::new(id, d, 0),
        (Some(_), None, None) => {
            return Err(CliError::Usage(format!("{id} takes --n/--m, not --dim")));
        }
        (None, n, m) => FamilySpec::new(id, n.unwrap_or(template.n), m.unwrap_or(template.m)),
    };
    spec.alpha = parse_param(alpha)?;
    spec.beta = parse_param(beta)?;
    // default parameter values only when none was passed at all
    if alpha.is_none() && beta.is_none() {
        spec.alpha = spec.alpha.or(template.alpha);
        spec.beta = spec.beta.or(template.beta);
    }
    Ok(spec)
}
