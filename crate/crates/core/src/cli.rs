//! Batch front end behind the `gentle-cones` binary.
//!
//! [`run`] parses a command line, writes to the given sinks and returns the
//! process exit code: 0 on success, 1 on a domain error (invalid input, a
//! failed verification), 2 on a usage error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::GentleAlgebra;
use crate::complexes::{build_walk_complex, UnfoldedDiagram};
use crate::cones::{compute_cone, verification_field, verify_in, ConeDecomposition, Summand};
use crate::error::{Error, Result};
use crate::field::{Cyclo, Fp};
use crate::fixtures;
use crate::morphisms::{Kind, Morphism, Pair};
use crate::oracle::{Oracle, VerifyReport};
use crate::walks::{parse_band, parse_string, parse_walk, Walk};

#[derive(Parser, Debug)]
#[command(
    name = "gentle-cones",
    version,
    about = "Mapping cones of string and band complexes over gentle algebras"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Algebra-level commands.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Word-level commands.
    #[command(subcommand)]
    Word(WordCmd),
    /// Complex-level commands.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Morphism enumeration.
    #[command(subcommand)]
    Hom(HomCmd),
    /// Mapping cones.
    #[command(subcommand)]
    Cone(ConeCmd),
    /// Unfolded diagrams.
    #[command(subcommand)]
    Diagram(DiagramCmd),
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// Check that an algebra file describes a finite-dimensional gentle algebra.
    Validate(AlgebraArg),
}

#[derive(Subcommand, Debug)]
enum WordCmd {
    /// Check a homotopy string, band, or `band:`/`string:` word spec.
    Check {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, group = "word", allow_hyphen_values = true)]
        string: Option<String>,
        #[arg(long, group = "word", allow_hyphen_values = true)]
        band: Option<String>,
        #[arg(long = "word", group = "word", allow_hyphen_values = true)]
        spec: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum ComplexCmd {
    /// Print the complex of projectives attached to a word.
    Show {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Dimension of the band's Jordan block.
        #[arg(long, default_value_t = 1)]
        dim: usize,
    },
}

#[derive(Subcommand, Debug)]
enum HomCmd {
    /// List the basis morphisms from source to target.
    List(PairArgs),
}

#[derive(Subcommand, Debug)]
enum ConeCmd {
    /// Decompose the cone of the selected morphism(s).
    Compute(PairArgs),
    /// Decompose and check against the explicit cone.
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        check: CheckArgs,
    },
}

#[derive(Subcommand, Debug)]
enum DiagramCmd {
    /// Unfolded diagram of a word, or of every summand of a cone.
    Emit {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["source", "target"])]
        word: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "target")]
        source: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "source")]
        target: Option<String>,
        #[arg(long, value_enum, default_value_t = KindArg::Auto)]
        kind: KindArg,
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Also write a TikZ picture to this file.
        #[arg(long)]
        tikz: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct AlgebraArg {
    /// Algebra JSON file, or `@kronecker` / `@final` for the bundled ones.
    #[arg(long)]
    algebra: String,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    #[arg(long, allow_hyphen_values = true)]
    source: String,
    #[arg(long, allow_hyphen_values = true)]
    target: String,
    #[arg(long, value_enum, default_value_t = KindArg::Auto)]
    kind: KindArg,
    /// Position in the listing order of `hom list` (longest overlap first).
    #[arg(long, default_value_t = 0)]
    index: usize,
    /// Every listed morphism instead of one.
    #[arg(long, conflicts_with = "index")]
    all: bool,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long, value_enum, default_value_t = FieldArg::Fp)]
    field: FieldArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 16)]
    trials: usize,
    /// Worker threads for independent verifications.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Graph,
    Quasi,
    Single,
    Double,
    Auto,
}

impl KindArg {
    fn kinds(self) -> Vec<Kind> {
        match self {
            KindArg::Graph => vec![Kind::Graph],
            KindArg::Quasi => vec![Kind::Quasi],
            KindArg::Single => vec![Kind::Single],
            KindArg::Double => vec![Kind::Double],
            KindArg::Auto => Kind::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    /// Prime field with every needed root of unity.
    #[value(name = "Fp", alias = "fp")]
    Fp,
    /// Cyclotomic field over the rationals (slow; exact scalars only).
    Cyclo,
}

/// A domain error tagged with the input that caused it.
struct Failure {
    at: String,
    error: Error,
}

fn at<T>(what: &str, r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|error| Failure {
        at: what.to_string(),
        error,
    })
}

/// Runs one command line (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let json = cli.json;
    match dispatch(cli) {
        Ok(Outcome { text, value, ok }) => {
            let _ = if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&value).expect("serializable")
                )
            } else {
                write!(out, "{text}")
            };
            if ok {
                0
            } else {
                1
            }
        }
        Err(Failure { at, error }) => {
            if json {
                let v = json!({ "error": error.to_string(), "input": at });
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&v).expect("serializable")
                );
            }
            let _ = writeln!(err, "error: {at}: {error}");
            1
        }
    }
}

/// Both renderings of a result; `ok` is false for a negative verdict.
struct Outcome {
    text: String,
    value: Value,
    ok: bool,
}

fn dispatch(cli: Cli) -> std::result::Result<Outcome, Failure> {
    match cli.command {
        Command::Algebra(AlgebraCmd::Validate(a)) => algebra_validate(&a),
        Command::Word(WordCmd::Check {
            algebra,
            string,
            band,
            spec,
        }) => {
            let alg = load_algebra(&algebra)?;
            word_check(&alg, string, band, spec)
        }
        Command::Complex(ComplexCmd::Show { algebra, word, dim }) => {
            let alg = load_algebra(&algebra)?;
            let w = at("--word", parse_walk(&word, &alg))?;
            if dim == 0 || (dim > 1 && !w.is_band()) {
                return Err(Failure {
                    at: "--dim".into(),
                    error: Error::Invalid("dim must be 1, or ≥ 1 for bands".into()),
                });
            }
            let c = build_walk_complex(&w, dim);
            Ok(Outcome {
                text: c.text(&alg),
                value: c.to_json(&alg),
                ok: true,
            })
        }
        Command::Hom(HomCmd::List(p)) => {
            let alg = load_algebra(&p.algebra)?;
            let (_, _, maps) = listing(&alg, &p)?;
            let mut text = String::new();
            for (i, m) in maps.iter().enumerate() {
                text.push_str(&format!("[{i}] {}\n", m.describe(&alg)));
            }
            if maps.is_empty() {
                text.push_str("no morphisms\n");
            }
            let value = Value::Array(maps.iter().map(|m| m.to_json(&alg)).collect());
            Ok(Outcome {
                text,
                value,
                ok: true,
            })
        }
        Command::Cone(ConeCmd::Compute(p)) => {
            let alg = load_algebra(&p.algebra)?;
            let chosen = select(&alg, &p)?;
            let mut text = String::new();
            let mut values = Vec::new();
            for (i, m) in &chosen {
                let d = at("cone", compute_cone(&alg, m))?;
                text.push_str(&format!(
                    "[{i}] {}\n{}",
                    m.describe(&alg),
                    indent(&d.text(&alg))
                ));
                values.push(
                    json!({ "index": i, "morphism": m.to_json(&alg), "cone": d.to_json(&alg) }),
                );
            }
            Ok(Outcome {
                text,
                value: one_or_many(values, p.all),
                ok: true,
            })
        }
        Command::Cone(ConeCmd::Verify { pair, check }) => {
            let alg = load_algebra(&pair.algebra)?;
            let chosen = select(&alg, &pair)?;
            cone_verify(&alg, chosen, &check, pair.all)
        }
        Command::Diagram(DiagramCmd::Emit {
            algebra,
            word,
            source,
            target,
            kind,
            index,
            tikz,
        }) => {
            let alg = load_algebra(&algebra)?;
            let walks = match (word, source, target) {
                (Some(w), _, _) => vec![at("--word", parse_walk(&w, &alg))?],
                (None, Some(source), Some(target)) => {
                    let p = PairArgs {
                        algebra,
                        source,
                        target,
                        kind,
                        index,
                        all: false,
                    };
                    let (_, m) = select(&alg, &p)?.remove(0);
                    let d = at("cone", compute_cone(&alg, &m))?;
                    if d.is_oracle_only() {
                        return Err(Failure {
                            at: "cone".into(),
                            error: Error::CaseNotApplicable(
                                "no named summands for this morphism".into(),
                            ),
                        });
                    }
                    d.summands.iter().map(summand_walk).collect()
                }
                _ => {
                    return Err(Failure {
                        at: "diagram".into(),
                        error: Error::Invalid("give --word, or --source and --target".into()),
                    })
                }
            };
            let diagrams: Vec<UnfoldedDiagram> =
                walks.iter().map(|w| UnfoldedDiagram::of(w, &alg)).collect();
            if let Some(path) = tikz {
                let body: Vec<String> = diagrams.iter().map(|d| d.tikz(&alg)).collect();
                at(
                    &path.display().to_string(),
                    std::fs::write(&path, body.join("\n"))
                        .map_err(|e| Error::Invalid(e.to_string())),
                )?;
            }
            let mut text = String::new();
            for d in &diagrams {
                text.push_str(&d.text(&alg));
                text.push('\n');
            }
            if walks.is_empty() {
                text.push_str("zero complex\n");
            }
            let value = Value::Array(
                walks
                    .iter()
                    .zip(&diagrams)
                    .map(|(w, d)| json!({ "word": w.word(&alg), "diagram": d.text(&alg) }))
                    .collect(),
            );
            Ok(Outcome {
                text,
                value,
                ok: true,
            })
        }
    }
}

fn summand_walk(s: &Summand) -> Walk {
    match s {
        Summand::String(s) => Walk::String(s.clone()),
        Summand::Band { band, .. } => Walk::Band(band.clone()),
    }
}

fn one_or_many(mut values: Vec<Value>, all: bool) -> Value {
    if all {
        Value::Array(values)
    } else {
        values.remove(0)
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}

fn load_algebra(a: &AlgebraArg) -> std::result::Result<GentleAlgebra, Failure> {
    let r = match a.algebra.as_str() {
        "@kronecker" => Ok(fixtures::kronecker()),
        "@final" => Ok(fixtures::final_algebra()),
        file => std::fs::read_to_string(Path::new(file))
            .map_err(|e| Error::Invalid(format!("cannot read: {e}")))
            .and_then(|t| GentleAlgebra::from_json(&t)),
    };
    at(&format!("--algebra {}", a.algebra), r)
}

fn algebra_validate(a: &AlgebraArg) -> std::result::Result<Outcome, Failure> {
    let alg = load_algebra(a)?;
    let (v, n, r) = (
        alg.vertex_count(),
        alg.arrows().len(),
        alg.relations().count(),
    );
    Ok(Outcome {
        text: format!("valid gentle algebra: {v} vertices, {n} arrows, {r} relations\n"),
        value: json!({ "valid": true, "vertices": v, "arrows": n, "relations": r }),
        ok: true,
    })
}

fn word_check(
    alg: &GentleAlgebra,
    string: Option<String>,
    band: Option<String>,
    spec: Option<String>,
) -> std::result::Result<Outcome, Failure> {
    let w = match (string, band, spec) {
        (Some(s), _, _) => Walk::String(at("--string", parse_string(&s, alg))?),
        (_, Some(b), _) => Walk::Band(at("--band", parse_band(&b, alg))?),
        (_, _, Some(w)) => at("--word", parse_walk(&w, alg))?,
        _ => {
            return Err(Failure {
                at: "word".into(),
                error: Error::Invalid("give --string, --band or --word".into()),
            })
        }
    };
    let kind = if w.is_band() { "band" } else { "string" };
    let len = w.letters().len();
    let trivial = if len == 0 { "trivial " } else { "" };
    let word = w.word(alg);
    let degrees = w.degree_profile();
    let mut value =
        json!({ "valid": true, "kind": kind, "word": word, "length": len, "degrees": degrees });
    let mut text = format!("valid {trivial}{kind}: `{word}` (length {len}, degrees {degrees:?})\n");
    if let Walk::Band(b) = &w {
        let (root, power) = b.primitive_root();
        value["scalar"] = json!(b.scalar().to_string());
        value["power"] = json!(power);
        text.push_str(&format!(
            "scalar {}, primitive root of length {} to the power {power}\n",
            b.scalar(),
            root.len()
        ));
    }
    Ok(Outcome {
        text,
        value,
        ok: true,
    })
}

/// The walks of a pair and its morphisms in listing order: longest overlap
/// first, then by kind and description.
fn listing(
    alg: &GentleAlgebra,
    p: &PairArgs,
) -> std::result::Result<(Walk, Walk, Vec<Morphism>), Failure> {
    let s = at("--source", parse_walk(&p.source, alg))?;
    let t = at("--target", parse_walk(&p.target, alg))?;
    let scalars: Vec<_> = [&s, &t]
        .iter()
        .filter_map(|w| match w {
            Walk::Band(b) => Some(b.scalar().clone()),
            Walk::String(_) => None,
        })
        .collect();
    let field = at("field", Fp::for_requirements(&scalars))?;
    let oracle = Oracle::new(alg, field);
    let pair = at("pair", Pair::new(&oracle, &s, &t))?;
    let mut maps: Vec<(usize, Kind, String, Morphism)> = pair
        .enumerate(&p.kind.kinds())
        .into_iter()
        .map(|(m, _)| {
            (
                m.descriptor.overlap().map_or(0, |o| o.len),
                m.kind(),
                m.describe(alg),
                m,
            )
        })
        .collect();
    maps.sort_by(|a, b| {
        b.0.cmp(&a.0)
            .then(a.1.cmp(&b.1))
            .then_with(|| a.2.cmp(&b.2))
    });
    Ok((s, t, maps.into_iter().map(|x| x.3).collect()))
}

fn select(
    alg: &GentleAlgebra,
    p: &PairArgs,
) -> std::result::Result<Vec<(usize, Morphism)>, Failure> {
    let (_, _, maps) = listing(alg, p)?;
    if maps.is_empty() {
        return Err(Failure {
            at: "--source/--target".into(),
            error: Error::Invalid("no morphisms of the requested kind".into()),
        });
    }
    if p.all {
        return Ok(maps.into_iter().enumerate().collect());
    }
    let n = maps.len();
    match maps.into_iter().nth(p.index) {
        Some(m) => Ok(vec![(p.index, m)]),
        None => Err(Failure {
            at: "--index".into(),
            error: Error::Invalid(format!("index {} out of range (0..{n})", p.index)),
        }),
    }
}

fn verify_one(
    alg: &GentleAlgebra,
    m: &Morphism,
    d: &ConeDecomposition,
    check: &CheckArgs,
) -> Result<VerifyReport> {
    match check.field {
        FieldArg::Fp => verify_in(
            &Oracle::new(alg, verification_field(m, d)?),
            m,
            d,
            check.trials,
            check.seed,
        ),
        FieldArg::Cyclo => {
            let mut scalars = d.scalars();
            for w in [&m.source, &m.target] {
                if let Walk::Band(b) = w {
                    scalars.push(b.scalar().clone());
                }
            }
            verify_in(
                &Oracle::new(alg, Cyclo::for_requirements(&scalars)?),
                m,
                d,
                check.trials,
                check.seed,
            )
        }
    }
}

fn cone_verify(
    alg: &GentleAlgebra,
    chosen: Vec<(usize, Morphism)>,
    check: &CheckArgs,
    all: bool,
) -> std::result::Result<Outcome, Failure> {
    let job = |(i, m): &(usize, Morphism)| -> Result<(usize, String, Value, bool)> {
        let d = compute_cone(alg, m)?;
        let desc = m.describe(alg);
        if d.is_oracle_only() {
            let v = json!({ "index": i, "morphism": m.to_json(alg), "cone": d.to_json(alg), "report": Value::Null });
            return Ok((
                *i,
                format!("[{i}] {desc}\n  no named summands; nothing to verify\n"),
                v,
                true,
            ));
        }
        let rep = verify_one(alg, m, &d, check)?;
        let text = format!(
            "[{i}] {desc}\n{}  graded dims match: {}\n  iso: {}\n  field: {}, trials: {}, eliminated pairs: {}\n",
            indent(&d.text(alg)),
            rep.graded_dims_match,
            rep.iso,
            rep.field,
            rep.trials_used,
            rep.eliminated_pairs
        );
        let ok = rep.iso && rep.graded_dims_match;
        let v = json!({ "index": i, "morphism": m.to_json(alg), "cone": d.to_json(alg), "report": rep });
        Ok((*i, text, v, ok))
    };
    let pool = at(
        "--jobs",
        rayon::ThreadPoolBuilder::new()
            .num_threads(check.jobs.max(1))
            .build()
            .map_err(|e| Error::Invalid(e.to_string())),
    )?;
    let results: Vec<Result<_>> = pool.install(|| chosen.par_iter().map(job).collect());
    let mut text = String::new();
    let mut values = Vec::new();
    let mut ok = true;
    for r in results {
        let (_, t, v, good) = at("verify", r)?;
        text.push_str(&t);
        values.push(v);
        ok &= good;
    }
    Ok(Outcome {
        text,
        value: one_or_many(values, all),
        ok,
    })
}
