//! Batch front end behind the `hpi` binary.

use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::doc::Document;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::haction::{check_kappa, decompose, h_radical, ExponentOptions};
use crate::hopfzoo::{catalog, grading_dual_action};
use crate::linalg::{Matrix, Subspace};
use crate::pi::{codimension, exponent_report, graded_codimension, property_star_witness, CodimOptions};

#[derive(Parser, Debug)]
#[command(name = "hpi", version, about = "Structure and codimensions of finite-dimensional algebras with generalized H-actions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Largest number of monomials a codimension or witness search may stream.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    pub row_cap: u128,
    /// Wall-clock budget in seconds for codimension computations.
    #[arg(long, global = true, default_value_t = 600)]
    pub time_budget: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify the action axioms and the declared Hopf relations.
    Check { input: String },
    /// Jacobson radical and H-radical.
    Radical { input: String },
    /// Radicals, H-simple blocks, the embedding κ and the exponent d.
    Decompose {
        input: String,
        #[arg(long)]
        allow_repeats: bool,
    },
    /// d together with the codimension table for n = 1..n_max.
    Exponent {
        input: String,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
    /// Codimension at a single degree.
    Codim {
        input: String,
        #[arg(long)]
        n: usize,
    },
    /// Graded codimension next to the codimension of the dual action.
    CodimGraded {
        input: String,
        #[arg(long)]
        n: usize,
    },
    /// Search for an alternating non-identity in an H-simple algebra.
    Witness {
        input: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        n0: usize,
    },
    /// Bundled example documents.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    List,
    /// Print a bundled document.
    Emit { name: String },
}

/// Resolves `catalog:NAME` or reads a document file.
pub fn load_input(input: &str) -> Result<Document> {
    match input.strip_prefix("catalog:") {
        Some(name) => catalog::load(name),
        None => Document::from_json(&std::fs::read_to_string(input)?),
    }
}

fn codim_options(c: &Common) -> CodimOptions {
    CodimOptions { row_cap: c.row_cap, time_budget: Some(Duration::from_secs(c.time_budget)), threads: c.threads }
}

fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn subspace(s: &Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": s.basis().iter().map(|v| vector(v)).collect::<Vec<_>>() })
}

fn matrix(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector(m.row(i))).collect())
}

fn fmt_vec(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn fmt_subspace(s: &Subspace) -> String {
    if s.is_zero() {
        "0".into()
    } else {
        format!("span{{{}}}", s.basis().iter().map(|v| fmt_vec(v)).collect::<Vec<_>>().join(", "))
    }
}

/// Report text for one invocation; `Catalog emit` returns the document verbatim.
pub fn run(cli: &Cli) -> Result<String> {
    let c = &cli.common;
    let text = c.format == Format::Text;
    let render = |v: Value, t: String| -> String {
        if text {
            t
        } else {
            let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
            s.push('\n');
            s
        }
    };
    match &cli.command {
        Command::Check { input } => {
            let doc = load_input(input)?;
            if let Some(f) = doc.action.verify_action()? {
                return Err(Error::AxiomViolation { generator: f.generator, a: f.a, b: f.b });
            }
            let pres = doc.presentation()?;
            let hopf = match &pres {
                Some(p) => match doc.action.verify_hopf_module_axioms(p)? {
                    Some(relation) => return Err(Error::RelationViolation { relation }),
                    None => "hold",
                },
                None => "not declared",
            };
            let line = match pres {
                Some(_) => "action valid; Hopf relations hold\n".to_string(),
                None => "action valid; no Hopf presentation declared\n".to_string(),
            };
            Ok(render(
                json!({
                    "command": "check",
                    "name": doc.name,
                    "dim": doc.algebra().dim(),
                    "htilde": doc.action.htilde_labels(),
                    "action_valid": true,
                    "hopf_relations": hopf,
                }),
                line,
            ))
        }
        Command::Radical { input } => {
            let doc = load_input(input)?;
            let j = doc.algebra().jacobson_radical();
            let jh = h_radical(&doc.action)?;
            Ok(render(
                json!({ "command": "radical", "name": doc.name, "jacobson": subspace(&j), "h_radical": subspace(&jh) }),
                format!("J(A) = {} (dim {})\nJ^H(A) = {} (dim {})\n", fmt_subspace(&j), j.dim(), fmt_subspace(&jh), jh.dim()),
            ))
        }
        Command::Decompose { input, allow_repeats } => {
            let doc = load_input(input)?;
            let r = decompose(&doc.action, &ExponentOptions { allow_repeats: *allow_repeats, max_len: None })?;
            let kappa_ok = check_kappa(doc.algebra(), &r.kappa).is_none();
            let mut t = format!(
                "J(A) = {} (dim {})\nJ^H(A) = {} (dim {})\nA/J^H(A) has dim {}\n",
                fmt_subspace(&r.jacobson),
                r.jacobson.dim(),
                fmt_subspace(&r.h_radical),
                r.h_radical.dim(),
                r.quotient_dim
            );
            t.push_str(&format!("B0 = {}\n", fmt_subspace(&r.kappa.b0)));
            for (i, b) in r.blocks.iter().enumerate() {
                t.push_str(&format!("block {i}: dim {}, {}\n", b.dim(), fmt_subspace(b)));
            }
            t.push_str(&format!("kappa checks {}\n", if kappa_ok { "pass" } else { "FAIL" }));
            if r.nilpotent {
                t.push_str("A is nilpotent\n");
            } else {
                t.push_str(&format!("d = {}, witness chain {:?}\n", r.d, r.witness));
            }
            Ok(render(
                json!({
                    "command": "decompose",
                    "name": doc.name,
                    "jacobson": subspace(&r.jacobson),
                    "h_radical": subspace(&r.h_radical),
                    "nilpotent": r.nilpotent,
                    "quotient_dim": r.quotient_dim,
                    "b0": subspace(&r.kappa.b0),
                    "n": subspace(&r.kappa.n),
                    "blocks": r.blocks.iter().map(subspace).collect::<Vec<_>>(),
                    "kappa": matrix(&r.kappa.kappa),
                    "kappa_checks": kappa_ok,
                    "d": (!r.nilpotent).then_some(r.d),
                    "witness_chain": r.witness,
                }),
                t,
            ))
        }
        Command::Exponent { input, n_max } => {
            let doc = load_input(input)?;
            let r = exponent_report(&doc.action, *n_max, &codim_options(c), &ExponentOptions::default())?;
            Ok(if text { r.to_text() } else { r.to_json() })
        }
        Command::Codim { input, n } => {
            let doc = load_input(input)?;
            let v = codimension(&doc.action, *n, &codim_options(c))?;
            Ok(render(json!({ "command": "codim", "name": doc.name, "n": n, "codim": v }), format!("c_{n} = {v}\n")))
        }
        Command::CodimGraded { input, n } => {
            let doc = load_input(input)?;
            let g = doc.grading.as_ref().ok_or_else(|| Error::Precondition(format!("{} declares no grading", doc.name)))?;
            let opts = codim_options(c);
            let graded = graded_codimension(doc.algebra(), g, *n, &opts)?;
            let dual = codimension(&grading_dual_action(doc.algebra(), g)?, *n, &opts)?;
            Ok(render(
                json!({ "command": "codim-graded", "name": doc.name, "n": n, "graded": graded, "dual": dual, "equal": graded == dual }),
                format!("graded c_{n} = {graded}\ndual action c_{n} = {dual}\n{}\n", if graded == dual { "equal" } else { "DIFFERENT" }),
            ))
        }
        Command::Witness { input, k, n0 } => {
            let doc = load_input(input)?;
            let labels = doc.action.htilde_labels();
            let found = property_star_witness(&doc.action, *k, *n0, &codim_options(c))?;
            match found {
                None => Ok(render(
                    json!({ "command": "witness", "name": doc.name, "k": k, "n0": n0, "found": false }),
                    format!("no alternating non-identity with n1 <= {n0}\n"),
                )),
                Some(w) => Ok(render(
                    json!({
                        "command": "witness",
                        "name": doc.name,
                        "k": w.k,
                        "n0": n0,
                        "found": true,
                        "n1": w.n1,
                        "block_size": w.ell,
                        "degree": w.degree(),
                        "generator": w.generator.display(&labels),
                        "terms": w.polynomial.len(),
                        "polynomial": w.polynomial.display(&labels),
                        "points": w.point_indices(),
                        "value": vector(&w.value),
                    }),
                    format!(
                        "alternating non-identity of degree {} with n1 = {}\ngenerator {}\n{} terms\npoints (basis indices) {:?}\nvalue {}\n",
                        w.degree(),
                        w.n1,
                        w.generator.display(&labels),
                        w.polynomial.len(),
                        w.point_indices(),
                        fmt_vec(&w.value)
                    ),
                )),
            }
        }
        Command::Catalog { action: CatalogCommand::List } => {
            let names = catalog::names();
            Ok(render(json!({ "command": "catalog", "names": names }), names.iter().map(|n| format!("{n}\n")).collect()))
        }
        Command::Catalog { action: CatalogCommand::Emit { name } } => Ok(catalog::source(name)?.to_string()),
    }
}

/// Error object written on failure.
pub fn error_report(e: &Error) -> String {
    let v = json!({ "error": { "code": e.code(), "exit": e.exit_code(), "message": e.to_string() } });
    let mut s = serde_json::to_string(&v).expect("error serializes");
    s.push('\n');
    s
}

/// Runs a parsed invocation, writing the report or the error object; returns the exit status.
pub fn main_with(cli: &Cli) -> i32 {
    let result = run(cli).and_then(|report| match &cli.common.out {
        Some(path) => std::fs::write(path, report).map_err(Error::from),
        None => {
            print!("{report}");
            Ok(())
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprint!("{}", error_report(&e));
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<String> {
        let mut full = vec!["hpi"];
        full.extend_from_slice(args);
        run(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn check_sweedler() {
        assert_eq!(run_args(&["check", "catalog:sweedler-dual-numbers"]).unwrap(), "action valid; Hopf relations hold\n");
    }

    #[test]
    fn json_reports_parse() {
        let v: Value = serde_json::from_str(&run_args(&["radical", "catalog:sweedler-dual-numbers", "--format", "json"]).unwrap()).unwrap();
        assert_eq!(v["jacobson"]["dim"], 1);
        assert_eq!(v["h_radical"]["dim"], 0);
        let v: Value = serde_json::from_str(&run_args(&["codim-graded", "catalog:m2-z2", "--n", "2", "--format", "json"]).unwrap()).unwrap();
        assert_eq!(v["graded"], v["dual"]);
    }

    #[test]
    fn errors_carry_codes() {
        let e = run_args(&["codim", "catalog:ut2-trivial", "--n", "6", "--row-cap", "10"]).unwrap_err();
        assert_eq!(e.code(), "resource_cap");
        let e = run_args(&["check", "catalog:nope"]).unwrap_err();
        let v: Value = serde_json::from_str(&error_report(&e)).unwrap();
        assert_eq!(v["error"]["exit"], e.exit_code());
        assert!(run_args(&["codim-graded", "catalog:sweedler-dual-numbers", "--n", "2"]).is_err());
    }

    #[test]
    fn emit_matches_catalog() {
        let s = run_args(&["catalog", "emit", "ut2-z2"]).unwrap();
        assert_eq!(Document::from_json(&s).unwrap().to_json(), s);
    }
}
