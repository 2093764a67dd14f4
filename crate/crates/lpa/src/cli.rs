//! The `lpa` command-line front end.
//!
//! Exit codes: 0 when a check passes or an equality holds, 1 when it does
//! not, 2 for unreadable input or bad usage.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::Path as FsPath;

use clap::{Parser, Subcommand};
use lpa_core::cylinder::{check_alpha_identity, check_partial_action_axioms, check_vertex_partition};
use lpa_core::iso::{
    build_graded_iso, check_converse_410, check_corollary_411, check_hypotheses_49, check_hypotheses_bounded, Mode,
};
use lpa_core::{Field, Graph, IsoError, PathSpace, PrimeField, Rationals, Report, RingError, SkewRing};
use serde_json::{json, Value};
use thiserror::Error;

use crate::corpus;
use crate::format::{load_hom, parse_graph, parse_word, write_hom, FormatError};
use crate::json;
use crate::parse::{parse_expr_in, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rationals,
    Prime(u64),
}

fn parse_field(s: &str) -> Result<FieldChoice, String> {
    if s == "q" {
        return Ok(FieldChoice::Rationals);
    }
    let p = s.strip_prefix("fp:").ok_or_else(|| format!("expected `q` or `fp:<prime>`, got `{s}`"))?;
    let p: u64 = p.parse().map_err(|_| format!("`{p}` is not a number"))?;
    PrimeField::new(p).map_err(|e| e.to_string())?;
    Ok(FieldChoice::Prime(p))
}

#[derive(Parser, Debug)]
#[command(name = "lpa", version, about = "Exact computations in Leavitt path algebras of finite graphs")]
pub struct Cli {
    /// Coefficient field: `q` or `fp:<prime>`.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: FieldChoice,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// Graph arguments are file paths, or one of the built-in names `E1`, `E2`,
/// `loop`, `loop-with-exit`, `zigzag` when no such file exists.
#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of an expression.
    Normalize { graph: String, expr: String },
    /// Decide whether two expressions are equal.
    Eq { graph: String, lhs: String, rhs: String },
    /// Check the defining relations on the generators.
    Relations { graph: String },
    /// Check the partial action axioms and the identity for `α` up to a path depth.
    Axioms {
        graph: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Decide condition (L): every cycle has an exit.
    ConditionL { graph: String },
    /// Multiply two groupoid words.
    GroupoidMul { graph: String, lhs: String, rhs: String },
    /// Check that a hom is injective on paths with image all paths.
    HomCheck {
        source: String,
        target: String,
        hom: String,
        #[arg(long, default_value_t = 6)]
        bound: usize,
    },
    /// Build and verify the graded map induced by a hom.
    Iso {
        source: String,
        target: String,
        hom: String,
        #[arg(long, default_value_t = 6)]
        bound: usize,
        /// Skip the injectivity and surjectivity requirement on the hom.
        #[arg(long)]
        unchecked: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{source}\n  {input}\n  {caret}")]
    Parse { source: ParseError, input: String, caret: String },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Iso(#[from] IsoError),
}

/// What a run printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let result = match cli.field {
        FieldChoice::Rationals => execute(&cli, Rationals),
        FieldChoice::Prime(p) => execute(&cli, PrimeField::new(p).expect("checked while parsing")),
    };
    match result {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read_text(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn load_graph(arg: &str) -> Result<Graph, CliError> {
    let builtin = match arg {
        "E1" => Some(corpus::E1),
        "E2" => Some(corpus::E2),
        "loop" => Some(corpus::LOOP),
        "loop-with-exit" => Some(corpus::LOOP_WITH_EXIT),
        "zigzag" => Some(corpus::ZIGZAG),
        _ => None,
    };
    let text = match builtin {
        Some(t) if !FsPath::new(arg).exists() => t.to_string(),
        _ => read_text(arg)?,
    };
    parse_graph(&text).map_err(|source| CliError::Format { path: arg.into(), source })
}

fn parse_in(graph: &Graph, input: &str) -> Result<lpa_core::ExprAst, CliError> {
    parse_expr_in(graph, input).map_err(|source| {
        let caret = format!("{}^", " ".repeat(source.column.saturating_sub(1)));
        CliError::Parse { source, input: input.into(), caret }
    })
}

fn render(as_json: bool, text: String, value: Value) -> String {
    if as_json {
        format!("{}\n", serde_json::to_string_pretty(&value).expect("JSON values serialize"))
    } else {
        text
    }
}

fn verdict(passed: bool) -> i32 {
    if passed {
        0
    } else {
        1
    }
}

fn reports_text(reports: &[&Report]) -> String {
    reports.iter().map(|r| format!("{r}\n")).collect()
}

fn execute<F: Field>(cli: &Cli, field: F) -> Result<(i32, String), CliError> {
    let as_json = cli.json;
    match &cli.command {
        Command::Normalize { graph, expr } => {
            let g = load_graph(graph)?;
            let ring = SkewRing::new(&g, field);
            let x = ring.eval_expression(&parse_in(&g, expr)?)?;
            let text = format!("{}\n{}\n", ring.to_expr(&x), ring.display(&x));
            Ok((0, render(as_json, text, json::element(&ring, &x))))
        }
        Command::Eq { graph, lhs, rhs } => {
            let g = load_graph(graph)?;
            let ring = SkewRing::new(&g, field);
            let x = ring.eval_expression(&parse_in(&g, lhs)?)?;
            let y = ring.eval_expression(&parse_in(&g, rhs)?)?;
            let equal = ring.eq(&x, &y);
            let value = json!({ "equal": equal, "lhs": json::element(&ring, &x), "rhs": json::element(&ring, &y) });
            Ok((verdict(equal), render(as_json, format!("{equal}\n"), value)))
        }
        Command::Relations { graph } => {
            let g = load_graph(graph)?;
            let report = SkewRing::new(&g, field).verify_relations();
            Ok((verdict(report.passed()), render(as_json, format!("{report}\n"), json::report(&report))))
        }
        Command::Axioms { graph, depth } => {
            let g = load_graph(graph)?;
            let space = PathSpace::new(&g, field);
            let reports =
                [check_partial_action_axioms(&g, *depth), check_alpha_identity(&space, *depth), check_vertex_partition(&space)];
            let passed = reports.iter().all(Report::passed);
            let value = Value::Array(reports.iter().map(json::report).collect());
            Ok((verdict(passed), render(as_json, reports_text(&reports.iter().collect::<Vec<_>>()), value)))
        }
        Command::ConditionL { graph } => {
            let g = load_graph(graph)?;
            let cycle = g.cycle_without_exit();
            let names = cycle.as_ref().map(|c| c.iter().map(|&e| g.edge_name(e)).collect::<Vec<_>>().join(" "));
            let text = match &names {
                None => "true\n".to_string(),
                Some(c) => format!("false: cycle {c} has no exit\n"),
            };
            let value = json!({ "condition_l": cycle.is_none(), "cycle_without_exit": names });
            Ok((verdict(cycle.is_none()), render(as_json, text, value)))
        }
        Command::GroupoidMul { graph, lhs, rhs } => {
            let g = load_graph(graph)?;
            let word = |text: &str| parse_word(&g, text).map_err(|source| CliError::Format { path: text.into(), source });
            let (x, y) = (word(lhs)?, word(rhs)?);
            match x.mul(&g, &y) {
                Some(p) => {
                    let in_s = p.classify(&g).is_some();
                    let shown = p.display(&g).to_string();
                    let text = format!("{shown}\nin S: {}\n", if in_s { "yes" } else { "no" });
                    Ok((0, render(as_json, text, json!({ "product": shown, "in_s": in_s }))))
                }
                None => {
                    let text = format!(
                        "undefined: {} ends at {}, {} starts at {}\n",
                        x.display(&g),
                        g.vertex_name(x.range(&g)),
                        y.display(&g),
                        g.vertex_name(y.source())
                    );
                    Ok((1, render(as_json, text, json!({ "product": Value::Null }))))
                }
            }
        }
        Command::HomCheck { source, target, hom, bound } => {
            let (g1, g2) = (load_graph(source)?, load_graph(target)?);
            let (h, _) = load_hom_file(hom, &g1, &g2)?;
            let exact = check_hypotheses_49(&h);
            let bounded = check_hypotheses_bounded(&h, *bound);
            let mut text = hom_text(&h);
            text.push_str(&reports_text(&[&exact, &bounded]));
            let value = json!({ "hom": hom_json(&h), "exact": json::report(&exact), "bounded": json::report(&bounded) });
            Ok((verdict(exact.passed()), render(as_json, text, value)))
        }
        Command::Iso { source, target, hom, bound, unchecked } => {
            let (g1, g2) = (load_graph(source)?, load_graph(target)?);
            let (h, _) = load_hom_file(hom, &g1, &g2)?;
            let mode = if *unchecked { Mode::Unchecked } else { Mode::Strict };
            let w = match build_graded_iso(&h, field, mode) {
                Ok(w) => w,
                Err(IsoError::HypothesesFail(why)) => {
                    let text = format!("{}not built: {why}\n", hom_text(&h));
                    return Ok((1, render(as_json, text, json!({ "hom": hom_json(&h), "built": false, "reason": why }))));
                }
                Err(e) => return Err(e.into()),
            };
            let corollary = check_corollary_411(&w, *bound);
            let converse = check_converse_410(&w, *bound);
            let mut text = hom_text(&h);
            for (g, x) in w.images() {
                writeln!(text, "φ({}) = {}", g.name(&g1), w.target_ring().to_expr(x)).expect("writing to a String");
            }
            text.push_str(&reports_text(&[w.report(), &corollary.report, &converse]));
            let value = json!({
                "hom": hom_json(&h),
                "built": true,
                "images": w.images().map(|(g, x)| json!({ "generator": g.name(&g1), "image": json::element(w.target_ring(), x) })).collect::<Vec<_>>(),
                "witness": json::report(w.report()),
                "corollary": { "hypothesis_holds": corollary.hypothesis_holds, "report": json::report(&corollary.report) },
                "converse": json::report(&converse),
            });
            Ok((verdict(w.is_verified()), render(as_json, text, value)))
        }
    }
}

fn load_hom_file<'a>(
    path: &str,
    g1: &'a Graph,
    g2: &'a Graph,
) -> Result<(lpa_core::GroupoidHom<'a>, Vec<lpa_core::VertexId>), CliError> {
    let text = read_text(path)?;
    load_hom(&text, g1, g2).map_err(|source| CliError::Format { path: path.into(), source })
}

fn hom_text(h: &lpa_core::GroupoidHom<'_>) -> String {
    write_hom(h).lines().map(|l| format!("{}\n", l.replacen("map ", "h(", 1).replacen(" -> ", ") = ", 1))).collect()
}

fn hom_json(h: &lpa_core::GroupoidHom<'_>) -> Value {
    let (g1, g2) = (h.source(), h.target());
    let mut map = serde_json::Map::new();
    for v in g1.vertices() {
        map.insert(g1.vertex_name(v).into(), g2.vertex_name(h.vertex_image(v)).into());
    }
    for e in g1.edges() {
        map.insert(g1.edge_name(e).into(), h.edge_image(e).display(g2).to_string().into());
    }
    Value::Object(map)
}
