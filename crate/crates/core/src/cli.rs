//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a partial operation has no result
//! (the output is then `none`), 2 on usage or parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::check::{self, CheckConfig};
use crate::error::Error;
use crate::gproduct::GraphProduct;
use crate::ihull::HullElement;

#[derive(Debug, Parser)]
#[command(name = "polygraph", version, about = "Graph products of free monoids and their inverse hulls")]
struct Cli {
    /// Graph description file.
    #[arg(long, short, global = true)]
    graph: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical normal form of a word.
    Nf { word: String },
    /// Whether two words represent the same element.
    Eq { left: String, right: String },
    /// Product of two words.
    Mul { left: String, right: String },
    /// The b with a = b·c.
    Divide { a: String, c: String },
    /// Final v-component and complement.
    Final { vertex: String, word: String },
    /// Least common left multiple.
    Lclm { b: String, c: String },
    /// Highest common left factor.
    Hclf { a: String, b: String },
    /// Inverse-hull operations.
    #[command(subcommand)]
    Ih(IhCommand),
    /// Evaluate a signed word in the inverse hull.
    Eval { word: String },
    /// Graph-group operations.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Defining relations of the inverse hull.
    Present,
    /// Run the property suites against the brute-force oracles.
    Check {
        #[arg(long, default_value_t = CheckConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = CheckConfig::default().max_len)]
        max_len: usize,
        #[arg(long, default_value_t = CheckConfig::default().max_vertices)]
        max_vertices: usize,
    },
}

#[derive(Debug, Subcommand)]
enum IhCommand {
    /// Product of one or more elements.
    Mul {
        #[arg(required = true)]
        elements: Vec<String>,
    },
    Inv { element: String },
    /// Natural partial order.
    Le { s: String, t: String },
    /// Maximal element above a nonzero element.
    Max { element: String },
    Idem { element: String },
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    /// Reduced canonical form of a signed word.
    Nf { word: String },
}

/// Outcome of one command before rendering.
enum Outcome {
    Ok { text: String, json: Value },
    /// Partial operation without a result.
    Empty { text: &'static str, detail: String },
    /// Check run with at least one failing suite.
    Failed { text: String, json: Value },
}

fn ok(text: String) -> Outcome {
    Outcome::Ok {
        json: Value::String(text.clone()),
        text,
    }
}

/// Parses `argv` (program name included), writes the output to `out` and
/// diagnostics to `err`, and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let result = load(&cli).and_then(|gp| execute(&gp, &cli.command));
    let (status, code) = match &result {
        Ok(Outcome::Ok { .. }) => ("ok", 0),
        Ok(Outcome::Empty { .. }) => ("none", 1),
        Ok(Outcome::Failed { .. }) => ("failed", 1),
        Err(_) => ("error", 2),
    };
    let written = match (cli.format, &result) {
        (Format::Text, Ok(Outcome::Ok { text, .. } | Outcome::Failed { text, .. })) => {
            writeln!(out, "{text}")
        }
        (Format::Text, Ok(Outcome::Empty { text, .. })) => writeln!(out, "{text}"),
        (Format::Text, Err(e)) => writeln!(err, "error: {e}"),
        (Format::Json, _) => {
            let (value, detail) = match &result {
                Ok(Outcome::Ok { json, .. } | Outcome::Failed { json, .. }) => (json.clone(), Value::Null),
                Ok(Outcome::Empty { text, detail }) => (json!(text), json!(detail)),
                Err(e) => (Value::Null, json!(e.to_string())),
            };
            let envelope = json!({ "result": value, "status": status, "detail": detail });
            writeln!(out, "{envelope}")
        }
    };
    if written.is_err() {
        return 2;
    }
    code
}

fn load(cli: &Cli) -> Result<GraphProduct, String> {
    let path = cli
        .graph
        .as_ref()
        .ok_or_else(|| "a graph file is required (--graph <FILE>)".to_string())?;
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    GraphProduct::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn execute(gp: &GraphProduct, command: &Command) -> Result<Outcome, String> {
    let text = |e: Error| e.to_string();
    let el = |w: &str| gp.element(w).map_err(text);
    let hull = |w: &str| gp.parse_hull(w).map_err(text);
    let show = |e| gp.format_element(e);
    Ok(match command {
        Command::Nf { word } => ok(show(&el(word)?)),
        Command::Eq { left, right } => bool_outcome(el(left)? == el(right)?),
        Command::Mul { left, right } => ok(show(&gp.multiply(&el(left)?, &el(right)?))),
        Command::Divide { a, c } => match gp.right_divide(&el(a)?, &el(c)?) {
            Ok(b) => ok(show(&b)),
            Err(e) => none(e),
        },
        Command::Final { vertex, word } => {
            let v = gp.graph().vertex(vertex).map_err(text)?;
            let (d, rest) = gp.final_component(&el(word)?, v);
            let d = gp.format_piece(v, &d);
            let rest = show(&rest);
            Outcome::Ok {
                text: format!("{d}\n{rest}"),
                json: json!({ "component": d, "complement": rest }),
            }
        }
        Command::Lclm { b, c } => match gp.lclm(&el(b)?, &el(c)?) {
            Ok(l) => Outcome::Ok {
                text: show(&l.multiple),
                json: json!({
                    "multiple": show(&l.multiple),
                    "left": show(&l.left),
                    "right": show(&l.right),
                }),
            },
            Err(e) => none(e),
        },
        Command::Hclf { a, b } => ok(show(&gp.hclf(&el(a)?, &el(b)?))),
        Command::Ih(cmd) => match cmd {
            IhCommand::Mul { elements } => {
                let mut acc = HullElement::identity();
                for s in elements {
                    acc = gp.hull_multiply(&acc, &hull(s)?);
                }
                ok(gp.format_hull(&acc))
            }
            IhCommand::Inv { element } => ok(gp.format_hull(&hull(element)?.inverse())),
            IhCommand::Le { s, t } => bool_outcome(gp.natural_le(&hull(s)?, &hull(t)?)),
            IhCommand::Max { element } => match gp.max_above(&hull(element)?) {
                Ok(m) => ok(gp.format_hull(&m)),
                Err(e) => none(e),
            },
            IhCommand::Idem { element } => bool_outcome(hull(element)?.is_idempotent()),
        },
        Command::Eval { word } => {
            let w = gp.parse_signed(word).map_err(text)?;
            ok(gp.format_hull(&gp.eval_word(&w)))
        }
        Command::Group(GroupCommand::Nf { word }) => {
            let w = gp.parse_signed(word).map_err(text)?;
            ok(gp.format_group(&gp.group_reduce(&w).map_err(text)?))
        }
        Command::Present => {
            let lines: Vec<String> = gp.presentation().iter().map(|r| gp.format_relation(r)).collect();
            Outcome::Ok {
                text: lines.join("\n"),
                json: json!(lines),
            }
        }
        Command::Check {
            seed,
            max_len,
            max_vertices,
        } => {
            let cfg = CheckConfig {
                seed: *seed,
                max_len: *max_len,
                max_vertices: *max_vertices,
            };
            check_outcome(check::run_all(gp, &cfg))
        }
    })
}

fn bool_outcome(b: bool) -> Outcome {
    Outcome::Ok {
        text: b.to_string(),
        json: Value::Bool(b),
    }
}

fn none(e: Error) -> Outcome {
    Outcome::Empty {
        text: "none",
        detail: e.to_string(),
    }
}

fn check_outcome(suites: Vec<check::SuiteResult>) -> Outcome {
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    for s in &suites {
        let status = if s.skipped {
            "SKIP"
        } else if s.passed() {
            "PASS"
        } else {
            "FAIL"
        };
        lines.push(format!("{:<26} {status} {} cases", s.name, s.cases));
        for f in &s.failures {
            lines.push(format!("    {f}"));
        }
        entries.push(json!({
            "suite": s.name,
            "status": status,
            "cases": s.cases,
            "failures": s.failures,
        }));
    }
    let text = lines.join("\n");
    let json = Value::Array(entries);
    if suites.iter().all(|s| s.passed()) {
        Outcome::Ok { text, json }
    } else {
        Outcome::Failed { text, json }
    }
}
