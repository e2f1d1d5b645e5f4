//! The `chromaglue` command line.

use std::ffi::OsString;
use std::io::Write;

use anyhow::{anyhow, Context};
use chromaglue::esym::{PositivityMode, ESym};
use chromaglue::expr::{Built, GraphExpr};
use chromaglue::forest::{ft_matrix, trace_q, trace_x, x_forest, x_from_matrix};
use chromaglue::graph::{Graph, MultiDigraph};
use chromaglue::json::{document, esym_to_json, matrix_to_json, poly_to_json, tableau_to_json};
use chromaglue::oracle::chromatic_e;
use chromaglue::tableau::{hikita_x, syt_enumerate};
use chromaglue::verify::{run_suite, Outcome, Suite, Summary};
use chromaglue::{Error, Exec, Limits};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "chromaglue", version, about = "Chromatic symmetric functions of glued graphs")]
struct Cli {
    /// Run every kernel on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    /// Largest vertex count accepted by the colouring oracle.
    #[arg(long, global = true, default_value_t = Limits::default().oracle_vertices)]
    oracle_max: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    Oracle,
    Forest,
    Matrix,
    Hikita,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// e-expansion of X_G or X_G(x;q).
    X {
        expr: String,
        /// Keep the q-grading.
        #[arg(long)]
        q: bool,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Columns 1..=C of the forest-triple matrix.
    Matrix {
        expr: String,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        q: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Trace of the forest-triple matrix.
    Trace {
        expr: String,
        #[arg(long)]
        q: bool,
        /// Compare trace F_G(q) with X of the directed circular gluing.
        #[arg(long)]
        directed: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Hikita tableaux with their coefficients.
    Hikita {
        expr: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// e-positivity of X_G, with a witness when it fails.
    Epos {
        expr: String,
        #[arg(long)]
        q: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// All natural unit interval graphs on N vertices.
    NuigEnum {
        n: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run a verification suite.
    Verify {
        /// gluing, trace, samemats, qtrace, subgraph, closedforms or oracle-cross.
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Largest vertex count to enumerate; each suite has its own default.
        #[arg(long)]
        max_n: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Exit {
    code: i32,
    error: anyhow::Error,
}

fn classify(e: anyhow::Error) -> Exit {
    let code = match e.downcast_ref::<Error>() {
        Some(err) if err.is_invariant_violation() => EXIT_INVARIANT,
        _ => EXIT_USAGE,
    };
    Exit { code, error: e }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let ctx = Ctx {
        exec: if cli.sequential { Exec::Sequential } else { Exec::Parallel },
        limits: Limits {
            oracle_vertices: cli.oracle_max,
            ..Limits::default()
        },
    };
    match ctx.dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Exit { code, error }) => {
            let _ = writeln!(err, "error: {error:#}");
            code
        }
    }
}

struct Ctx {
    exec: Exec,
    limits: Limits,
}

type Res<T> = Result<T, Exit>;

fn parse_expr(s: &str) -> Res<GraphExpr> {
    GraphExpr::parse(s).map_err(|e| Exit {
        code: EXIT_USAGE,
        error: anyhow!(e).context(format!("cannot parse graph expression {s:?}")),
    })
}

fn simple(e: &GraphExpr, what: &str) -> Res<Graph> {
    match e.build().map_err(|x| classify(x.into()))? {
        Built::Simple(g) => Ok(g),
        Built::Multi(_) => Err(Exit {
            code: EXIT_USAGE,
            error: anyhow!("{what} needs a simple graph, not a circular gluing"),
        }),
    }
}

fn emit(out: &mut dyn Write, text: impl std::fmt::Display) -> Res<()> {
    writeln!(out, "{text}")
        .context("writing output")
        .map_err(|e| Exit { code: EXIT_USAGE, error: e })
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Res<()> {
    emit(out, serde_json::to_string(v).expect("JSON values serialise"))
}

trait Lift<T> {
    fn lift(self) -> Res<T>;
}

impl<T> Lift<T> for chromaglue::Result<T> {
    fn lift(self) -> Res<T> {
        self.map_err(|e| classify(e.into()))
    }
}

fn oracle_x(b: &Built, with_q: bool, limits: &Limits, exec: Exec) -> chromaglue::Result<ESym> {
    match b {
        Built::Simple(g) => chromatic_e(g, with_q, limits, exec),
        Built::Multi(m) => chromatic_e::<MultiDigraph>(m, with_q, limits, exec),
    }
}

impl Ctx {
    fn dispatch(&self, cmd: Command, out: &mut dyn Write) -> Res<i32> {
        match cmd {
            Command::X { expr, q, method, format } => self.x(&expr, q, method, format.format, out),
            Command::Matrix { expr, cols, q, format } => self.matrix(&expr, cols, q, format.format, out),
            Command::Trace { expr, q, directed, format } => self.trace(&expr, q, directed, format.format, out),
            Command::Hikita { expr, format } => self.hikita(&expr, format.format, out),
            Command::Epos { expr, q, format } => self.epos(&expr, q, format.format, out),
            Command::NuigEnum { n, format } => self.nuig_enum(n, format.format, out),
            Command::Verify { suite, max_n, format } => self.verify(suite, max_n, format.format, out),
        }
    }

    fn x(&self, s: &str, q: bool, method: Method, format: Format, out: &mut dyn Write) -> Res<i32> {
        let e = parse_expr(s)?;
        let (l, x) = (&self.limits, self.exec);
        let value = match method {
            Method::Oracle => oracle_x(&e.build().lift()?, q, l, x).lift()?,
            Method::Forest => x_forest(&simple(&e, "--method forest")?, q, l, x).lift()?,
            Method::Matrix => x_from_matrix(&simple(&e, "--method matrix")?, q, l, x).lift()?,
            Method::Hikita => {
                let h = hikita_x(&simple(&e, "--method hikita")?, l, x).lift()?;
                if q {
                    h
                } else {
                    h.eval_q1().lift()?
                }
            }
        };
        match format {
            Format::Text => emit(out, &value)?,
            Format::Json => emit_json(
                out,
                &document(
                    "x",
                    json!({
                        "graph": e.to_string(),
                        "q": q,
                        "method": format!("{method:?}").to_lowercase(),
                        "value": esym_to_json(&value),
                    }),
                ),
            )?,
        }
        Ok(EXIT_OK)
    }

    fn matrix(&self, s: &str, cols: usize, q: bool, format: Format, out: &mut dyn Write) -> Res<i32> {
        let e = parse_expr(s)?;
        let g = simple(&e, "matrix")?;
        if cols == 0 {
            return Err(Exit {
                code: EXIT_USAGE,
                error: anyhow!("--cols must be at least 1"),
            });
        }
        let m = ft_matrix(&g, cols, q, &self.limits, self.exec).lift()?;
        match format {
            Format::Text => {
                for (i, row) in m.row_slices().iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(ESym::to_string).collect();
                    emit(out, format!("{}: {}", i + 1, cells.join(" | ")))?;
                }
            }
            Format::Json => emit_json(out, &matrix_to_json(&e.to_string(), &m))?,
        }
        Ok(EXIT_OK)
    }

    fn trace(&self, s: &str, q: bool, directed: bool, format: Format, out: &mut dyn Write) -> Res<i32> {
        let e = parse_expr(s)?;
        let g = simple(&e, "trace")?;
        let (l, x) = (&self.limits, self.exec);
        let with_q = q || directed;
        let value = if with_q { trace_q(&g, l, x) } else { trace_x(&g, l, x) }.lift()?;
        let oracle = if directed {
            Some(chromatic_e(&g.directed_circle_glue().lift()?, true, l, x).lift()?)
        } else {
            None
        };
        let agree = oracle.as_ref().map(|o| *o == value);
        match format {
            Format::Text => {
                emit(out, &value)?;
                if let Some(o) = &oracle {
                    emit(out, format!("directed circular gluing: {o}"))?;
                    emit(out, if agree == Some(true) { "agree" } else { "DISAGREE" })?;
                }
            }
            Format::Json => {
                let mut v = json!({
                    "graph": e.to_string(),
                    "q": with_q,
                    "directed": directed,
                    "value": esym_to_json(&value),
                });
                if let Some(o) = &oracle {
                    v["oracle"] = esym_to_json(o);
                    v["agree"] = json!(agree);
                }
                emit_json(out, &document("trace", v))?;
            }
        }
        Ok(if agree == Some(false) { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
    }

    fn hikita(&self, s: &str, format: Format, out: &mut dyn Write) -> Res<i32> {
        let e = parse_expr(s)?;
        let g = simple(&e, "hikita")?;
        g.require_nuig().lift()?;
        let tabs = syt_enumerate(&g, &self.limits).lift()?;
        let total = hikita_x(&g, &self.limits, self.exec).lift()?;
        match format {
            Format::Text => {
                for (t, c) in &tabs {
                    emit(out, format!("{t}  e{}  {c}", t.shape().label()))?;
                }
                emit(out, format!("{} tableaux", tabs.len()))?;
                emit(out, format!("X = {total}"))?;
            }
            Format::Json => {
                let list: Vec<Value> = tabs
                    .iter()
                    .map(|(t, c)| {
                        let mut v = tableau_to_json(t);
                        v["shape"] = json!(t.shape().parts());
                        v["coeff"] = json!(c.to_string());
                        v["num"] = poly_to_json(&c.numerator());
                        v["den"] = poly_to_json(&c.denominator());
                        v
                    })
                    .collect();
                emit_json(
                    out,
                    &document(
                        "hikita",
                        json!({"graph": e.to_string(), "tableaux": list, "value": esym_to_json(&total)}),
                    ),
                )?;
            }
        }
        Ok(EXIT_OK)
    }

    fn epos(&self, s: &str, q: bool, format: Format, out: &mut dyn Write) -> Res<i32> {
        let e = parse_expr(s)?;
        let value = oracle_x(&e.build().lift()?, q, &self.limits, self.exec).lift()?;
        let mode = if q { PositivityMode::Coefficientwise } else { PositivityMode::AtQ1 };
        let verdict = value.is_e_positive(mode).lift()?;
        match format {
            Format::Text => {
                emit(out, &value)?;
                match &verdict.witness {
                    None => emit(out, "e-positive")?,
                    Some((p, c)) => {
                        let w = ESym::term(p.clone(), c.clone());
                        emit(out, format!("not e-positive: {w}"))?
                    }
                }
            }
            Format::Json => {
                let witness = verdict
                    .witness
                    .as_ref()
                    .map(|(p, c)| esym_to_json(&ESym::term(p.clone(), c.clone())));
                emit_json(
                    out,
                    &document(
                        "epos",
                        json!({
                            "graph": e.to_string(),
                            "q": q,
                            "positive": verdict.positive,
                            "witness": witness,
                            "value": esym_to_json(&value),
                        }),
                    ),
                )?;
            }
        }
        Ok(EXIT_OK)
    }

    fn nuig_enum(&self, n: usize, format: Format, out: &mut dyn Write) -> Res<i32> {
        if n == 0 || n > 9 {
            return Err(Exit {
                code: EXIT_USAGE,
                error: anyhow!("N must lie in 1..=9"),
            });
        }
        let gs = Graph::enumerate_nuigs(n).lift()?;
        match format {
            Format::Text => {
                for g in &gs {
                    emit(out, g)?;
                }
            }
            Format::Json => {
                let list: Vec<Value> = gs
                    .iter()
                    .map(|g| json!({"graph": g.literal(), "hessenberg": g.hessenberg()}))
                    .collect();
                emit_json(out, &document("nuigs", json!({"n": n, "count": gs.len(), "graphs": list})))?;
            }
        }
        Ok(EXIT_OK)
    }

    fn verify(&self, suite: Suite, max_n: Option<usize>, format: Format, out: &mut dyn Write) -> Res<i32> {
        let max_n = max_n.unwrap_or_else(|| suite.default_max_n());
        let mut io_error = None;
        let summary = run_suite(suite, max_n, &self.limits, self.exec, |r| {
            let line = match &r.outcome {
                Outcome::Passed => return,
                Outcome::Failed(m) => {
                    let doc = document(
                        "counterexample",
                        json!({"suite": suite.name(), "index": r.index, "case": r.case, "mismatches": m}),
                    );
                    let doc = serde_json::to_string(&doc).expect("JSON values serialise");
                    match format {
                        Format::Json => doc,
                        Format::Text => format!("counterexample {doc}"),
                    }
                }
                Outcome::Errored(e) => match format {
                    Format::Json => serde_json::to_string(&document(
                        "case-error",
                        json!({
                            "suite": suite.name(),
                            "index": r.index,
                            "case": r.case,
                            "message": e.to_string(),
                            "invariant": e.is_invariant_violation(),
                        }),
                    ))
                    .expect("JSON values serialise"),
                    Format::Text => format!("error #{} {}: {e}", r.index, r.case),
                },
            };
            if io_error.is_none() {
                if let Err(e) = writeln!(out, "{line}") {
                    io_error = Some(e);
                }
            }
        })
        .lift()?;
        if let Some(e) = io_error {
            return Err(Exit {
                code: EXIT_USAGE,
                error: anyhow!(e).context("writing output"),
            });
        }
        match format {
            Format::Text => emit(
                out,
                format!(
                    "{}: {} ({} cases up to n = {}): {} passed, {} counterexamples, {} errors",
                    suite.name(),
                    suite.describe(),
                    summary.cases,
                    max_n,
                    summary.passed,
                    summary.counterexamples,
                    summary.errors
                ),
            )?,
            Format::Json => {
                emit_json(out, &document("summary", serde_json::to_value(&summary).expect("summary")))?
            }
        }
        Ok(summary_code(&summary))
    }
}

/// Exit code of a verification run: counterexamples first, then invariant
/// violations, then other errors.
pub fn summary_code(summary: &Summary) -> i32 {
    if summary.counterexamples > 0 {
        EXIT_COUNTEREXAMPLE
    } else if summary.invariant_violations > 0 {
        EXIT_INVARIANT
    } else if summary.errors > 0 {
        EXIT_USAGE
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(counterexamples: usize, invariant_violations: usize, errors: usize) -> Summary {
        Summary {
            cases: 10,
            passed: 10 - counterexamples - errors,
            counterexamples,
            errors,
            invariant_violations,
            suite: "gluing".into(),
            max_n: 4,
        }
    }

    #[test]
    fn verify_exit_precedence() {
        assert_eq!(summary_code(&summary(0, 0, 0)), EXIT_OK);
        assert_eq!(summary_code(&summary(0, 0, 2)), EXIT_USAGE);
        assert_eq!(summary_code(&summary(0, 1, 1)), EXIT_INVARIANT);
        assert_eq!(summary_code(&summary(1, 1, 1)), EXIT_COUNTEREXAMPLE);
    }

    #[test]
    fn library_errors_map_to_codes() {
        let inv = Error::InvariantViolation("column sum".into());
        assert_eq!(classify(inv.into()).code, EXIT_INVARIANT);
        let parse = GraphExpr::parse("P0").unwrap_err();
        assert_eq!(classify(parse.into()).code, EXIT_USAGE);
        assert_eq!(classify(anyhow!("other")).code, EXIT_USAGE);
    }
}
