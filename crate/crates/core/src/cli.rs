//! Command-line front end. `run` parses arguments, executes one subcommand and
//! returns the process exit status.
//!
//! Exit status: 0 on success, 1 on usage, parse, I/O or domain errors, 2 when a
//! solver runs out of budget.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::propagation::{classify, monitored_fixpoint, zero_forcing_fixpoint};
use crate::reduction::build_reduction;
use crate::solvers::{solve, Parameter, SolverError, SolverOptions, DEFAULT_BUDGET};
use crate::vertex_set::VertexSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "powerdom",
    version,
    about = "Power domination and failed power domination"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a vertex set (PDS, failed, stalled).
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        set: SetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the propagation trace of a vertex set.
    Trace {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        set: SetArgs,
        /// Trace zero forcing (start from S) instead of power domination.
        #[arg(long)]
        zero_forcing: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Power domination number.
    Gammap(SolveArgs),
    /// Failed power domination number.
    Gammabar(SolveArgs),
    /// Zero forcing number.
    Zf(SolveArgs),
    /// Failed zero forcing number.
    Fzf(SolveArgs),
    /// Domination number.
    Dom(SolveArgs),
    /// Independence number.
    Alpha(SolveArgs),
    /// Emit a family member as JSON (default) or as an edge list (--plain).
    Generate {
        #[arg(long, value_name = "SPEC")]
        family: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Closed-form failed power domination number of a family member.
    Oracle {
        #[arg(long, value_name = "SPEC")]
        family: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the independent-set gadget graph.
    Reduce {
        #[command(flatten)]
        graph: GraphArgs,
        /// Pendant path length; defaults to n² (the faithful instance).
        #[arg(long, value_name = "P")]
        path_len: Option<usize>,
        /// Report the target size for an independent set of this size.
        #[arg(long)]
        k: Option<usize>,
        /// Lift this independent set (comma-separated source indices) and classify it.
        #[arg(long, value_name = "IDXS")]
        lift: Option<String>,
        /// Write PREFIX.el and PREFIX.json instead of printing the gadget.
        #[arg(long, value_name = "PREFIX")]
        out: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphArgs {
    /// Edge-list file (`.json` files are read as graph JSON).
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// Family descriptor such as `grid:6,6` or `kmn:5,2`.
    #[arg(long, value_name = "SPEC")]
    pub family: Option<String>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SetArgs {
    /// Comma-separated vertex indices.
    #[arg(long, value_name = "IDXS", allow_hyphen_values = true)]
    pub set: Option<String>,
    /// Comma-separated vertex labels.
    #[arg(long, value_name = "LABELS")]
    pub set_labels: Option<String>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// JSON output (the default).
    #[arg(long, conflicts_with = "plain")]
    pub json: bool,
    /// Human-readable output.
    #[arg(long)]
    pub plain: bool,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Maximum number of predicate evaluations.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, value_name = "W", default_value_t = 1)]
    pub workers: usize,
    /// Deterministic witness and call count.
    #[arg(long)]
    pub canonical: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug)]
enum Failure {
    Error { kind: &'static str, message: String },
    Budget { parameter: Parameter, calls: u64 },
}

fn fail(kind: &'static str, message: impl ToString) -> Failure {
    Failure::Error {
        kind,
        message: message.to_string(),
    }
}

struct Report {
    json: Value,
    plain: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    run_command(&cli.command, stdout, stderr)
}

pub fn run_command(cmd: &Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let plain = output_args(cmd).plain;
    let (code, text) = match execute(cmd) {
        Ok(report) => {
            let text = if plain {
                report.plain
            } else {
                report.json.to_string()
            };
            (EXIT_OK, text)
        }
        Err(Failure::Error { kind, message }) => {
            let _ = writeln!(stderr, "error: {message}");
            let text = if plain {
                String::new()
            } else {
                json!({ "error": { "kind": kind, "message": message } }).to_string()
            };
            (EXIT_ERROR, text)
        }
        Err(Failure::Budget { parameter, calls }) => {
            let _ = writeln!(
                stderr,
                "error: {} search exceeded its budget of {calls} calls",
                parameter.name()
            );
            let text = if plain {
                format!("{}: budget exhausted after {calls} calls", parameter.name())
            } else {
                json!({
                    "parameter": parameter.name(),
                    "budget_exhausted": true,
                    "calls": calls,
                })
                .to_string()
            };
            (EXIT_BUDGET, text)
        }
    };
    if !text.is_empty() {
        let _ = writeln!(stdout, "{}", text.trim_end());
    }
    code
}

fn output_args(cmd: &Command) -> &OutputArgs {
    match cmd {
        Command::Classify { output, .. }
        | Command::Trace { output, .. }
        | Command::Generate { output, .. }
        | Command::Oracle { output, .. }
        | Command::Reduce { output, .. } => output,
        Command::Gammap(a)
        | Command::Gammabar(a)
        | Command::Zf(a)
        | Command::Fzf(a)
        | Command::Dom(a)
        | Command::Alpha(a) => &a.output,
    }
}

fn execute(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Classify { graph, set, .. } => {
            let g = load_graph(graph)?;
            let s = parse_set(&g, set)?;
            let c = classify(&g, &s);
            let plain = format!(
                "is_pds: {}\nis_fpds: {}\nis_spds: {}\nproperly_stalled: {}\nmaximally_stalled: {}\nmonitored: {}\n",
                c.is_pds,
                c.is_fpds,
                c.is_spds,
                c.properly_stalled,
                c.maximally_stalled,
                label_list(&g, &c.monitored)
            );
            Ok(Report {
                json: serde_json::to_value(&c).expect("classification serializes"),
                plain,
            })
        }
        Command::Trace {
            graph,
            set,
            zero_forcing,
            ..
        } => {
            let g = load_graph(graph)?;
            let s = parse_set(&g, set)?;
            let t = if *zero_forcing {
                zero_forcing_fixpoint(&g, &s)
            } else {
                monitored_fixpoint(&g, &s)
            };
            let mut plain = String::new();
            for (i, step) in t.steps.iter().enumerate() {
                plain.push_str(&format!("{i}: {}\n", label_list(&g, step)));
            }
            plain.push_str(&format!("stabilized_at: {}\n", t.stabilized_at));
            Ok(Report {
                json: serde_json::to_value(&t).expect("trace serializes"),
                plain,
            })
        }
        Command::Gammap(a) => run_solver(Parameter::GammaP, a),
        Command::Gammabar(a) => run_solver(Parameter::GammaBarP, a),
        Command::Zf(a) => run_solver(Parameter::ZeroForcingNumber, a),
        Command::Fzf(a) => run_solver(Parameter::FailedZeroForcingNumber, a),
        Command::Dom(a) => run_solver(Parameter::DominationNumber, a),
        Command::Alpha(a) => run_solver(Parameter::IndependenceNumber, a),
        Command::Generate { family, .. } => {
            let spec = parse_family(family)?;
            let g = spec.generate().map_err(|e| fail("domain", e))?;
            Ok(Report {
                json: serde_json::to_value(g.to_json_value()).expect("graph serializes"),
                plain: g.to_edge_list(),
            })
        }
        Command::Oracle { family, .. } => {
            let spec = parse_family(family)?;
            let value = spec.oracle_gamma_bar().map_err(|e| fail("domain", e))?;
            Ok(Report {
                json: json!({ "family": spec.to_string(), "gamma_bar_p": value }),
                plain: format!("{spec}: gamma_bar_p = {value}\n"),
            })
        }
        Command::Reduce {
            graph,
            path_len,
            k,
            lift,
            out,
            ..
        } => reduce(graph, *path_len, *k, lift.as_deref(), out.as_ref()),
    }
}

fn run_solver(parameter: Parameter, a: &SolveArgs) -> Result<Report, Failure> {
    let g = load_graph(&a.graph)?;
    if a.workers == 0 {
        return Err(fail("usage", "--workers must be at least 1"));
    }
    let opts = SolverOptions::default()
        .with_budget(a.budget)
        .with_workers(a.workers)
        .canonical(a.canonical);
    match solve(parameter, &g, &opts) {
        Ok(r) => Ok(Report {
            json: json!({
                "parameter": parameter.name(),
                "value": r.value,
                "witness": r.witness,
                "calls": r.propagation_calls,
                "budget_exhausted": false,
            }),
            plain: format!(
                "{} = {}\nwitness: {}\ncalls: {}\n",
                parameter.name(),
                r.value,
                label_list(&g, &r.witness),
                r.propagation_calls
            ),
        }),
        Err(SolverError::BudgetExceeded { parameter, calls }) => {
            Err(Failure::Budget { parameter, calls })
        }
        Err(e @ SolverError::EmptyGraph) => Err(fail("domain", e)),
    }
}

fn reduce(
    graph: &GraphArgs,
    path_len: Option<usize>,
    k: Option<usize>,
    lift: Option<&str>,
    out: Option<&PathBuf>,
) -> Result<Report, Failure> {
    let g = load_graph(graph)?;
    let red = build_reduction(&g, path_len).map_err(|e| fail("domain", e))?;
    let sidecar = serde_json::to_value(red.sidecar(k)).expect("sidecar serializes");
    let mut report = json!({ "roles": sidecar });
    let mut plain = format!(
        "vertices: {}\nedges: {}\npath_len: {}\nfaithful: {}\nm_of(0): {}\n",
        red.gprime.n(),
        red.gprime.edge_count(),
        red.path_len,
        red.faithful,
        red.m_of(0)
    );
    if let Some(k) = k {
        plain.push_str(&format!("m_of({k}): {}\n", red.m_of(k)));
    }
    if let Some(text) = lift {
        let u = parse_indices(g.n(), text)?;
        let lifted = red
            .lift_independent_set(&u)
            .map_err(|e| fail("domain", e))?;
        let c = classify(&red.gprime, &lifted);
        plain.push_str(&format!(
            "lifted size: {}\nlifted is_spds: {}\nlifted properly_stalled: {}\n",
            lifted.len(),
            c.is_spds,
            c.properly_stalled
        ));
        report["lift"] = json!({
            "set": u,
            "size": lifted.len(),
            "m": red.m_of(u.len()),
            "is_spds": c.is_spds,
            "properly_stalled": c.properly_stalled,
            "witness": lifted,
        });
    }
    match out {
        Some(prefix) => {
            let el = with_suffix(prefix, "el");
            let side = with_suffix(prefix, "json");
            fs::write(&el, red.gprime.to_edge_list())
                .map_err(|e| fail("io", format!("{}: {e}", el.display())))?;
            let sidecar_text =
                serde_json::to_string_pretty(&report["roles"]).expect("sidecar serializes");
            fs::write(&side, sidecar_text + "\n")
                .map_err(|e| fail("io", format!("{}: {e}", side.display())))?;
            report["files"] = json!({
                "edge_list": el.display().to_string(),
                "sidecar": side.display().to_string(),
            });
            plain.push_str(&format!("wrote {} and {}\n", el.display(), side.display()));
        }
        None => {
            report["graph"] =
                serde_json::to_value(red.gprime.to_json_value()).expect("graph serializes");
        }
    }
    Ok(Report {
        json: report,
        plain,
    })
}

fn with_suffix(prefix: &std::path::Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn parse_family(text: &str) -> Result<FamilySpec, Failure> {
    text.parse::<FamilySpec>().map_err(|e| fail("parse", e))
}

fn load_graph(args: &GraphArgs) -> Result<Graph, Failure> {
    match (&args.file, &args.family) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| fail("io", format!("cannot read {}: {e}", path.display())))?;
            let parsed = if path.extension().is_some_and(|x| x == "json") {
                Graph::from_json(&text)
            } else {
                Graph::from_edge_list(&text)
            };
            parsed.map_err(|e| fail("parse", format!("{}: {e}", path.display())))
        }
        (None, Some(spec)) => parse_family(spec)?
            .generate()
            .map_err(|e| fail("domain", e)),
        _ => Err(fail("usage", "give exactly one of --file or --family")),
    }
}

fn parse_indices(n: usize, text: &str) -> Result<VertexSet, Failure> {
    let mut idx = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok
            .parse()
            .map_err(|_| fail("parse", format!("{tok:?} is not a vertex index")))?;
        idx.push(v);
    }
    VertexSet::try_from_indices(n, idx)
        .map_err(|v| fail("domain", format!("vertex {v} is out of range for n = {n}")))
}

fn parse_set(g: &Graph, args: &SetArgs) -> Result<VertexSet, Failure> {
    match (&args.set, &args.set_labels) {
        (Some(text), None) => parse_indices(g.n(), text),
        (None, Some(text)) => {
            if g.labels().is_none() {
                return Err(fail("domain", "--set-labels needs a labeled graph"));
            }
            let mut s = VertexSet::empty(g.n());
            for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let v = g
                    .find_label(tok)
                    .ok_or_else(|| fail("domain", format!("no vertex labeled {tok:?}")))?;
                s.insert(v);
            }
            Ok(s)
        }
        _ => Err(fail("usage", "give exactly one of --set or --set-labels")),
    }
}

fn label_list(g: &Graph, s: &VertexSet) -> String {
    let names: Vec<String> = s.iter().map(|v| g.label(v)).collect();
    format!("{{{}}}", names.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("powerdom").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn parsed(out: &str) -> Value {
        serde_json::from_str(out.trim()).unwrap()
    }

    #[test]
    fn gammabar_of_k52() {
        let (code, out, _) = call(&["gammabar", "--family", "kmn:5,2", "--canonical"]);
        assert_eq!(code, 0);
        let v = parsed(&out);
        assert_eq!(v["value"], 3);
        assert_eq!(v["budget_exhausted"], false);
    }

    #[test]
    fn classify_grid_by_labels() {
        let (code, out, _) = call(&["classify", "--family", "grid:6,6", "--set-labels", "04,01"]);
        assert_eq!(code, 0);
        assert_eq!(parsed(&out)["is_pds"], true);
    }

    #[test]
    fn missing_file_is_an_io_error() {
        let (code, out, err) = call(&["gammabar", "--file", "/nonexistent/graph.el"]);
        assert_eq!(code, 1);
        assert_eq!(parsed(&out)["error"]["kind"], "io");
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn budget_exhaustion_exits_2() {
        let (code, out, _) = call(&["gammabar", "--family", "grid:6,6", "--budget", "1000"]);
        assert_eq!(code, 2);
        let v = parsed(&out);
        assert_eq!(v["budget_exhausted"], true);
        assert_eq!(v["calls"], 1000);
    }

    #[test]
    fn usage_errors_exit_1() {
        assert_eq!(call(&["gammabar"]).0, 1);
        assert_eq!(
            call(&["gammabar", "--family", "path:3", "--file", "x.el"]).0,
            1
        );
        assert_eq!(call(&["classify", "--family", "path:3"]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn domain_errors_exit_1() {
        let (code, out, _) = call(&["oracle", "--family", "ladder:3"]);
        assert_eq!(code, 1);
        assert_eq!(parsed(&out)["error"]["kind"], "domain");
        assert_eq!(call(&["generate", "--family", "cycle:2"]).0, 1);
        assert_eq!(call(&["generate", "--family", "blob:2"]).0, 1);
        assert_eq!(
            call(&["classify", "--family", "path:3", "--set", "0,7"]).0,
            1
        );
        assert_eq!(
            call(&["classify", "--family", "path:3", "--set-labels", "a"]).0,
            1
        );
    }

    #[test]
    fn oracle_and_generate() {
        let (code, out, _) = call(&["oracle", "--family", "ladder:9"]);
        assert_eq!(code, 0);
        assert_eq!(parsed(&out)["gamma_bar_p"], 2);
        let (_, out, _) = call(&["generate", "--family", "path:3", "--plain"]);
        assert_eq!(
            Graph::from_edge_list(&out).unwrap().edges(),
            vec![(0, 1), (1, 2)]
        );
        let (_, out, _) = call(&["generate", "--family", "path:3"]);
        assert_eq!(parsed(&out)["edges"], json!([[0, 1], [1, 2]]));
    }

    #[test]
    fn trace_output() {
        let (_, out, _) = call(&["trace", "--family", "path:3", "--set", "0"]);
        assert_eq!(
            out.trim(),
            r#"{"kind":"power-domination","stabilized_at":1,"steps":[[0,1],[0,1,2]]}"#
        );
        let (_, out, _) = call(&[
            "trace",
            "--family",
            "path:3",
            "--set",
            "0",
            "--zero-forcing",
        ]);
        assert_eq!(parsed(&out)["stabilized_at"], 2);
        let (_, out, _) = call(&["trace", "--family", "path:3", "--set", "0", "--plain"]);
        assert!(out.contains("stabilized_at: 1"));
    }

    #[test]
    fn canonical_output_is_byte_stable() {
        let args = [
            "gammabar",
            "--family",
            "ladder:8",
            "--canonical",
            "--workers",
            "3",
        ];
        let first = call(&args).1;
        for _ in 0..3 {
            assert_eq!(call(&args).1, first);
        }
    }

    #[test]
    fn reduce_with_lift() {
        let dir = tempfile::tempdir().unwrap();
        let el = dir.path().join("src.el");
        fs::write(&el, "4\n0 1\n2 1\n3 1\n2 3\n").unwrap();
        let prefix = dir.path().join("gadget");
        let (code, out, _) = call(&[
            "reduce",
            "--file",
            el.to_str().unwrap(),
            "--k",
            "2",
            "--lift",
            "0,2",
            "--out",
            prefix.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let v = parsed(&out);
        assert_eq!(v["roles"]["vertex_count"], 73);
        assert_eq!(v["roles"]["m_of_k"]["m"], 66);
        assert_eq!(v["lift"]["size"], 66);
        assert_eq!(v["lift"]["properly_stalled"], true);
        let written = fs::read_to_string(dir.path().join("gadget.el")).unwrap();
        assert_eq!(Graph::from_edge_list(&written).unwrap().n(), 73);
        let side: Value =
            serde_json::from_str(&fs::read_to_string(dir.path().join("gadget.json")).unwrap())
                .unwrap();
        assert_eq!(side["hub"], 72);

        let (code, _, _) = call(&["reduce", "--family", "path:2"]);
        assert_eq!(code, 1);
        let (code, _, _) = call(&["reduce", "--family", "path:3", "--lift", "0,1"]);
        assert_eq!(code, 1);
    }
}
