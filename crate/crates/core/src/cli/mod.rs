//! The `greenfn` command line.
//!
//! ```text
//! greenfn [--max-n N] green-table  --n N [--q P/Q] [--format json|csv] [--output PATH]
//! greenfn [--max-n N] verify <ortho1|ortho2|projector|equivalence|all> --n N [--q P/Q] [--format ..] [--output ..]
//! greenfn [--max-n N] orders       --n N [--format ..] [--output ..]
//! greenfn stack-points --group SPEC [--automorphism SPEC] [--action SPEC] [--format ..] [--output ..]
//! ```
//!
//! Group specs: `cyclic:n`, `symmetric:n` (n ≤ 5), `dihedral:n` (order 2n).
//! Automorphism specs: `identity`, `inversion` (abelian groups only),
//! `conjugation:<index>` (`g ↦ c g c⁻¹`), `perm:<i0,i1,...>` (images of the
//! elements `0, 1, ...`). Action specs: `point`, `self-translation`,
//! `self-conjugation`, `file:<path>` (see
//! [`FiniteActionWithFrobenius::from_table_text`]).
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage
//! errors.

pub mod output;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::dl_calculus::{GreenData, VerificationReport};
use crate::error::Error;
use crate::exact_algebra::{Field, Partition};
use crate::group_data::{
    gl_order, normalizer_fixed_order, parse_automorphism, parse_group, torus_order,
    unipotent_centralizer_order, unipotent_class_size, weyl_f_centralizer_order,
};
use crate::stack_points::FiniteActionWithFrobenius;
use crate::symmetric_functions::{green_table_bounded, DEFAULT_MAX_N};

use output::{partition_json, partitions_json, Exact, OutputDocument};

#[derive(Debug, Parser)]
#[command(name = "greenfn", version, about = "Exact Green functions of GL_n(F_q)")]
pub struct Cli {
    /// Largest n accepted by table and verification commands.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Green polynomials Q^mu_rho(q), rows mu, columns rho.
    GreenTable {
        #[arg(long)]
        n: usize,
        /// Evaluate at this rational q instead of printing polynomials.
        #[arg(long)]
        q: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exact checks of the orthogonality relations and their equivalence.
    Verify {
        #[arg(value_enum)]
        which: Which,
        #[arg(long)]
        n: usize,
        /// Check the identities specialized at this rational q.
        #[arg(long)]
        q: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Group, centralizer, torus and normalizer orders.
    Orders {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Strata of the Frobenius-fixed points of a finite quotient [Z/H].
    StackPoints {
        /// cyclic:n, symmetric:n or dihedral:n.
        #[arg(long)]
        group: String,
        /// identity, inversion, conjugation:i or perm:i0,i1,...
        #[arg(long, default_value = "identity")]
        automorphism: String,
        /// point, self-translation, self-conjugation or file:PATH.
        #[arg(long, default_value = "point")]
        action: String,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, clap::Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Ortho1,
    Ortho2,
    Projector,
    Equivalence,
    All,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::Ortho1 => "ortho1",
            Which::Ortho2 => "ortho2",
            Which::Projector => "projector",
            Which::Equivalence => "equivalence",
            Which::All => "all",
        }
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Rendered output of a command and whether its checks passed.
struct Rendered {
    text: String,
    passed: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let out = match &cli.command {
        Command::GreenTable { out, .. }
        | Command::Verify { out, .. }
        | Command::Orders { out, .. }
        | Command::StackPoints { out, .. } => out.output.clone(),
    };
    match execute(&cli) {
        Ok(rendered) => {
            let code = if rendered.passed { 0 } else { 1 };
            match out {
                Some(path) => match std::fs::write(&path, &rendered.text) {
                    Ok(()) => Outcome { stdout: String::new(), stderr: String::new(), code },
                    Err(e) => usage(format!("cannot write {}: {e}", path.display())),
                },
                None => Outcome { stdout: rendered.text, stderr: String::new(), code },
            }
        }
        Err(Error::Internal(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: internal error: {msg}\n"),
            code: 1,
        },
        Err(e) => usage(e.to_string()),
    }
}

fn usage(msg: String) -> Outcome {
    Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: 2 }
}

fn execute(cli: &Cli) -> crate::Result<Rendered> {
    match &cli.command {
        Command::GreenTable { n, q, out } => green_table(*n, cli.max_n, q.as_deref(), out.format),
        Command::Verify { which, n, q, out } => {
            let q = q.as_deref().map(parse_q).transpose()?;
            let params = json!({
                "which": which.name(),
                "n": n,
                "max_n": cli.max_n,
                "q": q.as_ref().map(|q| q.to_string()),
                "format": format_name(out.format),
            });
            match q {
                None => verify(*which, &GreenData::symbolic(*n, cli.max_n)?, params, out.format),
                Some(q) => verify(*which, &GreenData::specialized(*n, cli.max_n, &q)?, params, out.format),
            }
        }
        Command::Orders { n, out } => orders(*n, cli.max_n, out.format),
        Command::StackPoints { group, automorphism, action, out } => {
            stack_points(group, automorphism, action, out.format)
        }
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Csv => "csv",
    }
}

fn parse_q(s: &str) -> crate::Result<BigRational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| Error::Parse(format!("q must be an exact rational p/q, got `{s}`")))
}

fn check_n(n: usize, max_n: usize) -> crate::Result<()> {
    if n == 0 {
        Err(Error::EmptyRank)
    } else if n > max_n {
        Err(Error::BoundExceeded { n, max: max_n })
    } else {
        Ok(())
    }
}

fn csv_text(rows: Vec<Vec<String>>) -> crate::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).map_err(|e| Error::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

fn green_table(n: usize, max_n: usize, q: Option<&str>, format: Format) -> crate::Result<Rendered> {
    check_n(n, max_n)?;
    let q = q.map(parse_q).transpose()?;
    let table = green_table_bounded(n, max_n)?;
    let cells: Vec<Vec<(Value, String)>> = table
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| match &q {
                    None => (p.to_json(), p.to_cell()),
                    Some(q) => {
                        let v = p.eval(q);
                        (v.to_json(), v.to_cell())
                    }
                })
                .collect()
        })
        .collect();
    let labels = table.labels();
    let text = match format {
        Format::Json => OutputDocument {
            command: "green-table".into(),
            params: json!({ "n": n, "max_n": max_n, "q": q.as_ref().map(|q| q.to_string()), "format": "json" }),
            labels: json!({ "mu": partitions_json(labels), "rho": partitions_json(labels) }),
            payload: json!({
                "entries": cells.iter().map(|r| r.iter().map(|c| c.0.clone()).collect::<Vec<_>>()).collect::<Vec<_>>()
            }),
            summary: json!({ "dim": labels.len(), "mode": if q.is_some() { "evaluated" } else { "symbolic" } }),
        }
        .to_json(),
        Format::Csv => {
            let mut rows = vec![std::iter::once("mu\\rho".to_string())
                .chain(labels.iter().map(Partition::to_string))
                .collect()];
            for (mu, row) in labels.iter().zip(&cells) {
                rows.push(std::iter::once(mu.to_string()).chain(row.iter().map(|c| c.1.clone())).collect());
            }
            csv_text(rows)?
        }
    };
    Ok(Rendered { text, passed: true })
}

fn verify<F: Field + Exact>(
    which: Which,
    data: &GreenData<F>,
    params: Value,
    format: Format,
) -> crate::Result<Rendered> {
    let report = match which {
        Which::Ortho1 => VerificationReport::new(data.n(), vec![data.verify_first_orthogonality()?]),
        Which::Ortho2 => VerificationReport::new(data.n(), vec![data.verify_second_orthogonality()?]),
        Which::Projector => data.projector_check()?,
        Which::Equivalence => data.transform_first_to_second()?,
        Which::All => data.verify_all()?,
    };
    let passed = report.passed();
    let text = match format {
        Format::Json => {
            let identities: Vec<Value> = report
                .identities
                .iter()
                .map(|id| {
                    json!({
                        "name": id.name,
                        "statement": id.statement,
                        "passed": id.passed(),
                        "pairs": id.checks.iter().map(|c| json!({
                            "row": partition_json(&c.row),
                            "col": partition_json(&c.col),
                            "passed": c.passed,
                            "expected": c.expected.to_json(),
                            "actual": c.actual.to_json(),
                            "residual": c.residual.to_json(),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            OutputDocument {
                command: "verify".into(),
                params,
                labels: json!({ "partitions": partitions_json(data.labels()) }),
                payload: json!({ "identities": identities }),
                summary: json!({
                    "passed": passed,
                    "pairs": report.pair_count(),
                    "failures": report.failure_count(),
                    "identities": report.identities.iter()
                        .map(|id| json!({ "name": id.name, "passed": id.passed() }))
                        .collect::<Vec<_>>(),
                }),
            }
            .to_json()
        }
        Format::Csv => {
            let mut rows = vec![["identity", "row", "col", "passed", "expected", "actual", "residual"]
                .map(String::from)
                .to_vec()];
            for id in &report.identities {
                for c in &id.checks {
                    rows.push(vec![
                        id.name.clone(),
                        c.row.to_string(),
                        c.col.to_string(),
                        c.passed.to_string(),
                        c.expected.to_cell(),
                        c.actual.to_cell(),
                        c.residual.to_cell(),
                    ]);
                }
            }
            csv_text(rows)?
        }
    };
    Ok(Rendered { text, passed })
}

fn orders(n: usize, max_n: usize, format: Format) -> crate::Result<Rendered> {
    check_n(n, max_n)?;
    let labels = crate::exact_algebra::partition_enumerate(n);
    let gl = gl_order(n);
    let rows = labels
        .iter()
        .map(|p| {
            Ok([
                unipotent_centralizer_order(p),
                unipotent_class_size(p)?,
                torus_order(p),
                weyl_f_centralizer_order(p),
                normalizer_fixed_order(p),
            ])
        })
        .collect::<crate::Result<Vec<_>>>()?;
    const COLUMNS: [&str; 5] = [
        "unipotent_centralizer",
        "unipotent_class_size",
        "torus",
        "weyl_centralizer",
        "normalizer",
    ];
    let text = match format {
        Format::Json => OutputDocument {
            command: "orders".into(),
            params: json!({ "n": n, "max_n": max_n, "format": "json" }),
            labels: json!({ "partitions": partitions_json(&labels) }),
            payload: json!({
                "gl_order": gl.to_json(),
                "per_partition": labels.iter().zip(&rows).map(|(p, r)| {
                    let mut entry = serde_json::Map::new();
                    entry.insert("partition".into(), partition_json(p));
                    for (name, v) in COLUMNS.iter().zip(r) {
                        entry.insert((*name).into(), v.to_json());
                    }
                    Value::Object(entry)
                }).collect::<Vec<_>>(),
            }),
            summary: json!({ "classes": labels.len() }),
        }
        .to_json(),
        Format::Csv => {
            let mut out = vec![std::iter::once("partition")
                .chain(COLUMNS)
                .chain(std::iter::once("gl_order"))
                .map(String::from)
                .collect()];
            for (p, r) in labels.iter().zip(&rows) {
                out.push(
                    std::iter::once(p.to_string())
                        .chain(r.iter().map(Exact::to_cell))
                        .chain(std::iter::once(gl.to_cell()))
                        .collect(),
                );
            }
            csv_text(out)?
        }
    };
    Ok(Rendered { text, passed: true })
}

fn stack_points(group: &str, automorphism: &str, action: &str, format: Format) -> crate::Result<Rendered> {
    let g = parse_automorphism(parse_group(group)?, automorphism)?;
    let a = match action.trim() {
        "point" => FiniteActionWithFrobenius::point(g),
        "self-translation" => FiniteActionWithFrobenius::self_translation(g),
        "self-conjugation" => FiniteActionWithFrobenius::self_conjugation(g),
        other => match other.strip_prefix("file:") {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("cannot read action file {path}: {e}")))?;
                FiniteActionWithFrobenius::from_table_text(g, &text)?
            }
            None => return Err(Error::Parse(format!("unknown action `{other}`"))),
        },
    };
    let d = a.decompose()?;
    let mass = d.groupoid_mass();
    let average = a.element_averaged_mass();
    let mass_ok = mass == average;
    let classes_ok = d.class_equation_holds();
    let grp = a.group().group();
    let text = match format {
        Format::Json => OutputDocument {
            command: "stack-points".into(),
            params: json!({ "group": group, "automorphism": automorphism, "action": action, "format": "json" }),
            labels: json!({
                "representatives": d.strata().iter().map(|s| grp.label(s.representative)).collect::<Vec<_>>()
            }),
            payload: json!({
                "group_order": grp.order(),
                "set_size": a.set_size(),
                "strata": d.strata().iter().map(|s| json!({
                    "representative": s.representative,
                    "class_size": s.class_size,
                    "fixed_points": s.fixed.len(),
                    "centralizer_order": s.centralizer.len(),
                    "orbits": s.orbits.len(),
                    "mass": s.mass().to_json(),
                })).collect::<Vec<_>>(),
                "function_space_dim": d.function_space().len(),
            }),
            summary: json!({
                "strata": d.strata().len(),
                "mass": mass.to_json(),
                "element_average": average.to_json(),
                "mass_formula": mass_ok,
                "class_equation": classes_ok,
                "passed": mass_ok && classes_ok,
            }),
        }
        .to_json(),
        Format::Csv => {
            let mut rows = vec![[
                "representative",
                "label",
                "class_size",
                "fixed_points",
                "centralizer_order",
                "orbits",
                "mass",
            ]
            .map(String::from)
            .to_vec()];
            for s in d.strata() {
                rows.push(vec![
                    s.representative.to_string(),
                    grp.label(s.representative).to_string(),
                    s.class_size.to_string(),
                    s.fixed.len().to_string(),
                    s.centralizer.len().to_string(),
                    s.orbits.len().to_string(),
                    s.mass().to_cell(),
                ]);
            }
            csv_text(rows)?
        }
    };
    Ok(Rendered { text, passed: mass_ok && classes_ok })
}
