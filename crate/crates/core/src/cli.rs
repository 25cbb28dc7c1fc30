//! Command-line front end. [`run`] is pure apart from reading fan files, so
//! the binary and the tests share it.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bases::BaseSpace;
use crate::catalog::{families, find_family, FibrationFamily};
use crate::error::{BaseError, CatalogError};
use crate::ltp::{table1_sweep, table3, table3_render, verdict, LtpVerdict, Table3Cell};
use crate::toric::{self, load_fan, Fan3, FAN_DIR_ENV};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "ltp-hodge",
    version,
    about = "Hodge numbers and LTP verdicts for elliptic fibrations"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Directory with fan files `01.json` .. `18.json`.
    #[arg(long, global = true, env = FAN_DIR_ENV)]
    pub fan_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the registered fibration families.
    Families,
    /// Run the LTP comparison for one family over one base.
    Verify {
        /// Family id, as listed by `families`.
        #[arg(long)]
        family: String,
        /// Base descriptor; defaults to the family's usual base.
        #[arg(long)]
        base: Option<String>,
    },
    /// Run all fourteen Tate-form families over a rational surface.
    Sweep {
        #[arg(long, default_value = "rational:K2=9")]
        base: String,
    },
    /// 4-fold Hodge numbers of the E8/E7/E6 families over fans 1-4.
    Table3,
    /// Inspect a built-in toric base.
    Toric {
        #[command(subcommand)]
        action: ToricCommand,
    },
    /// Families where LTP is expected to fail.
    Counterexamples,
}

#[derive(Debug, Subcommand)]
pub enum ToricCommand {
    /// Rays and cones of fan `id` (1..=18).
    Show { id: usize },
    /// Anticanonical degree `c1^3`.
    Degree { id: usize },
    /// Hodge diamond of the toric 3-fold.
    Hodge { id: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

const VERDICT_HEADER: [&str; 10] = [
    "family", "base", "dim", "p", "q", "lhs", "rhs", "source", "equal", "holds",
];

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("write to memory");
    for row in rows {
        w.write_record(&row).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
}

fn json_string<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn render_verdicts(verdicts: &[LtpVerdict], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for v in verdicts {
                out.push_str(&v.to_string());
            }
            let expected = verdicts.iter().filter(|v| v.as_expected()).count();
            if verdicts.len() > 1 {
                out.push_str(&format!(
                    "{expected}/{} verdicts as expected\n",
                    verdicts.len()
                ));
            }
            out
        }
        Format::Json if verdicts.len() == 1 => json_string(&verdicts[0]),
        Format::Json => json_string(verdicts),
        Format::Csv => csv_string(
            &VERDICT_HEADER,
            verdicts.iter().flat_map(|v| {
                v.compared.iter().map(move |c| {
                    vec![
                        v.family.clone(),
                        v.base.clone(),
                        v.total_dim.to_string(),
                        c.p.to_string(),
                        c.q.to_string(),
                        c.lhs.to_string(),
                        c.rhs.to_string(),
                        c.source.to_string(),
                        c.equal().to_string(),
                        v.holds.to_string(),
                    ]
                })
            }),
        ),
    }
}

fn verdict_outcome(verdicts: &[LtpVerdict], format: Format) -> Outcome {
    let code = if verdicts.iter().all(LtpVerdict::as_expected) {
        0
    } else {
        1
    };
    Outcome {
        code,
        ..Outcome::ok(render_verdicts(verdicts, format))
    }
}

fn parse_base(descriptor: &str, fan_dir: Option<&std::path::Path>) -> Result<BaseSpace, BaseError> {
    if let (Some(dir), Some(id)) = (fan_dir, descriptor.trim().strip_prefix("toric:")) {
        let id: usize = id
            .parse()
            .map_err(|_| BaseError::Parse(descriptor.into()))?;
        let fan = load_fan(id, Some(dir))?;
        toric::validate_fan(&fan)?;
        return Ok(BaseSpace::Toric3 { id: Some(id), fan });
    }
    descriptor.parse()
}

fn families_output(all: &[FibrationFamily], format: Format) -> String {
    let records: Vec<_> = all.iter().map(FibrationFamily::record).collect();
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    match format {
        Format::Json => json_string(&records),
        Format::Csv => csv_string(
            &[
                "id",
                "kind",
                "gauge",
                "rank",
                "n",
                "gamma",
                "mw_rank",
                "mw_torsion",
                "tate_orders",
                "cy_total_space",
            ],
            records.iter().map(|r| {
                vec![
                    r.id.clone(),
                    r.kind.to_string(),
                    opt(r.gauge.clone()),
                    opt(r.rank.map(|v| v.to_string())),
                    r.n.to_string(),
                    r.gamma.to_string(),
                    r.mw_rank.to_string(),
                    r.mw_torsion.to_string(),
                    opt(r.tate_orders.map(|o| o.to_string())),
                    r.cy_total_space.to_string(),
                ]
            }),
        ),
        Format::Text => {
            let mut out = format!(
                "{:<16} {:<14} {:<8} {:>4} {:>3} {:>5} {:>3} {:<5} {}\n",
                "id",
                "kind",
                "gauge",
                "rank",
                "n",
                "gamma",
                "mw",
                "tors",
                "tate orders (a1,a2,a3,a4,a6)"
            );
            for r in &records {
                out.push_str(&format!(
                    "{:<16} {:<14} {:<8} {:>4} {:>3} {:>5} {:>3} {:<5} {}\n",
                    r.id,
                    r.kind,
                    opt(r.gauge.clone()),
                    opt(r.rank.map(|v| v.to_string())),
                    r.n,
                    r.gamma,
                    r.mw_rank,
                    r.mw_torsion.to_string(),
                    opt(r.tate_orders.map(|o| o.to_string())),
                ));
            }
            out
        }
    }
}

fn table3_output(cells: &[Table3Cell], format: Format) -> String {
    match format {
        Format::Text => table3_render(cells),
        Format::Json => json_string(cells),
        Format::Csv => csv_string(
            &["kind", "base_id", "base_name", "h11", "h31", "h22", "chi"],
            cells.iter().map(|c| {
                vec![
                    c.kind.clone(),
                    c.base_id.to_string(),
                    c.base_name.clone(),
                    c.h11.to_string(),
                    c.h31.to_string(),
                    c.h22.to_string(),
                    c.chi.to_string(),
                ]
            }),
        ),
    }
}

fn toric_output(
    action: &ToricCommand,
    fan: &Fan3,
    format: Format,
) -> Result<String, crate::error::ToricError> {
    match action {
        ToricCommand::Show { id } => {
            let report = toric::validate_fan(fan)?;
            Ok(match format {
                Format::Json => json_string(fan),
                Format::Csv => csv_string(
                    &["kind", "index", "a", "b", "c"],
                    fan.rays
                        .iter()
                        .enumerate()
                        .map(|(i, r)| ("ray", i, r.map(|x| x.to_string())))
                        .chain(
                            fan.cones
                                .iter()
                                .enumerate()
                                .map(|(i, c)| ("cone", i, c.map(|x| x.to_string()))),
                        )
                        .map(|(kind, i, [a, b, c])| vec![kind.into(), i.to_string(), a, b, c]),
                ),
                Format::Text => {
                    let mut out = format!("fan ({id}): {}\n", fan.name);
                    out.push_str(&format!(
                        "{} rays, {} two-dimensional cones, {} maximal cones\n",
                        report.rays, report.two_cones, report.max_cones
                    ));
                    for (i, r) in fan.rays.iter().enumerate() {
                        out.push_str(&format!("  v{i} = ({}, {}, {})\n", r[0], r[1], r[2]));
                    }
                    for c in &fan.cones {
                        out.push_str(&format!("  cone <v{}, v{}, v{}>\n", c[0], c[1], c[2]));
                    }
                    out
                }
            })
        }
        ToricCommand::Degree { id } => {
            let degree = toric::anticanonical_degree(fan)?;
            Ok(match format {
                Format::Text => format!("{degree}\n"),
                Format::Json => json_string(&serde_json::json!({
                    "id": id, "name": fan.name, "degree": degree
                })),
                Format::Csv => csv_string(
                    &["id", "name", "degree"],
                    [vec![id.to_string(), fan.name.clone(), degree.to_string()]],
                ),
            })
        }
        ToricCommand::Hodge { .. } => {
            let d = toric::toric_hodge(fan)?;
            Ok(match format {
                Format::Text => format!("{d}\n"),
                Format::Json => json_string(&d),
                Format::Csv => csv_string(
                    &["p", "q", "h"],
                    (0..=d.dim()).flat_map(|p| {
                        let d = &d;
                        (0..=d.dim())
                            .map(move |q| vec![p.to_string(), q.to_string(), d.h(p, q).to_string()])
                    }),
                ),
            })
        }
    }
}

fn catalog_failure(e: CatalogError) -> Outcome {
    Outcome::usage(e)
}

/// Executes a parsed command and returns exit code plus rendered output.
///
/// Exit code 2 marks a usage error (unknown family, bad base, incompatible
/// pair), 1 a verdict that differs from its documented outcome.
pub fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    let fan_dir = cli.fan_dir.as_deref();
    match &cli.command {
        Command::Families => Outcome::ok(families_output(&families(), format)),
        Command::Verify { family, base } => {
            let family = match find_family(family) {
                Ok(f) => f,
                Err(e) => {
                    let ids: Vec<String> = families().into_iter().map(|f| f.id).collect();
                    return Outcome::usage(format!("{e}; known families: {}", ids.join(", ")));
                }
            };
            let base = match base {
                Some(b) => match parse_base(b, fan_dir) {
                    Ok(b) => b,
                    Err(e) => return Outcome::usage(e),
                },
                None => family.default_base(),
            };
            match verdict(&family, &base) {
                Ok(v) => verdict_outcome(&[v], format),
                Err(e) => catalog_failure(e),
            }
        }
        Command::Sweep { base } => {
            let base = match parse_base(base, fan_dir) {
                Ok(b) => b,
                Err(e) => return Outcome::usage(e),
            };
            match table1_sweep(&base) {
                Ok(vs) => verdict_outcome(&vs, format),
                Err(e) => catalog_failure(e),
            }
        }
        Command::Table3 => match table3() {
            Ok(cells) => Outcome::ok(table3_output(&cells, format)),
            Err(e) => catalog_failure(e),
        },
        Command::Toric { action } => {
            let (ToricCommand::Show { id }
            | ToricCommand::Degree { id }
            | ToricCommand::Hodge { id }) = action;
            let fan = match load_fan(*id, fan_dir) {
                Ok(f) => f,
                Err(e) => return Outcome::usage(e),
            };
            match toric_output(action, &fan, format) {
                Ok(s) => Outcome::ok(s),
                Err(e) => Outcome::usage(e),
            }
        }
        Command::Counterexamples => {
            let mut verdicts = Vec::new();
            let mut cases: Vec<(String, BaseSpace)> = (1..=3)
                .map(|n| (format!("k3xp{n}"), BaseSpace::p1_x_pn(n)))
                .collect();
            cases.extend((0..=5).map(|g| ("surface-product".to_string(), BaseSpace::curve(g))));
            for (id, base) in cases {
                let family = find_family(&id).expect("registered counterexample");
                match verdict(&family, &base) {
                    Ok(v) => verdicts.push(v),
                    Err(e) => return catalog_failure(e),
                }
            }
            verdict_outcome(&verdicts, format)
        }
    }
}
