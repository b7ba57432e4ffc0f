//! `ocrc`: coefficient tables, potentials and verification suites.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ocrc_core::algebra::rat::format_rat;
use ocrc_core::crc::ClosedCaps;
use ocrc_core::hodge::{closed_orbifold_H, hodge_table};
use ocrc_core::potentials::{
    open_potential_orbifold, open_potential_resolution, orbifold_caps, resolution_caps,
};
use ocrc_core::report::{csv_field, Report};
use ocrc_core::suites::{self, AllConfig, RouteCaps, DEFAULT_SEED};
use ocrc_core::vertex::g_power_coefficients;
use ocrc_core::TruncSeries;

#[derive(Parser, Debug)]
#[command(
    name = "ocrc",
    version,
    about = "Exact open and closed crepant resolution checks for [C^3/Z_2]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(clap::Args, Debug, Clone)]
struct Common {
    #[arg(long, global = true, default_value_t = 4)]
    max_winding: u32,
    #[arg(long, global = true, default_value_t = 4)]
    max_boundary: u32,
    /// Largest power of the analytic variable kept. Defaults to 12, or 8 for the closed check.
    #[arg(long, global = true)]
    order: Option<u32>,
    /// Degree cap for Q, P and U.
    #[arg(long, global = true, default_value_t = 6)]
    degree: u32,
    #[arg(long, global = true, default_value_t = 4)]
    max_tree_edges: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Also list passing rows.
    #[arg(long, global = true)]
    verbose: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hodge integral values, or the closed orbifold series H(z) with --series.
    Hodge {
        #[arg(long, default_value_t = 5)]
        max_genus: u64,
        #[arg(long, default_value_t = 5)]
        max_i: u64,
        #[arg(long)]
        series: bool,
    },
    /// Coefficients of G^n for n up to --n and x^k for k up to --upto.
    Gtable {
        #[arg(long, default_value_t = 10)]
        n: u32,
        #[arg(long, default_value_t = 9)]
        upto: usize,
    },
    /// Expand an open potential.
    Potential {
        #[arg(value_enum)]
        side: PotentialSide,
    },
    /// Run a verification suite.
    Check {
        #[arg(value_enum)]
        name: CheckName,
        #[arg(long, default_value_t = 5)]
        max_genus: u64,
        #[arg(long, default_value_t = 5)]
        max_d: u32,
        #[arg(long, default_value_t = 4)]
        max_k: u32,
        #[arg(long, default_value_t = 3)]
        max_label: u32,
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PotentialSide {
    Resolution,
    Orbifold,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CheckName {
    Tphi,
    Gpowers,
    Glemma,
    Gluing,
    OrbGluing,
    Routes,
    Ocrc,
    Ccrc,
    Series,
    All,
}

fn emit(common: &Common, text: String) -> Result<(), ExitCode> {
    match &common.out {
        Some(p) => std::fs::write(p, text).map_err(|e| {
            eprintln!("ocrc: cannot write {}: {e}", p.display());
            ExitCode::from(2)
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render_series(s: &TruncSeries, f: Format) -> String {
    match f {
        Format::Json => s.to_json() + "\n",
        Format::Csv => s.to_csv(),
        Format::Text => s.to_text() + "\n",
    }
}

fn render_report(r: &Report, f: Format) -> String {
    match f {
        Format::Json => r.to_json() + "\n",
        Format::Csv => r.to_csv(),
        Format::Text => {
            let mut out = r.to_text();
            let failed = r.failures().count();
            out.push_str(&match failed {
                0 => format!("PASS ({} rows)\n", r.rows.len()),
                n => format!("FAIL ({n} of {} rows)\n", r.rows.len()),
            });
            out
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    let c = &cli.common;
    let core = |e: ocrc_core::Error| {
        eprintln!("ocrc: {e}");
        ExitCode::from(2)
    };
    let routes = RouteCaps {
        max_winding: c.max_winding,
        max_boundary: c.max_boundary,
        max_q: c.degree,
        order: c.order.unwrap_or(12) + 1,
    };
    match cli.command {
        Command::Hodge {
            max_genus,
            max_i,
            series,
        } => {
            if series {
                let h = closed_orbifold_H(c.order.unwrap_or(12) + 1).map_err(core)?;
                emit(c, render_series(&h, c.format))?;
                return Ok(ExitCode::SUCCESS);
            }
            let rows = hodge_table(max_genus, max_i);
            let text = match c.format {
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|r| serde_json::json!({"g": r.g, "i": r.i, "mbar": r.mbar, "value": format_rat(&r.value)}))
                        .collect();
                    serde_json::to_string_pretty(&v).expect("json") + "\n"
                }
                Format::Csv => {
                    let mut s = String::from("g,i,mbar,value\n");
                    for r in &rows {
                        let m: Vec<String> = r.mbar.iter().map(u64::to_string).collect();
                        s.push_str(&format!(
                            "{},{},{},{}\n",
                            r.g,
                            r.i,
                            csv_field(&m.join(" ")),
                            format_rat(&r.value)
                        ));
                    }
                    s
                }
                Format::Text => rows
                    .iter()
                    .map(|r| {
                        format!(
                            "g={} i={} m={:?} {}\n",
                            r.g,
                            r.i,
                            r.mbar,
                            format_rat(&r.value)
                        )
                    })
                    .collect(),
            };
            emit(c, text)?;
        }
        Command::Gtable { n, upto } => {
            let grid: Vec<Vec<String>> = (1..=n)
                .map(|k| {
                    g_power_coefficients(k, upto)
                        .iter()
                        .map(format_rat)
                        .collect()
                })
                .collect();
            let text = match c.format {
                Format::Json => serde_json::to_string_pretty(&grid).expect("json") + "\n",
                Format::Csv => {
                    let mut s = String::from("n");
                    (0..=upto).for_each(|k| s.push_str(&format!(",x^{k}")));
                    s.push('\n');
                    for (i, row) in grid.iter().enumerate() {
                        s.push_str(&format!("{},{}\n", i + 1, row.join(",")));
                    }
                    s
                }
                Format::Text => grid
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        format!(
                            "G^{:<3}{}\n",
                            i + 1,
                            row.iter().map(|v| format!("{v:>8}")).collect::<String>()
                        )
                    })
                    .collect(),
            };
            emit(c, text)?;
        }
        Command::Potential { side } => {
            let s = match side {
                PotentialSide::Resolution => {
                    let caps = resolution_caps(c.max_winding, c.max_boundary, c.degree);
                    open_potential_resolution(c.max_winding, c.max_boundary)
                        .to_series(&caps)
                        .map_err(core)?
                }
                PotentialSide::Orbifold => open_potential_orbifold(&orbifold_caps(
                    c.max_winding,
                    c.max_boundary,
                    routes.order,
                )),
            };
            emit(c, render_series(&s, c.format))?;
        }
        Command::Check {
            name,
            max_genus,
            max_d,
            max_k,
            max_label,
            samples,
        } => {
            let closed = ClosedCaps {
                max_edges: c.max_tree_edges,
                max_label,
                z_order: c.order.unwrap_or(8),
                max_w: c.max_winding,
                max_p: c.degree,
            };
            let report = match name {
                CheckName::Tphi => suites::suite_tphi(max_genus, 5, c.verbose),
                CheckName::Gpowers => suites::suite_gpowers(),
                CheckName::Glemma => suites::suite_glemma(10),
                CheckName::Gluing => {
                    suites::suite_gluing(max_d, max_k, samples, c.seed, c.verbose).map_err(core)?
                }
                CheckName::OrbGluing => suites::suite_orb_gluing(max_d.max(8)).map_err(core)?,
                CheckName::Routes => suites::suite_routes(routes, c.verbose).map_err(core)?,
                CheckName::Ocrc => suites::suite_ocrc(routes, c.verbose).map_err(core)?,
                CheckName::Ccrc => suites::suite_ccrc(closed, c.verbose).map_err(core)?,
                CheckName::Series => suites::suite_series(c.seed, 200).map_err(core)?,
                CheckName::All => suites::suite_all(&AllConfig {
                    max_genus,
                    routes,
                    closed,
                    max_d,
                    max_k,
                    seed: c.seed,
                    verbose: c.verbose,
                })
                .map_err(core)?,
            };
            emit(c, render_report(&report, c.format))?;
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) | Err(code) => code,
    }
}
