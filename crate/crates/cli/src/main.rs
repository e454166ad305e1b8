//! `prelie`: enumerate admissible graphs, compose them, factor them, and run
//! the verification sweeps.
//!
//! Graphs are written in the shared text grammar
//! (`G<n>,<m>;v1:L->b1,R->b2;...`) or by name (`b0`, `b1`, `b1^2`, `b2L`,
//! `b2R`, `gamma1..gamma3`, `t2L`, `t2R`, `c2L`, `c2R`, `c2`).
//!
//! Exit codes: 0 success or verified, 1 verification failed, 2 input error.
//! `PRELIE_MAX_NODES` overrides the enumeration resource guard (projected
//! leg-assignment count).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use prelie_core::*;

#[derive(Parser)]
#[command(name = "prelie", version, about = "Exact combinatorics of admissible graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Linear,
    Constant,
}

impl From<KindArg> for GraphClassKind {
    fn from(value: KindArg) -> Self {
        match value {
            KindArg::Linear => GraphClassKind::Linear,
            KindArg::Constant => GraphClassKind::Constant,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for FactorSide {
    fn from(value: SideArg) -> Self {
        match value {
            SideArg::Left => FactorSide::Left,
            SideArg::Right => FactorSide::Right,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List all classes with n internal vertices on m boundary points.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
        #[arg(long = "class", value_enum, default_value = "linear")]
        kind: KindArg,
        #[arg(long)]
        json: bool,
    },
    /// Order of the automorphism group of a graph.
    Aut { graph: String },
    /// Insert the second graph at a boundary position of the first.
    Insert {
        outer: String,
        position: usize,
        inner: String,
        #[arg(long = "class", value_enum, default_value = "linear")]
        kind: KindArg,
        #[arg(long)]
        json: bool,
    },
    /// The graded composition of two graphs.
    Compose {
        left: String,
        right: String,
        #[arg(long = "class", value_enum, default_value = "linear")]
        kind: KindArg,
        #[arg(long)]
        json: bool,
    },
    /// Boundary factorization of a three-boundary graph.
    Factor {
        #[arg(long, value_enum)]
        side: SideArg,
        graph: String,
        #[arg(long)]
        json: bool,
    },
    /// Verification sweeps.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Worked tables.
    Table {
        #[command(subcommand)]
        which: TableCommand,
    },
    /// Closed form against direct enumeration for a wedge product.
    Constcase {
        r: usize,
        s: usize,
        t: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Maurer-Cartan defect per order.
    Mc {
        #[arg(long = "max-order")]
        max_order: usize,
        #[arg(long = "class", value_enum, default_value = "linear")]
        kind: KindArg,
        /// Write the full report to this file as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Unique-factorization sweep.
    Uf {
        #[arg(long = "max-order")]
        max_order: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Normalized-coefficient sweep.
    Coeff {
        #[arg(long = "max-order")]
        max_order: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TableCommand {
    /// The order-two table over three boundary points.
    G23 {
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    // Die quietly on closed pipes instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Accepts a named graph or a grammar string.
fn graph_argument(text: &str) -> Result<AdmissibleGraph, GraphError> {
    if let Ok(g) = named(text) {
        return Ok(g);
    }
    parse_graph(text)
}

fn coeff_string(c: &Coeff) -> String {
    c.to_string()
}

fn run(command: Command) -> Result<ExitCode, GraphError> {
    match command {
        Command::Enumerate { n, m, kind, json } => {
            let set = enumerate(n, m, kind.into())?;
            if json {
                let classes: Vec<_> = set
                    .classes
                    .iter()
                    .map(|e| {
                        serde_json::json!({
                            "graph": graph_string(&e.graph),
                            "aut": e.aut,
                            "class": set.kind.label(),
                        })
                    })
                    .collect();
                let doc = serde_json::json!({
                    "schema": "prelie/1",
                    "class": set.kind.label(),
                    "n": n,
                    "m": m,
                    "count": set.len(),
                    "classes": classes,
                });
                println!("{doc}");
            } else {
                for entry in &set.classes {
                    println!("{} |Aut|={}", graph_string(&entry.graph), entry.aut);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Aut { graph } => {
            let g = graph_argument(&graph)?;
            println!("{}", g.aut_order());
            Ok(ExitCode::SUCCESS)
        }
        Command::Insert {
            outer,
            position,
            inner,
            kind,
            json,
        } => {
            let combo = insert_at_in(
                kind.into(),
                &graph_argument(&outer)?,
                position,
                &graph_argument(&inner)?,
            )?;
            print_combination(&combo, kind.into(), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Compose {
            left,
            right,
            kind,
            json,
        } => {
            let one = Coeff::new(1, 1);
            let x = GraphCombination::from_graph(&graph_argument(&left)?, one);
            let y = GraphCombination::from_graph(&graph_argument(&right)?, one);
            let combo = compose_in(kind.into(), &x, &y)?;
            print_combination(&combo, kind.into(), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Factor { side, graph, json } => {
            let fr = boundary_factor(&graph_argument(&graph)?, side.into())?;
            let alpha = graph_string(&fr.alpha.canonicalize());
            let quotient = graph_string(&fr.quotient.canonicalize());
            if json {
                let doc = serde_json::json!({
                    "schema": "prelie/1",
                    "class": "linear",
                    "side": fr.side.label(),
                    "alpha": alpha,
                    "quotient": quotient,
                });
                println!("{doc}");
            } else {
                println!("alpha:    {alpha}");
                println!("quotient: {quotient}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { what } => run_verify(what),
        Command::Table { which } => run_table(which),
        Command::Constcase { r, s, t, json } => {
            if r + s + t == 0 {
                eprintln!("error: r, s and t must not all be zero");
                return Ok(ExitCode::from(2));
            }
            let report = constant_case_check(r, s, t)?;
            if json {
                let doc = serde_json::json!({
                    "schema": "prelie/1",
                    "class": "constant",
                    "r": r, "s": s, "t": t,
                    "left_count": coeff_string(&report.left_count),
                    "expected_left_count": coeff_string(&report.expected_left_count),
                    "direct_left": coeff_string(&report.direct_left),
                    "direct_right": coeff_string(&report.direct_right),
                    "closed_left": coeff_string(&report.closed_left),
                    "closed_right": coeff_string(&report.closed_right),
                    "consistent": report.consistent(),
                });
                println!("{doc}");
            } else {
                println!(
                    "left count {} (expected {})",
                    report.left_count, report.expected_left_count
                );
                println!(
                    "direct: {} - {} = {}",
                    report.direct_left,
                    report.direct_right,
                    report.direct_difference()
                );
                println!(
                    "closed: {} - {} = {}",
                    report.closed_left,
                    report.closed_right,
                    report.closed_difference()
                );
            }
            Ok(if report.consistent() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn print_combination(combo: &GraphCombination, kind: GraphClassKind, json: bool) {
    if json {
        let doc = serde_json::json!({
            "schema": "prelie/1",
            "class": kind.label(),
            "terms": combo.to_json(),
        });
        println!("{doc}");
    } else {
        println!("{combo}");
    }
}

fn run_verify(what: VerifyCommand) -> Result<ExitCode, GraphError> {
    match what {
        VerifyCommand::Mc {
            max_order,
            kind,
            json,
        } => {
            let kind: GraphClassKind = kind.into();
            let mut all_ok = true;
            let mut orders = Vec::new();
            for n in 0..=max_order {
                let report = mc_defect(n, kind)?;
                let ok = report.pass && report.routes_agree;
                all_ok &= ok;
                println!(
                    "order {n}: {} ({} defect line(s), routes agree: {})",
                    if ok { "ok" } else { "FAILED" },
                    report.defect.len(),
                    report.routes_agree
                );
                if !report.pass {
                    println!("  defect: {}", report.defect);
                }
                orders.push(mc_report_json(&report));
            }
            if let Some(path) = json {
                let doc = serde_json::json!({
                    "schema": "prelie/1",
                    "class": kind.label(),
                    "max_order": max_order,
                    "pass": all_ok,
                    "orders": orders,
                });
                std::fs::write(&path, format!("{doc}\n")).map_err(|e| GraphError::Parse {
                    position: 0,
                    message: format!("cannot write {}: {e}", path.display()),
                })?;
            }
            Ok(exit_flag(all_ok))
        }
        VerifyCommand::Uf { max_order, json } => {
            let sweep = unique_factorization_sweep(max_order)?;
            println!(
                "checked {} summands at orders <= {}: {} violations",
                sweep.checked,
                max_order,
                sweep.violations.len()
            );
            let violations: Vec<_> = sweep
                .violations
                .iter()
                .map(|v| {
                    serde_json::json!({
                        "outer": v.outer,
                        "inner": v.inner,
                        "position": v.position,
                        "summand": v.summand,
                        "alpha": v.alpha,
                        "quotient": v.quotient,
                    })
                })
                .collect();
            if let Some(path) = json {
                let doc = serde_json::json!({
                    "schema": "prelie/1",
                    "class": "linear",
                    "max_order": max_order,
                    "checked": sweep.checked,
                    "violations": violations,
                });
                std::fs::write(&path, format!("{doc}\n")).map_err(|e| GraphError::Parse {
                    position: 0,
                    message: format!("cannot write {}: {e}", path.display()),
                })?;
            }
            Ok(exit_flag(sweep.violations.is_empty()))
        }
        VerifyCommand::Coeff { max_order, json } => {
            let sweep = coefficient_sweep(max_order)?;
            println!(
                "checked {} coefficients at orders <= {}: {} magnitude deviations, {} sign anomalies, {} factorization mismatches",
                sweep.coefficients_checked,
                max_order,
                sweep.magnitude_deviations.len(),
                sweep.sign_anomalies.len(),
                sweep.factorization_mismatches.len()
            );
            for d in &sweep.sign_anomalies {
                println!(
                    "  sign: {} o_{} {} -> {} = {}",
                    d.outer, d.position, d.inner, d.summand, d.normalized
                );
            }
            for m in &sweep.factorization_mismatches {
                println!("  mismatch: {m}");
            }
            if let Some(path) = json {
                let anomalies: Vec<_> = sweep
                    .sign_anomalies
                    .iter()
                    .chain(&sweep.magnitude_deviations)
                    .map(|d| {
                        serde_json::json!({
                            "outer": d.outer,
                            "inner": d.inner,
                            "position": d.position,
                            "summand": d.summand,
                            "normalized": coeff_string(&d.normalized),
                        })
                    })
                    .collect();
                let doc = serde_json::json!({
                    "schema": "prelie/1",
                    "class": "linear",
                    "max_order": max_order,
                    "coefficients_checked": sweep.coefficients_checked,
                    "all_unit": sweep.all_unit,
                    "deviations": anomalies,
                    "factorization_mismatches": sweep.factorization_mismatches,
                });
                std::fs::write(&path, format!("{doc}\n")).map_err(|e| GraphError::Parse {
                    position: 0,
                    message: format!("cannot write {}: {e}", path.display()),
                })?;
            }
            Ok(exit_flag(
                sweep.all_unit && sweep.factorization_mismatches.is_empty(),
            ))
        }
    }
}

fn exit_flag(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn mc_report_json(report: &McReport) -> serde_json::Value {
    let ledger: Vec<_> = report
        .ledger
        .iter()
        .map(|row| {
            serde_json::json!({
                "graph": graph_string(&row.graph),
                "b_left": coeff_string(&row.b_left),
                "b_right": coeff_string(&row.b_right),
                "c_left": coeff_string(&row.c_left),
                "c_right": coeff_string(&row.c_right),
                "coherent": row.coherent(),
            })
        })
        .collect();
    serde_json::json!({
        "order": report.order,
        "class": report.kind.label(),
        "pass": report.pass,
        "routes_agree": report.routes_agree,
        "defect": report.defect.to_json(),
        "ledger": ledger,
    })
}

fn run_table(which: TableCommand) -> Result<ExitCode, GraphError> {
    match which {
        TableCommand::G23 { json } => {
            let report = g23_table()?;
            if json {
                let row_json = |row: &G23Row| {
                    serde_json::json!({
                        "label": row.label,
                        "graph": graph_string(&row.graph),
                        "alpha_left": class_display_name(&row.alpha_left),
                        "quotient_left": class_display_name(&row.quotient_left),
                        "alpha_right": class_display_name(&row.alpha_right),
                        "quotient_right": class_display_name(&row.quotient_right),
                        "c_left": coeff_string(&row.c_left),
                        "c_right": coeff_string(&row.c_right),
                        "c": coeff_string(&row.c()),
                        "class": "linear",
                    })
                };
                let doc = serde_json::json!({
                    "schema": "prelie/1",
                    "class": "linear",
                    "rows": report.rows.iter().map(row_json).collect::<Vec<_>>(),
                    "all_classes": report.all_classes.iter().map(row_json).collect::<Vec<_>>(),
                    "table_count": report.table_count,
                    "enumerated_count": report.enumerated_count,
                    "counts_match": report.counts_match(),
                });
                println!("{doc}");
            } else {
                let mut out = String::new();
                writeln!(
                    out,
                    "{:<14} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}",
                    "graph", "a_L", "G/a_L", "a_R", "G/a_R", "C^L", "C^R", "C"
                )
                .unwrap();
                for row in &report.rows {
                    writeln!(
                        out,
                        "{:<14} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}",
                        row.label,
                        class_display_name(&row.alpha_left),
                        class_display_name(&row.quotient_left),
                        class_display_name(&row.alpha_right),
                        class_display_name(&row.quotient_right),
                        coeff_string(&row.c_left),
                        coeff_string(&row.c_right),
                        coeff_string(&row.c()),
                    )
                    .unwrap();
                }
                writeln!(out).unwrap();
                writeln!(
                    out,
                    "enumerated classes at this order: {} (tabulated: {}; counts match: {})",
                    report.enumerated_count,
                    report.table_count,
                    report.counts_match()
                )
                .unwrap();
                for row in &report.all_classes {
                    if report.rows.iter().all(|r| r.label != row.label) {
                        writeln!(
                            out,
                            "  extra class {}: C^L = {}, C^R = {}",
                            row.label,
                            coeff_string(&row.c_left),
                            coeff_string(&row.c_right)
                        )
                        .unwrap();
                    }
                }
                print!("{out}");
            }
            let all_cancel = report
                .all_classes
                .iter()
                .all(|row| row.c().is_zero());
            Ok(exit_flag(all_cancel))
        }
    }
}
