use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use treenorm::constructions::{FamilySpec, FixtureId};
use treenorm::enumerate::{free_trees, free_trees_filtered};
use treenorm::formulas::{self, Applicability};
use treenorm::graph::Graph;
use treenorm::invariants::{profile, InvariantProfile};
use treenorm::verify::{
    extremal_scan, search_edge_anomalies, verify_theorem, AnomalyRecord, Direction,
    ExtremalReport, Objective, Theorem, TheoremReport, ALL_THEOREMS,
};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "treenorm",
    version,
    about = "Tree normality invariants, extremal families and exhaustive verification",
    after_help = "Exit codes: 0 success, 1 verification discrepancy (with --strict), 2 usage or input error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant profile of a graph read from an edge-list file
    Compute {
        /// Path to an edge-list file (`-` reads standard input)
        #[arg(long)]
        input: PathBuf,
        /// Accepted for script compatibility; output is always JSON
        #[arg(long)]
        json: bool,
    },
    /// Print a named tree family in canonical edge-list form
    Construct {
        /// One of: path, star, comet, dumbbell, balanced_starlike, t_hat,
        /// t_tilde, s_tilde, s_hat, fixture
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        /// Diameter (t_hat, t_tilde) or branch length (balanced_starlike)
        #[arg(long)]
        d: Option<usize>,
        /// Peripheral-vertex count (t_tilde, s_tilde) or branch count
        #[arg(long)]
        k: Option<usize>,
        /// Comet spine length
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Fixture id: fig1, fig2_tree, fig2_plus_edge, fig3
        #[arg(long)]
        id: Option<String>,
    },
    /// Enumerate all non-isomorphic trees of a given order
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        diameter: Option<usize>,
        #[arg(long)]
        peripheral: Option<usize>,
        /// Print only the number of trees
        #[arg(long)]
        count_only: bool,
    },
    /// Evaluate one closed-form bound
    Formula {
        /// One of: norm-t-hat, max-norm-bound, optimal-diameters,
        /// t-tilde-d-range, min-norm-k-peripheral, max-lambda-given-d,
        /// max-lambda-bound, min-lambda-bound
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive extremal scan over all trees of a given order
    Scan {
        #[arg(long)]
        n: usize,
        /// norm, lambda or ecc
        #[arg(long)]
        objective: String,
        /// max or min
        #[arg(long)]
        direction: String,
        #[arg(long)]
        diameter: Option<usize>,
        #[arg(long)]
        peripheral: Option<usize>,
        /// Also write the JSON report to this file (atomically)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify one theorem by exhaustive scan over a range of orders
    Verify {
        /// Theorem id, e.g. thm-norm-global (see --help for the full list)
        #[arg(long)]
        theorem: String,
        /// Order range `A..B` (inclusive) or a single order `N`
        #[arg(long)]
        n: String,
        /// Exit with status 1 if any report carries a discrepancy
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List edge additions that strictly increase the normality sum
    Anomaly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct ProfileDoc {
    schema: u32,
    profile: InvariantProfile,
}

#[derive(Serialize)]
struct ScanDoc {
    schema: u32,
    report: ExtremalReport,
}

#[derive(Serialize)]
struct VerifyDoc {
    schema: u32,
    theorem: String,
    n_lo: usize,
    n_hi: usize,
    discrepancies: usize,
    reports: Vec<TheoremReport>,
}

#[derive(Serialize)]
struct AnomalyDoc {
    schema: u32,
    n: usize,
    count: usize,
    records: Vec<AnomalyRecord>,
}

#[derive(Serialize)]
struct FormulaDoc {
    schema: u32,
    formula: String,
    inputs: FormulaInputs,
    branch: String,
    applies: bool,
    value: serde_json::Value,
}

#[derive(Serialize)]
struct FormulaInputs {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Compute { input, json: _ } => {
            let text = read_input(&input)?;
            let g = Graph::parse_edge_list(&text).map_err(|e| e.to_string())?;
            let p = profile(&g).map_err(|e| e.to_string())?;
            eprintln!(
                "order {}, diameter {}, radius {}, Ecc {}, Norm {}, Lambda {}",
                p.n, p.diameter, p.radius, p.ecc_sum, p.norm_sum, p.lambda_sum
            );
            print_json(&ProfileDoc { schema: SCHEMA, profile: p })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct {
            family,
            n,
            d,
            k,
            r,
            a,
            b,
            id,
        } => {
            let spec = FamilySpec {
                family: Some(family.parse().map_err(err_str)?),
                n,
                d,
                k,
                r,
                a,
                b,
                id: id
                    .map(|s| s.parse::<FixtureId>().map_err(err_str))
                    .transpose()?,
            };
            let g = spec.build().map_err(err_str)?;
            eprintln!("constructed {} with {} vertices", family, g.order());
            print!("{}", g.to_edge_list());
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            n,
            diameter,
            peripheral,
            count_only,
        } => {
            let stream = if diameter.is_none() && peripheral.is_none() {
                free_trees(n).map_err(err_str)?
            } else {
                free_trees_filtered(n, diameter, peripheral).map_err(err_str)?
            };
            if count_only {
                let count = stream.count();
                eprintln!("{count} trees of order {n}");
                println!("{count}");
            } else {
                let blocks: Vec<String> = stream.map(|t| t.to_edge_list()).collect();
                eprintln!("{} trees of order {n}", blocks.len());
                print!("{}", blocks.join("\n"));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Formula { name, n, d, k } => {
            let doc = eval_formula(&name, n, d, k)?;
            eprintln!(
                "{} applies={} value={}",
                doc.formula, doc.applies, doc.value
            );
            print_json(&doc)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            n,
            objective,
            direction,
            diameter,
            peripheral,
            out,
        } => {
            let objective: Objective = objective.parse().map_err(err_str)?;
            let direction: Direction = direction.parse().map_err(err_str)?;
            let report =
                extremal_scan(n, objective, direction, diameter, peripheral).map_err(err_str)?;
            eprintln!(
                "scan n={n}: optimum {:?}, {} witness(es)",
                report.optimum,
                report.witnesses.len()
            );
            let doc = ScanDoc { schema: SCHEMA, report };
            emit(&doc, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            n,
            strict,
            out,
        } => {
            let theorem: Theorem = theorem.parse().map_err(|e: treenorm::ParamError| {
                let ids: Vec<&str> = ALL_THEOREMS.iter().map(|t| t.id()).collect();
                format!("{e}\nknown theorem ids: {}", ids.join(", "))
            })?;
            let (lo, hi) = parse_range(&n)?;
            let reports = verify_theorem(theorem, lo, hi).map_err(err_str)?;
            let discrepancies = reports.iter().filter(|r| r.discrepancy()).count();
            eprintln!(
                "{theorem} over n={lo}..{hi}: {} report(s), {} discrepancy(ies)",
                reports.len(),
                discrepancies
            );
            let doc = VerifyDoc {
                schema: SCHEMA,
                theorem: theorem.id().to_string(),
                n_lo: lo,
                n_hi: hi,
                discrepancies,
                reports,
            };
            emit(&doc, out.as_deref())?;
            if strict && discrepancies > 0 {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Anomaly { n, out } => {
            let records = search_edge_anomalies(n).map_err(err_str)?;
            eprintln!("{} anomaly record(s) at n={n}", records.len());
            let doc = AnomalyDoc {
                schema: SCHEMA,
                n,
                count: records.len(),
                records,
            };
            emit(&doc, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn err_str(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn read_input(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::Read::read_to_string(&mut io::stdin(), &mut buf).map_err(err_str)?;
        return Ok(buf);
    }
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| format!("bad order {t:?} in range {s:?}"))
    };
    if let Some((a, b)) = s.split_once("..") {
        let (lo, hi) = (parse(a)?, parse(b)?);
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok((lo, hi))
    } else {
        let n = parse(s)?;
        Ok((n, n))
    }
}

fn eval_formula(
    name: &str,
    n: usize,
    d: Option<usize>,
    k: Option<usize>,
) -> Result<FormulaDoc, String> {
    let need_d = || d.ok_or_else(|| format!("formula {name} requires --d"));
    let need_k = || k.ok_or_else(|| format!("formula {name} requires --k"));
    let inputs = FormulaInputs { n, d, k };
    let mut branch = "closed_form".to_string();
    let mut applies = true;
    let value: serde_json::Value = match name {
        "norm-t-hat" => {
            let r = formulas::eval_norm_t_hat(n, need_d()?).map_err(err_str)?;
            branch = serde_json::to_value(r.branch)
                .unwrap()
                .as_str()
                .unwrap()
                .to_string();
            applies = r.applicability == Applicability::Applies;
            match r.value {
                Some(v) => v.into(),
                None => serde_json::Value::Null,
            }
        }
        "max-norm-bound" => formulas::max_norm_bound(n).map_err(err_str)?.into(),
        "optimal-diameters" => formulas::optimal_diameters(n).map_err(err_str)?.into(),
        "t-tilde-d-range" => {
            let (lo, hi) = formulas::t_tilde_optimal_d_range(n, need_k()?).map_err(err_str)?;
            vec![lo, hi].into()
        }
        "min-norm-k-peripheral" => formulas::min_norm_k_peripheral(n, need_k()?)
            .map_err(err_str)?
            .into(),
        "max-lambda-given-d" => {
            let d = need_d()?;
            branch = if d % 2 == 0 { "even" } else { "odd" }.to_string();
            formulas::max_lambda_given_d(n, d).map_err(err_str)?.into()
        }
        "max-lambda-bound" => formulas::max_lambda_bound(n).map_err(err_str)?.into(),
        "min-lambda-bound" => formulas::min_lambda_bound(n).map_err(err_str)?.into(),
        other => {
            return Err(format!(
                "unknown formula {other:?}; known: norm-t-hat, max-norm-bound, \
                 optimal-diameters, t-tilde-d-range, min-norm-k-peripheral, \
                 max-lambda-given-d, max-lambda-bound, min-lambda-bound"
            ))
        }
    };
    Ok(FormulaDoc {
        schema: SCHEMA,
        formula: name.to_string(),
        inputs,
        branch,
        applies,
        value,
    })
}

fn print_json<T: Serialize>(doc: &T) -> Result<(), String> {
    let text = serde_json::to_string_pretty(doc).map_err(err_str)?;
    println!("{text}");
    Ok(())
}

/// Prints the JSON document and, when requested, writes it to a file via a
/// temporary sibling plus rename.
fn emit<T: Serialize>(doc: &T, out: Option<&Path>) -> Result<(), String> {
    let text = serde_json::to_string_pretty(doc).map_err(err_str)?;
    println!("{text}");
    if let Some(path) = out {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = PathBuf::from(tmp);
        fs::write(&tmp, format!("{text}\n")).map_err(|e| format!("{}: {e}", tmp.display()))?;
        fs::rename(&tmp, path).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}
