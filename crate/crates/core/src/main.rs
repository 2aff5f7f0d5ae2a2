use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use maximin_core::analysis::Analysis;
use maximin_core::dominance::{check_all, CheckOutcome, CheckRecord};
use maximin_core::dynamics::{self, Rule};
use maximin_core::extensions::{self, EquilibriumParams, ExtensionParams};
use maximin_core::{benchmark, census, format, report, Error};

#[derive(Parser)]
#[command(name = "maximin", version, about = "Exact maximin, minimax and Nash analysis of bimatrix games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Test hook: report a theorem violation regardless of the result.
    #[arg(long, global = true, hide = true)]
    inject_fault: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a game file and check every characterization result on it.
    Analyze {
        path: PathBuf,
        /// Comma-separated rules, e.g. `nash,maximin,minimax` or `nash=y,maximin=z`.
        #[arg(long)]
        rules: Option<String>,
        /// Rule names compared as M,N in the population conditions.
        /// Defaults to `maximin,nash` when both are listed.
        #[arg(long)]
        compare: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Append actions that move the game into a dominance class.
    Extend {
        path: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// JSON parameters (inline or a file path) replacing the canonical ones.
        #[arg(long)]
        params: Option<String>,
        /// Write the extended game here; the certificate goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all strict ordinal symmetric 3x3 games.
    Census {
        /// Directory for table1.csv, table2.csv (and raw_counts.csv).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        /// Also emit exact labeled and unlabeled counts.
        #[arg(long)]
        raw: bool,
    },
    /// Solve the classic 2x2 games and compare with the expected table.
    Classics,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Maximin,
    Equilibrium,
}

enum Failure {
    Input(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn analyze(path: &Path, rules: Option<&str>, compare: Option<&str>, out: Option<&Path>, fault: bool) -> Result<(), Failure> {
    let game = format::read_game(path)?;
    let a = Analysis::new(&game);
    let mut props = check_all(&a);
    if fault {
        props.records.push(CheckRecord { check: "injected_fault", subject: "game".into(), outcome: CheckOutcome::Failed("injected".into()) });
    }
    let mut doc = report::analysis(&a, &props);
    if let Some(list) = rules {
        let parsed = list.split(',').map(|r| Rule::parse(r, &game)).collect::<Result<Vec<_>, _>>()?;
        let resolved = dynamics::resolve_all(&game, &parsed)?;
        let induced = dynamics::induced_rule_game(&game, &resolved)?;
        let find = |name: &str| resolved.iter().find(|r| r.name() == name);
        let pair = match compare {
            Some(c) => {
                let (m, n) = c.split_once(',').ok_or_else(|| Failure::Input("--compare expects M,N".into()))?;
                let m = find(m.trim()).ok_or_else(|| Failure::Input(format!("--compare: no rule named {m:?}")))?;
                let n = find(n.trim()).ok_or_else(|| Failure::Input(format!("--compare: no rule named {n:?}")))?;
                Some((m, n))
            }
            None => find("maximin").zip(find("nash")),
        };
        let evo = match pair {
            Some((m, n)) if game.is_symmetric() => Some(dynamics::evo_conditions(&game, m, n)?),
            Some(_) if compare.is_some() => return Err(Failure::Input("population conditions need a symmetric game".into())),
            _ => None,
        };
        doc["rule_dynamics"] = report::rules(&game, &resolved, &induced, evo.as_ref());
    }
    emit(&pretty(&doc), out)?;
    if !props.all_passed() {
        let names: Vec<_> = props.failures().map(|f| format!("{} ({})", f.check, f.subject)).collect();
        return Err(Failure::Violation(format!("theorem check failed: {}", names.join(", "))));
    }
    Ok(())
}

fn read_params<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, Failure> {
    let text = if Path::new(arg).is_file() {
        fs::read_to_string(arg).map_err(|e| Failure::Input(format!("cannot read {arg}: {e}")))?
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("invalid parameters: {e}")))
}

fn extend(path: &Path, mode: Mode, params: Option<&str>, out: Option<&Path>, fault: bool) -> Result<(), Failure> {
    let game = format::read_game(path)?;
    let res = match mode {
        Mode::Maximin => {
            let p: ExtensionParams = match params {
                Some(s) => read_params(s)?,
                None => extensions::canonical_params(&game),
            };
            extensions::maximin_extension(&game, &p)?
        }
        Mode::Equilibrium => {
            let p: EquilibriumParams = match params {
                Some(s) => read_params(s)?,
                None => extensions::canonical_equilibrium_params(&game),
            };
            extensions::equilibrium_extension_with(&game, &p)?
        }
    };
    let doc = report::extension(&res);
    match out {
        Some(p) => {
            emit(&format::write_game(&res.extended), Some(p))?;
            emit(&pretty(&doc["certificate"]), None)?;
        }
        None => emit(&pretty(&doc), None)?,
    }
    if fault || !res.certificate.holds() {
        return Err(Failure::Violation("extension certificate failed".into()));
    }
    Ok(())
}

fn run_census(out: Option<&Path>, threads: Option<usize>, raw: bool) -> Result<(), Failure> {
    let r = census::run_census(threads);
    let mut files = vec![("table1.csv", r.render_table1()), ("table2.csv", r.render_table2())];
    if raw {
        files.push(("raw_counts.csv", r.render_raw()));
    }
    match out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("cannot create {}: {e}", dir.display())))?;
            for (name, text) in &files {
                emit(text, Some(&dir.join(name)))?;
            }
        }
        None => {
            let joined: Vec<&str> = files.iter().map(|(_, t)| t.as_str()).collect();
            emit(&joined.join("\n"), None)?;
        }
    }
    Ok(())
}

fn classics(fault: bool) -> Result<(), Failure> {
    let mut bad = Vec::new();
    for o in benchmark::run() {
        let list = |v: &[_]| v.iter().map(benchmark::render_pq).collect::<Vec<_>>().join("; ");
        let status = if o.mismatches.is_empty() && !fault { "ok" } else { "MISMATCH" };
        println!("{}", o.name);
        println!("  nash:    {}", list(&o.equilibria));
        println!("  maximin: {}", list(&o.maximin));
        println!("  minimax: {}", list(&o.minimax));
        println!("  {status}");
        if status != "ok" {
            bad.push(o.name);
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Violation(format!("benchmark mismatch: {}", bad.join(", "))))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fault = cli.inject_fault;
    let result = match &cli.command {
        Command::Analyze { path, rules, compare, out } => {
            analyze(path, rules.as_deref(), compare.as_deref(), out.as_deref(), fault)
        }
        Command::Extend { path, mode, params, out } => extend(path, *mode, params.as_deref(), out.as_deref(), fault),
        Command::Census { out, threads, raw } => run_census(out.as_deref(), *threads, *raw),
        Command::Classics => classics(fault),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
