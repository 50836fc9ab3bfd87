use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use zeta_atlas::cli::{parse_real, Config};
use zeta_atlas::registry::{
    adhoc_functions, build_registry, eval_adhoc, render_report, run_checks, select, AdhocError, ReportFormat,
    RunOptions,
};
use zeta_atlas::specfun::constants;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "zeta-atlas", version, about = "Numerical checks of zeta, Lerch, Clausen and central-binomial identities")]
struct Cli {
    /// `key = value` defaults for tol_scale, budget_scale and format (else $ZETA_ATLAS_CONFIG)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List registered identities
    List {
        /// Glob over ids, e.g. 'eq-2.7*'
        #[arg(long, default_value = "")]
        filter: String,
    },
    /// Evaluate identities and print a report; exits 1 on any fail or error
    Check {
        #[arg(long, default_value = "")]
        filter: String,
        /// Multiplies every tolerance
        #[arg(long)]
        tol_scale: Option<f64>,
        /// Multiplies truncation budgets of long sums and products
        #[arg(long)]
        budget_scale: Option<f64>,
        /// json, csv or markdown
        #[arg(long)]
        format: Option<ReportFormat>,
        /// Write the report here instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Record wall-clock time per outcome (makes json non-reproducible)
        #[arg(long)]
        timings: bool,
    },
    /// Evaluate one function, e.g. `eval clausen 2 pi/2`
    Eval {
        /// Function name; see --list
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        /// Real arguments: decimals, pi, e, products and quotients such as 2*pi/3
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
        #[arg(long)]
        list: bool,
    },
    /// Print the named constants
    Constants,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("zeta-atlas: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn run_list(filter: &str) -> ExitCode {
    let records = build_registry();
    let chosen = match select(&records, filter) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let mut out = io::stdout().lock();
    for r in chosen {
        let _ = writeln!(
            out,
            "{}\t{}\t{} sample(s)\ttol {:e}\t{}",
            r.id,
            r.expected.as_str(),
            r.samples.len(),
            r.tolerance,
            r.description
        );
    }
    ExitCode::SUCCESS
}

fn run_check(opts: RunOptions, format: ReportFormat, out: Option<PathBuf>) -> ExitCode {
    let records = build_registry();
    let report = match run_checks(&records, &opts) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let written = match &out {
        Some(path) => match File::create(path) {
            Ok(f) => {
                let mut w = BufWriter::new(f);
                render_report(&report, format, &mut w).and_then(|_| w.flush().map_err(Into::into))
            }
            Err(e) => Err(e.into()),
        },
        None => {
            let mut w = BufWriter::new(io::stdout().lock());
            render_report(&report, format, &mut w).and_then(|_| w.flush().map_err(Into::into))
        }
    };
    if let Err(e) = written {
        eprintln!("zeta-atlas: {e}");
        return ExitCode::from(EXIT_FAILED);
    }
    let s = &report.summary;
    eprintln!(
        "{} outcome(s): {} pass, {} misprint_confirmed, {} fail, {} error",
        s.total(),
        s.pass,
        s.misprint_confirmed,
        s.fail,
        s.error
    );
    if s.is_success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}

fn run_eval(name: Option<String>, args: &[String], list: bool) -> ExitCode {
    if list {
        for f in adhoc_functions() {
            println!("{}({})\t{}", f.name, f.args.join(", "), f.summary);
        }
        return ExitCode::SUCCESS;
    }
    let Some(name) = name else { return usage("eval needs a function name") };
    let mut values = Vec::with_capacity(args.len());
    for a in args {
        match parse_real(a) {
            Ok(v) => values.push(v),
            Err(e) => return usage(e),
        }
    }
    match eval_adhoc(&name, &values) {
        Ok(v) => {
            println!("{v:.17e}");
            ExitCode::SUCCESS
        }
        Err(e @ (AdhocError::UnknownFunction(_) | AdhocError::Arity { .. } | AdhocError::NotAnInteger { .. })) => {
            usage(e)
        }
        Err(e) => {
            eprintln!("zeta-atlas: {e}");
            ExitCode::from(EXIT_FAILED)
        }
    }
}

fn run_constants() -> ExitCode {
    for c in constants().entries() {
        println!("{:<18} {:.17e}  {}", c.name, c.value, c.provenance.as_str());
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match Config::resolve(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => return usage(format!("config: {e}")),
    };
    match cli.command {
        Command::List { filter } => run_list(&filter),
        Command::Check { filter, tol_scale, budget_scale, format, out, timings } => {
            let opts = RunOptions {
                filter,
                tol_scale: tol_scale.or(config.tol_scale).unwrap_or(1.0),
                budget_scale: budget_scale.or(config.budget_scale).unwrap_or(1.0),
                timings,
            };
            run_check(opts, format.or(config.format).unwrap_or(ReportFormat::Json), out)
        }
        Command::Eval { name, args, list } => run_eval(name, &args, list),
        Command::Constants => run_constants(),
    }
}
