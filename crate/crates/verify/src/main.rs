use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use torsion_maxwell::report::VerificationReport;
use torsion_maxwell::scalar::{parse_rational, Rational};
use verify::{default_registry, CliError, Context, Scenario};

/// Directory that receives one `<check>.json` file per report.
const REPORT_DIR_ENV: &str = "VERIFY_REPORT_DIR";

#[derive(Parser)]
#[command(name = "verify", version, about = "Exact verification suites for the torsion Maxwell/Dirac model")]
struct Cli {
    /// Also write each report to this directory (overrides VERIFY_REPORT_DIR).
    #[arg(long, global = true)]
    report_dir: Option<PathBuf>,
    #[arg(long, global = true, hide = true)]
    inject_fault: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Algebra, field and connection identities on seeded random inputs.
    Identities {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Maxwell/Dirac equivalence for the spinor and potential of a scenario.
    Theorem1 { scenario: PathBuf },
    /// Charge sign of the scenario's photon, swept over its gauges and maps.
    Charge { scenario: PathBuf },
    /// Frequency in a constant electric potential for every sign pair.
    Dispersion {
        #[arg(long = "A0", value_name = "p/q", value_parser = parse_a0, allow_hyphen_values = true)]
        a0: Rational,
    },
    /// Every registered check on the bundled scenarios.
    All {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Registered checks.
    List,
}

fn parse_a0(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn scenario_context(path: &Path) -> Result<Context, CliError> {
    Ok(Context { scenarios: vec![Scenario::load(path)?], ..Context::default() })
}

fn run(cli: Cli) -> Result<Vec<VerificationReport>, CliError> {
    let registry = default_registry();
    let (names, mut ctx): (Vec<&str>, Context) = match cli.command {
        Command::List => {
            for check in registry.iter() {
                println!("{:<16} {}", check.name(), check.summary());
            }
            return Ok(Vec::new());
        }
        Command::Identities { seed, count } => {
            (vec!["identities", "connection"], Context { seed, count: count as usize, ..Context::default() })
        }
        Command::Theorem1 { scenario } => {
            let ctx = scenario_context(&scenario)?;
            if ctx.scenarios[0].spinor.is_none() {
                return Err(CliError::Scenario {
                    path: scenario.display().to_string(),
                    message: "theorem1 needs a \"spinor\" entry".into(),
                });
            }
            (vec!["theorem1"], ctx)
        }
        Command::Charge { scenario } => (vec!["charge"], scenario_context(&scenario)?),
        Command::Dispersion { a0 } => (vec!["dispersion"], Context { a0: vec![a0], ..Context::default() }),
        Command::All { seed, count } => {
            (registry.names().collect(), Context { seed, count: count as usize, ..Context::default() })
        }
    };
    ctx.inject_fault = cli.inject_fault;
    let reports = registry.run(&names, &ctx)?;

    let dir = cli.report_dir.or_else(|| std::env::var_os(REPORT_DIR_ENV).map(PathBuf::from));
    if let Some(dir) = dir {
        write_reports(&dir, &reports)?;
    }
    println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialise"));
    Ok(reports)
}

fn write_reports(dir: &Path, reports: &[VerificationReport]) -> Result<(), CliError> {
    let fail = |source| CliError::ReportDir { path: dir.to_path_buf(), source };
    std::fs::create_dir_all(dir).map_err(fail)?;
    for report in reports {
        let text = serde_json::to_string_pretty(report).expect("report serialises");
        std::fs::write(dir.join(format!("{}.json", report.check)), text + "\n").map_err(fail)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(reports) if reports.iter().all(VerificationReport::passed) => ExitCode::SUCCESS,
        Ok(reports) => {
            for r in reports.iter().filter(|r| !r.passed()) {
                eprintln!("{}: {:?}, {} residual(s)", r.check, r.status, r.residuals.len());
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
