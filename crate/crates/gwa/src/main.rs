use clap::{Parser, Subcommand, ValueEnum};
use gwa::scenario::{self, Overrides, Report};

#[derive(Parser)]
#[command(name = "gwa", version, about = "Scenario runner for the gwa library")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and report per-check results.
    Run {
        /// Path to the scenario file (JSON).
        file: String,
        /// Run only the named checks (repeatable); `tableaux` selects the
        /// tableaux block.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Seed for the randomized property checks.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the tableaux window radius.
        #[arg(long)]
        radius: Option<u32>,
        /// Override the lattice search bound.
        #[arg(long)]
        bound: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Exit with status 3 when any check is inconclusive.
        #[arg(long)]
        escalate_inconclusive: bool,
    },
    /// Print the algebra catalog, named automorphisms, groups and checks.
    ListCatalog,
    /// Run every bundled scenario.
    VerifyAll {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        bound: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        escalate_inconclusive: bool,
    },
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run {
            file,
            checks,
            seed,
            radius,
            bound,
            format,
            escalate_inconclusive,
        } => {
            let overrides = Overrides {
                checks,
                seed,
                radius,
                bound,
            };
            match scenario::run_file(&file, &overrides) {
                Ok(report) => {
                    emit(&report, format);
                    report.exit_code(escalate_inconclusive)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        Command::ListCatalog => {
            print!("{}", scenario::list_catalog());
            0
        }
        Command::VerifyAll {
            seed,
            bound,
            format,
            escalate_inconclusive,
        } => {
            let overrides = Overrides {
                checks: Vec::new(),
                seed,
                radius: None,
                bound,
            };
            match scenario::verify_all(&overrides) {
                Ok(reports) => {
                    let mut worst = 0;
                    for report in &reports {
                        emit(report, format);
                        if matches!(format, Format::Text) {
                            println!();
                        }
                        worst = worst.max(report.exit_code(escalate_inconclusive));
                    }
                    worst
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
    };
    std::process::exit(code);
}
