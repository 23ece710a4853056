use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nekbounds::commands::{EXIT_OK, EXIT_USAGE};
use nekbounds::{cmd_bounds, cmd_classify, cmd_sweep, cmd_table, OutputFormat};

/// Upper bounds on the infinity norm of the inverse of Nekrasov matrices.
#[derive(Parser)]
#[command(name = "nekbounds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a matrix as SDD, Nekrasov or neither
    Classify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Print every applicable bound
    Bounds {
        file: PathBuf,
        /// Also evaluate the scaled bounds at this mu
        #[arg(long)]
        mu: Option<f64>,
        /// Include the exact norm computed by LU factorization
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Compare bounds for several matrices side by side
    Table {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Tabulate the scaled bounds over a grid of mu
    Sweep {
        file: PathBuf,
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        mu_min: f64,
        #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
        mu_max: f64,
        #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
        step: f64,
        #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
        format: SweepFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Csv,
    Json,
}

impl From<ReportFormat> for OutputFormat {
    fn from(f: ReportFormat) -> Self {
        match f {
            ReportFormat::Text => OutputFormat::Text,
            ReportFormat::Json => OutputFormat::Json,
        }
    }
}

impl From<TableFormat> for OutputFormat {
    fn from(f: TableFormat) -> Self {
        match f {
            TableFormat::Text => OutputFormat::Text,
            TableFormat::Csv => OutputFormat::Csv,
            TableFormat::Json => OutputFormat::Json,
        }
    }
}

impl From<SweepFormat> for OutputFormat {
    fn from(f: SweepFormat) -> Self {
        match f {
            SweepFormat::Csv => OutputFormat::Csv,
            SweepFormat::Json => OutputFormat::Json,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let result = match cli.command {
        Command::Classify { file, format } => cmd_classify(&file, format.into()),
        Command::Bounds {
            file,
            mu,
            oracle,
            format,
        } => cmd_bounds(&file, mu, oracle, format.into()),
        Command::Table { files, format } => cmd_table(&files, format.into()),
        Command::Sweep {
            file,
            mu_min,
            mu_max,
            step,
            format,
        } => cmd_sweep(&file, mu_min, mu_max, step, format.into()),
    };
    match result {
        Ok(record) => {
            for w in &record.warnings {
                eprintln!("{w}");
            }
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(record.payload.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(record.exit_code)
        }
        Err(e) => {
            eprintln!("nekbounds: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
