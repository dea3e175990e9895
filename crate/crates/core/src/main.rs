use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use picard0n::cli::{
    cmd_basis, cmd_decompose, cmd_dim, cmd_enumerate, cmd_expand, cmd_export_matrix, cmd_verify,
    parse_labels, Format, RunConfig, VerifyMode,
};
use picard0n::error::Error;

/// Boundary divisors of the moduli space of stable genus-zero n-pointed
/// curves: enumeration, non-adjacent bases, expansions, and verification.
#[derive(Parser)]
#[command(name = "picard0n", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum FormatArg {
    #[default]
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Oracle,
    Relations,
    Rank,
    All,
}

impl From<ModeArg> for VerifyMode {
    fn from(m: ModeArg) -> VerifyMode {
        match m {
            ModeArg::Oracle => VerifyMode::Oracle,
            ModeArg::Relations => VerifyMode::Relations,
            ModeArg::Rank => VerifyMode::Rank,
            ModeArg::All => VerifyMode::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the divisor count and basis dimension for n marked points.
    Dim {
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// List every boundary divisor in canonical order.
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Show the block/gap decomposition of a divisor.
    Decompose {
        n: usize,
        /// Comma-separated labels of one side, e.g. 1,2,4
        subset: String,
        /// Cyclic order as comma-separated labels (default 1,...,n)
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// List the non-adjacent basis for a cyclic order.
    Basis {
        n: usize,
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Expand a divisor in the non-adjacent basis.
    Expand {
        n: usize,
        /// Comma-separated labels of one side, e.g. 1,2,3
        subset: String,
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Run verification sweeps; exits 1 on any failed check.
    Verify {
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
    /// Write the Keel relation matrix in coordinate text format.
    ExportMatrix {
        n: usize,
        /// Output path (alternatively --out)
        path: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
    },
}

fn run() -> Result<bool, Error> {
    let cli = Cli::parse();
    let mut config = RunConfig::default();
    let output = match cli.command {
        Command::Dim { n, format } => {
            config.format = format.into();
            cmd_dim(n, &config)?
        }
        Command::Enumerate { n, format } => {
            config.format = format.into();
            cmd_enumerate(n, &config)?
        }
        Command::Decompose {
            n,
            subset,
            order,
            format,
        } => {
            config.format = format.into();
            config.order = order.as_deref().map(parse_labels).transpose()?;
            cmd_decompose(n, &parse_labels(&subset)?, &config)?
        }
        Command::Basis { n, order, format } => {
            config.format = format.into();
            config.order = order.as_deref().map(parse_labels).transpose()?;
            cmd_basis(n, &config)?
        }
        Command::Expand {
            n,
            subset,
            order,
            format,
        } => {
            config.format = format.into();
            config.order = order.as_deref().map(parse_labels).transpose()?;
            cmd_expand(n, &parse_labels(&subset)?, &config)?
        }
        Command::Verify {
            n,
            mode,
            seed,
            format,
        } => {
            config.format = format.into();
            config.seed = seed;
            let (report, pass) = cmd_verify(n, mode.into(), &config)?;
            println!("{report}");
            return Ok(pass);
        }
        Command::ExportMatrix {
            n,
            path,
            out,
            format,
        } => {
            config.format = format.into();
            let target = match (path, out) {
                (Some(p), None) | (None, Some(p)) => p,
                (Some(_), Some(_)) => {
                    return Err(Error::Io {
                        message: "give either a positional path or --out, not both".into(),
                    })
                }
                (None, None) => {
                    return Err(Error::Io {
                        message: "missing output path (positional or --out)".into(),
                    })
                }
            };
            cmd_export_matrix(n, &target, &config)?
        }
    };
    println!("{output}");
    Ok(true)
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
