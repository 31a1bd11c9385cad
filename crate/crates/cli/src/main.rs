use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mckay_cli::{cmd_check, cmd_fan, cmd_quiver, cmd_rep, FanRequest, Format, RepRequest};
use mckay_core::moduli::{Pipeline, TightSetPolicy};

/// Toric fans and distinguished representations for McKay quiver moduli.
#[derive(Parser)]
#[command(name = "mckay", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Args)]
struct ThetaArgs {
    /// Group as `1/r(a1,...,an)` or `r1xr2:a11,...;a21,...`.
    #[arg(long)]
    group: String,
    /// Comma-separated entries, integers or p/q, summing to zero.
    #[arg(
        long,
        allow_hyphen_values = true,
        required_unless_present = "ghilb",
        conflicts_with = "ghilb"
    )]
    theta: Option<String>,
    /// Use the G-Hilbert parameter (1-r, 1, ..., 1).
    #[arg(long)]
    ghilb: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Vertices, arrows and the matrices B, C, D.
    Quiver {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// P_theta and the fan of Y_theta.
    Fan {
        #[command(flatten)]
        theta: ThetaArgs,
        /// Attach chart data checked up to this 1-norm.
        #[arg(long, value_name = "BOUND")]
        charts: Option<u32>,
        /// Write a cross-section of the fan (3-dimensional actions only).
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Enumerate the lifted polyhedron instead of using LP queries.
        #[arg(long, conflicts_with = "oracle")]
        lifted: bool,
        /// Build P_theta from LP support queries (the default).
        #[arg(long)]
        oracle: bool,
    },
    /// The distinguished representation b for a weight w.
    Rep {
        #[command(flatten)]
        theta: ThetaArgs,
        #[arg(short = 'w', long = "w", allow_hyphen_values = true)]
        w: String,
        /// Read b off the returned optimizer rather than the whole optimal face.
        #[arg(long)]
        single_optimizer: bool,
    },
    /// Bounded lattice, path and relation checks.
    Check {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 4)]
        bound: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Quiver { group, format } => {
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Text => Format::Text,
            };
            cmd_quiver(group, format)
        }
        Command::Fan {
            theta,
            charts,
            svg,
            lifted,
            oracle: _,
        } => cmd_fan(&FanRequest {
            group: &theta.group,
            theta: theta.theta.as_deref(),
            ghilb: theta.ghilb,
            charts: *charts,
            svg: svg.as_deref(),
            pipeline: if *lifted {
                Pipeline::Lifted
            } else {
                Pipeline::Oracle
            },
        }),
        Command::Rep {
            theta,
            w,
            single_optimizer,
        } => cmd_rep(&RepRequest {
            group: &theta.group,
            theta: theta.theta.as_deref(),
            ghilb: theta.ghilb,
            w,
            policy: if *single_optimizer {
                TightSetPolicy::SingleOptimizer
            } else {
                TightSetPolicy::WholeFace
            },
        }),
        Command::Check { group, bound } => cmd_check(group, *bound),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
