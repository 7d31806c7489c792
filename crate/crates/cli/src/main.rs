use std::io;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mocktheta_cli::{cmd_expand, cmd_list, cmd_verify, Format};

/// Exact q-series expansions and identity checks for mock theta functions.
#[derive(Parser)]
#[command(name = "mocktheta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of a named series through q^order.
    Expand {
        name: String,
        #[arg(long, default_value_t = 100)]
        order: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 2)]
        lattice_denom: u32,
    },
    /// Run one named identity check, or all of them.
    Verify {
        name: String,
        #[arg(long, default_value_t = 100)]
        order: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the identity checks accepted by `verify`.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// List the series accepted by `expand` instead.
        #[arg(long)]
        series: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    let code = match cli.command {
        Command::Expand { name, order, format, lattice_denom } => {
            cmd_expand(&name, order, format, lattice_denom, &mut out, &mut err)
        }
        Command::Verify { name, order, format } => cmd_verify(&name, order, format, &mut out, &mut err),
        Command::List { format, series } => cmd_list(format, series, &mut out),
    };
    ExitCode::from(code as u8)
}
