//! Command-line front end. Parsing errors exit with clap's usage code (2);
//! every computational error exits with a single-line diagnostic and a
//! code identifying its class.

mod commands;
mod output;

use clap::Parser;

fn main() {
    let cli = commands::Cli::parse();
    if let Err(e) = commands::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
