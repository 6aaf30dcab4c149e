use clap::Parser;
use loday_cli::cli::{self, Cli};
use loday_cli::error::CliError;
use loday_cli::report::EXIT_USAGE;
use loday_cli::suite;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too; they are not errors.
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            if matches!(err, CliError::UnknownSuite(_)) {
                eprintln!("available suites:");
                for id in suite::SUITES {
                    eprintln!("  {id:<12} {}", suite::describe(id));
                }
            }
            if matches!(err, CliError::UnknownFixture(_)) {
                eprintln!("available fixtures: {}", loday_cli::catalog::names().join(", "));
            }
            std::process::exit(EXIT_USAGE);
        }
    }
}
