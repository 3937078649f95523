use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use mspectra_cli::args::Cli;
use mspectra_cli::commands;
use mspectra_cli::error::CliError;

fn fail(e: &CliError) -> ExitCode {
    let line = serde_json::to_string(&e.record()).expect("plain data");
    eprintln!("{line}");
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&CliError::Usage(e.render().to_string().trim_end().to_string())),
    };
    let artifact = match commands::run(&cli) {
        Ok(a) => a,
        Err(e) => return fail(&e),
    };
    let written = match commands::destination(&cli, artifact.ext) {
        Some(path) => commands::write_file(&path, &artifact.bytes),
        None => std::io::stdout()
            .write_all(&artifact.bytes)
            .map_err(|e| CliError::io(std::path::Path::new("<stdout>"), e)),
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}
