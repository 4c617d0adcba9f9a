use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = liebialg_cli::run(std::env::args_os());
    if !outcome.stdout.is_empty() {
        println!("{}", outcome.stdout);
    }
    if !outcome.stderr.is_empty() {
        eprintln!("{}", outcome.stderr);
    }
    ExitCode::from(outcome.code as u8)
}
