use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = gqtvc::cli::run(std::env::args_os());
    let mut out: Box<dyn Write> =
        if outcome.code == 3 { Box::new(std::io::stderr()) } else { Box::new(std::io::stdout()) };
    let _ = out.write_all(outcome.text.as_bytes());
    ExitCode::from(outcome.code as u8)
}
