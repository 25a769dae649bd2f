use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = compsums::cli::run(std::env::args().skip(1));
    let _ = std::io::stdout().write_all(text.as_bytes());
    ExitCode::from(code as u8)
}
