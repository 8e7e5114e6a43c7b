use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = jahangir_cli::main_with(std::env::args_os().skip(1), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}
