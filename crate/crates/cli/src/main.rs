use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = std::io::stdout();
    let err = std::io::stderr();
    let code = cli::run(std::env::args_os(), &mut out.lock(), &mut err.lock());
    let _ = std::io::stdout().flush();
    ExitCode::from(code)
}
