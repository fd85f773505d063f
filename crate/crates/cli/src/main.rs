use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let (code, out) = tropkit_cli::execute(std::env::args_os(), &mut std::io::stdin().lock());
    let _ = std::io::stdout().write_all(out.as_bytes());
    ExitCode::from(code as u8)
}
