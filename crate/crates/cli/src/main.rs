use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(ferrochi::run(std::env::args_os()))
}
