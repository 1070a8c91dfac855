use std::process::ExitCode;

fn main() -> ExitCode {
    ribbon_cli::main_with(std::env::args_os())
}
