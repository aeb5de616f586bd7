use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, report) = frobform_cli::run(std::env::args_os());
    print!("{report}");
    ExitCode::from(code as u8)
}
