use std::io;
use std::process::ExitCode;

/// Deeply nested inputs recurse deeply in the checker and normalizer.
const STACK_BYTES: usize = 1 << 30;

fn main() -> ExitCode {
    let code = std::thread::Builder::new()
        .stack_size(STACK_BYTES)
        .spawn(|| cdle::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr()))
        .expect("spawn main thread")
        .join()
        .unwrap_or(cdle::cli::EXIT_USAGE);
    ExitCode::from(code as u8)
}
