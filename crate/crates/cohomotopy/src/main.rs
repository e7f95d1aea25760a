use std::io;

use cohomotopy::cli::{run, Io};

fn main() {
    let code = run(
        std::env::args_os(),
        &mut Io {
            stdin: &mut io::stdin().lock(),
            stdout: &mut io::stdout().lock(),
            stderr: &mut io::stderr().lock(),
        },
    );
    std::process::exit(code);
}
