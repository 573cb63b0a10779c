use std::io::Write;

fn main() {
    let (out, code) = ldp::cli::run(std::env::args_os());
    // a closed pipe is not worth a panic
    let _ = if code == 2 {
        writeln!(std::io::stderr(), "{out}")
    } else {
        writeln!(std::io::stdout(), "{out}")
    };
    std::process::exit(code);
}
