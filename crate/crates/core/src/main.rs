use std::io::Write;

fn main() {
    let (mut out, mut err) = (String::new(), String::new());
    let code = jacsyz::cli::run(std::env::args_os(), &mut out, &mut err);
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    std::process::exit(code);
}
