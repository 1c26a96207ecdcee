use std::io::Write;

fn emit(mut sink: impl Write, text: &str) {
    let newline = if text.ends_with('\n') { "" } else { "\n" };
    // A closed pipe (e.g. `pha search4 | head`) is not an error worth
    // reporting; any other write failure gets the default panic.
    match write!(sink, "{text}{newline}") {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        r => r.expect("write to standard stream"),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let out = pha::cli::run(&refs);
    if !out.stdout.is_empty() {
        emit(std::io::stdout(), &out.stdout);
    }
    if !out.stderr.is_empty() {
        emit(std::io::stderr(), &out.stderr);
    }
    std::process::exit(out.code);
}
