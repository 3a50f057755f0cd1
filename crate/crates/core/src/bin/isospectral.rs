use std::io::{stderr, stdout, BufWriter, Write};

fn main() {
    let stdout = stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = isospectral::cli::run_from(std::env::args_os(), &mut out, &mut stderr());
    let _ = out.flush();
    drop(out);
    std::process::exit(code);
}
