fn main() {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = hankel_zeta::cli::run_cli(std::env::args(), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
