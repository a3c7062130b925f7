fn main() {
    let require_seed = std::env::var_os("CI").is_some_and(|v| !v.is_empty());
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = regword::cli::run(
        std::env::args_os(),
        require_seed,
        &mut stdout.lock(),
        &mut stderr.lock(),
    );
    std::process::exit(code);
}
