fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(quartic_cli::run(&argv));
}
