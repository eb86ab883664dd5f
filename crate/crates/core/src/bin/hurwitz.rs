fn main() {
    let code = hurwitzian::cli::main_with_args(std::env::args_os());
    std::process::exit(code);
}
