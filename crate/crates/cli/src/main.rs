fn main() {
    std::process::exit(infbh_cli::run(std::env::args_os()));
}
