fn main() {
    std::process::exit(lsv::run_from_args(std::env::args_os()));
}
