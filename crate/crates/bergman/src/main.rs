fn main() {
    std::process::exit(bergman::cli_main());
}
