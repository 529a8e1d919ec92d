fn main() {
    std::process::exit(sigma_dyck::cli::run(std::env::args_os()));
}
