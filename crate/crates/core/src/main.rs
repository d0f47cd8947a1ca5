fn main() {
    std::process::exit(dunbar_diffusion::cli::run(std::env::args_os()));
}
