fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("KPZ_LOG", "warn")).init();
    std::process::exit(kpz_cli::run(std::env::args_os()));
}
