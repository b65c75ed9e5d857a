fn main() {
    // Placeholder until the CLI module lands; replaced by `cli::run`.
    eprintln!("g2squash: command-line interface not yet wired");
    std::process::exit(2);
}
