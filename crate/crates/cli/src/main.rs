use clap::Parser;
use expdisk::args::Cli;
use expdisk::{commands, exit};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(commands::run(cli));
}
