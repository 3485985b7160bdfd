use std::io::Write;

use biskit_cli::{run, Cli};
use clap::Parser;

fn main() {
    let cli = Cli::parse();
    let out = run(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}
