use clap::Parser;
use qtseries::cli::{main_with, Cli};

fn main() {
    std::process::exit(main_with(Cli::parse()));
}
