use clap::Parser;

use monocurve::cli::{run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    let code = run(&config, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
