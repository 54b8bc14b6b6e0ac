use clap::Parser;
use crossext::cli::{run, Cli, RunSpec};

fn main() {
    let cli = Cli::parse();
    let out = cli.options.out.clone();
    let spec = RunSpec::from_cli(cli);
    let outcome = run(&spec);
    let text = outcome.render(spec.format);
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("cannot write {}: {e}", path.display());
                std::process::exit(2);
            }
        }
        None => print!("{text}"),
    }
    std::process::exit(outcome.exit_code);
}
