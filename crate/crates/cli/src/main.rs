use clap::Parser;
use szwalk_cli::{emit, execute, Cli};

fn main() {
    // clap exits with code 2 on usage errors by itself
    let cli = Cli::parse();
    let artifact = match execute(&cli) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    };
    if let Err(e) = emit(&cli, &artifact) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
