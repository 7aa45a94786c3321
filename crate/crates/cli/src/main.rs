use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use idpt_cli::{run, Cli, SCAN_CAP_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let scan_cap = std::env::var(SCAN_CAP_ENV).ok();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = match run(cli, scan_cap.as_deref(), &mut out, &mut err) {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "idpt: {e}");
            2
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
