use clap::Parser;

use vreg_cli::{error_code, exit, run, write_output, Cli};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT_ERROR } else { exit::PASS };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match run(&cli).and_then(|o| write_output(&cli.opts, &o.text).map(|()| o.code)) {
        Ok(code) => code,
        Err(e) => {
            log::error!("{e:#}");
            eprintln!("error: {e:#}");
            error_code(&e)
        }
    };
    std::process::exit(code);
}
