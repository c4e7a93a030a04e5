use std::process::exit;

fn main() {
    match vasskit_cli::run(std::env::args_os()) {
        Ok(report) => {
            println!("{}", report.render());
            exit(report.status.exit_code());
        }
        Err(err) => err.exit(),
    }
}
