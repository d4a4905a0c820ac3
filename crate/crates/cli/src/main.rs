use std::io::Write;

fn main() {
    let env_budget = std::env::var(vtcodes_cli::BUDGET_ENV).ok();
    let out = vtcodes_cli::run_args(std::env::args_os(), env_budget.as_deref());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.status);
}
