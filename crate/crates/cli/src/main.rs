use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};
use wittenpoly_cli::{run, Basis, Format, KindSel, Mode, Request};

/// Exact special values at s = -ℓ of Witten-type zeta functions.
#[derive(Parser, Debug)]
#[command(name = "wittenpoly", version, group(ArgGroup::new("mode").required(true).args(["algebra", "matrix"])))]
struct Args {
    /// Root system label such as A2, G2, sl4, so7, sp6 or A1xA2.
    #[arg(long)]
    algebra: Option<String>,
    /// Matrix file {"N":..,"n":..,"entries":[["p/q",..],..]}.
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    ell: u32,
    #[arg(long, value_enum, ignore_case = true, default_value = "both")]
    kind: KindSel,
    #[arg(long, value_enum, default_value = "monomial")]
    basis: Basis,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Append the identity checks; exit nonzero if any fails.
    #[arg(long)]
    checks: bool,
    /// Number of leading columns fixed by each injection.
    #[arg(long)]
    z: Option<usize>,
    #[arg(long, env = "WITTENPOLY_THREADS")]
    threads: Option<usize>,
    /// Run requests above the injection-count limit.
    #[arg(long)]
    force: bool,
    /// Matrix mode: keep w1..wn symbolic instead of substituting W(x).
    #[arg(long)]
    symbolic_w: bool,
    /// Write the document here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mode = match (args.algebra, args.matrix) {
        (Some(algebra), None) => Mode::Lie { algebra },
        (None, Some(matrix_path)) => Mode::Generic { matrix_path },
        _ => unreachable!("clap enforces exactly one mode"),
    };
    let req = Request {
        mode,
        ell: args.ell,
        kind: args.kind,
        basis: args.basis,
        format: args.format,
        checks: args.checks,
        z_override: args.z,
        threads: args.threads,
        force: args.force,
        symbolic_w: args.symbolic_w,
    };
    let outcome = match run(&req) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.document) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.document),
    }
    if outcome.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
