use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kernreg::cli::{run, AppKind, Bandwidth, Command, RunConfig};
use kernreg::estimators::Method;

#[derive(Parser)]
#[command(name = "kreg", version, about = "Monotone kernel regression toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an estimator on a grid (CSV: x,value,defined)
    Fit(Common),
    /// Leave-one-out cross-validation profile and minimizer
    Cv(Common),
    /// Monotonicity, log-concavity and shift-preservation reports (JSON)
    Check {
        #[command(flatten)]
        common: Common,
        /// Check an existing curve CSV instead of fitting one
        #[arg(long)]
        curve: Option<PathBuf>,
        /// Also run a seeded fuzz suite with this many datasets
        #[arg(long, default_value_t = 0)]
        suite: usize,
    },
    /// Isotonize-then-smooth and smooth-then-isotonize curves
    Isotonic(Common),
    /// Smooth ECDF, quantile, Q-Q or counting data
    App {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse::<AppKind>)]
        app: AppKind,
        /// Second sample for --app qq
        #[arg(long)]
        input_y: Option<String>,
    },
}

#[derive(Args)]
struct Common {
    /// CSV path or fixture:paper
    #[arg(long, default_value = "fixture:paper")]
    input: String,
    #[arg(long, default_value = "gm", value_parser = parse::<Method>)]
    method: Method,
    /// gaussian | rectangular | bump | exp_power:p=<v> | gauss_mix:mu1=<v>,mu2=<v>,w=<v>
    #[arg(long, default_value = "gaussian")]
    kernel: String,
    /// Positive number or "cv"
    #[arg(long, default_value = "cv", value_parser = parse::<Bandwidth>)]
    bandwidth: Bandwidth,
    #[arg(long, default_value_t = 401)]
    grid_points: usize,
    /// Priestley-Chao x0 (default: first x minus the bandwidth)
    #[arg(long, allow_hyphen_values = true)]
    pc_x0: Option<f64>,
    /// Add this constant to every response
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    shift: f64,
    /// Shift used by the shift-preservation check
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    shift_c: f64,
    #[arg(long)]
    h_lo: Option<f64>,
    #[arg(long)]
    h_hi: Option<f64>,
    #[arg(long, default_value_t = 64)]
    cv_points: usize,
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = kernreg::properties::DEFAULT_SEED)]
    seed: u64,
    /// Quadrature tolerance for kernel CDFs
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Tolerance of the monotonicity check
    #[arg(long, default_value_t = 1e-9)]
    monotone_tol: f64,
}

fn parse<T: std::str::FromStr<Err = kernreg::Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: kernreg::Error| e.to_string())
}

fn config(command: Command, c: Common) -> Result<RunConfig, kernreg::Error> {
    let h_range = match (c.h_lo, c.h_hi) {
        (Some(lo), Some(hi)) => Some((lo, hi)),
        (None, None) => None,
        _ => return Err(kernreg::Error::InvalidParameter("--h-lo and --h-hi go together".into())),
    };
    let mut cfg = RunConfig::new(command, c.input);
    cfg.method = c.method;
    cfg.kernel = c.kernel;
    cfg.bandwidth = c.bandwidth;
    cfg.grid_points = c.grid_points;
    cfg.pc_x0 = c.pc_x0;
    cfg.shift = c.shift;
    cfg.shift_c = c.shift_c;
    cfg.h_range = h_range;
    cfg.cv_points = c.cv_points;
    cfg.output = c.output;
    cfg.seed = c.seed;
    cfg.tol = c.tol;
    cfg.monotone_tol = c.monotone_tol;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match cli.command {
        Cmd::Fit(c) => config(Command::Fit, c),
        Cmd::Cv(c) => config(Command::Cv, c),
        Cmd::Isotonic(c) => config(Command::Isotonic, c),
        Cmd::Check { common, curve, suite } => config(Command::Check, common).map(|mut cfg| {
            cfg.curve = curve;
            cfg.suite_cases = suite;
            cfg
        }),
        Cmd::App { common, app, input_y } => config(Command::App, common).map(|mut cfg| {
            cfg.app = Some(app);
            cfg.input_y = input_y;
            cfg
        }),
    };
    let result = cfg.and_then(|cfg| {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        run(&cfg, &mut lock)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.category());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
