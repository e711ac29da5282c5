use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use quartic_thue::elliptic::{curve_bound, curve_points, pell_fundamental, sqrt_cf_period, tzanakis_form};
use quartic_thue::enumerate::enumerate_range;
use quartic_thue::siegel::{bombieri_schmidt_count, phi_scan, solution_count_bound, threshold};
use quartic_thue::thue::{solve, SolverConfig};
use quartic_thue::QuarticForm;
use quartic_thue_cli::output::{Emitter, Format};
use quartic_thue_cli::table::run_table;
use quartic_thue_cli::verify::{exit_code, overall, run_suite, Suite, VerifyOptions};
use quartic_thue_cli::{record, Convention};

#[derive(Parser, Debug)]
#[command(name = "quartic-thue", version, about = "Quartic Thue inequalities with J = 0 and related bounds")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for table runs; defaults to the number of CPUs.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for the randomized verification suites.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Convention::Standard)]
    b_convention: Convention,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// I, J, discriminant, seminvariants and Hessian of a form.
    Invariants {
        #[arg(long, allow_hyphen_values = true)]
        form: QuarticForm,
    },
    /// All forms with J = 0 and i_min <= I <= i_max.
    Enumerate {
        #[arg(long, allow_hyphen_values = true)]
        i_min: i64,
        #[arg(long, allow_hyphen_values = true)]
        i_max: i64,
    },
    /// Primitive solutions of 0 < |F(x, y)| <= h.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        form: QuarticForm,
        #[arg(long, default_value = "1", value_parser = big)]
        h: BigInt,
        #[arg(long, value_parser = big)]
        qmax: Option<BigInt>,
    },
    /// Histogram of (#F=1, #F=-1) over all enumerated forms.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        i_min: i64,
        #[arg(long, allow_hyphen_values = true)]
        i_max: i64,
        #[arg(long, default_value_t = 1)]
        h: u64,
        /// Per-form results as JSON lines.
        #[arg(long)]
        results: Option<PathBuf>,
        /// Skip forms whose coefficients have a common factor.
        #[arg(long)]
        primitive: bool,
    },
    /// Largest I for which the 2k solution bound applies.
    Threshold {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1)]
        h: u64,
    },
    /// Nonnegativity of the Phi comparison expressions over a grid.
    PhiScan {
        #[arg(long, default_value_t = 3)]
        kmin: u32,
        #[arg(long, default_value_t = 25)]
        kmax: u32,
        #[arg(long, default_value_t = 2)]
        nmin: u32,
        #[arg(long, default_value_t = 25)]
        nmax: u32,
    },
    /// Solution-count bound for a form with J = 0 and invariant I.
    Bound {
        #[arg(long, allow_hyphen_values = true, value_parser = big)]
        i: BigInt,
        #[arg(long, default_value_t = 1)]
        h: u64,
        #[arg(long, default_value_t = 40)]
        kmax: u32,
    },
    /// Fundamental unit of Z[sqrt(d)].
    Pell {
        #[arg(long)]
        d: u64,
    },
    /// Bound on the number of integral points on Y^2 = X^3 + N X, N squarefree.
    CurveBound {
        #[arg(long)]
        n: u64,
    },
    /// Integral points with 0 <= X <= xmax on Y^2 = X^3 + N X, Y >= 0.
    CurvePoints {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 100_000)]
        xmax: u64,
    },
    /// The quartic form attached to s^2 - d t^2 = k.
    Tzanakis {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
    },
    /// Run a verification suite; exit 0 on pass, 1 on failure, 2 if vacuous.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Random forms for the invariants suite.
        #[arg(long, default_value_t = 10_000)]
        forms: usize,
        #[arg(long, allow_hyphen_values = true, default_value_t = -3000)]
        i_min: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = -3)]
        i_max: i64,
    },
}

fn big(s: &str) -> Result<BigInt, String> {
    s.parse().map_err(|_| format!("{s:?} is not an integer"))
}

fn run(cli: Cli) -> Result<u8> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    let stdout = io::stdout().lock();
    let mut out = Emitter::new(cli.format, BufWriter::new(stdout));
    let convention = cli.b_convention.into();
    let mut code = 0;
    match cli.command {
        Command::Invariants { form } => out.emit(&record::invariants(&form))?,
        Command::Enumerate { i_min, i_max } => {
            for (i, f) in enumerate_range(i_min, i_max, convention)? {
                out.emit(&record::enumerated(i, &f))?;
            }
        }
        Command::Solve { form, h, qmax } => {
            let mut cfg = SolverConfig::new(h.clone());
            if let Some(q) = qmax {
                cfg = cfg.with_q_max(q);
            }
            let s = solve(&form, &cfg)?;
            out.emit(&record::solve(&form, &h, &s))?;
        }
        Command::Table { i_min, i_max, h, results, primitive } => {
            let t = run_table(i_min, i_max, h, convention, primitive)?;
            if let Some(path) = results {
                let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                let mut w = BufWriter::new(file);
                for o in &t.outcomes {
                    serde_json::to_writer(&mut w, &o.to_json())?;
                    w.write_all(b"\n")?;
                }
                w.flush()?;
            }
            for row in t.rows() {
                out.emit(&row.to_json())?;
            }
            eprintln!("{} forms, {} solver failures", t.outcomes.len(), t.failures());
        }
        Command::Threshold { k, h } => out.emit(&record::threshold(&threshold(k, h)?))?,
        Command::PhiScan { kmin, kmax, nmin, nmax } => {
            let r = phi_scan((kmin, kmax), (nmin, nmax))?;
            out.emit(&record::phi_scan((kmin, kmax), (nmin, nmax), &r))?;
            if !r.passed() {
                code = 1;
            }
        }
        Command::Bound { i, h, kmax } => {
            let b = solution_count_bound(&i, h, kmax)?;
            out.emit(&record::bound(&i, h, kmax, b, bombieri_schmidt_count(h)?))?;
        }
        Command::Pell { d } => {
            let u = pell_fundamental(d)?;
            out.emit(&record::pell(&u, &sqrt_cf_period(d)?))?;
        }
        Command::CurveBound { n } => out.emit(&record::curve_bound(n, curve_bound(n)?))?,
        Command::CurvePoints { n, xmax } => {
            let pts = curve_points(n, xmax)?;
            out.emit(&record::curve_points(n, xmax, &pts, curve_bound(n)?))?;
        }
        Command::Tzanakis { d, k, s, t } => out.emit(&record::tzanakis(&tzanakis_form(d, k, s, t)?))?,
        Command::Verify { suite, forms, i_min, i_max } => {
            let opts = VerifyOptions { seed: cli.seed, forms, i_min, i_max, convention };
            let checks = run_suite(suite, &opts)?;
            for c in &checks {
                out.emit(&serde_json::json!({
                    "suite": suite.name(),
                    "check": c.name,
                    "status": c.status.to_string(),
                    "asserted": c.asserted,
                    "detail": c.detail,
                }))?;
            }
            code = exit_code(overall(&checks));
        }
    }
    out.finish()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
