//! `dihpg` — evaluate dihedral hypergeometric solutions, verify the
//! identity catalog, construct pull-back coverings, and classify
//! degenerate parameter triples.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dihedral_hpg::catalog::{self, SweepConfig};
use dihedral_hpg::dihedral::{
    classify_degenerate, classify_integer_a, hpg_at0, hpg_at1, hpg_at_inf, At1Kind,
    DegeneracyVerdict, DihedralParams, InfKind, Parity,
};
use dihedral_hpg::scalar::{dist_to_int, parse_rat, rat_to_f64, Cx, Rat};
use dihedral_hpg::transforms::{klein_covering, theta_pair, verify_theta, KleinCovering};
use dihedral_hpg::HyperValue;

#[derive(Parser)]
#[command(
    name = "dihpg",
    about = "Dihedral Gauss hypergeometric functions: elementary evaluation, identity verification, pull-back coverings",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Solution {
    /// even solution at z = 0
    At0Even,
    /// odd solution at z = 0
    At0Odd,
    /// principal solution at z = 1
    At1,
    /// secondary solution at z = 1
    At1Sec,
    /// first basis solution at z = infinity
    #[value(name = "inf-1")]
    Inf1,
    /// second basis solution at z = infinity
    #[value(name = "inf-2")]
    Inf2,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a dihedral solution at a point.
    Eval {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        /// parameter a; accepts decimals or exact "p/q"
        #[arg(long)]
        a: String,
        /// argument of the reported series (each solution family sits at
        /// its own singular point); accepts decimals or exact "p/q"
        #[arg(long)]
        z: String,
        #[arg(long, value_enum)]
        solution: Solution,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
    },
    /// Sweep identities from the catalog and report residuals.
    Verify {
        /// identity id (see `verify --list`); mutually exclusive with --all
        #[arg(long)]
        id: Option<String>,
        /// sweep the whole catalog
        #[arg(long)]
        all: bool,
        /// list the registered identities and exit
        #[arg(long)]
        list: bool,
        /// samples per identity
        #[arg(long, default_value_t = 24)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// cap for the degree range of the theta-family sweeps
        #[arg(long)]
        n_max: Option<usize>,
        /// relative tolerance override for numeric identities
        #[arg(long)]
        tol: Option<f64>,
        /// directory for report.csv and summary.json
        /// (default: $DIHPG_OUT_DIR if set)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Construct a pull-back covering for exponent differences
    /// (k+1/2, l+1/2, n/m) and print it as JSON.
    Klein {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// Print the degree-n transformation polynomial pair and verify its
    /// defining identities.
    Theta {
        #[arg(long)]
        n: Option<u32>,
        /// verify every degree up to this bound
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
    },
    /// Classify a degenerate parameter triple.
    Classify {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        /// third exponent difference m (triple form (k+1/2, l+1/2, m))
        #[arg(long)]
        m: Option<u32>,
        /// integer parameter a (the triple is then (k+1/2, l+1/2, |a+k+l|))
        #[arg(long, allow_hyphen_values = true)]
        a_int: Option<i64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Eval {
            k,
            l,
            a,
            z,
            solution,
            output,
        } => run_eval(k, l, &a, &z, solution, output),
        Command::Verify {
            id,
            all,
            list,
            samples,
            seed,
            n_max,
            tol,
            out,
            output,
        } => run_verify(id, all, list, samples, seed, n_max, tol, out, output),
        Command::Klein { k, l, n, m } => run_klein(k, l, n, m),
        Command::Theta { n, n_max, output } => run_theta(n, n_max, output),
        Command::Classify { k, l, m, a_int } => run_classify(k, l, m, a_int),
    }
}

fn parse_number(s: &str, what: &str) -> Result<f64, String> {
    if let Ok(r) = parse_rat(s) {
        return Ok(rat_to_f64(&r));
    }
    s.parse::<f64>()
        .map_err(|_| format!("cannot parse {what} from {s:?}"))
}

fn run_eval(
    k: u32,
    l: u32,
    a_str: &str,
    z_str: &str,
    solution: Solution,
    output: Output,
) -> Result<ExitCode, String> {
    let a = parse_number(a_str, "a")?;
    let z = parse_number(z_str, "z")?;
    if dist_to_int(a) < 1e-6 && dist_to_int(a) > 0.0 {
        eprintln!("note: a = {a} is within 1e-6 of an integer; cross-checks lose accuracy there");
    }
    let p = DihedralParams::real(k, l, a);
    // --z is the argument of the reported series: the solutions at 1 are
    // series in 1 − point and the basis at infinity in 1/point
    let zc = Cx::new(z, 0.0);
    let at1_point = Cx::new(1.0 - z, 0.0);
    let inf_point = Cx::new(1.0 / z, 0.0);
    let (value, method): (HyperValue, &str) = match solution {
        Solution::At0Even => (
            hpg_at0(&p, zc, Parity::Even).map_err(|e| e.to_string())?,
            "conjugate-even double-sum closed form at 0",
        ),
        Solution::At0Odd => (
            hpg_at0(&p, zc, Parity::Odd).map_err(|e| e.to_string())?,
            "conjugate-odd double-sum closed form at 0",
        ),
        Solution::At1 => (
            hpg_at1(&p, at1_point, At1Kind::Principal).map_err(|e| e.to_string())?,
            "terminating F3 closed form at 1",
        ),
        Solution::At1Sec => (
            hpg_at1(&p, at1_point, At1Kind::Secondary).map_err(|e| e.to_string())?,
            "reflected terminating F3 closed form at 1",
        ),
        Solution::Inf1 => (
            hpg_at_inf(&p, inf_point, InfKind::First).map_err(|e| e.to_string())?,
            "first basis solution at infinity",
        ),
        Solution::Inf2 => (
            hpg_at_inf(&p, inf_point, InfKind::Second).map_err(|e| e.to_string())?,
            "second basis solution at infinity",
        ),
    };
    match output {
        Output::Json => {
            let doc = serde_json::json!({
                "k": k, "l": l, "a": a, "z": z,
                "value": { "re": value.value.re, "im": value.value.im },
                "abs_err": value.abs_err,
                "exact": value.exact,
                "method": method,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Output::Text => {
            println!(
                "value {:.12}{}{:.12}i  (abs_err {:.2e}, {method})",
                value.value.re,
                if value.value.im < 0.0 { " - " } else { " + " },
                value.value.im.abs(),
                value.abs_err
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    id: Option<String>,
    all: bool,
    list: bool,
    samples: usize,
    seed: u64,
    n_max: Option<usize>,
    tol: Option<f64>,
    out: Option<PathBuf>,
    output: Output,
) -> Result<ExitCode, String> {
    if list {
        for d in catalog::list_identities() {
            println!("{:28} {}", d.id, d.statement);
        }
        return Ok(ExitCode::SUCCESS);
    }
    let config = SweepConfig {
        seed,
        samples: n_max.unwrap_or(samples),
        tol_override: tol,
    };
    let (reports, summaries) = if all {
        catalog::sweep_all(&config).map_err(|e| e.to_string())?
    } else {
        let id = id.ok_or("pass --id <identity> or --all (or --list)")?;
        let (r, s) = catalog::sweep(&id, &config).map_err(|e| e.to_string())?;
        (r, vec![s])
    };
    let out_dir = out.or_else(|| std::env::var_os("DIHPG_OUT_DIR").map(PathBuf::from));
    if let Some(dir) = out_dir {
        let (csv, json) =
            catalog::write_reports(&dir, seed, &reports, &summaries).map_err(|e| e.to_string())?;
        eprintln!("wrote {} and {}", csv.display(), json.display());
    }
    let failures: usize = summaries.iter().map(|s| s.failures).sum();
    match output {
        Output::Json => println!("{}", catalog::summaries_to_json(seed, &summaries)),
        Output::Text => {
            for s in &summaries {
                if s.exact {
                    println!(
                        "{}: exact, {}/{} passed",
                        s.id,
                        s.samples - s.failures,
                        s.samples
                    );
                } else {
                    println!(
                        "{}: max rel residual {:.3e} (tol {:.0e}), {}/{} passed",
                        s.id,
                        s.max_rel_residual,
                        s.tolerance,
                        s.samples - s.failures,
                        s.samples
                    );
                }
            }
        }
    }
    if failures == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{failures} samples failed");
        Ok(ExitCode::from(1))
    }
}

fn rat_pair(r: &Rat) -> serde_json::Value {
    serde_json::json!([r.numer().to_string(), r.denom().to_string()])
}

fn poly_json(p: &dihedral_hpg::poly::RatPoly) -> serde_json::Value {
    serde_json::Value::Array(p.coeffs().iter().map(rat_pair).collect())
}

fn covering_json(cov: &KleinCovering) -> serde_json::Value {
    serde_json::json!({
        "k": cov.k,
        "l": cov.l,
        "n": cov.n,
        "m": cov.m,
        "theta1": poly_json(&cov.theta1),
        "theta2": poly_json(&cov.theta2),
        "psi": poly_json(&cov.psi),
        "c": rat_pair(&cov.c_const),
        "degree": cov.degree,
    })
}

fn run_klein(k: u32, l: u32, n: u32, m: u32) -> Result<ExitCode, String> {
    let cov = klein_covering(k, l, n, m).map_err(|e| e.to_string())?;
    println!(
        "{}",
        serde_json::to_string_pretty(&covering_json(&cov)).unwrap()
    );
    Ok(ExitCode::SUCCESS)
}

fn run_theta(n: Option<u32>, n_max: Option<u32>, output: Output) -> Result<ExitCode, String> {
    match (n, n_max) {
        (Some(n), None) => {
            if n == 0 {
                return Err("n must be positive".into());
            }
            let (t1, t2) = theta_pair(n);
            let ok = verify_theta(n);
            match output {
                Output::Json => {
                    let doc = serde_json::json!({
                        "n": n,
                        "theta1": poly_json(&t1),
                        "theta2": poly_json(&t2),
                        "identities_exact": ok,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Output::Text => {
                    println!(
                        "theta1 coefficients: {:?}",
                        t1.coeffs()
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                    );
                    println!(
                        "theta2 coefficients: {:?}",
                        t2.coeffs()
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                    );
                    println!("identities: {}", if ok { "exact" } else { "FAILED" });
                }
            }
            if ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        (None, Some(limit)) => {
            for n in 1..=limit {
                if !verify_theta(n) {
                    println!("n = {n}: FAILED");
                    return Ok(ExitCode::from(1));
                }
            }
            println!("exact, {limit}/{limit}");
            Ok(ExitCode::SUCCESS)
        }
        _ => Err("pass exactly one of --n or --n-max".into()),
    }
}

fn run_classify(k: u32, l: u32, m: Option<u32>, a_int: Option<i64>) -> Result<ExitCode, String> {
    let (verdict, condition) = match (m, a_int) {
        (Some(m), None) => {
            let v = classify_degenerate(k, l, m);
            let cond = if (m + k + l).is_multiple_of(2) {
                format!(
                    "m + k + l even: logarithmic iff m <= k + l ({} <= {})",
                    m,
                    k + l
                )
            } else {
                format!(
                    "m + k + l odd: logarithmic iff m < |k - l| ({} < {})",
                    m,
                    k.abs_diff(l)
                )
            };
            (v, cond)
        }
        (None, Some(a)) => {
            if a > 0 {
                return Err("the integer parameter form expects a <= 0 (pass a = -m)".into());
            }
            let m = (-a) as u32;
            let v = classify_integer_a(k, l, m);
            let (kn, ln) = if k <= l { (k, l) } else { (l, k) };
            let cond = if m.is_multiple_of(2) {
                format!(
                    "even m: logarithmic iff m/2 <= k + l ({} <= {})",
                    m / 2,
                    kn + ln
                )
            } else {
                format!(
                    "odd m: logarithmic iff min(k,l) < (m+1)/2 <= max(k,l) ({} < {} <= {})",
                    kn,
                    m.div_ceil(2),
                    ln
                )
            };
            (v, cond)
        }
        _ => return Err("pass exactly one of --m or --a-int".into()),
    };
    let name = match verdict {
        DegeneracyVerdict::Logarithmic => "Logarithmic",
        DegeneracyVerdict::CyclicOrder2 => "CyclicOrder2",
        DegeneracyVerdict::NonDegenerate => "NonDegenerate",
    };
    println!("{name} ({condition})");
    Ok(ExitCode::SUCCESS)
}
